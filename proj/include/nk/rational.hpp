#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <string>

namespace nk {

// Exact arithmetic base field: arbitrary-precision rationals (GMP-backed).
using Rat = boost::multiprecision::mpq_rational;
using Int = boost::multiprecision::mpz_int;

inline bool is_zero(const Rat& x) { return x.is_zero(); }
inline bool is_one(const Rat& x) { return x == 1; }

inline std::string to_string(const Rat& x) { return x.str(); }

template <class K>
struct FieldName {
  static constexpr const char* value = "?";
};
template <>
struct FieldName<Rat> {
  static constexpr const char* value = "Q";
};

}  // namespace nk
