#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include "nk/rational.hpp"
#include "nk/upoly.hpp"

namespace nk {

// The field Q(u) of rational functions in one transcendental, stored as a
// reduced fraction num/den with den monic and gcd(num, den) = 1.
struct RatFun {
  UPoly<Rat> num, den;

  RatFun() : den(UPoly<Rat>::one()) {}
  RatFun(long long n) : num(Rat(n)), den(UPoly<Rat>::one()) {}  // NOLINT: implicit by design
  RatFun(int n) : num(Rat(n)), den(UPoly<Rat>::one()) {}        // NOLINT
  explicit RatFun(Rat r) : num(std::move(r)), den(UPoly<Rat>::one()) {}
  RatFun(UPoly<Rat> n, UPoly<Rat> d) : num(std::move(n)), den(std::move(d)) { normalize(); }

  static RatFun u() { return RatFun(UPoly<Rat>::var(), UPoly<Rat>::one()); }
  static RatFun from_poly(UPoly<Rat> p) { return RatFun(std::move(p), UPoly<Rat>::one()); }

  void normalize() {
    if (den.is_zero_poly()) throw std::invalid_argument("RatFun with zero denominator");
    if (num.is_zero_poly()) {
      den = UPoly<Rat>::one();
      return;
    }
    UPoly<Rat> g = UPoly<Rat>::gcd(num, den);
    if (g.deg() > 0) {
      UPoly<Rat> q, r;
      UPoly<Rat>::divmod(num, g, q, r);
      num = q;
      UPoly<Rat>::divmod(den, g, q, r);
      den = q;
    }
    Rat inv = Rat(1) / den.lc();
    num = inv * num;
    den = inv * den;
  }

  bool is_zero_fun() const { return num.is_zero_poly(); }

  friend RatFun operator+(const RatFun& a, const RatFun& b) {
    return RatFun(a.num * b.den + b.num * a.den, a.den * b.den);
  }
  friend RatFun operator-(const RatFun& a, const RatFun& b) {
    return RatFun(a.num * b.den - b.num * a.den, a.den * b.den);
  }
  friend RatFun operator*(const RatFun& a, const RatFun& b) {
    return RatFun(a.num * b.num, a.den * b.den);
  }
  friend RatFun operator/(const RatFun& a, const RatFun& b) {
    if (b.is_zero_fun()) throw std::invalid_argument("RatFun division by zero");
    return RatFun(a.num * b.den, a.den * b.num);
  }
  RatFun operator-() const {
    RatFun r = *this;
    r.num = -r.num;
    return r;
  }
  RatFun& operator+=(const RatFun& b) { return *this = *this + b; }
  RatFun& operator-=(const RatFun& b) { return *this = *this - b; }
  RatFun& operator*=(const RatFun& b) { return *this = *this * b; }
  RatFun& operator/=(const RatFun& b) { return *this = *this / b; }

  friend bool operator==(const RatFun& a, const RatFun& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator!=(const RatFun& a, const RatFun& b) { return !(a == b); }
};

inline bool is_zero(const RatFun& x) { return x.is_zero_fun(); }
inline bool is_one(const RatFun& x) { return x == RatFun(1); }

inline std::string to_string(const RatFun& x) {
  if (x.den == UPoly<Rat>::one()) {
    if (x.num.deg() <= 0) return x.num.str();
    return "(" + x.num.str() + ")";
  }
  return "(" + x.num.str() + ")/(" + x.den.str() + ")";
}

template <>
struct FieldName<RatFun> {
  static constexpr const char* value = "Q(u)";
};

}  // namespace nk
