#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "nk/rational.hpp"

namespace nk {

// Dense univariate polynomial over an exact field K.  Coefficient vector has
// no trailing zeros; the zero polynomial has an empty vector and degree -1.
template <class K>
struct UPoly {
  std::vector<K> c;

  UPoly() = default;
  explicit UPoly(K constant) {
    if (!is_zero(constant)) c.push_back(std::move(constant));
  }
  explicit UPoly(std::vector<K> coeffs) : c(std::move(coeffs)) { trim(); }

  static UPoly zero() { return UPoly(); }
  static UPoly one() { return UPoly(K(1)); }
  static UPoly var() { return UPoly(std::vector<K>{K(0), K(1)}); }
  static UPoly from(std::vector<K> coeffs) { return UPoly(std::move(coeffs)); }

  int deg() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero_poly() const { return c.empty(); }

  const K& lc() const {
    if (c.empty()) throw std::logic_error("UPoly::lc of zero polynomial");
    return c.back();
  }

  void trim() {
    while (!c.empty() && is_zero(c.back())) c.pop_back();
  }

  K coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c.size())) return K(0);
    return c[i];
  }

  friend UPoly operator+(const UPoly& a, const UPoly& b) {
    UPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), K(0));
    for (size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
    r.trim();
    return r;
  }
  friend UPoly operator-(const UPoly& a, const UPoly& b) {
    UPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), K(0));
    for (size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r.c[i] -= b.c[i];
    r.trim();
    return r;
  }
  UPoly operator-() const {
    UPoly r = *this;
    for (auto& x : r.c) x = -x;
    return r;
  }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.c.empty() || b.c.empty()) return UPoly();
    UPoly r;
    r.c.assign(a.c.size() + b.c.size() - 1, K(0));
    for (size_t i = 0; i < a.c.size(); ++i)
      for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    r.trim();
    return r;
  }
  friend UPoly operator*(const K& s, const UPoly& a) {
    UPoly r = a;
    for (auto& x : r.c) x = s * x;
    r.trim();
    return r;
  }
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c == b.c; }
  friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }

  // Euclidean division; the divisor may have any nonzero leading coefficient.
  static void divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r) {
    if (b.is_zero_poly()) throw std::invalid_argument("UPoly division by zero");
    q = UPoly();
    r = a;
    if (a.deg() < b.deg()) return;
    q.c.assign(a.deg() - b.deg() + 1, K(0));
    while (!r.is_zero_poly() && r.deg() >= b.deg()) {
      K f = r.lc() / b.lc();
      int d = r.deg() - b.deg();
      q.c[d] = f;
      for (int i = 0; i <= b.deg(); ++i) r.c[i + d] -= f * b.c[i];
      r.trim();
    }
    q.trim();
  }

  UPoly monic() const {
    if (is_zero_poly()) return *this;
    K inv = K(1) / lc();
    return inv * (*this);
  }

  static UPoly gcd(UPoly a, UPoly b) {
    while (!b.is_zero_poly()) {
      UPoly q, r;
      divmod(a, b, q, r);
      a = std::move(b);
      b = std::move(r);
    }
    return a.monic();
  }

  UPoly derivative() const {
    UPoly r;
    for (int i = 1; i <= deg(); ++i) r.c.push_back(K(i) * c[i]);
    r.trim();
    return r;
  }

  K eval(const K& x) const {
    K acc(0);
    for (int i = deg(); i >= 0; --i) acc = acc * x + c[i];
    return acc;
  }

  std::string str(const std::string& v = "u") const {
    if (c.empty()) return "0";
    std::string s;
    for (int i = deg(); i >= 0; --i) {
      if (is_zero(c[i])) continue;
      std::string term;
      std::string co = to_string(c[i]);
      if (i == 0) {
        term = co;
      } else {
        if (co == "1")
          term = "";
        else if (co == "-1")
          term = "-";
        else
          term = co + "*";
        term += v;
        if (i > 1) term += "^" + std::to_string(i);
      }
      if (s.empty()) {
        s = term;
      } else if (!term.empty() && term[0] == '-') {
        s += " - " + term.substr(1);
      } else {
        s += " + " + term;
      }
    }
    return s;
  }
};

}  // namespace nk
