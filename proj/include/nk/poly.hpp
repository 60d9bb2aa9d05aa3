#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "nk/monomial.hpp"
#include "nk/rational.hpp"

namespace nk {

// Sparse multivariate polynomial.  Terms are kept in a map with lexicographic
// key order; term orders are applied by scanning, which is plenty at the sizes
// this engine works with.
template <class K>
struct Poly {
  int nvars = 0;
  std::map<Mono, K> t;

  Poly() = default;
  explicit Poly(int nv) : nvars(nv) {}

  static Poly zero(int nv) { return Poly(nv); }
  static Poly constant(int nv, K c) {
    Poly p(nv);
    if (!is_zero(c)) p.t.emplace(Mono(nv, 0), std::move(c));
    return p;
  }
  static Poly variable(int nv, int i) {
    Poly p(nv);
    Mono m(nv, 0);
    m[i] = 1;
    p.t.emplace(std::move(m), K(1));
    return p;
  }
  static Poly monomial(int nv, Mono m, K c) {
    Poly p(nv);
    if (!is_zero(c)) p.t.emplace(std::move(m), std::move(c));
    return p;
  }

  bool is_zero_p() const { return t.empty(); }

  void add_term(const Mono& m, const K& c) {
    auto it = t.find(m);
    if (it == t.end()) {
      if (!is_zero(c)) t.emplace(m, c);
    } else {
      it->second += c;
      if (is_zero(it->second)) t.erase(it);
    }
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    Poly r = a;
    for (const auto& [m, c] : b.t) r.add_term(m, c);
    return r;
  }
  friend Poly operator-(const Poly& a, const Poly& b) {
    Poly r = a;
    for (const auto& [m, c] : b.t) r.add_term(m, -c);
    return r;
  }
  Poly operator-() const {
    Poly r = *this;
    for (auto& [m, c] : r.t) c = -c;
    return r;
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly r(a.nvars);
    for (const auto& [ma, ca] : a.t)
      for (const auto& [mb, cb] : b.t) r.add_term(mono_mul(ma, mb), ca * cb);
    return r;
  }
  friend Poly operator*(const K& s, const Poly& a) {
    Poly r(a.nvars);
    if (is_zero(s)) return r;
    for (const auto& [m, c] : a.t) r.t.emplace(m, s * c);
    return r;
  }
  friend bool operator==(const Poly& a, const Poly& b) { return a.t == b.t; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly mul_mono(const Mono& m, const K& c) const {
    Poly r(nvars);
    if (is_zero(c)) return r;
    for (const auto& [mm, cc] : t) r.t.emplace(mono_mul(mm, m), c * cc);
    return r;
  }

  Poly pow(int k) const {
    Poly r = constant(nvars, K(1));
    for (int i = 0; i < k; ++i) r = r * (*this);
    return r;
  }

  std::pair<Mono, K> leading(const MonomialOrder& ord) const {
    if (t.empty()) throw std::logic_error("Poly::leading of zero polynomial");
    auto best = t.begin();
    for (auto it = std::next(t.begin()); it != t.end(); ++it)
      if (ord.greater(it->first, best->first)) best = it;
    return {best->first, best->second};
  }

  Poly derivative(int i) const {
    Poly r(nvars);
    for (const auto& [m, c] : t) {
      if (m[i] == 0) continue;
      Mono mm = m;
      mm[i] -= 1;
      r.add_term(mm, K(m[i]) * c);
    }
    return r;
  }

  int total_degree() const {
    int d = 0;
    for (const auto& [m, c] : t) d = std::max(d, mono_deg(m));
    return d;
  }

  // Weighted degree if homogeneous, nullopt otherwise.
  std::optional<int> homogeneous_weight(const std::vector<int>& w) const {
    std::optional<int> d;
    for (const auto& [m, c] : t) {
      int dm = mono_wdeg(m, w);
      if (!d)
        d = dm;
      else if (*d != dm)
        return std::nullopt;
    }
    return d ? d : std::optional<int>(0);
  }

  std::string str(const std::vector<std::string>& vars) const {
    if (t.empty()) return "0";
    // Render highest-degree terms first for readability.
    std::vector<std::pair<Mono, K>> terms(t.begin(), t.end());
    std::sort(terms.begin(), terms.end(), [](const auto& x, const auto& y) {
      if (mono_deg(x.first) != mono_deg(y.first))
        return mono_deg(x.first) > mono_deg(y.first);
      return x.first > y.first;
    });
    std::string s;
    for (const auto& [m, c] : terms) {
      std::string mono_str;
      for (size_t i = 0; i < m.size(); ++i) {
        if (!m[i]) continue;
        if (!mono_str.empty()) mono_str += "*";
        mono_str += vars[i];
        if (m[i] > 1) mono_str += "^" + std::to_string(m[i]);
      }
      std::string co = to_string(c);
      std::string term;
      if (mono_str.empty()) {
        term = co;
      } else if (co == "1") {
        term = mono_str;
      } else if (co == "-1") {
        term = "-" + mono_str;
      } else {
        term = co + "*" + mono_str;
      }
      if (s.empty()) {
        s = term;
      } else if (term[0] == '-') {
        s += " - " + term.substr(1);
      } else {
        s += " + " + term;
      }
    }
    return s;
  }
};

}  // namespace nk
