#pragma once

#include <numeric>
#include <stdexcept>
#include <vector>

namespace nk {

// Exponent vector; index i is the exponent of variable i.
using Mono = std::vector<int>;

inline int mono_deg(const Mono& m) { return std::accumulate(m.begin(), m.end(), 0); }

inline int mono_wdeg(const Mono& m, const std::vector<int>& w) {
  int d = 0;
  for (size_t i = 0; i < m.size(); ++i) d += m[i] * w[i];
  return d;
}

inline bool mono_is_one(const Mono& m) {
  for (int e : m)
    if (e) return false;
  return true;
}

inline bool mono_divides(const Mono& a, const Mono& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline Mono mono_mul(const Mono& a, const Mono& b) {
  Mono c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

inline Mono mono_div(const Mono& a, const Mono& b) {
  Mono c(a.size());
  for (size_t i = 0; i < a.size(); ++i) {
    c[i] = a[i] - b[i];
    if (c[i] < 0) throw std::logic_error("mono_div: not divisible");
  }
  return c;
}

inline Mono mono_lcm(const Mono& a, const Mono& b) {
  Mono c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = std::max(a[i], b[i]);
  return c;
}

// Term order.  Degrevlex is the default working order; lex is available for
// classical examples; elim_block > 0 makes the first `elim_block` variables an
// elimination block (compared degrevlex first), which is how the toric kernels
// are computed.
struct MonomialOrder {
  enum class Kind { Degrevlex, Lex };
  Kind kind = Kind::Degrevlex;
  int elim_block = 0;

  static MonomialOrder degrevlex() { return MonomialOrder{}; }
  static MonomialOrder lex() { return MonomialOrder{Kind::Lex, 0}; }
  static MonomialOrder elimination(int block) {
    return MonomialOrder{Kind::Degrevlex, block};
  }

  // Compare exponent subranges [lo, hi) by degrevlex.
  static int cmp_drl(const Mono& a, const Mono& b, int lo, int hi) {
    int da = 0, db = 0;
    for (int i = lo; i < hi; ++i) {
      da += a[i];
      db += b[i];
    }
    if (da != db) return da < db ? -1 : 1;
    for (int i = hi - 1; i >= lo; --i) {
      if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
    }
    return 0;
  }

  static int cmp_lex(const Mono& a, const Mono& b, int lo, int hi) {
    for (int i = lo; i < hi; ++i)
      if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
  }

  // Returns -1 if a < b, 0 if equal, 1 if a > b.
  int cmp(const Mono& a, const Mono& b) const {
    int n = static_cast<int>(a.size());
    if (elim_block > 0) {
      int c = cmp_drl(a, b, 0, elim_block);
      if (c) return c;
      if (kind == Kind::Lex) return cmp_lex(a, b, elim_block, n);
      return cmp_drl(a, b, elim_block, n);
    }
    if (kind == Kind::Lex) return cmp_lex(a, b, 0, n);
    return cmp_drl(a, b, 0, n);
  }

  bool less(const Mono& a, const Mono& b) const { return cmp(a, b) < 0; }
  bool greater(const Mono& a, const Mono& b) const { return cmp(a, b) > 0; }
};

}  // namespace nk
