#pragma once

// Homogeneous components of the L-graded hypersurface
//   R = k[X1..X4] / (X1^p1 + X2^p2 + X3^p3 + X4^p4),   deg X_i = x_i,
// its truncations S = R / (X_i^{q_i}), and the Ext dimensions between line
// bundles O(x), O(y).

#include <array>
#include <string>

#include "glacm/picard.hpp"

namespace glacm {

/// Truncation exponents (q1..q4) with 2 <= q_i <= p_i.
class Truncation {
 public:
  Truncation(const Weights& w, std::array<int, kArity> q) : q_(q) {
    for (std::size_t i = 0; i < kArity; ++i) {
      if (q_[i] < 2 || q_[i] > w[i]) {
        throw DomainError("truncation must satisfy 2 <= q_i <= p_i, got q" + std::to_string(i + 1) +
                          "=" + std::to_string(q_[i]) + " for weights " + w.to_string());
      }
    }
  }

  /// q = p: the CM-canonical algebra case.
  static Truncation full(const Weights& w) { return Truncation(w, w.values()); }
  /// q = (2,2,2,2): radical-square-zero factors.
  static Truncation square_zero(const Weights& w) { return Truncation(w, {2, 2, 2, 2}); }

  int operator[](std::size_t i) const { return q_[i]; }
  const std::array<int, kArity>& values() const { return q_; }

  friend bool operator==(const Truncation&, const Truncation&) = default;

 private:
  std::array<int, kArity> q_;
};

struct ExtDims {
  Int hom = 0;
  Int ext1 = 0;
  Int ext2 = 0;
  friend bool operator==(const ExtDims&, const ExtDims&) = default;
};

namespace graded {

/// dim R_x. Writing x = sum lambda_i x_i + ell c in normal form, a monomial
/// with a_1 < p_1 has degree x iff a_i = lambda_i + k_i p_i with k_1 = 0 and
/// k_2 + k_3 + k_4 = ell, so the count is C(ell + 2, 2) for ell >= 0.
inline Int dim_R(const Weights& w, const LElem& x) {
  picard::require_context(w, x);
  if (x.ell < 0) return 0;
  return (x.ell + 2) * (x.ell + 1) / 2;
}

/// dim S_x for S = R / (X_i^{q_i}), by enumeration of exponent vectors
/// 0 <= a_i < q_i of degree x.
inline Int dim_S(const Weights& w, const LElem& x, const Truncation& q) {
  picard::require_context(w, x);
  if (x.ell < 0) return 0;
  Int count = 0;
  std::array<Int, kArity> a{};
  for (a[0] = 0; a[0] < q[0]; ++a[0]) {
    for (a[1] = 0; a[1] < q[1]; ++a[1]) {
      for (a[2] = 0; a[2] < q[2]; ++a[2]) {
        for (a[3] = 0; a[3] < q[3]; ++a[3]) {
          if (picard::normalize(w, a, 0) == x) ++count;
        }
      }
    }
  }
  return count;
}

/// (dim Hom, dim Ext^1, dim Ext^2) from O(x) to O(y).
inline ExtDims line_ext_dims(const Weights& w, const LElem& x, const LElem& y) {
  const LElem omega = picard::distinguished(w).omega;
  ExtDims d;
  d.hom = dim_R(w, picard::sub(w, y, x));
  d.ext1 = 0;
  d.ext2 = dim_R(w, picard::add(w, picard::sub(w, x, y), omega));
  return d;
}

}  // namespace graded
}  // namespace glacm
