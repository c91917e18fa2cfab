#pragma once

// Grothendieck group K0(coh X) as formal integer combinations of line bundle
// classes [O(x)], with the Euler form
//   chi(O(x), O(y)) = dim R_{y-x} + dim R_{x-y+omega}.
//
// Classes are compared through their pairing vectors against the basis
// { [O(b)] : 0 <= b <= 2c }. When the Gram matrix of that basis is
// unimodular, equal pairing vectors mean equal classes.

#include <array>
#include <cstdlib>
#include <map>
#include <string>
#include <vector>

#include "glacm/detail/integer_matrix.hpp"
#include "glacm/extbundle.hpp"
#include "glacm/graded.hpp"
#include "glacm/picard.hpp"

namespace glacm {

/// Formal sum  sum_x n_x [O(x)]. No zero coefficient is ever stored.
class K0Class {
 public:
  K0Class() = default;

  static K0Class line(const LElem& degree, Int coeff = 1) {
    K0Class k;
    k.add_term(degree, coeff);
    return k;
  }

  void add_term(const LElem& degree, Int coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(degree, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  const std::map<LElem, Int>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  /// rank [O(x)] = 1 for every x.
  Int rank() const {
    Int r = 0;
    for (const auto& [deg, n] : terms_) r += n;
    return r;
  }

  K0Class twisted(const Weights& w, const LElem& z) const {
    K0Class out;
    for (const auto& [deg, n] : terms_) out.add_term(picard::add(w, deg, z), n);
    return out;
  }

  K0Class& operator+=(const K0Class& o) {
    for (const auto& [deg, n] : o.terms_) add_term(deg, n);
    return *this;
  }
  K0Class& operator-=(const K0Class& o) {
    for (const auto& [deg, n] : o.terms_) add_term(deg, -n);
    return *this;
  }
  friend K0Class operator+(K0Class a, const K0Class& b) { return a += b; }
  friend K0Class operator-(K0Class a, const K0Class& b) { return a -= b; }
  friend K0Class operator*(Int k, const K0Class& a) {
    K0Class out;
    for (const auto& [deg, n] : a.terms_) out.add_term(deg, k * n);
    return out;
  }

  /// Syntactic equality of the stored combinations.
  friend bool operator==(const K0Class&, const K0Class&) = default;

 private:
  std::map<LElem, Int> terms_;
};

using Fingerprint = std::vector<Int>;

namespace k0 {

inline Int euler_lines(const Weights& w, const LElem& x, const LElem& y) {
  const ExtDims d = graded::line_ext_dims(w, x, y);
  return d.hom - d.ext1 + d.ext2;
}

inline Int euler_pairing(const Weights& w, const K0Class& xi, const K0Class& eta) {
  Int total = 0;
  for (const auto& [x, n] : xi.terms()) {
    for (const auto& [y, m] : eta.terms()) total += n * m * euler_lines(w, x, y);
  }
  return total;
}

/// Class read off the defining sequence
///   0 -> O(omega) -> E<x> -> (+)_i O(x - (1+lambda_i) x_i) -> O(x) -> 0,
/// twisted by the label's twist.
inline K0Class class_of_ext(const Weights& w, const ExtLabel& a) {
  ext::require_label(w, a);
  const LElem omega = picard::distinguished(w).omega;
  K0Class k;
  k.add_term(omega, 1);
  for (std::size_t i = 0; i < kArity; ++i) {
    std::array<Int, kArity> step{};
    step[i] = 1 + a.x.lambda[i];
    k.add_term(picard::sub(w, a.x, picard::normalize(w, step, 0)), 1);
  }
  k.add_term(a.x, -1);
  return k.twisted(w, a.twist);
}

/// sum_{J subset I} (-1)^{|J|} [O(base + sum_{j in J} ell_j x_j)] for a
/// three-element index set I (0-based) and positive exponents.
inline K0Class koszul_class(const Weights& w, const LElem& base, const std::array<std::size_t, 3>& indices,
                            const std::array<Int, 3>& ells) {
  picard::require_context(w, base);
  for (std::size_t k = 0; k < 3; ++k) {
    if (indices[k] >= kArity) throw DomainError("Koszul index out of range");
    if (ells[k] < 1) throw DomainError("Koszul exponents must be >= 1");
    for (std::size_t l = k + 1; l < 3; ++l) {
      if (indices[k] == indices[l]) throw DomainError("Koszul indices must be distinct");
    }
  }
  K0Class k;
  for (unsigned mask = 0; mask < 8; ++mask) {
    std::array<Int, kArity> raw{};
    int parity = 0;
    for (std::size_t b = 0; b < 3; ++b) {
      if (mask & (1u << b)) {
        raw[indices[b]] += ells[b];
        parity ^= 1;
      }
    }
    k.add_term(picard::add(w, base, picard::normalize(w, raw, 0)), parity ? -1 : 1);
  }
  return k;
}

inline IntMatrix gram_matrix(const Weights& w, const std::vector<LElem>& basis) {
  IntMatrix g(basis.size(), std::vector<Int>(basis.size()));
  for (std::size_t a = 0; a < basis.size(); ++a)
    for (std::size_t b = 0; b < basis.size(); ++b) g[a][b] = euler_lines(w, basis[a], basis[b]);
  return g;
}

inline std::vector<LElem> canonical_basis(const Weights& w) {
  return picard::box_enum(w, picard::zero(), picard::scale(w, 2, picard::canonical(w)));
}

/// det of the Euler Gram matrix over { O(b) : 0 <= b <= 2c }.
inline BigInt gram_determinant(const Weights& w) {
  return detail::bareiss_determinant(gram_matrix(w, canonical_basis(w)));
}

enum class EqualityMode {
  exact,      ///< Gram determinant is +-1; fingerprints are coordinates
  necessary,  ///< equal fingerprints are only a necessary condition
};

/// Per-weights context holding the canonical basis and its Gram determinant.
class K0Lattice {
 public:
  explicit K0Lattice(const Weights& w) : weights_(w), basis_(canonical_basis(w)) {
    determinant_ = detail::bareiss_determinant(gram_matrix(w, basis_));
    mode_ = abs(determinant_) == 1 ? EqualityMode::exact : EqualityMode::necessary;
  }

  const Weights& weights() const { return weights_; }
  const std::vector<LElem>& basis() const { return basis_; }
  const BigInt& gram_determinant() const { return determinant_; }
  EqualityMode mode() const { return mode_; }

  Fingerprint fingerprint(const K0Class& xi) const {
    Fingerprint f(basis_.size());
    for (std::size_t b = 0; b < basis_.size(); ++b) {
      Int v = 0;
      for (const auto& [deg, n] : xi.terms()) v += n * euler_lines(weights_, basis_[b], deg);
      f[b] = v;
    }
    return f;
  }

  bool classes_equal(const K0Class& xi, const K0Class& eta) const {
    return xi.rank() == eta.rank() && fingerprint(xi) == fingerprint(eta);
  }

  bool is_zero(const K0Class& xi) const { return classes_equal(xi, K0Class{}); }

  bool verify_koszul(const LElem& base, const std::array<std::size_t, 3>& indices,
                     const std::array<Int, 3>& ells) const {
    return is_zero(koszul_class(weights_, base, indices, ells));
  }

  /// Class identity behind the triangle
  ///   E<x> -> E<x + x_i> -> E<x - lambda_i x_i>((1 + lambda_i) x_i) -> E<x>[1]:
  ///   [E<x - lambda_i x_i>((1+lambda_i) x_i)]
  ///     = [E<x + x_i>] - [E<x>] + [O(omega + (1+lambda_i) x_i)] + sum_{j != i} [O(x - (1+lambda_j) x_j)].
  bool verify_triangle_class(const LElem& x, std::size_t i) const {
    const Weights& w = weights_;
    if (i >= kArity) throw DomainError("index out of range");
    picard::require_delta_box(w, x);
    const LElem xi = picard::generator(w, i);
    const LElem next = picard::add(w, x, xi);
    if (!picard::in_delta_box(w, next)) {
      throw DomainError("x + x_" + std::to_string(i + 1) + " leaves [0, delta]");
    }
    const LElem omega = picard::distinguished(w).omega;
    const Int li = x.lambda[i];

    const LElem cone_x = picard::sub(w, x, picard::scale(w, li, xi));
    const LElem cone_twist = picard::scale(w, 1 + li, xi);
    const K0Class cone = class_of_ext(w, ext::make(w, cone_x, cone_twist));

    K0Class rhs = class_of_ext(w, ext::make(w, next)) - class_of_ext(w, ext::make(w, x));
    rhs.add_term(picard::add(w, omega, cone_twist), 1);
    for (std::size_t j = 0; j < kArity; ++j) {
      if (j == i) continue;
      rhs.add_term(picard::sub(w, x, picard::scale(w, 1 + x.lambda[j], picard::generator(w, j))), 1);
    }
    return classes_equal(cone, rhs);
  }

 private:
  Weights weights_;
  std::vector<LElem> basis_;
  BigInt determinant_;
  EqualityMode mode_ = EqualityMode::necessary;
};

}  // namespace k0
}  // namespace glacm
