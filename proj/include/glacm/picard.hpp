#pragma once

// Arithmetic in the rank-one abelian group
//   L = < x1, x2, x3, x4, c | p1 x1 = p2 x2 = p3 x3 = p4 x4 = c >
// Elements are kept in the normal form  sum_i lambda_i x_i + ell c  with
// 0 <= lambda_i < p_i, which makes equality and the partial order
// (x <= y iff y - x has ell >= 0) decidable on stored integers.

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "glacm/errors.hpp"

namespace glacm {

using Int = std::int64_t;

/// Number of weights; everything in this library is about quadruples.
inline constexpr std::size_t kArity = 4;

/// Weight quadruple (p1, p2, p3, p4), every p_i >= 2.
class Weights {
 public:
  Weights() = default;
  explicit Weights(std::array<int, kArity> p) : p_(p) {
    for (int v : p_) {
      if (v < 2) throw DomainError("weights must satisfy p_i >= 2, got " + to_string());
    }
  }

  int operator[](std::size_t i) const { return p_[i]; }
  const std::array<int, kArity>& values() const { return p_; }

  std::string to_string() const {
    std::ostringstream os;
    os << p_[0] << ',' << p_[1] << ',' << p_[2] << ',' << p_[3];
    return os.str();
  }

  friend bool operator==(const Weights&, const Weights&) = default;

 private:
  std::array<int, kArity> p_{2, 2, 2, 2};
};

/// Element of L in normal form. Carries no reference to its weights; every
/// operation takes the weights explicitly and rejects foreign values.
///
/// The defaulted ordering is lexicographic on (lambda_1..lambda_4, ell); it
/// fixes enumeration order and tie-breaking throughout the library.
struct LElem {
  std::array<Int, kArity> lambda{};
  Int ell = 0;

  friend auto operator<=>(const LElem&, const LElem&) = default;

  std::string to_string() const {
    std::ostringstream os;
    os << '(' << lambda[0] << ',' << lambda[1] << ',' << lambda[2] << ',' << lambda[3] << ';'
       << ell << ')';
    return os.str();
  }
};

struct LElemHash {
  std::size_t operator()(const LElem& a) const noexcept {
    std::size_t h = std::hash<Int>{}(a.ell);
    for (Int v : a.lambda) h = h * 1000003u ^ std::hash<Int>{}(v);
    return h;
  }
};

namespace picard {

namespace detail {

inline Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline Int floor_mod(Int a, Int b) { return a - floor_div(a, b) * b; }

}  // namespace detail

/// Unique normal form of  sum_i raw_lambda_i x_i + raw_ell c.
inline LElem normalize(const Weights& w, const std::array<Int, kArity>& raw_lambda,
                       Int raw_ell) {
  LElem out;
  out.ell = raw_ell;
  for (std::size_t i = 0; i < kArity; ++i) {
    const Int p = w[i];
    out.lambda[i] = detail::floor_mod(raw_lambda[i], p);
    out.ell += detail::floor_div(raw_lambda[i], p);
  }
  return out;
}

inline bool is_normalized(const Weights& w, const LElem& a) {
  for (std::size_t i = 0; i < kArity; ++i) {
    if (a.lambda[i] < 0 || a.lambda[i] >= w[i]) return false;
  }
  return true;
}

/// Throws ContextError unless `a` is a normal form for weights `w`.
inline void require_context(const Weights& w, const LElem& a) {
  if (!is_normalized(w, a)) {
    throw ContextError("element " + a.to_string() + " is not a normal form for weights " +
                       w.to_string());
  }
}

inline LElem zero() { return LElem{}; }

/// The generator x_i, 0-based index.
inline LElem generator(const Weights& w, std::size_t i) {
  std::array<Int, kArity> raw{};
  raw[i] = 1;
  return normalize(w, raw, 0);
}

inline LElem canonical(const Weights&) {
  LElem c;
  c.ell = 1;
  return c;
}

inline LElem add(const Weights& w, const LElem& a, const LElem& b) {
  require_context(w, a);
  require_context(w, b);
  std::array<Int, kArity> raw{};
  for (std::size_t i = 0; i < kArity; ++i) raw[i] = a.lambda[i] + b.lambda[i];
  return normalize(w, raw, a.ell + b.ell);
}

inline LElem neg(const Weights& w, const LElem& a) {
  require_context(w, a);
  std::array<Int, kArity> raw{};
  for (std::size_t i = 0; i < kArity; ++i) raw[i] = -a.lambda[i];
  return normalize(w, raw, -a.ell);
}

inline LElem sub(const Weights& w, const LElem& a, const LElem& b) {
  return add(w, a, neg(w, b));
}

/// k * a for any integer k.
inline LElem scale(const Weights& w, Int k, const LElem& a) {
  require_context(w, a);
  std::array<Int, kArity> raw{};
  for (std::size_t i = 0; i < kArity; ++i) raw[i] = k * a.lambda[i];
  return normalize(w, raw, k * a.ell);
}

/// Membership in the positive cone L_+.
inline bool is_effective(const Weights& w, const LElem& a) {
  require_context(w, a);
  return a.ell >= 0;
}

/// a <= b  iff  b - a lies in L_+.
inline bool leq(const Weights& w, const LElem& a, const LElem& b) {
  return sub(w, b, a).ell >= 0;
}

struct Distinguished {
  LElem c;      ///< canonical element
  LElem omega;  ///< dualizing element c - sum x_i
  LElem delta;  ///< dominant element 2c + 2 omega = sum (p_i - 2) x_i
  LElem s;      ///< sum x_i
};

inline Distinguished distinguished(const Weights& w) {
  Distinguished d;
  d.c = canonical(w);
  d.omega = normalize(w, {-1, -1, -1, -1}, 1);
  d.delta = normalize(w, {w[0] - 2, w[1] - 2, w[2] - 2, w[3] - 2}, 0);
  d.s = normalize(w, {1, 1, 1, 1}, 0);
  return d;
}

/// 0 <= x <= delta, i.e. ell = 0 and lambda_i <= p_i - 2 for every i.
inline bool in_delta_box(const Weights& w, const LElem& x) {
  require_context(w, x);
  if (x.ell != 0) return false;
  for (std::size_t i = 0; i < kArity; ++i) {
    if (x.lambda[i] > w[i] - 2) return false;
  }
  return true;
}

inline void require_delta_box(const Weights& w, const LElem& x, const char* what = "element") {
  if (!in_delta_box(w, x)) {
    throw DomainError(std::string(what) + ' ' + x.to_string() + " is outside [0, delta] for weights " +
                      w.to_string());
  }
}

/// sigma(x) = sum of normal-form coefficients, defined on [0, delta].
inline Int sigma(const Weights& w, const LElem& x) {
  require_delta_box(w, x);
  return x.lambda[0] + x.lambda[1] + x.lambda[2] + x.lambda[3];
}

/// Number of elements of [0, delta].
inline Int delta_box_size(const Weights& w) {
  Int n = 1;
  for (std::size_t i = 0; i < kArity; ++i) n *= w[i] - 1;
  return n;
}

/// All x with lo <= x <= hi, sorted lexicographically. Empty if lo is not <= hi.
inline std::vector<LElem> box_enum(const Weights& w, const LElem& lo, const LElem& hi) {
  const LElem span = sub(w, hi, lo);
  std::vector<LElem> out;
  if (span.ell < 0) return out;
  // d = (nu, n) satisfies 0 <= d <= span iff n >= 0 and
  // span.ell - n - #{i : nu_i > span.lambda_i} >= 0.
  std::array<Int, kArity> nu{};
  for (nu[0] = 0; nu[0] < w[0]; ++nu[0]) {
    for (nu[1] = 0; nu[1] < w[1]; ++nu[1]) {
      for (nu[2] = 0; nu[2] < w[2]; ++nu[2]) {
        for (nu[3] = 0; nu[3] < w[3]; ++nu[3]) {
          Int carries = 0;
          for (std::size_t i = 0; i < kArity; ++i) carries += nu[i] > span.lambda[i] ? 1 : 0;
          for (Int n = 0; n <= span.ell - carries; ++n) {
            out.push_back(add(w, lo, LElem{nu, n}));
          }
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// [0, delta] in lexicographic order.
inline std::vector<LElem> delta_box(const Weights& w) {
  return box_enum(w, zero(), distinguished(w).delta);
}

}  // namespace picard
}  // namespace glacm
