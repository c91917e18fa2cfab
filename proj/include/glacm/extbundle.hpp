#pragma once

// Label calculus for 2-extension bundles E<x>(z), 0 <= x <= delta, z in L.
//
// An object is named by the pair (x, twist). The stable suspension, vector
// bundle duality and the isomorphism relation all act on these pairs by
// explicit formulas; injective hulls and projective covers are multisets of
// line-bundle degrees.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "glacm/picard.hpp"

namespace glacm {

/// E<x>(twist). Invariant (checked by ext::make): 0 <= x <= delta.
struct ExtLabel {
  LElem x;
  LElem twist;

  friend auto operator<=>(const ExtLabel&, const ExtLabel&) = default;

  std::string to_string() const { return "E<" + x.to_string() + ">(" + twist.to_string() + ")"; }
};

/// Direct sum of line bundles, stored as a sorted multiset of degrees.
class LineBundleMultiset {
 public:
  LineBundleMultiset() = default;
  explicit LineBundleMultiset(std::vector<LElem> degrees) : degrees_(std::move(degrees)) {
    std::sort(degrees_.begin(), degrees_.end());
  }

  const std::vector<LElem>& degrees() const { return degrees_; }
  std::size_t size() const { return degrees_.size(); }
  bool contains(const LElem& d) const { return std::binary_search(degrees_.begin(), degrees_.end(), d); }
  std::size_t count(const LElem& d) const {
    auto [lo, hi] = std::equal_range(degrees_.begin(), degrees_.end(), d);
    return static_cast<std::size_t>(hi - lo);
  }

  friend bool operator==(const LineBundleMultiset&, const LineBundleMultiset&) = default;

 private:
  std::vector<LElem> degrees_;
};

/// Subset of {1,2,3,4} as a bit mask (bit i <-> index i+1).
using IndexSet = std::uint8_t;

/// The eight even subsets in a fixed order: {}, then the six pairs, then {1,2,3,4}.
inline constexpr std::array<IndexSet, 8> kEvenSubsets = {0b0000, 0b0011, 0b0101, 0b1001,
                                                         0b0110, 0b1010, 0b1100, 0b1111};

inline bool is_even_subset(IndexSet set) { return set < 16 && std::popcount(unsigned{set}) % 2 == 0; }

inline std::string index_set_to_string(IndexSet set) {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < kArity; ++i) {
    if (set & (1u << i)) {
      if (!first) out += ',';
      out += std::to_string(i + 1);
      first = false;
    }
  }
  return out + "}";
}

namespace ext {

inline void require_label(const Weights& w, const ExtLabel& a) {
  picard::require_delta_box(w, a.x, "extension parameter");
  picard::require_context(w, a.twist);
}

inline ExtLabel make(const Weights& w, const LElem& x, const LElem& twist = {}) {
  ExtLabel a{x, twist};
  require_label(w, a);
  return a;
}

/// a(z); E<x>(t)(z) = E<x>(t + z).
inline ExtLabel twisted(const Weights& w, const ExtLabel& a, const LElem& z) {
  require_label(w, a);
  return ExtLabel{a.x, picard::add(w, a.twist, z)};
}

/// Coordinate reflection lambda_i -> p_i - 2 - lambda_i for every i in `set`.
inline LElem reflect(const Weights& w, const LElem& x, IndexSet set) {
  picard::require_delta_box(w, x);
  LElem y = x;
  for (std::size_t i = 0; i < kArity; ++i) {
    if (set & (1u << i)) y.lambda[i] = w[i] - 2 - x.lambda[i];
  }
  return y;
}

/// The twist z_I with E<x> ~ E<reflect(x, I)>(z_I), for I even:
///   z_I = sum_{i in I} (lambda_i + 1) x_i - (|I|/2) c.
/// I = {} gives 0, |I| = 2 the pair rule, I = {1,2,3,4} gives x - omega - c.
inline LElem iso_twist(const Weights& w, const LElem& x, IndexSet set) {
  std::array<Int, kArity> raw{};
  for (std::size_t i = 0; i < kArity; ++i) {
    if (set & (1u << i)) raw[i] = x.lambda[i] + 1;
  }
  return picard::normalize(w, raw, -static_cast<Int>(std::popcount(unsigned{set}) / 2));
}

/// The i-instance (0-based) of the suspension formula
///   E<x>[1] = E<x with lambda_i -> p_i - 2 - lambda_i>((1 + lambda_i) x_i).
inline ExtLabel suspend_once(const Weights& w, const ExtLabel& a, std::size_t i) {
  require_label(w, a);
  std::array<Int, kArity> shift{};
  shift[i] = 1 + a.x.lambda[i];
  return ExtLabel{reflect(w, a.x, IndexSet(1u << i)),
                  picard::add(w, a.twist, picard::normalize(w, shift, 0))};
}

/// Inverse of suspend_once for the same index.
inline ExtLabel desuspend_once(const Weights& w, const ExtLabel& a, std::size_t i) {
  require_label(w, a);
  const LElem x = reflect(w, a.x, IndexSet(1u << i));
  std::array<Int, kArity> shift{};
  shift[i] = -(1 + x.lambda[i]);
  return ExtLabel{x, picard::add(w, a.twist, picard::normalize(w, shift, 0))};
}

/// a[n]. Even shifts are twists by multiples of c; an odd remainder uses the
/// index-1 instance of the suspension formula (or its inverse for n < 0).
inline ExtLabel suspend(const Weights& w, const ExtLabel& a, Int n) {
  require_label(w, a);
  ExtLabel out = a;
  Int half = n / 2;
  if (n % 2 > 0) {
    out = suspend_once(w, out, 0);
  } else if (n % 2 < 0) {
    out = desuspend_once(w, out, 0);
  }
  out.twist = picard::add(w, out.twist, picard::scale(w, half, picard::canonical(w)));
  return out;
}

/// Vector bundle dual: (E<x>(z))^v = F<x>(-x - omega - z) = E<x>[1](-x - omega - z).
inline ExtLabel dualize(const Weights& w, const ExtLabel& a) {
  require_label(w, a);
  const LElem omega = picard::distinguished(w).omega;
  const ExtLabel susp = suspend(w, ExtLabel{a.x, picard::zero()}, 1);
  LElem t = picard::sub(w, susp.twist, a.x);
  t = picard::sub(w, t, omega);
  t = picard::sub(w, t, a.twist);
  return ExtLabel{susp.x, t};
}

/// The 2-coextension bundle F<x>(twist), which is E<x>(twist)[1].
inline ExtLabel coextension(const Weights& w, const LElem& x, const LElem& twist = {}) {
  return suspend(w, make(w, x, twist), 1);
}

/// Labels isomorphic to `a`, one per even subset in kEvenSubsets order.
inline std::array<ExtLabel, 8> rule_images(const Weights& w, const ExtLabel& a) {
  require_label(w, a);
  std::array<ExtLabel, 8> out;
  for (std::size_t k = 0; k < kEvenSubsets.size(); ++k) {
    const IndexSet set = kEvenSubsets[k];
    out[k] = ExtLabel{reflect(w, a.x, set), picard::add(w, a.twist, iso_twist(w, a.x, set))};
  }
  return out;
}

inline bool iso_equivalent(const Weights& w, const ExtLabel& a, const ExtLabel& b) {
  require_label(w, b);
  const auto images = rule_images(w, a);
  return std::find(images.begin(), images.end(), b) != images.end();
}

/// Lexicographically least label isomorphic to `a`.
inline ExtLabel canonical_form(const Weights& w, const ExtLabel& a) {
  const auto images = rule_images(w, a);
  return *std::min_element(images.begin(), images.end());
}

/// Number of distinct labels isomorphic to `a`; divides 8.
inline std::size_t iso_class_size(const Weights& w, const ExtLabel& a) {
  auto images = rule_images(w, a);
  std::sort(images.begin(), images.end());
  return static_cast<std::size_t>(std::unique(images.begin(), images.end()) - images.begin());
}

/// I(E<x>(z)) = (+)_i O(omega + (1+lambda_i) x_i + z)  (+)  (+)_i O(x - (1+lambda_i) x_i + z).
inline LineBundleMultiset injective_hull(const Weights& w, const ExtLabel& a) {
  require_label(w, a);
  const LElem omega = picard::distinguished(w).omega;
  std::vector<LElem> deg;
  deg.reserve(8);
  for (std::size_t i = 0; i < kArity; ++i) {
    std::array<Int, kArity> step{};
    step[i] = 1 + a.x.lambda[i];
    const LElem shift = picard::normalize(w, step, 0);
    deg.push_back(picard::add(w, picard::add(w, omega, shift), a.twist));
    deg.push_back(picard::add(w, picard::sub(w, a.x, shift), a.twist));
  }
  return LineBundleMultiset(std::move(deg));
}

/// P(E<x>(z)) = O(omega + z) (+) (+)_{|I|=2} O(sum_{i in I}(1+lambda_i) x_i + omega - c + z) (+) O(x - c + z).
inline LineBundleMultiset projective_cover(const Weights& w, const ExtLabel& a) {
  require_label(w, a);
  const auto d = picard::distinguished(w);
  std::vector<LElem> deg;
  deg.reserve(8);
  deg.push_back(picard::add(w, d.omega, a.twist));
  for (std::size_t i = 0; i < kArity; ++i) {
    for (std::size_t j = i + 1; j < kArity; ++j) {
      std::array<Int, kArity> raw{};
      raw[i] = 1 + a.x.lambda[i];
      raw[j] = 1 + a.x.lambda[j];
      const LElem base = picard::sub(w, picard::add(w, picard::normalize(w, raw, 0), d.omega), d.c);
      deg.push_back(picard::add(w, base, a.twist));
    }
  }
  deg.push_back(picard::add(w, picard::sub(w, a.x, d.c), a.twist));
  return LineBundleMultiset(std::move(deg));
}

/// If `a` is isomorphic to a 2-Auslander bundle E(z), returns the least such z.
inline std::optional<LElem> is_auslander(const Weights& w, const ExtLabel& a) {
  std::optional<LElem> best;
  for (const ExtLabel& img : rule_images(w, a)) {
    if (img.x == picard::zero() && (!best || img.twist < *best)) best = img.twist;
  }
  return best;
}

/// Label of the sheafified CM module U^ell, s <= ell <= s + delta:  E<s + delta - ell>(-omega).
inline ExtLabel u_to_ext(const Weights& w, const LElem& ell) {
  const auto d = picard::distinguished(w);
  const LElem top = picard::add(w, d.s, d.delta);
  if (!picard::leq(w, d.s, ell) || !picard::leq(w, ell, top)) {
    throw DomainError("U-index " + ell.to_string() + " is outside [s, s + delta]");
  }
  return make(w, picard::sub(w, top, ell), picard::neg(w, d.omega));
}

/// Inverse of u_to_ext on extension parameters: x -> s + delta - x.
inline LElem ext_to_u(const Weights& w, const LElem& x) {
  picard::require_delta_box(w, x, "extension parameter");
  const auto d = picard::distinguished(w);
  return picard::sub(w, picard::add(w, d.s, d.delta), x);
}

}  // namespace ext
}  // namespace glacm
