#pragma once

// Stable Hom dimensions in the stable category of ACM bundles whose source is
// a 2-Auslander bundle E(z) (or whose target is a 2-coAuslander bundle F(z)).
//
//   Hom(E(z), X) = k  iff  O(z + omega) is a summand of the projective cover of X
//   Hom(X, F(z)) = k  iff  O(z) is a summand of the injective hull of X
//
// Both hold for X a 2-extension bundle (hulls and covers are Hom-orthogonal,
// so the dimension never exceeds one).

#include <functional>
#include <vector>

#include "glacm/extbundle.hpp"
#include "glacm/picard.hpp"

namespace glacm {

/// label[shift] in the stable category.
struct StableObj {
  ExtLabel label;
  Int shift = 0;

  friend auto operator<=>(const StableObj&, const StableObj&) = default;
};

namespace stablehom {

/// Absorbs the shift into the label.
inline ExtLabel normalize(const Weights& w, const StableObj& obj) {
  return ext::suspend(w, obj.label, obj.shift);
}

/// dim Hom(E(source_twist), target).
inline Int hom_from_auslander(const Weights& w, const LElem& source_twist, const StableObj& target) {
  const LElem omega = picard::distinguished(w).omega;
  const auto cover = ext::projective_cover(w, normalize(w, target));
  return cover.contains(picard::add(w, source_twist, omega)) ? 1 : 0;
}

/// dim Hom(source, F(target_twist)).
inline Int hom_to_coauslander(const Weights& w, const StableObj& source, const LElem& target_twist) {
  picard::require_context(w, target_twist);
  return ext::injective_hull(w, normalize(w, source)).contains(target_twist) ? 1 : 0;
}

/// dim Hom(source, target) when the source is isomorphic to a shifted
/// 2-Auslander bundle. Throws UnsupportedInput otherwise.
inline Int stable_hom(const Weights& w, const StableObj& source, const StableObj& target) {
  // Hom(S[m], T[n]) = Hom(S, T[n - m]).
  const ExtLabel src = ext::suspend(w, source.label, 0);
  const auto aus = ext::is_auslander(w, src);
  if (!aus) {
    throw UnsupportedInput("stable Hom needs a 2-Auslander source; " + src.to_string() + " is not one");
  }
  return hom_from_auslander(w, *aus, StableObj{target.label, target.shift - source.shift});
}

/// Closed form for dim Hom(E(x), E(y)[n]), 0 <= x, y <= delta:
/// one iff n = sigma(x) - sigma(y) and 0 <= x - y <= s.
inline Int hom_rig(const Weights& w, const LElem& x, const LElem& y, Int n) {
  const Int sx = picard::sigma(w, x);
  const Int sy = picard::sigma(w, y);
  if (n != sx - sy) return 0;
  const LElem diff = picard::sub(w, x, y);
  const LElem s = picard::distinguished(w).s;
  return picard::leq(w, picard::zero(), diff) && picard::leq(w, diff, s) ? 1 : 0;
}

/// Default bound on |n| for shift sweeps: sigma(delta) + 4.
inline Int default_shift_bound(const Weights& w) {
  return picard::sigma(w, picard::distinguished(w).delta) + 4;
}

/// Shift assigned to the summand E(x) of the tilting object (E(x)[-grading(x)]).
using Grading = std::function<Int(const LElem&)>;

/// Hom(T, T[n]) = 0 for 0 < |n| <= n_max, where T = (+)_{0<=x<=delta} E(x)[-grading(x)].
inline bool rigidity_check(const Weights& w, Int n_max, const Grading& grading) {
  const auto box = picard::delta_box(w);
  for (const LElem& x : box) {
    for (const LElem& y : box) {
      const Int base = grading(x) - grading(y);
      for (Int n = -n_max; n <= n_max; ++n) {
        if (n == 0) continue;
        if (hom_rig(w, x, y, base + n) != 0) return false;
      }
    }
  }
  return true;
}

inline bool rigidity_check(const Weights& w, Int n_max) {
  return rigidity_check(w, n_max, [&w](const LElem& x) { return picard::sigma(w, x); });
}

inline bool rigidity_check(const Weights& w) { return rigidity_check(w, default_shift_bound(w)); }

struct HomEntry {
  LElem x;
  LElem y;
  Int n = 0;
  Int dim = 0;
};

/// hom_rig over [0, delta]^2 x [-n_max, n_max]; only nonzero entries unless `include_zero`.
inline std::vector<HomEntry> hom_rig_table(const Weights& w, Int n_max, bool include_zero = false) {
  std::vector<HomEntry> out;
  const auto box = picard::delta_box(w);
  for (const LElem& x : box) {
    for (const LElem& y : box) {
      for (Int n = -n_max; n <= n_max; ++n) {
        const Int d = hom_rig(w, x, y, n);
        if (d != 0 || include_zero) out.push_back(HomEntry{x, y, n, d});
      }
    }
  }
  return out;
}

}  // namespace stablehom
}  // namespace glacm
