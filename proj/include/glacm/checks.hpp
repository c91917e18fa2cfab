#pragma once

// Property checks over one weight quadruple. Each returns pass/fail with the
// first counterexample (or a short summary) as detail. The verification
// suites and the acceptance driver are assembled from these.

#include <algorithm>
#include <array>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "glacm/detail/integer_matrix.hpp"
#include "glacm/extbundle.hpp"
#include "glacm/graded.hpp"
#include "glacm/k0.hpp"
#include "glacm/oracle.hpp"
#include "glacm/orbits.hpp"
#include "glacm/picard.hpp"
#include "glacm/stablehom.hpp"
#include "glacm/tilting.hpp"

namespace glacm {

struct CheckOutcome {
  bool pass = true;
  std::string detail;

  static CheckOutcome ok(std::string d = {}) { return {true, std::move(d)}; }
  static CheckOutcome fail(std::string d) { return {false, std::move(d)}; }
};

namespace checks {

/// Every quadruple with lo <= p_i <= hi, lexicographic.
inline std::vector<Weights> weight_sweep(int hi, int lo = 2) {
  std::vector<Weights> out;
  for (int a = lo; a <= hi; ++a)
    for (int b = lo; b <= hi; ++b)
      for (int c = lo; c <= hi; ++c)
        for (int d = lo; d <= hi; ++d) out.emplace_back(std::array<int, kArity>{a, b, c, d});
  return out;
}

/// Quadruples with prod (p_i - 1) <= bound.
inline std::vector<Weights> small_box_sweep(Int bound) {
  std::vector<Weights> out;
  const int hi = static_cast<int>(bound) + 1;
  for (int a = 2; a <= hi; ++a)
    for (int b = 2; (a - 1) * (b - 1) <= bound; ++b)
      for (int c = 2; (a - 1) * (b - 1) * (c - 1) <= bound; ++c)
        for (int d = 2; (a - 1) * (b - 1) * (c - 1) * (d - 1) <= bound; ++d)
          out.emplace_back(std::array<int, kArity>{a, b, c, d});
  return out;
}

// ---- picard ---------------------------------------------------------------

inline CheckOutcome distinguished_elements(const Weights& w) {
  const auto d = picard::distinguished(w);
  const LElem two_c_two_omega = picard::add(w, picard::scale(w, 2, d.c), picard::scale(w, 2, d.omega));
  if (d.delta != two_c_two_omega) return CheckOutcome::fail("delta != 2c + 2 omega");
  if (picard::add(w, d.omega, d.s) != d.c) return CheckOutcome::fail("omega + s != c");
  return CheckOutcome::ok();
}

inline CheckOutcome group_laws(const Weights& w) {
  const auto window = picard::box_enum(w, picard::neg(w, picard::canonical(w)), picard::canonical(w));
  const std::size_t m = std::min<std::size_t>(window.size(), 24);
  for (std::size_t a = 0; a < m; ++a) {
    const LElem& x = window[a];
    if (picard::add(w, x, picard::neg(w, x)) != picard::zero()) return CheckOutcome::fail("inverse " + x.to_string());
    for (std::size_t b = 0; b < m; ++b) {
      const LElem& y = window[b];
      if (picard::add(w, x, y) != picard::add(w, y, x)) return CheckOutcome::fail("commutativity");
      for (std::size_t c = 0; c < m; ++c) {
        const LElem& z = window[c];
        if (picard::add(w, picard::add(w, x, y), z) != picard::add(w, x, picard::add(w, y, z)))
          return CheckOutcome::fail("associativity");
      }
    }
  }
  for (std::size_t i = 0; i < kArity; ++i) {
    if (picard::scale(w, w[i], picard::generator(w, i)) != picard::canonical(w))
      return CheckOutcome::fail("p_i x_i != c for i=" + std::to_string(i + 1));
  }
  return CheckOutcome::ok(std::to_string(m) + " window elements");
}

inline CheckOutcome partial_order(const Weights& w) {
  const auto window = picard::box_enum(w, picard::neg(w, picard::canonical(w)), picard::canonical(w));
  const std::size_t m = std::min<std::size_t>(window.size(), 40);
  for (std::size_t a = 0; a < m; ++a) {
    if (!picard::leq(w, window[a], window[a])) return CheckOutcome::fail("reflexivity");
    for (std::size_t b = 0; b < m; ++b) {
      const bool ab = picard::leq(w, window[a], window[b]);
      const bool ba = picard::leq(w, window[b], window[a]);
      if (ab && ba && a != b) return CheckOutcome::fail("antisymmetry");
      for (std::size_t c = 0; ab && c < m; ++c) {
        if (picard::leq(w, window[b], window[c]) && !picard::leq(w, window[a], window[c]))
          return CheckOutcome::fail("transitivity");
      }
    }
  }
  return CheckOutcome::ok();
}

inline CheckOutcome box_shape(const Weights& w) {
  const auto box = picard::delta_box(w);
  if (static_cast<Int>(box.size()) != picard::delta_box_size(w))
    return CheckOutcome::fail("|[0,delta]| = " + std::to_string(box.size()));
  for (const LElem& x : box) {
    if (!picard::in_delta_box(w, x)) return CheckOutcome::fail(x.to_string() + " not in box");
  }
  if (!std::is_sorted(box.begin(), box.end())) return CheckOutcome::fail("box not sorted");
  return CheckOutcome::ok(std::to_string(box.size()) + " elements");
}

// ---- graded ---------------------------------------------------------------

/// dim_R closed form against brute-force monomial counting on [-2c, 3c].
inline CheckOutcome dim_r_oracle(const Weights& w) {
  const LElem c = picard::canonical(w);
  const oracle::MonomialCounter counter(w, 3);
  const auto window = picard::box_enum(w, picard::scale(w, -2, c), picard::scale(w, 3, c));
  for (const LElem& x : window) {
    const Int closed = graded::dim_R(w, x);
    const Int brute = counter.count(x);
    if (closed != brute) {
      return CheckOutcome::fail("dim R at " + x.to_string() + ": closed " + std::to_string(closed) + " vs count " +
                                std::to_string(brute));
    }
  }
  return CheckOutcome::ok(std::to_string(window.size()) + " degrees");
}

/// Ext^2(O(x), O(y)) = D Hom(O(y), O(x + omega)) on a window.
inline CheckOutcome serre_duality(const Weights& w) {
  const LElem c = picard::canonical(w);
  const LElem omega = picard::distinguished(w).omega;
  const auto window = picard::box_enum(w, picard::neg(w, c), c);
  const std::size_t m = std::min<std::size_t>(window.size(), 60);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      const ExtDims d = graded::line_ext_dims(w, window[a], window[b]);
      const ExtDims dual = graded::line_ext_dims(w, window[b], picard::add(w, window[a], omega));
      if (d.ext2 != dual.hom || d.ext1 != 0) return CheckOutcome::fail("at " + window[a].to_string());
    }
  }
  return CheckOutcome::ok();
}

/// dim_S(., q) <= dim_S(., p) and dim_S(., p) <= dim_R on differences of [0, delta].
inline CheckOutcome truncation_bounds(const Weights& w) {
  const auto box = picard::delta_box(w);
  const Truncation q2 = Truncation::square_zero(w);
  const Truncation qp = Truncation::full(w);
  for (const LElem& x : box) {
    for (const LElem& y : box) {
      const LElem d = picard::sub(w, x, y);
      const Int s2 = graded::dim_S(w, d, q2);
      const Int sp = graded::dim_S(w, d, qp);
      if (s2 > sp || sp > graded::dim_R(w, d)) return CheckOutcome::fail("at " + d.to_string());
    }
  }
  return CheckOutcome::ok();
}

// ---- k0 -------------------------------------------------------------------

inline CheckOutcome gram_unimodular(const k0::K0Lattice& lat) {
  const std::string det = lat.gram_determinant().str();
  if (lat.mode() != k0::EqualityMode::exact) return CheckOutcome::fail("det = " + det);
  return CheckOutcome::ok("det = " + det + ", basis " + std::to_string(lat.basis().size()));
}

/// Uniform twist with 0 <= lambda_i < p_i and |ell| <= 3.
inline LElem random_twist(const Weights& w, std::mt19937_64& rng) {
  LElem t;
  for (std::size_t i = 0; i < kArity; ++i) t.lambda[i] = std::uniform_int_distribution<Int>(0, w[i] - 1)(rng);
  t.ell = std::uniform_int_distribution<Int>(-3, 3)(rng);
  return t;
}

/// chi(E, E) = 1 for every E<x>(t), x in [0, delta], t = 0 and `n_twists` seeded twists.
inline CheckOutcome exceptional_self_pairing(const Weights& w, int n_twists = 10, std::uint64_t seed = 20261019) {
  std::mt19937_64 rng(seed);
  std::vector<LElem> twists{picard::zero()};
  for (int k = 0; k < n_twists; ++k) twists.push_back(random_twist(w, rng));
  for (const LElem& x : picard::delta_box(w)) {
    for (const LElem& t : twists) {
      const K0Class e = k0::class_of_ext(w, ext::make(w, x, t));
      const Int chi = k0::euler_pairing(w, e, e);
      if (chi != 1) return CheckOutcome::fail("chi = " + std::to_string(chi) + " at " + ext::make(w, x, t).to_string());
      if (e.rank() != 4) return CheckOutcome::fail("rank != 4 at " + x.to_string());
    }
  }
  return CheckOutcome::ok();
}

/// chi(O(y), E<x>) = 0 for 0 <= y <= x <= delta.
inline CheckOutcome line_to_ext_vanishing(const Weights& w) {
  const auto box = picard::delta_box(w);
  std::size_t pairs = 0;
  for (const LElem& x : box) {
    const K0Class e = k0::class_of_ext(w, ext::make(w, x));
    for (const LElem& y : box) {
      if (!picard::leq(w, y, x)) continue;
      ++pairs;
      Int chi = 0;
      for (const auto& [deg, n] : e.terms()) chi += n * k0::euler_lines(w, y, deg);
      if (chi != 0) return CheckOutcome::fail("chi(O" + y.to_string() + ", E<" + x.to_string() + ">) = " + std::to_string(chi));
    }
  }
  return CheckOutcome::ok(std::to_string(pairs) + " pairs");
}

/// verify_triangle_class for every (x, i) with x, x + x_i in [0, delta].
inline CheckOutcome triangle_identity(const k0::K0Lattice& lat) {
  const Weights& w = lat.weights();
  std::size_t n = 0;
  for (const LElem& x : picard::delta_box(w)) {
    for (std::size_t i = 0; i < kArity; ++i) {
      if (!picard::in_delta_box(w, picard::add(w, x, picard::generator(w, i)))) continue;
      ++n;
      if (!lat.verify_triangle_class(x, i)) {
        return CheckOutcome::fail("x=" + x.to_string() + " i=" + std::to_string(i + 1));
      }
    }
  }
  return CheckOutcome::ok(std::to_string(n) + " admissible pairs");
}

/// Koszul classes vanish for every 3-subset of indices and ell_j in {1, 2}.
inline CheckOutcome koszul_vanishing(const k0::K0Lattice& lat, const LElem& base = {}) {
  static constexpr std::array<std::array<std::size_t, 3>, 4> kTriples{{{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}};
  for (const auto& idx : kTriples) {
    for (Int a = 1; a <= 2; ++a)
      for (Int b = 1; b <= 2; ++b)
        for (Int c = 1; c <= 2; ++c) {
          if (!lat.verify_koszul(base, idx, {a, b, c})) return CheckOutcome::fail("Koszul class nonzero");
        }
  }
  return CheckOutcome::ok();
}

// ---- extbundle ------------------------------------------------------------

/// i-independence of [1], [2] = (c), [4] = (2c), [1][-1] = id, E<x> ~ E<delta-x>(x-omega-c).
inline CheckOutcome suspension_coherence(const Weights& w) {
  const auto d = picard::distinguished(w);
  for (const LElem& x : picard::delta_box(w)) {
    const ExtLabel a = ext::make(w, x);
    const ExtLabel ref = ext::suspend_once(w, a, 0);
    for (std::size_t i = 1; i < kArity; ++i) {
      if (!ext::iso_equivalent(w, ref, ext::suspend_once(w, a, i)))
        return CheckOutcome::fail("[1] depends on i=" + std::to_string(i + 1) + " at " + x.to_string());
    }
    const ExtLabel twice = ext::suspend(w, ext::suspend(w, a, 1), 1);
    if (!ext::iso_equivalent(w, twice, ext::twisted(w, a, d.c))) return CheckOutcome::fail("[2] != (c) at " + x.to_string());
    for (std::size_t i = 0; i < kArity; ++i) {
      if (ext::suspend_once(w, ext::suspend_once(w, a, i), i) != ext::twisted(w, a, d.c))
        return CheckOutcome::fail("[1][1] != (c) for i=" + std::to_string(i + 1));
    }
    ExtLabel four = a;
    for (int k = 0; k < 4; ++k) four = ext::suspend_once(w, four, static_cast<std::size_t>(k) % kArity);
    if (!ext::iso_equivalent(w, four, ext::twisted(w, a, picard::scale(w, 2, d.c))))
      return CheckOutcome::fail("[4] != (2c) at " + x.to_string());
    if (ext::suspend(w, ext::suspend(w, a, 1), -1) != a) return CheckOutcome::fail("[1][-1] != id");
    const LElem z = picard::sub(w, picard::sub(w, x, d.omega), d.c);
    if (!ext::iso_equivalent(w, a, ext::make(w, picard::sub(w, d.delta, x), z)))
      return CheckOutcome::fail("E<x> !~ E<delta-x>(x-omega-c) at " + x.to_string());
  }
  return CheckOutcome::ok();
}

/// Duality is an involution, reverses twists, and swaps hulls with duals of covers.
inline CheckOutcome duality(const Weights& w) {
  const LElem c = picard::canonical(w);
  for (const LElem& x : picard::delta_box(w)) {
    for (const LElem& t : {picard::zero(), c, picard::generator(w, 0)}) {
      const ExtLabel a = ext::make(w, x, t);
      const ExtLabel dual = ext::dualize(w, a);
      if (!ext::iso_equivalent(w, ext::dualize(w, dual), a)) return CheckOutcome::fail("not an involution at " + a.to_string());
      if (ext::dualize(w, ext::twisted(w, a, c)) != ext::twisted(w, dual, picard::neg(w, c)))
        return CheckOutcome::fail("twist equivariance at " + a.to_string());
      const LineBundleMultiset cover = ext::projective_cover(w, a);
      std::vector<LElem> neg_cover;
      for (const LElem& deg : cover.degrees()) neg_cover.push_back(picard::neg(w, deg));
      if (ext::injective_hull(w, dual) != LineBundleMultiset(neg_cover))
        return CheckOutcome::fail("I(X^v) != P(X)^v at " + a.to_string());
    }
  }
  return CheckOutcome::ok();
}

/// Rule images close up into classes of size dividing 8, and isomorphic labels share a K0 class.
inline CheckOutcome iso_classes(const Weights& w, const k0::K0Lattice* lat = nullptr) {
  for (const LElem& x : picard::delta_box(w)) {
    const ExtLabel a = ext::make(w, x);
    const std::size_t size = ext::iso_class_size(w, a);
    if (8 % size != 0) return CheckOutcome::fail("class size " + std::to_string(size));
    const ExtLabel canon = ext::canonical_form(w, a);
    for (const ExtLabel& img : ext::rule_images(w, a)) {
      if (!ext::iso_equivalent(w, img, a)) return CheckOutcome::fail("asymmetric at " + img.to_string());
      if (ext::canonical_form(w, img) != canon) return CheckOutcome::fail("canonical form differs");
      if (lat && !lat->classes_equal(k0::class_of_ext(w, img), k0::class_of_ext(w, a)))
        return CheckOutcome::fail("K0 classes differ for " + img.to_string());
    }
  }
  return CheckOutcome::ok();
}

/// u_to_ext and ext_to_u are inverse bijections [s, s + delta] <-> [0, delta].
inline CheckOutcome u_correspondence(const Weights& w) {
  const auto d = picard::distinguished(w);
  const auto us = picard::box_enum(w, d.s, picard::add(w, d.s, d.delta));
  const auto box = picard::delta_box(w);
  if (us.size() != box.size()) return CheckOutcome::fail("sizes differ");
  std::vector<LElem> images;
  for (const LElem& ell : us) {
    const ExtLabel a = ext::u_to_ext(w, ell);
    if (a.twist != picard::neg(w, d.omega)) return CheckOutcome::fail("twist != -omega");
    if (ext::ext_to_u(w, a.x) != ell) return CheckOutcome::fail("round trip at " + ell.to_string());
    images.push_back(a.x);
  }
  std::sort(images.begin(), images.end());
  if (images != box) return CheckOutcome::fail("not onto [0, delta]");
  for (const LElem& x : box) {
    if (ext::u_to_ext(w, ext::ext_to_u(w, x)).x != x) return CheckOutcome::fail("round trip at " + x.to_string());
  }
  return CheckOutcome::ok();
}

// ---- hulls and covers -----------------------------------------------------

/// All labels E<x>(t), x in [0, delta], t in [-c, c].
inline std::vector<ExtLabel> label_window(const Weights& w) {
  const LElem c = picard::canonical(w);
  const auto twists = picard::box_enum(w, picard::neg(w, c), c);
  std::vector<ExtLabel> out;
  for (const LElem& x : picard::delta_box(w))
    for (const LElem& t : twists) out.push_back(ExtLabel{x, t});
  return out;
}

/// iso_equivalent <=> equal hulls <=> equal covers <=> equal canonical forms,
/// over label_window. With `pairwise` every ordered pair is tested directly;
/// otherwise the four partitions of the window are compared, which decides
/// the same statement in O(n log n).
inline CheckOutcome hull_cover_equivalence(const Weights& w, bool pairwise) {
  const auto labels = label_window(w);
  const std::size_t n = labels.size();
  std::vector<ExtLabel> canon(n);
  std::vector<LineBundleMultiset> hull(n), cover(n);
  for (std::size_t k = 0; k < n; ++k) {
    canon[k] = ext::canonical_form(w, labels[k]);
    hull[k] = ext::injective_hull(w, labels[k]);
    cover[k] = ext::projective_cover(w, labels[k]);
  }
  if (pairwise) {
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        const bool iso = ext::iso_equivalent(w, labels[a], labels[b]);
        if (iso != (hull[a] == hull[b]) || iso != (cover[a] == cover[b]) || iso != (canon[a] == canon[b])) {
          return CheckOutcome::fail(labels[a].to_string() + " vs " + labels[b].to_string());
        }
      }
    }
    return CheckOutcome::ok(std::to_string(n) + " labels, pairwise");
  }

  // Each key must induce the same partition as the canonical form: the maps
  // canon -> key and key -> canon are both well defined.
  auto same_partition = [&](const auto& key) {
    std::map<ExtLabel, std::size_t> by_canon;
    std::map<std::decay_t<decltype(key[0])>, std::size_t> by_key;
    for (std::size_t k = 0; k < n; ++k) {
      auto [ic, fresh_c] = by_canon.try_emplace(canon[k], k);
      auto [ik, fresh_k] = by_key.try_emplace(key[k], k);
      if (!fresh_c && !(key[ic->second] == key[k])) return false;
      if (!fresh_k && !(canon[ik->second] == canon[k])) return false;
    }
    return true;
  };
  std::vector<std::vector<LElem>> hull_keys(n), cover_keys(n);
  for (std::size_t k = 0; k < n; ++k) {
    hull_keys[k] = hull[k].degrees();
    cover_keys[k] = cover[k].degrees();
  }
  if (!same_partition(hull_keys)) return CheckOutcome::fail("hull partition differs from iso classes");
  if (!same_partition(cover_keys)) return CheckOutcome::fail("cover partition differs from iso classes");

  // iso_equivalent(a, .) restricted to the window is exactly the canonical class of a.
  std::map<ExtLabel, std::vector<std::size_t>> classes;
  for (std::size_t k = 0; k < n; ++k) classes[canon[k]].push_back(k);
  std::map<ExtLabel, std::size_t> index;
  for (std::size_t k = 0; k < n; ++k) index[labels[k]] = k;
  for (std::size_t a = 0; a < n; ++a) {
    std::vector<std::size_t> iso;
    for (const ExtLabel& img : ext::rule_images(w, labels[a])) {
      auto it = index.find(img);
      if (it != index.end()) iso.push_back(it->second);
    }
    std::sort(iso.begin(), iso.end());
    iso.erase(std::unique(iso.begin(), iso.end()), iso.end());
    if (iso != classes[canon[a]]) return CheckOutcome::fail("iso set of " + labels[a].to_string() + " != its class");
    for (std::size_t b : iso) {
      if (!ext::iso_equivalent(w, labels[a], labels[b])) return CheckOutcome::fail("rule image rejected");
    }
  }
  return CheckOutcome::ok(std::to_string(n) + " labels, " + std::to_string(classes.size()) + " classes");
}

/// Hom(O(d_a), O(d_b)) over an 8-element multiset is the identity matrix.
inline bool hom_orthogonal(const Weights& w, const LineBundleMultiset& m) {
  const auto& deg = m.degrees();
  for (std::size_t a = 0; a < deg.size(); ++a)
    for (std::size_t b = 0; b < deg.size(); ++b) {
      if (graded::line_ext_dims(w, deg[a], deg[b]).hom != (a == b ? 1 : 0)) return false;
    }
  return true;
}

inline CheckOutcome hull_cover_orthogonality(const Weights& w) {
  for (const LElem& x : picard::delta_box(w)) {
    for (const LElem& t : {picard::zero(), picard::distinguished(w).omega}) {
      const ExtLabel a = ext::make(w, x, t);
      const auto hull = ext::injective_hull(w, a);
      const auto cover = ext::projective_cover(w, a);
      if (hull.size() != 8 || !hom_orthogonal(w, hull)) return CheckOutcome::fail("hull of " + a.to_string());
      if (cover.size() != 8 || !hom_orthogonal(w, cover)) return CheckOutcome::fail("cover of " + a.to_string());
    }
  }
  return CheckOutcome::ok();
}

/// P(a) = I(a[-1]).
inline CheckOutcome cover_is_shifted_hull(const Weights& w) {
  for (const LElem& x : picard::delta_box(w)) {
    const ExtLabel a = ext::make(w, x);
    if (ext::projective_cover(w, a) != ext::injective_hull(w, ext::suspend(w, a, -1)))
      return CheckOutcome::fail("at " + x.to_string());
  }
  return CheckOutcome::ok();
}

// ---- stable Homs ----------------------------------------------------------

/// hom_rig(x, y, n) = hom_from_auslander(x, E(y)[n]) for x, y in [0, delta], |n| <= sigma(delta) + 4.
inline CheckOutcome homrig_crosscheck(const Weights& w) {
  const auto box = picard::delta_box(w);
  const Int bound = stablehom::default_shift_bound(w);
  std::size_t nonzero = 0;
  for (const LElem& x : box)
    for (const LElem& y : box)
      for (Int n = -bound; n <= bound; ++n) {
        const Int closed = stablehom::hom_rig(w, x, y, n);
        const Int engine = stablehom::hom_from_auslander(w, x, StableObj{ext::make(w, picard::zero(), y), n});
        if (closed != engine) {
          return CheckOutcome::fail("x=" + x.to_string() + " y=" + y.to_string() + " n=" + std::to_string(n) +
                                    ": closed " + std::to_string(closed) + " engine " + std::to_string(engine));
        }
        nonzero += closed != 0;
      }
  return CheckOutcome::ok(std::to_string(nonzero) + " nonzero entries");
}

inline CheckOutcome rigidity(const Weights& w) {
  return stablehom::rigidity_check(w) ? CheckOutcome::ok() : CheckOutcome::fail("Hom(T, T[n]) != 0 for some n != 0");
}

// ---- tilting --------------------------------------------------------------

inline Int factor_total(const Weights& w, const Truncation& q) {
  Int prod = 1;
  for (std::size_t i = 0; i < kArity; ++i) {
    const Int n = w[i] - 1;
    Int dim = 0;
    for (Int a = 0; a < n; ++a) dim += std::min<Int>(a + 1, q[i]);
    prod *= dim;
  }
  return prod;
}

inline CheckOutcome quiver_structure(const Weights& w, const Truncation& q) {
  if (!tilting::tensor_factor_check(w, q)) return CheckOutcome::fail("Cartan matrix differs from tensor product");
  const auto pres = tilting::quiver_presentation(w, q);
  const auto cartan = tilting::cartan_matrix(w, q);
  if (static_cast<Int>(pres.vertices.size()) != picard::delta_box_size(w)) return CheckOutcome::fail("vertex count");
  Int arrows = 0;
  for (std::size_t i = 0; i < kArity; ++i) {
    Int term = w[i] - 2;
    for (std::size_t j = 0; j < kArity; ++j)
      if (j != i) term *= w[j] - 1;
    arrows += term;
  }
  if (static_cast<Int>(pres.arrows.size()) != arrows) return CheckOutcome::fail("arrow count");
  for (const auto& a : pres.arrows) {
    if (picard::sigma(w, pres.vertices[a.to]) != picard::sigma(w, pres.vertices[a.from]) + 1)
      return CheckOutcome::fail("arrow does not raise sigma by one");
  }
  for (std::size_t k = 0; k < cartan.dims.size(); ++k) {
    if (cartan.dims[k][k] != 1) return CheckOutcome::fail("diagonal entry != 1");
  }
  const Int total = cartan.total_dimension();
  if (total != factor_total(w, q)) return CheckOutcome::fail("total dimension " + std::to_string(total));
  const BigInt det = detail::bareiss_determinant(cartan.dims);
  if (abs(det) != 1) return CheckOutcome::fail("det = " + det.str());
  return CheckOutcome::ok("total dimension " + std::to_string(total));
}

// ---- orbits ---------------------------------------------------------------

/// The stated list of transitive quadruples: sorted weights (2,2,2,2), (2,2,2,3) or (2,2,3,3).
inline bool transitive_listed(const Weights& w) {
  auto p = w.values();
  std::sort(p.begin(), p.end());
  return p == std::array<int, kArity>{2, 2, 2, 2} || p == std::array<int, kArity>{2, 2, 2, 3} ||
         p == std::array<int, kArity>{2, 2, 3, 3};
}

/// Where the closed orbit count equals one: every p_i <= 3 and some p_i = 2.
/// With k weights equal to 2 the formula sums 2^(k-1) terms of 2^(4-k); any
/// p_i >= 4 leaves at least two orbits on the i-th coordinate. Unlike the
/// stated list this includes the permutations of (2,3,3,3).
inline bool transitive_by_formula(const Weights& w) {
  bool has_two = false;
  for (int p : w.values()) {
    if (p > 3) return false;
    has_two = has_two || p == 2;
  }
  return has_two;
}

inline CheckOutcome orbit_report(const Weights& w) {
  const OrbitReport r = orbits::burnside_count(w);
  if (r.fixed_total % 8 != 0) return CheckOutcome::fail("fixed-point total not divisible by 8");
  if (r.burnside != r.closed_formula) {
    return CheckOutcome::fail("burnside " + std::to_string(r.burnside) + " vs closed " + std::to_string(r.closed_formula));
  }
  if (static_cast<Int>(r.orbits.size()) != r.burnside) return CheckOutcome::fail("orbit list size");
  Int members = 0;
  for (const auto& o : r.orbits) members += static_cast<Int>(o.size());
  if (members != picard::delta_box_size(w)) return CheckOutcome::fail("orbit sizes do not sum to |[0,delta]|");
  for (const auto& [set, n] : r.fixed_counts) {
    if (n != orbits::fixed_count_formula(w, set)) return CheckOutcome::fail("fixed set of " + index_set_to_string(set));
  }
  if ((r.burnside == 1) != transitive_by_formula(w)) return CheckOutcome::fail("transitivity classification");
  return CheckOutcome::ok(std::to_string(r.burnside) + " orbits");
}

/// The eight sigma_I are involutions, commute, and are closed under composition.
inline CheckOutcome sigma_group(const Weights& w) {
  for (const LElem& x : picard::delta_box(w)) {
    for (IndexSet a : kEvenSubsets) {
      const LElem ax = orbits::sigma_action(w, a, x);
      if (orbits::sigma_action(w, a, ax) != x) return CheckOutcome::fail("not an involution");
      for (IndexSet b : kEvenSubsets) {
        const LElem abx = orbits::sigma_action(w, a, orbits::sigma_action(w, b, x));
        if (abx != orbits::sigma_action(w, b, ax)) return CheckOutcome::fail("not commutative");
        bool closed = false;
        for (IndexSet c : kEvenSubsets) closed = closed || orbits::sigma_action(w, c, x) == abx;
        if (!closed) return CheckOutcome::fail("not closed");
      }
    }
  }
  return CheckOutcome::ok();
}

/// Same orbit <=> E<x> and E<y> differ by a twist up to isomorphism.
inline CheckOutcome orbit_iso_agreement(const Weights& w) {
  const OrbitReport r = orbits::burnside_count(w);
  std::map<LElem, std::size_t> orbit_of;
  for (std::size_t k = 0; k < r.orbits.size(); ++k)
    for (const LElem& x : r.orbits[k]) orbit_of[x] = k;
  for (const auto& [x, ox] : orbit_of) {
    std::set<LElem> reachable;
    for (const ExtLabel& img : ext::rule_images(w, ext::make(w, x))) reachable.insert(img.x);
    for (const auto& [y, oy] : orbit_of) {
      // E<y>(z) ~ E<x> for some z iff y is the x-part of a rule image.
      if ((ox == oy) != (reachable.count(y) > 0)) return CheckOutcome::fail("at " + x.to_string() + ", " + y.to_string());
    }
  }
  return CheckOutcome::ok();
}

}  // namespace checks
}  // namespace glacm
