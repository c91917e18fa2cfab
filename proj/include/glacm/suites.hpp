#pragma once

// Named verification suites over one weight quadruple (or, for
// "orbit-sweep", over all quadruples with 2 <= p_i <= bound).

#include <chrono>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "glacm/checks.hpp"

namespace glacm {

struct SuiteCheck {
  std::string name;
  bool pass = true;
  std::string detail;
};

struct SuiteResult {
  std::string suite;
  std::string weights;  ///< "p1,p2,p3,p4", or "2..bound" for the sweep
  std::vector<SuiteCheck> checks;
  double elapsed_ms = 0;

  bool passed() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

namespace suites {

inline const std::vector<std::string>& names() {
  static const std::vector<std::string> kNames{"picard",           "graded-oracle", "k0-gram",       "extbundle-iso",
                                               "hulls-covers",     "homrig-crosscheck", "rigidity", "quiver-cartan",
                                               "orbit-sweep",      "all"};
  return kNames;
}

namespace detail {

inline void record(SuiteResult& r, const std::string& name, const std::function<CheckOutcome()>& run) {
  CheckOutcome out;
  try {
    out = run();
  } catch (const std::exception& e) {
    out = CheckOutcome::fail(std::string("exception: ") + e.what());
  }
  r.checks.push_back(SuiteCheck{name, out.pass, out.detail});
}

/// Pairwise comparison is quadratic in the label window; above this many
/// labels the partition comparison is used instead.
inline constexpr std::size_t kPairwiseLimit = 600;

inline void add_suite(SuiteResult& r, const std::string& name, const Weights& w) {
  if (name == "picard") {
    record(r, "distinguished-elements", [&] { return checks::distinguished_elements(w); });
    record(r, "group-laws", [&] { return checks::group_laws(w); });
    record(r, "partial-order", [&] { return checks::partial_order(w); });
    record(r, "delta-box", [&] { return checks::box_shape(w); });
  } else if (name == "graded-oracle") {
    record(r, "dim-r-oracle", [&] { return checks::dim_r_oracle(w); });
    record(r, "serre-duality", [&] { return checks::serre_duality(w); });
    record(r, "truncation-bounds", [&] { return checks::truncation_bounds(w); });
  } else if (name == "k0-gram") {
    const k0::K0Lattice lat(w);
    record(r, "gram-unimodular", [&] { return checks::gram_unimodular(lat); });
    record(r, "self-pairing", [&] { return checks::exceptional_self_pairing(w); });
    record(r, "line-vanishing", [&] { return checks::line_to_ext_vanishing(w); });
    record(r, "triangle-identity", [&] { return checks::triangle_identity(lat); });
    record(r, "koszul-vanishing", [&] { return checks::koszul_vanishing(lat); });
    record(r, "iso-implies-equal-class", [&] { return checks::iso_classes(w, &lat); });
  } else if (name == "extbundle-iso") {
    record(r, "suspension-coherence", [&] { return checks::suspension_coherence(w); });
    record(r, "duality", [&] { return checks::duality(w); });
    record(r, "iso-classes", [&] { return checks::iso_classes(w); });
    record(r, "u-correspondence", [&] { return checks::u_correspondence(w); });
  } else if (name == "hulls-covers") {
    record(r, "hull-cover-equivalence", [&] {
      const bool pairwise = checks::label_window(w).size() <= kPairwiseLimit;
      return checks::hull_cover_equivalence(w, pairwise);
    });
    record(r, "hom-orthogonality", [&] { return checks::hull_cover_orthogonality(w); });
    record(r, "cover-is-shifted-hull", [&] { return checks::cover_is_shifted_hull(w); });
  } else if (name == "homrig-crosscheck") {
    record(r, "homrig-crosscheck", [&] { return checks::homrig_crosscheck(w); });
  } else if (name == "rigidity") {
    record(r, "rigidity", [&] { return checks::rigidity(w); });
  } else if (name == "quiver-cartan") {
    record(r, "quiver-q2222", [&] { return checks::quiver_structure(w, Truncation::square_zero(w)); });
    record(r, "quiver-q=p", [&] { return checks::quiver_structure(w, Truncation::full(w)); });
  } else if (name == "orbits") {
    record(r, "orbit-report", [&] { return checks::orbit_report(w); });
    record(r, "sigma-group", [&] { return checks::sigma_group(w); });
    record(r, "orbit-iso-agreement", [&] { return checks::orbit_iso_agreement(w); });
  } else {
    throw std::invalid_argument("unknown suite '" + name + "'");
  }
}

}  // namespace detail

/// Burnside count vs closed formula and the transitivity classification for
/// every quadruple with 2 <= p_i <= bound.
inline SuiteResult run_orbit_sweep(int bound) {
  const auto start = std::chrono::steady_clock::now();
  SuiteResult r;
  r.suite = "orbit-sweep";
  r.weights = "2.." + std::to_string(bound);
  const auto tuples = checks::weight_sweep(bound);
  std::size_t formula_fail = 0, transit_fail = 0, partition_fail = 0, transitive = 0, unlisted = 0;
  std::string first_formula, first_transit, first_partition;
  for (const Weights& w : tuples) {
    const OrbitReport rep = orbits::burnside_count(w);
    if (rep.fixed_total % 8 != 0 || rep.burnside != rep.closed_formula) {
      if (formula_fail++ == 0) first_formula = w.to_string();
    }
    const bool trans = rep.burnside == 1;
    transitive += trans;
    unlisted += trans && !checks::transitive_listed(w);
    if (trans != checks::transitive_by_formula(w)) {
      if (transit_fail++ == 0) first_transit = w.to_string();
    }
    Int members = 0;
    for (const auto& o : rep.orbits) members += static_cast<Int>(o.size());
    if (members != picard::delta_box_size(w) || static_cast<Int>(rep.orbits.size()) != rep.burnside) {
      if (partition_fail++ == 0) first_partition = w.to_string();
    }
  }
  const std::string n = std::to_string(tuples.size()) + " tuples";
  r.checks.push_back({"burnside=closed-formula", formula_fail == 0,
                      formula_fail ? "first failure " + first_formula : n});
  r.checks.push_back({"transitivity-classification", transit_fail == 0,
                      transit_fail ? "first failure " + first_transit
                                   : std::to_string(transitive) + " transitive, " + std::to_string(unlisted) +
                                         " outside the (2,2,2,2)/(2,2,2,3)/(2,2,3,3) list"});
  r.checks.push_back({"orbit-partition", partition_fail == 0, partition_fail ? "first failure " + first_partition : n});
  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

/// Runs suite `name` for weights `w`. "orbit-sweep" uses `sweep_bound`;
/// "all" runs every per-tuple suite plus the orbit checks for `w`.
inline SuiteResult run_suite(const std::string& name, const Weights& w, int sweep_bound = 7) {
  if (name == "orbit-sweep") return run_orbit_sweep(sweep_bound);
  const auto start = std::chrono::steady_clock::now();
  SuiteResult r;
  r.suite = name;
  r.weights = w.to_string();
  if (name == "all") {
    for (const std::string& s : names()) {
      if (s == "all" || s == "orbit-sweep") continue;
      detail::add_suite(r, s, w);
    }
    detail::add_suite(r, "orbits", w);
  } else {
    detail::add_suite(r, name, w);
  }
  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace suites
}  // namespace glacm
