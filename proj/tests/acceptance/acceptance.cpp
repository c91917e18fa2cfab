// Acceptance driver: one PASS/FAIL line per criterion, exit code 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "glacm/checks.hpp"
#include "glacm/k0.hpp"
#include "glacm/orbits.hpp"
#include "glacm/tilting.hpp"

namespace {

using glacm::CheckOutcome;
using glacm::Int;
using glacm::Truncation;
using glacm::Weights;
namespace checks = glacm::checks;

Weights W(int a, int b, int c, int d) { return Weights({a, b, c, d}); }

/// Runs `check` on every tuple; stops at the first failure.
CheckOutcome over(const std::vector<Weights>& tuples, const std::function<CheckOutcome(const Weights&)>& check) {
  for (const Weights& w : tuples) {
    const CheckOutcome r = check(w);
    if (!r.pass) return CheckOutcome::fail("weights " + w.to_string() + ": " + r.detail);
  }
  return CheckOutcome::ok(std::to_string(tuples.size()) + " tuples");
}

CheckOutcome ac1() {
  const auto tuples = checks::weight_sweep(7);
  for (const Weights& w : tuples) {
    const auto r = glacm::orbits::burnside_count(w);
    if (r.fixed_total % 8 != 0 || r.burnside != r.closed_formula) {
      return CheckOutcome::fail(w.to_string() + ": burnside " + std::to_string(r.burnside) + " closed " +
                                std::to_string(r.closed_formula));
    }
  }
  if (tuples.size() != 1296) return CheckOutcome::fail("sweep has " + std::to_string(tuples.size()) + " tuples");
  return CheckOutcome::ok("1296 tuples");
}

CheckOutcome ac2() {
  std::size_t transitive = 0;
  std::string mismatches;
  for (const Weights& w : checks::weight_sweep(7)) {
    const bool t = glacm::orbits::is_transitive(w);
    transitive += t;
    if (t != checks::transitive_listed(w)) mismatches += (mismatches.empty() ? "" : " ") + w.to_string();
  }
  if (!mismatches.empty()) {
    return CheckOutcome::fail(std::to_string(transitive) + " transitive tuples; not in the stated list: " + mismatches);
  }
  return CheckOutcome::ok(std::to_string(transitive) + " transitive tuples");
}

CheckOutcome ac3() {
  const std::vector<Weights> tuples{W(2, 2, 2, 2), W(2, 2, 2, 3), W(2, 2, 3, 3), W(2, 3, 4, 5), W(3, 3, 3, 3),
                                    W(5, 5, 5, 5), W(9, 9, 9, 9), W(2, 9, 2, 9), W(3, 5, 7, 9), W(9, 8, 7, 6),
                                    W(4, 4, 4, 4), W(2, 2, 2, 9), W(6, 6, 6, 6), W(7, 2, 5, 3), W(8, 8, 2, 2),
                                    W(3, 4, 5, 6), W(2, 3, 3, 7), W(5, 6, 7, 8), W(9, 2, 4, 6), W(7, 7, 7, 7)};
  return over(tuples, checks::dim_r_oracle);
}

CheckOutcome ac4() {
  for (const Weights& w : {W(2, 2, 2, 2), W(2, 2, 2, 3), W(2, 3, 4, 5), W(3, 3, 3, 3), W(5, 5, 5, 5)}) {
    const auto det = glacm::k0::gram_determinant(w);
    if (abs(det) != 1) return CheckOutcome::fail(w.to_string() + ": det " + det.str());
  }
  return CheckOutcome::ok("5 tuples");
}

CheckOutcome ac5() {
  return over(checks::weight_sweep(7), [](const Weights& w) {
    const CheckOutcome self = checks::exceptional_self_pairing(w, 10);
    if (!self.pass) return self;
    return checks::line_to_ext_vanishing(w);
  });
}

CheckOutcome ac6() { return over(checks::weight_sweep(7), checks::suspension_coherence); }

CheckOutcome ac7() {
  std::size_t pairwise = 0;
  const auto tuples = checks::small_box_sweep(64);
  for (const Weights& w : tuples) {
    const bool full = checks::label_window(w).size() <= 600;
    pairwise += full;
    const CheckOutcome r = checks::hull_cover_equivalence(w, full);
    if (!r.pass) return CheckOutcome::fail(w.to_string() + ": " + r.detail);
  }
  return CheckOutcome::ok(std::to_string(tuples.size()) + " tuples, " + std::to_string(pairwise) + " pairwise");
}

CheckOutcome ac8() { return over(checks::weight_sweep(7), checks::hull_cover_orthogonality); }

const std::vector<Weights>& stable_tuples() {
  static const std::vector<Weights> t{W(2, 3, 4, 5), W(3, 3, 3, 3), W(2, 2, 3, 5)};
  return t;
}

CheckOutcome ac9() { return over(stable_tuples(), checks::homrig_crosscheck); }

CheckOutcome ac10() { return over(stable_tuples(), checks::rigidity); }

CheckOutcome ac11() {
  auto tuples = checks::weight_sweep(4);
  for (const Weights& w : {W(2, 3, 4, 5), W(5, 5, 5, 5), W(2, 2, 3, 7)}) tuples.push_back(w);
  return over(tuples, [](const Weights& w) {
    const glacm::k0::K0Lattice lat(w);
    const CheckOutcome tri = checks::triangle_identity(lat);
    if (!tri.pass) return tri;
    return checks::koszul_vanishing(lat);
  });
}

CheckOutcome ac12() {
  for (const Weights& w : {W(2, 2, 2, 4), W(2, 2, 2, 3), W(3, 3, 3, 3), W(2, 3, 4, 5)}) {
    for (const Truncation& q : {Truncation::square_zero(w), Truncation::full(w)}) {
      const CheckOutcome r = checks::quiver_structure(w, q);
      if (!r.pass) return CheckOutcome::fail(w.to_string() + ": " + r.detail);
    }
  }
  const Weights w = W(3, 3, 3, 3);
  const Int total = glacm::tilting::cartan_matrix(w, Truncation::square_zero(w)).total_dimension();
  if (total != 81) return CheckOutcome::fail("total dim for (3,3,3,3), q=2: " + std::to_string(total));
  return CheckOutcome::ok("4 tuples x 2 truncations");
}

CheckOutcome ac13() { return over(checks::weight_sweep(7), checks::u_correspondence); }

}  // namespace

int main() {
  struct Criterion {
    const char* id;
    const char* name;
    CheckOutcome (*run)();
  };
  const Criterion criteria[] = {
      {"AC1", "orbit formula", ac1},
      {"AC2", "transitivity", ac2},
      {"AC3", "graded-dimension oracle", ac3},
      {"AC4", "Euler Gram unimodularity", ac4},
      {"AC5", "exceptionality at chi level", ac5},
      {"AC6", "suspension coherence", ac6},
      {"AC7", "hull/cover equivalence", ac7},
      {"AC8", "hom-orthogonality", ac8},
      {"AC9", "hom.rig cross-check", ac9},
      {"AC10", "rigidity", ac10},
      {"AC11", "K0 triangle identity and Koszul classes", ac11},
      {"AC12", "Lambda(q) structure", ac12},
      {"AC13", "U correspondence", ac13},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    CheckOutcome r;
    try {
      r = c.run();
    } catch (const std::exception& e) {
      r = CheckOutcome::fail(std::string("exception: ") + e.what());
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    failures += !r.pass;
    std::printf("%s %-5s %s: %s (%.0f ms)\n", r.pass ? "PASS" : "FAIL", c.id, c.name, r.detail.c_str(), ms);
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
