#pragma once

// The reflections sigma_I (I an even subset of {1,2,3,4}) acting on [0, delta],
// orbit counting by the Burnside formula, and the closed count
//   (1/8) sum_{I subset J, |I| even} prod_{i not in I} (p_i - 1),
// J = { i : p_i even }.

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <vector>

#include "glacm/extbundle.hpp"
#include "glacm/picard.hpp"

namespace glacm {

struct OrbitReport {
  Weights weights;
  std::map<IndexSet, Int> fixed_counts;  ///< |S^{sigma_I}| for each even I
  Int fixed_total = 0;                   ///< sum of fixed_counts
  Int burnside = 0;                      ///< fixed_total / 8
  Int closed_formula = 0;
  std::vector<std::vector<LElem>> orbits;  ///< members sorted; orbits ordered by least member
  std::size_t faithful_order = 0;          ///< number of distinct maps among the eight sigma_I
};

namespace orbits {

inline LElem sigma_action(const Weights& w, IndexSet set, const LElem& x) {
  if (!is_even_subset(set)) throw DomainError("sigma_I needs an even subset, got " + index_set_to_string(set));
  return ext::reflect(w, x, set);
}

/// |S^{sigma_I}| from the fixed-point description: lambda_i = (p_i - 2)/2 on I.
inline Int fixed_count_formula(const Weights& w, IndexSet set) {
  Int prod = 1;
  for (std::size_t i = 0; i < kArity; ++i) {
    if (set & (1u << i)) {
      if (w[i] % 2 != 0) return 0;
    } else {
      prod *= w[i] - 1;
    }
  }
  return prod;
}

/// 8 * (closed orbit count).
inline Int closed_formula_times8(const Weights& w) {
  Int sum = 0;
  for (IndexSet set : kEvenSubsets) sum += fixed_count_formula(w, set);
  return sum;
}

inline Int closed_formula(const Weights& w) { return closed_formula_times8(w) / 8; }

inline OrbitReport burnside_count(const Weights& w) {
  OrbitReport r;
  r.weights = w;
  const auto box = picard::delta_box(w);

  std::set<std::vector<LElem>> maps;
  for (IndexSet set : kEvenSubsets) {
    std::vector<LElem> image;
    image.reserve(box.size());
    Int fixed = 0;
    for (const LElem& x : box) {
      image.push_back(sigma_action(w, set, x));
      if (image.back() == x) ++fixed;
    }
    r.fixed_counts[set] = fixed;
    r.fixed_total += fixed;
    maps.insert(std::move(image));
  }
  r.faithful_order = maps.size();
  r.burnside = r.fixed_total / 8;
  r.closed_formula = closed_formula(w);

  std::set<LElem> placed;
  for (const LElem& x : box) {
    if (placed.count(x)) continue;
    std::set<LElem> orbit;
    for (IndexSet set : kEvenSubsets) orbit.insert(sigma_action(w, set, x));
    placed.insert(orbit.begin(), orbit.end());
    r.orbits.emplace_back(orbit.begin(), orbit.end());
  }
  return r;
}

inline bool is_transitive(const Weights& w) { return burnside_count(w).burnside == 1; }

}  // namespace orbits
}  // namespace glacm
