#pragma once

// Brute-force monomial counting for R = k[X1..X4]/(sum X_i^{p_i}).
//
// Using X_1^{p_1} as leading term of the relation, the monomials with
// a_1 < p_1 form a k-basis of R. This counter enumerates all of them up to a
// degree bound and buckets them by degree. It never calls graded::dim_R and
// serves as the independent check of its closed form.

#include <stdexcept>
#include <unordered_map>

#include "glacm/picard.hpp"

namespace glacm::oracle {

class MonomialCounter {
 public:
  /// Counts every basis monomial whose degree has ell <= max_ell.
  MonomialCounter(const Weights& w, Int max_ell) : weights_(w), max_ell_(max_ell) {
    // floor(a_i / p_i) contributes to ell, so a_i < p_i (max_ell + 1) is enough.
    std::array<Int, kArity> bound{};
    bound[0] = w[0];
    for (std::size_t i = 1; i < kArity; ++i) bound[i] = Int{w[i]} * (max_ell + 1);
    std::array<Int, kArity> a{};
    for (a[0] = 0; a[0] < bound[0]; ++a[0]) {
      for (a[1] = 0; a[1] < bound[1]; ++a[1]) {
        for (a[2] = 0; a[2] < bound[2]; ++a[2]) {
          for (a[3] = 0; a[3] < bound[3]; ++a[3]) {
            const LElem deg = picard::normalize(w, a, 0);
            if (deg.ell <= max_ell) ++counts_[deg];
          }
        }
      }
    }
  }

  Int count(const LElem& x) const {
    picard::require_context(weights_, x);
    if (x.ell > max_ell_) throw std::out_of_range("degree " + x.to_string() + " beyond counter bound");
    auto it = counts_.find(x);
    return it == counts_.end() ? 0 : it->second;
  }

  Int max_ell() const { return max_ell_; }

 private:
  Weights weights_;
  Int max_ell_;
  std::unordered_map<LElem, Int, LElemHash> counts_;
};

}  // namespace glacm::oracle
