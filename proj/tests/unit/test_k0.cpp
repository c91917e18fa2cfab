#include <gtest/gtest.h>

#include <cmath>

#include "glacm/k0.hpp"

namespace glacm {
namespace {

// Floating-point LU with partial pivoting, rounded; fine for the small
// unimodular matrices used here.
long long float_det(const IntMatrix& m) {
  const std::size_t n = m.size();
  std::vector<std::vector<double>> a(n, std::vector<double>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = static_cast<double>(m[i][j]);
  double det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    for (std::size_t r = k + 1; r < n; ++r)
      if (std::fabs(a[r][k]) > std::fabs(a[piv][k])) piv = r;
    if (a[piv][k] == 0) return 0;
    if (piv != k) {
      std::swap(a[piv], a[k]);
      det = -det;
    }
    det *= a[k][k];
    for (std::size_t r = k + 1; r < n; ++r) {
      const double f = a[r][k] / a[k][k];
      for (std::size_t j = k; j < n; ++j) a[r][j] -= f * a[k][j];
    }
  }
  return std::llround(det);
}

TEST(Bareiss, MatchesKnownDeterminants) {
  EXPECT_EQ(detail::bareiss_determinant({}), 1);
  EXPECT_EQ(detail::bareiss_determinant({{0, 1}, {1, 0}}), -1);
  EXPECT_EQ(detail::bareiss_determinant({{2, 0, 1}, {1, 3, 2}, {1, 1, 2}}), 6);
  EXPECT_EQ(detail::bareiss_determinant({{1, 2}, {2, 4}}), 0);
  EXPECT_THROW(detail::bareiss_determinant({{1, 2}}), std::invalid_argument);
}

TEST(Gram, DeterminantAgreesWithFloatingPoint) {
  for (const Weights& w : {Weights(), Weights({2, 2, 2, 3}), Weights({2, 2, 3, 3})}) {
    const IntMatrix g = k0::gram_matrix(w, k0::canonical_basis(w));
    EXPECT_EQ(k0::gram_determinant(w), float_det(g)) << w.to_string();
  }
}

TEST(Gram, UnimodularOnListedTuples) {
  for (const Weights& w : {Weights(), Weights({2, 2, 2, 3}), Weights({2, 3, 4, 5}), Weights({3, 3, 3, 3})}) {
    EXPECT_EQ(abs(k0::gram_determinant(w)), 1) << w.to_string();
  }
  EXPECT_EQ(k0::canonical_basis(Weights()).size(), 17u);
}

TEST(K0Class, Arithmetic) {
  const Weights w({2, 3, 4, 5});
  const LElem x1 = picard::generator(w, 0);
  K0Class a = K0Class::line(x1, 2);
  a.add_term(x1, -2);
  EXPECT_TRUE(a.empty());
  const K0Class b = K0Class::line(x1) + K0Class::line(picard::zero(), 3);
  EXPECT_EQ(b.rank(), 4);
  EXPECT_EQ((b - b), K0Class{});
  EXPECT_EQ((2 * b).rank(), 8);
  EXPECT_EQ(b.twisted(w, picard::neg(w, x1)).terms().count(picard::zero()), 1u);
}

TEST(Euler, LineBundles) {
  const Weights w({3, 3, 3, 3});
  EXPECT_EQ(k0::euler_lines(w, picard::zero(), picard::zero()), 1);
  // chi(O, O(omega)) = dim Ext^2 = 1.
  EXPECT_EQ(k0::euler_lines(w, picard::zero(), picard::distinguished(w).omega), 1);
  EXPECT_EQ(k0::euler_lines(w, picard::zero(), picard::canonical(w)), 3);
}

TEST(ClassOfExt, RankAndSelfPairing) {
  const Weights w({2, 3, 4, 5});
  for (const LElem& x : picard::delta_box(w)) {
    const K0Class e = k0::class_of_ext(w, ext::make(w, x, picard::generator(w, 2)));
    EXPECT_EQ(e.rank(), 4);
    EXPECT_EQ(k0::euler_pairing(w, e, e), 1);
  }
}

TEST(Lattice, ModeAndEquality) {
  const Weights w({2, 3, 4, 5});
  const k0::K0Lattice lat(w);
  EXPECT_EQ(lat.mode(), k0::EqualityMode::exact);
  EXPECT_FALSE(lat.classes_equal(K0Class::line(picard::zero()), K0Class::line(picard::generator(w, 0))));
  EXPECT_TRUE(lat.classes_equal(K0Class::line(picard::zero()), K0Class::line(picard::zero())));
}

TEST(Lattice, KoszulClassIsZeroButNotSyntacticallyEmpty) {
  const Weights w({2, 3, 4, 5});
  const k0::K0Lattice lat(w);
  const K0Class k = k0::koszul_class(w, picard::generator(w, 3), {0, 1, 3}, {1, 2, 1});
  EXPECT_FALSE(k.empty());
  EXPECT_TRUE(lat.is_zero(k));
  EXPECT_TRUE(lat.verify_koszul(picard::zero(), {1, 2, 3}, {2, 2, 2}));
}

TEST(Lattice, KoszulValidation) {
  const Weights w;
  EXPECT_THROW(k0::koszul_class(w, {}, {0, 0, 1}, {1, 1, 1}), DomainError);
  EXPECT_THROW(k0::koszul_class(w, {}, {0, 1, 4}, {1, 1, 1}), DomainError);
  EXPECT_THROW(k0::koszul_class(w, {}, {0, 1, 2}, {1, 0, 1}), DomainError);
}

TEST(Lattice, TriangleIdentity) {
  const Weights w({3, 3, 4, 5});
  const k0::K0Lattice lat(w);
  int admissible = 0;
  for (const LElem& x : picard::delta_box(w))
    for (std::size_t i = 0; i < kArity; ++i) {
      if (!picard::in_delta_box(w, picard::add(w, x, picard::generator(w, i)))) {
        EXPECT_THROW(lat.verify_triangle_class(x, i), DomainError);
        continue;
      }
      ++admissible;
      EXPECT_TRUE(lat.verify_triangle_class(x, i)) << x.to_string() << " i=" << i;
    }
  // sum_i (p_i - 2) prod_{j != i} (p_j - 1) = 24 + 24 + 32 + 36.
  EXPECT_EQ(admissible, 116);
}

TEST(Lattice, TriangleIdentityDetectsWrongCone) {
  // Without the line-bundle correction terms the identity fails.
  const Weights w({3, 3, 3, 3});
  const k0::K0Lattice lat(w);
  const LElem x = picard::zero();
  const K0Class cone = k0::class_of_ext(w, ext::make(w, x, picard::generator(w, 0)));
  const K0Class rhs = k0::class_of_ext(w, ext::make(w, picard::generator(w, 0))) - k0::class_of_ext(w, ext::make(w, x));
  EXPECT_FALSE(lat.classes_equal(cone, rhs));
}

TEST(Lattice, VanishingOfLineToExt) {
  const Weights w({3, 3, 4, 4});
  for (const LElem& x : picard::delta_box(w)) {
    const K0Class e = k0::class_of_ext(w, ext::make(w, x));
    for (const LElem& y : picard::delta_box(w)) {
      if (picard::leq(w, y, x)) {
        EXPECT_EQ(k0::euler_pairing(w, K0Class::line(y), e), 0);
      }
    }
  }
}

}  // namespace
}  // namespace glacm
