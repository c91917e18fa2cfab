#include <gtest/gtest.h>

#include <set>

#include "glacm/picard.hpp"

namespace glacm {
namespace {

const Weights k2345({2, 3, 4, 5});

LElem L(Int a, Int b, Int c, Int d, Int ell) { return LElem{{a, b, c, d}, ell}; }

TEST(Weights, RejectsWeightBelowTwo) {
  EXPECT_THROW(Weights({1, 3, 3, 3}), DomainError);
  EXPECT_THROW(Weights({3, 3, 3, 0}), DomainError);
  EXPECT_EQ(Weights({2, 3, 4, 5}).to_string(), "2,3,4,5");
  EXPECT_EQ(Weights().to_string(), "2,2,2,2");
}

TEST(Picard, NormalizeCarriesIntoEll) {
  EXPECT_EQ(picard::normalize(k2345, {3, 0, 0, 0}, 0), L(1, 0, 0, 0, 1));
  EXPECT_EQ(picard::normalize(k2345, {-1, 0, 0, 0}, 0), L(1, 0, 0, 0, -1));
  EXPECT_EQ(picard::normalize(k2345, {0, 7, -4, 5}, 2), L(0, 1, 0, 0, 4));
}

TEST(Picard, GeneratorsSatisfyRelations) {
  for (std::size_t i = 0; i < kArity; ++i) {
    EXPECT_EQ(picard::scale(k2345, k2345[i], picard::generator(k2345, i)), picard::canonical(k2345));
  }
}

TEST(Picard, DistinguishedElements) {
  const auto d = picard::distinguished(k2345);
  EXPECT_EQ(d.c, L(0, 0, 0, 0, 1));
  EXPECT_EQ(d.omega, L(1, 2, 3, 4, -3));
  EXPECT_EQ(d.delta, L(0, 1, 2, 3, 0));
  EXPECT_EQ(d.s, L(1, 1, 1, 1, 0));
  EXPECT_EQ(picard::add(k2345, picard::scale(k2345, 2, d.c), picard::scale(k2345, 2, d.omega)), d.delta);
}

TEST(Picard, GroupLaws) {
  const LElem a = L(1, 2, 0, 3, -1), b = L(0, 1, 3, 4, 2), c = L(1, 0, 1, 1, 0);
  EXPECT_EQ(picard::add(k2345, a, b), picard::add(k2345, b, a));
  EXPECT_EQ(picard::add(k2345, picard::add(k2345, a, b), c), picard::add(k2345, a, picard::add(k2345, b, c)));
  EXPECT_EQ(picard::add(k2345, a, picard::neg(k2345, a)), picard::zero());
  EXPECT_EQ(picard::sub(k2345, a, a), picard::zero());
  EXPECT_EQ(picard::scale(k2345, -3, a), picard::neg(k2345, picard::scale(k2345, 3, a)));
}

TEST(Picard, PartialOrder) {
  const LElem x1 = picard::generator(k2345, 0), x2 = picard::generator(k2345, 1);
  EXPECT_TRUE(picard::leq(k2345, picard::zero(), x1));
  EXPECT_FALSE(picard::leq(k2345, x1, picard::zero()));
  // x1 and x2 are incomparable.
  EXPECT_FALSE(picard::leq(k2345, x1, x2));
  EXPECT_FALSE(picard::leq(k2345, x2, x1));
  EXPECT_TRUE(picard::leq(k2345, x1, picard::canonical(k2345)));
}

TEST(Picard, ForeignValuesAreRejected) {
  EXPECT_THROW(picard::add(k2345, L(2, 0, 0, 0, 0), picard::zero()), ContextError);
  EXPECT_THROW(picard::leq(k2345, L(0, 0, 0, 5, 0), picard::zero()), ContextError);
  EXPECT_THROW(picard::add(k2345, L(-1, 0, 0, 0, 0), picard::zero()), ContextError);
}

TEST(Picard, DeltaBox) {
  EXPECT_EQ(picard::delta_box_size(k2345), 24);
  EXPECT_EQ(picard::delta_box(k2345).size(), 24u);
  EXPECT_EQ(picard::delta_box(Weights()).size(), 1u);
  EXPECT_TRUE(picard::in_delta_box(k2345, L(0, 1, 2, 3, 0)));
  EXPECT_FALSE(picard::in_delta_box(k2345, L(1, 0, 0, 0, 0)));
  EXPECT_FALSE(picard::in_delta_box(k2345, L(0, 0, 0, 0, 1)));
}

TEST(Picard, SigmaOnlyOnBox) {
  EXPECT_EQ(picard::sigma(k2345, L(0, 1, 2, 3, 0)), 6);
  EXPECT_THROW(picard::sigma(k2345, L(0, 0, 0, 0, 1)), DomainError);
  EXPECT_THROW(picard::require_delta_box(k2345, L(1, 0, 0, 0, 0)), DomainError);
}

// Brute force: scan a generous range of normal forms and keep lo <= v <= hi.
std::vector<LElem> box_by_scan(const Weights& w, const LElem& lo, const LElem& hi) {
  std::vector<LElem> out;
  for (Int a = 0; a < w[0]; ++a)
    for (Int b = 0; b < w[1]; ++b)
      for (Int c = 0; c < w[2]; ++c)
        for (Int d = 0; d < w[3]; ++d)
          for (Int e = -8; e <= 8; ++e) {
            const LElem v = L(a, b, c, d, e);
            if (picard::leq(w, lo, v) && picard::leq(w, v, hi)) out.push_back(v);
          }
  return out;
}

TEST(Picard, BoxEnumMatchesScan) {
  for (const Weights& w : {Weights(), Weights({2, 3, 4, 5}), Weights({3, 3, 3, 3}), Weights({5, 5, 5, 5})}) {
    const LElem c = picard::canonical(w);
    const LElem lo = picard::neg(w, c);
    const LElem hi = picard::scale(w, 2, c);
    EXPECT_EQ(picard::box_enum(w, lo, hi), box_by_scan(w, lo, hi)) << w.to_string();
    EXPECT_EQ(picard::box_enum(w, picard::zero(), picard::distinguished(w).delta),
              box_by_scan(w, picard::zero(), picard::distinguished(w).delta));
  }
}

TEST(Picard, BoxSizesOfTwoC) {
  // Counted by box_by_scan.
  EXPECT_EQ(picard::box_enum(Weights(), picard::zero(), L(0, 0, 0, 0, 2)).size(), 17u);
  const Weights w({5, 5, 5, 5});
  EXPECT_EQ(picard::box_enum(w, picard::zero(), L(0, 0, 0, 0, 2)).size(), 131u);
}

TEST(Picard, EmptyBoxWhenUnordered) {
  EXPECT_TRUE(picard::box_enum(k2345, picard::canonical(k2345), picard::zero()).empty());
}

TEST(Picard, OrderIsLexicographic) {
  std::set<LElem> s{L(0, 0, 0, 1, 0), L(0, 0, 0, 0, 5), L(1, 0, 0, 0, -3)};
  EXPECT_EQ(*s.begin(), L(0, 0, 0, 0, 5));
  EXPECT_EQ(*s.rbegin(), L(1, 0, 0, 0, -3));
  EXPECT_EQ(L(1, 2, 3, 4, -5).to_string(), "(1,2,3,4;-5)");
}

}  // namespace
}  // namespace glacm
