#include <gtest/gtest.h>

#include <random>
#include <set>

#include "mdssd/poly.hpp"
#include "support.hpp"

using namespace mdssd;
using testing_support::elems;
using testing_support::eval_set;
using testing_support::packed;

TEST(Poly, FromRootsSevenExample) {
  const Field F = make_field(7, 1);
  const auto pts = elems(F, {0, 1, 2});
  const Poly f = poly_from_roots(F, pts);
  EXPECT_EQ(packed(f.coeffs()), (std::vector<std::uint32_t>{0, 2, 4, 1}));
}

TEST(Poly, FromRootsEmptyIsOne) {
  const Field F = make_field(5, 1);
  const Poly f = poly_from_roots(F, std::vector<Element>{});
  EXPECT_EQ(f.degree(), 0);
  EXPECT_EQ(f.coeff(0), F.one());
}

TEST(Poly, CubeRootsOfUnity) {
  const Field F = make_field(13, 1);
  const auto pts = elems(F, {1, 3, 9});
  EXPECT_EQ(packed(poly_from_roots(F, pts).coeffs()), (std::vector<std::uint32_t>{12, 0, 0, 1}));
}

TEST(Poly, DuplicateRoot) {
  const Field F = make_field(7, 1);
  const auto pts = elems(F, {1, 2, 1});
  try {
    poly_from_roots(F, pts);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::DuplicateRoot);
  }
}

TEST(Poly, Derivative) {
  const Field F = make_field(13, 1);
  const Poly f(F, elems(F, {-1, 0, 0, 1}));
  EXPECT_EQ(packed(derivative(f).coeffs()), (std::vector<std::uint32_t>{0, 0, 3}));
  EXPECT_TRUE(derivative(Poly(F, elems(F, {5}))).is_zero());
  std::vector<Element> x13(14, F.zero());
  x13[13] = F.one();
  EXPECT_TRUE(derivative(Poly(F, x13)).is_zero());
}

TEST(Poly, Eval) {
  const Field F13 = make_field(13, 1);
  EXPECT_EQ(eval(Poly(F13, elems(F13, {-1, 0, 0, 1})), F13.from_int(3)), F13.zero());
  EXPECT_EQ(eval(Poly(F13, elems(F13, {1})), F13.from_int(7)), F13.one());
  const Field F3 = make_field(3, 1);
  EXPECT_EQ(eval(Poly(F3, elems(F3, {1, 0, 1})), F3.from_int(2)), F3.from_int(2));
}

TEST(Poly, TrimmingAndDegree) {
  const Field F = make_field(5, 1);
  EXPECT_EQ(Poly(F, elems(F, {1, 2, 0, 0})).degree(), 1);
  EXPECT_EQ(Poly(F, elems(F, {0, 0})).degree(), -1);
  EXPECT_EQ(Poly(F).coeff(3), F.zero());
}

TEST(Delta, Examples) {
  const Field F7 = make_field(7, 1);
  EXPECT_EQ(packed(delta_table(eval_set(F7, {0, 1, 2})).deltas), (std::vector<std::uint32_t>{2, 6, 2}));
  EXPECT_EQ(packed(delta_table(eval_set(F7, {4})).deltas), (std::vector<std::uint32_t>{1}));
  const Field F13 = make_field(13, 1);
  EXPECT_EQ(packed(delta_table(eval_set(F13, {0, 4, 8, 12})).deltas), (std::vector<std::uint32_t>{6, 11, 2, 7}));
}

TEST(Delta, DuplicatePointRejected) {
  const Field F = make_field(7, 1);
  try {
    eval_set(F, {0, 3, 3});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::DuplicatePoint);
  }
}

TEST(Delta, SplitExamples) {
  const Field F = make_field(7, 1);
  const EvalSet S1 = eval_set(F, {0, 1}), S2 = eval_set(F, {2});
  EXPECT_EQ(delta_split(F, S1, S2, F.zero()), F.from_int(2));
  EXPECT_EQ(delta_split(F, S1, S2, F.from_int(2)), F.from_int(2));
  const EvalSet empty(F, {});
  EXPECT_EQ(delta_split(F, S1, empty, F.one()), delta_at(F, S1.points(), F.one()));
}

TEST(Delta, SplitErrors) {
  const Field F = make_field(7, 1);
  auto code = [&](auto f) {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::InvalidArgument;
  };
  EXPECT_EQ(code([&] { delta_split(F, eval_set(F, {0, 1}), eval_set(F, {1, 2}), F.zero()); }), Errc::NotDisjoint);
  EXPECT_EQ(code([&] { delta_split(F, eval_set(F, {0, 1}), eval_set(F, {2}), F.from_int(5)); }),
            Errc::PointNotInUnion);
}

// Direct products from the reference field against the library's dual-path table,
// plus the split rule on random partitions.
TEST(Delta, RandomSetsAgreeWithReference) {
  std::mt19937_64 rng(21);
  for (auto [p, m] : std::vector<std::pair<std::uint64_t, unsigned>>{{7, 1}, {3, 2}, {11, 1}, {13, 1}, {5, 2}}) {
    const Field F = make_field(p, m);
    const auto G = testing_support::naive(F);
    for (int trial = 0; trial < 60; ++trial) {
      const std::size_t n = 2 + rng() % 11;
      const EvalSet S = testing_support::random_eval_set(F, rng, std::min<std::size_t>(n, F.q()));
      const DeltaTable t = delta_table(S);
      EXPECT_EQ(packed(t.deltas), oracle::deltas(G, packed(S.points())));
      const Poly df = derivative(poly_from_roots(F, S.points()));
      for (std::size_t i = 0; i < S.size(); ++i) EXPECT_EQ(eval(df, S[i]), t.deltas[i]);

      const std::size_t cut = rng() % (S.size() + 1);
      const EvalSet S1(F, {S.points().begin(), S.points().begin() + static_cast<std::ptrdiff_t>(cut)});
      const EvalSet S2(F, {S.points().begin() + static_cast<std::ptrdiff_t>(cut), S.points().end()});
      for (std::size_t i = 0; i < S.size(); ++i) EXPECT_EQ(delta_split(F, S1, S2, S[i]), t.deltas[i]);
    }
  }
}

TEST(Poly, RootsVanishExactlyOnTheSet) {
  std::mt19937_64 rng(5);
  for (auto [p, m] : std::vector<std::pair<std::uint64_t, unsigned>>{{13, 1}, {5, 2}, {3, 3}}) {
    const Field F = make_field(p, m);
    for (int trial = 0; trial < 20; ++trial) {
      const EvalSet S = testing_support::random_eval_set(F, rng, 1 + rng() % 8);
      const Poly f = poly_from_roots(F, S.points());
      EXPECT_EQ(f.degree(), static_cast<int>(S.size()));
      EXPECT_EQ(f.coeffs().back(), F.one());
      std::uniform_int_distribution<std::uint32_t> pick(0, F.q() - 1);
      for (int i = 0; i < 50; ++i) {
        const Element x{pick(rng)};
        EXPECT_EQ(eval(f, x).is_zero(), S.contains(x));
      }
    }
  }
}

// Roots of a coset θ^i<θ^{e2}> give x^{e1} - θ^{i e1}, derivative e1 x^{e1-1}.
TEST(Poly, CosetClosedForm) {
  for (auto [p, m] : std::vector<std::pair<std::uint64_t, unsigned>>{{13, 1}, {41, 1}, {3, 2}, {5, 2}, {3, 3}, {13, 2}}) {
    const Field F = make_field(p, m);
    for (std::uint64_t e1 : detail::divisors(F.q() - 1)) {
      if (e1 > 64) continue;
      const std::uint64_t e2 = (F.q() - 1) / e1;
      for (std::uint64_t i = 0; i < std::min<std::uint64_t>(e2, 5); ++i) {
        std::vector<Element> coset;
        for (std::uint64_t u = 0; u < e1; ++u) coset.push_back(F.exp(static_cast<std::int64_t>(i + u * e2)));
        const Poly f = poly_from_roots(F, coset);
        std::vector<Element> want(e1 + 1, F.zero());
        want[0] = F.neg(F.exp(static_cast<std::int64_t>(i * e1)));
        want[e1] = F.one();
        ASSERT_EQ(f, Poly(F, want)) << "q=" << F.q() << " e1=" << e1 << " i=" << i;
        std::vector<Element> dwant(e1, F.zero());
        dwant[e1 - 1] = F.from_int(static_cast<std::int64_t>(e1));
        EXPECT_EQ(derivative(f), Poly(F, dwant));
      }
    }
  }
}
