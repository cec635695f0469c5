#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "mdssd/serialize.hpp"
#include "mdssd/verify.hpp"
#include "support.hpp"

using namespace mdssd;
using testing_support::elems;
using testing_support::eval_set;
using testing_support::packed;

namespace {

Matrix matrix_of(const Field& F, std::vector<std::vector<std::int64_t>> rows) {
  Matrix g(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) g(i, j) = F.from_int(rows[i][j]);
  return g;
}

std::vector<std::vector<std::uint32_t>> raw(const Matrix& g) {
  std::vector<std::vector<std::uint32_t>> out(g.rows());
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (Element x : g.row(i)) out[i].push_back(x.packed());
  return out;
}

// Lexicographically first dependent k-subset of columns, by the reference field.
std::optional<std::vector<std::size_t>> first_dependent_subset(const LinearCode& C) {
  const auto G = testing_support::naive(C.field());
  const auto rows = raw(C.generator());
  const std::size_t n = C.n(), k = C.k();
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  for (;;) {
    std::vector<std::vector<std::uint32_t>> sub(k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t c : idx) sub[i].push_back(rows[i][c]);
    if (oracle::rank(G, sub) < k) return idx;
    std::size_t i = k;
    while (i-- > 0 && idx[i] == n - k + i) {
    }
    if (i == static_cast<std::size_t>(-1)) return std::nullopt;
    ++idx[i];
    for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

Matrix random_matrix(const Field& F, std::mt19937_64& rng, std::size_t k, std::size_t n) {
  Matrix g(k, n);
  for (;;) {
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < n; ++j) g(i, j) = Element{static_cast<std::uint32_t>(rng() % F.q())};
    if (rank(F, g) == k) return g;
  }
}

Matrix permute_columns(const Matrix& g, const std::vector<std::size_t>& perm) { return g.columns(perm); }

LinearCode thirteen_four_two() {
  const Field F = make_field(13, 1);
  return grs_generator(eval_set(F, {0, 4, 8, 12}), TwistVector(elems(F, {3, 5, 1, 2})), 2);
}

}  // namespace

TEST(SelfDual, Examples) {
  const Field F5 = make_field(5, 1);
  EXPECT_TRUE(check_self_dual(LinearCode(F5, matrix_of(F5, {{1, 2}}))).pass);
  EXPECT_TRUE(check_self_dual(thirteen_four_two()).pass);
  const auto odd = check_self_dual(LinearCode(F5, matrix_of(F5, {{1, 2, 0}})));
  EXPECT_FALSE(odd.pass);
  EXPECT_FALSE(odd.reason.empty());
  EXPECT_FALSE(check_self_dual(LinearCode(F5, matrix_of(F5, {{1, 1}}))).pass);
}

TEST(SelfDual, RowBasisInvariance) {
  std::mt19937_64 rng(8);
  const Field F = make_field(13, 1);
  const LinearCode C = thirteen_four_two();
  for (int trial = 0; trial < 50; ++trial) {
    const Matrix M = random_matrix(F, rng, 2, 2);
    const LinearCode D(F, multiply(F, M, C.generator()));
    EXPECT_TRUE(check_self_dual(D).pass);
  }
  // larger self-dual codes from the pipeline
  for (auto [p, m, kind] : std::vector<std::tuple<std::uint64_t, unsigned, RecipeKind>>{
           {41, 1, RecipeKind::Thm1b}, {73, 1, RecipeKind::Cor31}, {5, 2, RecipeKind::Thm5even}}) {
    const Field G = make_field(p, m);
    Recipe r = make_recipe(kind, G);
    r.l = 0;
    if (kind == RecipeKind::Thm5even) r.t = 4;
    ASSERT_TRUE(applicable(G, r)) << applicable(G, r).reason;
    const Certificate cert = certify(G, r);
    const LinearCode C2(G, cert.generator);
    for (int trial = 0; trial < 10; ++trial) {
      const Matrix M = random_matrix(G, rng, C2.k(), C2.k());
      EXPECT_TRUE(check_self_dual(LinearCode(G, multiply(G, M, C2.generator()))).pass);
    }
  }
}

TEST(Mds, ThirteenVerified) {
  const MdsVerdict v = check_mds(thirteen_four_two());
  EXPECT_EQ(v.kind, MdsVerdict::Kind::Verified);
  EXPECT_EQ(v.minors, 6u);
}

TEST(Mds, CanonicalWitness) {
  const Field F = make_field(7, 1);
  // columns 2 and 3 proportional
  const LinearCode C(F, matrix_of(F, {{1, 0, 1, 2}, {0, 1, 3, 6}}));
  const MdsVerdict v = check_mds(C);
  EXPECT_EQ(v.kind, MdsVerdict::Kind::Failed);
  EXPECT_EQ(v.witness, (std::vector<std::size_t>{2, 3}));
  // zero first column fails immediately
  const LinearCode Z(F, matrix_of(F, {{0, 1, 1, 1}, {0, 1, 2, 3}}));
  EXPECT_EQ(check_mds(Z).witness, (std::vector<std::size_t>{0, 1}));
}

TEST(Mds, ExhaustiveMatchesReference) {
  std::mt19937_64 rng(12);
  for (std::uint64_t q : {5u, 7u, 9u, 13u}) {
    const auto pp = *detail::prime_power(q);
    const Field F = make_field(pp.first, pp.second);
    for (int trial = 0; trial < 40; ++trial) {
      const std::size_t n = 3 + rng() % 6, k = 1 + rng() % (n - 1);
      const LinearCode C(F, random_matrix(F, rng, k, n));
      const MdsVerdict v = check_mds(C);
      const auto ref = first_dependent_subset(C);
      EXPECT_EQ(v.kind == MdsVerdict::Kind::Failed, ref.has_value());
      if (ref) { EXPECT_EQ(v.witness, *ref); }
      if (!ref) { EXPECT_EQ(v.minors, detail::binomial(n, k)); }
    }
  }
}

TEST(Mds, PermutationInvariance) {
  std::mt19937_64 rng(13);
  const Field F = make_field(11, 1);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 4 + rng() % 6, k = 2 + rng() % (n - 3);
    const bool grs = trial % 2 == 0;
    const LinearCode C = grs ? grs_generator(testing_support::random_eval_set(F, rng, n), TwistVector::ones(F, n), k)
                             : LinearCode(F, random_matrix(F, rng, k, n));
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const LinearCode P(F, permute_columns(C.generator(), perm));
    EXPECT_EQ(check_mds(C).pass(), check_mds(P).pass());
    if (grs) { EXPECT_TRUE(check_mds(P).pass()); }
  }
}

TEST(Mds, SampledAndSkipped) {
  const Field F = make_field(13, 2);
  Recipe r = make_recipe(RecipeKind::Thm1a, F);
  r.l = 1;
  const BuildResult b = build(F, r);
  const auto V = solve_twist_grs(b.points);
  ASSERT_TRUE(V);
  const LinearCode C = grs_generator(b.points, *V, 26);
  MdsOptions opt;
  opt.max_samples = 2000;
  const MdsVerdict v = check_mds(C, opt);
  EXPECT_EQ(v.kind, MdsVerdict::Kind::Sampled);
  EXPECT_EQ(v.structured, 52u * 51u / 2u);
  EXPECT_EQ(v.minors, v.structured + 2000u);
  EXPECT_EQ(check_mds(C, opt).minors, v.minors);  // deterministic seed

  opt.allow_sampling = false;
  const MdsVerdict s = check_mds(C, opt);
  EXPECT_EQ(s.kind, MdsVerdict::Kind::Skipped);
  EXPECT_FALSE(s.reason.empty());
  EXPECT_FALSE(s.pass());
}

TEST(Mds, SampledDetectsFailure) {
  std::mt19937_64 rng(14);
  const Field F = make_field(3, 1);
  const LinearCode C(F, random_matrix(F, rng, 6, 14));
  MdsOptions opt;
  opt.budget = 10;
  const MdsVerdict v = check_mds(C, opt);
  ASSERT_EQ(v.kind, MdsVerdict::Kind::Failed);
  ASSERT_EQ(v.witness.size(), 6u);
  std::vector<std::vector<std::uint32_t>> sub(6);
  const auto rows = raw(C.generator());
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t c : v.witness) sub[i].push_back(rows[i][c]);
  EXPECT_LT(oracle::rank(testing_support::naive(F), sub), 6u);
}

TEST(Criterion, GrsExamples) {
  const Field F = make_field(13, 1);
  const auto a = check_criterion_grs(eval_set(F, {0, 4, 8, 12}));
  EXPECT_TRUE(a.pass);
  EXPECT_EQ(a.characters, (std::vector<int>{-1, -1, -1, -1}));
  EXPECT_EQ(a.clause, "grs");
  const auto b = check_criterion_grs(eval_set(F, {0, 1, 2, 4}));
  EXPECT_FALSE(b.pass);
  EXPECT_EQ(b.characters, (std::vector<int>{-1, 1, 1, -1}));
}

TEST(Criterion, EgrsExamples) {
  const Field F11 = make_field(11, 1);
  EXPECT_TRUE(check_criterion_egrs(eval_set(F11, {0, 5, 10})).pass);
  const Field F13 = make_field(13, 1);
  EXPECT_TRUE(check_criterion_egrs(eval_set(F13, {1})).pass);
  const Field F7 = make_field(7, 1);
  const auto c = check_criterion_egrs(eval_set(F7, {1}));
  EXPECT_FALSE(c.pass);
  EXPECT_EQ(c.characters, (std::vector<int>{-1}));
}

TEST(Oracle, Examples) {
  const Field F5 = make_field(5, 1);
  EXPECT_TRUE(oracle_exists_twist(eval_set(F5, {1, 4}), false));
  const Field F7 = make_field(7, 1);
  EXPECT_FALSE(oracle_exists_twist(eval_set(F7, {1}), true));
  EXPECT_THROW(oracle_exists_twist(eval_set(F7, {1, 2, 3, 4, 5, 6}), false, 1000), Error);
}

// Criterion verdicts equal brute-force twist existence on every 4- and 3-subset.
TEST(Oracle, EquivalenceSmallFields) {
  for (std::uint64_t q : {5u, 7u, 9u}) {
    const auto pp = *detail::prime_power(q);
    const Field F = make_field(pp.first, pp.second);
    std::size_t subsets = 0;
    for (std::uint32_t mask = 0; mask < (1u << q); ++mask) {
      const int bits = __builtin_popcount(mask);
      if (bits != 3 && bits != 4) continue;
      std::vector<Element> pts;
      for (std::uint32_t i = 0; i < q; ++i)
        if (mask >> i & 1) pts.push_back(Element{i});
      const EvalSet S(F, pts);
      const bool ext = bits == 3;
      const bool crit = ext ? check_criterion_egrs(S).pass : check_criterion_grs(S).pass;
      ASSERT_EQ(crit, oracle_exists_twist(S, ext)) << "q=" << q << " mask=" << mask;
      ++subsets;
    }
    EXPECT_GT(subsets, 0u);
  }
}

TEST(Oracle, RandomElevenThirteen) {
  std::mt19937_64 rng(15);
  for (std::uint64_t q : {11u, 13u}) {
    const Field F = make_field(q, 1);
    for (int trial = 0; trial < 200; ++trial) {
      const EvalSet S4 = testing_support::random_eval_set(F, rng, 4);
      EXPECT_EQ(check_criterion_grs(S4).pass, oracle_exists_twist(S4, false));
      const EvalSet S3 = testing_support::random_eval_set(F, rng, 3);
      EXPECT_EQ(check_criterion_egrs(S3).pass, oracle_exists_twist(S3, true));
    }
  }
}

TEST(Certify, ThirteenThm1a) {
  const Field F = make_field(13, 1);
  Recipe r = make_recipe(RecipeKind::Thm1a, F);
  r.l = 0;
  const Certificate c = certify(F, r);
  EXPECT_EQ(c.n, 4u);
  EXPECT_EQ(c.k, 2u);
  EXPECT_TRUE(c.self_dual.pass);
  EXPECT_EQ(c.mds.kind, MdsVerdict::Kind::Verified);
  EXPECT_EQ(packed(c.twist.entries()), (std::vector<std::uint32_t>{3, 5, 1, 2}));
  std::vector<std::string> stages;
  for (const auto& [name, ms] : c.timings_ms) stages.push_back(name);
  EXPECT_EQ(stages, (std::vector<std::string>{"build", "twist", "generator", "self_dual", "criterion", "mds"}));
}

TEST(Certify, FortyOneThm1b) {
  const Field F = make_field(41, 1);
  const Certificate c = certify(F, make_recipe(RecipeKind::Thm1b, F));
  EXPECT_EQ(c.n, 6u);
  EXPECT_EQ(c.k, 3u);
  EXPECT_TRUE(c.self_dual.pass);
  EXPECT_EQ(c.mds.kind, MdsVerdict::Kind::Verified);
  EXPECT_EQ(c.mds.minors, 20u);
}

TEST(Certify, EightyNineThm1b) {
  const Field F = make_field(89, 1);
  const Certificate c = certify(F, make_recipe(RecipeKind::Thm1b, F));
  EXPECT_TRUE(c.self_dual.pass);
  EXPECT_TRUE(c.criterion.pass);
  EXPECT_EQ(c.mds.kind, MdsVerdict::Kind::Verified);
}

TEST(Certify, NotApplicable) {
  const Field F = make_field(11, 1);
  try {
    certify(F, make_recipe(RecipeKind::Thm1a, F));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::RecipeNotApplicable);
  }
}

TEST(Serialize, CertificateShape) {
  const Field F = make_field(13, 1);
  Recipe r = make_recipe(RecipeKind::Thm1a, F);
  r.l = 0;
  const json j = to_json(certify(F, r), false);
  EXPECT_EQ(j["field"]["p"], 13);
  EXPECT_EQ(j["field"]["theta"], 2);
  EXPECT_EQ(j["recipe"]["kind"], "Thm1a");
  EXPECT_EQ(j["points"], json::parse("[0,4,8,12]"));
  EXPECT_EQ(j["twist"], json::parse("[3,5,1,2]"));
  EXPECT_EQ(j["self_dual"]["pass"], true);
  EXPECT_EQ(j["mds"]["verdict"], "verified");
  EXPECT_EQ(j["criterion"]["characters"], json::parse("[-1,-1,-1,-1]"));
  EXPECT_FALSE(j.contains("timings_ms"));
  EXPECT_EQ(describe(recipe_from_json(j["recipe"])), describe(r));
  EXPECT_THROW(recipe_from_json(json::parse(R"({"kind":"Thm9"})")), Error);
}
