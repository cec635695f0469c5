// SPDX-License-Identifier: Apache-2.0
//
// Independent checks on constructed codes. Nothing here trusts the twist
// solver: self-duality is recomputed from the generator, MDS is checked
// through k x k column minors, and the character criteria are re-derived
// from fresh Δ tables.
#pragma once

#include <chrono>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "mdssd/codes.hpp"
#include "mdssd/constructions.hpp"
#include "mdssd/error.hpp"
#include "mdssd/gf.hpp"
#include "mdssd/matrix.hpp"
#include "mdssd/poly.hpp"

namespace mdssd {

struct SelfDualResult {
  bool pass = false;
  std::string reason;  // empty on pass
};

/// C = C⊥ iff n = 2k, rank(G) = k and every pair of generator rows
/// (including each row with itself) is orthogonal.
inline SelfDualResult check_self_dual(const LinearCode& C) {
  const Field& F = C.field();
  const Matrix& g = C.generator();
  if (C.n() != 2 * C.k()) return {false, "n ≠ 2k"};
  if (rank(F, g) != C.k()) return {false, "generator rank below k"};
  for (std::size_t i = 0; i < C.k(); ++i)
    for (std::size_t j = i; j < C.k(); ++j)
      if (!dot(F, g.row(i), g.row(j)).is_zero())
        return {false, "rows " + std::to_string(i) + " and " + std::to_string(j) + " are not orthogonal"};
  return {true, {}};
}

struct MdsVerdict {
  enum class Kind { Verified, Sampled, Skipped, Failed };
  Kind kind = Kind::Skipped;
  std::uint64_t minors = 0;      // k-subsets tested
  std::uint64_t structured = 0;  // of which deterministic pair-covering subsets (sampled mode)
  std::string reason;            // skipped only
  std::vector<std::size_t> witness;

  bool pass() const { return kind == Kind::Verified || kind == Kind::Sampled; }
};

constexpr std::string_view to_string(MdsVerdict::Kind k) {
  switch (k) {
    case MdsVerdict::Kind::Verified: return "verified";
    case MdsVerdict::Kind::Sampled: return "sampled";
    case MdsVerdict::Kind::Skipped: return "skipped";
    case MdsVerdict::Kind::Failed: return "failed";
  }
  return "?";
}

struct MdsOptions {
  std::uint64_t budget = 1'000'000;       // exhaustive when C(n, k) <= budget
  std::uint64_t max_samples = 100'000;    // random subsets, capped by budget
  bool allow_sampling = true;
  std::uint64_t seed = 0x5eed'c0de'2019ULL;
};

namespace detail {

/// C(n, k), saturating at UINT64_MAX.
inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > UINT64_MAX) return UINT64_MAX;
  }
  return static_cast<std::uint64_t>(r);
}

/// Depth-first walk over k-subsets of columns in lexicographic order that
/// keeps the echelon form of the chosen prefix, so each new column costs
/// one reduction instead of a full k x k elimination.
class MinorWalker {
 public:
  MinorWalker(const Field& F, const Matrix& g) : F_(F), k_(g.rows()), n_(g.cols()), cols_(n_ * k_) {
    for (std::size_t c = 0; c < n_; ++c)
      for (std::size_t i = 0; i < k_; ++i) cols_[c * k_ + i] = g(i, c);
    basis_.resize(k_ * k_);
    pivot_.resize(k_);
    chosen_.resize(k_);
  }

  /// True iff every k-subset is independent; otherwise fills `witness`.
  bool run(std::uint64_t& leaves, std::vector<std::size_t>& witness) {
    leaves_ = 0;
    const bool ok = walk(0, 0, witness);
    leaves = leaves_;
    return ok;
  }

 private:
  bool walk(std::size_t start, std::size_t depth, std::vector<std::size_t>& witness) {
    if (depth == k_) {
      ++leaves_;
      return true;
    }
    Element* v = &basis_[depth * k_];
    for (std::size_t c = start; c + (k_ - depth) <= n_; ++c) {
      std::copy_n(&cols_[c * k_], k_, v);
      for (std::size_t j = 0; j < depth; ++j) {
        const Element f = v[pivot_[j]];
        if (f.is_zero()) continue;
        const Element nf = F_.neg(f);
        const Element* b = &basis_[j * k_];
        for (std::size_t i = 0; i < k_; ++i)
          if (!b[i].is_zero()) v[i] = F_.add(v[i], F_.mul(nf, b[i]));
      }
      std::size_t piv = 0;
      while (piv < k_ && v[piv].is_zero()) ++piv;
      chosen_[depth] = c;
      if (piv == k_) {
        witness.assign(chosen_.begin(), chosen_.begin() + static_cast<std::ptrdiff_t>(depth) + 1);
        for (std::size_t x = c + 1; witness.size() < k_; ++x) witness.push_back(x);
        return false;
      }
      const Element inv = F_.inv(v[piv]);
      for (std::size_t i = 0; i < k_; ++i) v[i] = F_.mul(v[i], inv);
      pivot_[depth] = piv;
      if (!walk(c + 1, depth + 1, witness)) return false;
    }
    return true;
  }

  const Field& F_;
  std::size_t k_, n_;
  std::vector<Element> cols_;   // column-major copy of G
  std::vector<Element> basis_;  // reduced, normalized prefix columns
  std::vector<std::size_t> pivot_;
  std::vector<std::size_t> chosen_;
  std::uint64_t leaves_ = 0;
};

inline bool columns_independent(const Field& F, const Matrix& g, std::span<const std::size_t> idx) {
  Matrix sub = g.columns(idx);
  return rank_in_place(F, sub) == g.rows();
}

}  // namespace detail

/// Every k-column submatrix nonsingular <=> MDS. Exhaustive within budget,
/// otherwise a labelled sample: every pair of columns placed together in
/// one deterministic subset, then uniformly random subsets.
inline MdsVerdict check_mds(const LinearCode& C, const MdsOptions& opt = {}) {
  const Field& F = C.field();
  const Matrix& g = C.generator();
  const std::size_t n = C.n(), k = C.k();
  MdsVerdict out;
  const std::uint64_t total = detail::binomial(n, k);
  if (total <= opt.budget) {
    detail::MinorWalker walker(F, g);
    const bool ok = walker.run(out.minors, out.witness);
    out.kind = ok ? MdsVerdict::Kind::Verified : MdsVerdict::Kind::Failed;
    return out;
  }
  if (!opt.allow_sampling) {
    out.kind = MdsVerdict::Kind::Skipped;
    out.reason = "C(n, k) = " + std::to_string(total) + " exceeds the minor budget and sampling is disabled";
    return out;
  }

  auto test = [&](std::vector<std::size_t> idx) {
    std::sort(idx.begin(), idx.end());
    ++out.minors;
    if (detail::columns_independent(F, g, idx)) return true;
    out.kind = MdsVerdict::Kind::Failed;
    out.witness = std::move(idx);
    return false;
  };

  // Pair-covering subsets: {i, j} padded with the columns following j.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      std::vector<std::size_t> idx{i};
      if (k > 1) idx.push_back(j);
      for (std::size_t x = (j + 1) % n; idx.size() < k; x = (x + 1) % n)
        if (x != i && x != j) idx.push_back(x);
      ++out.structured;
      if (!test(std::move(idx))) return out;
    }

  std::mt19937_64 rng(opt.seed);
  const std::uint64_t samples = std::min(opt.budget, opt.max_samples);
  for (std::uint64_t s = 0; s < samples; ++s) {
    // Floyd's algorithm for a uniform k-subset of [0, n).
    std::vector<std::size_t> idx;
    idx.reserve(k);
    std::vector<char> taken(n, 0);
    for (std::size_t j = n - k; j < n; ++j) {
      std::size_t x = std::uniform_int_distribution<std::size_t>(0, j)(rng);
      if (taken[x]) x = j;
      taken[x] = 1;
      idx.push_back(x);
    }
    if (!test(std::move(idx))) return out;
  }
  out.kind = MdsVerdict::Kind::Sampled;
  return out;
}

struct CriterionResult {
  std::string clause;  // "grs" or "egrs"
  bool pass = false;
  std::vector<int> characters;  // η(Δ_S(a)) for grs, η(-Δ_S(a)) for egrs
};

/// All η(Δ_S(a)) equal.
inline CriterionResult check_criterion_grs(const EvalSet& S) {
  if (S.size() % 2 != 0) throw Error(Errc::OddLength, "GRS criterion needs an even number of points");
  const Field& F = S.field();
  CriterionResult r{"grs", true, {}};
  for (Element d : delta_table(S).deltas) r.characters.push_back(quadratic_character(F, d));
  for (int c : r.characters) r.pass = r.pass && c == r.characters.front();
  return r;
}

/// η(-Δ_S(a)) = +1 for all a.
inline CriterionResult check_criterion_egrs(const EvalSet& S) {
  if (S.size() % 2 == 0) throw Error(Errc::EvenLength, "EGRS criterion needs an odd number of points");
  const Field& F = S.field();
  CriterionResult r{"egrs", true, {}};
  for (Element d : delta_table(S).deltas) r.characters.push_back(quadratic_character(F, F.neg(d)));
  for (int c : r.characters) r.pass = r.pass && c == 1;
  return r;
}

inline constexpr std::uint64_t kDefaultOracleBudget = 10'000'000;

/// Brute force over every V in (F_q^*)^n: does some twist make the (E)GRS
/// code of half dimension self-dual? Entry (i, j) of G Gᵀ is the power sum
/// sum_c v_c^2 a_c^(i+j) (plus 1 at i = j = k-1 for EGRS), so it suffices to
/// test the 2k - 1 distinct sums.
inline bool oracle_exists_twist(const EvalSet& S, bool extended, std::uint64_t budget = kDefaultOracleBudget) {
  const Field& F = S.field();
  const std::size_t n = S.size();
  if (n == 0) throw Error(Errc::InvalidArgument, "empty evaluation set");
  if (!extended && n % 2 != 0) throw Error(Errc::OddLength, "GRS oracle needs an even number of points");
  if (extended && n % 2 == 0) throw Error(Errc::EvenLength, "EGRS oracle needs an odd number of points");
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    total *= F.q() - 1;
    if (total > budget) throw Error(Errc::BudgetExceeded, "(q-1)^n exceeds the oracle budget " + std::to_string(budget));
  }
  const std::size_t k = extended ? (n + 1) / 2 : n / 2;
  const std::size_t sums = 2 * k - 1;
  std::vector<std::vector<Element>> pw(n, std::vector<Element>(sums));
  for (std::size_t c = 0; c < n; ++c) {
    Element x = F.one();
    for (std::size_t r = 0; r < sums; ++r) {
      pw[c][r] = x;
      x = F.mul(x, S[c]);
    }
  }
  std::vector<std::uint32_t> v(n, 1);
  for (std::uint64_t count = 0; count < total; ++count) {
    bool ok = true;
    for (std::size_t r = 0; r < sums && ok; ++r) {
      Element acc = (extended && r == sums - 1) ? F.one() : F.zero();
      for (std::size_t c = 0; c < n; ++c) {
        const Element vc{v[c]};
        acc = F.add(acc, F.mul(F.mul(vc, vc), pw[c][r]));
      }
      ok = acc.is_zero();
    }
    if (ok) return true;
    for (std::size_t c = 0; c < n; ++c) {
      if (++v[c] < F.q()) break;
      v[c] = 1;
    }
  }
  return false;
}

struct Certificate {
  Field field;
  std::optional<Recipe> recipe;
  std::vector<Element> points;
  TwistVector twist{};
  bool extended = false;
  std::size_t n = 0;
  std::size_t k = 0;
  SelfDualResult self_dual{};
  CriterionResult criterion{};
  MdsVerdict mds{};
  std::vector<std::pair<std::string, double>> timings_ms{};
  Matrix generator{};
};

struct CertifyOptions {
  MdsOptions mds;
};

/// build -> twist -> generator -> self-dual / criterion / MDS checks.
inline Certificate certify(const Field& F, const Recipe& recipe, const CertifyOptions& opt = {}) {
  using Clock = std::chrono::steady_clock;
  std::vector<std::pair<std::string, double>> timings;
  auto stage = [&](const char* name, auto&& fn) {
    const auto t0 = Clock::now();
    auto result = fn();
    timings.emplace_back(name, std::chrono::duration<double, std::milli>(Clock::now() - t0).count());
    return result;
  };

  if (auto a = applicable(F, recipe); !a)
    throw Error(Errc::RecipeNotApplicable, describe(recipe) + ": " + a.reason);
  const BuildResult built = stage("build", [&] { return build(F, recipe); });
  const EvalSet& S = built.points;

  auto dump = [&] {
    std::string s = describe(recipe) + " over F_" + std::to_string(F.p()) + "^" + std::to_string(F.m()) + ", points:";
    for (Element a : S.points()) s += " " + std::to_string(a.packed());
    return s;
  };

  const std::optional<TwistVector> V = stage("twist", [&] {
    return built.extended ? solve_twist_egrs(S) : solve_twist_grs(S);
  });
  if (!V) throw Error(Errc::TwistSolveFailed, "no self-dual twist for an applicable recipe: " + dump());

  const std::size_t k = (S.size() + (built.extended ? 1 : 0)) / 2;
  const LinearCode C = stage("generator", [&] {
    return built.extended ? egrs_generator(S, *V, k) : grs_generator(S, *V, k);
  });

  Certificate cert{.field = F, .recipe = recipe, .points = S.points(), .twist = *V, .extended = built.extended};
  cert.n = C.n();
  cert.k = C.k();
  cert.self_dual = stage("self_dual", [&] { return check_self_dual(C); });
  if (!cert.self_dual.pass)
    throw Error(Errc::TwistSolveFailed, "constructed code is not self-dual (" + cert.self_dual.reason + "): " + dump());
  cert.criterion = stage("criterion", [&] {
    return built.extended ? check_criterion_egrs(S) : check_criterion_grs(S);
  });
  cert.mds = stage("mds", [&] { return check_mds(C, opt.mds); });
  cert.timings_ms = std::move(timings);
  cert.generator = C.generator();
  return cert;
}

}  // namespace mdssd
