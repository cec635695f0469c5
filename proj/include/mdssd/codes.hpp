// SPDX-License-Identifier: Apache-2.0
//
// Generalized Reed-Solomon codes GRS_k(S, V) and their one-coordinate
// extensions EGRS_k(S, V), plus the twist vectors that make them self-dual.
//
// Generator rows use the monomial basis 1, x, ..., x^{k-1}: row i of GRS_k
// is (v_1 a_1^i, ..., v_n a_n^i). The EGRS row additionally carries the
// coefficient of x^{k-1}, i.e. a trailing 1 on row k-1 and 0 elsewhere.
#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "mdssd/error.hpp"
#include "mdssd/eval_set.hpp"
#include "mdssd/gf.hpp"
#include "mdssd/matrix.hpp"
#include "mdssd/poly.hpp"

namespace mdssd {

/// Column multipliers (v_1, ..., v_n), all nonzero.
class TwistVector {
 public:
  TwistVector() = default;
  explicit TwistVector(std::vector<Element> entries) : entries_(std::move(entries)) {
    for (std::size_t i = 0; i < entries_.size(); ++i)
      if (entries_[i].is_zero()) throw Error(Errc::ZeroTwistEntry, "twist entry " + std::to_string(i) + " is zero");
  }

  static TwistVector ones(const Field& F, std::size_t n) { return TwistVector(std::vector<Element>(n, F.one())); }

  const std::vector<Element>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  Element operator[](std::size_t i) const { return entries_[i]; }

  friend bool operator==(const TwistVector&, const TwistVector&) = default;

 private:
  std::vector<Element> entries_;
};

/// A linear [n, k] code given by a full-rank k x n generator matrix.
class LinearCode {
 public:
  LinearCode(Field field, Matrix generator, std::string provenance = {})
      : field_(std::move(field)), generator_(std::move(generator)), provenance_(std::move(provenance)) {
    if (generator_.rows() == 0 || generator_.rows() > generator_.cols())
      throw Error(Errc::DimensionOutOfRange, "generator must have 1 <= k <= n rows");
    const std::size_t r = rank(field_, generator_);
    if (r != generator_.rows())
      throw Error(Errc::RankDeficient,
                  "generator has rank " + std::to_string(r) + " < k = " + std::to_string(generator_.rows()));
  }

  const Field& field() const { return field_; }
  std::size_t n() const { return generator_.cols(); }
  std::size_t k() const { return generator_.rows(); }
  const Matrix& generator() const { return generator_; }
  const std::string& provenance() const { return provenance_; }

 private:
  Field field_;
  Matrix generator_;
  std::string provenance_;
};

namespace detail {

inline Matrix grs_rows(const EvalSet& S, const TwistVector& V, std::size_t k, std::size_t extra_cols) {
  const Field& F = S.field();
  const std::size_t n = S.size();
  if (V.size() != n)
    throw Error(Errc::LengthMismatch, "twist has " + std::to_string(V.size()) + " entries, S has " + std::to_string(n));
  if (k < 1 || k > n) throw Error(Errc::DimensionOutOfRange, "need 1 <= k <= n");
  Matrix g(k, n + extra_cols);
  for (std::size_t j = 0; j < n; ++j) {
    Element x = V[j];
    for (std::size_t i = 0; i < k; ++i) {
      g(i, j) = x;
      x = F.mul(x, S[j]);
    }
  }
  return g;
}

inline bool gram_is_zero(const Field& F, const Matrix& g) {
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = i; j < g.rows(); ++j)
      if (!dot(F, g.row(i), g.row(j)).is_zero()) return false;
  return true;
}

}  // namespace detail

inline LinearCode grs_generator(const EvalSet& S, const TwistVector& V, std::size_t k) {
  return LinearCode(S.field(), detail::grs_rows(S, V, k, 0), "GRS");
}

inline LinearCode egrs_generator(const EvalSet& S, const TwistVector& V, std::size_t k) {
  Matrix g = detail::grs_rows(S, V, k, 1);
  g(k - 1, S.size()) = S.field().one();
  return LinearCode(S.field(), std::move(g), "EGRS");
}

/// Twist making GRS_{n/2}(S, V) self-dual, if one exists: v_i^2 = λ / Δ_S(a_i)
/// with λ = 1 when every Δ_S(a_i) is a square and λ = θ when none is.
inline std::optional<TwistVector> solve_twist_grs(const EvalSet& S) {
  if (S.size() % 2 != 0) throw Error(Errc::OddLength, "GRS self-duality needs an even number of points");
  if (S.size() == 0) throw Error(Errc::InvalidArgument, "empty evaluation set");
  const Field& F = S.field();
  const DeltaTable dt = delta_table(S);
  const int eta = quadratic_character(F, dt.deltas.front());
  for (Element d : dt.deltas)
    if (quadratic_character(F, d) != eta) return std::nullopt;
  const Element lambda = eta == 1 ? F.one() : F.theta();
  std::vector<Element> v;
  v.reserve(S.size());
  for (Element d : dt.deltas) {
    auto root = sqrt(F, F.div(lambda, d));
    if (!root) throw Error(Errc::InternalCrossCheckFailed, "λ/Δ is not a square");
    v.push_back(*root);
  }
  TwistVector V(std::move(v));
  const LinearCode C = grs_generator(S, V, S.size() / 2);
  if (!detail::gram_is_zero(F, C.generator()))
    throw Error(Errc::InternalCrossCheckFailed, "solved GRS twist does not give G Gᵀ = 0");
  return V;
}

/// Twist making EGRS_{(n+1)/2}(S, V) self-dual, if one exists: v_i^2 = -1 / Δ_S(a_i).
inline std::optional<TwistVector> solve_twist_egrs(const EvalSet& S) {
  if (S.size() % 2 == 0) throw Error(Errc::EvenLength, "EGRS self-duality needs an odd number of points");
  const Field& F = S.field();
  const DeltaTable dt = delta_table(S);
  std::vector<Element> v;
  v.reserve(S.size());
  for (Element d : dt.deltas) {
    auto root = sqrt(F, F.neg(F.inv(d)));
    if (!root) return std::nullopt;
    v.push_back(*root);
  }
  TwistVector V(std::move(v));
  const LinearCode C = egrs_generator(S, V, (S.size() + 1) / 2);
  if (!detail::gram_is_zero(F, C.generator()))
    throw Error(Errc::InternalCrossCheckFailed, "solved EGRS twist does not give G Gᵀ = 0");
  return V;
}

inline std::vector<Element> encode(const LinearCode& C, std::span<const Element> message) {
  if (message.size() != C.k())
    throw Error(Errc::LengthMismatch, "message has " + std::to_string(message.size()) + " symbols, k = " +
                                          std::to_string(C.k()));
  const Field& F = C.field();
  std::vector<Element> out(C.n(), F.zero());
  for (std::size_t i = 0; i < C.k(); ++i) {
    if (message[i].is_zero()) continue;
    for (std::size_t j = 0; j < C.n(); ++j) out[j] = F.add(out[j], F.mul(message[i], C.generator()(i, j)));
  }
  return out;
}

inline constexpr std::uint64_t kDefaultCodewordBudget = 10'000'000;

/// Exact minimum distance by enumerating all q^k - 1 nonzero codewords.
inline std::size_t min_distance_bruteforce(const LinearCode& C, std::uint64_t budget = kDefaultCodewordBudget) {
  const Field& F = C.field();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < C.k(); ++i) {
    total *= F.q();
    if (total > budget)
      throw Error(Errc::BudgetExceeded, "q^k exceeds the codeword budget " + std::to_string(budget));
  }
  // Odometer over messages; only the digits that change touch the codeword.
  std::vector<std::uint32_t> digit(C.k(), 0);
  std::vector<Element> word(C.n(), F.zero());
  std::size_t best = C.n();
  for (std::uint64_t count = 1; count < total; ++count) {
    for (std::size_t i = 0; i < C.k(); ++i) {
      const Element old_d{digit[i]};
      digit[i] = digit[i] + 1 == F.q() ? 0 : digit[i] + 1;
      const Element step = F.sub(Element{digit[i]}, old_d);
      for (std::size_t j = 0; j < C.n(); ++j) word[j] = F.add(word[j], F.mul(step, C.generator()(i, j)));
      if (digit[i] != 0) break;
    }
    std::size_t w = 0;
    for (Element x : word) w += !x.is_zero();
    best = std::min(best, w);
  }
  return best;
}

// Matrix text format: header "q n k", then k lines of n packed integers.

inline void write_matrix(std::ostream& os, const LinearCode& C) {
  os << C.field().q() << ' ' << C.n() << ' ' << C.k() << '\n';
  for (std::size_t i = 0; i < C.k(); ++i) {
    for (std::size_t j = 0; j < C.n(); ++j) os << (j ? " " : "") << C.generator()(i, j).packed();
    os << '\n';
  }
}

struct MatrixFile {
  std::uint64_t q = 0;
  std::size_t n = 0;
  std::size_t k = 0;
  std::vector<std::vector<std::uint64_t>> rows;
};

inline MatrixFile parse_matrix(std::istream& is) {
  MatrixFile mf;
  std::string line;
  auto next_line = [&]() -> bool {
    while (std::getline(is, line))
      if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    return false;
  };
  if (!next_line()) throw Error(Errc::ParseError, "missing header line");
  {
    std::istringstream hs(line);
    std::string extra;
    if (!(hs >> mf.q >> mf.n >> mf.k) || (hs >> extra)) throw Error(Errc::ParseError, "header must be \"q n k\"");
  }
  while (next_line()) {
    std::istringstream rs(line);
    std::vector<std::uint64_t> row;
    std::string tok;
    while (rs >> tok) {
      std::size_t used = 0;
      std::uint64_t v = 0;
      try {
        v = std::stoull(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size() || tok.front() == '-') throw Error(Errc::ParseError, "bad entry \"" + tok + "\"");
      if (v >= mf.q) throw Error(Errc::ParseError, "entry " + tok + " is not below q");
      row.push_back(v);
    }
    if (row.size() != mf.n)
      throw Error(Errc::ParseError, "row " + std::to_string(mf.rows.size() + 1) + " has " + std::to_string(row.size()) +
                                        " entries, header says n = " + std::to_string(mf.n));
    mf.rows.push_back(std::move(row));
  }
  if (mf.rows.size() != mf.k)
    throw Error(Errc::ParseError, "found " + std::to_string(mf.rows.size()) + " rows, header says k = " +
                                      std::to_string(mf.k));
  return mf;
}

}  // namespace mdssd
