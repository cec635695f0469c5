// SPDX-License-Identifier: Apache-2.0
//
// Dense univariate polynomials over F_q (constant term first) and the
// difference products Δ_S(a) = prod_{b in S, b != a} (a - b).
#pragma once

#include <algorithm>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mdssd/error.hpp"
#include "mdssd/eval_set.hpp"
#include "mdssd/gf.hpp"

namespace mdssd {

class Poly {
 public:
  explicit Poly(Field field) : field_(std::move(field)) {}
  Poly(Field field, std::vector<Element> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) { trim(); }

  const Field& field() const { return field_; }
  const std::vector<Element>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  /// Coefficient of x^i (zero beyond the degree).
  Element coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : field_.zero(); }

  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  Field field_;
  std::vector<Element> coeffs_;
};

/// f_S(x) = prod (x - a) over a in roots.
inline Poly poly_from_roots(const Field& F, std::span<const Element> roots) {
  std::vector<Element> sorted(roots.begin(), roots.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw Error(Errc::DuplicateRoot, "roots must be distinct");
  std::vector<Element> c{F.one()};
  for (Element a : roots) {
    const Element na = F.neg(a);
    c.push_back(F.zero());
    for (std::size_t i = c.size() - 1; i > 0; --i) c[i] = F.add(c[i - 1], F.mul(na, c[i]));
    c[0] = F.mul(na, c[0]);
  }
  return Poly(F, std::move(c));
}

inline Poly derivative(const Poly& f) {
  const Field& F = f.field();
  std::vector<Element> c;
  for (std::size_t i = 1; i < f.coeffs().size(); ++i)
    c.push_back(F.mul(F.from_int(static_cast<std::int64_t>(i)), f.coeffs()[i]));
  return Poly(F, std::move(c));
}

inline Element eval(const Poly& f, Element x) {
  const Field& F = f.field();
  Element acc = F.zero();
  for (std::size_t i = f.coeffs().size(); i-- > 0;) acc = F.add(F.mul(acc, x), f.coeffs()[i]);
  return acc;
}

/// prod (b - a) over a in points with a != b.
inline Element delta_at(const Field& F, std::span<const Element> points, Element b) {
  Element acc = F.one();
  for (Element a : points)
    if (a != b) acc = F.mul(acc, F.sub(b, a));
  return acc;
}

struct DeltaTable {
  std::vector<Element> points;
  std::vector<Element> deltas;
};

/// Δ_S(a_i) for every point, computed as a direct product and as f_S'(a_i);
/// the two must agree.
inline DeltaTable delta_table(const EvalSet& S) {
  const Field& F = S.field();
  if (S.size() == 0) throw Error(Errc::InvalidArgument, "delta table of an empty set");
  const Poly df = derivative(poly_from_roots(F, S.points()));
  DeltaTable t{S.points(), {}};
  t.deltas.reserve(S.size());
  for (Element a : S.points()) {
    const Element direct = delta_at(F, S.points(), a);
    if (direct != eval(df, a))
      throw Error(Errc::InternalCrossCheckFailed,
                  "Δ_S(" + std::to_string(a.packed()) + ") disagrees with f_S'(" + std::to_string(a.packed()) + ")");
    t.deltas.push_back(direct);
  }
  return t;
}

/// Δ_{S1 ∪ S2}(b) via the split Δ_{S1}(b) f_{S2}(b) (or symmetrically for b in S2).
inline Element delta_split(const Field& F, const EvalSet& S1, const EvalSet& S2, Element b) {
  for (Element a : S1.points())
    if (S2.contains(a)) throw Error(Errc::NotDisjoint, "point " + std::to_string(a.packed()) + " in both sets");
  const bool in1 = S1.contains(b);
  if (!in1 && !S2.contains(b)) throw Error(Errc::PointNotInUnion, "point not in S1 ∪ S2");
  const EvalSet& home = in1 ? S1 : S2;
  const EvalSet& other = in1 ? S2 : S1;
  return F.mul(delta_at(F, home.points(), b), eval(poly_from_roots(F, other.points()), b));
}

}  // namespace mdssd
