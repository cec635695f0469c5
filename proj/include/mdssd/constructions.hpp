// SPDX-License-Identifier: Apache-2.0
//
// Evaluation sets whose (extended) GRS codes admit a self-dual twist.
//
// Every recipe starts from a short base set A and enlarges it by one of two
// liftings:
//
//   affine   B = union over a in A of (a*alpha + H), H an F_{p^s}-subspace of
//            F_q of dimension l and alpha outside H; |B| = |A| p^{sl}.
//   coset    B = union over a in A of the e1-th roots of a (each a coset of
//            <θ^{e2}>), optionally with 0 appended; |B| = |A| e1 (+1).
//
// Both preserve the quadratic-character pattern of the Δ values up to a
// common factor, which is what the applicability predicates below encode.
#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mdssd/codes.hpp"
#include "mdssd/error.hpp"
#include "mdssd/eval_set.hpp"
#include "mdssd/gf.hpp"
#include "mdssd/poly.hpp"

namespace mdssd {

enum class RecipeKind {
  Thm1a,
  Thm1b,
  Thm2,
  Thm3odd,
  Thm3even,
  Cor31,
  Thm4,
  Thm5odd,
  Thm5even,
  Rmk34,
  Lemma31Generic,
  Lemma32Generic,
  Lemma33Generic,
  Lemma34Generic,
};

inline constexpr RecipeKind kAllRecipeKinds[] = {
    RecipeKind::Thm1a,          RecipeKind::Thm1b,          RecipeKind::Thm2,           RecipeKind::Thm3odd,
    RecipeKind::Thm3even,       RecipeKind::Cor31,          RecipeKind::Thm4,           RecipeKind::Thm5odd,
    RecipeKind::Thm5even,       RecipeKind::Rmk34,          RecipeKind::Lemma31Generic, RecipeKind::Lemma32Generic,
    RecipeKind::Lemma33Generic, RecipeKind::Lemma34Generic,
};

constexpr std::string_view to_string(RecipeKind k) {
  switch (k) {
    case RecipeKind::Thm1a: return "Thm1a";
    case RecipeKind::Thm1b: return "Thm1b";
    case RecipeKind::Thm2: return "Thm2";
    case RecipeKind::Thm3odd: return "Thm3odd";
    case RecipeKind::Thm3even: return "Thm3even";
    case RecipeKind::Cor31: return "Cor31";
    case RecipeKind::Thm4: return "Thm4";
    case RecipeKind::Thm5odd: return "Thm5odd";
    case RecipeKind::Thm5even: return "Thm5even";
    case RecipeKind::Rmk34: return "Rmk34";
    case RecipeKind::Lemma31Generic: return "Lemma31Generic";
    case RecipeKind::Lemma32Generic: return "Lemma32Generic";
    case RecipeKind::Lemma33Generic: return "Lemma33Generic";
    case RecipeKind::Lemma34Generic: return "Lemma34Generic";
  }
  return "?";
}

/// Case-insensitive; also accepts the short forms "lemma31" .. "lemma34".
inline std::optional<RecipeKind> parse_recipe_kind(std::string_view name) {
  std::string low(name);
  for (auto& c : low) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  for (RecipeKind k : kAllRecipeKinds) {
    std::string full(to_string(k));
    for (auto& c : full) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (low == full) return k;
    if (full.ends_with("generic") && low == full.substr(0, full.size() - 7)) return k;
  }
  return std::nullopt;
}

/// A named construction and its parameters. Unused parameters stay empty.
struct Recipe {
  RecipeKind kind = RecipeKind::Thm1a;
  std::uint32_t p = 0;  // 0: take from the field
  unsigned m = 0;
  std::optional<unsigned> s;
  std::optional<unsigned> l;
  std::optional<std::uint64_t> t;
  std::optional<std::uint64_t> e1;
  std::optional<std::uint64_t> e2;

  friend bool operator==(const Recipe&, const Recipe&) = default;
};

/// A recipe bound to F with no parameters set.
inline Recipe make_recipe(RecipeKind kind, const Field& F) {
  Recipe r;
  r.kind = kind;
  r.p = F.p();
  r.m = F.m();
  return r;
}

inline std::string describe(const Recipe& r) {
  std::string out(to_string(r.kind));
  auto add = [&](const char* name, auto v) {
    if (v) out += std::string(" ") + name + "=" + std::to_string(*v);
  };
  add("s", r.s);
  add("l", r.l);
  add("t", r.t);
  add("e1", r.e1);
  add("e2", r.e2);
  return out;
}

/// Outcome of an applicability check; `reason` names the failed clause.
struct Applicability {
  bool ok = true;
  std::string reason;

  explicit operator bool() const { return ok; }
  static Applicability yes() { return {}; }
  static Applicability no(std::string why) { return {false, std::move(why)}; }
};

/// An F_{p^s}-subspace H = span(basis) of F_q together with alpha outside H.
struct SubspaceSpec {
  unsigned s = 1;
  std::vector<Element> basis;
  Element alpha;

  std::size_t dimension() const { return basis.size(); }
};

namespace detail {

inline bool in_subfield(const Field& F, unsigned s, Element a) {
  return F.pow(a, static_cast<std::int64_t>(ipow(F.p(), s))) == a;
}

/// Membership bitmap of span_{F_{p^s}}(vecs), or nullopt if vecs are dependent.
inline std::optional<std::vector<char>> span_bitmap(const Field& F, unsigned s, std::span<const Element> vecs) {
  const auto scalars = subfield_elements(F, s);
  std::vector<char> in(F.q(), 0);
  std::vector<Element> members{F.zero()};
  in[0] = 1;
  for (Element b : vecs) {
    if (in[b.packed()]) return std::nullopt;
    const std::size_t old = members.size();
    for (std::size_t c = 1; c < scalars.size(); ++c) {
      const Element cb = F.mul(scalars[c], b);
      for (std::size_t i = 0; i < old; ++i) {
        const Element x = F.add(members[i], cb);
        in[x.packed()] = 1;
        members.push_back(x);
      }
    }
  }
  return in;
}

inline std::vector<Element> bitmap_elements(const std::vector<char>& in) {
  std::vector<Element> out;
  for (std::uint32_t i = 0; i < in.size(); ++i)
    if (in[i]) out.push_back(Element{i});
  return out;
}

}  // namespace detail

/// Validates basis independence over F_{p^s} and alpha outside the span.
inline SubspaceSpec make_subspace(const Field& F, unsigned s, std::vector<Element> basis, Element alpha) {
  if (s == 0 || F.m() % s != 0) throw Error(Errc::NotASubfieldDegree, "s must divide m");
  auto in = detail::span_bitmap(F, s, basis);
  if (!in) throw Error(Errc::BasisDependent, "subspace basis is dependent over the subfield");
  if ((*in)[alpha.packed()]) throw Error(Errc::AlphaInSubspace, "alpha lies in the subspace");
  return SubspaceSpec{s, std::move(basis), alpha};
}

/// Elements of H, ascending in packed order.
inline std::vector<Element> subspace_elements(const Field& F, const SubspaceSpec& H) {
  auto in = detail::span_bitmap(F, H.s, H.basis);
  if (!in) throw Error(Errc::BasisDependent, "subspace basis is dependent over the subfield");
  return detail::bitmap_elements(*in);
}

/// H spanned by the first l vectors of the greedy basis θ^0, θ^1, ... of F_q
/// over F_{p^s}; alpha is the smallest element outside H.
inline SubspaceSpec default_subspace(const Field& F, unsigned s, unsigned l) {
  if (s == 0 || F.m() % s != 0) throw Error(Errc::NotASubfieldDegree, "s must divide m");
  if (l >= F.m() / s) throw Error(Errc::InvalidArgument, "subspace dimension must be below m/s");
  std::vector<Element> basis;
  for (std::int64_t e = 0; basis.size() < l; ++e) {
    basis.push_back(F.exp(e));
    if (!detail::span_bitmap(F, s, basis)) basis.pop_back();
  }
  const auto in = *detail::span_bitmap(F, s, basis);
  std::uint32_t a = 0;
  while (in[a]) ++a;
  return SubspaceSpec{s, std::move(basis), Element{a}};
}

/// union over a in A of (a*alpha + H), in A order, H ascending within each coset.
inline EvalSet lift_affine(const Field& F, const EvalSet& A, const SubspaceSpec& H) {
  for (Element a : A.points())
    if (!detail::in_subfield(F, H.s, a))
      throw Error(Errc::InvalidArgument, "base point " + std::to_string(a.packed()) + " not in the subfield");
  auto in = detail::span_bitmap(F, H.s, H.basis);
  if (!in) throw Error(Errc::BasisDependent, "subspace basis is dependent over the subfield");
  if ((*in)[H.alpha.packed()]) throw Error(Errc::AlphaInSubspace, "alpha lies in the subspace");
  const auto h = detail::bitmap_elements(*in);
  std::vector<char> used(F.q(), 0);
  std::vector<Element> out;
  out.reserve(A.size() * h.size());
  for (Element a : A.points()) {
    const Element shift = F.mul(a, H.alpha);
    for (Element x : h) {
      const Element b = F.add(shift, x);
      if (used[b.packed()]) throw Error(Errc::CosetCollision, "affine cosets overlap");
      used[b.packed()] = 1;
      out.push_back(b);
    }
  }
  return EvalSet(F, std::move(out));
}

/// 0 (when include_zero) followed by, for each a in A, the coset
/// θ^{ν(a)} <θ^{e2}> listed as θ^{ν(a) + e2 u}, u = 0..e1-1.
inline EvalSet lift_cosets(const Field& F, const EvalSet& A, std::uint64_t e1, bool include_zero) {
  const std::uint64_t e2 = (F.q() - 1) / e1;
  std::vector<std::uint64_t> nus;
  for (Element a : A.points()) nus.push_back(subgroup_dlog(F, e1, a));
  {
    auto sorted = nus;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw Error(Errc::CosetCollision, "two base points share a coset index");
  }
  std::vector<Element> out;
  if (include_zero) out.push_back(F.zero());
  for (std::uint64_t nu : nus)
    for (std::uint64_t u = 0; u < e1; ++u) out.push_back(F.exp(static_cast<std::int64_t>(nu + e2 * u)));
  return EvalSet(F, std::move(out));
}

namespace detail {

inline bool all_equal_characters(const Field& F, const std::vector<Element>& xs, int* common = nullptr) {
  if (xs.empty()) return true;
  const int eta = quadratic_character(F, xs.front());
  for (Element x : xs)
    if (quadratic_character(F, x) != eta) return false;
  if (common) *common = eta;
  return true;
}

inline bool grs_criterion(const EvalSet& S) {
  return all_equal_characters(S.field(), delta_table(S).deltas);
}

inline bool egrs_criterion(const EvalSet& S) {
  const Field& F = S.field();
  for (Element d : delta_table(S).deltas)
    if (quadratic_character(F, F.neg(d)) != 1) return false;
  return true;
}

inline unsigned s_of(const Recipe& r) { return r.s.value_or(1); }
inline unsigned l_of(const Recipe& r) { return r.l.value_or(0); }

inline bool uses_affine_lift(RecipeKind k) {
  switch (k) {
    case RecipeKind::Thm4:
    case RecipeKind::Rmk34:
    case RecipeKind::Lemma33Generic:
    case RecipeKind::Lemma34Generic: return false;
    default: return true;
  }
}

/// The exponent split q - 1 = 2^k r, r odd.
inline std::pair<unsigned, std::uint64_t> two_adic(std::uint64_t x) {
  unsigned k = 0;
  while (x % 2 == 0) {
    x /= 2;
    ++k;
  }
  return {k, x};
}

}  // namespace detail

/// Symbolic code length of a recipe (including the extension coordinate).
inline std::optional<std::uint64_t> predicted_length(const Field& F, const Recipe& r) {
  const std::uint64_t p = F.p();
  const std::uint64_t lift = detail::ipow(detail::ipow(p, detail::s_of(r)), detail::l_of(r));
  const std::uint64_t t = r.t.value_or(0);
  const std::uint64_t e1 = r.e1.value_or(0);
  switch (r.kind) {
    case RecipeKind::Thm1a: return 4 * lift;
    case RecipeKind::Thm1b: return 6 * lift;
    case RecipeKind::Thm2: return 3 * lift + 1;
    case RecipeKind::Cor31: return 5 * lift + 1;
    case RecipeKind::Thm3odd:
    case RecipeKind::Thm5odd:
      if (!r.t) return std::nullopt;
      return (t + 1) * lift;
    case RecipeKind::Thm3even:
    case RecipeKind::Thm5even:
      if (!r.t) return std::nullopt;
      return (t + 1) * lift + 1;
    case RecipeKind::Thm4:
      if (!r.e1) return std::nullopt;
      return 4 * e1;
    case RecipeKind::Rmk34:
    case RecipeKind::Lemma33Generic:
      if (!r.t || !r.e1) return std::nullopt;
      return 2 * t * e1;
    case RecipeKind::Lemma31Generic:
      if (!r.t) return std::nullopt;
      return 2 * t * lift;
    case RecipeKind::Lemma32Generic:
      if (!r.t) return std::nullopt;
      return (2 * t + 1) * lift + 1;
    case RecipeKind::Lemma34Generic:
      if (!r.t || !r.e1) return std::nullopt;
      return (t % 2 == 1 && e1 % 2 == 1) ? t * e1 + 1 : t * e1 + 2;
  }
  return std::nullopt;
}

namespace detail {

inline std::vector<Element> ints(const Field& F, std::initializer_list<std::int64_t> xs) {
  std::vector<Element> out;
  for (auto x : xs) out.push_back(F.from_int(x));
  return out;
}

/// { j (p - 1) / d : j in js } computed in F_p.
inline std::vector<Element> fractions(const Field& F, std::int64_t d, std::initializer_list<std::int64_t> js) {
  const Element step = F.div(F.from_int(-1), F.from_int(d));
  std::vector<Element> out;
  for (auto j : js) out.push_back(F.mul(F.from_int(j), step));
  return out;
}

// Literal base sets, without any applicability checks.
inline EvalSet raw_base_set(const Field& F, const Recipe& r) {
  const std::int64_t q1 = F.q() - 1;
  switch (r.kind) {
    // j(p-1)/d are fractions in F_p, i.e. -j/d; 5 need not divide p - 1.
    case RecipeKind::Thm1a: return EvalSet(F, fractions(F, 3, {0, 1, 2, 3}));
    case RecipeKind::Thm1b: return EvalSet(F, fractions(F, 5, {0, 1, 2, 3, 4, 5}));
    case RecipeKind::Thm2: return EvalSet(F, fractions(F, 2, {0, 1, 2}));
    case RecipeKind::Cor31: return EvalSet(F, ints(F, {0, 1, 2, 3, 4}));
    case RecipeKind::Thm3odd:
    case RecipeKind::Thm3even: {
      std::vector<Element> a;
      for (std::uint64_t i = 0; i <= *r.t; ++i) a.push_back(F.from_int(static_cast<std::int64_t>(i)));
      return EvalSet(F, std::move(a));
    }
    case RecipeKind::Thm4: {
      const auto e1 = static_cast<std::int64_t>(*r.e1);
      return EvalSet(F, {F.one(), F.neg(F.one()), F.exp(e1), F.exp(-e1)});
    }
    case RecipeKind::Thm5odd:
    case RecipeKind::Thm5even:
      // {0} together with the t-th roots of unity, which lie in F_{p^s}.
      return lift_cosets(F, EvalSet(F, {F.one()}), *r.t, true);
    case RecipeKind::Rmk34: {
      const auto e1 = static_cast<std::int64_t>(*r.e1);
      if (e1 % 2 == 1) {
        const std::int64_t size = static_cast<std::int64_t>(2 * *r.t);
        std::vector<Element> a;
        for (std::int64_t j = 0; j < size; ++j) a.push_back(F.exp(j * (q1 / size)));
        return EvalSet(F, std::move(a));
      }
      return EvalSet(F, {F.exp(e1), F.exp(3 * e1)});
    }
    case RecipeKind::Lemma31Generic:
    case RecipeKind::Lemma32Generic: {
      auto sub = subfield_elements(F, s_of(r));
      const std::size_t size = r.kind == RecipeKind::Lemma31Generic ? 2 * *r.t : 2 * *r.t + 1;
      sub.resize(size);
      return EvalSet(F, std::move(sub));
    }
    case RecipeKind::Lemma33Generic: {
      const auto e1 = static_cast<std::int64_t>(*r.e1);
      const std::int64_t stride = e1 % 2 == 1 ? 1 : 2;
      std::vector<Element> a;
      for (std::uint64_t j = 0; j < 2 * *r.t; ++j) a.push_back(F.exp(static_cast<std::int64_t>(j) * stride * e1));
      return EvalSet(F, std::move(a));
    }
    case RecipeKind::Lemma34Generic: {
      const auto e1 = static_cast<std::int64_t>(*r.e1);
      std::vector<Element> a;
      for (std::uint64_t j = 0; j < *r.t; ++j) a.push_back(F.exp(static_cast<std::int64_t>(j) * e1));
      return EvalSet(F, std::move(a));
    }
  }
  throw Error(Errc::InvalidArgument, "unknown recipe kind");
}

inline std::string mod_clause(const char* var, std::uint64_t value, std::uint64_t modulus,
                              std::initializer_list<std::uint64_t> residues) {
  for (auto res : residues)
    if (value % modulus == res) return {};
  std::string rs;
  for (auto res : residues) rs += (rs.empty() ? "" : ", ") + std::to_string(res);
  return std::string(var) + " ≢ " + rs + " (mod " + std::to_string(modulus) + ")";
}

}  // namespace detail

/// Evaluates the exact hypotheses of a recipe over F.
inline Applicability applicable(const Field& F, const Recipe& r) {
  using A = Applicability;
  if ((r.p != 0 && r.p != F.p()) || (r.m != 0 && r.m != F.m()))
    return A::no("recipe was made for a different field");
  const std::uint64_t p = F.p();
  const std::uint64_t q = F.q();
  const unsigned m = F.m();
  const unsigned s = detail::s_of(r);
  const unsigned l = detail::l_of(r);
  const Element minus_one = F.neg(F.one());
  auto eta = [&](std::int64_t x) { return quadratic_character(F, F.from_int(x)); };

  auto check_affine = [&](bool extended) -> A {
    if (s == 0 || m % s != 0) return A::no("s ∤ m");
    if (l >= m / s) return A::no("l out of range [0, m/s)");
    if (extended && q % 4 != 1 && l % 2 == 1)
      return A::no("q ≢ 1 (mod 4) and l odd: extended affine lift unsupported");
    return A::yes();
  };
  auto need_t = [&]() -> A { return r.t ? A::yes() : A::no("missing parameter t"); };
  auto need_e1 = [&]() -> A {
    if (!r.e1) return A::no("missing parameter e1");
    if (*r.e1 == 0 || (q - 1) % *r.e1 != 0) return A::no("e1 ∤ q - 1");
    if (r.e2 && *r.e2 * *r.e1 != q - 1) return A::no("e1 e2 ≠ q - 1");
    return A::yes();
  };

  switch (r.kind) {
    case RecipeKind::Thm1a:
      if (auto c = detail::mod_clause("p", p, 12, {1}); !c.empty()) return A::no(c);
      return check_affine(false);
    case RecipeKind::Thm1b:
      if (auto c = detail::mod_clause("p", p, 40, {1, 9}); !c.empty()) return A::no(c);
      return check_affine(false);
    case RecipeKind::Thm2:
      if (auto c = detail::mod_clause("p", p, 8, {1, 3}); !c.empty()) return A::no(c);
      return check_affine(true);
    case RecipeKind::Cor31:
      if (auto c = detail::mod_clause("p", p, 24, {1}); !c.empty()) return A::no(c);
      return check_affine(true);
    case RecipeKind::Thm3odd:
    case RecipeKind::Thm3even: {
      if (auto c = need_t(); !c) return c;
      const std::uint64_t t = *r.t;
      const bool odd = r.kind == RecipeKind::Thm3odd;
      if (t < 2 || t > p - 1) return A::no("t outside [2, p - 1]");
      if ((t % 2 == 1) != odd) return A::no(odd ? "t must be odd" : "t must be even");
      if (quadratic_character(F, minus_one) != 1) return A::no("η(-1) ≠ 1");
      for (std::uint64_t n = 2; n <= t; ++n)
        if (eta(static_cast<std::int64_t>(n)) != 1) return A::no("η(" + std::to_string(n) + ") ≠ 1");
      if (r.s && *r.s != 1) return A::no("s must be 1");
      return check_affine(!odd);
    }
    case RecipeKind::Thm4: {
      if (auto c = detail::mod_clause("p", p, 8, {1, 3}); !c.empty()) return A::no(c);
      if (auto c = need_e1(); !c) return c;
      if (*r.e1 % 2 == 0) return A::no("e1 must be odd");
      if ((q - 1) / *r.e1 < 4) return A::no("e2 < 4");
      return A::yes();
    }
    case RecipeKind::Thm5odd:
    case RecipeKind::Thm5even: {
      if (auto c = need_t(); !c) return c;
      const std::uint64_t t = *r.t;
      const bool odd = r.kind == RecipeKind::Thm5odd;
      if (s == 0 || m % s != 0) return A::no("s ∤ m");
      if (t == 0 || (t % 2 == 1) != odd) return A::no(odd ? "t must be odd" : "t must be even and positive");
      if ((detail::ipow(p, s) - 1) % t != 0) return A::no("t ∤ p^s - 1");
      const auto ti = static_cast<std::int64_t>(t);
      if (odd) {
        if (eta(-ti) != 1) return A::no("η(-t) ≠ 1");
      } else {
        if (eta(ti) != 1) return A::no("η(t) ≠ 1");
        if (eta(-1) != 1) return A::no("η(-1) ≠ 1");
      }
      return check_affine(!odd);
    }
    case RecipeKind::Rmk34: {
      if (q % 4 != 1) return A::no("q ≢ 1 (mod 4)");
      if (auto c = need_t(); !c) return c;
      if (auto c = need_e1(); !c) return c;
      const std::uint64_t n = 2 * *r.t * *r.e1;
      if ((q - 1) % n != 0) return A::no("n ∤ q - 1");
      if (n >= q - 1) return A::no("n ≥ q - 1");
      const auto [k, odd_part] = detail::two_adic(q - 1);
      const auto [kn, odd_n] = detail::two_adic(n);
      const bool matches = kn < k ? (*r.e1 == odd_n && 2 * *r.t == (std::uint64_t{1} << kn))
                                  : (*r.e1 == (std::uint64_t{1} << (k - 1)) * odd_n && *r.t == 1);
      if (!matches) return A::no("(t, e1) do not follow the 2-adic split of n");
      (void)odd_part;
      return A::yes();
    }
    case RecipeKind::Lemma31Generic:
    case RecipeKind::Lemma32Generic: {
      if (auto c = need_t(); !c) return c;
      const bool ext = r.kind == RecipeKind::Lemma32Generic;
      if (auto c = check_affine(ext); !c) return c;
      const std::uint64_t size = ext ? 2 * *r.t + 1 : 2 * *r.t;
      if (size == 0 || size > detail::ipow(p, s)) return A::no("base set larger than the subfield");
      const EvalSet base = detail::raw_base_set(F, r);
      if (!ext && !detail::grs_criterion(base)) return A::no("base set fails the GRS character criterion");
      if (ext && !detail::egrs_criterion(base)) return A::no("base set fails the EGRS character criterion");
      return A::yes();
    }
    case RecipeKind::Lemma33Generic: {
      if (auto c = need_t(); !c) return c;
      if (auto c = need_e1(); !c) return c;
      const std::uint64_t e1 = *r.e1, e2 = (q - 1) / e1, t = *r.t;
      if (t == 0) return A::no("t must be positive");
      const std::uint64_t stride = e1 % 2 == 1 ? 1 : 2;
      if ((2 * t - 1) * stride >= e2) return A::no("too few cosets for 2t base points");
      if (e1 % 2 == 0 && e2 % 2 == 1) return A::no("e1 even requires e2 even");
      if (!detail::grs_criterion(detail::raw_base_set(F, r))) return A::no("base set fails the GRS character criterion");
      return A::yes();
    }
    case RecipeKind::Lemma34Generic: {
      if (auto c = need_t(); !c) return c;
      if (auto c = need_e1(); !c) return c;
      const std::uint64_t e1 = *r.e1, e2 = (q - 1) / e1, t = *r.t;
      if (t == 0 || t > e2) return A::no("t outside [1, e2]");
      const EvalSet base = detail::raw_base_set(F, r);
      const DeltaTable dt = delta_table(base);
      Element prod = F.one();
      for (Element a : base.points()) prod = F.mul(prod, a);
      const Element e1f = F.from_int(static_cast<std::int64_t>(e1));
      if (t % 2 == 1 && e1 % 2 == 1) {
        const int want = quadratic_character(F, prod);
        for (std::size_t i = 0; i < base.size(); ++i)
          if (quadratic_character(F, F.neg(F.mul(e1f, F.mul(dt.deltas[i], base[i])))) != want)
            return A::no("η(∏a) ≠ η(-e1 Δ_A(a) a) for some a");
      } else {
        const int want = quadratic_character(F, e1f);
        for (std::size_t i = 0; i < base.size(); ++i)
          if (quadratic_character(F, F.neg(F.mul(dt.deltas[i], base[i]))) != want)
            return A::no("η(e1) ≠ η(-Δ_A(a) a) for some a");
        const Element sign = (t + 1) % 2 == 0 ? F.one() : minus_one;
        if (quadratic_character(F, F.mul(sign, prod)) != 1) return A::no("η((-1)^(t+1) ∏a) ≠ 1");
      }
      return A::yes();
    }
  }
  return A::no("unknown recipe kind");
}

/// The recipe's literal base set (before lifting).
inline EvalSet base_set(const Field& F, const Recipe& r) {
  if (auto a = applicable(F, r); !a) throw Error(Errc::RecipeNotApplicable, describe(r) + ": " + a.reason);
  return detail::raw_base_set(F, r);
}

struct BuildResult {
  EvalSet points;
  bool extended = false;
};

/// Base set followed by the recipe's lift. The final code length is
/// points.size() + extended.
inline BuildResult build(const Field& F, const Recipe& r) {
  const EvalSet base = base_set(F, r);
  std::optional<EvalSet> out;
  switch (r.kind) {
    case RecipeKind::Thm4:
    case RecipeKind::Rmk34:
    case RecipeKind::Lemma33Generic: out = lift_cosets(F, base, *r.e1, false); break;
    case RecipeKind::Lemma34Generic: out = lift_cosets(F, base, *r.e1, true); break;
    default:
      out = lift_affine(F, base, default_subspace(F, detail::s_of(r), detail::l_of(r)));
      break;
  }
  BuildResult res{std::move(*out), false};
  res.extended = res.points.size() % 2 == 1;
  const std::uint64_t len = res.points.size() + (res.extended ? 1 : 0);
  if (len != predicted_length(F, r))
    throw Error(Errc::InternalCrossCheckFailed, describe(r) + ": built length " + std::to_string(len) +
                                                    " differs from the length formula");
  return res;
}

/// Coset preset for an even length n | q - 1, n < q - 1, q ≡ 1 (mod 4).
inline Recipe rmk34_for_length(const Field& F, std::uint64_t n) {
  const std::uint64_t q1 = F.q() - 1;
  if (F.q() % 4 != 1) throw Error(Errc::RecipeNotApplicable, "q ≢ 1 (mod 4)");
  if (n == 0 || n % 2 != 0 || q1 % n != 0 || n >= q1)
    throw Error(Errc::RecipeNotApplicable, "n must be an even divisor of q - 1 below q - 1");
  const auto [k, r] = detail::two_adic(q1);
  const auto [kn, rn] = detail::two_adic(n);
  Recipe rec = make_recipe(RecipeKind::Rmk34, F);
  if (kn < k) {
    rec.e1 = rn;
    rec.t = (std::uint64_t{1} << kn) / 2;
  } else {
    rec.e1 = (std::uint64_t{1} << (k - 1)) * rn;
    rec.t = 1;
  }
  rec.e2 = q1 / *rec.e1;
  (void)r;
  return rec;
}

/// Affine lift of the first 2t elements of F_{p^s} (GRS).
inline Recipe affine_grs_preset(const Field& F, unsigned s, unsigned l, std::uint64_t t) {
  Recipe r = make_recipe(RecipeKind::Lemma31Generic, F);
  r.s = s;
  r.l = l;
  r.t = t;
  return r;
}

/// Affine lift of the first 2t + 1 elements of F_{p^s} (EGRS).
inline Recipe affine_egrs_preset(const Field& F, unsigned s, unsigned l, std::uint64_t t) {
  Recipe r = make_recipe(RecipeKind::Lemma32Generic, F);
  r.s = s;
  r.l = l;
  r.t = t;
  return r;
}

/// {0} plus the e1-th roots of unity.
inline Recipe unit_coset_preset(const Field& F, std::uint64_t e1) {
  Recipe r = make_recipe(RecipeKind::Lemma34Generic, F);
  r.t = 1;
  r.e1 = e1;
  r.e2 = (F.q() - 1) / e1;
  return r;
}

struct CatalogEntry {
  Recipe recipe;
  std::uint64_t length = 0;
};

/// Every applicable recipe with final length <= n_max, one per (kind, length),
/// kinds in declaration order and parameters ascending.
inline std::vector<CatalogEntry> enumerate_recipes(const Field& F, std::uint64_t n_max) {
  std::vector<CatalogEntry> out;
  const std::uint64_t p = F.p(), q = F.q();
  const unsigned m = F.m();
  const auto q1_divisors = detail::divisors(q - 1);

  auto offer = [&](Recipe r) {
    r.p = F.p();
    r.m = F.m();
    const auto len = predicted_length(F, r);
    if (!len || *len > n_max || *len < 2) return;
    for (const auto& e : out)
      if (e.recipe.kind == r.kind && e.length == *len) return;
    if (!applicable(F, r)) return;
    out.push_back({r, *len});
  };

  std::vector<unsigned> sdivs;
  for (unsigned s = 1; s <= m; ++s)
    if (m % s == 0) sdivs.push_back(s);

  for (RecipeKind kind : kAllRecipeKinds) {
    switch (kind) {
      case RecipeKind::Thm1a:
      case RecipeKind::Thm1b:
      case RecipeKind::Thm2:
      case RecipeKind::Cor31:
        for (unsigned l = 0; l < m; ++l) {
          Recipe r;
          r.kind = kind;
          r.l = l;
          offer(r);
        }
        break;
      case RecipeKind::Thm3odd:
      case RecipeKind::Thm3even:
        for (std::uint64_t t = 2; t + 1 <= p && t < n_max; ++t)
          for (unsigned l = 0; l < m; ++l) {
            Recipe r;
          r.kind = kind;
            r.t = t;
            r.l = l;
            offer(r);
          }
        break;
      case RecipeKind::Thm4:
        for (auto e1 : q1_divisors) {
          if (4 * e1 > n_max) break;
          Recipe r;
          r.kind = kind;
          r.e1 = e1;
          r.e2 = (q - 1) / e1;
          offer(r);
        }
        break;
      case RecipeKind::Thm5odd:
      case RecipeKind::Thm5even:
        for (unsigned s : sdivs)
          for (auto t : detail::divisors(detail::ipow(p, s) - 1)) {
            if (t + 1 > n_max) break;
            for (unsigned l = 0; l < m / s; ++l) {
              Recipe r;
          r.kind = kind;
              r.s = s;
              r.t = t;
              r.l = l;
              offer(r);
            }
          }
        break;
      case RecipeKind::Rmk34:
        if (q % 4 == 1)
          for (auto n : q1_divisors)
            if (n % 2 == 0 && n < q - 1 && n <= n_max) offer(rmk34_for_length(F, n));
        break;
      case RecipeKind::Lemma31Generic:
      case RecipeKind::Lemma32Generic:
        for (unsigned s : sdivs)
          for (unsigned l = 0; l < m / s; ++l)
            for (std::uint64_t t = kind == RecipeKind::Lemma31Generic ? 1 : 0;; ++t) {
              Recipe r;
          r.kind = kind;
              r.s = s;
              r.l = l;
              r.t = t;
              const auto len = predicted_length(F, r);
              const std::uint64_t base = kind == RecipeKind::Lemma31Generic ? 2 * t : 2 * t + 1;
              if (*len > n_max || base > detail::ipow(p, s)) break;
              offer(r);
            }
        break;
      case RecipeKind::Lemma33Generic:
      case RecipeKind::Lemma34Generic:
        for (auto e1 : q1_divisors)
          for (std::uint64_t t = 1; t * e1 < n_max && t <= (q - 1) / e1; ++t) {
            Recipe r;
          r.kind = kind;
            r.t = t;
            r.e1 = e1;
            r.e2 = (q - 1) / e1;
            offer(r);
          }
        break;
    }
  }
  return out;
}

}  // namespace mdssd
