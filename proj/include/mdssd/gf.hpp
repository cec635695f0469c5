// SPDX-License-Identifier: Apache-2.0
//
// Arithmetic in F_{p^m}, p odd.
//
// Elements are stored in packed form: the polynomial-basis coordinates
// c_0 + c_1 x + ... + c_{m-1} x^{m-1} are encoded as the integer
// sum c_i p^i. Packed order is the element order used everywhere a
// deterministic choice is needed (modulus scan, primitive element, square
// root branch, subfield listing).
#pragma once

#include <algorithm>
#include <cmath>
#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "mdssd/error.hpp"

namespace mdssd {

namespace detail {

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

/// Prime factorization by trial division, primes ascending.
inline std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

inline std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    if (d != n / d) out.push_back(n / d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// If n = p^m for a prime p, returns (p, m).
inline std::optional<std::pair<std::uint64_t, unsigned>> prime_power(std::uint64_t n) {
  if (n < 2) return std::nullopt;
  auto f = factorize(n);
  if (f.size() != 1) return std::nullopt;
  return std::make_pair(f[0].first, f[0].second);
}

inline std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

inline std::int64_t mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace detail

/// A field element in packed p-adic form. Only meaningful together with the
/// Field that produced it.
struct Element {
  std::uint32_t v = 0;

  constexpr Element() = default;
  constexpr explicit Element(std::uint32_t packed) : v(packed) {}

  constexpr std::uint32_t packed() const { return v; }
  constexpr bool is_zero() const { return v == 0; }

  friend constexpr bool operator==(Element, Element) = default;
  friend constexpr auto operator<=>(Element, Element) = default;
};

class Field;
Field make_field(std::uint64_t p, unsigned m, std::uint64_t size_cap);

/// F_q with q = p^m. Immutable; copies share the arithmetic tables.
class Field {
 public:
  static constexpr std::uint64_t kDefaultSizeCap = std::uint64_t{1} << 20;

  std::uint32_t p() const { return d_->p; }
  unsigned m() const { return d_->m; }
  std::uint32_t q() const { return d_->q; }
  /// Monic modulus, constant term first (m + 1 entries).
  const std::vector<std::uint32_t>& modulus() const { return d_->modulus; }
  Element theta() const { return d_->theta; }

  Element zero() const { return Element{0}; }
  Element one() const { return Element{1}; }

  /// Embeds an integer into the prime subfield.
  Element from_int(std::int64_t x) const {
    return Element{static_cast<std::uint32_t>(detail::mod(x, d_->p))};
  }

  Element element(std::uint64_t packed) const {
    if (packed >= d_->q)
      throw Error(Errc::InvalidArgument,
                  "packed value " + std::to_string(packed) + " out of range for q = " + std::to_string(d_->q));
    return Element{static_cast<std::uint32_t>(packed)};
  }

  Element from_coeffs(std::span<const std::uint32_t> c) const {
    if (c.size() != d_->m) throw Error(Errc::InvalidArgument, "coefficient vector must have length m");
    std::uint64_t v = 0;
    for (std::size_t i = c.size(); i-- > 0;) {
      if (c[i] >= d_->p) throw Error(Errc::InvalidArgument, "coefficient out of range");
      v = v * d_->p + c[i];
    }
    return Element{static_cast<std::uint32_t>(v)};
  }

  std::vector<std::uint32_t> coeffs(Element a) const {
    std::vector<std::uint32_t> c(d_->m);
    std::uint32_t v = a.v;
    for (auto& ci : c) {
      ci = v % d_->p;
      v /= d_->p;
    }
    return c;
  }

  Element add(Element a, Element b) const {
    if (d_->m == 1) {
      std::uint32_t s = a.v + b.v;
      return Element{s >= d_->p ? s - d_->p : s};
    }
    if (a.v == 0) return b;
    if (b.v == 0) return a;
    std::uint32_t la = d_->log[a.v], lb = d_->log[b.v];
    if (la > lb) std::swap(la, lb);
    std::uint32_t z = d_->zech[lb - la];
    if (z == kNoLog) return Element{0};
    return Element{d_->exp[la + z]};
  }

  Element neg(Element a) const {
    if (a.v == 0) return a;
    if (d_->m == 1) return Element{d_->p - a.v};
    return Element{d_->exp[d_->log[a.v] + (d_->q - 1) / 2]};
  }

  Element sub(Element a, Element b) const { return add(a, neg(b)); }

  Element mul(Element a, Element b) const {
    if (a.v == 0 || b.v == 0) return Element{0};
    if (d_->m == 1) return Element{static_cast<std::uint32_t>(std::uint64_t{a.v} * b.v % d_->p)};
    return Element{d_->exp[d_->log[a.v] + d_->log[b.v]]};
  }

  Element inv(Element a) const {
    if (a.v == 0) throw Error(Errc::InvalidArgument, "inverse of zero");
    std::uint32_t l = d_->log[a.v];
    return Element{d_->exp[l == 0 ? 0 : (d_->q - 1) - l]};
  }

  Element div(Element a, Element b) const { return mul(a, inv(b)); }

  /// a^e for any integer e; negative exponents require a != 0. 0^0 = 1.
  Element pow(Element a, std::int64_t e) const {
    if (e == 0) return one();
    if (a.v == 0) {
      if (e < 0) throw Error(Errc::InvalidArgument, "negative power of zero");
      return a;
    }
    std::int64_t ord = d_->q - 1;
    std::int64_t t = detail::mod(static_cast<std::int64_t>(d_->log[a.v]) * detail::mod(e, ord), ord);
    return Element{d_->exp[t]};
  }

  /// θ^e.
  Element exp(std::int64_t e) const { return Element{d_->exp[detail::mod(e, d_->q - 1)]}; }

  /// Discrete log to base θ, in [0, q-2].
  std::uint32_t log(Element a) const {
    if (a.v == 0) throw Error(Errc::InvalidArgument, "log of zero");
    return d_->log[a.v];
  }

  /// All q elements in packed order.
  std::vector<Element> elements() const {
    std::vector<Element> out(d_->q);
    for (std::uint32_t i = 0; i < d_->q; ++i) out[i] = Element{i};
    return out;
  }

  bool same_as(const Field& o) const { return d_ == o.d_ || (p() == o.p() && m() == o.m()); }

  friend Field make_field(std::uint64_t p, unsigned m, std::uint64_t size_cap);

 private:
  static constexpr std::uint32_t kNoLog = ~std::uint32_t{0};

  struct Data {
    std::uint32_t p = 0;
    unsigned m = 0;
    std::uint32_t q = 0;
    std::vector<std::uint32_t> modulus;
    Element theta;
    std::vector<std::uint32_t> exp;   // 2(q-1) entries: exp[i] = θ^(i mod q-1)
    std::vector<std::uint32_t> log;   // log[0] unused
    std::vector<std::uint32_t> zech;  // zech[d] = log(1 + θ^d), kNoLog when 1 + θ^d = 0
  };

  explicit Field(std::shared_ptr<const Data> d) : d_(std::move(d)) {}

  std::shared_ptr<const Data> d_;
};

namespace detail {

// Schoolbook arithmetic on coordinate vectors, used only to bootstrap the
// log tables of a new field.
struct SlowArith {
  std::uint32_t p;
  unsigned m;
  std::vector<std::uint32_t> modulus;  // monic, m + 1 entries

  std::vector<std::uint32_t> unpack(std::uint32_t v) const {
    std::vector<std::uint32_t> c(m);
    for (auto& ci : c) {
      ci = v % p;
      v /= p;
    }
    return c;
  }

  std::uint32_t pack(const std::vector<std::uint32_t>& c) const {
    std::uint64_t v = 0;
    for (std::size_t i = m; i-- > 0;) v = v * p + c[i];
    return static_cast<std::uint32_t>(v);
  }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    auto ca = unpack(a), cb = unpack(b);
    for (unsigned i = 0; i < m; ++i) ca[i] = (ca[i] + cb[i]) % p;
    return pack(ca);
  }

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    auto ca = unpack(a), cb = unpack(b);
    std::vector<std::uint64_t> prod(2 * m - 1, 0);
    for (unsigned i = 0; i < m; ++i)
      for (unsigned j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{ca[i]} * cb[j]) % p;
    for (std::size_t d = prod.size(); d-- > m;) {
      std::uint64_t c = prod[d];
      if (c == 0) continue;
      for (unsigned i = 0; i <= m; ++i) prod[d - m + i] = (prod[d - m + i] + (p - c) * modulus[i]) % p;
    }
    std::vector<std::uint32_t> out(m);
    for (unsigned i = 0; i < m; ++i) out[i] = static_cast<std::uint32_t>(prod[i]);
    return pack(out);
  }

  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const {
    std::uint32_t r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
};

/// Remainder of f modulo monic g over F_p (coefficients constant first).
inline std::vector<std::uint32_t> poly_mod_p(std::vector<std::uint32_t> f, const std::vector<std::uint32_t>& g,
                                             std::uint32_t p) {
  const std::size_t dg = g.size() - 1;
  for (std::size_t d = f.size(); d-- > dg;) {
    std::uint64_t c = f[d];
    if (c == 0) continue;
    for (std::size_t i = 0; i <= dg; ++i) f[d - dg + i] = static_cast<std::uint32_t>((f[d - dg + i] + (p - c) * g[i]) % p);
  }
  f.resize(dg);
  return f;
}

/// Irreducibility by trial division with every monic polynomial of degree
/// 1..deg/2.
inline bool is_irreducible_p(const std::vector<std::uint32_t>& f, std::uint32_t p) {
  const unsigned deg = static_cast<unsigned>(f.size() - 1);
  for (unsigned d = 1; 2 * d <= deg; ++d) {
    const std::uint64_t count = ipow(p, d);
    std::vector<std::uint32_t> g(d + 1);
    g[d] = 1;
    for (std::uint64_t n = 0; n < count; ++n) {
      std::uint64_t v = n;
      for (unsigned i = 0; i < d; ++i) {
        g[i] = static_cast<std::uint32_t>(v % p);
        v /= p;
      }
      auto r = poly_mod_p(f, g, p);
      if (std::all_of(r.begin(), r.end(), [](std::uint32_t c) { return c == 0; })) return false;
    }
  }
  return true;
}

}  // namespace detail

/// Builds F_{p^m} with the smallest monic irreducible modulus (lower
/// coefficients scanned in packed order) and the smallest primitive element.
inline Field make_field(std::uint64_t p, unsigned m, std::uint64_t size_cap = Field::kDefaultSizeCap) {
  if (!detail::is_prime(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
  if (p == 2) throw Error(Errc::EvenCharacteristic, "characteristic 2 is not supported");
  if (m < 1) throw Error(Errc::InvalidArgument, "extension degree must be at least 1");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < m; ++i) {
    q *= p;
    if (q > size_cap)
      throw Error(Errc::SizeCapExceeded, std::to_string(p) + "^" + std::to_string(m) + " exceeds the size cap " +
                                             std::to_string(size_cap));
  }

  auto d = std::make_shared<Field::Data>();
  d->p = static_cast<std::uint32_t>(p);
  d->m = m;
  d->q = static_cast<std::uint32_t>(q);

  if (m == 1) {
    d->modulus = {0, 1};
  } else {
    std::vector<std::uint32_t> f(m + 1);
    f[m] = 1;
    for (std::uint64_t n = 0;; ++n) {
      std::uint64_t v = n;
      for (unsigned i = 0; i < m; ++i) {
        f[i] = static_cast<std::uint32_t>(v % p);
        v /= p;
      }
      if (f[0] != 0 && detail::is_irreducible_p(f, d->p)) break;
    }
    d->modulus = f;
  }

  detail::SlowArith slow{d->p, m, d->modulus};
  const std::uint64_t order = q - 1;
  const auto factors = detail::factorize(order);
  std::uint32_t theta = 0;
  for (std::uint32_t g = 1; g < q; ++g) {
    bool primitive = true;
    for (auto [r, e] : factors) {
      if (slow.pow(g, order / r) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      theta = g;
      break;
    }
  }
  d->theta = Element{theta};

  d->exp.resize(2 * order);
  d->log.assign(q, 0);
  std::uint32_t cur = 1;
  for (std::uint64_t i = 0; i < order; ++i) {
    d->exp[i] = cur;
    d->log[cur] = static_cast<std::uint32_t>(i);
    cur = (m == 1) ? static_cast<std::uint32_t>(std::uint64_t{cur} * theta % p) : slow.mul(cur, theta);
  }
  for (std::uint64_t i = 0; i < order; ++i) d->exp[order + i] = d->exp[i];

  if (m > 1) {
    d->zech.resize(order);
    for (std::uint64_t i = 0; i < order; ++i) {
      std::uint32_t s = slow.add(1, d->exp[i]);
      d->zech[i] = s == 0 ? Field::kNoLog : d->log[s];
    }
  }
  return Field(std::move(d));
}

/// η(x): 0 for x = 0, +1 for nonzero squares, -1 otherwise.
inline int quadratic_character(const Field& F, Element x) {
  if (x.is_zero()) return 0;
  return F.pow(x, (F.q() - 1) / 2) == F.one() ? 1 : -1;
}

/// Square root with the smaller packed representative of {y, -y}, or
/// nothing when x is a non-square.
inline std::optional<Element> sqrt(const Field& F, Element x) {
  if (x.is_zero()) return x;
  if (quadratic_character(F, x) != 1) return std::nullopt;
  const std::uint64_t q = F.q();
  Element y;
  if (q % 4 == 3) {
    y = F.pow(x, static_cast<std::int64_t>((q + 1) / 4));
  } else {
    // Tonelli-Shanks with θ as the known non-residue.
    std::uint64_t odd = q - 1;
    unsigned s = 0;
    while (odd % 2 == 0) {
      odd /= 2;
      ++s;
    }
    Element c = F.pow(F.theta(), static_cast<std::int64_t>(odd));
    Element t = F.pow(x, static_cast<std::int64_t>(odd));
    y = F.pow(x, static_cast<std::int64_t>((odd + 1) / 2));
    unsigned r = s;
    while (t != F.one()) {
      unsigned i = 0;
      for (Element t2 = t; t2 != F.one(); t2 = F.mul(t2, t2)) ++i;
      Element b = c;
      for (unsigned j = 0; j + 1 < r - i; ++j) b = F.mul(b, b);
      y = F.mul(y, b);
      c = F.mul(b, b);
      t = F.mul(t, c);
      r = i;
    }
  }
  Element other = F.neg(y);
  return std::min(y, other);
}

/// All p^s elements of the subfield F_{p^s}, ascending in packed order.
inline std::vector<Element> subfield_elements(const Field& F, unsigned s) {
  if (s == 0 || F.m() % s != 0)
    throw Error(Errc::NotASubfieldDegree, std::to_string(s) + " does not divide " + std::to_string(F.m()));
  const std::uint64_t r = detail::ipow(F.p(), s);
  Element g = F.pow(F.theta(), static_cast<std::int64_t>((F.q() - 1) / (r - 1)));
  std::vector<Element> out{F.zero()};
  Element cur = F.one();
  for (std::uint64_t i = 0; i + 1 < r; ++i) {
    out.push_back(cur);
    cur = F.mul(cur, g);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Least x >= 0 with a = θ^(x e1).
inline std::uint64_t subgroup_dlog(const Field& F, std::uint64_t e1, Element a) {
  const std::uint64_t order = F.q() - 1;
  if (e1 == 0 || order % e1 != 0)
    throw Error(Errc::InvalidArgument, std::to_string(e1) + " does not divide q - 1");
  const std::uint64_t e2 = order / e1;
  if (a.is_zero() || F.pow(a, static_cast<std::int64_t>(e2)) != F.one())
    throw Error(Errc::NotInSubgroup, "element " + std::to_string(a.packed()) + " is not in <theta^" +
                                         std::to_string(e1) + ">");
  const Element g = F.pow(F.theta(), static_cast<std::int64_t>(e1));
  if (e2 <= (std::uint64_t{1} << 16)) {
    Element cur = F.one();
    for (std::uint64_t x = 0; x < e2; ++x) {
      if (cur == a) return x;
      cur = F.mul(cur, g);
    }
  } else {
    const auto step = static_cast<std::uint64_t>(std::ceil(std::sqrt(static_cast<double>(e2))));
    std::unordered_map<std::uint32_t, std::uint64_t> baby;
    Element cur = F.one();
    for (std::uint64_t j = 0; j < step; ++j) {
      baby.emplace(cur.packed(), j);
      cur = F.mul(cur, g);
    }
    const Element giant = F.inv(F.pow(g, static_cast<std::int64_t>(step)));
    Element y = a;
    for (std::uint64_t i = 0; i <= step; ++i) {
      if (auto it = baby.find(y.packed()); it != baby.end()) return i * step + it->second;
      y = F.mul(y, giant);
    }
  }
  throw Error(Errc::InternalCrossCheckFailed, "subgroup_dlog failed for a subgroup member");
}

}  // namespace mdssd
