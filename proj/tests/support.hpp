// Small conveniences shared by the unit tests.
#pragma once

#include <initializer_list>
#include <random>
#include <vector>

#include "mdssd/eval_set.hpp"
#include "mdssd/gf.hpp"
#include "oracles.hpp"

namespace testing_support {

inline std::vector<mdssd::Element> elems(const mdssd::Field& F, std::initializer_list<std::int64_t> xs) {
  std::vector<mdssd::Element> out;
  for (auto x : xs) out.push_back(F.from_int(x));
  return out;
}

inline mdssd::EvalSet eval_set(const mdssd::Field& F, std::initializer_list<std::int64_t> xs) {
  return mdssd::EvalSet(F, elems(F, xs));
}

inline std::vector<std::uint32_t> packed(const std::vector<mdssd::Element>& xs) {
  std::vector<std::uint32_t> out;
  for (auto x : xs) out.push_back(x.packed());
  return out;
}

inline oracle::NaiveGF naive(const mdssd::Field& F) { return oracle::NaiveGF(F.p(), F.modulus()); }

template <class Rng>
mdssd::EvalSet random_eval_set(const mdssd::Field& F, Rng& rng, std::size_t n) {
  std::vector<mdssd::Element> pts;
  for (auto v : oracle::random_subset(rng, F.q(), n)) pts.push_back(mdssd::Element{v});
  std::shuffle(pts.begin(), pts.end(), rng);
  return mdssd::EvalSet(F, std::move(pts));
}

}  // namespace testing_support
