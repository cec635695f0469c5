// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "mdssd/error.hpp"
#include "mdssd/gf.hpp"

namespace mdssd {

/// Ordered set of distinct evaluation points a_1, ..., a_n in F_q.
class EvalSet {
 public:
  EvalSet(Field field, std::vector<Element> points) : field_(std::move(field)), points_(std::move(points)) {
    if (points_.size() > field_.q())
      throw Error(Errc::InvalidArgument, "more evaluation points than field elements");
    std::vector<Element> sorted = points_;
    std::sort(sorted.begin(), sorted.end());
    if (auto it = std::adjacent_find(sorted.begin(), sorted.end()); it != sorted.end())
      throw Error(Errc::DuplicatePoint, "point " + std::to_string(it->packed()) + " occurs twice");
    for (Element a : points_) field_.element(a.packed());
  }

  const Field& field() const { return field_; }
  const std::vector<Element>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  Element operator[](std::size_t i) const { return points_[i]; }

  bool contains(Element a) const { return std::find(points_.begin(), points_.end(), a) != points_.end(); }

 private:
  Field field_;
  std::vector<Element> points_;
};

}  // namespace mdssd
