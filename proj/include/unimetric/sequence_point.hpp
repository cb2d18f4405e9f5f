// Copyright 2026 The unimetric Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef UNIMETRIC_SEQUENCE_POINT_HPP_
#define UNIMETRIC_SEQUENCE_POINT_HPP_

#include <cstdint>
#include <map>

#include "unimetric/scalar.hpp"

namespace unimetric {

/// A bounded sequence that is constant (equal to `tail`) outside a finite
/// support. Models points of U(N,I), q0 and c00 with exact limsup = tail.
class SequencePoint {
 public:
  using Index = std::uint64_t;

  SequencePoint() = default;
  SequencePoint(std::map<Index, Scalar> support, Scalar tail = 0);

  const Scalar& tail() const { return tail_; }
  const std::map<Index, Scalar>& support() const { return support_; }

  /// Coordinate value; `tail` for unlisted indices.
  Scalar at(Index i) const;
  void set(Index i, const Scalar& value);

  /// Applies `fn` to every listed coordinate and to the tail.
  template <typename Fn>
  SequencePoint map_values(Fn&& fn) const {
    std::map<Index, Scalar> out;
    for (const auto& [i, v] : support_) out.emplace(i, fn(v));
    return SequencePoint(std::move(out), fn(tail_));
  }

  friend bool operator==(const SequencePoint& a, const SequencePoint& b) {
    return a.tail_ == b.tail_ && a.support_ == b.support_;
  }

 private:
  void canonicalize();

  std::map<Index, Scalar> support_;
  Scalar tail_ = 0;
};

/// Sup-norm distance. Differing tails contribute |tail_a - tail_b|.
Scalar sup_distance(const SequencePoint& a, const SequencePoint& b);

}  // namespace unimetric

#endif  // UNIMETRIC_SEQUENCE_POINT_HPP_
