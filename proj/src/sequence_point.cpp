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

#include "unimetric/sequence_point.hpp"

#include <algorithm>

namespace unimetric {

SequencePoint::SequencePoint(std::map<Index, Scalar> support, Scalar tail)
    : support_(std::move(support)), tail_(std::move(tail)) {
  canonicalize();
}

void SequencePoint::canonicalize() {
  std::erase_if(support_, [&](const auto& entry) { return entry.second == tail_; });
}

Scalar SequencePoint::at(Index i) const {
  auto it = support_.find(i);
  return it == support_.end() ? tail_ : it->second;
}

void SequencePoint::set(Index i, const Scalar& value) {
  if (value == tail_) {
    support_.erase(i);
  } else {
    support_[i] = value;
  }
}

Scalar sup_distance(const SequencePoint& a, const SequencePoint& b) {
  Scalar best = abs_diff(a.tail(), b.tail());
  for (const auto& [i, v] : a.support()) best = std::max(best, abs_diff(v, b.at(i)));
  for (const auto& [i, v] : b.support()) best = std::max(best, abs_diff(a.at(i), v));
  return best;
}

}  // namespace unimetric
