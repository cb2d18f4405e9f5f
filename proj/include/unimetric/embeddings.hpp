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

#ifndef UNIMETRIC_EMBEDDINGS_HPP_
#define UNIMETRIC_EMBEDDINGS_HPP_

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "unimetric/covers.hpp"
#include "unimetric/maps.hpp"
#include "unimetric/metric_space.hpp"
#include "unimetric/sequence_point.hpp"

namespace unimetric {

struct SeparationRow {
  long n = 0;
  /// lambda_n / 2.
  Scalar threshold;
  /// 2^{1-n}.
  Scalar bound;
  bool holds = true;
  std::optional<std::pair<std::size_t, std::size_t>> witness;
};

struct EmbeddingCertificate {
  /// Continuity of F measured against the sup-norm distances of the images.
  ModulusTable continuity;
  std::vector<SeparationRow> separation;
  bool injective = false;
  /// Level-n coordinates lie in [0, 2^{-n}].
  bool coordinates_in_range = false;
};

struct AharoniEmbedding {
  std::vector<SequencePoint> images;
  /// D_n for n = 1..depth.
  std::vector<Cover> refinements;
  std::vector<Scalar> lambdas;
  /// Coordinate (n, i) is stored at offsets[n - 1] + i.
  std::vector<std::size_t> offsets;
  EmbeddingCertificate certificate;
};

/// f(x, n, i) = min{d(x, M \ V_ni), lambda_n} over the point-finite refinements D_n of the
/// 2^{-n}-ball covers, with lambda_n = min(Lebesgue number of D_n, 2^{-n}) / 2.
AharoniEmbedding aharoni_embed(const FiniteMetricSpace& m, long depth);

/// (r x)_n = max(0, x_n - limsup x) on [0, 1]-valued points.
SequencePoint q0_retract(const SequencePoint& x);

}  // namespace unimetric

#endif  // UNIMETRIC_EMBEDDINGS_HPP_
