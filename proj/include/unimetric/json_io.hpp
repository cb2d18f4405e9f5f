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

#ifndef UNIMETRIC_JSON_IO_HPP_
#define UNIMETRIC_JSON_IO_HPP_

#include <string_view>

#include "json.hpp"

#include "unimetric/covers.hpp"
#include "unimetric/cubohedra.hpp"
#include "unimetric/geometry.hpp"
#include "unimetric/inverse_limits.hpp"
#include "unimetric/maps.hpp"
#include "unimetric/metric_space.hpp"
#include "unimetric/quotient.hpp"
#include "unimetric/sequence_point.hpp"

namespace unimetric {

using Json = nlohmann::ordered_json;

// Readers throw StructuralError on malformed input.

Json parse_json(std::string_view text);

Scalar scalar_from_json(const Json& j);
Json to_json(const Scalar& s);

FiniteMetricSpace space_from_json(const Json& j);
Json to_json(const FiniteMetricSpace& m);

/// Sorted, duplicate-free index array below `ground_size`.
Subset subset_from_json(const Json& j, std::size_t ground_size);
Json subset_to_json(const Subset& s);

/// {"pairs": [[src, tgt], ...]} covering every source point exactly once.
TotalMap map_from_json(const Json& j, std::size_t source_size, std::size_t target_size);
PartialMap partial_map_from_json(const Json& j, std::size_t source_size, std::size_t target_size);
Json map_to_json(const TotalMap& f);

Cover cover_from_json(const Json& j);
Json to_json(const Cover& c);
FundamentalSequence fundamental_sequence_from_json(const Json& j);

Surjection surjection_from_json(const Json& j, std::size_t source_size);

NormedPointSet point_set_from_json(const Json& j);
Json to_json(const NormedPointSet& s);

Grid grid_from_json(const Json& j);
/// Comma-separated rationals, e.g. "0,1/2,1".
Grid grid_from_csv(std::string_view csv);

SequencePoint sequence_point_from_json(const Json& j);
Json to_json(const SequencePoint& p);
Cubohedron cubohedron_from_json(const Json& j);
Json to_json(const Cubohedron& k);

InverseSequenceTruncation truncation_from_json(const Json& j);
/// {"x": truncation, "y": truncation, "cross": [map], "index"?, "alphas"?, "betas"?}.
LadderData ladder_from_json(const Json& j);

}  // namespace unimetric

#endif  // UNIMETRIC_JSON_IO_HPP_
