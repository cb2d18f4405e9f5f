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

#ifndef UNIMETRIC_ORACLES_HPP_
#define UNIMETRIC_ORACLES_HPP_

// Brute-force reference computations. They share no code with the fast
// paths and are only meant for small inputs.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <vector>

#include "unimetric/covers.hpp"
#include "unimetric/metric_space.hpp"

namespace unimetric::oracle {

/// Relaxes every edge until nothing changes.
inline DistanceMatrix relaxed_paths(const DistanceMatrix& w) {
  const std::size_t n = w.size();
  DistanceMatrix d = w;
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
          if (d(i, k) + w(k, j) < d(i, j)) {
            d(i, j) = d(i, k) + w(k, j);
            changed = true;
          }
        }
      }
    }
  }
  return d;
}

/// inf of d over pairs drawn from the two classes.
inline DistanceMatrix blocks(const FiniteMetricSpace& m, const std::vector<std::size_t>& class_of, std::size_t k) {
  DistanceMatrix b(k);
  std::vector<std::vector<bool>> seen(k, std::vector<bool>(k, false));
  for (std::size_t x = 0; x < m.size(); ++x) {
    for (std::size_t y = 0; y < m.size(); ++y) {
      const std::size_t a = class_of[x], c = class_of[y];
      if (!seen[a][c] || m(x, y) < b(a, c)) b(a, c) = m(x, y);
      seen[a][c] = true;
    }
  }
  for (std::size_t a = 0; a < k; ++a) b(a, a) = 0;
  return b;
}

inline DistanceMatrix quotient_dinf(const FiniteMetricSpace& m, const std::vector<std::size_t>& class_of,
                                    std::size_t k) {
  return relaxed_paths(blocks(m, class_of, k));
}

/// Minimum over every class sequence c_0 = a, ..., c_n = b of the summed block distances.
inline DistanceMatrix quotient_dn(const FiniteMetricSpace& m, const std::vector<std::size_t>& class_of, std::size_t k,
                                  std::size_t n) {
  const DistanceMatrix b = blocks(m, class_of, k);
  DistanceMatrix out(k);
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t c = 0; c < k; ++c) {
      std::optional<Scalar> best;
      std::vector<std::size_t> mid(n > 0 ? n - 1 : 0, 0);
      while (true) {
        Scalar total = 0;
        std::size_t prev = a;
        for (std::size_t s : mid) {
          total += b(prev, s);
          prev = s;
        }
        total += b(prev, c);
        if (!best || total < *best) best = total;
        std::size_t pos = 0;
        while (pos < mid.size() && ++mid[pos] == k) mid[pos++] = 0;
        if (pos == mid.size()) break;
      }
      out(a, c) = *best;
    }
  }
  return out;
}

inline Scalar set_distance(const FiniteMetricSpace& m, std::size_t x, const Subset& s) {
  Scalar best = m(x, s.front());
  for (std::size_t p : s) best = std::min(best, m(x, p));
  return best;
}

/// min(1, max_x |d(x, A) - d(x, B)|).
inline Scalar hausdorff_prime(const FiniteMetricSpace& m, const Subset& a, const Subset& b) {
  Scalar best = 0;
  for (std::size_t x = 0; x < m.size(); ++x) {
    best = std::max(best, abs_diff(set_distance(m, x, a), set_distance(m, x, b)));
  }
  return std::min(best, Scalar(1));
}

inline bool inside_some_member(const Cover& c, const Subset& s) {
  for (const Subset& member : c.sets()) {
    if (std::includes(member.begin(), member.end(), s.begin(), s.end())) return true;
  }
  return false;
}

/// First spectrum value s such that some set of diameter <= s lies in no member.
inline std::optional<Scalar> lebesgue(const Cover& c, const FiniteMetricSpace& m) {
  const std::size_t n = m.size();
  for (const Scalar& s : m.spectrum()) {
    for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
      Subset set;
      for (std::size_t i = 0; i < n; ++i) {
        if (mask >> i & 1) set.push_back(i);
      }
      bool small = true;
      for (std::size_t i : set) {
        for (std::size_t j : set) small = small && m(i, j) <= s;
      }
      if (small && !inside_some_member(c, set)) return s;
    }
  }
  return std::nullopt;
}

/// f(x, y) = min 2^{-n} over n with x and y in one member of C_{2n}; C_0 is the whole set.
inline Scalar au_prefunction(const FundamentalSequence& seq, std::size_t x, std::size_t y) {
  if (x == y) return 0;
  Scalar best = 1;
  for (std::size_t n = 1; 2 * n <= seq.covers.size(); ++n) {
    const Subset pair = x < y ? Subset{x, y} : Subset{y, x};
    if (inside_some_member(seq.covers[2 * n - 1], pair)) best = std::min(best, pow2(-static_cast<long>(n)));
  }
  return best;
}

inline std::size_t triangle_violations(const FiniteMetricSpace& m) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) {
      for (std::size_t k = 0; k < m.size(); ++k) count += m(i, k) > m(i, j) + m(j, k);
    }
  }
  return count;
}

}  // namespace unimetric::oracle

#endif  // UNIMETRIC_ORACLES_HPP_
