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

#ifndef UNIMETRIC_SCALAR_HPP_
#define UNIMETRIC_SCALAR_HPP_

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace unimetric {

/// Exact rational distance value. GMP keeps results in canonical reduced form.
using Scalar = mpq_class;

/// Raised when an input violates a documented precondition of an operation.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an input is malformed (shape mismatch, bad index, bad grid).
class StructuralError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parses "p/q", "p", or a finite decimal such as "-0.125" exactly.
Scalar parse_scalar(std::string_view text);

/// Always "p/q", including integers ("2/1", "0/1").
std::string format_scalar(const Scalar& value);

/// 2^exponent for any signed exponent.
Scalar pow2(long exponent);

inline Scalar abs_diff(const Scalar& a, const Scalar& b) { return a > b ? Scalar(a - b) : Scalar(b - a); }

inline double to_double(const Scalar& value) { return value.get_d(); }

/// Dense n x n matrix stored row-major. Used for distances and chain values.
template <typename T>
class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(std::size_t n, const T& fill = T()) : n_(n), data_(n * n, fill) {}

  std::size_t size() const { return n_; }
  T& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  friend bool operator==(const SquareMatrix& a, const SquareMatrix& b) {
    return a.n_ == b.n_ && a.data_ == b.data_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<T> data_;
};

using DistanceMatrix = SquareMatrix<Scalar>;

}  // namespace unimetric

#endif  // UNIMETRIC_SCALAR_HPP_
