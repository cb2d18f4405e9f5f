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

#include "unimetric/scalar.hpp"

#include <cctype>

namespace unimetric {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  Scalar result;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    auto num = body.substr(0, slash);
    auto den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
      throw StructuralError("malformed rational '" + std::string(text) + "'");
    }
    mpz_class d{std::string(den), 10};
    if (d == 0) throw StructuralError("zero denominator in '" + std::string(text) + "'");
    result = Scalar(mpz_class{std::string(num), 10}, d);
    result.canonicalize();
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    auto whole = body.substr(0, dot);
    auto frac = body.substr(dot + 1);
    if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)) ||
        (whole.empty() && frac.empty())) {
      throw StructuralError("malformed decimal '" + std::string(text) + "'");
    }
    mpz_class digits{std::string(whole) + std::string(frac), 10};
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    result = Scalar(digits, scale);
    result.canonicalize();
  } else {
    if (!all_digits(body)) throw StructuralError("malformed scalar '" + std::string(text) + "'");
    result = Scalar(mpz_class{std::string(body), 10});
  }
  return negative ? Scalar(-result) : result;
}

std::string format_scalar(const Scalar& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Scalar pow2(long exponent) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  if (exponent >= 0) return Scalar(p);
  Scalar r(mpz_class(1), p);
  r.canonicalize();
  return r;
}

}  // namespace unimetric
