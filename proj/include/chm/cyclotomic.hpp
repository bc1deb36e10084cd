// Copyright 2026 The chm Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace chm {

/// Integer coefficients (lowest degree first) of the n-th cyclotomic
/// polynomial.
std::vector<std::int64_t> cyclotomic_polynomial(int n);

/// Exact arithmetic in Z[zeta_N] via the power basis 1, x, ..., x^{phi(N)-1}
/// modulo the N-th cyclotomic polynomial.
class CyclotomicField {
 public:
  static constexpr int kMaxOrder = 1 << 14;

  explicit CyclotomicField(int order);

  int order() const noexcept { return order_; }
  int degree() const noexcept { return static_cast<int>(modulus_.size()) - 1; }

  /// Reduces sum_k counts[k] * zeta^k (counts.size() == order) and returns
  /// the coefficient vector of length degree().
  std::vector<std::int64_t> reduce(std::span<const std::int64_t> counts) const;

  /// True iff sum_k counts[k] * zeta^k == 0.
  bool is_zero(std::span<const std::int64_t> counts) const;

  /// True iff sum_j zeta^{exponents[j]} == 0; exponents are taken mod N.
  bool is_zero_sum(std::span<const int> exponents) const;

 private:
  int order_;
  std::vector<std::int64_t> modulus_;  // monic, degree phi(N)
};

/// Shared, lazily built field for order N. Thread-safe.
const CyclotomicField& cyclotomic_field(int order);

}  // namespace chm
