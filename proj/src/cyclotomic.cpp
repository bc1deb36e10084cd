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

#include "chm/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <string>

#include "chm/error.hpp"

namespace chm {

namespace {

using Poly = std::vector<std::int64_t>;

// Exact division by a monic polynomial; deg(num) >= deg(den).
Poly divide_monic(Poly num, const Poly& den) {
  const std::size_t dn = den.size() - 1;
  Poly quot(num.size() - dn, 0);
  for (std::size_t k = num.size(); k-- > dn;) {
    const std::int64_t c = num[k];
    if (c == 0) continue;
    quot[k - dn] = c;
    for (std::size_t j = 0; j <= dn; ++j) num[k - dn + j] -= c * den[j];
  }
  return quot;
}

std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

std::vector<std::int64_t> cyclotomic_polynomial(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "cyclotomic order < 1");
  static std::map<int, Poly> cache;
  {
    std::lock_guard lock(cache_mutex());
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  Poly p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = -1;
  p[static_cast<std::size_t>(n)] = 1;
  for (int d = 1; d < n; ++d)
    if (n % d == 0) p = divide_monic(std::move(p), cyclotomic_polynomial(d));
  std::lock_guard lock(cache_mutex());
  cache.emplace(n, p);
  return p;
}

CyclotomicField::CyclotomicField(int order) : order_(order) {
  if (order < 1 || order > kMaxOrder)
    throw Error(ErrorCode::ExactModeUnavailable,
                "common denominator " + std::to_string(order) +
                    " outside the exact-arithmetic range");
  modulus_ = cyclotomic_polynomial(order);
}

std::vector<std::int64_t> CyclotomicField::reduce(
    std::span<const std::int64_t> counts) const {
  if (static_cast<int>(counts.size()) != order_)
    throw Error(ErrorCode::DimensionMismatch, "count vector length != order");
  const int deg = degree();
  std::vector<std::int64_t> r(counts.begin(), counts.end());
  for (int k = order_ - 1; k >= deg; --k) {
    const std::int64_t c = r[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    for (int j = 0; j <= deg; ++j)
      r[static_cast<std::size_t>(k - deg + j)] -=
          c * modulus_[static_cast<std::size_t>(j)];
  }
  r.resize(static_cast<std::size_t>(deg));
  return r;
}

bool CyclotomicField::is_zero(std::span<const std::int64_t> counts) const {
  for (std::int64_t c : reduce(counts))
    if (c != 0) return false;
  return true;
}

bool CyclotomicField::is_zero_sum(std::span<const int> exponents) const {
  std::vector<std::int64_t> counts(static_cast<std::size_t>(order_), 0);
  for (int e : exponents) {
    int k = e % order_;
    if (k < 0) k += order_;
    ++counts[static_cast<std::size_t>(k)];
  }
  return is_zero(counts);
}

const CyclotomicField& cyclotomic_field(int order) {
  static std::map<int, std::unique_ptr<CyclotomicField>> fields;
  static std::mutex m;
  std::lock_guard lock(m);
  auto& slot = fields[order];
  if (!slot) {
    try {
      slot = std::make_unique<CyclotomicField>(order);
    } catch (...) {
      fields.erase(order);
      throw;
    }
  }
  return *slot;
}

}  // namespace chm
