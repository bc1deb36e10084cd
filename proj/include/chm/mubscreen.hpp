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

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "chm/matrix.hpp"

namespace chm {

/// Orthonormal basis stored column-wise. A complex Hadamard matrix H of order
/// d enters as H / sqrt(d); the identity is kept exact.
class Basis {
 public:
  static Basis identity(int d);
  /// Throws NotACHM unless `h` verifies as a complex Hadamard matrix.
  static Basis from_hadamard(const UnitMatrix& h);

  int dimension() const noexcept { return d_; }
  std::complex<double> operator()(int r, int c) const {
    return data_[static_cast<std::size_t>(r * d_ + c)];
  }

 private:
  int d_ = 0;
  std::vector<std::complex<double>> data_;
};

inline constexpr double kUnbiasedTolerance = 1e-9;

/// Every column pair (a from A, b from B) has |<a, b>| within tol of
/// 1/sqrt(d). Throws DimensionMismatch for different dimensions.
bool is_unbiased(const Basis& a, const Basis& b, double tol = kUnbiasedTolerance);

struct SubmatrixWitness {
  std::vector<int> rows;
  std::vector<int> cols;
};

/// First (lexicographic in the column subset) r x c submatrix whose entries
/// all classify Real, if any.
std::optional<SubmatrixWitness> real_submatrix_exists(const UnitMatrix& m, int r, int c);

/// A 6x6 CHM in a hypothetical MUB trio has at most this many real entries.
inline constexpr int kMubTrioMaxRealEntries = 22;

enum class VerdictKind { ExcludedByRealCount, ExcludedByRealSubmatrix, NotExcluded };

/// Stable tags: excluded-by-real-count, excluded-by-real-submatrix,
/// not-excluded.
const char* verdict_tag(VerdictKind kind) noexcept;

struct ScreenVerdict {
  VerdictKind kind = VerdictKind::NotExcluded;
  Census census;
  std::optional<SubmatrixWitness> witness;  // set for ExcludedByRealSubmatrix
};

/// Count bound first, then the 3x2 real submatrix test. NotExcluded only
/// means neither test applies. Throws DimensionMismatch for non-6x6 input and
/// NotACHM if verification fails.
ScreenVerdict screen(const UnitMatrix& m);

/// `verdict=<tag> count=<m> [witness_rows=a,b,c witness_cols=x,y]`
std::string format_verdict(const ScreenVerdict& v);

}  // namespace chm
