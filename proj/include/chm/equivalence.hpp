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
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "chm/matrix.hpp"

namespace chm {

using Permutation = std::vector<int>;

/// M -> P * D_r * M * D_c * Q.
///
/// Read right to left: permute columns, scale columns, scale rows, permute
/// rows. With pi = row_perm and sigma = col_perm,
///
///   apply(T, M)(i, k) = row_phases[pi[i]] * M(pi[i], sigma[k]) *
///                       col_phases[sigma[k]]
///
/// so row_phases/col_phases are indexed by the rows/columns of the input and
/// row_perm[i] names the input row that lands in output row i. Worked 2x2
/// example: M = [[a, b], [c, d]], row_perm = (1, 0), row_phases = (r0, r1),
/// col_phases = (c0, c1), col_perm = (0, 1) gives
///
///   [[r1*c*c0, r1*d*c1],
///    [r0*a*c0, r0*b*c1]].
struct MonomialTransform {
  Permutation row_perm;
  std::vector<Phase> row_phases;
  std::vector<Phase> col_phases;
  Permutation col_perm;

  static MonomialTransform identity(int n);
  int order() const noexcept { return static_cast<int>(row_perm.size()); }
  bool is_permutation_only() const;

  friend bool operator==(const MonomialTransform&,
                         const MonomialTransform&) = default;
};

/// Throws DimensionMismatch if orders differ.
UnitMatrix apply(const MonomialTransform& t, const UnitMatrix& m);

/// apply(compose(outer, inner), M) == apply(outer, apply(inner, M)).
MonomialTransform compose(const MonomialTransform& outer,
                          const MonomialTransform& inner);

struct Dephased {
  UnitMatrix matrix;
  MonomialTransform transform;  // apply(transform, input) == matrix
};

/// Divides row j by its first entry, then column k by the resulting first-row
/// entry. First row and column of the result are all t(0).
Dephased dephase(const UnitMatrix& m);

inline constexpr int kMaxEquivalenceOrder = 8;

/// Permutation-only transform T with apply(T, b) == a, if one exists.
/// Rational entries compare exactly, radian entries within kAngleTolerance.
/// Throws OrderTooLarge above kMaxEquivalenceOrder.
std::optional<MonomialTransform> find_equivalence(const UnitMatrix& a,
                                                  const UnitMatrix& b);
bool are_equivalent(const UnitMatrix& a, const UnitMatrix& b);

/// Uniform integer in [0, bound) from a 64-bit Mersenne Twister, by
/// rejection, so streams are identical across standard libraries.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);
Permutation random_permutation(int n, std::mt19937_64& rng);

/// Random permutations and phases drawn from the `roots`-th roots of unity.
/// Draw order: row_perm, row_phases, col_phases, col_perm.
MonomialTransform random_transform(int n, int roots, std::mt19937_64& rng);
/// Random row and column permutations, unit phases.
MonomialTransform random_permutation_transform(int n, std::mt19937_64& rng);

/// apply(random_transform(n, roots, mt19937_64(seed)), m).
UnitMatrix random_orbit(const UnitMatrix& m, std::uint64_t seed, int roots);

/// Text format: four lines `rowperm: ...`, `rowphases: ...`,
/// `colphases: ...`, `colperm: ...` (any order, each exactly once).
MonomialTransform parse_transform(std::string_view text);
std::string format_transform(const MonomialTransform& t);

}  // namespace chm
