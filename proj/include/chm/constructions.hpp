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

#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "chm/matrix.hpp"

namespace chm {

/// Achievable real-entry counts for orders 2, 3, 4 and 6.
const std::map<int, std::set<int>>& sn_table();

/// Whether `count` real entries are achievable at order n. Throws
/// InvalidArgument for orders without a table.
bool achievable(int n, int count);

/// The 6x6 matrix with i on the diagonal and a +-1 pattern elsewhere; 30 of
/// its entries are real.
UnitMatrix g6();

/// The 4x4 real Hadamard matrix
///   [1  1  1  1]
///   [1 -1  1 -1]
///   [1  1 -1 -1]
///   [1 -1 -1  1].
UnitMatrix m4();

/// (e^i I_d (+) I_{n-d}) F_n (1 (+) e^i I_{n-1}); exactly n - d real entries.
/// Radian-valued, so only numerically verifiable.
UnitMatrix theorem_i_matrix(int n, int d);

/// (I_{n-d} (+) i I_d) F_n for an odd prime n and 0 <= d <= n-1; exactly
/// 2n - d - 1 real entries. Composite odd n throws NonPrimeOdd (F_n then has
/// extra real entries, e.g. n = 9, j = k = 3).
UnitMatrix theorem_ii_matrix(int n, int d);

enum class H3Variant { H31, H32 };

/// H31(a1, b1) = [[a1 b1, a1, a1], [b1, w, w^2], [b1, w^2, w]]
/// H32(a1, a2, a3) = diag(a1, a2, a3) F_3.
UnitMatrix h3_matrix(H3Variant variant, std::span<const Phase> params);

/// Row prefixes H_61..H_64 (3x6): first row all ones, second and third rows
/// with exactly two non-real entries each. k in 1..4.
UnitMatrix h6_prefix(int k);

/// Row/column multiplier recipe applied to a named base matrix. For each
/// multiplier index m, every row in rows[m] and every column in cols[m] is
/// multiplied by multipliers[m].
struct CountRecipe {
  int order = 0;
  int claimed_count = 0;
  std::string base;
  std::vector<Phase> multipliers;
  std::vector<std::vector<int>> rows;
  std::vector<std::vector<int>> cols;

  int multiplier_count() const;
  friend bool operator==(const CountRecipe&, const CountRecipe&) = default;
};

/// Named bases: `fourier<n>`, `g6`, `m4`, `h31(a,b)`, `h32(a,b,c)` with
/// phase tokens as arguments, optionally prefixed by `<phase>*` for a global
/// scalar (e.g. `w2*h31(w,w)`).
UnitMatrix base_matrix(std::string_view name);

UnitMatrix realize(const CountRecipe& recipe);
UnitMatrix realize(const CountRecipe& recipe, const UnitMatrix& base);

/// Breadth-first search over (line, multiplier) assignments: all single
/// assignments first, then pairs, and so on, each level in lexicographic
/// order with rows before columns. Returns the first recipe whose census hits
/// `target`; throws NotFound once the 2^(2 n |multipliers|) space is
/// exhausted. Base and multipliers must be rational.
CountRecipe recipe_search(const UnitMatrix& base, std::string base_name,
                          int target, std::span<const Phase> multipliers);

/// Recipe file: one recipe per line,
///   n m base rows_i=<list> rows_e8=<list> cols_i=<list> cols_e8=<list>
/// where <list> is comma-separated indices or `-`. '#' starts a comment.
std::vector<CountRecipe> parse_recipes(std::string_view text);
std::string format_recipes(const std::vector<CountRecipe>& recipes);

/// Text of the recipe table compiled into the library.
std::string_view shipped_recipe_text();

/// Parsed shipped table; every entry is checked (CHM and census) on first
/// use.
const std::vector<CountRecipe>& recipe_table();

/// Rebuilds the table: fixed witnesses for orders 2 and 3, recipe_search
/// over m4() and g6() with multipliers {i, e^{i pi/4}} for orders 4 and 6.
std::vector<CountRecipe> regenerate_recipes();

/// Throws NotAchievable(m, 4) when m is not in S_4.
UnitMatrix m4_with_count(int m);
/// Throws NotAchievable(m, 6) when m is not in S_6.
UnitMatrix s6_with_count(int m);
/// Any tabulated order (2, 3, 4, 6).
UnitMatrix sn_with_count(int n, int m);

}  // namespace chm
