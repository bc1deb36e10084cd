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

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "chm/phase.hpp"

namespace chm {

/// Row-major grid of phases. Usually square (a candidate or verified complex
/// Hadamard matrix); rectangular row-prefixes are allowed for partial row
/// systems.
class UnitMatrix {
 public:
  UnitMatrix() = default;
  /// n x n matrix of ones.
  explicit UnitMatrix(int n) : UnitMatrix(n, n) {}
  UnitMatrix(int rows, int cols);
  static UnitMatrix from_rows(const std::vector<std::vector<Phase>>& rows);

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  /// Order of a square matrix; throws DimensionMismatch otherwise.
  int order() const;

  const Phase& operator()(int r, int c) const {
    return data_[static_cast<std::size_t>(r * cols_ + c)];
  }
  Phase& operator()(int r, int c) {
    return data_[static_cast<std::size_t>(r * cols_ + c)];
  }
  std::span<const Phase> row(int r) const {
    return {data_.data() + static_cast<std::size_t>(r * cols_),
            static_cast<std::size_t>(cols_)};
  }
  std::span<const Phase> entries() const { return data_; }

  bool all_rational() const noexcept;

  friend bool operator==(const UnitMatrix&, const UnitMatrix&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Phase> data_;
};

enum class OrthoMode { Exact, Numeric };

/// All pairs of distinct rows have zero Hermitian inner product.
/// Exact mode works in the cyclotomic field of the common denominator and
/// throws ExactModeUnavailable if any entry is radian-valued.
bool rows_orthogonal(const UnitMatrix& m, OrthoMode mode = OrthoMode::Numeric,
                     double tol = kClassTolerance);

/// Square and rows_orthogonal.
bool is_chm(const UnitMatrix& m, OrthoMode mode = OrthoMode::Numeric,
            double tol = kClassTolerance);

/// Exact when every entry is rational, numeric otherwise.
bool verify_chm(const UnitMatrix& m);

/// Hermitian inner product <row a, row b> = sum conj(a_k) b_k is zero.
bool rows_orthogonal_exact(std::span<const Phase> a, std::span<const Phase> b);

/// F_n with entry (j,k) = t(jk mod n / n), 0-based.
UnitMatrix fourier(int n);

UnitMatrix transpose(const UnitMatrix& m);
UnitMatrix conjugate(const UnitMatrix& m);
/// Every entry multiplied by `s`.
UnitMatrix scaled(const UnitMatrix& m, const Phase& s);
/// Kronecker product a (x) b.
UnitMatrix kron(const UnitMatrix& a, const UnitMatrix& b);

struct Census {
  int real_count = 0;
  /// Per-row non-real counts, sorted ascending.
  std::vector<int> imaginary_array;
  /// Non-real counts per row and per column, in matrix order.
  std::vector<int> per_row_counts;
  std::vector<int> per_column_counts;
  /// Some entry was classified by tolerance rather than exactly.
  bool approximate = false;
};

Census census(const UnitMatrix& m);

/// Matrix text format: a header line `n` (or `rows cols`), then one line per
/// row of whitespace-separated phase tokens. Blank lines and lines starting
/// with '#' are ignored. Errors carry line and column.
UnitMatrix parse_matrix(std::string_view text);
std::string format_matrix(const UnitMatrix& m);

UnitMatrix read_matrix_file(const std::filesystem::path& path);
void write_matrix_file(const std::filesystem::path& path, const UnitMatrix& m);

/// Reads a whole file; throws Io on failure.
std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace chm
