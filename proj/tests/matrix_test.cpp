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

#include <gtest/gtest.h>

#include <algorithm>
#include <complex>
#include <filesystem>
#include <random>
#include <vector>

#include "chm/constructions.hpp"
#include "chm/equivalence.hpp"
#include "chm/error.hpp"
#include "chm/matrix.hpp"

namespace chm {
namespace {

// Independent floating-point oracles.
bool gram_is_scaled_identity(const UnitMatrix& m, double tol = 1e-9) {
  const int n = m.rows();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      std::complex<double> s{};
      for (int k = 0; k < m.cols(); ++k) s += m(a, k).to_complex() * std::conj(m(b, k).to_complex());
      if (std::abs(s) >= tol) return false;
    }
  return true;
}

int float_real_count(const UnitMatrix& m) {
  int c = 0;
  for (const Phase& p : m.entries()) c += std::abs(p.to_complex().imag()) < 1e-9 ? 1 : 0;
  return c;
}

TEST(Fourier, Entries) {
  EXPECT_EQ(fourier(2), parse_matrix("2\n1 1\n1 -1\n"));
  EXPECT_EQ(fourier(3), parse_matrix("3\n1 1 1\n1 w w2\n1 w2 w\n"));
  EXPECT_EQ(fourier(6)(1, 1), Phase::turn(1, 6));
  for (int n = 1; n <= 9; ++n) EXPECT_EQ(transpose(fourier(n)), fourier(n));
}

TEST(IsChm, KnownMatrices) {
  EXPECT_TRUE(is_chm(fourier(6), OrthoMode::Exact));
  EXPECT_TRUE(is_chm(g6(), OrthoMode::Exact));
  UnitMatrix broken = g6();
  broken(1, 1) = Phase::turn(1, 8);
  EXPECT_FALSE(is_chm(broken, OrthoMode::Exact));
  EXPECT_FALSE(is_chm(broken, OrthoMode::Numeric));
  EXPECT_FALSE(is_chm(UnitMatrix(2, 3)));
}

TEST(IsChm, ExactModeNeedsRationalEntries) {
  UnitMatrix m = fourier(2);
  m(0, 0) = Phase::radians(0.0);
  EXPECT_THROW(is_chm(m, OrthoMode::Exact), Error);
  try {
    is_chm(m, OrthoMode::Exact);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ExactModeUnavailable);
  }
  EXPECT_TRUE(is_chm(m, OrthoMode::Numeric));
  EXPECT_TRUE(verify_chm(m));
}

TEST(Census, Examples) {
  const Census g = census(g6());
  EXPECT_EQ(g.real_count, 30);
  EXPECT_EQ(g.imaginary_array, (std::vector<int>{1, 1, 1, 1, 1, 1}));
  const Census f2 = census(fourier(2));
  EXPECT_EQ(f2.real_count, 4);
  EXPECT_EQ(f2.imaginary_array, (std::vector<int>{0, 0}));
  const Census f6 = census(fourier(6));
  EXPECT_EQ(f6.real_count, 20);
  EXPECT_EQ(f6.imaginary_array, (std::vector<int>{0, 0, 4, 4, 4, 4}));
  EXPECT_EQ(f6.real_count, float_real_count(fourier(6)));
  EXPECT_FALSE(f6.approximate);
  EXPECT_EQ(census(transpose(g6())).real_count, 30);
  EXPECT_TRUE(census(theorem_i_matrix(4, 1)).approximate);
}

TEST(Census, PrimeFourierHasTwoNMinusOneRealEntries) {
  for (int n : {3, 5, 7, 11, 13}) EXPECT_EQ(census(fourier(n)).real_count, 2 * n - 1);
}

TEST(Census, CountsAreConsistent) {
  for (const UnitMatrix& m : {g6(), fourier(6), m4(), kron(fourier(2), fourier(3))}) {
    const Census c = census(m);
    int nonreal = 0;
    for (int a : c.imaginary_array) nonreal += a;
    EXPECT_EQ(c.real_count + nonreal, m.rows() * m.cols());
    EXPECT_TRUE(std::is_sorted(c.imaginary_array.begin(), c.imaginary_array.end()));
    int rows = 0, cols = 0;
    for (int r : c.per_row_counts) rows += r;
    for (int r : c.per_column_counts) cols += r;
    EXPECT_EQ(rows, nonreal);
    EXPECT_EQ(cols, nonreal);
  }
}

TEST(Transforms, PreserveChmAndCount) {
  EXPECT_EQ(conjugate(h6_prefix(1)), h6_prefix(2));
  const UnitMatrix k = kron(fourier(2), fourier(3));
  EXPECT_TRUE(is_chm(k, OrthoMode::Exact));
  EXPECT_EQ(census(k).real_count, float_real_count(k));
  for (const UnitMatrix& m : {g6(), fourier(6), m4(), k, fourier(5)}) {
    EXPECT_TRUE(is_chm(transpose(m), OrthoMode::Exact));
    EXPECT_TRUE(is_chm(conjugate(m), OrthoMode::Exact));
    EXPECT_EQ(census(transpose(m)).real_count, census(m).real_count);
    EXPECT_EQ(census(conjugate(m)).real_count, census(m).real_count);
  }
}

TEST(MatrixText, RoundTrip) {
  for (const UnitMatrix& m : {g6(), fourier(6), m4(), theorem_i_matrix(5, 2), h6_prefix(3)})
    EXPECT_EQ(parse_matrix(format_matrix(m)), m);
  EXPECT_EQ(format_matrix(fourier(2)), "2\n1 1\n1 -1\n");
}

TEST(MatrixText, CommentsAndRectangularHeader) {
  const UnitMatrix m = parse_matrix("# comment\n2 3\n1 i -1\n\n-i w t(1/5)\n");
  EXPECT_EQ(m.rows(), 2);
  EXPECT_EQ(m.cols(), 3);
  EXPECT_EQ(m(1, 2), Phase::turn(1, 5));
}

TEST(MatrixText, ErrorsCarryPosition) {
  try {
    parse_matrix("2\n1 1\n1 x\n");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3);
    EXPECT_EQ(e.column(), 3);
  }
  EXPECT_THROW(parse_matrix("2\n1 1\n"), ParseError);
  EXPECT_THROW(parse_matrix("2\n1 1 1\n1 1\n"), ParseError);
  EXPECT_THROW(parse_matrix("x\n"), ParseError);
  EXPECT_THROW(parse_matrix(""), ParseError);
  EXPECT_THROW(parse_matrix("1\n1\n1\n"), ParseError);
}

TEST(MatrixText, FileRoundTrip) {
  const auto path = std::filesystem::temp_directory_path() / "chm_matrix_test.txt";
  write_matrix_file(path, g6());
  EXPECT_EQ(read_matrix_file(path), g6());
  std::filesystem::remove(path);
  EXPECT_THROW(read_matrix_file(path), Error);
}

TEST(IsChmProperty, ExactAgreesWithNumeric) {
  const std::vector<UnitMatrix> bases{fourier(6), g6(), kron(fourier(2), fourier(3)), m4(),
                                      fourier(3), fourier(5), fourier(2)};
  std::mt19937_64 rng(2026);
  int positives = 0, negatives = 0;
  for (int k = 0; k < 10000; ++k) {
    const UnitMatrix m = random_orbit(bases[static_cast<std::size_t>(k) % bases.size()], rng(), 24);
    const bool exact = is_chm(m, OrthoMode::Exact);
    EXPECT_TRUE(exact);
    EXPECT_EQ(exact, is_chm(m, OrthoMode::Numeric, 1e-9));
    EXPECT_EQ(exact, gram_is_scaled_identity(m));
    positives += exact;
  }
  const int roots[] = {2, 4, 6, 8, 12, 24};
  for (int k = 0; k < 10000; ++k) {
    const int n = 2 + static_cast<int>(rng() % 5);
    const int q = roots[rng() % 6];
    UnitMatrix m(n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) m(r, c) = Phase::turn(static_cast<std::int64_t>(rng() % q), q);
    const bool exact = is_chm(m, OrthoMode::Exact);
    EXPECT_EQ(exact, is_chm(m, OrthoMode::Numeric, 1e-9));
    EXPECT_EQ(exact, gram_is_scaled_identity(m));
    negatives += exact ? 0 : 1;
  }
  EXPECT_EQ(positives, 10000);
  EXPECT_GT(negatives, 9000);
}

}  // namespace
}  // namespace chm
