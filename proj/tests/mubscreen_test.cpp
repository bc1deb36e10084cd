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

#include <cmath>
#include <random>

#include "chm/constructions.hpp"
#include "chm/equivalence.hpp"
#include "chm/error.hpp"
#include "chm/mubscreen.hpp"

namespace chm {
namespace {

// Brute-force check for an all-real 3x2 submatrix.
bool has_real_three_by_two(const UnitMatrix& m) {
  const int n = m.rows();
  for (int c0 = 0; c0 < n; ++c0)
    for (int c1 = c0 + 1; c1 < n; ++c1) {
      int rows = 0;
      for (int r = 0; r < n; ++r) rows += (is_real(m(r, c0)) && is_real(m(r, c1))) ? 1 : 0;
      if (rows >= 3) return true;
    }
  return false;
}

TEST(Screen, G6ExcludedByCount) {
  const ScreenVerdict v = screen(g6());
  EXPECT_EQ(v.kind, VerdictKind::ExcludedByRealCount);
  EXPECT_EQ(v.census.real_count, 30);
  EXPECT_FALSE(v.witness);
  EXPECT_EQ(format_verdict(v), "verdict=excluded-by-real-count count=30");
}

TEST(Screen, HighCountWitnessesExcluded) {
  for (int m : {24, 25, 26, 30}) {
    const ScreenVerdict v = screen(s6_with_count(m));
    EXPECT_EQ(v.kind, VerdictKind::ExcludedByRealCount) << m;
    EXPECT_EQ(v.census.real_count, m);
  }
}

TEST(Screen, FourierSixHasRealSubmatrix) {
  const ScreenVerdict v = screen(fourier(6));
  EXPECT_EQ(v.kind, VerdictKind::ExcludedByRealSubmatrix);
  EXPECT_EQ(v.census.real_count, 20);
  ASSERT_TRUE(v.witness);
  EXPECT_EQ(v.witness->rows, (std::vector<int>{0, 1, 2}));
  EXPECT_EQ(v.witness->cols, (std::vector<int>{0, 3}));
  EXPECT_EQ(format_verdict(v),
            "verdict=excluded-by-real-submatrix count=20 witness_rows=0,1,2 witness_cols=0,3");
}

TEST(Screen, ZeroCountNotExcluded) {
  const ScreenVerdict v = screen(s6_with_count(0));
  EXPECT_EQ(v.kind, VerdictKind::NotExcluded);
  EXPECT_EQ(v.census.real_count, 0);
}

TEST(Screen, AgreesWithBruteForceOverTable) {
  std::mt19937_64 rng(1000);
  for (int m : sn_table().at(6)) {
    const UnitMatrix h = apply(random_permutation_transform(6, rng), s6_with_count(m));
    const ScreenVerdict v = screen(h);
    EXPECT_EQ(v.census.real_count, m);
    if (m > kMubTrioMaxRealEntries) {
      EXPECT_EQ(v.kind, VerdictKind::ExcludedByRealCount) << m;
      continue;
    }
    EXPECT_EQ(v.kind == VerdictKind::ExcludedByRealSubmatrix, has_real_three_by_two(h)) << m;
    if (v.witness) {
      ASSERT_EQ(v.witness->rows.size(), 3u);
      ASSERT_EQ(v.witness->cols.size(), 2u);
      for (int r : v.witness->rows)
        for (int c : v.witness->cols) EXPECT_TRUE(is_real(h(r, c)));
    }
  }
}

TEST(Screen, Errors) {
  auto code = [](const UnitMatrix& m) {
    try {
      screen(m);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::Io;
  };
  EXPECT_EQ(code(fourier(4)), ErrorCode::DimensionMismatch);
  UnitMatrix bad = fourier(6);
  bad(1, 1) = Phase::one();
  EXPECT_EQ(code(bad), ErrorCode::NotAChm);
  EXPECT_STREQ(verdict_tag(VerdictKind::NotExcluded), "not-excluded");
}

TEST(RealSubmatrix, Examples) {
  EXPECT_FALSE(real_submatrix_exists(fourier(5), 2, 2));
  const auto w = real_submatrix_exists(fourier(4), 2, 4);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->rows, (std::vector<int>{0, 2}));
  EXPECT_FALSE(real_submatrix_exists(g6(), 4, 3));
  const auto g = real_submatrix_exists(g6(), 3, 3);
  ASSERT_TRUE(g);
  EXPECT_EQ(g->cols, (std::vector<int>{0, 1, 2}));
  EXPECT_EQ(g->rows, (std::vector<int>{3, 4, 5}));
}

TEST(Unbiased, ConstructedMatrices) {
  const Basis id = Basis::identity(6);
  for (int m : sn_table().at(6))
    EXPECT_TRUE(is_unbiased(id, Basis::from_hadamard(s6_with_count(m)))) << m;
  for (int n : {2, 3, 4, 5, 7})
    EXPECT_TRUE(is_unbiased(Basis::identity(n), Basis::from_hadamard(fourier(n))));
  EXPECT_TRUE(is_unbiased(Basis::from_hadamard(fourier(2)), Basis::identity(2)));
  EXPECT_FALSE(is_unbiased(id, id));
  EXPECT_FALSE(is_unbiased(Basis::from_hadamard(fourier(6)), Basis::from_hadamard(fourier(6))));
  EXPECT_THROW(is_unbiased(id, Basis::identity(5)), Error);
  UnitMatrix bad = fourier(6);
  bad(0, 0) = Phase::i();
  bad(0, 1) = Phase::i();
  EXPECT_THROW(Basis::from_hadamard(bad), Error);
}

}  // namespace
}  // namespace chm
