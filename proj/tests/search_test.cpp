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

#include <complex>
#include <numbers>
#include <set>

#include "chm/constructions.hpp"
#include "chm/equivalence.hpp"
#include "chm/error.hpp"
#include "chm/search.hpp"

namespace chm {
namespace {

std::complex<double> root(int e, int q) {
  return std::polar(1.0, 2 * std::numbers::pi * e / q);
}

// Floating-point brute force over all 2x2 matrices of q-th roots.
std::set<int> brute_force_two(int q) {
  std::set<int> counts;
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b)
      for (int c = 0; c < q; ++c)
        for (int d = 0; d < q; ++d) {
          const auto s = root(a, q) * std::conj(root(c, q)) + root(b, q) * std::conj(root(d, q));
          if (std::abs(s) > 1e-9) continue;
          int real = 0;
          for (int e : {a, b, c, d}) real += std::abs(root(e, q).imag()) < 1e-9 ? 1 : 0;
          counts.insert(real);
        }
  return counts;
}

TEST(SumsToZero, Examples) {
  const Phase w = Phase::omega(), w2 = Phase::turn(2, 3);
  EXPECT_TRUE(sums_to_zero(std::vector<Phase>{Phase::one(), w, w2}));
  EXPECT_TRUE(sums_to_zero(std::vector<Phase>{Phase::one(), Phase::minus_one(), Phase::i(),
                                              Phase::minus_i()}));
  EXPECT_TRUE(sums_to_zero(std::vector<Phase>{Phase::one(), Phase::one(), Phase::minus_one(),
                                              Phase::minus_one()}));
  EXPECT_FALSE(sums_to_zero(std::vector<Phase>{Phase::one(), Phase::i(), Phase::minus_one()}));
  EXPECT_TRUE(sums_to_zero(std::vector<Phase>{Phase::radians(0.3),
                                              Phase::radians(0.3 + std::numbers::pi)}));
}

TEST(Oracles, SmallOrders) {
  for (int q : {3, 6, 12, 30}) {
    const OracleResult r = sum3_scan(q);
    EXPECT_TRUE(r.holds) << q;
    EXPECT_EQ(r.zero_sums, 1u) << q;
    EXPECT_EQ(r.examined, static_cast<std::uint64_t>(q) * (q + 1) / 2);
  }
  for (int q : {2, 4, 8, 12, 24}) EXPECT_TRUE(sum4_oracle(q)) << q;
  EXPECT_THROW(sum3_scan(8), Error);
  EXPECT_THROW(sum4_scan(9), Error);
}

TEST(Oracles, FullSize) {
  EXPECT_TRUE(sum3_oracle(360));
  const OracleResult r = sum4_scan(240);
  EXPECT_TRUE(r.holds);
  // With a = 1 fixed and b <= c <= d, the vanishing quadruples are
  // {-1, x, -x} for the 120 values of x up to sign.
  EXPECT_EQ(r.zero_sums, 120u);
}

TEST(GridSweep, TwoByTwoMatchesBruteForce) {
  for (int q : {4, 8, 12}) {
    const SweepReport r = grid_sweep(2, q, SweepMode::Full);
    EXPECT_EQ(r.observed_counts, brute_force_two(q)) << q;
    EXPECT_EQ(r.candidates_examined, static_cast<std::uint64_t>(q) * q * q * q);
  }
  for (int q : {8, 12, 24}) {
    const SweepReport r = grid_sweep(2, q, SweepMode::Full);
    EXPECT_EQ(r.observed_counts, (std::set<int>{0, 1, 2, 4})) << q;
  }
}

TEST(GridSweep, WitnessesVerify) {
  for (const SweepReport& r : {grid_sweep(2, 24, SweepMode::Full),
                               grid_sweep(3, 6, SweepMode::Parameterized),
                               grid_sweep(4, 4, SweepMode::FullPruned)}) {
    EXPECT_EQ(r.witnesses.size(), r.observed_counts.size());
    for (const auto& [count, m] : r.witnesses) {
      EXPECT_TRUE(is_chm(m, OrthoMode::Exact));
      EXPECT_EQ(census(m).real_count, count);
    }
  }
}

TEST(GridSweep, ThreeByThree) {
  const SweepReport r = grid_sweep(3, 12, SweepMode::Parameterized);
  EXPECT_EQ(r.observed_counts, (std::set<int>{0, 1, 2, 3, 4, 5, 6}));
  EXPECT_EQ(r.chms_found, 2u * 12 * 12 * 12 * 12 * 12);
}

TEST(GridSweep, FourByFour) {
  const SweepReport r = grid_sweep(4, 8, SweepMode::FullPruned);
  // Coverage observed on the first run equals the full table.
  EXPECT_EQ(r.observed_counts, sn_table().at(4));
  for (int absent : {11, 13, 14, 15}) EXPECT_FALSE(r.observed_counts.count(absent));
  const SweepReport threaded = grid_sweep(4, 8, SweepMode::FullPruned, 3);
  EXPECT_EQ(threaded.observed_counts, r.observed_counts);
  EXPECT_EQ(threaded.chms_found, r.chms_found);
  EXPECT_EQ(threaded.candidates_examined, r.candidates_examined);
  for (const auto& [count, m] : r.witnesses) EXPECT_EQ(threaded.witnesses.at(count), m);
}

TEST(GridSweep, FourByFourCountsAgreeWithBruteForceAtQ2) {
  // Real Hadamard matrices of order 4: 768 of them.
  const SweepReport r = grid_sweep(4, 2, SweepMode::FullPruned);
  EXPECT_EQ(r.chms_found, 768u);
  EXPECT_EQ(r.observed_counts, (std::set<int>{16}));
}

TEST(GridSweep, Bounds) {
  EXPECT_THROW(grid_sweep(2, 25, SweepMode::Full), Error);
  EXPECT_THROW(grid_sweep(3, 13, SweepMode::Parameterized), Error);
  EXPECT_THROW(grid_sweep(4, 9, SweepMode::FullPruned), Error);
  EXPECT_THROW(grid_sweep(5, 2, SweepMode::Full), Error);
  EXPECT_THROW(grid_sweep(2, 8, SweepMode::Parameterized), Error);
  try {
    grid_sweep(6, 2, SweepMode::Full);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InfeasibleSweep);
  }
  EXPECT_EQ(parse_sweep_mode("full-pruned"), SweepMode::FullPruned);
  EXPECT_THROW(parse_sweep_mode("fast"), Error);
}

TEST(Predicates, SpecExamples) {
  EXPECT_TRUE(predicate_check(g6(), PredicateId::RealBlock).pass);
  EXPECT_TRUE(predicate_check(fourier(5), PredicateId::TwoRealLines).pass);
  EXPECT_TRUE(predicate_check(fourier(6), PredicateId::ThreeRealLines).pass);
}

TEST(Predicates, Applicability) {
  auto code = [](const UnitMatrix& m, PredicateId id) {
    try {
      predicate_check(m, id);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::Io;
  };
  EXPECT_EQ(code(fourier(5), PredicateId::ThreeNonReal), ErrorCode::NotApplicable);
  EXPECT_EQ(code(fourier(6), PredicateId::TwoRealLines), ErrorCode::NotApplicable);
  EXPECT_EQ(code(fourier(4), PredicateId::ThreeRealLines), ErrorCode::NotApplicable);
  EXPECT_EQ(code(fourier(4), PredicateId::RealBlock), ErrorCode::NotApplicable);
  EXPECT_EQ(code(theorem_i_matrix(6, 2), PredicateId::ThreeRowPrefix), ErrorCode::NotApplicable);
  UnitMatrix broken = g6();
  broken(0, 0) = Phase::one();
  EXPECT_EQ(code(broken, PredicateId::RealBlock), ErrorCode::NotAChm);
  for (PredicateId id : all_predicates()) EXPECT_EQ(parse_predicate(to_string(id)), id);
  EXPECT_THROW(parse_predicate("ii.a"), Error);
}

TEST(Predicates, CheckAllCoversApplicable) {
  const auto results = check_all_predicates(fourier(6));
  for (const PredicateResult& r : results) EXPECT_TRUE(r.pass) << to_string(r.id);
  // Everything except the odd-order rule applies at n = 6.
  EXPECT_EQ(results.size(), all_predicates().size() - 1);
  EXPECT_EQ(check_all_predicates(fourier(5)).size(), 2u);
}

TEST(Predicates, EveryConstructionPasses) {
  std::vector<UnitMatrix> corpus;
  for (int n : {2, 3, 4, 6})
    for (int m : sn_table().at(n)) corpus.push_back(sn_with_count(n, m));
  for (int n = 2; n <= 8; ++n)
    for (int d = 0; d <= n; ++d) corpus.push_back(theorem_i_matrix(n, d));
  for (int n : {3, 5, 7})
    for (int d = 0; d < n; ++d) corpus.push_back(theorem_ii_matrix(n, d));
  for (const SweepReport& r : {grid_sweep(2, 24, SweepMode::Full),
                               grid_sweep(3, 12, SweepMode::Parameterized),
                               grid_sweep(4, 8, SweepMode::FullPruned)})
    for (const auto& [count, m] : r.witnesses) corpus.push_back(m);
  for (const UnitMatrix& m : corpus)
    for (const PredicateResult& r : check_all_predicates(m))
      EXPECT_TRUE(r.pass) << to_string(r.id) << ": " << r.detail << "\n" << format_matrix(m);
}

TEST(ThreeRows, CanonicalForm) {
  for (int k = 1; k <= 4; ++k) {
    const UnitMatrix p = h6_prefix(k);
    const UnitMatrix c = canonical_three_rows(p);
    EXPECT_EQ(canonical_three_rows(c), c);
    // Column permutations and row negation/swap leave the form unchanged.
    UnitMatrix q(3, 6);
    for (int col = 0; col < 6; ++col) {
      q(0, col) = p(0, 5 - col);
      q(1, col) = p(2, 5 - col) * Phase::minus_one();
      q(2, col) = p(1, 5 - col);
    }
    EXPECT_EQ(canonical_three_rows(q), c);
  }
  std::set<std::string> forms;
  for (int k = 1; k <= 4; ++k) forms.insert(format_matrix(canonical_three_rows(h6_prefix(k))));
  EXPECT_EQ(forms.size(), 4u);
  EXPECT_THROW(canonical_three_rows(parse_matrix("3 2\n1 -1\n1 1\n1 1\n")), Error);
  EXPECT_THROW(canonical_three_rows(fourier(4)), Error);
}

TEST(ThreeRows, ClassifyTwelve) {
  const ThreeRowClassification c = classify_three_rows(12);
  ASSERT_EQ(c.representatives.size(), 4u);
  EXPECT_EQ(c.systems, 8640u);
  for (int k = 1; k <= 4; ++k) {
    const UnitMatrix canon = canonical_three_rows(h6_prefix(k));
    EXPECT_NE(std::find(c.representatives.begin(), c.representatives.end(), canon),
              c.representatives.end())
        << k;
  }
  EXPECT_THROW(classify_three_rows(8), Error);
}

TEST(Audit, DeterministicAndInTable) {
  const AuditReport a = s6_membership_audit(3000, 17);
  const AuditReport b = s6_membership_audit(3000, 17, 4);
  EXPECT_TRUE(a.pass);
  EXPECT_EQ(a.samples, 3000u);
  EXPECT_EQ(a.histogram, b.histogram);
  for (const auto& [count, k] : a.histogram) EXPECT_TRUE(achievable(6, count)) << count;
  EXPECT_NE(sample_seed(1, 0), sample_seed(1, 1));
  EXPECT_NE(sample_seed(1, 0), sample_seed(2, 0));
}

TEST(Audit, PredicateSuiteSmall) {
  const PredicateSuiteReport r = predicate_suite(500, 3);
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.matrices, 500u);
  for (PredicateId id : all_predicates()) EXPECT_GT(r.applied.at(id), 0u) << to_string(id);
  const PredicateSuiteReport t = predicate_suite(500, 3, 3);
  EXPECT_EQ(t.checks, r.checks);
}

}  // namespace
}  // namespace chm
