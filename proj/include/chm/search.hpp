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
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "chm/matrix.hpp"

namespace chm {

// ---------------------------------------------------------------------------
// Vanishing sums of roots of unity.

/// Exact for rational phases (cyclotomic reduction), |sum| < tol otherwise.
bool sums_to_zero(std::span<const Phase> phases, double tol = kClassTolerance);

struct OracleResult {
  bool holds = true;
  std::uint64_t examined = 0;   // tuples scanned after symmetry reduction
  std::uint64_t zero_sums = 0;  // of which vanish
};

/// Every vanishing triple of q-th roots (a, b, c) is proportional to
/// (1, w, w^2) or (1, w^2, w). Scans a = 1, b <= c; each candidate is
/// decided exactly and cross-checked numerically. q >= 3, 3 | q.
OracleResult sum3_scan(int q);
inline bool sum3_oracle(int q) { return sum3_scan(q).holds; }

/// Every vanishing quadruple of q-th roots (a, b, c, d) contains -a.
/// Scans a = 1, b <= c <= d. q >= 2, q even.
OracleResult sum4_scan(int q);
inline bool sum4_oracle(int q) { return sum4_scan(q).holds; }

// ---------------------------------------------------------------------------
// Grid sweeps.

enum class SweepMode { Full, FullPruned, Parameterized };

const char* to_string(SweepMode mode) noexcept;
/// `full`, `full-pruned`, `parameterized`; throws InvalidArgument otherwise.
SweepMode parse_sweep_mode(std::string_view text);

struct SweepReport {
  int order = 0;
  int root_order = 0;
  SweepMode mode = SweepMode::Full;
  std::set<int> observed_counts;
  /// Candidates examined: entry assignments (full), parameter tuples
  /// (parameterized) or search nodes (full-pruned).
  std::uint64_t candidates_examined = 0;
  /// Complex Hadamard matrices covered by the sweep (for full-pruned, each
  /// representative stands for its row-permutation/row-sign class).
  std::uint64_t chms_found = 0;
  std::map<int, UnitMatrix> witnesses;
};

/// Supported combinations (others throw InfeasibleSweep):
///   n = 2, Full, q <= 24: every one of the q^4 entry assignments.
///   n = 3, Parameterized, q <= 12: D1 V D2 for V = F_3 and its conjugate,
///          first entry of D1 fixed to 1.
///   n = 4, FullPruned, q <= 8: 4-cliques of the orthogonality graph on
///          sign-normalized unit rows, rows in increasing order.
SweepReport grid_sweep(int n, int q, SweepMode mode, int threads = 1);

// ---------------------------------------------------------------------------
// Structural predicates on complex Hadamard matrices.
//
// Row predicates are checked in ratio form: for rows A, B the vector
// B_k / A_k is what row B becomes after the columns are rescaled to make A
// all ones, which keeps the matrix a CHM. Every row predicate is also run
// on the transpose.

enum class PredicateId {
  OneNonReal,         // no ratio row with exactly one non-real entry
  ThreeNonReal,       // even n: no ratio row with exactly three
  PairedNonReal,      // even n: two non-real ratio entries are +-equal
  ThreeRowPrefix,     // n = 6, exact: 2+2 non-real ratio rows match h6_prefix
  TwoRealLines,       // odd n: no two rows with an all-real ratio
  ThreeRealLines,     // n = 2 mod 4: no three such rows
  RealBlock,          // n = 6: no 4x3 or 3x4 real submatrix
  SingleNonRealRows,  // n = 6: >= 3 one-non-real rows use distinct cols, +-i
  ForbiddenRows,      // n = 6: neither forbidden three-row real pattern
  OverlapPair,        // n = 6: rows non-real at {p,q} and {p,s}
};

/// Kebab-case tokens: `one-nonreal`, `three-nonreal`, ... `overlap-pair`.
const char* to_string(PredicateId id) noexcept;
PredicateId parse_predicate(std::string_view text);
std::span<const PredicateId> all_predicates();

bool predicate_applies(const UnitMatrix& m, PredicateId id);

struct PredicateResult {
  PredicateId id = PredicateId::OneNonReal;
  bool pass = true;
  bool transposed = false;  // violation found on the transpose
  std::vector<int> rows;
  std::vector<int> cols;
  std::string detail;
};

/// Throws NotApplicable when the order/parity does not fit and NotACHM when
/// `m` does not verify.
PredicateResult predicate_check(const UnitMatrix& m, PredicateId id);

/// All applicable predicates; stops at the first violation.
std::vector<PredicateResult> check_all_predicates(const UnitMatrix& m);

// ---------------------------------------------------------------------------
// Three-row systems of order 6.

/// Canonical representative of a 3x6 system whose first row is all ones,
/// under swapping rows 2 and 3, negating either of them, and permuting
/// columns. Lexicographically least by turn value, row-major.
UnitMatrix canonical_three_rows(const UnitMatrix& prefix);

struct ThreeRowClassification {
  std::uint64_t systems = 0;  // ordered (row 2, row 3) pairs found
  std::vector<UnitMatrix> representatives;
};

/// Enumerates every system [1..1; r2; r3] over q-th roots where r2 and r3
/// have exactly two non-real entries and the rows are pairwise orthogonal,
/// then reduces to canonical representatives. 12 | q.
ThreeRowClassification classify_three_rows(int q);

// ---------------------------------------------------------------------------
// Seeded property audits.

/// F_6, G_6 and F_2 (x) F_3.
std::vector<UnitMatrix> audit_bases();

/// Per-sample seed derivation (splitmix64 of seed + index).
std::uint64_t sample_seed(std::uint64_t seed, std::uint64_t index);

struct AuditReport {
  bool pass = true;
  std::uint64_t samples = 0;
  std::map<int, std::uint64_t> histogram;  // real count -> occurrences
  std::optional<std::uint64_t> violating_sample;
  std::optional<UnitMatrix> violation;
};

/// Sample k is random_orbit(audit_bases()[k % 3], sample_seed(seed, k), 24);
/// every census must lie in S_6.
AuditReport s6_membership_audit(std::uint64_t samples, std::uint64_t seed, int threads = 1);

struct PredicateSuiteReport {
  bool pass = true;
  std::uint64_t matrices = 0;
  std::uint64_t checks = 0;
  std::map<PredicateId, std::uint64_t> applied;
  std::optional<PredicateResult> violation;
  std::optional<UnitMatrix> witness;
};

/// Corpus for the predicate suite: F_6, G_6, F_2 (x) F_3, F_3, F_5.
std::vector<UnitMatrix> predicate_corpus_bases();

/// Sample k is random_orbit(bases[k % 5], sample_seed(seed, k), roots) with
/// roots cycling through 24, 4, 2 every five samples; the coarser phases keep
/// high real counts in the corpus.
PredicateSuiteReport predicate_suite(std::uint64_t samples, std::uint64_t seed,
                                     int threads = 1);

}  // namespace chm
