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

#include "chm/search.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "chm/constructions.hpp"
#include "chm/cyclotomic.hpp"
#include "chm/equivalence.hpp"
#include "chm/error.hpp"
#include "chm/mubscreen.hpp"

namespace chm {

namespace {

constexpr int kMaxGridDegree = 512;

// Powers of a primitive q-th root reduced modulo the q-th cyclotomic
// polynomial, so vanishing sums reduce to integer vector additions.
class RootGrid {
 public:
  explicit RootGrid(int q) : q_(q) {
    const CyclotomicField& field = cyclotomic_field(q);
    degree_ = field.degree();
    if (degree_ > kMaxGridDegree)
      throw Error(ErrorCode::InvalidArgument,
                  "root order " + std::to_string(q) + " too large for grid scans");
    table_.reserve(static_cast<std::size_t>(q * degree_));
    std::vector<std::int64_t> unit(static_cast<std::size_t>(q), 0);
    for (int k = 0; k < q; ++k) {
      unit[static_cast<std::size_t>(k)] = 1;
      const auto r = field.reduce(unit);
      table_.insert(table_.end(), r.begin(), r.end());
      unit[static_cast<std::size_t>(k)] = 0;
    }
  }

  int q() const noexcept { return q_; }

  int wrap(int e) const noexcept {
    e %= q_;
    return e < 0 ? e + q_ : e;
  }

  bool real(int e) const noexcept {
    e = wrap(e);
    return e == 0 || 2 * e == q_;
  }

  bool zero_sum(std::span<const int> exps) const {
    std::array<std::int64_t, kMaxGridDegree> acc{};
    for (int e : exps) {
      const std::int64_t* row = &table_[static_cast<std::size_t>(wrap(e) * degree_)];
      for (int j = 0; j < degree_; ++j) acc[static_cast<std::size_t>(j)] += row[j];
    }
    for (int j = 0; j < degree_; ++j)
      if (acc[static_cast<std::size_t>(j)] != 0) return false;
    return true;
  }

  std::complex<double> root(int e) const {
    return std::polar(1.0, 2.0 * std::numbers::pi * wrap(e) / q_);
  }

 private:
  int q_;
  int degree_ = 0;
  std::vector<std::int64_t> table_;
};

UnitMatrix from_exponents(int rows, int cols, std::span<const int> exps, int q) {
  UnitMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c)
      m(r, c) = Phase::turn(exps[static_cast<std::size_t>(r * cols + c)], q);
  return m;
}

int clamp_threads(int threads) { return std::max(1, threads); }

// Runs body(begin, end) over contiguous slices of [0, count).
template <class Body>
void parallel_slices(std::uint64_t count, int threads, Body body) {
  const auto t = static_cast<std::uint64_t>(clamp_threads(threads));
  if (t == 1 || count < t) {
    body(0, count, 0);
    return;
  }
  std::vector<std::thread> pool;
  const std::uint64_t step = (count + t - 1) / t;
  for (std::uint64_t k = 0; k < t; ++k) {
    const std::uint64_t begin = std::min(count, k * step);
    const std::uint64_t end = std::min(count, begin + step);
    pool.emplace_back([&body, begin, end, k] { body(begin, end, static_cast<int>(k)); });
  }
  for (auto& th : pool) th.join();
}

void require(bool ok, ErrorCode code, const std::string& message) {
  if (!ok) throw Error(code, message);
}

}  // namespace

// ---------------------------------------------------------------------------

bool sums_to_zero(std::span<const Phase> phases, double tol) {
  const bool rational = std::all_of(phases.begin(), phases.end(),
                                    [](const Phase& p) { return p.is_rational(); });
  if (rational) {
    std::int64_t n = 1;
    for (const Phase& p : phases) {
      n = std::lcm(n, p.denominator());
      if (n > CyclotomicField::kMaxOrder) break;
    }
    if (n <= CyclotomicField::kMaxOrder) {
      std::vector<int> exps;
      exps.reserve(phases.size());
      for (const Phase& p : phases)
        exps.push_back(static_cast<int>(p.numerator() * (n / p.denominator())));
      return cyclotomic_field(static_cast<int>(n)).is_zero_sum(exps);
    }
  }
  std::complex<double> sum{};
  for (const Phase& p : phases) sum += p.to_complex();
  return std::abs(sum) < tol;
}

namespace {

bool decide(const RootGrid& grid, std::span<const int> exps) {
  const bool exact = grid.zero_sum(exps);
  std::complex<double> sum{};
  for (int e : exps) sum += grid.root(e);
  const bool numeric = std::abs(sum) < kClassTolerance;
  if (exact != numeric)
    throw std::logic_error("exact and numeric vanishing tests disagree at q=" +
                           std::to_string(grid.q()));
  return exact;
}

}  // namespace

OracleResult sum3_scan(int q) {
  require(q >= 3 && q % 3 == 0, ErrorCode::InvalidArgument,
          "sum3 scan needs a positive multiple of 3");
  const RootGrid grid(q);
  OracleResult out;
  for (int b = 0; b < q; ++b) {
    for (int c = b; c < q; ++c) {
      ++out.examined;
      const std::array<int, 3> e{0, b, c};
      if (!decide(grid, e)) continue;
      ++out.zero_sums;
      if (b != q / 3 || c != 2 * q / 3) out.holds = false;
    }
  }
  return out;
}

OracleResult sum4_scan(int q) {
  require(q >= 2 && q % 2 == 0, ErrorCode::InvalidArgument,
          "sum4 scan needs a positive even root order");
  const RootGrid grid(q);
  const int half = q / 2;
  OracleResult out;
  for (int b = 0; b < q; ++b) {
    for (int c = b; c < q; ++c) {
      for (int d = c; d < q; ++d) {
        ++out.examined;
        const std::array<int, 4> e{0, b, c, d};
        if (!decide(grid, e)) continue;
        ++out.zero_sums;
        if (b != half && c != half && d != half) out.holds = false;
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

const char* to_string(SweepMode mode) noexcept {
  switch (mode) {
    case SweepMode::Full: return "full";
    case SweepMode::FullPruned: return "full-pruned";
    case SweepMode::Parameterized: return "parameterized";
  }
  return "?";
}

SweepMode parse_sweep_mode(std::string_view text) {
  for (SweepMode m : {SweepMode::Full, SweepMode::FullPruned, SweepMode::Parameterized})
    if (text == to_string(m)) return m;
  throw Error(ErrorCode::InvalidArgument, "unknown sweep mode '" + std::string(text) + "'");
}

namespace {

void note(SweepReport& report, int count, const UnitMatrix& witness) {
  if (report.observed_counts.insert(count).second) report.witnesses.emplace(count, witness);
}

SweepReport sweep2(int q) {
  const RootGrid grid(q);
  SweepReport report;
  std::array<int, 4> e{};
  for (e[0] = 0; e[0] < q; ++e[0])
    for (e[1] = 0; e[1] < q; ++e[1])
      for (e[2] = 0; e[2] < q; ++e[2])
        for (e[3] = 0; e[3] < q; ++e[3]) {
          ++report.candidates_examined;
          const std::array<int, 2> inner{e[0] - e[2], e[1] - e[3]};
          if (!grid.zero_sum(inner)) continue;
          ++report.chms_found;
          int count = 0;
          for (int x : e) count += grid.real(x) ? 1 : 0;
          if (!report.observed_counts.count(count))
            note(report, count, from_exponents(2, 2, e, q));
        }
  return report;
}

SweepReport sweep3(int q) {
  const int grid_order = std::lcm(q, 3);
  const int step = grid_order / q;
  const int third = grid_order / 3;
  const RootGrid grid(grid_order);
  SweepReport report;
  std::array<int, 9> e{};
  for (int sign : {1, -1}) {
    for (int a1 = 0; a1 < q; ++a1)
      for (int a2 = 0; a2 < q; ++a2)
        for (int b0 = 0; b0 < q; ++b0)
          for (int b1 = 0; b1 < q; ++b1)
            for (int b2 = 0; b2 < q; ++b2) {
              ++report.candidates_examined;
              const std::array<int, 3> a{0, a1, a2};
              const std::array<int, 3> b{b0, b1, b2};
              int count = 0;
              for (int j = 0; j < 3; ++j)
                for (int k = 0; k < 3; ++k) {
                  const int x = grid.wrap((a[j] + b[k]) * step + sign * j * k * third);
                  e[static_cast<std::size_t>(j * 3 + k)] = x;
                  count += grid.real(x) ? 1 : 0;
                }
              for (int r = 0; r < 3; ++r)
                for (int s = r + 1; s < 3; ++s) {
                  std::array<int, 3> inner{};
                  for (int k = 0; k < 3; ++k)
                    inner[static_cast<std::size_t>(k)] =
                        e[static_cast<std::size_t>(r * 3 + k)] - e[static_cast<std::size_t>(s * 3 + k)];
                  if (!grid.zero_sum(inner))
                    throw std::logic_error("parameterized order-3 family lost orthogonality");
                }
              ++report.chms_found;
              if (!report.observed_counts.count(count))
                note(report, count, from_exponents(3, 3, e, grid_order));
            }
  }
  return report;
}

struct CliqueResult {
  std::uint64_t nodes = 0;
  std::uint64_t cliques = 0;
  std::map<int, std::array<int, 4>> first;  // count -> least clique found
};

SweepReport sweep4(int q, int threads) {
  const RootGrid grid(q);
  const bool even = q % 2 == 0;
  // Unit rows with a sign-normalized first entry.
  std::vector<std::array<int, 4>> rows;
  for (int a = 0; a < (even ? q / 2 : q); ++a)
    for (int b = 0; b < q; ++b)
      for (int c = 0; c < q; ++c)
        for (int d = 0; d < q; ++d) rows.push_back({a, b, c, d});
  const std::size_t count = rows.size();
  const std::size_t words = (count + 63) / 64;
  std::vector<std::uint64_t> adj(count * words, 0);
  std::vector<int> reals(count, 0);
  for (std::size_t u = 0; u < count; ++u) {
    for (int x : rows[u]) reals[u] += grid.real(x) ? 1 : 0;
    for (std::size_t v = u + 1; v < count; ++v) {
      std::array<int, 4> inner{};
      for (int k = 0; k < 4; ++k) inner[static_cast<std::size_t>(k)] = rows[u][static_cast<std::size_t>(k)] - rows[v][static_cast<std::size_t>(k)];
      if (grid.zero_sum(inner)) {
        adj[u * words + v / 64] |= std::uint64_t{1} << (v % 64);
        adj[v * words + u / 64] |= std::uint64_t{1} << (u % 64);
      }
    }
  }

  // Neighbours of u above index `floor`, intersected with `mask`.
  auto restrict_above = [&](const std::uint64_t* mask, std::size_t u, std::size_t floor,
                            std::vector<std::uint64_t>& out) {
    bool any = false;
    for (std::size_t w = 0; w < words; ++w) {
      std::uint64_t bits = adj[u * words + w] & (mask ? mask[w] : ~std::uint64_t{0});
      if (w < floor / 64) bits = 0;
      else if (w == floor / 64) bits &= (floor % 64 == 63) ? 0 : (~std::uint64_t{0} << (floor % 64 + 1));
      out[w] = bits;
      any |= bits != 0;
    }
    return any;
  };
  auto for_each_bit = [&](const std::vector<std::uint64_t>& set, auto fn) {
    for (std::size_t w = 0; w < words; ++w)
      for (std::uint64_t bits = set[w]; bits; bits &= bits - 1)
        fn(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
  };

  const int t = clamp_threads(threads);
  std::vector<CliqueResult> partial(static_cast<std::size_t>(t));
  auto work = [&](int slot) {
    CliqueResult& res = partial[static_cast<std::size_t>(slot)];
    std::vector<std::uint64_t> n0(words), n1(words), n2(words);
    for (std::size_t r0 = static_cast<std::size_t>(slot); r0 < count; r0 += static_cast<std::size_t>(t)) {
      if (!restrict_above(nullptr, r0, r0, n0)) continue;
      for_each_bit(n0, [&](std::size_t r1) {
        ++res.nodes;
        if (!restrict_above(n0.data(), r1, r1, n1)) return;
        for_each_bit(n1, [&](std::size_t r2) {
          ++res.nodes;
          if (!restrict_above(n1.data(), r2, r2, n2)) return;
          for_each_bit(n2, [&](std::size_t r3) {
            ++res.nodes;
            ++res.cliques;
            const int c = reals[r0] + reals[r1] + reals[r2] + reals[r3];
            const std::array<int, 4> key{static_cast<int>(r0), static_cast<int>(r1),
                                         static_cast<int>(r2), static_cast<int>(r3)};
            auto it = res.first.find(c);
            if (it == res.first.end() || key < it->second) res.first[c] = key;
          });
        });
      });
    }
  };
  if (t == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int s = 0; s < t; ++s) pool.emplace_back(work, s);
    for (auto& th : pool) th.join();
  }

  SweepReport report;
  std::map<int, std::array<int, 4>> first;
  std::uint64_t cliques = 0;
  for (const auto& res : partial) {
    report.candidates_examined += res.nodes;
    cliques += res.cliques;
    for (const auto& [c, key] : res.first) {
      auto it = first.find(c);
      if (it == first.end() || key < it->second) first[c] = key;
    }
  }
  const std::uint64_t class_size = 24u * (even ? 16u : 1u);
  report.chms_found = cliques * class_size;
  for (const auto& [c, key] : first) {
    std::array<int, 16> e{};
    for (int r = 0; r < 4; ++r)
      for (int k = 0; k < 4; ++k)
        e[static_cast<std::size_t>(r * 4 + k)] =
            rows[static_cast<std::size_t>(key[static_cast<std::size_t>(r)])][static_cast<std::size_t>(k)];
    note(report, c, from_exponents(4, 4, e, q));
  }
  return report;
}

}  // namespace

SweepReport grid_sweep(int n, int q, SweepMode mode, int threads) {
  require(q >= 1, ErrorCode::InvalidArgument, "root order must be positive");
  const std::string what = "sweep n=" + std::to_string(n) + " q=" + std::to_string(q) +
                           " mode=" + to_string(mode);
  SweepReport report;
  if (n == 2 && mode == SweepMode::Full && q <= 24) {
    report = sweep2(q);
  } else if (n == 3 && mode == SweepMode::Parameterized && q <= 12) {
    report = sweep3(q);
  } else if (n == 4 && mode == SweepMode::FullPruned && q <= 8) {
    report = sweep4(q, threads);
  } else {
    throw Error(ErrorCode::InfeasibleSweep,
                what + " is outside the supported range (n=2 full q<=24, "
                       "n=3 parameterized q<=12, n=4 full-pruned q<=8)");
  }
  report.order = n;
  report.root_order = q;
  report.mode = mode;
  return report;
}

// ---------------------------------------------------------------------------
// Predicates.

namespace {

constexpr std::array<PredicateId, 10> kPredicates{
    PredicateId::OneNonReal,     PredicateId::ThreeNonReal,      PredicateId::PairedNonReal,
    PredicateId::ThreeRowPrefix, PredicateId::TwoRealLines,      PredicateId::ThreeRealLines,
    PredicateId::RealBlock,      PredicateId::SingleNonRealRows, PredicateId::ForbiddenRows,
    PredicateId::OverlapPair};

Phase ratio(const UnitMatrix& m, int a, int b, int k) { return m(b, k) * m(a, k).conj(); }

std::vector<Phase> ratio_row(const UnitMatrix& m, int a, int b) {
  std::vector<Phase> out;
  out.reserve(static_cast<std::size_t>(m.cols()));
  for (int k = 0; k < m.cols(); ++k) out.push_back(ratio(m, a, b, k));
  return out;
}

std::vector<int> non_real_positions(std::span<const Phase> v) {
  std::vector<int> out;
  for (int k = 0; k < static_cast<int>(v.size()); ++k)
    if (!is_real(v[static_cast<std::size_t>(k)])) out.push_back(k);
  return out;
}

using Violation = std::optional<PredicateResult>;

PredicateResult violation(PredicateId id, std::vector<int> rows, std::vector<int> cols,
                          std::string detail) {
  PredicateResult r;
  r.id = id;
  r.pass = false;
  r.rows = std::move(rows);
  r.cols = std::move(cols);
  r.detail = std::move(detail);
  return r;
}

// Ratio-row counts: fails when some pair has exactly `bad` non-real entries.
Violation ratio_count_check(const UnitMatrix& m, PredicateId id, int bad) {
  const int n = m.rows();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      const auto pos = non_real_positions(ratio_row(m, a, b));
      if (static_cast<int>(pos.size()) == bad)
        return violation(id, {a, b}, pos,
                         "ratio of the rows has exactly " + std::to_string(bad) +
                             " non-real entries");
    }
  return std::nullopt;
}

Violation paired_check(const UnitMatrix& m) {
  const int n = m.rows();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      const auto v = ratio_row(m, a, b);
      const auto pos = non_real_positions(v);
      if (pos.size() != 2) continue;
      const Phase q = v[static_cast<std::size_t>(pos[0])] * v[static_cast<std::size_t>(pos[1])].conj();
      if (!is_real(q))
        return violation(PredicateId::PairedNonReal, {a, b}, pos,
                         "two non-real ratio entries are neither equal nor opposite");
    }
  return std::nullopt;
}

const std::vector<UnitMatrix>& prefix_classes() {
  static const std::vector<UnitMatrix> classes = [] {
    std::vector<UnitMatrix> out;
    for (int k = 1; k <= 4; ++k) out.push_back(canonical_three_rows(h6_prefix(k)));
    return out;
  }();
  return classes;
}

Violation prefix_check(const UnitMatrix& m) {
  const int n = m.rows();
  const auto& classes = prefix_classes();
  for (int a = 0; a < n; ++a) {
    std::vector<std::vector<Phase>> two;
    std::vector<int> which;
    for (int b = 0; b < n; ++b) {
      if (b == a) continue;
      auto v = ratio_row(m, a, b);
      if (non_real_positions(v).size() == 2) {
        two.push_back(std::move(v));
        which.push_back(b);
      }
    }
    for (std::size_t x = 0; x < two.size(); ++x)
      for (std::size_t y = x + 1; y < two.size(); ++y) {
        const UnitMatrix system = UnitMatrix::from_rows(
            {std::vector<Phase>(static_cast<std::size_t>(m.cols()), Phase::one()), two[x], two[y]});
        const UnitMatrix canon = canonical_three_rows(system);
        if (std::find(classes.begin(), classes.end(), canon) == classes.end())
          return violation(PredicateId::ThreeRowPrefix, {a, which[x], which[y]}, {},
                           "three-row system outside the four known classes");
      }
  }
  return std::nullopt;
}

bool all_real(std::span<const Phase> v) {
  return std::all_of(v.begin(), v.end(), [](const Phase& p) { return is_real(p); });
}

Violation real_lines_check(const UnitMatrix& m, PredicateId id, int lines) {
  const int n = m.rows();
  for (int a = 0; a < n; ++a) {
    std::vector<int> mates;
    for (int b = a + 1; b < n; ++b)
      if (all_real(ratio_row(m, a, b))) mates.push_back(b);
    if (static_cast<int>(mates.size()) + 1 >= lines) {
      std::vector<int> rows{a};
      rows.insert(rows.end(), mates.begin(), mates.begin() + (lines - 1));
      return violation(id, rows, {},
                       std::to_string(lines) + " rows are real multiples of each other");
    }
  }
  return std::nullopt;
}

Violation block_check(const UnitMatrix& m) {
  if (auto w = real_submatrix_exists(m, 4, 3))
    return violation(PredicateId::RealBlock, w->rows, w->cols, "4x3 real submatrix");
  if (auto w = real_submatrix_exists(m, 3, 4))
    return violation(PredicateId::RealBlock, w->rows, w->cols, "3x4 real submatrix");
  return std::nullopt;
}

std::vector<std::vector<int>> literal_non_real(const UnitMatrix& m) {
  std::vector<std::vector<int>> out;
  for (int r = 0; r < m.rows(); ++r) out.push_back(non_real_positions(m.row(r)));
  return out;
}

Violation single_rows_check(const UnitMatrix& m) {
  const auto nr = literal_non_real(m);
  std::vector<int> rows;
  for (int r = 0; r < m.rows(); ++r)
    if (nr[static_cast<std::size_t>(r)].size() == 1) rows.push_back(r);
  if (rows.size() < 3) return std::nullopt;
  std::vector<int> cols;
  for (int r : rows) {
    const int c = nr[static_cast<std::size_t>(r)][0];
    if (std::find(cols.begin(), cols.end(), c) != cols.end())
      return violation(PredicateId::SingleNonRealRows, rows, {c},
                       "two single-non-real rows share a column");
    if (classify(m(r, c)) != EntryClass::PurelyImaginary)
      return violation(PredicateId::SingleNonRealRows, {r}, {c},
                       "single non-real entry is not +-i");
    cols.push_back(c);
  }
  return std::nullopt;
}

// Bitmask of real columns per row.
std::vector<unsigned> real_masks(const UnitMatrix& m) {
  std::vector<unsigned> out;
  for (int r = 0; r < m.rows(); ++r) {
    unsigned mask = 0;
    for (int c = 0; c < m.cols(); ++c)
      if (is_real(m(r, c))) mask |= 1u << c;
    out.push_back(mask);
  }
  return out;
}

std::vector<int> bits_of(unsigned mask) {
  std::vector<int> out;
  for (int c = 0; mask; ++c, mask >>= 1)
    if (mask & 1u) out.push_back(c);
  return out;
}

Violation forbidden_rows_check(const UnitMatrix& m) {
  const int n = m.rows();
  const unsigned all = (1u << m.cols()) - 1u;
  const auto real = real_masks(m);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      const unsigned ab = real[static_cast<std::size_t>(a)] & real[static_cast<std::size_t>(b)];
      const unsigned both_non_real =
          all & ~real[static_cast<std::size_t>(a)] & ~real[static_cast<std::size_t>(b)];
      for (int c = 0; c < n; ++c) {
        if (c == a || c == b) continue;
        const unsigned abc = ab & real[static_cast<std::size_t>(c)];
        if (std::popcount(abc) < 3) continue;
        if (std::popcount(ab) >= 4 && (both_non_real & real[static_cast<std::size_t>(c)]))
          return violation(PredicateId::ForbiddenRows, {a, b, c}, bits_of(ab),
                           "first forbidden three-row pattern");
        if (std::popcount(ab) >= 5)
          return violation(PredicateId::ForbiddenRows, {a, b, c}, bits_of(ab),
                           "second forbidden three-row pattern");
      }
    }
  return std::nullopt;
}

Violation overlap_check(const UnitMatrix& m) {
  const int n = m.rows();
  const auto nr = literal_non_real(m);
  for (int a = 0; a < n; ++a) {
    const auto& na = nr[static_cast<std::size_t>(a)];
    if (na.size() != 2) continue;
    for (int b = 0; b < n; ++b) {
      const auto& nb = nr[static_cast<std::size_t>(b)];
      if (b == a || nb.size() != 2) continue;
      for (int p : na) {
        if (std::find(nb.begin(), nb.end(), p) == nb.end()) continue;
        const int q = na[0] == p ? na[1] : na[0];
        const int s = nb[0] == p ? nb[1] : nb[0];
        if (s == q) continue;
        if (!is_real(m(a, p) * m(b, p).conj()))
          return violation(PredicateId::OverlapPair, {a, b}, {p, q, s},
                           "shared non-real column holds entries that are not +-equal");
        if (is_real(m(b, p) * m(b, s).conj()) &&
            (classify(m(b, p)) != EntryClass::PurelyImaginary ||
             classify(m(b, s)) != EntryClass::PurelyImaginary))
          return violation(PredicateId::OverlapPair, {a, b}, {p, q, s},
                           "+-equal non-real entries of the second row are not +-i");
      }
    }
  }
  return std::nullopt;
}

Violation run_on(const UnitMatrix& m, PredicateId id) {
  switch (id) {
    case PredicateId::OneNonReal: return ratio_count_check(m, id, 1);
    case PredicateId::ThreeNonReal: return ratio_count_check(m, id, 3);
    case PredicateId::PairedNonReal: return paired_check(m);
    case PredicateId::ThreeRowPrefix: return prefix_check(m);
    case PredicateId::TwoRealLines: return real_lines_check(m, id, 2);
    case PredicateId::ThreeRealLines: return real_lines_check(m, id, 3);
    case PredicateId::RealBlock: return block_check(m);
    case PredicateId::SingleNonRealRows: return single_rows_check(m);
    case PredicateId::ForbiddenRows: return forbidden_rows_check(m);
    case PredicateId::OverlapPair: return overlap_check(m);
  }
  return std::nullopt;
}

PredicateResult check_verified(const UnitMatrix& m, PredicateId id) {
  if (auto v = run_on(m, id)) return *v;
  if (id != PredicateId::RealBlock) {
    if (auto v = run_on(transpose(m), id)) {
      v->transposed = true;
      return *v;
    }
  }
  PredicateResult ok;
  ok.id = id;
  return ok;
}

}  // namespace

const char* to_string(PredicateId id) noexcept {
  switch (id) {
    case PredicateId::OneNonReal: return "one-nonreal";
    case PredicateId::ThreeNonReal: return "three-nonreal";
    case PredicateId::PairedNonReal: return "paired-nonreal";
    case PredicateId::ThreeRowPrefix: return "three-row-prefix";
    case PredicateId::TwoRealLines: return "two-real-lines";
    case PredicateId::ThreeRealLines: return "three-real-lines";
    case PredicateId::RealBlock: return "real-block";
    case PredicateId::SingleNonRealRows: return "single-nonreal-rows";
    case PredicateId::ForbiddenRows: return "forbidden-rows";
    case PredicateId::OverlapPair: return "overlap-pair";
  }
  return "?";
}

PredicateId parse_predicate(std::string_view text) {
  for (PredicateId id : kPredicates)
    if (text == to_string(id)) return id;
  throw Error(ErrorCode::InvalidArgument, "unknown predicate '" + std::string(text) + "'");
}

std::span<const PredicateId> all_predicates() { return kPredicates; }

bool predicate_applies(const UnitMatrix& m, PredicateId id) {
  if (!m.is_square()) return false;
  const int n = m.rows();
  switch (id) {
    case PredicateId::OneNonReal: return n >= 2;
    case PredicateId::ThreeNonReal:
    case PredicateId::PairedNonReal: return n % 2 == 0;
    case PredicateId::ThreeRowPrefix: return n == 6 && m.all_rational();
    case PredicateId::TwoRealLines: return n % 2 == 1 && n >= 3;
    case PredicateId::ThreeRealLines: return n % 4 == 2;
    case PredicateId::RealBlock:
    case PredicateId::SingleNonRealRows:
    case PredicateId::ForbiddenRows:
    case PredicateId::OverlapPair: return n == 6;
  }
  return false;
}

PredicateResult predicate_check(const UnitMatrix& m, PredicateId id) {
  if (!predicate_applies(m, id))
    throw Error(ErrorCode::NotApplicable,
                std::string("predicate ") + to_string(id) + " does not apply to a " +
                    std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + " matrix");
  if (!verify_chm(m)) throw Error(ErrorCode::NotAChm, "input is not a complex Hadamard matrix");
  return check_verified(m, id);
}

std::vector<PredicateResult> check_all_predicates(const UnitMatrix& m) {
  if (!m.is_square() || !verify_chm(m))
    throw Error(ErrorCode::NotAChm, "input is not a complex Hadamard matrix");
  std::vector<PredicateResult> out;
  for (PredicateId id : kPredicates) {
    if (!predicate_applies(m, id)) continue;
    out.push_back(check_verified(m, id));
    if (!out.back().pass) break;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Three-row systems.

UnitMatrix canonical_three_rows(const UnitMatrix& prefix) {
  require(prefix.rows() == 3 && prefix.all_rational(), ErrorCode::InvalidArgument,
          "canonical_three_rows expects an exact three-row system");
  for (const Phase& p : prefix.row(0))
    require(p == Phase::one(), ErrorCode::InvalidArgument,
            "canonical_three_rows expects an all-ones first row");
  const int cols = prefix.cols();
  std::optional<std::vector<Phase>> best;
  for (int swap = 0; swap < 2; ++swap)
    for (int signs = 0; signs < 4; ++signs) {
      std::array<std::vector<Phase>, 2> r;
      for (int j = 0; j < 2; ++j) {
        const int src = 1 + (j ^ swap);
        const Phase f = (signs >> j) & 1 ? Phase::minus_one() : Phase::one();
        for (const Phase& p : prefix.row(src)) r[static_cast<std::size_t>(j)].push_back(p * f);
      }
      // Sorting columns by (row 2, row 3) minimises the row-major key.
      std::vector<int> order(static_cast<std::size_t>(cols));
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end(), [&](int x, int y) {
        const auto ux = static_cast<std::size_t>(x), uy = static_cast<std::size_t>(y);
        if (!(r[0][ux] == r[0][uy])) return phase_less(r[0][ux], r[0][uy]);
        return phase_less(r[1][ux], r[1][uy]);
      });
      std::vector<Phase> key;
      for (int j = 0; j < 2; ++j)
        for (int c : order) key.push_back(r[static_cast<std::size_t>(j)][static_cast<std::size_t>(c)]);
      if (!best || std::lexicographical_compare(key.begin(), key.end(), best->begin(),
                                                best->end(), phase_less))
        best = std::move(key);
    }
  UnitMatrix out(3, cols);
  for (int j = 0; j < 2; ++j)
    for (int c = 0; c < cols; ++c)
      out(1 + j, c) = (*best)[static_cast<std::size_t>(j * cols + c)];
  return out;
}

ThreeRowClassification classify_three_rows(int q) {
  require(q >= 12 && q % 12 == 0 && q <= 48, ErrorCode::InvalidArgument,
          "classify_three_rows needs q in {12, 24, 36, 48}");
  const RootGrid grid(q);
  const int half = q / 2;
  std::vector<std::array<int, 6>> rows;
  for (int p = 0; p < 6; ++p)
    for (int s = p + 1; s < 6; ++s)
      for (int x = 0; x < q; ++x) {
        if (grid.real(x)) continue;
        for (int y = 0; y < q; ++y) {
          if (grid.real(y)) continue;
          for (int signs = 0; signs < 16; ++signs) {
            std::array<int, 6> row{};
            int bit = 0;
            for (int k = 0; k < 6; ++k) {
              if (k == p) row[static_cast<std::size_t>(k)] = x;
              else if (k == s) row[static_cast<std::size_t>(k)] = y;
              else row[static_cast<std::size_t>(k)] = ((signs >> bit++) & 1) ? half : 0;
            }
            if (grid.zero_sum(row)) rows.push_back(row);
          }
        }
      }

  ThreeRowClassification out;
  std::vector<UnitMatrix> reps;
  for (std::size_t u = 0; u < rows.size(); ++u)
    for (std::size_t v = 0; v < rows.size(); ++v) {
      if (u == v) continue;
      std::array<int, 6> inner{};
      for (std::size_t k = 0; k < 6; ++k) inner[k] = rows[u][k] - rows[v][k];
      if (!grid.zero_sum(inner)) continue;
      ++out.systems;
      std::array<int, 18> e{};
      for (std::size_t k = 0; k < 6; ++k) {
        e[6 + k] = rows[u][k];
        e[12 + k] = rows[v][k];
      }
      UnitMatrix canon = canonical_three_rows(from_exponents(3, 6, e, q));
      if (std::find(reps.begin(), reps.end(), canon) == reps.end())
        reps.push_back(std::move(canon));
    }
  std::sort(reps.begin(), reps.end(), [](const UnitMatrix& a, const UnitMatrix& b) {
    return std::lexicographical_compare(a.entries().begin(), a.entries().end(),
                                        b.entries().begin(), b.entries().end(), phase_less);
  });
  out.representatives = std::move(reps);
  return out;
}

// ---------------------------------------------------------------------------
// Audits.

std::vector<UnitMatrix> audit_bases() { return {fourier(6), g6(), kron(fourier(2), fourier(3))}; }

std::vector<UnitMatrix> predicate_corpus_bases() {
  auto bases = audit_bases();
  bases.push_back(fourier(3));
  bases.push_back(fourier(5));
  return bases;
}

std::uint64_t sample_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + index * 0x9E3779B97F4A7C15ull + 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

AuditReport s6_membership_audit(std::uint64_t samples, std::uint64_t seed, int threads) {
  const auto bases = audit_bases();
  const std::set<int>& allowed = sn_table().at(6);
  const int t = clamp_threads(threads);
  std::vector<AuditReport> partial(static_cast<std::size_t>(t));
  parallel_slices(samples, t, [&](std::uint64_t begin, std::uint64_t end, int slot) {
    AuditReport& rep = partial[static_cast<std::size_t>(slot)];
    for (std::uint64_t k = begin; k < end; ++k) {
      const UnitMatrix m = random_orbit(bases[k % bases.size()], sample_seed(seed, k), 24);
      const int count = census(m).real_count;
      ++rep.histogram[count];
      ++rep.samples;
      if (!allowed.count(count) && !rep.violating_sample) {
        rep.pass = false;
        rep.violating_sample = k;
        rep.violation = m;
      }
    }
  });
  AuditReport out;
  for (auto& rep : partial) {
    out.samples += rep.samples;
    for (const auto& [c, k] : rep.histogram) out.histogram[c] += k;
    if (rep.violating_sample && (!out.violating_sample || *rep.violating_sample < *out.violating_sample)) {
      out.pass = false;
      out.violating_sample = rep.violating_sample;
      out.violation = rep.violation;
    }
  }
  return out;
}

namespace {
constexpr std::array<int, 3> kSuiteRoots{24, 4, 2};
}  // namespace

PredicateSuiteReport predicate_suite(std::uint64_t samples, std::uint64_t seed, int threads) {
  const auto bases = predicate_corpus_bases();
  const int t = clamp_threads(threads);
  struct Partial {
    PredicateSuiteReport report;
    std::optional<std::uint64_t> index;
  };
  std::vector<Partial> partial(static_cast<std::size_t>(t));
  parallel_slices(samples, t, [&](std::uint64_t begin, std::uint64_t end, int slot) {
    Partial& part = partial[static_cast<std::size_t>(slot)];
    for (std::uint64_t k = begin; k < end && !part.index; ++k) {
      const int roots = kSuiteRoots[(k / bases.size()) % kSuiteRoots.size()];
      const UnitMatrix m = random_orbit(bases[k % bases.size()], sample_seed(seed, k), roots);
      ++part.report.matrices;
      for (const PredicateResult& r : check_all_predicates(m)) {
        ++part.report.checks;
        ++part.report.applied[r.id];
        if (!r.pass) {
          part.index = k;
          part.report.pass = false;
          part.report.violation = r;
          part.report.witness = m;
        }
      }
    }
  });
  PredicateSuiteReport out;
  std::optional<std::uint64_t> first;
  for (auto& part : partial) {
    out.matrices += part.report.matrices;
    out.checks += part.report.checks;
    for (const auto& [id, k] : part.report.applied) out.applied[id] += k;
    if (part.index && (!first || *part.index < *first)) {
      first = part.index;
      out.pass = false;
      out.violation = part.report.violation;
      out.witness = part.report.witness;
    }
  }
  return out;
}

}  // namespace chm
