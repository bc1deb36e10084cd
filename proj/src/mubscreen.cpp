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

#include "chm/mubscreen.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

#include "chm/error.hpp"

namespace chm {

Basis Basis::identity(int d) {
  if (d < 1) throw Error(ErrorCode::InvalidArgument, "basis dimension < 1");
  Basis b;
  b.d_ = d;
  b.data_.assign(static_cast<std::size_t>(d * d), 0.0);
  for (int k = 0; k < d; ++k) b.data_[static_cast<std::size_t>(k * d + k)] = 1.0;
  return b;
}

Basis Basis::from_hadamard(const UnitMatrix& h) {
  if (!verify_chm(h))
    throw Error(ErrorCode::NotAChm, "matrix is not a complex Hadamard matrix");
  Basis b;
  b.d_ = h.order();
  const double s = 1.0 / std::sqrt(static_cast<double>(b.d_));
  b.data_.reserve(h.entries().size());
  for (const Phase& p : h.entries()) b.data_.push_back(s * p.to_complex());
  return b;
}

bool is_unbiased(const Basis& a, const Basis& b, double tol) {
  const int d = a.dimension();
  if (b.dimension() != d)
    throw Error(ErrorCode::DimensionMismatch, "bases of different dimension");
  const double target = 1.0 / std::sqrt(static_cast<double>(d));
  for (int ca = 0; ca < d; ++ca)
    for (int cb = 0; cb < d; ++cb) {
      std::complex<double> s = 0.0;
      for (int r = 0; r < d; ++r) s += std::conj(a(r, ca)) * b(r, cb);
      if (std::abs(std::abs(s) - target) > tol) return false;
    }
  return true;
}

std::optional<SubmatrixWitness> real_submatrix_exists(const UnitMatrix& m, int r, int c) {
  if (r < 1 || c < 1 || r > m.rows() || c > m.cols())
    throw Error(ErrorCode::InvalidArgument, "submatrix shape exceeds matrix");
  std::vector<char> real(m.entries().size());
  for (std::size_t k = 0; k < real.size(); ++k) real[k] = is_real(m.entries()[k]);
  const int n = m.cols();
  std::vector<int> cols(static_cast<std::size_t>(c));
  std::iota(cols.begin(), cols.end(), 0);
  for (;;) {
    std::vector<int> rows;
    for (int j = 0; j < m.rows() && static_cast<int>(rows.size()) < r; ++j) {
      bool all = true;
      for (int k : cols) all = all && real[static_cast<std::size_t>(j * n + k)];
      if (all) rows.push_back(j);
    }
    if (static_cast<int>(rows.size()) == r) return SubmatrixWitness{rows, cols};
    int k = c - 1;
    while (k >= 0 && cols[static_cast<std::size_t>(k)] == n - c + k) --k;
    if (k < 0) return std::nullopt;
    ++cols[static_cast<std::size_t>(k)];
    for (int j = k + 1; j < c; ++j)
      cols[static_cast<std::size_t>(j)] = cols[static_cast<std::size_t>(j - 1)] + 1;
  }
}

const char* verdict_tag(VerdictKind kind) noexcept {
  switch (kind) {
    case VerdictKind::ExcludedByRealCount: return "excluded-by-real-count";
    case VerdictKind::ExcludedByRealSubmatrix: return "excluded-by-real-submatrix";
    case VerdictKind::NotExcluded: return "not-excluded";
  }
  return "unknown";
}

ScreenVerdict screen(const UnitMatrix& m) {
  if (!m.is_square() || m.rows() != 6)
    throw Error(ErrorCode::DimensionMismatch, "screening needs a 6x6 matrix");
  if (!verify_chm(m))
    throw Error(ErrorCode::NotAChm, "matrix is not a complex Hadamard matrix");
  ScreenVerdict v;
  v.census = census(m);
  if (v.census.real_count > kMubTrioMaxRealEntries) {
    v.kind = VerdictKind::ExcludedByRealCount;
  } else if (auto w = real_submatrix_exists(m, 3, 2)) {
    v.kind = VerdictKind::ExcludedByRealSubmatrix;
    v.witness = std::move(w);
  } else {
    v.kind = VerdictKind::NotExcluded;
  }
  return v;
}

std::string format_verdict(const ScreenVerdict& v) {
  std::ostringstream out;
  out << "verdict=" << verdict_tag(v.kind) << " count=" << v.census.real_count;
  if (v.witness) {
    auto list = [&](const std::vector<int>& xs) {
      for (std::size_t k = 0; k < xs.size(); ++k) out << (k ? "," : "") << xs[k];
    };
    out << " witness_rows=";
    list(v.witness->rows);
    out << " witness_cols=";
    list(v.witness->cols);
  }
  return out.str();
}

}  // namespace chm
