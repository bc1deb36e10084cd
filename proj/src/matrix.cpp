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

#include "chm/matrix.hpp"

#include <algorithm>
#include <cassert>
#include <charconv>
#include <fstream>
#include <numeric>
#include <sstream>

#include "chm/cyclotomic.hpp"
#include "chm/error.hpp"

namespace chm {

UnitMatrix::UnitMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0)
    throw Error(ErrorCode::InvalidArgument, "negative matrix dimension");
  data_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols),
               Phase::one());
}

UnitMatrix UnitMatrix::from_rows(const std::vector<std::vector<Phase>>& rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r == 0 ? 0 : static_cast<int>(rows.front().size());
  UnitMatrix m(r, c);
  for (int j = 0; j < r; ++j) {
    if (static_cast<int>(rows[static_cast<std::size_t>(j)].size()) != c)
      throw Error(ErrorCode::DimensionMismatch, "ragged rows");
    for (int k = 0; k < c; ++k)
      m(j, k) = rows[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
  }
  return m;
}

int UnitMatrix::order() const {
  if (!is_square())
    throw Error(ErrorCode::DimensionMismatch,
                "matrix is " + std::to_string(rows_) + "x" +
                    std::to_string(cols_) + ", not square");
  return rows_;
}

bool UnitMatrix::all_rational() const noexcept {
  return std::all_of(data_.begin(), data_.end(),
                     [](const Phase& p) { return p.is_rational(); });
}

namespace {

int common_denominator(std::span<const Phase> entries) {
  std::int64_t l = 1;
  for (const Phase& p : entries) {
    if (!p.is_rational())
      throw Error(ErrorCode::ExactModeUnavailable,
                  "exact mode needs rational phases, found " + to_string(p));
    l = std::lcm(l, p.denominator());
    if (l > CyclotomicField::kMaxOrder)
      throw Error(ErrorCode::ExactModeUnavailable,
                  "common denominator too large for exact mode");
  }
  return static_cast<int>(l);
}

int exponent(const Phase& p, int order) {
  return static_cast<int>(p.numerator() * (order / p.denominator()));
}

bool zero_inner_product(const CyclotomicField& field, std::span<const int> a,
                        std::span<const int> b,
                        std::vector<std::int64_t>& counts) {
  const int n = field.order();
  std::fill(counts.begin(), counts.end(), 0);
  for (std::size_t k = 0; k < a.size(); ++k) {
    int e = (b[k] - a[k]) % n;
    if (e < 0) e += n;
    ++counts[static_cast<std::size_t>(e)];
  }
  return field.is_zero(counts);
}

bool numeric_rows_orthogonal(const UnitMatrix& m, bool columns, double tol) {
  const int outer = columns ? m.cols() : m.rows();
  const int inner = columns ? m.rows() : m.cols();
  std::vector<std::complex<double>> z(m.entries().size());
  for (std::size_t k = 0; k < z.size(); ++k) z[k] = m.entries()[k].to_complex();
  auto at = [&](int line, int k) {
    return columns ? z[static_cast<std::size_t>(k * m.cols() + line)]
                   : z[static_cast<std::size_t>(line * m.cols() + k)];
  };
  for (int a = 0; a < outer; ++a)
    for (int b = a + 1; b < outer; ++b) {
      std::complex<double> s = 0.0;
      for (int k = 0; k < inner; ++k) s += std::conj(at(a, k)) * at(b, k);
      if (std::abs(s) >= tol) return false;
    }
  return true;
}

bool exact_rows_orthogonal(const UnitMatrix& m) {
  const int n = common_denominator(m.entries());
  const CyclotomicField& field = cyclotomic_field(n);
  std::vector<int> e(m.entries().size());
  for (std::size_t k = 0; k < e.size(); ++k) e[k] = exponent(m.entries()[k], n);
  std::vector<std::int64_t> counts(static_cast<std::size_t>(n));
  const auto cols = static_cast<std::size_t>(m.cols());
  std::span<const int> all(e);
  for (int a = 0; a < m.rows(); ++a)
    for (int b = a + 1; b < m.rows(); ++b)
      if (!zero_inner_product(field, all.subspan(a * cols, cols),
                              all.subspan(b * cols, cols), counts))
        return false;
  return true;
}

}  // namespace

bool rows_orthogonal_exact(std::span<const Phase> a, std::span<const Phase> b) {
  if (a.size() != b.size())
    throw Error(ErrorCode::DimensionMismatch, "row lengths differ");
  std::vector<Phase> both(a.begin(), a.end());
  both.insert(both.end(), b.begin(), b.end());
  const int n = common_denominator(both);
  std::vector<int> ea(a.size()), eb(b.size());
  for (std::size_t k = 0; k < a.size(); ++k) {
    ea[k] = exponent(a[k], n);
    eb[k] = exponent(b[k], n);
  }
  std::vector<std::int64_t> counts(static_cast<std::size_t>(n));
  return zero_inner_product(cyclotomic_field(n), ea, eb, counts);
}

bool rows_orthogonal(const UnitMatrix& m, OrthoMode mode, double tol) {
  if (mode == OrthoMode::Exact) return exact_rows_orthogonal(m);
  return numeric_rows_orthogonal(m, false, tol);
}

bool is_chm(const UnitMatrix& m, OrthoMode mode, double tol) {
  if (!m.is_square() || m.rows() == 0) return false;
  const bool ok = rows_orthogonal(m, mode, tol);
  // Square with orthogonal rows implies orthogonal columns.
  assert(!ok || numeric_rows_orthogonal(m, true, std::max(tol, 1e-9)));
  return ok;
}

bool verify_chm(const UnitMatrix& m) {
  return is_chm(m, m.all_rational() ? OrthoMode::Exact : OrthoMode::Numeric);
}

UnitMatrix fourier(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "fourier order < 1");
  UnitMatrix m(n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) m(j, k) = Phase::turn((j * k) % n, n);
  return m;
}

UnitMatrix transpose(const UnitMatrix& m) {
  UnitMatrix t(m.cols(), m.rows());
  for (int j = 0; j < m.rows(); ++j)
    for (int k = 0; k < m.cols(); ++k) t(k, j) = m(j, k);
  return t;
}

UnitMatrix conjugate(const UnitMatrix& m) {
  UnitMatrix c(m.rows(), m.cols());
  for (int j = 0; j < m.rows(); ++j)
    for (int k = 0; k < m.cols(); ++k) c(j, k) = m(j, k).conj();
  return c;
}

UnitMatrix scaled(const UnitMatrix& m, const Phase& s) {
  UnitMatrix out(m.rows(), m.cols());
  for (int j = 0; j < m.rows(); ++j)
    for (int k = 0; k < m.cols(); ++k) out(j, k) = m(j, k) * s;
  return out;
}

UnitMatrix kron(const UnitMatrix& a, const UnitMatrix& b) {
  UnitMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int ar = 0; ar < a.rows(); ++ar)
    for (int ac = 0; ac < a.cols(); ++ac)
      for (int br = 0; br < b.rows(); ++br)
        for (int bc = 0; bc < b.cols(); ++bc)
          out(ar * b.rows() + br, ac * b.cols() + bc) = a(ar, ac) * b(br, bc);
  return out;
}

Census census(const UnitMatrix& m) {
  Census c;
  c.per_row_counts.assign(static_cast<std::size_t>(m.rows()), 0);
  c.per_column_counts.assign(static_cast<std::size_t>(m.cols()), 0);
  for (int j = 0; j < m.rows(); ++j)
    for (int k = 0; k < m.cols(); ++k) {
      const Phase& p = m(j, k);
      if (!p.is_rational()) c.approximate = true;
      if (classify(p) == EntryClass::Real) {
        ++c.real_count;
      } else {
        ++c.per_row_counts[static_cast<std::size_t>(j)];
        ++c.per_column_counts[static_cast<std::size_t>(k)];
      }
    }
  c.imaginary_array = c.per_row_counts;
  std::sort(c.imaginary_array.begin(), c.imaginary_array.end());
  return c;
}

namespace {

struct Token {
  std::string_view text;
  int column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t k = 0;
  while (k < line.size()) {
    while (k < line.size() && (line[k] == ' ' || line[k] == '\t' ||
                               line[k] == '\r'))
      ++k;
    if (k >= line.size()) break;
    const std::size_t start = k;
    while (k < line.size() && line[k] != ' ' && line[k] != '\t' &&
           line[k] != '\r')
      ++k;
    out.push_back({line.substr(start, k - start), static_cast<int>(start) + 1});
  }
  return out;
}

int parse_dimension(const Token& t, int line) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
  if (ec != std::errc{} || ptr != t.text.data() + t.text.size() || v < 1)
    throw ParseError(line, t.column,
                     "expected a positive dimension, got '" +
                         std::string(t.text) + "'");
  return v;
}

}  // namespace

UnitMatrix parse_matrix(std::string_view text) {
  int rows = 0, cols = 0;
  bool have_header = false;
  std::vector<std::vector<Phase>> data;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    const std::string_view line =
        text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    const auto tokens = tokenize(line);
    if (tokens.empty() || tokens.front().text.front() == '#') continue;
    if (!have_header) {
      if (tokens.size() > 2)
        throw ParseError(line_no, tokens[2].column, "header must be 'n' or 'rows cols'");
      rows = parse_dimension(tokens[0], line_no);
      cols = tokens.size() == 2 ? parse_dimension(tokens[1], line_no) : rows;
      have_header = true;
      continue;
    }
    if (static_cast<int>(data.size()) == rows)
      throw ParseError(line_no, tokens.front().column,
                       "more than " + std::to_string(rows) + " rows");
    if (static_cast<int>(tokens.size()) != cols)
      throw ParseError(line_no,
                       tokens.size() > static_cast<std::size_t>(cols)
                           ? tokens[static_cast<std::size_t>(cols)].column
                           : static_cast<int>(line.size()) + 1,
                       "expected " + std::to_string(cols) + " entries, found " +
                           std::to_string(tokens.size()));
    std::vector<Phase> row;
    row.reserve(tokens.size());
    for (const Token& t : tokens) {
      try {
        row.push_back(parse_phase(t.text));
      } catch (const Error& e) {
        throw ParseError(line_no, t.column,
                         "invalid phase token '" + std::string(t.text) + "'");
      }
    }
    data.push_back(std::move(row));
  }
  if (!have_header) throw ParseError(line_no, 1, "missing dimension header");
  if (static_cast<int>(data.size()) != rows)
    throw ParseError(line_no, 1,
                     "expected " + std::to_string(rows) + " rows, found " +
                         std::to_string(data.size()));
  return UnitMatrix::from_rows(data);
}

std::string format_matrix(const UnitMatrix& m) {
  std::ostringstream out;
  if (m.is_square())
    out << m.rows() << '\n';
  else
    out << m.rows() << ' ' << m.cols() << '\n';
  for (int j = 0; j < m.rows(); ++j) {
    for (int k = 0; k < m.cols(); ++k) {
      if (k) out << ' ';
      out << to_string(m(j, k));
    }
    out << '\n';
  }
  return out.str();
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::Io, "cannot write " + path.string());
  out << text;
  if (!out) throw Error(ErrorCode::Io, "write failed for " + path.string());
}

UnitMatrix read_matrix_file(const std::filesystem::path& path) {
  return parse_matrix(read_text_file(path));
}

void write_matrix_file(const std::filesystem::path& path, const UnitMatrix& m) {
  write_text_file(path, format_matrix(m));
}

}  // namespace chm
