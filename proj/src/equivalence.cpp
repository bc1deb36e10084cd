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

#include "chm/equivalence.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

#include "chm/error.hpp"

namespace chm {

namespace {

bool is_permutation_of_range(const Permutation& p) {
  std::vector<char> seen(p.size(), 0);
  for (int v : p) {
    if (v < 0 || v >= static_cast<int>(p.size()) || seen[static_cast<std::size_t>(v)])
      return false;
    seen[static_cast<std::size_t>(v)] = 1;
  }
  return true;
}

Permutation inverse(const Permutation& p) {
  Permutation inv(p.size());
  for (std::size_t i = 0; i < p.size(); ++i)
    inv[static_cast<std::size_t>(p[i])] = static_cast<int>(i);
  return inv;
}

void check_transform(const MonomialTransform& t) {
  const std::size_t n = t.row_perm.size();
  if (t.col_perm.size() != n || t.row_phases.size() != n ||
      t.col_phases.size() != n)
    throw Error(ErrorCode::DimensionMismatch,
                "transform components have different lengths");
  if (!is_permutation_of_range(t.row_perm) || !is_permutation_of_range(t.col_perm))
    throw Error(ErrorCode::InvalidArgument, "transform holds a non-permutation");
}

}  // namespace

MonomialTransform MonomialTransform::identity(int n) {
  MonomialTransform t;
  t.row_perm.resize(static_cast<std::size_t>(n));
  std::iota(t.row_perm.begin(), t.row_perm.end(), 0);
  t.col_perm = t.row_perm;
  t.row_phases.assign(static_cast<std::size_t>(n), Phase::one());
  t.col_phases = t.row_phases;
  return t;
}

bool MonomialTransform::is_permutation_only() const {
  auto unit = [](const Phase& p) { return p == Phase::one(); };
  return std::all_of(row_phases.begin(), row_phases.end(), unit) &&
         std::all_of(col_phases.begin(), col_phases.end(), unit);
}

UnitMatrix apply(const MonomialTransform& t, const UnitMatrix& m) {
  check_transform(t);
  const int n = m.order();
  if (t.order() != n)
    throw Error(ErrorCode::DimensionMismatch,
                "transform order " + std::to_string(t.order()) +
                    " vs matrix order " + std::to_string(n));
  UnitMatrix out(n);
  for (int i = 0; i < n; ++i) {
    const int src_row = t.row_perm[static_cast<std::size_t>(i)];
    const Phase& r = t.row_phases[static_cast<std::size_t>(src_row)];
    for (int k = 0; k < n; ++k) {
      const int src_col = t.col_perm[static_cast<std::size_t>(k)];
      out(i, k) = r * m(src_row, src_col) *
                  t.col_phases[static_cast<std::size_t>(src_col)];
    }
  }
  return out;
}

MonomialTransform compose(const MonomialTransform& outer,
                          const MonomialTransform& inner) {
  check_transform(outer);
  check_transform(inner);
  if (outer.order() != inner.order())
    throw Error(ErrorCode::DimensionMismatch, "composing transforms of different order");
  const auto n = static_cast<std::size_t>(inner.order());
  const Permutation inner_row_inv = inverse(inner.row_perm);
  const Permutation inner_col_inv = inverse(inner.col_perm);
  MonomialTransform t;
  t.row_perm.resize(n);
  t.col_perm.resize(n);
  t.row_phases.resize(n);
  t.col_phases.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    t.row_perm[i] = inner.row_perm[static_cast<std::size_t>(outer.row_perm[i])];
    t.col_perm[i] = inner.col_perm[static_cast<std::size_t>(outer.col_perm[i])];
  }
  for (std::size_t s = 0; s < n; ++s) {
    t.row_phases[s] =
        inner.row_phases[s] *
        outer.row_phases[static_cast<std::size_t>(inner_row_inv[s])];
    t.col_phases[s] =
        inner.col_phases[s] *
        outer.col_phases[static_cast<std::size_t>(inner_col_inv[s])];
  }
  return t;
}

Dephased dephase(const UnitMatrix& m) {
  const int n = m.order();
  MonomialTransform t = MonomialTransform::identity(n);
  for (int j = 0; j < n; ++j) t.row_phases[static_cast<std::size_t>(j)] = m(j, 0).conj();
  for (int k = 0; k < n; ++k)
    t.col_phases[static_cast<std::size_t>(k)] = (t.row_phases[0] * m(0, k)).conj();
  UnitMatrix d = apply(t, m);
  // Mixed products of radian phases may leave 1 as r(0); pin the frame.
  for (int j = 0; j < n; ++j) d(j, 0) = Phase::one();
  for (int k = 0; k < n; ++k) d(0, k) = Phase::one();
  return {std::move(d), std::move(t)};
}

namespace {

bool entries_equal(const Phase& a, const Phase& b) { return same_value(a, b); }

// Exact sorted key for an all-rational row; empty when any entry is radian.
std::vector<std::pair<std::int64_t, std::int64_t>> row_key(std::span<const Phase> row) {
  std::vector<std::pair<std::int64_t, std::int64_t>> key;
  for (const Phase& p : row) {
    if (!p.is_rational()) return {};
    key.emplace_back(p.numerator(), p.denominator());
  }
  std::sort(key.begin(), key.end(), [](const auto& x, const auto& y) {
    return phase_less(Phase::turn(x.first, x.second), Phase::turn(y.first, y.second));
  });
  return key;
}

std::vector<int> sorted(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

class EquivalenceSearch {
 public:
  EquivalenceSearch(const UnitMatrix& a, const UnitMatrix& b)
      : a_(a), b_(b), n_(a.order()) {
    const Census ca = census(a), cb = census(b);
    row_real_a_ = ca.per_row_counts;
    row_real_b_ = cb.per_row_counts;
    compat_.assign(static_cast<std::size_t>(n_ * n_), 0);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) {
        bool ok = row_real_a_[static_cast<std::size_t>(i)] ==
                  row_real_b_[static_cast<std::size_t>(j)];
        if (ok) {
          auto ka = row_key(a.row(i)), kb = row_key(b.row(j));
          if (!ka.empty() && !kb.empty()) ok = ka == kb;
        }
        compat_[static_cast<std::size_t>(i * n_ + j)] = ok;
      }
    perm_.assign(static_cast<std::size_t>(n_), -1);
    used_.assign(static_cast<std::size_t>(n_), 0);
  }

  std::optional<MonomialTransform> run() {
    if (!search(0)) return std::nullopt;
    MonomialTransform t = MonomialTransform::identity(n_);
    t.row_perm = perm_;
    t.col_perm = col_perm_;
    return t;
  }

 private:
  bool search(int row) {
    if (row == n_) return match_columns();
    for (int j = 0; j < n_; ++j) {
      if (used_[static_cast<std::size_t>(j)] ||
          !compat_[static_cast<std::size_t>(row * n_ + j)])
        continue;
      used_[static_cast<std::size_t>(j)] = 1;
      perm_[static_cast<std::size_t>(row)] = j;
      if (search(row + 1)) return true;
      used_[static_cast<std::size_t>(j)] = 0;
    }
    return false;
  }

  // Columns compare as whole vectors, so greedy matching is exact.
  bool match_columns() {
    col_perm_.assign(static_cast<std::size_t>(n_), -1);
    std::vector<char> taken(static_cast<std::size_t>(n_), 0);
    for (int k = 0; k < n_; ++k) {
      bool found = false;
      for (int s = 0; s < n_ && !found; ++s) {
        if (taken[static_cast<std::size_t>(s)]) continue;
        bool same = true;
        for (int i = 0; i < n_ && same; ++i)
          same = entries_equal(a_(i, k), b_(perm_[static_cast<std::size_t>(i)], s));
        if (same) {
          taken[static_cast<std::size_t>(s)] = 1;
          col_perm_[static_cast<std::size_t>(k)] = s;
          found = true;
        }
      }
      if (!found) return false;
    }
    return true;
  }

  const UnitMatrix& a_;
  const UnitMatrix& b_;
  int n_;
  std::vector<int> row_real_a_, row_real_b_;
  std::vector<char> compat_;
  Permutation perm_, col_perm_;
  std::vector<char> used_;
};

}  // namespace

std::optional<MonomialTransform> find_equivalence(const UnitMatrix& a,
                                                  const UnitMatrix& b) {
  const int n = a.order();
  if (b.order() != n)
    throw Error(ErrorCode::DimensionMismatch, "matrices have different orders");
  if (n > kMaxEquivalenceOrder)
    throw Error(ErrorCode::OrderTooLarge,
                "equivalence search supports n <= " +
                    std::to_string(kMaxEquivalenceOrder));
  const Census ca = census(a), cb = census(b);
  if (ca.real_count != cb.real_count ||
      sorted(ca.per_row_counts) != sorted(cb.per_row_counts) ||
      sorted(ca.per_column_counts) != sorted(cb.per_column_counts))
    return std::nullopt;
  return EquivalenceSearch(a, b).run();
}

bool are_equivalent(const UnitMatrix& a, const UnitMatrix& b) {
  return find_equivalence(a, b).has_value();
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) throw Error(ErrorCode::InvalidArgument, "empty range");
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t x = rng();
    if (x >= threshold) return x % bound;
  }
}

Permutation random_permutation(int n, std::mt19937_64& rng) {
  Permutation p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  for (int k = n - 1; k > 0; --k) {
    const auto j = uniform_below(rng, static_cast<std::uint64_t>(k) + 1);
    std::swap(p[static_cast<std::size_t>(k)], p[j]);
  }
  return p;
}

MonomialTransform random_transform(int n, int roots, std::mt19937_64& rng) {
  if (roots < 1) throw Error(ErrorCode::InvalidArgument, "roots must be >= 1");
  MonomialTransform t;
  t.row_perm = random_permutation(n, rng);
  auto draw = [&] {
    return Phase::turn(static_cast<std::int64_t>(
                           uniform_below(rng, static_cast<std::uint64_t>(roots))),
                       roots);
  };
  for (int k = 0; k < n; ++k) t.row_phases.push_back(draw());
  for (int k = 0; k < n; ++k) t.col_phases.push_back(draw());
  t.col_perm = random_permutation(n, rng);
  return t;
}

MonomialTransform random_permutation_transform(int n, std::mt19937_64& rng) {
  MonomialTransform t = MonomialTransform::identity(n);
  t.row_perm = random_permutation(n, rng);
  t.col_perm = random_permutation(n, rng);
  return t;
}

UnitMatrix random_orbit(const UnitMatrix& m, std::uint64_t seed, int roots) {
  std::mt19937_64 rng(seed);
  return apply(random_transform(m.order(), roots, rng), m);
}

namespace {

std::vector<std::string_view> split_ws(std::string_view s, std::vector<int>& cols,
                                       int offset) {
  std::vector<std::string_view> out;
  std::size_t k = 0;
  while (k < s.size()) {
    while (k < s.size() && (s[k] == ' ' || s[k] == '\t' || s[k] == '\r')) ++k;
    if (k >= s.size()) break;
    const std::size_t start = k;
    while (k < s.size() && s[k] != ' ' && s[k] != '\t' && s[k] != '\r') ++k;
    out.push_back(s.substr(start, k - start));
    cols.push_back(offset + static_cast<int>(start) + 1);
  }
  return out;
}

}  // namespace

MonomialTransform parse_transform(std::string_view text) {
  MonomialTransform t;
  bool have[4] = {false, false, false, false};
  static constexpr std::string_view kKeys[4] = {"rowperm", "rowphases",
                                                "colphases", "colperm"};
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos || line[first] == '#') continue;
    const auto colon = line.find(':');
    if (colon == std::string_view::npos)
      throw ParseError(line_no, static_cast<int>(first) + 1, "expected 'key: values'");
    std::string_view key = line.substr(first, colon - first);
    while (!key.empty() && (key.back() == ' ' || key.back() == '\t')) key.remove_suffix(1);
    int slot = -1;
    for (int s = 0; s < 4; ++s)
      if (key == kKeys[s]) slot = s;
    if (slot < 0)
      throw ParseError(line_no, static_cast<int>(first) + 1,
                       "unknown key '" + std::string(key) + "'");
    if (have[slot])
      throw ParseError(line_no, static_cast<int>(first) + 1,
                       "duplicate key '" + std::string(key) + "'");
    have[slot] = true;
    std::vector<int> cols;
    const auto tokens = split_ws(line.substr(colon + 1), cols, static_cast<int>(colon) + 1);
    for (std::size_t k = 0; k < tokens.size(); ++k) {
      const std::string_view tok = tokens[k];
      if (slot == 0 || slot == 3) {
        int v = -1;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc{} || ptr != tok.data() + tok.size())
          throw ParseError(line_no, cols[k], "expected an index, got '" + std::string(tok) + "'");
        (slot == 0 ? t.row_perm : t.col_perm).push_back(v);
      } else {
        try {
          (slot == 1 ? t.row_phases : t.col_phases).push_back(parse_phase(tok));
        } catch (const Error&) {
          throw ParseError(line_no, cols[k], "invalid phase token '" + std::string(tok) + "'");
        }
      }
    }
  }
  for (int s = 0; s < 4; ++s)
    if (!have[s])
      throw ParseError(line_no, 1, "missing key '" + std::string(kKeys[s]) + "'");
  try {
    check_transform(t);
  } catch (const Error& e) {
    throw ParseError(line_no, 1, e.what());
  }
  return t;
}

std::string format_transform(const MonomialTransform& t) {
  std::ostringstream out;
  auto ints = [&](const char* key, const Permutation& p) {
    out << key << ':';
    for (int v : p) out << ' ' << v;
    out << '\n';
  };
  auto phases = [&](const char* key, const std::vector<Phase>& v) {
    out << key << ':';
    for (const Phase& p : v) out << ' ' << to_string(p);
    out << '\n';
  };
  ints("rowperm", t.row_perm);
  phases("rowphases", t.row_phases);
  phases("colphases", t.col_phases);
  ints("colperm", t.col_perm);
  return out.str();
}

}  // namespace chm
