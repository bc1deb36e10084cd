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

#include "chm/constructions.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "chm/error.hpp"
#include "recipe_data.hpp"

namespace chm {

const std::map<int, std::set<int>>& sn_table() {
  static const std::map<int, std::set<int>> table = [] {
    std::map<int, std::set<int>> t;
    t[2] = {0, 1, 2, 4};
    t[3] = {0, 1, 2, 3, 4, 5, 6};
    for (int m = 0; m <= 10; ++m) t[4].insert(m);
    t[4].insert({12, 16});
    for (int m = 0; m <= 22; ++m) t[6].insert(m);
    t[6].insert({24, 25, 26, 30});
    return t;
  }();
  return table;
}

bool achievable(int n, int count) {
  const auto& t = sn_table();
  const auto it = t.find(n);
  if (it == t.end())
    throw Error(ErrorCode::InvalidArgument,
                "no achievable-count table for order " + std::to_string(n));
  return it->second.count(count) > 0;
}

namespace {

UnitMatrix from_tokens(int rows, int cols, std::initializer_list<const char*> tokens) {
  UnitMatrix m(rows, cols);
  auto it = tokens.begin();
  for (int j = 0; j < rows; ++j)
    for (int k = 0; k < cols; ++k) m(j, k) = parse_phase(*it++);
  return m;
}

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

[[noreturn]] void not_achievable(int m, int n) {
  throw Error(ErrorCode::NotAchievable,
              "NotAchievable(" + std::to_string(m) + ", " + std::to_string(n) +
                  "): no " + std::to_string(n) + "x" + std::to_string(n) +
                  " complex Hadamard matrix has exactly " + std::to_string(m) +
                  " real entries");
}

}  // namespace

UnitMatrix g6() {
  return from_tokens(6, 6, {"i",  "1",  "1",  "1",  "1",  "1",
                            "1",  "i",  "-1", "-1", "1",  "1",
                            "1",  "-1", "i",  "1",  "1",  "-1",
                            "1",  "-1", "1",  "i",  "-1", "1",
                            "1",  "1",  "1",  "-1", "i",  "-1",
                            "1",  "1",  "-1", "1",  "-1", "i"});
}

UnitMatrix m4() {
  return from_tokens(4, 4, {"1", "1",  "1",  "1",
                            "1", "-1", "1",  "-1",
                            "1", "1",  "-1", "-1",
                            "1", "-1", "-1", "1"});
}

UnitMatrix theorem_i_matrix(int n, int d) {
  if (n < 1 || d < 0 || d > n)
    throw Error(ErrorCode::InvalidArgument, "theorem_i_matrix needs n >= 1, 0 <= d <= n");
  const UnitMatrix f = fourier(n);
  const Phase e = Phase::radians(1.0);
  UnitMatrix m(n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      Phase p = f(j, k);
      if (j < d) p *= e;
      if (k > 0) p *= e;
      m(j, k) = p;
    }
  return m;
}

UnitMatrix theorem_ii_matrix(int n, int d) {
  if (n < 3 || n % 2 == 0)
    throw Error(ErrorCode::InvalidArgument, "theorem_ii_matrix needs an odd order n >= 3");
  if (!is_prime(n))
    throw Error(ErrorCode::NonPrimeOdd,
                "order " + std::to_string(n) +
                    " is composite; the 2n-d-1 count only holds for primes");
  if (d < 0 || d > n - 1)
    throw Error(ErrorCode::InvalidArgument, "theorem_ii_matrix needs 0 <= d <= n-1");
  UnitMatrix m = fourier(n);
  for (int j = n - d; j < n; ++j)
    for (int k = 0; k < n; ++k) m(j, k) *= Phase::i();
  return m;
}

UnitMatrix h3_matrix(H3Variant variant, std::span<const Phase> params) {
  const Phase w = Phase::omega();
  const Phase w2 = Phase::turn(2, 3);
  if (variant == H3Variant::H31) {
    if (params.size() != 2)
      throw Error(ErrorCode::InvalidArgument, "H31 takes (a1, b1)");
    const Phase a1 = params[0], b1 = params[1];
    return UnitMatrix::from_rows({{a1 * b1, a1, a1}, {b1, w, w2}, {b1, w2, w}});
  }
  if (params.size() != 3)
    throw Error(ErrorCode::InvalidArgument, "H32 takes (a1, a2, a3)");
  const Phase a1 = params[0], a2 = params[1], a3 = params[2];
  return UnitMatrix::from_rows(
      {{a1, a1, a1}, {a2, a2 * w, a2 * w2}, {a3, a3 * w2, a3 * w}});
}

UnitMatrix h6_prefix(int k) {
  switch (k) {
    case 1:
      return from_tokens(3, 6, {"1", "1",  "1",  "1",  "1",  "1",
                                "i", "-i", "1",  "1",  "-1", "-1",
                                "i", "1",  "-i", "-1", "-1", "1"});
    case 2:
      return from_tokens(3, 6, {"1",  "1", "1", "1",  "1",  "1",
                                "-i", "i", "1", "1",  "-1", "-1",
                                "-i", "1", "i", "-1", "-1", "1"});
    case 3:
      return from_tokens(3, 6, {"1",  "1",       "1",  "1", "1",       "1",
                                "w2", "t(1/6)",  "1",  "1", "-1",      "-1",
                                "1",  "-1",      "w2", "1", "t(1/6)",  "-1"});
    case 4:
      return from_tokens(3, 6, {"1", "1",       "1", "1", "1",       "1",
                                "w", "t(5/6)",  "1", "1", "-1",      "-1",
                                "1", "-1",      "w", "1", "t(5/6)",  "-1"});
    default:
      throw Error(ErrorCode::InvalidArgument, "h6_prefix index must be 1..4");
  }
}

int CountRecipe::multiplier_count() const {
  int c = 0;
  for (const auto& r : rows) c += static_cast<int>(r.size());
  for (const auto& r : cols) c += static_cast<int>(r.size());
  return c;
}

namespace {

std::vector<Phase> parse_args(std::string_view inner) {
  std::vector<Phase> out;
  std::size_t pos = 0;
  while (pos <= inner.size()) {
    const auto comma = inner.find(',', pos);
    const auto tok = inner.substr(pos, comma == std::string_view::npos ? inner.size() - pos
                                                                      : comma - pos);
    out.push_back(parse_phase(tok));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace

UnitMatrix base_matrix(std::string_view name) {
  try {
    if (const auto star = name.find('*'); star != std::string_view::npos)
      return scaled(base_matrix(name.substr(star + 1)), parse_phase(name.substr(0, star)));
    if (name == "g6") return g6();
    if (name == "m4") return m4();
    if (name.starts_with("fourier")) {
      const auto digits = name.substr(7);
      int n = 0;
      auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
      if (ec == std::errc{} && ptr == digits.data() + digits.size() && n >= 1)
        return fourier(n);
    }
    if ((name.starts_with("h31(") || name.starts_with("h32(")) && name.back() == ')') {
      const auto args = parse_args(name.substr(4, name.size() - 5));
      return h3_matrix(name[2] == '1' ? H3Variant::H31 : H3Variant::H32, args);
    }
  } catch (const Error&) {
  }
  throw Error(ErrorCode::InvalidArgument, "unknown base matrix '" + std::string(name) + "'");
}

UnitMatrix realize(const CountRecipe& recipe, const UnitMatrix& base) {
  UnitMatrix m = base;
  const int n = m.order();
  auto check = [n](int idx) {
    if (idx < 0 || idx >= n)
      throw Error(ErrorCode::InvalidArgument, "recipe index out of range");
  };
  for (std::size_t mi = 0; mi < recipe.multipliers.size(); ++mi) {
    const Phase& mul = recipe.multipliers[mi];
    if (mi < recipe.rows.size())
      for (int j : recipe.rows[mi]) {
        check(j);
        for (int k = 0; k < n; ++k) m(j, k) *= mul;
      }
    if (mi < recipe.cols.size())
      for (int k : recipe.cols[mi]) {
        check(k);
        for (int j = 0; j < n; ++j) m(j, k) *= mul;
      }
  }
  return m;
}

UnitMatrix realize(const CountRecipe& recipe) {
  return realize(recipe, base_matrix(recipe.base));
}

CountRecipe recipe_search(const UnitMatrix& base, std::string base_name, int target,
                          std::span<const Phase> multipliers) {
  const int n = base.order();
  std::int64_t q = 1;
  for (const Phase& p : base.entries()) {
    if (!p.is_rational())
      throw Error(ErrorCode::InvalidArgument, "recipe_search needs a rational base");
    q = std::lcm(q, p.denominator());
  }
  for (const Phase& p : multipliers) {
    if (!p.is_rational())
      throw Error(ErrorCode::InvalidArgument, "recipe_search needs rational multipliers");
    q = std::lcm(q, p.denominator());
  }
  const int mcount = static_cast<int>(multipliers.size());
  auto expo = [q](const Phase& p) { return static_cast<int>(p.numerator() * (q / p.denominator())); };
  std::vector<int> b(static_cast<std::size_t>(n * n));
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) b[static_cast<std::size_t>(j * n + k)] = expo(base(j, k));
  std::vector<int> mexp;
  for (const Phase& p : multipliers) mexp.push_back(expo(p));
  const int qi = static_cast<int>(q);
  const int half = qi % 2 == 0 ? qi / 2 : -1;

  // Items: each row under each multiplier, then each column likewise.
  const int items = 2 * n * mcount;
  auto decode = [&](int t, bool& is_col, int& mi, int& line) {
    is_col = t >= n * mcount;
    const int rest = is_col ? t - n * mcount : t;
    mi = rest / n;
    line = rest % n;
  };

  std::vector<int> radd(static_cast<std::size_t>(n)), cadd(static_cast<std::size_t>(n));
  auto count_for = [&](const std::vector<int>& idx) {
    std::fill(radd.begin(), radd.end(), 0);
    std::fill(cadd.begin(), cadd.end(), 0);
    for (int t : idx) {
      bool is_col;
      int mi, line;
      decode(t, is_col, mi, line);
      (is_col ? cadd : radd)[static_cast<std::size_t>(line)] += mexp[static_cast<std::size_t>(mi)];
    }
    int real = 0;
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const int e = (b[static_cast<std::size_t>(j * n + k)] + radd[static_cast<std::size_t>(j)] +
                       cadd[static_cast<std::size_t>(k)]) % qi;
        real += (e == 0 || e == half);
      }
    return real;
  };

  if (target >= 0 && target <= n * n) {
    for (int level = 0; level <= items; ++level) {
      std::vector<int> idx(static_cast<std::size_t>(level));
      std::iota(idx.begin(), idx.end(), 0);
      for (;;) {
        if (count_for(idx) == target) {
          CountRecipe r;
          r.order = n;
          r.claimed_count = target;
          r.base = std::move(base_name);
          r.multipliers.assign(multipliers.begin(), multipliers.end());
          r.rows.assign(static_cast<std::size_t>(mcount), {});
          r.cols.assign(static_cast<std::size_t>(mcount), {});
          for (int t : idx) {
            bool is_col;
            int mi, line;
            decode(t, is_col, mi, line);
            (is_col ? r.cols : r.rows)[static_cast<std::size_t>(mi)].push_back(line);
          }
          const UnitMatrix m = realize(r, base);
          if (census(m).real_count != target || (verify_chm(base) && !verify_chm(m)))
            throw std::logic_error("recipe_search produced an unverified recipe");
          return r;
        }
        // Next combination of `level` items out of `items`.
        int k = level - 1;
        while (k >= 0 && idx[static_cast<std::size_t>(k)] == items - level + k) --k;
        if (k < 0) break;
        ++idx[static_cast<std::size_t>(k)];
        for (int j = k + 1; j < level; ++j)
          idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
      }
    }
  }
  throw Error(ErrorCode::NotFound, "no multiplier assignment reaches " + std::to_string(target) +
                                       " real entries");
}

namespace {

const std::vector<Phase>& file_multipliers() {
  static const std::vector<Phase> m = {Phase::i(), Phase::eighth()};
  return m;
}

std::vector<int> parse_index_list(std::string_view s, int line_no) {
  std::vector<int> out;
  if (s == "-") return out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    const auto comma = s.find(',', pos);
    const auto tok = s.substr(pos, comma == std::string_view::npos ? s.size() - pos : comma - pos);
    int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size() || v < 0)
      throw ParseError(line_no, 1, "bad index list '" + std::string(s) + "'");
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::string format_index_list(const std::vector<int>& v) {
  if (v.empty()) return "-";
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(v[k]);
  }
  return s;
}

}  // namespace

std::vector<CountRecipe> parse_recipes(std::string_view text) {
  std::vector<CountRecipe> out;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  static constexpr std::string_view kKeys[4] = {"rows_i=", "rows_e8=", "cols_i=", "cols_e8="};
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::vector<std::string> f;
    for (std::string tok; fields >> tok;) f.push_back(tok);
    if (f.empty()) continue;
    if (f.size() != 7) throw ParseError(line_no, 1, "expected 7 fields");
    CountRecipe r;
    try {
      r.order = std::stoi(f[0]);
      r.claimed_count = std::stoi(f[1]);
    } catch (const std::exception&) {
      throw ParseError(line_no, 1, "bad order or count");
    }
    r.base = f[2];
    r.multipliers = file_multipliers();
    r.rows.resize(2);
    r.cols.resize(2);
    for (int k = 0; k < 4; ++k) {
      const std::string& field = f[static_cast<std::size_t>(3 + k)];
      if (!std::string_view(field).starts_with(kKeys[k]))
        throw ParseError(line_no, 1, "expected field " + std::string(kKeys[k]));
      auto list = parse_index_list(std::string_view(field).substr(kKeys[k].size()), line_no);
      (k < 2 ? r.rows : r.cols)[static_cast<std::size_t>(k % 2)] = std::move(list);
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::string format_recipes(const std::vector<CountRecipe>& recipes) {
  std::ostringstream out;
  out << "# Copyright 2026 The chm Authors.\n"
         "# SPDX-License-Identifier: Apache-2.0\n"
         "# Real-entry count recipes: n m base rows_i rows_e8 cols_i cols_e8\n"
         "# Listed rows/columns of the base are multiplied by i or e^{i pi/4}.\n"
         "# Regenerate with: chmtool recipes --regen\n";
  for (const CountRecipe& r : recipes) {
    if (r.multipliers != file_multipliers() || r.rows.size() != 2 || r.cols.size() != 2)
      throw Error(ErrorCode::InvalidArgument, "recipe file only stores {i, e8} multipliers");
    out << r.order << ' ' << r.claimed_count << ' ' << r.base
        << " rows_i=" << format_index_list(r.rows[0])
        << " rows_e8=" << format_index_list(r.rows[1])
        << " cols_i=" << format_index_list(r.cols[0])
        << " cols_e8=" << format_index_list(r.cols[1]) << '\n';
  }
  return out.str();
}

std::string_view shipped_recipe_text() { return detail::kShippedRecipes; }

const std::vector<CountRecipe>& recipe_table() {
  static const std::vector<CountRecipe> table = [] {
    auto t = parse_recipes(shipped_recipe_text());
    for (const CountRecipe& r : t) {
      const UnitMatrix m = realize(r);
      if (!is_chm(m, OrthoMode::Exact) || census(m).real_count != r.claimed_count)
        throw std::logic_error("shipped recipe (" + std::to_string(r.order) + ", " +
                               std::to_string(r.claimed_count) + ") fails verification");
    }
    return t;
  }();
  return table;
}

std::vector<CountRecipe> regenerate_recipes() {
  std::vector<CountRecipe> out;
  auto fixed = [&](int n, int m, std::string base, std::vector<int> rows_i,
                   std::vector<int> rows_e8, std::vector<int> cols_i) {
    CountRecipe r;
    r.order = n;
    r.claimed_count = m;
    r.base = std::move(base);
    r.multipliers = file_multipliers();
    r.rows = {std::move(rows_i), std::move(rows_e8)};
    r.cols = {std::move(cols_i), {}};
    out.push_back(std::move(r));
  };
  // Order 2: [[i,i],[i,-i]], diag(e8,1) F2 diag(1,i), F2 diag(1,i), F2.
  fixed(2, 0, "fourier2", {0, 1}, {}, {});
  fixed(2, 1, "fourier2", {}, {0}, {1});
  fixed(2, 2, "fourier2", {}, {}, {1});
  fixed(2, 4, "fourier2", {}, {}, {});
  fixed(3, 0, "h31(w,w)", {}, {}, {});
  fixed(3, 1, "h31(w,w2)", {}, {}, {});
  fixed(3, 2, "h31(1,w)", {}, {}, {});
  fixed(3, 3, "h32(1,i,i)", {}, {}, {});
  fixed(3, 4, "h32(1,1,i)", {}, {}, {});
  fixed(3, 5, "h31(1,1)", {}, {}, {});
  fixed(3, 6, "w2*h31(w,w)", {}, {}, {});
  for (int m : sn_table().at(4))
    out.push_back(recipe_search(m4(), "m4", m, file_multipliers()));
  for (int m : sn_table().at(6))
    out.push_back(recipe_search(g6(), "g6", m, file_multipliers()));
  return out;
}

namespace {

UnitMatrix from_table(int n, int m) {
  if (!achievable(n, m)) not_achievable(m, n);
  for (const CountRecipe& r : recipe_table())
    if (r.order == n && r.claimed_count == m) return realize(r);
  throw std::logic_error("recipe table lacks an entry for an achievable count");
}

}  // namespace

UnitMatrix m4_with_count(int m) { return from_table(4, m); }
UnitMatrix s6_with_count(int m) { return from_table(6, m); }
UnitMatrix sn_with_count(int n, int m) { return from_table(n, m); }

}  // namespace chm
