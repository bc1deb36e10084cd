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

#include "chm/chm.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <new>
#include <sstream>
#include <string>

#include "chm/constructions.hpp"
#include "chm/equivalence.hpp"
#include "chm/error.hpp"
#include "chm/matrix.hpp"
#include "chm/mubscreen.hpp"
#include "chm/search.hpp"

struct chm_matrix {
  chm::UnitMatrix value;
};

struct chm_transform {
  chm::MonomialTransform value;
};

struct chm_sweep_report {
  chm::SweepReport value;
};

namespace {

thread_local std::string g_last_error;

struct NullArgument : std::exception {
  explicit NullArgument(const char* name) : message(std::string("null argument: ") + name) {}
  const char* what() const noexcept override { return message.c_str(); }
  std::string message;
};

template <class T>
T* need(T* p, const char* name) {
  if (!p) throw NullArgument(name);
  return p;
}

chm_status map_code(chm::ErrorCode code) {
  using chm::ErrorCode;
  switch (code) {
    case ErrorCode::Parse: return CHM_ERR_PARSE;
    case ErrorCode::DimensionMismatch: return CHM_ERR_DIMENSION_MISMATCH;
    case ErrorCode::NotAchievable: return CHM_ERR_NOT_ACHIEVABLE;
    case ErrorCode::ExactModeUnavailable: return CHM_ERR_EXACT_MODE_UNAVAILABLE;
    case ErrorCode::AmbiguousClassification: return CHM_ERR_AMBIGUOUS_CLASSIFICATION;
    case ErrorCode::NotAChm: return CHM_ERR_NOT_A_CHM;
    case ErrorCode::OrderTooLarge: return CHM_ERR_ORDER_TOO_LARGE;
    case ErrorCode::InfeasibleSweep: return CHM_ERR_INFEASIBLE_SWEEP;
    case ErrorCode::NotApplicable: return CHM_ERR_NOT_APPLICABLE;
    case ErrorCode::NotFound: return CHM_ERR_NOT_FOUND;
    case ErrorCode::NonPrimeOdd: return CHM_ERR_NON_PRIME_ODD;
    case ErrorCode::InvalidArgument: return CHM_ERR_INVALID_ARGUMENT;
    case ErrorCode::Io: return CHM_ERR_IO;
  }
  return CHM_ERR_INTERNAL;
}

template <class F>
chm_status guarded(F&& body) {
  try {
    body();
    g_last_error.clear();
    return CHM_OK;
  } catch (const NullArgument& e) {
    g_last_error = e.what();
    return CHM_ERR_NULL_ARGUMENT;
  } catch (const chm::Error& e) {
    g_last_error = e.what();
    return map_code(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return CHM_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return CHM_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown failure";
    return CHM_ERR_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

chm_matrix* wrap(chm::UnitMatrix m) { return new chm_matrix{std::move(m)}; }

chm::UnitMatrix named_matrix(std::string_view name) {
  if (name.size() == 3 && name.starts_with("h6") && name[2] >= '1' && name[2] <= '4')
    return chm::h6_prefix(name[2] - '0');
  return chm::base_matrix(name);
}

std::string describe(const chm::PredicateResult& r) {
  std::ostringstream os;
  os << chm::to_string(r.id) << ": " << r.detail;
  auto list = [&os](const char* key, const std::vector<int>& v) {
    if (v.empty()) return;
    os << ' ' << key << '=';
    for (std::size_t k = 0; k < v.size(); ++k) os << (k ? "," : "") << v[k];
  };
  list(r.transposed ? "cols" : "rows", r.rows);
  list(r.transposed ? "rows" : "cols", r.cols);
  return os.str();
}

chm_status oracle(int q, bool four, int* holds, uint64_t* examined, uint64_t* zero_sums) {
  return guarded([&] {
    need(holds, "holds");
    const chm::OracleResult r = four ? chm::sum4_scan(q) : chm::sum3_scan(q);
    *holds = r.holds ? 1 : 0;
    if (examined) *examined = r.examined;
    if (zero_sums) *zero_sums = r.zero_sums;
  });
}

}  // namespace

extern "C" {

const char* chm_version(void) { return "1.0.0"; }

const char* chm_last_error(void) { return g_last_error.c_str(); }

const char* chm_status_name(chm_status status) {
  switch (status) {
    case CHM_OK: return "Ok";
    case CHM_ERR_NULL_ARGUMENT: return "NullArgument";
    case CHM_ERR_INTERNAL: return "Internal";
    case CHM_ERR_PARSE: return chm::to_string(chm::ErrorCode::Parse);
    case CHM_ERR_DIMENSION_MISMATCH: return chm::to_string(chm::ErrorCode::DimensionMismatch);
    case CHM_ERR_NOT_ACHIEVABLE: return chm::to_string(chm::ErrorCode::NotAchievable);
    case CHM_ERR_EXACT_MODE_UNAVAILABLE:
      return chm::to_string(chm::ErrorCode::ExactModeUnavailable);
    case CHM_ERR_AMBIGUOUS_CLASSIFICATION:
      return chm::to_string(chm::ErrorCode::AmbiguousClassification);
    case CHM_ERR_NOT_A_CHM: return chm::to_string(chm::ErrorCode::NotAChm);
    case CHM_ERR_ORDER_TOO_LARGE: return chm::to_string(chm::ErrorCode::OrderTooLarge);
    case CHM_ERR_INFEASIBLE_SWEEP: return chm::to_string(chm::ErrorCode::InfeasibleSweep);
    case CHM_ERR_NOT_APPLICABLE: return chm::to_string(chm::ErrorCode::NotApplicable);
    case CHM_ERR_NOT_FOUND: return chm::to_string(chm::ErrorCode::NotFound);
    case CHM_ERR_NON_PRIME_ODD: return chm::to_string(chm::ErrorCode::NonPrimeOdd);
    case CHM_ERR_INVALID_ARGUMENT: return chm::to_string(chm::ErrorCode::InvalidArgument);
    case CHM_ERR_IO: return chm::to_string(chm::ErrorCode::Io);
  }
  return "Unknown";
}

void chm_string_free(char* s) { std::free(s); }

// ---- matrices ---------------------------------------------------------------

chm_status chm_matrix_parse(const char* text, chm_matrix** out) {
  return guarded([&] { *need(out, "out") = wrap(chm::parse_matrix(need(text, "text"))); });
}

chm_status chm_matrix_read_file(const char* path, chm_matrix** out) {
  return guarded([&] { *need(out, "out") = wrap(chm::read_matrix_file(need(path, "path"))); });
}

chm_status chm_matrix_write_file(const chm_matrix* m, const char* path) {
  return guarded([&] { chm::write_matrix_file(need(path, "path"), need(m, "m")->value); });
}

chm_status chm_matrix_format(const chm_matrix* m, char** out) {
  return guarded([&] { *need(out, "out") = dup_string(chm::format_matrix(need(m, "m")->value)); });
}

chm_status chm_matrix_clone(const chm_matrix* m, chm_matrix** out) {
  return guarded([&] { *need(out, "out") = wrap(need(m, "m")->value); });
}

void chm_matrix_free(chm_matrix* m) { delete m; }

int chm_matrix_rows(const chm_matrix* m) { return m ? m->value.rows() : 0; }
int chm_matrix_cols(const chm_matrix* m) { return m ? m->value.cols() : 0; }

chm_status chm_matrix_entry(const chm_matrix* m, int r, int c, char** token) {
  return guarded([&] {
    const auto& v = need(m, "m")->value;
    if (r < 0 || c < 0 || r >= v.rows() || c >= v.cols())
      throw chm::Error(chm::ErrorCode::InvalidArgument, "entry index out of range");
    *need(token, "token") = dup_string(chm::to_string(v(r, c)));
  });
}

int chm_matrix_equal(const chm_matrix* a, const chm_matrix* b) {
  return a && b && a->value == b->value ? 1 : 0;
}

chm_status chm_matrix_fourier(int n, chm_matrix** out) {
  return guarded([&] { *need(out, "out") = wrap(chm::fourier(n)); });
}

chm_status chm_matrix_named(const char* name, chm_matrix** out) {
  return guarded([&] { *need(out, "out") = wrap(named_matrix(need(name, "name"))); });
}

chm_status chm_matrix_transpose(const chm_matrix* m, chm_matrix** out) {
  return guarded([&] { *need(out, "out") = wrap(chm::transpose(need(m, "m")->value)); });
}

chm_status chm_matrix_conjugate(const chm_matrix* m, chm_matrix** out) {
  return guarded([&] { *need(out, "out") = wrap(chm::conjugate(need(m, "m")->value)); });
}

chm_status chm_matrix_kron(const chm_matrix* a, const chm_matrix* b, chm_matrix** out) {
  return guarded(
      [&] { *need(out, "out") = wrap(chm::kron(need(a, "a")->value, need(b, "b")->value)); });
}

// ---- constructions ----------------------------------------------------------

chm_status chm_construct(int n, int count, chm_matrix** out) {
  return guarded([&] { *need(out, "out") = wrap(chm::sn_with_count(n, count)); });
}

chm_status chm_theorem_i_matrix(int n, int d, chm_matrix** out) {
  return guarded([&] { *need(out, "out") = wrap(chm::theorem_i_matrix(n, d)); });
}

chm_status chm_theorem_ii_matrix(int n, int d, chm_matrix** out) {
  return guarded([&] { *need(out, "out") = wrap(chm::theorem_ii_matrix(n, d)); });
}

chm_status chm_achievable_counts(int n, int* counts, size_t cap, size_t* len) {
  return guarded([&] {
    const auto& table = chm::sn_table();
    const auto it = table.find(n);
    if (it == table.end())
      throw chm::Error(chm::ErrorCode::InvalidArgument,
                       "achievable counts are tabulated for n = 2, 3, 4, 6 only");
    *need(len, "len") = it->second.size();
    std::size_t k = 0;
    for (int c : it->second) {
      if (k >= cap) break;
      need(counts, "counts")[k++] = c;
    }
  });
}

chm_status chm_recipes_shipped(char** text) {
  return guarded([&] { *need(text, "text") = dup_string(std::string(chm::shipped_recipe_text())); });
}

chm_status chm_recipes_regenerate(char** text) {
  return guarded(
      [&] { *need(text, "text") = dup_string(chm::format_recipes(chm::regenerate_recipes())); });
}

// ---- verification and census ------------------------------------------------

chm_status chm_verify(const chm_matrix* m, chm_verify_mode mode, double tol, int* is_chm) {
  return guarded([&] {
    const auto& v = need(m, "m")->value;
    need(is_chm, "is_chm");
    bool ok = false;
    switch (mode) {
      case CHM_VERIFY_AUTO: ok = chm::verify_chm(v); break;
      case CHM_VERIFY_EXACT: ok = chm::is_chm(v, chm::OrthoMode::Exact); break;
      case CHM_VERIFY_NUMERIC: ok = chm::is_chm(v, chm::OrthoMode::Numeric, tol); break;
      default: throw chm::Error(chm::ErrorCode::InvalidArgument, "unknown verify mode");
    }
    *is_chm = ok ? 1 : 0;
  });
}

chm_status chm_census(const chm_matrix* m, int* real_count, int* approximate,
                      int* imaginary_array, int* per_row, int* per_col) {
  return guarded([&] {
    const chm::Census c = chm::census(need(m, "m")->value);
    if (real_count) *real_count = c.real_count;
    if (approximate) *approximate = c.approximate ? 1 : 0;
    if (imaginary_array) std::copy(c.imaginary_array.begin(), c.imaginary_array.end(), imaginary_array);
    if (per_row) std::copy(c.per_row_counts.begin(), c.per_row_counts.end(), per_row);
    if (per_col) std::copy(c.per_column_counts.begin(), c.per_column_counts.end(), per_col);
  });
}

// ---- equivalence ------------------------------------------------------------

chm_status chm_transform_parse(const char* text, chm_transform** out) {
  return guarded([&] {
    *need(out, "out") = new chm_transform{chm::parse_transform(need(text, "text"))};
  });
}

chm_status chm_transform_read_file(const char* path, chm_transform** out) {
  return guarded([&] {
    const std::string text = chm::read_text_file(need(path, "path"));
    *need(out, "out") = new chm_transform{chm::parse_transform(text)};
  });
}

chm_status chm_transform_format(const chm_transform* t, char** out) {
  return guarded(
      [&] { *need(out, "out") = dup_string(chm::format_transform(need(t, "t")->value)); });
}

void chm_transform_free(chm_transform* t) { delete t; }

chm_status chm_transform_apply(const chm_transform* t, const chm_matrix* m, chm_matrix** out) {
  return guarded(
      [&] { *need(out, "out") = wrap(chm::apply(need(t, "t")->value, need(m, "m")->value)); });
}

chm_status chm_dephase(const chm_matrix* m, chm_matrix** out, chm_transform** transform) {
  return guarded([&] {
    need(out, "out");
    chm::Dephased d = chm::dephase(need(m, "m")->value);
    if (transform) *transform = new chm_transform{std::move(d.transform)};
    *out = wrap(std::move(d.matrix));
  });
}

chm_status chm_find_equivalence(const chm_matrix* a, const chm_matrix* b, int* equivalent,
                                chm_transform** witness) {
  return guarded([&] {
    need(equivalent, "equivalent");
    auto t = chm::find_equivalence(need(a, "a")->value, need(b, "b")->value);
    *equivalent = t ? 1 : 0;
    if (t && witness) *witness = new chm_transform{std::move(*t)};
  });
}

chm_status chm_random_orbit(const chm_matrix* m, uint64_t seed, int roots, chm_matrix** out) {
  return guarded(
      [&] { *need(out, "out") = wrap(chm::random_orbit(need(m, "m")->value, seed, roots)); });
}

// ---- search -----------------------------------------------------------------

chm_status chm_sweep(int n, int q, const char* mode, int threads, chm_sweep_report** out) {
  return guarded([&] {
    need(out, "out");
    const chm::SweepMode sm = chm::parse_sweep_mode(need(mode, "mode"));
    *out = new chm_sweep_report{chm::grid_sweep(n, q, sm, threads)};
  });
}

void chm_sweep_report_free(chm_sweep_report* r) { delete r; }

size_t chm_sweep_observed(const chm_sweep_report* r, int* counts, size_t cap) {
  if (!r) return 0;
  std::size_t k = 0;
  for (int c : r->value.observed_counts) {
    if (counts && k < cap) counts[k] = c;
    ++k;
  }
  return k;
}

uint64_t chm_sweep_candidates(const chm_sweep_report* r) {
  return r ? r->value.candidates_examined : 0;
}

uint64_t chm_sweep_chms(const chm_sweep_report* r) { return r ? r->value.chms_found : 0; }

chm_status chm_sweep_witness(const chm_sweep_report* r, int count, chm_matrix** out) {
  return guarded([&] {
    const auto& w = need(r, "r")->value.witnesses;
    const auto it = w.find(count);
    if (it == w.end())
      throw chm::Error(chm::ErrorCode::NotFound,
                       "no witness for count " + std::to_string(count));
    *need(out, "out") = wrap(it->second);
  });
}

chm_status chm_sum3_oracle(int q, int* holds, uint64_t* examined, uint64_t* zero_sums) {
  return oracle(q, false, holds, examined, zero_sums);
}

chm_status chm_sum4_oracle(int q, int* holds, uint64_t* examined, uint64_t* zero_sums) {
  return oracle(q, true, holds, examined, zero_sums);
}

chm_status chm_classify_three_rows(int q, uint64_t* systems, chm_matrix*** reps, size_t* count) {
  return guarded([&] {
    need(reps, "reps");
    need(count, "count");
    const chm::ThreeRowClassification c = chm::classify_three_rows(q);
    if (systems) *systems = c.systems;
    const std::size_t k = c.representatives.size();
    auto** arr = static_cast<chm_matrix**>(std::calloc(k ? k : 1, sizeof(chm_matrix*)));
    if (!arr) throw std::bad_alloc();
    try {
      for (std::size_t j = 0; j < k; ++j) arr[j] = wrap(c.representatives[j]);
    } catch (...) {
      chm_matrix_array_free(arr, k);
      throw;
    }
    *reps = arr;
    *count = k;
  });
}

void chm_matrix_array_free(chm_matrix** arr, size_t count) {
  if (!arr) return;
  for (std::size_t j = 0; j < count; ++j) delete arr[j];
  std::free(arr);
}

chm_status chm_three_rows_known(const chm_matrix* prefix, int* index) {
  return guarded([&] {
    need(index, "index");
    const chm::UnitMatrix canon = chm::canonical_three_rows(need(prefix, "prefix")->value);
    *index = 0;
    for (int k = 1; k <= 4; ++k)
      if (chm::canonical_three_rows(chm::h6_prefix(k)) == canon) *index = k;
  });
}

size_t chm_predicate_count(void) { return chm::all_predicates().size(); }

const char* chm_predicate_name(size_t i) {
  const auto ids = chm::all_predicates();
  return i < ids.size() ? chm::to_string(ids[i]) : nullptr;
}

chm_status chm_predicate_applies(const chm_matrix* m, const char* id, int* applies) {
  return guarded([&] {
    *need(applies, "applies") =
        chm::predicate_applies(need(m, "m")->value, chm::parse_predicate(need(id, "id"))) ? 1 : 0;
  });
}

chm_status chm_predicate_check(const chm_matrix* m, const char* id, int* pass, char** detail) {
  return guarded([&] {
    need(pass, "pass");
    const chm::PredicateResult r =
        chm::predicate_check(need(m, "m")->value, chm::parse_predicate(need(id, "id")));
    *pass = r.pass ? 1 : 0;
    if (detail) *detail = r.pass ? nullptr : dup_string(describe(r));
  });
}

chm_status chm_predicate_suite(uint64_t samples, uint64_t seed, int threads, int* pass,
                               uint64_t* matrices, uint64_t* checks, char** detail,
                               chm_matrix** witness) {
  return guarded([&] {
    need(pass, "pass");
    const chm::PredicateSuiteReport r = chm::predicate_suite(samples, seed, threads);
    *pass = r.pass ? 1 : 0;
    if (matrices) *matrices = r.matrices;
    if (checks) *checks = r.checks;
    if (detail) *detail = r.violation ? dup_string(describe(*r.violation)) : nullptr;
    if (witness) *witness = r.witness ? wrap(*r.witness) : nullptr;
  });
}

chm_status chm_s6_audit(uint64_t samples, uint64_t seed, int threads, int* pass,
                        uint64_t* histogram, uint64_t* violating_sample,
                        chm_matrix** violation) {
  return guarded([&] {
    need(pass, "pass");
    const chm::AuditReport r = chm::s6_membership_audit(samples, seed, threads);
    *pass = r.pass ? 1 : 0;
    if (histogram) {
      std::fill(histogram, histogram + 37, uint64_t{0});
      for (const auto& [c, k] : r.histogram)
        if (c >= 0 && c <= 36) histogram[c] = k;
    }
    if (violating_sample) *violating_sample = r.violating_sample.value_or(UINT64_MAX);
    if (violation) *violation = r.violation ? wrap(*r.violation) : nullptr;
  });
}

// ---- MUB screening ----------------------------------------------------------

chm_status chm_screen(const chm_matrix* m, chm_verdict_kind* kind, int* real_count,
                      int* witness_rows, int* witness_cols) {
  return guarded([&] {
    const chm::ScreenVerdict v = chm::screen(need(m, "m")->value);
    *need(kind, "kind") = static_cast<chm_verdict_kind>(v.kind);
    if (real_count) *real_count = v.census.real_count;
    if (witness_rows) std::fill(witness_rows, witness_rows + 3, -1);
    if (witness_cols) std::fill(witness_cols, witness_cols + 2, -1);
    if (v.witness) {
      if (witness_rows) std::copy_n(v.witness->rows.begin(), 3, witness_rows);
      if (witness_cols) std::copy_n(v.witness->cols.begin(), 2, witness_cols);
    }
  });
}

const char* chm_verdict_tag(chm_verdict_kind kind) {
  return chm::verdict_tag(static_cast<chm::VerdictKind>(kind));
}

chm_status chm_unbiased_with_identity(const chm_matrix* m, int* unbiased) {
  return guarded([&] {
    const auto& v = need(m, "m")->value;
    const chm::Basis h = chm::Basis::from_hadamard(v);
    *need(unbiased, "unbiased") =
        chm::is_unbiased(chm::Basis::identity(v.order()), h) ? 1 : 0;
  });
}

}  // extern "C"
