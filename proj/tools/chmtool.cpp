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

// chmtool: command-line front end over the chm C API.

#include <chm/chm.h>

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct MatrixDeleter {
  void operator()(chm_matrix* m) const { chm_matrix_free(m); }
};
struct TransformDeleter {
  void operator()(chm_transform* t) const { chm_transform_free(t); }
};
struct SweepDeleter {
  void operator()(chm_sweep_report* r) const { chm_sweep_report_free(r); }
};
struct StringDeleter {
  void operator()(char* s) const { chm_string_free(s); }
};
using Matrix = std::unique_ptr<chm_matrix, MatrixDeleter>;
using Transform = std::unique_ptr<chm_transform, TransformDeleter>;
using Sweep = std::unique_ptr<chm_sweep_report, SweepDeleter>;
using CString = std::unique_ptr<char, StringDeleter>;

// Failure raised from a C API status; carries the CLI exit code.
struct Failure {
  chm_status status;
  std::string message;
};

int exit_code_for(chm_status s) {
  switch (s) {
    case CHM_OK: return kExitOk;
    case CHM_ERR_PARSE:
    case CHM_ERR_INVALID_ARGUMENT:
    case CHM_ERR_INFEASIBLE_SWEEP:
    case CHM_ERR_DIMENSION_MISMATCH:
    case CHM_ERR_IO:
    case CHM_ERR_NULL_ARGUMENT: return kExitUsage;
    default: return kExitFailure;
  }
}

void check(chm_status s) {
  if (s != CHM_OK) throw Failure{s, chm_last_error()};
}

std::string take(char* s) {
  CString owned(s);
  return owned ? std::string(owned.get()) : std::string();
}

Matrix load(const std::string& path) {
  chm_matrix* m = nullptr;
  check(chm_matrix_read_file(path.c_str(), &m));
  return Matrix(m);
}

std::string text_of(const chm_matrix* m) {
  char* s = nullptr;
  check(chm_matrix_format(m, &s));
  return take(s);
}

std::string text_of(const chm_transform* t) {
  char* s = nullptr;
  check(chm_transform_format(t, &s));
  return take(s);
}

std::string join(const std::vector<int>& v, const char* sep = ",") {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) out += (k ? sep : "") + std::to_string(v[k]);
  return out;
}

int default_threads() {
  if (const char* env = std::getenv("HC_THREADS")) {
    try {
      const int t = std::stoi(env);
      if (t >= 1) return t;
    } catch (const std::exception&) {
    }
  }
  return 1;
}

struct Output {
  bool json_mode = false;
  json doc = json::object();
  std::ostringstream text;

  void emit() const {
    if (json_mode)
      std::cout << doc.dump(2) << '\n';
    else
      std::cout << text.str();
  }
};

void write_or_print(const chm_matrix* m, const std::string& out_path, Output& out) {
  if (!out_path.empty()) {
    check(chm_matrix_write_file(m, out_path.c_str()));
    out.doc["out"] = out_path;
    out.text << "wrote " << out_path << '\n';
  } else {
    out.text << text_of(m);
  }
  out.doc["matrix"] = text_of(m);
}

struct CensusFields {
  int real_count = 0;
  bool approximate = false;
  std::vector<int> imaginary_array, per_row, per_col;
};

CensusFields census_of(const chm_matrix* m) {
  CensusFields c;
  c.imaginary_array.resize(static_cast<std::size_t>(chm_matrix_rows(m)));
  c.per_row.resize(c.imaginary_array.size());
  c.per_col.resize(static_cast<std::size_t>(chm_matrix_cols(m)));
  int approx = 0;
  check(chm_census(m, &c.real_count, &approx, c.imaginary_array.data(), c.per_row.data(),
                   c.per_col.data()));
  c.approximate = approx != 0;
  return c;
}

// ---- commands ---------------------------------------------------------------

struct ConstructArgs {
  int n = 0;
  int count = -1;
  std::string named;
  std::string out;
};

int run_construct(const ConstructArgs& a, Output& out) {
  chm_matrix* raw = nullptr;
  if (!a.named.empty()) {
    check(chm_matrix_named(a.named.c_str(), &raw));
  } else {
    if (a.n == 0 || a.count < 0)
      throw Failure{CHM_ERR_INVALID_ARGUMENT, "construct needs --n and --count, or --named"};
    check(chm_construct(a.n, a.count, &raw));
  }
  Matrix m(raw);
  const CensusFields c = census_of(m.get());
  out.doc["n"] = chm_matrix_rows(m.get());
  out.doc["count"] = c.real_count;
  if (!a.out.empty()) out.text << "n=" << chm_matrix_rows(m.get()) << " count=" << c.real_count << '\n';
  write_or_print(m.get(), a.out, out);
  return kExitOk;
}

struct VerifyArgs {
  std::string file;
  std::string mode = "auto";
  double tol = 1e-9;
};

int run_verify(const VerifyArgs& a, Output& out) {
  Matrix m = load(a.file);
  chm_verify_mode mode = CHM_VERIFY_AUTO;
  if (a.mode == "exact") mode = CHM_VERIFY_EXACT;
  else if (a.mode == "numeric") mode = CHM_VERIFY_NUMERIC;
  int ok = 0;
  check(chm_verify(m.get(), mode, a.tol, &ok));
  out.doc["file"] = a.file;
  out.doc["mode"] = a.mode;
  out.doc["chm"] = ok != 0;
  out.text << "chm=" << (ok ? "true" : "false") << " mode=" << a.mode << '\n';
  return ok ? kExitOk : kExitFailure;
}

int run_census(const std::string& file, Output& out) {
  Matrix m = load(file);
  const CensusFields c = census_of(m.get());
  out.doc["file"] = file;
  out.doc["real_count"] = c.real_count;
  out.doc["imaginary_array"] = c.imaginary_array;
  out.doc["per_row"] = c.per_row;
  out.doc["per_column"] = c.per_col;
  out.doc["approximate"] = c.approximate;
  out.text << "real_count=" << c.real_count << '\n'
           << "imaginary_array=[" << join(c.imaginary_array) << "]\n"
           << "per_row=[" << join(c.per_row) << "]\n"
           << "per_column=[" << join(c.per_col) << "]\n"
           << "approximate=" << (c.approximate ? "true" : "false") << '\n';
  return kExitOk;
}

int run_transform(const std::string& file, const std::string& tfile, const std::string& out_path,
                  Output& out) {
  Matrix m = load(file);
  chm_transform* raw_t = nullptr;
  check(chm_transform_read_file(tfile.c_str(), &raw_t));
  Transform t(raw_t);
  chm_matrix* raw = nullptr;
  check(chm_transform_apply(t.get(), m.get(), &raw));
  Matrix result(raw);
  write_or_print(result.get(), out_path, out);
  return kExitOk;
}

int run_dephase(const std::string& file, const std::string& out_path,
                const std::string& transform_out, Output& out) {
  Matrix m = load(file);
  chm_matrix* raw = nullptr;
  chm_transform* raw_t = nullptr;
  check(chm_dephase(m.get(), &raw, &raw_t));
  Matrix result(raw);
  Transform t(raw_t);
  const std::string ttext = text_of(t.get());
  if (!transform_out.empty()) {
    std::ofstream f(transform_out);
    f << ttext;
    if (!f) throw Failure{CHM_ERR_IO, "cannot write " + transform_out};
  }
  write_or_print(result.get(), out_path, out);
  out.doc["transform"] = ttext;
  if (transform_out.empty()) out.text << "# transform\n" << ttext;
  return kExitOk;
}

int run_equivalent(const std::string& fa, const std::string& fb, Output& out) {
  Matrix a = load(fa);
  Matrix b = load(fb);
  int eq = 0;
  chm_transform* raw_t = nullptr;
  check(chm_find_equivalence(a.get(), b.get(), &eq, &raw_t));
  Transform t(raw_t);
  out.doc["equivalent"] = eq != 0;
  out.text << "equivalent=" << (eq ? "true" : "false") << '\n';
  if (eq) {
    const std::string ttext = text_of(t.get());
    out.doc["transform"] = ttext;
    out.text << ttext;
  }
  return eq ? kExitOk : kExitFailure;
}

struct SweepArgs {
  int n = 0;
  int q = 0;
  std::string mode;
  std::string emit_witnesses;
  int threads = 1;
};

int run_sweep(const SweepArgs& a, Output& out) {
  std::string mode = a.mode;
  if (mode.empty()) mode = a.n == 3 ? "parameterized" : a.n == 4 ? "full-pruned" : "full";
  chm_sweep_report* raw = nullptr;
  check(chm_sweep(a.n, a.q, mode.c_str(), a.threads, &raw));
  Sweep r(raw);
  std::vector<int> counts(chm_sweep_observed(r.get(), nullptr, 0));
  chm_sweep_observed(r.get(), counts.data(), counts.size());

  out.doc["n"] = a.n;
  out.doc["q"] = a.q;
  out.doc["mode"] = mode;
  out.doc["observed"] = counts;
  out.doc["candidates_examined"] = chm_sweep_candidates(r.get());
  out.doc["chms_found"] = chm_sweep_chms(r.get());
  out.text << "sweep n=" << a.n << " q=" << a.q << " mode=" << mode << '\n'
           << "observed = {" << join(counts) << "}\n"
           << "candidates_examined=" << chm_sweep_candidates(r.get())
           << " chms_found=" << chm_sweep_chms(r.get()) << '\n';

  if (!a.emit_witnesses.empty()) std::filesystem::create_directories(a.emit_witnesses);
  json witnesses = json::array();
  for (int c : counts) {
    std::string path = "-";
    if (!a.emit_witnesses.empty()) {
      chm_matrix* w = nullptr;
      check(chm_sweep_witness(r.get(), c, &w));
      Matrix owned(w);
      path = (std::filesystem::path(a.emit_witnesses) /
              ("sweep_n" + std::to_string(a.n) + "_q" + std::to_string(a.q) + "_count" +
               std::to_string(c) + ".txt"))
                 .string();
      check(chm_matrix_write_file(owned.get(), path.c_str()));
    }
    witnesses.push_back({{"count", c}, {"witness", path}});
    out.text << "count=" << c << " witness=" << path << '\n';
  }
  out.doc["witnesses"] = witnesses;
  return kExitOk;
}

struct SuiteArgs {
  std::string suite = "all";
  std::optional<int> q;
  std::optional<std::uint64_t> samples;
  std::optional<std::uint64_t> seed;
  std::string file;
  int threads = 1;
};

bool suite_oracle(bool four, int q, json& doc, std::ostream& text) {
  int holds = 0;
  std::uint64_t examined = 0, zeros = 0;
  check(four ? chm_sum4_oracle(q, &holds, &examined, &zeros)
             : chm_sum3_oracle(q, &holds, &examined, &zeros));
  const char* name = four ? "sum4" : "sum3";
  doc[name] = {{"q", q}, {"pass", holds != 0}, {"examined", examined}, {"zero_sums", zeros}};
  text << "suite=" << name << " q=" << q << " result=" << (holds ? "pass" : "fail")
       << " examined=" << examined << " zero_sums=" << zeros << '\n';
  return holds != 0;
}

bool suite_three_rows(int q, json& doc, std::ostream& text) {
  std::uint64_t systems = 0;
  chm_matrix** reps = nullptr;
  std::size_t count = 0;
  check(chm_classify_three_rows(q, &systems, &reps, &count));
  std::vector<int> known;
  json classes = json::array();
  for (std::size_t k = 0; k < count; ++k) {
    int idx = 0;
    const chm_status s = chm_three_rows_known(reps[k], &idx);
    if (s == CHM_OK) {
      known.push_back(idx);
      classes.push_back({{"known", idx}, {"matrix", text_of(reps[k])}});
    }
  }
  chm_matrix_array_free(reps, count);
  bool all_four = count == 4;
  for (int k = 1; k <= 4; ++k)
    all_four = all_four && std::find(known.begin(), known.end(), k) != known.end();
  doc["three_rows"] = {{"q", q},         {"pass", all_four}, {"systems", systems},
                       {"classes", count}, {"representatives", classes}};
  text << "suite=three-rows q=" << q << " result=" << (all_four ? "pass" : "fail")
       << " systems=" << systems << " classes=" << count << " known=[" << join(known) << "]\n";
  return all_four;
}

bool suite_predicates(const SuiteArgs& a, std::uint64_t samples, json& doc, std::ostream& text) {
  if (!a.file.empty()) {
    Matrix m = load(a.file);
    bool all = true;
    json results = json::array();
    for (std::size_t k = 0; k < chm_predicate_count(); ++k) {
      const char* id = chm_predicate_name(k);
      int applies = 0;
      check(chm_predicate_applies(m.get(), id, &applies));
      if (!applies) continue;
      int pass = 0;
      char* detail = nullptr;
      check(chm_predicate_check(m.get(), id, &pass, &detail));
      const std::string d = take(detail);
      all = all && pass;
      results.push_back({{"id", id}, {"pass", pass != 0}, {"detail", d}});
      text << "predicate=" << id << " result=" << (pass ? "pass" : "violation");
      if (!d.empty()) text << " detail=\"" << d << '"';
      text << '\n';
    }
    doc["predicates"] = {{"file", a.file}, {"pass", all}, {"results", results}};
    return all;
  }
  int pass = 0;
  std::uint64_t matrices = 0, checks = 0;
  char* detail = nullptr;
  chm_matrix* witness = nullptr;
  check(chm_predicate_suite(samples, *a.seed, a.threads, &pass, &matrices, &checks, &detail,
                            &witness));
  Matrix w(witness);
  const std::string d = take(detail);
  doc["predicates"] = {{"samples", samples}, {"seed", *a.seed}, {"pass", pass != 0},
                       {"matrices", matrices}, {"checks", checks}, {"violation", d}};
  text << "suite=predicates samples=" << samples << " seed=" << *a.seed
       << " result=" << (pass ? "pass" : "fail") << " matrices=" << matrices
       << " checks=" << checks << '\n';
  if (!pass) text << "violation: " << d << '\n' << text_of(w.get());
  return pass != 0;
}

bool suite_audit(const SuiteArgs& a, std::uint64_t samples, json& doc, std::ostream& text) {
  int pass = 0;
  std::vector<std::uint64_t> histogram(37);
  std::uint64_t bad = 0;
  chm_matrix* violation = nullptr;
  check(chm_s6_audit(samples, *a.seed, a.threads, &pass, histogram.data(), &bad, &violation));
  Matrix v(violation);
  json hist = json::object();
  std::ostringstream hist_text;
  for (std::size_t c = 0; c < histogram.size(); ++c)
    if (histogram[c]) {
      hist[std::to_string(c)] = histogram[c];
      hist_text << (hist_text.tellp() > 0 ? "," : "") << c << ':' << histogram[c];
    }
  doc["audit"] = {{"samples", samples}, {"seed", *a.seed}, {"pass", pass != 0},
                  {"histogram", hist}};
  text << "suite=audit samples=" << samples << " seed=" << *a.seed
       << " result=" << (pass ? "pass" : "fail") << " histogram={" << hist_text.str() << "}\n";
  if (!pass) text << "violating_sample=" << bad << '\n' << text_of(v.get());
  return pass != 0;
}

int run_suites(const SuiteArgs& a, Output& out) {
  const std::string& s = a.suite;
  const bool all = s == "all";
  if (!all && s != "sum3" && s != "sum4" && s != "three-rows" && s != "predicates" && s != "audit")
    throw Failure{CHM_ERR_INVALID_ARGUMENT, "unknown suite '" + s + "'"};
  if (!a.file.empty()) {
    if (!all && s != "predicates")
      throw Failure{CHM_ERR_INVALID_ARGUMENT, "--file only combines with the predicates suite"};
    const bool ok = suite_predicates(a, 0, out.doc, out.text);
    out.doc["pass"] = ok;
    return ok ? kExitOk : kExitFailure;
  }
  const bool randomized = all || s == "audit" || (s == "predicates" && a.file.empty());
  if (randomized && !a.seed)
    throw Failure{CHM_ERR_INVALID_ARGUMENT, "suite '" + s + "' is randomized and needs --seed"};
  if (all && a.q)
    throw Failure{CHM_ERR_INVALID_ARGUMENT, "--q applies to a single suite"};

  bool ok = true;
  if (all || s == "sum3") ok &= suite_oracle(false, a.q.value_or(360), out.doc, out.text);
  if (all || s == "sum4") ok &= suite_oracle(true, a.q.value_or(240), out.doc, out.text);
  if (all || s == "three-rows") ok &= suite_three_rows(a.q.value_or(12), out.doc, out.text);
  if (all || s == "predicates") ok &= suite_predicates(a, a.samples.value_or(10000), out.doc, out.text);
  if (all || s == "audit") ok &= suite_audit(a, a.samples.value_or(100000), out.doc, out.text);
  out.doc["pass"] = ok;
  return ok ? kExitOk : kExitFailure;
}

struct ScreenRow {
  chm_status status = CHM_OK;
  std::string error;
  chm_verdict_kind kind = CHM_NOT_EXCLUDED;
  int count = 0;
  int rows[3] = {-1, -1, -1};
  int cols[2] = {-1, -1};
};

ScreenRow screen_file(const std::string& file) {
  ScreenRow row;
  chm_matrix* raw = nullptr;
  row.status = chm_matrix_read_file(file.c_str(), &raw);
  Matrix m(raw);
  if (row.status == CHM_OK) row.status = chm_screen(m.get(), &row.kind, &row.count, row.rows, row.cols);
  if (row.status != CHM_OK) row.error = chm_last_error();
  return row;
}

int run_screen(const std::vector<std::string>& files, int threads, Output& out) {
  std::vector<ScreenRow> rows(files.size());
  const std::size_t t = std::max<std::size_t>(1, std::min<std::size_t>(threads, files.size()));
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < t; ++w)
    pool.emplace_back([&, w] {
      for (std::size_t k = w; k < files.size(); k += t) rows[k] = screen_file(files[k]);
    });
  for (auto& th : pool) th.join();

  int code = kExitOk;
  json results = json::array();
  for (std::size_t k = 0; k < files.size(); ++k) {
    const ScreenRow& r = rows[k];
    if (r.status != CHM_OK) {
      code = std::max(code, exit_code_for(r.status));
      results.push_back({{"file", files[k]}, {"error", chm_status_name(r.status)},
                         {"message", r.error}});
      out.text << files[k] << ": error=" << chm_status_name(r.status) << " " << r.error << '\n';
      continue;
    }
    json j = {{"file", files[k]}, {"verdict", chm_verdict_tag(r.kind)}, {"count", r.count}};
    out.text << files[k] << ": verdict=" << chm_verdict_tag(r.kind) << " count=" << r.count;
    if (r.kind == CHM_EXCLUDED_BY_REAL_SUBMATRIX) {
      const std::vector<int> wr(r.rows, r.rows + 3), wc(r.cols, r.cols + 2);
      j["witness_rows"] = wr;
      j["witness_cols"] = wc;
      out.text << " witness_rows=" << join(wr) << " witness_cols=" << join(wc);
    }
    out.text << '\n';
    results.push_back(j);
  }
  out.doc["results"] = results;
  return code;
}

int run_recipes(bool regen, bool check_only, const std::string& out_path, Output& out) {
  char* raw = nullptr;
  check(regen || check_only ? chm_recipes_regenerate(&raw) : chm_recipes_shipped(&raw));
  const std::string text = take(raw);
  if (check_only) {
    char* shipped_raw = nullptr;
    check(chm_recipes_shipped(&shipped_raw));
    const bool same = take(shipped_raw) == text;
    out.doc["matches_shipped"] = same;
    out.text << "matches_shipped=" << (same ? "true" : "false") << '\n';
    return same ? kExitOk : kExitFailure;
  }
  out.doc["recipes"] = text;
  if (!out_path.empty()) {
    std::ofstream f(out_path, std::ios::binary);
    f << text;
    if (!f) throw Failure{CHM_ERR_IO, "cannot write " + out_path};
    out.doc["out"] = out_path;
    out.text << "wrote " << out_path << '\n';
  } else {
    out.text << text;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact complex Hadamard matrix toolkit"};
  app.require_subcommand(1);
  bool json_mode = false;
  app.add_flag("--json", json_mode, "Machine-readable output");
  const int env_threads = default_threads();

  ConstructArgs construct;
  auto* c_construct = app.add_subcommand("construct", "Build a CHM with a given real-entry count");
  c_construct->add_option("--n", construct.n, "Order (2, 3, 4 or 6)");
  c_construct->add_option("--count", construct.count, "Number of real entries");
  c_construct->add_option("--named", construct.named, "Named matrix instead (g6, m4, fourier6, ...)");
  c_construct->add_option("--out", construct.out, "Output file (default: stdout)");

  VerifyArgs verify;
  auto* c_verify = app.add_subcommand("verify", "Check the complex Hadamard property");
  c_verify->add_option("file", verify.file)->required();
  c_verify->add_option("--mode", verify.mode)->check(CLI::IsMember({"auto", "exact", "numeric"}));
  c_verify->add_option("--tol", verify.tol, "Numeric tolerance");

  std::string census_file;
  auto* c_census = app.add_subcommand("census", "Count real entries");
  c_census->add_option("file", census_file)->required();

  std::string tr_file, tr_transform, tr_out;
  auto* c_transform = app.add_subcommand("transform", "Apply a monomial transform");
  c_transform->add_option("file", tr_file)->required();
  c_transform->add_option("--transform", tr_transform, "Transform file")->required();
  c_transform->add_option("--out", tr_out);

  std::string de_file, de_out, de_transform_out;
  auto* c_dephase = app.add_subcommand("dephase", "Normalize first row and column to ones");
  c_dephase->add_option("file", de_file)->required();
  c_dephase->add_option("--out", de_out);
  c_dephase->add_option("--transform-out", de_transform_out);

  std::string eq_a, eq_b;
  auto* c_equiv = app.add_subcommand("equivalent", "Search for a permutation equivalence");
  c_equiv->add_option("file_a", eq_a)->required();
  c_equiv->add_option("file_b", eq_b)->required();

  SweepArgs sweep;
  sweep.threads = env_threads;
  auto* c_sweep = app.add_subcommand("sweep", "Enumerate CHMs over a root-of-unity grid");
  c_sweep->add_option("--n", sweep.n)->required();
  c_sweep->add_option("--q", sweep.q)->required();
  c_sweep->add_option("--mode", sweep.mode)
      ->check(CLI::IsMember({"full", "full-pruned", "parameterized"}));
  c_sweep->add_option("--emit-witnesses", sweep.emit_witnesses, "Directory for witness files");
  c_sweep->add_option("--threads", sweep.threads)->check(CLI::PositiveNumber);

  SuiteArgs lemmas;
  lemmas.threads = env_threads;
  auto* c_lemmas = app.add_subcommand("lemmas", "Run oracle and property suites");
  c_lemmas->add_option("--suite", lemmas.suite)
      ->check(CLI::IsMember({"sum3", "sum4", "three-rows", "predicates", "audit", "all"}));
  c_lemmas->add_option("--q", lemmas.q);
  c_lemmas->add_option("--samples", lemmas.samples);
  c_lemmas->add_option("--seed", lemmas.seed);
  c_lemmas->add_option("--file", lemmas.file, "Check one matrix against every predicate");
  c_lemmas->add_option("--threads", lemmas.threads)->check(CLI::PositiveNumber);

  std::vector<std::string> screen_files;
  int screen_threads = env_threads;
  auto* c_screen = app.add_subcommand("screen", "MUB-trio exclusion screen for 6x6 CHMs");
  c_screen->add_option("files", screen_files)->required();
  c_screen->add_option("--threads", screen_threads)->check(CLI::PositiveNumber);

  bool regen = false, recipes_check = false;
  std::string recipes_out;
  auto* c_recipes = app.add_subcommand("recipes", "Show or regenerate the count recipes");
  c_recipes->add_flag("--regen", regen, "Recompute instead of printing the shipped table");
  c_recipes->add_flag("--check", recipes_check, "Exit 1 unless recomputation matches");
  c_recipes->add_option("--out", recipes_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  Output out;
  out.json_mode = json_mode;
  int code = kExitOk;
  try {
    if (*c_construct) code = run_construct(construct, out);
    else if (*c_verify) code = run_verify(verify, out);
    else if (*c_census) code = run_census(census_file, out);
    else if (*c_transform) code = run_transform(tr_file, tr_transform, tr_out, out);
    else if (*c_dephase) code = run_dephase(de_file, de_out, de_transform_out, out);
    else if (*c_equiv) code = run_equivalent(eq_a, eq_b, out);
    else if (*c_sweep) code = run_sweep(sweep, out);
    else if (*c_lemmas) code = run_suites(lemmas, out);
    else if (*c_screen) code = run_screen(screen_files, screen_threads, out);
    else if (*c_recipes) code = run_recipes(regen, recipes_check, recipes_out, out);
  } catch (const Failure& f) {
    if (json_mode) {
      std::cout << json{{"error", chm_status_name(f.status)}, {"message", f.message}}.dump(2)
                << '\n';
    } else {
      std::cerr << "error: " << chm_status_name(f.status) << ": " << f.message << '\n';
    }
    return exit_code_for(f.status);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  out.emit();
  return code;
}
