#include "hopfgen/gb_cache.hpp"
#include "hopfgen/io.hpp"
#include "hopfgen/jobs.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iomanip>
#include <iostream>

using namespace hopfgen;
namespace fs = std::filesystem;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInput = 2;

fs::path default_cache_dir() {
  fs::path fallback = ".hopfgen-cache";
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg)
    fallback = fs::path(xdg) / "hopfgen";
  else if (const char* home = std::getenv("HOME"); home && *home)
    fallback = fs::path(home) / ".cache" / "hopfgen";
  return GroebnerCache::default_dir(fallback);
}

int cmd_validate(const fs::path& path, bool as_json) {
  HopfAlgebra h = load_hopf(path);
  auto rep = validate_hopf(h);
  if (as_json) {
    json j{{"schema", 1}, {"path", path.generic_string()}, {"ok", rep.ok()}};
    json axioms = json::array();
    for (const auto& a : rep.axioms) {
      json e{{"axiom", a.axiom}, {"status", a.passed ? "pass" : "fail"}};
      if (!a.passed) {
        json at = json::array();
        for (auto i : a.witness) at.push_back(h.name(i));
        e["witness"] = at;
        e["lhs"] = a.lhs;
        e["rhs"] = a.rhs;
        if (!a.detail.empty()) e["note"] = a.detail;
      }
      axioms.push_back(e);
    }
    j["axioms"] = axioms;
    std::cout << dump_pretty(j);
  } else {
    std::cout << path.string() << " (dim " << h.dim() << ")\n" << rep.summary(h);
    if (const auto* f = rep.first_failure()) {
      std::cout << "FAIL: " << f->axiom;
      if (!f->witness.empty()) {
        std::cout << " at";
        for (auto i : f->witness) std::cout << " " << h.name(i);
      }
      std::cout << "\n";
    } else {
      std::cout << "pass\n";
    }
  }
  return rep.ok() ? kExitPass : kExitFail;
}

struct VerifyArgs {
  std::string job;
  std::string algebra, cocycle, lambda, checks, out, cache_dir;
  std::size_t budget = 0;
  unsigned degree_bound = 0;
  double timeout = 0;
  std::size_t jobs = 0;
  bool strict = false;
  bool no_cache = false;
  bool json_stdout = false;
};

int cmd_verify(const VerifyArgs& a) {
  JobSpec job;
  if (!a.job.empty()) job = load_job(a.job);
  if (!a.algebra.empty()) job.algebra = a.algebra;
  if (!a.cocycle.empty()) job.cocycle = fs::path(a.cocycle);
  if (!a.lambda.empty()) job.lambda = fs::path(a.lambda);
  if (!a.checks.empty()) {
    job.checks.clear();
    std::stringstream ss(a.checks);
    for (std::string id; std::getline(ss, id, ',');)
      if (!id.empty()) job.checks.push_back(id);
  }
  if (a.budget) job.budget.max_pairs = a.budget;
  if (a.degree_bound) job.budget.degree_bound = a.degree_bound;
  if (a.timeout > 0) job.budget.max_seconds = a.timeout;
  if (a.jobs) job.jobs = a.jobs;
  if (a.strict) job.strict = true;
  if (!a.out.empty()) job.out = fs::path(a.out);
  if (job.algebra.empty()) throw InputError("no algebra given (--algebra or a job file)");
  if (job.checks.empty()) throw InputError("no checks given (--checks or a job file)");

  // everything is read and validated before any computation starts
  JobInputs inputs = load_inputs(job);

  std::optional<GroebnerCache> cache;
  if (!a.no_cache) cache.emplace(a.cache_dir.empty() ? default_cache_dir() : fs::path(a.cache_dir));

  Report report = run_job(job, inputs, cache ? &*cache : nullptr);
  const std::string text = report.to_text();
  const std::string js = dump_pretty(report.to_json());
  if (job.out) {
    write_text_atomic(*job.out, js);
    fs::path txt = *job.out;
    txt.replace_extension(".txt");
    write_text_atomic(txt, text);
  }
  std::cout << (a.json_stdout ? js : text);
  return report.exit_code();
}

int cmd_cache(const std::string& action, const std::string& dir) {
  GroebnerCache cache(dir.empty() ? default_cache_dir() : fs::path(dir));
  if (action == "clear") {
    auto n = cache.entries().size();
    cache.clear();
    std::cout << "removed " << n << " entries from " << cache.dir().string() << "\n";
  } else if (action == "list") {
    for (const auto& e : cache.entries())
      std::cout << e.key << "  vars " << e.nvars << "  basis " << e.basis_size << "  max degree " << e.max_degree
                << "\n";
  } else {
    auto entries = cache.entries();
    auto c = cache.counters();
    const std::size_t lookups = c.hits + c.misses;
    std::cout << "directory  " << cache.dir().string() << "\n"
              << "entries    " << entries.size() << "\n"
              << "hits       " << c.hits << "\n"
              << "misses     " << c.misses << "\n"
              << "hit rate   ";
    if (lookups)
      std::cout << std::fixed << std::setprecision(1) << 100.0 * static_cast<double>(c.hits) / static_cast<double>(lookups)
                << "%\n";
    else
      std::cout << "n/a\n";
    for (const auto& e : entries) std::cout << "  " << e.key << "  basis " << e.basis_size << "\n";
  }
  return kExitPass;
}

int cmd_export(const std::string& name, const std::string& out) {
  json j;
  if (name == "klein4-sign" || name == "s3-sign") {
    const bool klein = name == "klein4-sign";
    auto h = catalog(klein ? "klein4" : "s3");
    auto form = form_to_json(klein ? klein_four_sign_cocycle(h) : s3_sign_cocycle(h));
    form["algebra"] = klein ? "klein4" : "s3";
    j = form;
  } else {
    auto names = catalog_names();
    if (std::find(names.begin(), names.end(), name) == names.end())
      throw InputError("unknown catalog entry '" + name + "'");
    j = hopf_to_json(catalog(name));
  }
  if (out.empty())
    std::cout << dump_pretty(j);
  else
    write_text_atomic(out, dump_pretty(j));
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hopf algebra cocycle and generic base algebra verifier"};
  app.require_subcommand(1);

  std::string validate_path;
  bool validate_json = false;
  auto* validate = app.add_subcommand("validate", "check the Hopf algebra axioms of a JSON file");
  validate->add_option("path", validate_path, "algebra JSON")->required();
  validate->add_flag("--json", validate_json, "print a JSON report");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "run verification checks");
  verify->add_option("--job", va.job, "job JSON file; flags override its fields");
  verify->add_option("--algebra", va.algebra, "algebra JSON");
  verify->add_option("--cocycle", va.cocycle, "two-cocycle JSON (default ε⊗ε)");
  verify->add_option("--lambda", va.lambda, "convolution-invertible linear form JSON");
  verify->add_option("--checks", va.checks, "comma-separated check ids, 'all', or membership:<poly>");
  verify->add_option("--budget", va.budget, "Gröbner pair budget");
  verify->add_option("--degree-bound", va.degree_bound, "skip S-pairs above this degree");
  verify->add_option("--timeout", va.timeout, "wall-clock seconds per check");
  verify->add_option("--jobs", va.jobs, "checks run concurrently");
  verify->add_flag("--strict", va.strict, "inconclusive checks fail the run");
  verify->add_option("--out", va.out, "write the JSON report here and the text report next to it");
  verify->add_option("--cache-dir", va.cache_dir, "Gröbner cache directory (default $HOPFGEN_CACHE)");
  verify->add_flag("--no-cache", va.no_cache, "do not read or write the Gröbner cache");
  verify->add_flag("--json", va.json_stdout, "print the JSON report instead of the text report");

  std::string cache_action, cache_dir;
  auto* cache = app.add_subcommand("cache", "manage the Gröbner cache");
  cache->add_option("action", cache_action, "list, clear or stats")
      ->required()
      ->check(CLI::IsMember({"list", "clear", "stats"}));
  cache->add_option("--cache-dir", cache_dir, "cache directory (default $HOPFGEN_CACHE)");

  std::string export_name, export_out;
  auto* exp = app.add_subcommand("export", "write a builtin algebra or fixture cocycle as JSON");
  exp->add_option("name", export_name, "z2, z3, klein4, s3, dual_z2, dual_s3, sweedler, klein4-sign, s3-sign")
      ->required();
  exp->add_option("--out", export_out, "output path (default stdout)");

  auto* list = app.add_subcommand("checks", "list check identifiers");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitPass : kExitInput;
  }

  try {
    if (*validate) return cmd_validate(validate_path, validate_json);
    if (*verify) return cmd_verify(va);
    if (*cache) return cmd_cache(cache_action, cache_dir);
    if (*exp) return cmd_export(export_name, export_out);
    if (*list) {
      for (const auto& id : check_ids()) std::cout << id << "\n";
      std::cout << "membership:<poly>\n";
      return kExitPass;
    }
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const StructureError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
