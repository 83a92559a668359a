#pragma once

#include "hopfgen/io.hpp"

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace hopfgen {

// Check identifiers in canonical order. "membership:<poly>" is the one
// parametrized form; "all" expands to every unparametrized identifier.
const std::vector<std::string>& check_ids();

struct JobSpec {
  std::filesystem::path algebra;
  std::optional<std::filesystem::path> cocycle;  // α; ε⊗ε when absent
  std::optional<std::filesystem::path> lambda;   // used by specialize-lambda and specialize-extension
  std::vector<std::string> checks;
  GroebnerBudget budget;  // max_seconds is per check, honoured where a computation takes a budget
  std::size_t jobs = 1;
  bool strict = false;
  std::optional<std::filesystem::path> out;
  std::optional<std::filesystem::path> cache_dir;
};

// {"algebra", "cocycle"?, "lambda"?, "checks": [...], "budget": {"pairs"?, "degree_bound"?, "seconds"?},
//  "jobs"?, "strict"?, "out"?}. Relative paths resolve against the job file's directory.
JobSpec load_job(const std::filesystem::path& path);

struct JobInputs {
  std::shared_ptr<const HopfAlgebra> algebra;
  std::optional<BilinearForm> cocycle;
  std::optional<LinearForm> lambda;
  json provenance;  // path and content hash per input file
};

// Reads and validates every input, then the check list. Throws InputError on
// unreadable or malformed files, a cocycle that fails the cocycle identity or
// has no convolution inverse, a non-invertible λ, or a bad check identifier.
JobInputs load_inputs(const JobSpec& job);

// Expands "all", removes duplicates keeping first occurrence, and rejects
// unknown identifiers or membership polynomials that do not parse.
std::vector<std::string> resolve_checks(const std::vector<std::string>& checks, const HopfAlgebra& h);

struct CheckResult {
  std::string id;
  Verdict verdict;
  json details = json::object();
  double seconds = 0;
};

struct Report {
  json inputs;
  json budget;
  json ring;  // presented ring statistics, null when no check needed it
  std::vector<CheckResult> checks;
  bool strict = false;

  // 1 on any failure (or inconclusive under strict), else 0.
  int exit_code() const;
  // Byte-stable for fixed inputs and budgets: no timings, no cache state.
  json to_json() const;
  std::string to_text() const;
};

Report run_job(const JobSpec& job, const JobInputs& inputs, GroebnerCache* cache = nullptr);

}  // namespace hopfgen
