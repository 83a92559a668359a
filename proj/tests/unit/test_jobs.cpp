#include <doctest.h>

#include "hopfgen/jobs.hpp"

#include <filesystem>
#include <fstream>

using namespace hopfgen;
namespace fs = std::filesystem;

namespace {

const fs::path kRoot = fs::path(HOPFGEN_SOURCE_DIR) / "data";

JobSpec job_for(const std::string& algebra, std::vector<std::string> checks) {
  JobSpec job;
  job.algebra = kRoot / "fixtures" / (algebra + ".json");
  job.checks = std::move(checks);
  return job;
}

Status status_of(const Report& r, const std::string& id) {
  for (const auto& c : r.checks)
    if (c.id == id) return c.verdict.status;
  FAIL("no check " << id);
  return Status::fail;
}

fs::path scratch_dir(const std::string& name) {
  fs::path dir = fs::temp_directory_path() / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("check identifiers are validated before anything runs") {
  auto h = catalog("z2");
  CHECK_THROWS_AS(resolve_checks({"coprod-sigma", "coprod-sgima"}, h), InputError);
  CHECK_THROWS_AS(resolve_checks({"membership:"}, h), InputError);
  CHECK_THROWS_AS(resolve_checks({"membership:T_q"}, h), InputError);
  CHECK_THROWS_AS(resolve_checks({}, h), InputError);
  auto all = resolve_checks({"all", "coideal", "membership:T_g*U_g"}, h);
  CHECK(all.size() == check_ids().size() + 1);
  CHECK(all.back() == "membership:T_g*U_g");

  auto job = job_for("z2", {"prop-nice", "nonsense"});
  CHECK_THROWS_AS(load_inputs(job), InputError);
}

TEST_CASE("inputs are checked for shape and meaning") {
  auto dir = scratch_dir("hopfgen-test-jobs-inputs");
  std::ofstream(dir / "bad-cocycle.json") << R"({"kind":"bilinear-form","values":[["2","1"],["1","1"]]})";
  std::ofstream(dir / "zero-lambda.json") << R"(["0","1"])";
  auto job = job_for("z2", {"cocycle-identity"});
  job.cocycle = dir / "bad-cocycle.json";
  CHECK_THROWS_AS(load_inputs(job), InputError);
  job.cocycle.reset();
  job.lambda = dir / "zero-lambda.json";
  CHECK_THROWS_AS(load_inputs(job), InputError);
}

TEST_CASE("job files resolve paths next to themselves") {
  auto job = load_job(kRoot / "jobs" / "klein4-sign.json");
  CHECK(job.algebra == (kRoot / "fixtures" / "klein4.json").lexically_normal());
  REQUIRE(job.cocycle);
  CHECK(fs::exists(*job.cocycle));

  auto dir = scratch_dir("hopfgen-test-jobs-files");
  std::ofstream(dir / "typo.json") << R"({"algebra":"x.json","checks":["coideal"],"bugdet":{}})";
  CHECK_THROWS_AS(load_job(dir / "typo.json"), InputError);
}

TEST_CASE("every committed job loads") {
  for (const auto& e : fs::directory_iterator(kRoot / "jobs")) {
    CAPTURE(e.path().string());
    auto job = load_job(e.path());
    CHECK_NOTHROW(load_inputs(job));
  }
}

TEST_CASE("reports are deterministic and carry verdicts") {
  auto job = job_for("sweedler", {"coprod-sigma", "antipode-sigma", "membership:T_x", "quotient-hab"});
  job.jobs = 3;
  auto inputs = load_inputs(job);
  auto a = run_job(job, inputs);
  auto b = run_job(job, inputs);
  CHECK(dump_pretty(a.to_json()) == dump_pretty(b.to_json()));
  CHECK(status_of(a, "coprod-sigma") == Status::pass);
  CHECK(status_of(a, "antipode-sigma") == Status::skipped);
  CHECK(a.exit_code() == 0);
  auto j = a.to_json();
  CHECK(j.at("schema") == 1);
  CHECK(j.at("summary").at("skipped") == 1);
  CHECK(j.at("checks").at(2).at("details").at("verdict") == "member");
  CHECK(j.at("checks").at(3).at("details").at("dimension") == 2);
  CHECK(a.to_text().find("summary: 3 pass") != std::string::npos);
  for (const auto& c : j.at("checks")) CHECK_FALSE(c.contains("seconds"));
}

TEST_CASE("warm cache does not change the report") {
  auto dir = scratch_dir("hopfgen-test-jobs-cache");
  GroebnerCache cache(dir);
  auto job = job_for("klein4", {"quotient-hab", "membership:T_b10*T_b01"});
  auto inputs = load_inputs(job);
  auto cold = dump_pretty(run_job(job, inputs, &cache).to_json());
  CHECK_FALSE(cache.entries().empty());
  auto before = cache.counters();
  auto warm = dump_pretty(run_job(job, inputs, &cache).to_json());
  CHECK(cold == warm);
  CHECK(cache.counters().hits > before.hits);
}

TEST_CASE("budget exhaustion is inconclusive, and fatal only under strict") {
  auto job = job_for("sweedler", {"membership:T_g^2"});
  job.budget.max_pairs = 3;
  auto inputs = load_inputs(job);
  auto r = run_job(job, inputs);
  CHECK(status_of(r, "membership:T_g^2") == Status::inconclusive);
  CHECK(r.exit_code() == 0);
  job.strict = true;
  CHECK(run_job(job, inputs).exit_code() == 1);
}

TEST_CASE("membership verdicts follow the grading") {
  auto job = job_for("z2", {"membership:T_g*U_g", "membership:T_g"});
  auto j = run_job(job, load_inputs(job)).to_json();
  CHECK(j.at("checks").at(0).at("details").at("verdict") == "member");
  CHECK(j.at("checks").at(1).at("details").at("verdict") == "non-member");
  CHECK(j.at("checks").at(1).at("details").at("hab_coinvariant") == false);
}

TEST_CASE("a failing check sets exit code 1 and records both sides") {
  auto dir = scratch_dir("hopfgen-test-jobs-fail");
  auto j = read_json_file(kRoot / "fixtures" / "corrupt-sweedler-antipode.json");
  write_text_atomic(dir / "h.json", j.dump());
  JobSpec job;
  job.algebra = dir / "h.json";
  job.checks = {"hopf-axioms"};
  auto r = run_job(job, load_inputs(job));
  CHECK(r.exit_code() == 1);
  auto c = r.to_json().at("checks").at(0);
  CHECK(c.at("status") == "fail");
  CHECK(c.at("witness").at(0) == "antipode-left");
  CHECK(c.contains("lhs"));
  CHECK(c.contains("rhs"));
}

TEST_CASE("specialize-lambda uses the given form") {
  auto job = load_job(kRoot / "jobs" / "z2-lambda.json");
  auto r = run_job(job, load_inputs(job));
  CHECK(status_of(r, "specialize-lambda") == Status::pass);
  auto beta = r.to_json().at("checks").at(0).at("details").at("beta").at("values");
  // λ(g) = 2: β(g,g) = λ(g)² / λ(g·g) = 4
  CHECK(beta.at(1).at(1) == "4");
}
