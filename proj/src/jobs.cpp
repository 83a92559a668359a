#include "hopfgen/jobs.hpp"

#include "hopfgen/base_algebra.hpp"
#include "hopfgen/galois_ext.hpp"
#include "hopfgen/pq.hpp"
#include "hopfgen/presented_ring.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iomanip>
#include <limits>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <thread>

namespace hopfgen {

namespace fs = std::filesystem;

namespace {

enum Need : unsigned { kRing = 1, kSigma = 2, kSpec = 4 };

struct Context {
  std::shared_ptr<const HopfAlgebra> h;
  BilinearForm alpha;
  bool trivial_alpha = true;
  std::optional<LinearForm> lambda;
  GroebnerBudget budget;
  GroebnerCache* cache = nullptr;
  PresentedRingPtr ring;
  std::shared_ptr<const GenericCocycle> gc;
  std::optional<SubalgebraSpec> spec;
};

using CheckFn = std::function<void(const Context&, const std::string& arg, CheckResult&)>;

struct CheckDef {
  const char* id;
  unsigned needs;
  CheckFn run;
};

std::string hex64(std::uint64_t v) {
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << v;
  return os.str();
}

std::string fnv1a_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::uint64_t h = 1469598103934665603ULL;
  char c;
  while (in.get(c)) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ULL;
  }
  return hex64(h);
}

std::optional<CayleyTable> group_of(const HopfAlgebra& h) {
  const std::size_t n = h.dim();
  CayleyTable g;
  g.names = h.basis();
  g.table.assign(n, std::vector<std::size_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    const auto& c = h.comult(i);
    if (c.size() != 1 || c[0].left != i || c[0].right != i || c[0].coef != 1) return std::nullopt;
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const auto& m = h.mult(a, b);
      if (m.size() != 1 || m[0].coef != 1) return std::nullopt;
      g.table[a][b] = m[0].index;
    }
  try {
    check_group(g);
  } catch (const StructureError&) {
    return std::nullopt;
  }
  return g;
}

Scalar numeric_det(std::vector<std::vector<Scalar>> m) {
  const std::size_t n = m.size();
  Scalar det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m[r][c] == 0) continue;
      Scalar f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return det;
}

void from_verdict(CheckResult& r, Verdict v) {
  r.verdict = std::move(v);
}

std::string pair_name(const HopfAlgebra& h, std::size_t i, std::size_t j) { return h.name(i) + "," + h.name(j); }

// Remaining seconds of a per-check budget.
GroebnerBudget remaining(const GroebnerBudget& b, std::chrono::steady_clock::time_point start) {
  GroebnerBudget out = b;
  if (std::isfinite(b.max_seconds)) {
    double used = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out.max_seconds = std::max(0.0, b.max_seconds - used);
  }
  return out;
}

const std::vector<CheckDef>& registry() {
  static const std::vector<CheckDef> defs = {
      {"hopf-axioms", 0,
       [](const Context& c, const std::string&, CheckResult& r) {
         auto rep = validate_hopf(*c.h);
         Verdict v;
         v.cases = rep.axioms.size();
         json axioms = json::object();
         for (const auto& a : rep.axioms) {
           axioms[a.axiom] = a.passed ? "pass" : "fail";
           if (!a.passed && !v.failed()) {
             std::vector<std::string> at{a.axiom};
             for (auto i : a.witness) at.push_back(c.h->name(i));
             v.fail(std::move(at), a.lhs, a.rhs);
             v.note = a.detail;
           }
         }
         r.details["axioms"] = axioms;
         from_verdict(r, v);
       }},
      {"cocycle-identity", kRing | kSigma,
       [](const Context& c, const std::string&, CheckResult& r) { from_verdict(r, verify_cocycle_identity(*c.gc)); }},
      {"specialize-eps", kRing | kSigma,
       [](const Context& c, const std::string&, CheckResult& r) {
         const auto& h = *c.h;
         auto eps = counit_form(h);
         auto beta = specialize(*c.gc, eps);
         auto beta_inv = specialize_inverse(*c.gc, eps);
         Verdict v;
         for (std::size_t i = 0; i < h.dim() && !v.failed(); ++i)
           for (std::size_t j = 0; j < h.dim() && !v.failed(); ++j) {
             ++v.cases;
             if (beta.at(i, j) != c.alpha.at(i, j))
               v.fail({"sigma", pair_name(h, i, j)}, to_string(beta.at(i, j)), to_string(c.alpha.at(i, j)));
             else if (beta_inv.at(i, j) != c.gc->alpha_inv.at(i, j))
               v.fail({"sigma^-1", pair_name(h, i, j)}, to_string(beta_inv.at(i, j)),
                      to_string(c.gc->alpha_inv.at(i, j)));
           }
         from_verdict(r, v);
       }},
      {"specialize-lambda", kRing | kSigma,
       [](const Context& c, const std::string&, CheckResult& r) {
         if (!c.lambda) {
           from_verdict(r, Verdict::skipped("", "no λ given"));
           return;
         }
         const auto& h = *c.h;
         auto beta = specialize(*c.gc, *c.lambda);
         auto expected = cohomologous_transform(h, c.alpha, *c.lambda);
         Verdict v;
         for (std::size_t i = 0; i < h.dim() && !v.failed(); ++i)
           for (std::size_t j = 0; j < h.dim() && !v.failed(); ++j) {
             ++v.cases;
             if (beta.at(i, j) != expected.at(i, j))
               v.fail({pair_name(h, i, j)}, to_string(beta.at(i, j)), to_string(expected.at(i, j)));
           }
         if (!v.failed()) v.absorb(is_two_cocycle(h, beta));
         r.details["beta"] = form_to_json(beta);
         from_verdict(r, v);
       }},
      {"specialize-extension", kRing | kSigma,
       [](const Context& c, const std::string&, CheckResult& r) {
         const auto& h = *c.h;
         const std::size_t n = h.dim();
         Verdict v;
         auto compare = [&](const std::string& at, const LinearForm& lam, const BilinearForm& form) {
           auto got = specialize_extension(*c.gc, lam);
           auto want = twist_algebra(h, form);
           for (std::size_t i = 0; i < n && !v.failed(); ++i)
             for (std::size_t j = 0; j < n && !v.failed(); ++j) {
               ++v.cases;
               Vec a = to_dense(got.mult[i * n + j], n), b = to_dense(want.mult[i * n + j], n);
               if (a != b) v.fail({at, pair_name(h, i, j)}, format_vec(h.basis(), a), format_vec(h.basis(), b));
             }
         };
         compare("ε", counit_form(h), c.alpha);
         if (c.lambda && !v.failed()) compare("λ", *c.lambda, cohomologous_transform(h, c.alpha, *c.lambda));
         from_verdict(r, v);
       }},
      {"coprod-sigma", kRing | kSigma,
       [](const Context& c, const std::string&, CheckResult& r) { from_verdict(r, coproduct_of_sigma(*c.gc)); }},
      {"antipode-sigma", kRing | kSigma,
       [](const Context& c, const std::string&, CheckResult& r) { from_verdict(r, antipode_on_sigma(*c.gc)); }},
      {"coideal", kRing | kSigma | kSpec,
       [](const Context& c, const std::string&, CheckResult& r) {
         if (!c.trivial_alpha) {
           from_verdict(r, Verdict::skipped("", "needs α = ε⊗ε"));
           return;
         }
         from_verdict(r, coideal_check(*c.spec));
       }},
      {"quotient-hab", kRing | kSigma | kSpec,
       [](const Context& c, const std::string&, CheckResult& r) {
         auto q = quotient_by_Bplus(*c.spec, c.budget, c.cache);
         r.details = quotient_to_json(q);
         from_verdict(r, q.isomorphism);
       }},
      {"lattice-kernel", kRing | kSigma | kSpec,
       [](const Context& c, const std::string&, CheckResult& r) { from_verdict(r, verify_lattice_kernel(*c.spec)); }},
      {"pq-in-B", kRing | kSigma | kSpec,
       [](const Context& c, const std::string&, CheckResult& r) { from_verdict(r, verify_pq_in_B(*c.spec)); }},
      {"coinvariance", 0,
       [](const Context& c, const std::string&, CheckResult& r) {
         const auto& h = *c.h;
         Verdict v;
         for (std::size_t i = 0; i < h.dim() && !v.failed(); ++i)
           for (std::size_t j = 0; j < h.dim() && !v.failed(); ++j) {
             auto w = build_P_Q(h, h.basis_vec(i), h.basis_vec(j));
             const std::pair<const FreeWord*, Side> cases[] = {
                 {&w.P, Side::right}, {&w.Q, Side::right}, {&w.Pp, Side::left}, {&w.Qp, Side::left}};
             const char* names[] = {"P", "Q", "P'", "Q'"};
             for (int k = 0; k < 4 && !v.failed(); ++k) {
               auto sub = check_coinvariance(h, *cases[k].first, cases[k].second);
               if (sub.failed()) sub.witness.insert(sub.witness.begin(), {names[k], pair_name(h, i, j)});
               v.absorb(sub);
             }
           }
         from_verdict(r, v);
       }},
      {"mu-convolution", kRing,
       [](const Context& c, const std::string&, CheckResult& r) { from_verdict(r, check_mu_convolution(*c.ring)); }},
      {"pq-dual-path", kRing,
       [](const Context& c, const std::string&, CheckResult& r) { from_verdict(r, check_pq_dual_path(*c.ring)); }},
      {"prop-nice", kRing | kSigma,
       [](const Context& c, const std::string&, CheckResult& r) { from_verdict(r, verify_prop_nice(*c.gc)); }},
      {"antipode-pq", kRing,
       [](const Context& c, const std::string&, CheckResult& r) {
         from_verdict(r, antipode_pq_cocommutative(*c.ring));
       }},
      {"extension-algebra", kRing | kSigma,
       [](const Context& c, const std::string&, CheckResult& r) { from_verdict(r, check_extension_algebra(*c.gc)); }},
      {"reduction", 0,
       [](const Context& c, const std::string&, CheckResult& r) {
         from_verdict(r, verify_reduction(*c.h, c.alpha, c.budget, c.cache));
       }},
      {"module-form", kRing | kSigma | kSpec,
       [](const Context& c, const std::string&, CheckResult& r) {
         if (!c.trivial_alpha) {
           from_verdict(r, Verdict::skipped("", "needs α = ε⊗ε"));
           return;
         }
         const auto start = std::chrono::steady_clock::now();
         const auto& R = c.ring->poly();
         const std::size_t nv = R.nvars();
         std::vector<Monomial> monos{R.one_monomial()};
         for (std::size_t a = 0; a < nv; ++a) {
           Monomial m = R.one_monomial();
           m.exp[a] = 1;
           monos.push_back(m);
         }
         for (std::size_t a = 0; a < nv; ++a)
           for (std::size_t b = a; b < nv; ++b) {
             Monomial m = R.one_monomial();
             m.exp[a] += 1;
             m.exp[b] += 1;
             monos.push_back(m);
           }
         ModuleRewriter rw(*c.spec);
         Verdict v;
         json forms = json::object();
         for (const auto& m : monos) {
           auto f = rw.rewrite(R.monomial(m, 1), remaining(c.budget, start));
           ++v.cases;
           if (!f.verified) {
             v.status = Status::inconclusive;
             v.witness = {R.format(m)};
             v.note = "re-substitution not confirmed; Gröbner basis incomplete";
             break;
           }
           std::size_t terms = 0;
           for (const auto& t : f.terms) terms += t.coefficient.size();
           forms[R.format(m)] = json{{"z", f.terms.size()}, {"tag_terms", terms}};
         }
         r.details["monomials"] = forms;
         from_verdict(r, v);
       }},
      {"membership", kRing | kSigma | kSpec,
       [](const Context& c, const std::string& arg, CheckResult& r) {
         auto cert = membership(*c.spec, c.ring->parse(arg), c.budget, c.cache);
         r.details = certificate_to_json(*c.spec, cert);
         Verdict v;
         v.cases = 1;
         v.note = to_string(cert.verdict);
         if (cert.verdict == Membership::inconclusive) {
           v.status = Status::inconclusive;
           v.note = cert.note;
         }
         from_verdict(r, v);
       }},
      {"tinv-question", kRing | kSigma | kSpec,
       [](const Context& c, const std::string&, CheckResult& r) {
         auto probes = tinv_experiment(*c.spec, c.budget, c.cache);
         Verdict v;
         json list = json::array();
         for (const auto& p : probes) {
           ++v.cases;
           json e{{"grouplike", p.grouplike}, {"t", to_string(p.t.verdict)}};
           bool open = p.t.verdict == Membership::inconclusive;
           if (p.tinv_probed) {
             e["tinv"] = to_string(p.tinv.verdict);
             open = open || p.tinv.verdict == Membership::inconclusive;
           }
           if (open && v.status == Status::pass) {
             v.status = Status::inconclusive;
             v.witness = {p.grouplike};
           }
           list.push_back(e);
         }
         if (v.status == Status::inconclusive) v.note = "some memberships undecided within budget";
         r.details["probes"] = list;
         from_verdict(r, v);
       }},
      {"group-determinant", 0,
       [](const Context& c, const std::string&, CheckResult& r) {
         auto g = group_of(*c.h);
         if (!g) {
           from_verdict(r, Verdict::skipped("", "H is not a group algebra on its basis"));
           return;
         }
         auto d = group_determinant(*g);
         const std::size_t n = g->order();
         // compare against numeric determinants at fixed integer points
         std::mt19937 rng(20240611);
         std::uniform_int_distribution<int> dist(-4, 4);
         Verdict v;
         for (int k = 0; k < 4 && !v.failed(); ++k) {
           std::vector<Scalar> point(n);
           for (auto& x : point) x = dist(rng);
           std::vector<std::vector<Scalar>> m(n, std::vector<Scalar>(n));
           for (std::size_t a = 0; a < n; ++a)
             for (std::size_t b = 0; b < n; ++b) m[a][b] = point[g->table[a][g->inverse(b)]];
           ++v.cases;
           Scalar lhs = d.ring->evaluate(d.det, point), rhs = numeric_det(m);
           if (lhs != rhs) {
             std::string at;
             for (std::size_t i = 0; i < n; ++i) at += (i ? "," : "") + to_string(point[i]);
             v.fail({at}, to_string(lhs), to_string(rhs));
           }
         }
         r.details["determinant"] = d.ring->format(d.det);
         r.details["terms"] = d.det.size();
         from_verdict(r, v);
       }},
  };
  return defs;
}

const CheckDef& find_def(const std::string& id, std::string* arg) {
  std::string base = id;
  if (id.rfind("membership:", 0) == 0) {
    base = "membership";
    if (arg) *arg = id.substr(std::string("membership:").size());
  }
  for (const auto& d : registry())
    if (base == d.id) return d;
  throw InputError("unknown check '" + id + "'");
}

bool is_trivial(const HopfAlgebra& h, const BilinearForm& a) { return a == trivial_cocycle(h); }

json path_info(const fs::path& p) { return json{{"path", p.generic_string()}, {"fnv1a64", fnv1a_file(p)}}; }

json budget_json(const GroebnerBudget& b) {
  json j;
  j["pairs"] = b.max_pairs == std::numeric_limits<std::size_t>::max() ? json(nullptr) : json(b.max_pairs);
  j["degree_bound"] = b.degree_bound == std::numeric_limits<unsigned>::max() ? json(nullptr) : json(b.degree_bound);
  j["seconds"] = std::isfinite(b.max_seconds) ? json(b.max_seconds) : json(nullptr);
  return j;
}

}  // namespace

const std::vector<std::string>& check_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& d : registry())
      if (std::string(d.id) != "membership") out.push_back(d.id);
    return out;
  }();
  return ids;
}

JobSpec load_job(const fs::path& path) {
  json j = read_json_file(path);
  const std::string where = path.string();
  if (!j.is_object()) throw InputError(where + ": a job is a JSON object");
  static const std::set<std::string> known = {"algebra", "cocycle", "lambda", "checks", "budget",
                                              "jobs",    "strict",  "out"};
  for (const auto& [k, _] : j.items())
    if (!known.count(k)) throw InputError(where + ": /" + k + ": unknown key");
  const fs::path base = path.parent_path();
  auto resolve = [&](const std::string& key) {
    const auto& v = j.at(key);
    if (!v.is_string()) throw InputError(where + ": /" + key + ": expected a path string");
    fs::path p = v.get<std::string>();
    return p.is_absolute() ? p : (base / p).lexically_normal();
  };
  JobSpec job;
  if (!j.contains("algebra")) throw InputError(where + ": /algebra: missing");
  job.algebra = resolve("algebra");
  if (j.contains("cocycle")) job.cocycle = resolve("cocycle");
  if (j.contains("lambda")) job.lambda = resolve("lambda");
  if (j.contains("out")) job.out = resolve("out");
  try {
    job.checks = j.at("checks").get<std::vector<std::string>>();
    if (j.contains("budget")) {
      const auto& b = j.at("budget");
      if (b.contains("pairs")) job.budget.max_pairs = b.at("pairs").get<std::size_t>();
      if (b.contains("degree_bound")) job.budget.degree_bound = b.at("degree_bound").get<unsigned>();
      if (b.contains("seconds")) job.budget.max_seconds = b.at("seconds").get<double>();
    }
    if (j.contains("jobs")) job.jobs = j.at("jobs").get<std::size_t>();
    if (j.contains("strict")) job.strict = j.at("strict").get<bool>();
  } catch (const json::exception& e) {
    throw InputError(where + ": " + e.what());
  }
  return job;
}

std::vector<std::string> resolve_checks(const std::vector<std::string>& checks, const HopfAlgebra& h) {
  std::vector<std::string> out;
  std::set<std::string> seen;
  auto push = [&](const std::string& id) {
    if (seen.insert(id).second) out.push_back(id);
  };
  std::vector<std::string> tvars;
  for (const auto& b : h.basis()) tvars.push_back("T_" + b);
  for (const auto& b : h.basis()) tvars.push_back("U_" + b);
  PolynomialRing names(tvars);
  for (const auto& id : checks) {
    if (id == "all") {
      for (const auto& c : check_ids()) push(c);
      continue;
    }
    std::string arg;
    const auto& def = find_def(id, &arg);
    if (std::string(def.id) == "membership") {
      if (arg.empty()) throw InputError("check '" + id + "': missing polynomial after 'membership:'");
      try {
        names.parse(arg);
      } catch (const std::invalid_argument& e) {
        throw InputError("check '" + id + "': " + e.what());
      }
    }
    push(id);
  }
  if (out.empty()) throw InputError("no checks selected");
  return out;
}

JobInputs load_inputs(const JobSpec& job) {
  JobInputs in;
  in.algebra = std::make_shared<const HopfAlgebra>(load_hopf(job.algebra));
  const auto& h = *in.algebra;
  in.provenance["algebra"] = path_info(job.algebra);
  in.provenance["algebra"]["dim"] = h.dim();
  if (job.cocycle) {
    auto a = bilinear_from_json(read_json_file(*job.cocycle), h.dim(), job.cocycle->string());
    auto v = is_two_cocycle(h, a);
    if (!v.passed()) throw InputError(job.cocycle->string() + ": not a two-cocycle: " + v.describe());
    try {
      convolution_inverse(h, a);
    } catch (const NotInvertible& e) {
      throw InputError(job.cocycle->string() + ": not convolution-invertible: " + e.what());
    }
    in.cocycle = std::move(a);
    in.provenance["cocycle"] = path_info(*job.cocycle);
  }
  if (job.lambda) {
    auto l = linear_from_json(read_json_file(*job.lambda), h.dim(), job.lambda->string());
    try {
      convolution_inverse(h, l);
    } catch (const NotInvertible& e) {
      throw InputError(job.lambda->string() + ": not convolution-invertible: " + e.what());
    }
    in.lambda = std::move(l);
    in.provenance["lambda"] = path_info(*job.lambda);
  }
  resolve_checks(job.checks, h);
  return in;
}

Report run_job(const JobSpec& job, const JobInputs& inputs, GroebnerCache* cache) {
  using clock = std::chrono::steady_clock;
  const auto& h = *inputs.algebra;
  const auto checks = resolve_checks(job.checks, h);

  Report report;
  report.strict = job.strict;
  report.inputs = inputs.provenance;
  report.budget = budget_json(job.budget);
  report.ring = nullptr;

  Context ctx;
  ctx.h = inputs.algebra;
  ctx.alpha = inputs.cocycle ? *inputs.cocycle : trivial_cocycle(h);
  ctx.trivial_alpha = is_trivial(h, ctx.alpha);
  ctx.lambda = inputs.lambda;
  ctx.budget = job.budget;
  ctx.cache = cache;

  unsigned needs = 0;
  for (const auto& id : checks) needs |= find_def(id, nullptr).needs;

  // Shared structures are built once, before any check runs.
  std::string setup_error;
  const auto setup_start = clock::now();
  try {
    if (needs & kRing) {
      ctx.ring = PresentedRing::build(ctx.h, job.budget, cache);
      report.ring = json{{"relations", ctx.ring->relations().size()}, {"groebner", stats_to_json(ctx.ring->stats())}};
    }
    if (needs & kSigma) ctx.gc = std::make_shared<const GenericCocycle>(generic_sigma(ctx.ring, ctx.alpha));
    if (needs & kSpec) ctx.spec.emplace(base_algebra_spec(ctx.gc));
  } catch (const Timeout& e) {
    setup_error = std::string("setup: ") + e.what();
  }
  const double setup_seconds = std::chrono::duration<double>(clock::now() - setup_start).count();

  report.checks.resize(checks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < checks.size(); k = next++) {
      auto& r = report.checks[k];
      r.id = checks[k];
      std::string arg;
      const auto& def = find_def(r.id, &arg);
      const auto start = clock::now();
      if (!setup_error.empty() && (def.needs & (kRing | kSigma | kSpec))) {
        r.verdict.status = Status::inconclusive;
        r.verdict.note = setup_error;
      } else {
        try {
          def.run(ctx, arg, r);
        } catch (const Timeout& e) {
          r.verdict = Verdict{};
          r.verdict.status = Status::inconclusive;
          r.verdict.note = std::string("budget exhausted: ") + e.what();
        } catch (const PreconditionViolated& e) {
          r.verdict = Verdict::skipped("", e.what());
        } catch (const MismatchError& e) {
          r.verdict = Verdict{};
          r.verdict.fail({"internal"}, e.what(), "");
          r.verdict.note = "two computations of the same quantity disagree";
        } catch (const std::exception& e) {
          r.verdict = Verdict{};
          r.verdict.fail({"error"}, e.what(), "");
        }
      }
      r.verdict.check = r.id;
      r.seconds = std::chrono::duration<double>(clock::now() - start).count();
    }
  };
  const std::size_t threads = std::max<std::size_t>(1, std::min(job.jobs, checks.size()));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  CheckResult setup;
  setup.id = "(setup)";
  setup.seconds = setup_seconds;
  setup.verdict.note = setup_error;
  report.checks.insert(report.checks.begin(), setup);
  return report;
}

int Report::exit_code() const {
  for (const auto& c : checks) {
    if (c.verdict.failed()) return 1;
    if (strict && c.verdict.status == Status::inconclusive) return 1;
  }
  return 0;
}

json Report::to_json() const {
  json j;
  j["schema"] = 1;
  j["inputs"] = inputs;
  j["budget"] = budget;
  j["ring"] = ring;
  json list = json::array();
  std::map<std::string, std::size_t> summary{{"pass", 0}, {"fail", 0}, {"skipped", 0}, {"inconclusive", 0}};
  for (const auto& c : checks) {
    if (c.id == "(setup)") continue;
    json e = verdict_to_json(c.verdict);
    e.erase("check");
    e["id"] = c.id;
    if (!c.details.empty()) e["details"] = c.details;
    list.push_back(e);
    ++summary[to_string(c.verdict.status)];
  }
  j["checks"] = list;
  j["summary"] = summary;
  j["strict"] = strict;
  j["exit_code"] = exit_code();
  return j;
}

std::string Report::to_text() const {
  std::ostringstream os;
  os << std::fixed << std::setprecision(2);
  const auto& a = inputs.at("algebra");
  os << "algebra  " << a.at("path").get<std::string>() << " (dim " << a.at("dim") << ")\n";
  os << "cocycle  " << (inputs.contains("cocycle") ? inputs["cocycle"]["path"].get<std::string>() : "ε⊗ε") << "\n";
  if (inputs.contains("lambda")) os << "lambda   " << inputs["lambda"]["path"].get<std::string>() << "\n";
  if (!ring.is_null()) {
    const auto& g = ring.at("groebner");
    os << "ring     " << ring.at("relations") << " relations, Gröbner basis " << g.at("basis_size")
       << " (max degree " << g.at("max_degree") << (g.at("complete").get<bool>() ? "" : ", INCOMPLETE") << ")\n";
  }
  std::map<std::string, std::size_t> summary;
  for (const auto& c : checks) {
    if (c.id == "(setup)") {
      os << "setup    " << c.seconds << " s";
      if (!c.verdict.note.empty()) os << "  " << c.verdict.note;
      os << "\n";
      continue;
    }
    std::string status = to_string(c.verdict.status);
    if (c.verdict.failed()) status = "FAIL";
    os << std::left << std::setw(14) << status << std::setw(26) << c.id << std::right << std::setw(7)
       << c.verdict.cases << " cases " << std::setw(9) << c.seconds << " s\n";
    if (c.verdict.failed()) {
      os << "    at (";
      for (std::size_t i = 0; i < c.verdict.witness.size(); ++i) os << (i ? ", " : "") << c.verdict.witness[i];
      os << ")\n    lhs: " << c.verdict.lhs << "\n    rhs: " << c.verdict.rhs << "\n";
    }
    if (!c.verdict.note.empty()) os << "    " << c.verdict.note << "\n";
    ++summary[to_string(c.verdict.status)];
  }
  os << "summary: " << summary["pass"] << " pass, " << summary["fail"] << " fail, " << summary["skipped"]
     << " skipped, " << summary["inconclusive"] << " inconclusive\n";
  return os.str();
}

}  // namespace hopfgen
