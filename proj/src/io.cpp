#include "hopfgen/io.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <sstream>
#include <unistd.h>

namespace hopfgen {

namespace {

[[noreturn]] void bad(const std::string& where, const std::string& pointer, const std::string& what) {
  throw InputError((where.empty() ? "" : where + ": ") + "at " + (pointer.empty() ? "/" : pointer) + ": " + what);
}

Scalar scalar_at(const json& j, const std::string& where, const std::string& pointer) {
  try {
    if (j.is_string()) return parse_scalar(j.get<std::string>());
    if (j.is_number_integer()) return make_scalar(j.get<long>());
  } catch (const std::invalid_argument& e) {
    bad(where, pointer, e.what());
  }
  bad(where, pointer, "expected a rational string \"p/q\"");
}

const json& field(const json& j, const char* key, const std::string& where) {
  if (!j.is_object()) bad(where, "", "expected an object");
  auto it = j.find(key);
  if (it == j.end()) bad(where, "", std::string("missing field '") + key + "'");
  return *it;
}

Vec vector_at(const json& j, std::size_t n, const std::string& where, const std::string& pointer) {
  if (!j.is_array() || j.size() != n) bad(where, pointer, "expected an array of " + std::to_string(n) + " rationals");
  Vec v;
  for (std::size_t k = 0; k < n; ++k) v.push_back(scalar_at(j[k], where, pointer + "/" + std::to_string(k)));
  return v;
}

json vec_json(const Vec& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

bool flat(const json& j) {
  if (!j.is_array()) return !j.is_object();
  for (const auto& x : j)
    if (x.is_array() || x.is_object()) return false;
  return true;
}

void dump_into(std::string& out, const json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  const std::string inner(static_cast<std::size_t>(indent + 1) * 2, ' ');
  if (flat(j) || j.dump().size() <= 100) {
    out += j.dump();
    return;
  }
  const bool object = j.is_object();
  out += object ? "{\n" : "[\n";
  std::size_t k = 0;
  for (auto it = j.begin(); it != j.end(); ++it, ++k) {
    out += inner;
    if (object) out += json(it.key()).dump() + ": ";
    dump_into(out, *it, indent + 1);
    out += k + 1 < j.size() ? ",\n" : "\n";
  }
  out += pad + (object ? "}" : "]");
}

}  // namespace

std::string dump_pretty(const json& j) {
  std::string out;
  dump_into(out, j, 0);
  return out + "\n";
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path.string() + ": cannot open");
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    // e.byte is 1-based and points just past the offending character
    const std::size_t end = std::min(e.byte == 0 ? 0 : e.byte - 1, text.size());
    std::size_t line = 1, col = 1;
    for (std::size_t k = 0; k < end; ++k) {
      if (text[k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw InputError(path.string() + ":" + std::to_string(line) + ":" + std::to_string(col) +
                     ": JSON parse error at byte " + std::to_string(e.byte));
  }
}

void write_text_atomic(const std::filesystem::path& path, const std::string& text) {
  auto tmp = path;
  static std::atomic<unsigned long> serial{0};
  tmp += ".tmp." + std::to_string(::getpid()) + "." + std::to_string(serial++);
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) throw std::runtime_error(tmp.string() + ": cannot write");
    out << text;
    if (!out) throw std::runtime_error(tmp.string() + ": write failed");
  }
  std::filesystem::rename(tmp, path);
}

json hopf_to_json(const HopfAlgebra& h) {
  const std::size_t n = h.dim();
  json j;
  j["dim"] = n;
  j["basis"] = h.basis();
  json mult = json::array();
  for (std::size_t a = 0; a < n; ++a) {
    json row = json::array();
    for (std::size_t b = 0; b < n; ++b) row.push_back(vec_json(to_dense(h.mult(a, b), n)));
    mult.push_back(row);
  }
  j["mult"] = mult;
  j["unit"] = vec_json(h.unit());
  json comult = json::array();
  for (std::size_t a = 0; a < n; ++a) {
    json terms = json::array();
    for (const auto& t : h.comult(a)) terms.push_back(json::array({t.left, t.right, to_string(t.coef)}));
    comult.push_back(terms);
  }
  j["comult"] = comult;
  j["counit"] = vec_json(h.counit());
  json s = json::array();
  for (std::size_t a = 0; a < n; ++a) s.push_back(vec_json(to_dense(h.antipode(a), n)));
  j["antipode"] = s;
  return j;
}

HopfAlgebra hopf_from_json(const json& j, const std::string& where) {
  const auto& dim = field(j, "dim", where);
  if (!dim.is_number_unsigned() || dim.get<std::size_t>() == 0) bad(where, "/dim", "expected a positive integer");
  const std::size_t n = dim.get<std::size_t>();
  const auto& basis = field(j, "basis", where);
  if (!basis.is_array() || basis.size() != n) bad(where, "/basis", "expected " + std::to_string(n) + " names");
  std::vector<std::string> names;
  for (std::size_t k = 0; k < n; ++k) {
    if (!basis[k].is_string()) bad(where, "/basis/" + std::to_string(k), "expected a string");
    names.push_back(basis[k].get<std::string>());
  }
  const auto& mult = field(j, "mult", where);
  if (!mult.is_array() || mult.size() != n) bad(where, "/mult", "expected an n×n×n array");
  std::vector<SparseVec> m;
  for (std::size_t a = 0; a < n; ++a) {
    const std::string pa = "/mult/" + std::to_string(a);
    if (!mult[a].is_array() || mult[a].size() != n) bad(where, pa, "expected " + std::to_string(n) + " rows");
    for (std::size_t b = 0; b < n; ++b)
      m.push_back(to_sparse(vector_at(mult[a][b], n, where, pa + "/" + std::to_string(b))));
  }
  Vec unit = vector_at(field(j, "unit", where), n, where, "/unit");
  const auto& comult = field(j, "comult", where);
  if (!comult.is_array() || comult.size() != n) bad(where, "/comult", "expected " + std::to_string(n) + " term lists");
  std::vector<std::vector<CoproductTerm>> c(n);
  for (std::size_t a = 0; a < n; ++a) {
    if (!comult[a].is_array()) bad(where, "/comult/" + std::to_string(a), "expected a list of [i, j, \"p/q\"]");
    for (std::size_t k = 0; k < comult[a].size(); ++k) {
      const std::string pk = "/comult/" + std::to_string(a) + "/" + std::to_string(k);
      const auto& t = comult[a][k];
      if (!t.is_array() || t.size() != 3 || !t[0].is_number_unsigned() || !t[1].is_number_unsigned())
        bad(where, pk, "expected [i, j, \"p/q\"]");
      auto l = t[0].get<std::size_t>(), r = t[1].get<std::size_t>();
      if (l >= n || r >= n) bad(where, pk, "basis index out of range");
      Scalar coef = scalar_at(t[2], where, pk + "/2");
      if (!is_zero(coef)) c[a].push_back({l, r, coef});
    }
  }
  Vec counit = vector_at(field(j, "counit", where), n, where, "/counit");
  const auto& anti = field(j, "antipode", where);
  if (!anti.is_array() || anti.size() != n) bad(where, "/antipode", "expected an n×n array");
  std::vector<SparseVec> s;
  for (std::size_t a = 0; a < n; ++a) s.push_back(to_sparse(vector_at(anti[a], n, where, "/antipode/" + std::to_string(a))));
  try {
    return HopfAlgebra(std::move(names), std::move(m), std::move(unit), std::move(c), std::move(counit), std::move(s));
  } catch (const std::exception& e) {
    bad(where, "", e.what());
  }
}

HopfAlgebra load_hopf(const std::filesystem::path& path) { return hopf_from_json(read_json_file(path), path.string()); }

json form_to_json(const BilinearForm& a) {
  json rows = json::array();
  for (std::size_t i = 0; i < a.values.rows(); ++i) rows.push_back(vec_json(a.values.row(i)));
  return {{"kind", "bilinear-form"}, {"values", rows}};
}

BilinearForm bilinear_from_json(const json& j, std::size_t dim, const std::string& where) {
  const json& values = j.is_object() ? field(j, "values", where) : j;
  const std::string base = j.is_object() ? "/values" : "";
  if (!values.is_array() || values.size() != dim) bad(where, base, "expected a " + std::to_string(dim) + "×" + std::to_string(dim) + " matrix");
  BilinearForm a{Matrix(dim, dim)};
  for (std::size_t i = 0; i < dim; ++i) {
    Vec row = vector_at(values[i], dim, where, base + "/" + std::to_string(i));
    for (std::size_t k = 0; k < dim; ++k) a.values(i, k) = row[k];
  }
  return a;
}

json form_to_json(const LinearForm& f) { return {{"kind", "linear-form"}, {"values", vec_json(f.values)}}; }

LinearForm linear_from_json(const json& j, std::size_t dim, const std::string& where) {
  const json& values = j.is_object() ? field(j, "values", where) : j;
  return LinearForm{vector_at(values, dim, where, j.is_object() ? "/values" : "")};
}

json verdict_to_json(const Verdict& v) {
  json j{{"check", v.check}, {"status", to_string(v.status)}, {"cases", v.cases}};
  if (!v.witness.empty()) j["witness"] = v.witness;
  if (v.failed() || v.status == Status::inconclusive) {
    if (!v.lhs.empty()) j["lhs"] = v.lhs;
    if (!v.rhs.empty()) j["rhs"] = v.rhs;
  }
  if (!v.note.empty()) j["note"] = v.note;
  return j;
}

json stats_to_json(const GroebnerStats& s) {
  return {{"basis_size", s.basis_size}, {"max_degree", s.max_degree}, {"complete", s.complete}};
}

json certificate_to_json(const SubalgebraSpec& spec, const MembershipCertificate& c) {
  json j{{"element", spec.ring().format(c.element)},
         {"verdict", to_string(c.verdict)},
         {"elimination", to_string(c.elimination)}};
  if (c.verdict == Membership::member) {
    j["witness"] = spec.tags().format(c.witness);
    j["witness_verified"] = c.witness_verified;
  }
  j["hab_coinvariant"] = c.grading.coinvariant;
  j["groebner"] = stats_to_json(c.stats);
  if (!c.note.empty()) j["note"] = c.note;
  return j;
}

json quotient_to_json(const QuotientRingReport& q) {
  json j{{"finite", q.finite},
         {"complete", q.complete},
         {"dimension", q.dimension},
         {"abelianization_dimension", q.abelianization_dimension},
         {"standard_monomials", q.standard_monomials}};
  json mult = json::array();
  for (const auto& row : q.mult) {
    json r = json::array();
    for (const auto& v : row) r.push_back(vec_json(v));
    mult.push_back(r);
  }
  j["mult"] = mult;
  j["isomorphism"] = verdict_to_json(q.isomorphism);
  j["groebner"] = stats_to_json(q.stats);
  return j;
}

}  // namespace hopfgen
