#include "hopfgen/hopf.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <sstream>

namespace hopfgen {

SparseVec to_sparse(const Vec& v) {
  SparseVec out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!is_zero(v[i])) out.push_back({i, v[i]});
  return out;
}

Vec to_dense(const SparseVec& v, std::size_t n) {
  Vec out = zero_vec(n);
  for (const auto& e : v) out.at(e.index) += e.coef;
  return out;
}

std::string format_vec(const std::vector<std::string>& names, const Vec& v) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (is_zero(v[i])) continue;
    Scalar c = v[i];
    if (!first) os << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0) os << "-";
    c = abs(c);
    if (c != 1) os << c.get_str() << "*";
    os << names.at(i);
    first = false;
  }
  return first ? "0" : os.str();
}

std::string format_tensor(const std::vector<std::string>& names, const TensorElement& t) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [idx, coef] : t.terms) {
    Scalar c = coef;
    if (!first) os << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0) os << "-";
    c = abs(c);
    if (c != 1) os << c.get_str() << "*";
    for (std::size_t k = 0; k < idx.size(); ++k) os << (k ? "⊗" : "") << names.at(idx[k]);
    first = false;
  }
  return first ? "0" : os.str();
}

void TensorElement::add(const std::vector<std::size_t>& idx, const Scalar& c) {
  if (is_zero(c)) return;
  auto [it, inserted] = terms.try_emplace(idx, c);
  if (!inserted) {
    it->second += c;
    if (is_zero(it->second)) terms.erase(it);
  }
}

TensorElement swap_legs(const TensorElement& t) {
  if (t.degree != 2) throw std::invalid_argument("swap_legs: degree must be 2");
  TensorElement out;
  out.degree = 2;
  for (const auto& [idx, c] : t.terms) out.add({idx[1], idx[0]}, c);
  return out;
}

HopfAlgebra::HopfAlgebra(std::vector<std::string> basis, std::vector<SparseVec> mult, Vec unit,
                         std::vector<std::vector<CoproductTerm>> comult, Vec counit,
                         std::vector<SparseVec> antipode)
    : basis_(std::move(basis)),
      mult_(std::move(mult)),
      unit_(std::move(unit)),
      comult_(std::move(comult)),
      counit_(std::move(counit)),
      antipode_(std::move(antipode)) {
  const std::size_t n = basis_.size();
  auto fail = [](const std::string& what) { throw StructureError("dimension mismatch: " + what); };
  if (n == 0) fail("empty basis");
  if (mult_.size() != n * n) fail("mult has " + std::to_string(mult_.size()) + " entries, expected n^2");
  if (unit_.size() != n) fail("unit length");
  if (comult_.size() != n) fail("comult length");
  if (counit_.size() != n) fail("counit length");
  if (antipode_.size() != n) fail("antipode length");
  for (const auto& sv : mult_)
    for (const auto& e : sv)
      if (e.index >= n) fail("mult index out of range");
  for (const auto& sv : antipode_)
    for (const auto& e : sv)
      if (e.index >= n) fail("antipode index out of range");
  for (const auto& terms : comult_)
    for (const auto& t : terms)
      if (t.left >= n || t.right >= n) fail("comult index out of range");
  std::vector<std::string> sorted = basis_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) fail("duplicate basis label");
}

std::size_t HopfAlgebra::index_of(const std::string& label) const {
  auto it = std::find(basis_.begin(), basis_.end(), label);
  if (it == basis_.end()) throw std::invalid_argument("unknown basis label '" + label + "'");
  return static_cast<std::size_t>(it - basis_.begin());
}

Vec HopfAlgebra::multiply(const Vec& a, const Vec& b) const {
  const std::size_t n = dim();
  Vec out = zero_vec(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (is_zero(a[i])) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (is_zero(b[j])) continue;
      Scalar c = a[i] * b[j];
      for (const auto& e : mult(i, j)) out[e.index] += c * e.coef;
    }
  }
  return out;
}

Scalar HopfAlgebra::eps(const Vec& v) const {
  Scalar s = 0;
  for (std::size_t i = 0; i < dim(); ++i)
    if (!is_zero(v[i])) s += v[i] * counit_[i];
  return s;
}

Vec HopfAlgebra::apply_antipode(const Vec& v) const {
  Vec out = zero_vec(dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    if (is_zero(v[i])) continue;
    for (const auto& e : antipode_[i]) out[e.index] += v[i] * e.coef;
  }
  return out;
}

TensorElement HopfAlgebra::coproduct(const Vec& v) const {
  TensorElement t;
  t.degree = 2;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (is_zero(v[i])) continue;
    for (const auto& c : comult_[i]) t.add({c.left, c.right}, v[i] * c.coef);
  }
  return t;
}

bool HopfAlgebra::is_commutative() const {
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = i + 1; j < dim(); ++j)
      if (to_dense(mult(i, j), dim()) != to_dense(mult(j, i), dim())) return false;
  return true;
}

bool HopfAlgebra::is_cocommutative() const {
  for (std::size_t i = 0; i < dim(); ++i) {
    auto d = coproduct(basis_vec(i));
    if (swap_legs(d) != d) return false;
  }
  return true;
}

std::optional<std::size_t> HopfAlgebra::unit_index() const {
  auto sv = to_sparse(unit_);
  if (sv.size() == 1 && sv[0].coef == 1) return sv[0].index;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Axioms

namespace {

// Product in H⊗H of two degree-2 tensors.
TensorElement tensor_multiply(const HopfAlgebra& h, const TensorElement& a, const TensorElement& b) {
  TensorElement out;
  out.degree = 2;
  for (const auto& [ia, ca] : a.terms)
    for (const auto& [ib, cb] : b.terms) {
      const auto& left = h.mult(ia[0], ib[0]);
      const auto& right = h.mult(ia[1], ib[1]);
      for (const auto& l : left)
        for (const auto& r : right) out.add({l.index, r.index}, ca * cb * l.coef * r.coef);
    }
  return out;
}

TensorElement vec_tensor(const Vec& a, const Vec& b) {
  TensorElement t;
  t.degree = 2;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size(); ++j) t.add({i, j}, a[i] * b[j]);
  }
  return t;
}

}  // namespace

bool ValidationReport::ok() const {
  return std::all_of(axioms.begin(), axioms.end(), [](const AxiomResult& a) { return a.passed; });
}

const AxiomResult* ValidationReport::first_failure() const {
  for (const auto& a : axioms)
    if (!a.passed) return &a;
  return nullptr;
}

std::string ValidationReport::summary(const HopfAlgebra& h) const {
  std::ostringstream os;
  for (const auto& a : axioms) {
    os << a.axiom << ": " << (a.passed ? "pass" : "FAIL");
    if (!a.passed) {
      os << " at (";
      for (std::size_t k = 0; k < a.witness.size(); ++k) os << (k ? "," : "") << h.name(a.witness[k]);
      os << ")";
      if (!a.lhs.empty() || !a.rhs.empty()) os << ": " << a.lhs << " != " << a.rhs;
      if (!a.detail.empty()) os << " " << a.detail;
    }
    os << "\n";
  }
  return os.str();
}

ValidationReport validate_hopf(const HopfAlgebra& h) {
  const std::size_t n = h.dim();
  const auto& names = h.basis();
  ValidationReport report;
  auto run = [&](const char* name, auto&& body) {
    AxiomResult r;
    r.axiom = name;
    body(r);
    report.axioms.push_back(std::move(r));
  };
  auto fail = [](AxiomResult& r, std::vector<std::size_t> w, std::string lhs, std::string rhs) {
    r.passed = false;
    r.witness = std::move(w);
    r.lhs = std::move(lhs);
    r.rhs = std::move(rhs);
  };
  auto vec = [&](const Vec& v) { return format_vec(names, v); };
  auto ten = [&](const TensorElement& t) { return format_tensor(names, t); };

  run(kAxiomAssociativity, [&](AxiomResult& r) {
    for (std::size_t i = 0; i < n && r.passed; ++i)
      for (std::size_t j = 0; j < n && r.passed; ++j)
        for (std::size_t k = 0; k < n && r.passed; ++k) {
          Vec x = h.basis_vec(i), y = h.basis_vec(j), z = h.basis_vec(k);
          Vec lhs = h.multiply(h.multiply(x, y), z), rhs = h.multiply(x, h.multiply(y, z));
          if (lhs != rhs) fail(r, {i, j, k}, vec(lhs), vec(rhs));
        }
  });
  run(kAxiomUnit, [&](AxiomResult& r) {
    for (std::size_t i = 0; i < n && r.passed; ++i) {
      Vec x = h.basis_vec(i);
      Vec l = h.multiply(h.unit(), x), rt = h.multiply(x, h.unit());
      if (l != x) fail(r, {i}, vec(l), vec(x));
      else if (rt != x) fail(r, {i}, vec(rt), vec(x));
    }
  });
  run(kAxiomCoassociativity, [&](AxiomResult& r) {
    for (std::size_t i = 0; i < n && r.passed; ++i) {
      auto l = sweedler_expand(h, h.basis_vec(i), 3), rt = sweedler_expand_right(h, h.basis_vec(i), 3);
      if (l != rt) fail(r, {i}, ten(l), ten(rt));
    }
  });
  run(kAxiomCounit, [&](AxiomResult& r) {
    for (std::size_t i = 0; i < n && r.passed; ++i) {
      Vec left = zero_vec(n), right = zero_vec(n);
      for (const auto& t : h.comult(i)) {
        left[t.right] += h.counit()[t.left] * t.coef;
        right[t.left] += h.counit()[t.right] * t.coef;
      }
      if (left != h.basis_vec(i)) fail(r, {i}, vec(left), vec(h.basis_vec(i)));
      else if (right != h.basis_vec(i)) fail(r, {i}, vec(right), vec(h.basis_vec(i)));
    }
  });
  run(kAxiomComultMultiplicative, [&](AxiomResult& r) {
    for (std::size_t i = 0; i < n && r.passed; ++i)
      for (std::size_t j = 0; j < n && r.passed; ++j) {
        auto lhs = h.coproduct(h.multiply(h.basis_vec(i), h.basis_vec(j)));
        auto rhs = tensor_multiply(h, h.coproduct(h.basis_vec(i)), h.coproduct(h.basis_vec(j)));
        if (lhs != rhs) fail(r, {i, j}, ten(lhs), ten(rhs));
      }
  });
  run(kAxiomComultUnital, [&](AxiomResult& r) {
    auto lhs = h.coproduct(h.unit()), rhs = vec_tensor(h.unit(), h.unit());
    if (lhs != rhs) fail(r, {}, ten(lhs), ten(rhs));
  });
  run(kAxiomCounitMultiplicative, [&](AxiomResult& r) {
    for (std::size_t i = 0; i < n && r.passed; ++i)
      for (std::size_t j = 0; j < n && r.passed; ++j) {
        Scalar lhs = h.eps(h.multiply(h.basis_vec(i), h.basis_vec(j)));
        Scalar rhs = h.counit()[i] * h.counit()[j];
        if (lhs != rhs) fail(r, {i, j}, to_string(lhs), to_string(rhs));
      }
  });
  run(kAxiomCounitUnital, [&](AxiomResult& r) {
    Scalar e = h.eps(h.unit());
    if (e != 1) fail(r, {}, to_string(e), "1");
  });
  auto antipode_side = [&](AxiomResult& r, bool left) {
    for (std::size_t i = 0; i < n && r.passed; ++i) {
      Vec acc = zero_vec(n);
      for (const auto& t : h.comult(i)) {
        Vec a = h.basis_vec(t.left), b = h.basis_vec(t.right);
        Vec prod = left ? h.multiply(h.apply_antipode(a), b) : h.multiply(a, h.apply_antipode(b));
        axpy(acc, t.coef, prod);
      }
      Vec expected = h.unit();
      for (auto& c : expected) c *= h.counit()[i];
      if (acc != expected) fail(r, {i}, vec(acc), vec(expected));
    }
  };
  run(kAxiomAntipodeLeft, [&](AxiomResult& r) { antipode_side(r, true); });
  run(kAxiomAntipodeRight, [&](AxiomResult& r) { antipode_side(r, false); });
  return report;
}

// ---------------------------------------------------------------------------
// Sweedler expansion

namespace {

TensorElement expand_leg(const HopfAlgebra& h, const TensorElement& t, bool leftmost) {
  TensorElement out;
  out.degree = t.degree + 1;
  for (const auto& [idx, c] : t.terms) {
    std::size_t pos = leftmost ? 0 : idx.size() - 1;
    for (const auto& term : h.comult(idx[pos])) {
      std::vector<std::size_t> next;
      next.reserve(idx.size() + 1);
      next.insert(next.end(), idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(pos));
      next.push_back(term.left);
      next.push_back(term.right);
      next.insert(next.end(), idx.begin() + static_cast<std::ptrdiff_t>(pos) + 1, idx.end());
      out.add(next, c * term.coef);
    }
  }
  return out;
}

TensorElement expand(const HopfAlgebra& h, const Vec& v, std::size_t d, bool leftmost) {
  if (d == 0) throw std::invalid_argument("sweedler_expand: d must be >= 1");
  if (v.size() != h.dim()) throw std::invalid_argument("sweedler_expand: vector size");
  TensorElement t;
  t.degree = 1;
  for (std::size_t i = 0; i < v.size(); ++i) t.add({i}, v[i]);
  for (std::size_t k = 1; k < d; ++k) t = expand_leg(h, t, leftmost);
  return t;
}

}  // namespace

TensorElement sweedler_expand(const HopfAlgebra& h, const Vec& v, std::size_t d) { return expand(h, v, d, true); }

TensorElement sweedler_expand_right(const HopfAlgebra& h, const Vec& v, std::size_t d) {
  return expand(h, v, d, false);
}

// ---------------------------------------------------------------------------
// Groups

std::size_t CayleyTable::identity() const {
  for (std::size_t e = 0; e < order(); ++e) {
    bool ok = true;
    for (std::size_t g = 0; g < order() && ok; ++g) ok = table[e][g] == g && table[g][e] == g;
    if (ok) return e;
  }
  throw StructureError("Cayley table has no identity element");
}

std::size_t CayleyTable::inverse(std::size_t g) const {
  std::size_t e = identity();
  for (std::size_t h = 0; h < order(); ++h)
    if (table[g][h] == e && table[h][g] == e) return h;
  throw StructureError("element '" + names.at(g) + "' has no inverse");
}

void check_group(const CayleyTable& g) {
  const std::size_t n = g.order();
  if (n == 0) throw StructureError("empty group");
  if (g.table.size() != n) throw StructureError("Cayley table has wrong number of rows");
  for (const auto& row : g.table) {
    if (row.size() != n) throw StructureError("Cayley table row has wrong length");
    for (auto v : row)
      if (v >= n) throw StructureError("Cayley table entry out of range");
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (g.table[g.table[a][b]][c] != g.table[a][g.table[b][c]])
          throw StructureError("associativity fails at (" + g.names[a] + "," + g.names[b] + "," + g.names[c] + ")");
  g.identity();
  for (std::size_t a = 0; a < n; ++a) g.inverse(a);
}

CayleyTable cyclic_group(std::size_t n, std::vector<std::string> names) {
  CayleyTable g;
  if (names.empty())
    for (std::size_t i = 0; i < n; ++i) names.push_back(std::to_string(i));
  g.names = std::move(names);
  g.table.assign(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) g.table[a][b] = (a + b) % n;
  return g;
}

CayleyTable klein_four_group() {
  // (i,j) stored at index i + 2j: b00, b10, b01, b11
  CayleyTable g;
  g.names = {"b00", "b10", "b01", "b11"};
  g.table.assign(4, std::vector<std::size_t>(4));
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b) g.table[a][b] = a ^ b;
  return g;
}

CayleyTable symmetric_group_3() {
  // permutations of {0,1,2}; product (p*q)(i) = p(q(i))
  std::vector<std::array<int, 3>> perms = {{0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
  CayleyTable g;
  g.names = {"e", "(01)", "(02)", "(12)", "(012)", "(021)"};
  g.table.assign(6, std::vector<std::size_t>(6));
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = 0; b < 6; ++b) {
      std::array<int, 3> c{};
      for (int i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];
      g.table[a][b] = static_cast<std::size_t>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  return g;
}

HopfAlgebra build_group_algebra(const CayleyTable& g) {
  check_group(g);
  const std::size_t n = g.order();
  std::vector<SparseVec> mult(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) mult[a * n + b] = {{g.table[a][b], Scalar(1)}};
  std::vector<std::vector<CoproductTerm>> comult(n);
  std::vector<SparseVec> antipode(n);
  for (std::size_t a = 0; a < n; ++a) {
    comult[a] = {{a, a, Scalar(1)}};
    antipode[a] = {{g.inverse(a), Scalar(1)}};
  }
  return HopfAlgebra(g.names, std::move(mult), unit_vec(n, g.identity()), std::move(comult), Vec(n, Scalar(1)),
                     std::move(antipode));
}

HopfAlgebra build_dual_group_algebra(const CayleyTable& g) {
  check_group(g);
  const std::size_t n = g.order();
  std::vector<std::string> names;
  for (const auto& s : g.names) names.push_back("d_" + s);
  std::vector<SparseVec> mult(n * n);
  for (std::size_t a = 0; a < n; ++a) mult[a * n + a] = {{a, Scalar(1)}};
  std::vector<std::vector<CoproductTerm>> comult(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) comult[g.table[u][v]].push_back({u, v, Scalar(1)});
  std::vector<SparseVec> antipode(n);
  for (std::size_t a = 0; a < n; ++a) antipode[a] = {{g.inverse(a), Scalar(1)}};
  return HopfAlgebra(std::move(names), std::move(mult), Vec(n, Scalar(1)), std::move(comult),
                     unit_vec(n, g.identity()), std::move(antipode));
}

HopfAlgebra sweedler_algebra() {
  // basis g^a x^b at index a + 2b: 1, g, x, gx.
  // g^a x^b · g^c x^d = (-1)^{bc} g^{a+c} x^{b+d}, zero when b+d >= 2.
  const std::size_t n = 4;
  std::vector<SparseVec> mult(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::size_t a = i % 2, b = i / 2, c = j % 2, d = j / 2;
      if (b + d >= 2) continue;
      Scalar sign = (b * c) % 2 ? -1 : 1;
      mult[i * n + j] = {{(a + c) % 2 + 2 * (b + d), sign}};
    }
  std::vector<std::vector<CoproductTerm>> comult = {
      {{0, 0, Scalar(1)}},
      {{1, 1, Scalar(1)}},
      {{2, 0, Scalar(1)}, {1, 2, Scalar(1)}},  // Δx = x⊗1 + g⊗x
      {{3, 1, Scalar(1)}, {0, 3, Scalar(1)}},  // Δ(gx) = gx⊗g + 1⊗gx
  };
  std::vector<SparseVec> antipode = {
      {{0, Scalar(1)}},
      {{1, Scalar(1)}},
      {{3, Scalar(-1)}},  // S(x) = -gx
      {{2, Scalar(1)}},   // S(gx) = x
  };
  return HopfAlgebra({"1", "g", "x", "gx"}, std::move(mult), unit_vec(n, 0), std::move(comult),
                     Vec{Scalar(1), Scalar(1), Scalar(0), Scalar(0)}, std::move(antipode));
}

std::vector<std::string> catalog_names() { return {"z2", "z3", "klein4", "s3", "dual_z2", "dual_s3", "sweedler"}; }

HopfAlgebra catalog(const std::string& name) {
  if (name == "z2") return build_group_algebra(cyclic_group(2, {"e", "g"}));
  if (name == "z3") return build_group_algebra(cyclic_group(3));
  if (name == "klein4") return build_group_algebra(klein_four_group());
  if (name == "s3") return build_group_algebra(symmetric_group_3());
  if (name == "dual_z2") return build_dual_group_algebra(cyclic_group(2, {"e", "g"}));
  if (name == "dual_s3") return build_dual_group_algebra(symmetric_group_3());
  if (name == "sweedler") return sweedler_algebra();
  throw std::invalid_argument("unknown catalog algebra '" + name + "'");
}

// ---------------------------------------------------------------------------
// Quotients

namespace {

std::vector<Vec> ideal_closure(const HopfAlgebra& h, std::vector<Vec> span) {
  const std::size_t n = h.dim();
  span = row_basis(span, n);
  for (;;) {
    std::vector<Vec> grown = span;
    for (const auto& v : span)
      for (std::size_t k = 0; k < n; ++k) {
        grown.push_back(h.multiply(h.basis_vec(k), v));
        grown.push_back(h.multiply(v, h.basis_vec(k)));
      }
    auto next = row_basis(grown, n);
    if (next.size() == span.size()) return next;
    span = std::move(next);
  }
}

bool projects_to_zero(const Matrix& proj, const Vec& v) { return is_zero(proj.apply(v)); }

}  // namespace

QuotientAlgebra quotient_by_ideal(const HopfAlgebra& h, const std::vector<Vec>& generators) {
  const std::size_t n = h.dim();
  QuotientAlgebra q;
  q.parent = std::make_shared<const HopfAlgebra>(h);
  q.ideal_basis = ideal_closure(h, generators);

  std::vector<bool> pivot(n, false);
  std::vector<std::size_t> pivot_row(n, 0);
  for (std::size_t r = 0; r < q.ideal_basis.size(); ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (!is_zero(q.ideal_basis[r][c])) {
        pivot[c] = true;
        pivot_row[c] = r;
        break;
      }
  for (std::size_t c = 0; c < n; ++c)
    if (!pivot[c]) q.complement.push_back(c);

  const std::size_t d = q.complement.size();
  q.projection = Matrix(d, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!pivot[i]) {
      auto pos = static_cast<std::size_t>(std::find(q.complement.begin(), q.complement.end(), i) - q.complement.begin());
      q.projection(pos, i) = 1;
    } else {
      const Vec& row = q.ideal_basis[pivot_row[i]];
      for (std::size_t k = 0; k < d; ++k) q.projection(k, i) = -row[q.complement[k]];
    }
  }

  // Hopf ideal: (π⊗π)Δ(I) = 0, ε(I) = 0, π(S(I)) = 0.
  bool hopf = true;
  for (const auto& v : q.ideal_basis) {
    if (!is_zero(h.eps(v)) || !projects_to_zero(q.projection, h.apply_antipode(v))) {
      hopf = false;
      break;
    }
    TensorElement dv = h.coproduct(v);
    std::map<std::pair<std::size_t, std::size_t>, Scalar> image;
    for (const auto& [idx, c] : dv.terms)
      for (std::size_t a = 0; a < d; ++a) {
        if (is_zero(q.projection(a, idx[0]))) continue;
        for (std::size_t b = 0; b < d; ++b)
          if (!is_zero(q.projection(b, idx[1]))) image[{a, b}] += c * q.projection(a, idx[0]) * q.projection(b, idx[1]);
      }
    for (const auto& [k, c] : image)
      if (!is_zero(c)) hopf = false;
    if (!hopf) break;
  }
  q.hopf_ideal = hopf;
  if (!hopf) return q;

  std::vector<std::string> names;
  for (auto c : q.complement) names.push_back(h.name(c));
  std::vector<SparseVec> mult(d * d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b)
      mult[a * d + b] = to_sparse(q.project(h.multiply(h.basis_vec(q.complement[a]), h.basis_vec(q.complement[b]))));
  std::vector<std::vector<CoproductTerm>> comult(d);
  std::vector<SparseVec> antipode(d);
  Vec counit(d);
  for (std::size_t a = 0; a < d; ++a) {
    Vec x = h.basis_vec(q.complement[a]);
    std::map<std::pair<std::size_t, std::size_t>, Scalar> image;
    for (const auto& [idx, c] : h.coproduct(x).terms)
      for (std::size_t l = 0; l < d; ++l) {
        if (is_zero(q.projection(l, idx[0]))) continue;
        for (std::size_t r = 0; r < d; ++r)
          if (!is_zero(q.projection(r, idx[1]))) image[{l, r}] += c * q.projection(l, idx[0]) * q.projection(r, idx[1]);
      }
    for (const auto& [k, c] : image)
      if (!is_zero(c)) comult[a].push_back({k.first, k.second, c});
    antipode[a] = to_sparse(q.project(h.apply_antipode(x)));
    counit[a] = h.counit()[q.complement[a]];
  }
  q.induced = std::make_shared<const HopfAlgebra>(std::move(names), std::move(mult), q.project(h.unit()),
                                                  std::move(comult), std::move(counit), std::move(antipode));
  return q;
}

QuotientAlgebra abelianization(const HopfAlgebra& h) {
  std::vector<Vec> commutators;
  for (std::size_t i = 0; i < h.dim(); ++i)
    for (std::size_t j = i + 1; j < h.dim(); ++j) {
      Vec c = h.multiply(h.basis_vec(i), h.basis_vec(j));
      axpy(c, Scalar(-1), h.multiply(h.basis_vec(j), h.basis_vec(i)));
      if (!is_zero(c)) commutators.push_back(std::move(c));
    }
  return quotient_by_ideal(h, commutators);
}

}  // namespace hopfgen
