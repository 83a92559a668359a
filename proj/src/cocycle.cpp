#include "hopfgen/cocycle.hpp"

#include <array>
#include <map>
#include <optional>
#include <sstream>

namespace hopfgen {

Scalar LinearForm::operator()(const Vec& x) const {
  Scalar s = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!is_zero(x[i])) s += x[i] * values[i];
  return s;
}

Scalar BilinearForm::operator()(const Vec& x, const Vec& y) const {
  Scalar s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (is_zero(x[i])) continue;
    for (std::size_t j = 0; j < y.size(); ++j)
      if (!is_zero(y[j])) s += x[i] * y[j] * values(i, j);
  }
  return s;
}

LinearForm counit_form(const HopfAlgebra& h) { return LinearForm{h.counit()}; }

BilinearForm trivial_cocycle(const HopfAlgebra& h) {
  const std::size_t n = h.dim();
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = h.counit()[i] * h.counit()[j];
  return BilinearForm{m};
}

namespace {

// α evaluated on a basis element against a vector, or a vector against a basis element.
Scalar form_vec_right(const BilinearForm& a, std::size_t i, const Vec& y) {
  Scalar s = 0;
  for (std::size_t j = 0; j < y.size(); ++j)
    if (!is_zero(y[j])) s += a.at(i, j) * y[j];
  return s;
}

Scalar form_vec_left(const BilinearForm& a, const Vec& x, std::size_t j) {
  Scalar s = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!is_zero(x[i])) s += x[i] * a.at(i, j);
  return s;
}

Vec basis_product(const HopfAlgebra& h, std::size_t i, std::size_t j) { return to_dense(h.mult(i, j), h.dim()); }

std::string scalar_text(const Scalar& s) { return to_string(s); }

}  // namespace

LinearForm convolve(const HopfAlgebra& h, const LinearForm& f, const LinearForm& g) {
  LinearForm out{zero_vec(h.dim())};
  for (std::size_t i = 0; i < h.dim(); ++i)
    for (const auto& t : h.comult(i)) out.values[i] += t.coef * f.values[t.left] * g.values[t.right];
  return out;
}

BilinearForm convolve(const HopfAlgebra& h, const BilinearForm& f, const BilinearForm& g) {
  const std::size_t n = h.dim();
  BilinearForm out{Matrix(n, n)};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& s : h.comult(i))
        for (const auto& t : h.comult(j)) out.values(i, j) += s.coef * t.coef * f.at(s.left, t.left) * g.at(s.right, t.right);
  return out;
}

LinearForm convolution_inverse(const HopfAlgebra& h, const LinearForm& f) {
  const std::size_t n = h.dim();
  // (f*g)(x_i) = Σ c f(x_l) g(x_r) = ε(x_i): unknowns g_r
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& t : h.comult(i)) m(i, t.right) += t.coef * f.values[t.left];
  auto sol = solve(m, h.counit());
  if (!sol) throw NotInvertible("linear form is not convolution-invertible");
  LinearForm g{*sol};
  if (convolve(h, f, g).values != h.counit() || convolve(h, g, f).values != h.counit())
    throw NotInvertible("linear form has only a one-sided convolution inverse");
  return g;
}

BilinearForm convolution_inverse(const HopfAlgebra& h, const BilinearForm& f) {
  const std::size_t n = h.dim();
  Matrix m(n * n, n * n);
  Vec rhs(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      rhs[i * n + j] = h.counit()[i] * h.counit()[j];
      for (const auto& s : h.comult(i))
        for (const auto& t : h.comult(j)) m(i * n + j, s.right * n + t.right) += s.coef * t.coef * f.at(s.left, t.left);
    }
  auto sol = solve(m, rhs);
  if (!sol) throw NotInvertible("bilinear form is not convolution-invertible");
  BilinearForm g{Matrix(n, n)};
  for (std::size_t k = 0; k < n * n; ++k) g.values(k / n, k % n) = (*sol)[k];
  auto unit = trivial_cocycle(h);
  if (!(convolve(h, f, g) == unit) || !(convolve(h, g, f) == unit))
    throw NotInvertible("bilinear form has only a one-sided convolution inverse");
  return g;
}

Verdict is_two_cocycle(const HopfAlgebra& h, const BilinearForm& a) {
  const std::size_t n = h.dim();
  Verdict v;
  v.check = "two-cocycle";
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        ++v.cases;
        Scalar lhs = 0, rhs = 0;
        for (const auto& s : h.comult(i))
          for (const auto& t : h.comult(j))
            lhs += s.coef * t.coef * a.at(s.left, t.left) * form_vec_left(a, basis_product(h, s.right, t.right), k);
        for (const auto& s : h.comult(j))
          for (const auto& t : h.comult(k))
            rhs += s.coef * t.coef * a.at(s.left, t.left) * form_vec_right(a, i, basis_product(h, s.right, t.right));
        if (lhs != rhs) {
          v.fail({h.name(i), h.name(j), h.name(k)}, scalar_text(lhs), scalar_text(rhs));
          return v;
        }
      }
  return v;
}

Verdict is_lazy(const HopfAlgebra& h, const BilinearForm& a) {
  const std::size_t n = h.dim();
  Verdict v;
  v.check = "lazy";
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      ++v.cases;
      Vec lhs = zero_vec(n), rhs = zero_vec(n);
      for (const auto& s : h.comult(i))
        for (const auto& t : h.comult(j)) {
          axpy(lhs, s.coef * t.coef * a.at(s.left, t.left), basis_product(h, s.right, t.right));
          axpy(rhs, s.coef * t.coef * a.at(s.right, t.right), basis_product(h, s.left, t.left));
        }
      if (lhs != rhs) {
        v.fail({h.name(i), h.name(j)}, format_vec(h.basis(), lhs), format_vec(h.basis(), rhs));
        return v;
      }
    }
  return v;
}

// ---------------------------------------------------------------------------

namespace {

Vec multiply_with(const std::vector<SparseVec>& mult, std::size_t n, const Vec& a, const Vec& b) {
  Vec out = zero_vec(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (is_zero(a[i])) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (is_zero(b[j])) continue;
      Scalar c = a[i] * b[j];
      for (const auto& e : mult[i * n + j]) out[e.index] += c * e.coef;
    }
  }
  return out;
}

bool table_associative(const std::vector<SparseVec>& mult, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vec x = unit_vec(n, i), y = unit_vec(n, j), z = unit_vec(n, k);
        if (multiply_with(mult, n, multiply_with(mult, n, x, y), z) != multiply_with(mult, n, x, multiply_with(mult, n, y, z)))
          return false;
      }
  return true;
}

// Solves u x_j = x_j u = x_j for all j.
std::optional<Vec> table_unit(const std::vector<SparseVec>& mult, std::size_t n) {
  Matrix sys(2 * n * n, n);
  Vec rhs = zero_vec(2 * n * n);
  for (std::size_t j = 0; j < n; ++j) {
    rhs[j * n + j] = 1;
    rhs[n * n + j * n + j] = 1;
    for (std::size_t i = 0; i < n; ++i) {
      for (const auto& e : mult[i * n + j]) sys(j * n + e.index, i) += e.coef;
      for (const auto& e : mult[j * n + i]) sys(n * n + j * n + e.index, i) += e.coef;
    }
  }
  return solve(sys, rhs);
}

}  // namespace

Vec TwistedAlgebra::multiply(const Vec& a, const Vec& b) const { return multiply_with(mult, dim(), a, b); }

bool TwistedAlgebra::same_table(const TwistedAlgebra& other) const {
  if (dim() != other.dim()) return false;
  for (std::size_t k = 0; k < mult.size(); ++k)
    if (to_dense(mult[k], dim()) != to_dense(other.mult[k], dim())) return false;
  return true;
}

TwistedAlgebra twist_algebra(const HopfAlgebra& h, const BilinearForm& a) {
  const std::size_t n = h.dim();
  TwistedAlgebra t;
  t.base = std::make_shared<const HopfAlgebra>(h);
  t.form = a;
  t.mult.resize(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec acc = zero_vec(n);
      for (const auto& s : h.comult(i))
        for (const auto& u : h.comult(j)) axpy(acc, s.coef * u.coef * a.at(s.left, u.left), basis_product(h, s.right, u.right));
      t.mult[i * n + j] = to_sparse(acc);
    }
  t.cocycle_verified = is_two_cocycle(h, a).passed();
  t.associative = table_associative(t.mult, n);
  auto unit = table_unit(t.mult, n);
  t.unital = unit.has_value();
  t.unit = unit ? *unit : h.unit();
  return t;
}

HopfAlgebra deform_hopf(const HopfAlgebra& h, const BilinearForm& a) {
  const std::size_t n = h.dim();
  auto inv = convolution_inverse(h, a);
  if (auto v = is_two_cocycle(h, a); !v.passed()) throw PreconditionViolated("deform_hopf: " + v.describe());

  std::vector<TensorElement> d3;
  for (std::size_t i = 0; i < n; ++i) d3.push_back(sweedler_expand(h, h.basis_vec(i), 3));
  std::vector<SparseVec> mult(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec acc = zero_vec(n);
      for (const auto& [x, cx] : d3[i].terms)
        for (const auto& [y, cy] : d3[j].terms) {
          Scalar c = cx * cy * a.at(x[0], y[0]) * inv.at(x[2], y[2]);
          if (!is_zero(c)) axpy(acc, c, basis_product(h, x[1], y[1]));
        }
      mult[i * n + j] = to_sparse(acc);
    }

  // S * id = ε·1 in End(L): unknowns s(l,j) = coefficient of x_l in S(x_j).
  Matrix sys(n * n, n * n);
  Vec rhs(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t m = 0; m < n; ++m) rhs[i * n + m] = h.counit()[i] * h.unit()[m];
    for (const auto& t : h.comult(i))
      for (std::size_t l = 0; l < n; ++l)
        for (const auto& e : mult[l * n + t.right]) sys(i * n + e.index, l * n + t.left) += t.coef * e.coef;
  }
  auto sol = solve(sys, rhs);
  if (!sol) throw AntipodeMissing("deform_hopf: no convolution inverse of the identity");
  std::vector<SparseVec> antipode(n);
  for (std::size_t j = 0; j < n; ++j) {
    Vec col = zero_vec(n);
    for (std::size_t l = 0; l < n; ++l) col[l] = (*sol)[l * n + j];
    antipode[j] = to_sparse(col);
  }
  HopfAlgebra l(h.basis(), std::move(mult), h.unit(), h.comult_table(), h.counit(), std::move(antipode));
  auto report = validate_hopf(l);
  if (!report.ok()) throw StructureError("deformed algebra fails validation:\n" + report.summary(l));
  return l;
}

BilinearForm cohomologous_transform(const HopfAlgebra& h, const BilinearForm& a, const LinearForm& lam) {
  const std::size_t n = h.dim();
  auto inv = convolution_inverse(h, lam);
  std::vector<TensorElement> d3;
  for (std::size_t i = 0; i < n; ++i) d3.push_back(sweedler_expand(h, h.basis_vec(i), 3));
  BilinearForm b{Matrix(n, n)};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& [x, cx] : d3[i].terms)
        for (const auto& [y, cy] : d3[j].terms) {
          Scalar c = cx * cy * lam.values[x[0]] * lam.values[y[0]] * a.at(x[1], y[1]);
          if (!is_zero(c)) b.values(i, j) += c * inv(basis_product(h, x[2], y[2]));
        }
  return b;
}

Matrix cohomology_isomorphism(const HopfAlgebra& h, const LinearForm& lam) {
  const std::size_t n = h.dim();
  auto inv = convolution_inverse(h, lam);
  Matrix f(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& t : h.comult(i)) f(t.right, i) += t.coef * inv.values[t.left];
  return f;
}

Matrix deformation_isomorphism(const HopfAlgebra& h, const LinearForm& lam) {
  const std::size_t n = h.dim();
  auto inv = convolution_inverse(h, lam);
  Matrix f(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& [x, c] : sweedler_expand(h, h.basis_vec(i), 3).terms) f(x[1], i) += c * inv.values[x[0]] * lam.values[x[2]];
  return f;
}

Verdict is_algebra_map(const std::vector<std::string>& names, const std::vector<SparseVec>& src_mult, const Vec& src_unit,
                       const std::vector<SparseVec>& dst_mult, const Vec& dst_unit, const Matrix& f) {
  const std::size_t n = names.size();
  Verdict v;
  v.check = "algebra-map";
  ++v.cases;
  if (f.apply(src_unit) != dst_unit) {
    v.fail({"1"}, format_vec(names, f.apply(src_unit)), format_vec(names, dst_unit));
    return v;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      ++v.cases;
      Vec lhs = f.apply(to_dense(src_mult[i * n + j], n));
      Vec rhs = multiply_with(dst_mult, n, f.col(i), f.col(j));
      if (lhs != rhs) {
        v.fail({names[i], names[j]}, format_vec(names, lhs), format_vec(names, rhs));
        return v;
      }
    }
  return v;
}

// ---------------------------------------------------------------------------
// Comodule algebras

Vec ComoduleAlgebra::multiply(const Vec& a, const Vec& b) const { return multiply_with(mult, dim(), a, b); }

namespace {

using CoactedVec = std::map<std::pair<std::size_t, std::size_t>, Scalar>;  // (a, h) -> coef

CoactedVec coact(const ComoduleAlgebra& A, const Vec& v) {
  CoactedVec out;
  for (std::size_t i = 0; i < A.dim(); ++i) {
    if (is_zero(v[i])) continue;
    for (const auto& t : A.coaction[i]) out[{t.a, t.h}] += v[i] * t.coef;
  }
  std::erase_if(out, [](const auto& kv) { return is_zero(kv.second); });
  return out;
}

}  // namespace

void check_comodule_algebra(const HopfAlgebra& h, const ComoduleAlgebra& A) {
  const std::size_t m = A.dim(), n = h.dim();
  if (A.mult.size() != m * m || A.unit.size() != m || A.coaction.size() != m)
    throw StructureError("comodule algebra: dimension mismatch");
  for (const auto& terms : A.coaction)
    for (const auto& t : terms)
      if (t.a >= m || t.h >= n) throw StructureError("comodule algebra: coaction index out of range");
  auto bad = [&](const std::string& axiom, const std::string& where) {
    throw StructureError("comodule algebra violates " + axiom + " at " + where);
  };
  for (std::size_t i = 0; i < m; ++i) {
    // (ρ⊗id)ρ = (id⊗Δ)ρ
    std::map<std::array<std::size_t, 3>, Scalar> lhs, rhs;
    for (const auto& t : A.coaction[i]) {
      for (const auto& u : A.coaction[t.a]) lhs[{u.a, u.h, t.h}] += t.coef * u.coef;
      for (const auto& c : h.comult(t.h)) rhs[{t.a, c.left, c.right}] += t.coef * c.coef;
    }
    std::erase_if(lhs, [](const auto& kv) { return is_zero(kv.second); });
    std::erase_if(rhs, [](const auto& kv) { return is_zero(kv.second); });
    if (lhs != rhs) bad("coassociativity", A.basis[i]);
    Vec back = zero_vec(m);
    for (const auto& t : A.coaction[i]) back[t.a] += t.coef * h.counit()[t.h];
    if (back != unit_vec(m, i)) bad("counit", A.basis[i]);
  }
  CoactedVec unit_image = coact(A, A.unit);
  CoactedVec expected_unit;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (!is_zero(A.unit[i]) && !is_zero(h.unit()[k])) expected_unit[{i, k}] += A.unit[i] * h.unit()[k];
  if (unit_image != expected_unit) bad("unit", "1");
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      CoactedVec lhs = coact(A, to_dense(A.mult[i * m + j], m));
      CoactedVec rhs;
      for (const auto& s : A.coaction[i])
        for (const auto& t : A.coaction[j])
          for (const auto& ea : A.mult[s.a * m + t.a])
            for (const auto& eh : h.mult(s.h, t.h)) rhs[{ea.index, eh.index}] += s.coef * t.coef * ea.coef * eh.coef;
      std::erase_if(rhs, [](const auto& kv) { return is_zero(kv.second); });
      if (lhs != rhs) bad("multiplicativity", "(" + A.basis[i] + "," + A.basis[j] + ")");
    }
}

ComoduleAlgebra regular_comodule_algebra(const HopfAlgebra& h) {
  ComoduleAlgebra A;
  A.basis = h.basis();
  A.mult = h.mult_table();
  A.unit = h.unit();
  A.coaction.resize(h.dim());
  for (std::size_t i = 0; i < h.dim(); ++i)
    for (const auto& t : h.comult(i)) A.coaction[i].push_back({t.left, t.right, t.coef});
  return A;
}

ComoduleAlgebra as_comodule_algebra(const TwistedAlgebra& t) {
  ComoduleAlgebra A = regular_comodule_algebra(*t.base);
  A.mult = t.mult;
  A.unit = t.unit;
  return A;
}

ComoduleAlgebra twist_comodule_algebra(const HopfAlgebra& h, const ComoduleAlgebra& A, const BilinearForm& a) {
  check_comodule_algebra(h, A);
  const std::size_t m = A.dim();
  ComoduleAlgebra out = A;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      Vec acc = zero_vec(m);
      for (const auto& s : A.coaction[i])
        for (const auto& t : A.coaction[j]) {
          Scalar c = s.coef * t.coef * a.at(s.h, t.h);
          if (!is_zero(c)) axpy(acc, c, to_dense(A.mult[s.a * m + t.a], m));
        }
      out.mult[i * m + j] = to_sparse(acc);
    }
  return out;
}

std::vector<Vec> coinvariants(const HopfAlgebra& h, const ComoduleAlgebra& A) {
  const std::size_t m = A.dim(), n = h.dim();
  // rows indexed by (a, k): coefficient of a⊗x_k in ρ(v) - v⊗1
  Matrix sys(m * n, m);
  for (std::size_t i = 0; i < m; ++i) {
    for (const auto& t : A.coaction[i]) sys(t.a * n + t.h, i) += t.coef;
    for (std::size_t k = 0; k < n; ++k) sys(i * n + k, i) -= h.unit()[k];
  }
  return nullspace(sys);
}

bool same_algebra(const ComoduleAlgebra& a, const ComoduleAlgebra& b) {
  if (a.dim() != b.dim() || a.unit != b.unit) return false;
  for (std::size_t k = 0; k < a.mult.size(); ++k)
    if (to_dense(a.mult[k], a.dim()) != to_dense(b.mult[k], b.dim())) return false;
  return true;
}

// ---------------------------------------------------------------------------

BilinearForm klein_four_sign_cocycle(const HopfAlgebra& klein4) {
  if (klein4.basis() != std::vector<std::string>{"b00", "b10", "b01", "b11"})
    throw std::invalid_argument("klein_four_sign_cocycle expects the catalog Klein-four basis");
  // index = i + 2j for (i,j)
  BilinearForm a{Matrix(4, 4)};
  for (std::size_t x = 0; x < 4; ++x)
    for (std::size_t y = 0; y < 4; ++y) {
      std::size_t j = x / 2, k = y % 2;
      a.values(x, y) = (j * k) % 2 ? -1 : 1;
    }
  return a;
}

BilinearForm s3_sign_cocycle(const HopfAlgebra& s3) {
  auto odd = [&](std::size_t i) {
    const auto& n = s3.name(i);
    return n == "(01)" || n == "(02)" || n == "(12)";
  };
  if (s3.dim() != 6) throw std::invalid_argument("s3_sign_cocycle expects the catalog S3 basis");
  BilinearForm a{Matrix(6, 6)};
  for (std::size_t x = 0; x < 6; ++x)
    for (std::size_t y = 0; y < 6; ++y) a.values(x, y) = odd(x) && odd(y) ? -1 : 1;
  return a;
}

}  // namespace hopfgen
