#pragma once

#include "hopfgen/hopf.hpp"
#include "hopfgen/verdict.hpp"

#include <memory>
#include <string>
#include <vector>

namespace hopfgen {

// λ(x_i) on the basis.
struct LinearForm {
  Vec values;

  Scalar operator()(const Vec& x) const;
  bool operator==(const LinearForm&) const = default;
};

// α(x_i, x_j) on basis pairs.
struct BilinearForm {
  Matrix values;

  Scalar operator()(const Vec& x, const Vec& y) const;
  const Scalar& at(std::size_t i, std::size_t j) const { return values(i, j); }
  bool operator==(const BilinearForm&) const = default;
};

LinearForm counit_form(const HopfAlgebra& h);
BilinearForm trivial_cocycle(const HopfAlgebra& h);  // ε⊗ε

// (f*g)(x) = f(x_1) g(x_2), and the two-variable analogue.
LinearForm convolve(const HopfAlgebra& h, const LinearForm& f, const LinearForm& g);
BilinearForm convolve(const HopfAlgebra& h, const BilinearForm& f, const BilinearForm& g);

// Exact linear solve, verified on both sides. Throws NotInvertible.
LinearForm convolution_inverse(const HopfAlgebra& h, const LinearForm& f);
BilinearForm convolution_inverse(const HopfAlgebra& h, const BilinearForm& f);

// α(x_1,y_1) α(x_2 y_2, z) = α(y_1,z_1) α(x, y_2 z_2) on every basis triple.
Verdict is_two_cocycle(const HopfAlgebra& h, const BilinearForm& a);

// α(x_1,y_1) x_2 y_2 = α(x_2,y_2) x_1 y_1 on every basis pair.
Verdict is_lazy(const HopfAlgebra& h, const BilinearForm& a);

struct TwistedAlgebra {
  std::shared_ptr<const HopfAlgebra> base;
  BilinearForm form;
  std::vector<SparseVec> mult;  // index i*n+j
  Vec unit;                     // two-sided unit; equals 1 of H when α is normalized
  bool cocycle_verified = false;
  bool associative = false;
  bool unital = false;

  std::size_t dim() const { return base->dim(); }
  Vec multiply(const Vec& a, const Vec& b) const;
  bool same_table(const TwistedAlgebra& other) const;
};

// ^αH. Non-cocycles are accepted; associativity and unit are always recomputed.
TwistedAlgebra twist_algebra(const HopfAlgebra& h, const BilinearForm& a);

// L = ^αH^{α^{-1}}: same coalgebra, product α(x_1,y_1) x_2 y_2 α^{-1}(x_3,y_3), antipode
// solved as the convolution inverse of id. Throws NotInvertible, AntipodeMissing,
// PreconditionViolated (α not a cocycle) or StructureError (result fails validation).
HopfAlgebra deform_hopf(const HopfAlgebra& h, const BilinearForm& a);

// β(x,y) = λ(x_1) λ(y_1) α(x_2,y_2) λ^{-1}(x_3 y_3). Throws NotInvertible.
BilinearForm cohomologous_transform(const HopfAlgebra& h, const BilinearForm& a, const LinearForm& lam);

// Matrix of x ↦ λ^{-1}(x_1) x_2 (columns are images of basis vectors).
Matrix cohomology_isomorphism(const HopfAlgebra& h, const LinearForm& lam);

// Matrix of x ↦ λ^{-1}(x_1) x_2 λ(x_3), the Hopf isomorphism between deformations
// by cohomologous cocycles.
Matrix deformation_isomorphism(const HopfAlgebra& h, const LinearForm& lam);

// f(x y) = f(x) f(y) on basis pairs and f(1) = 1, where products come from the given tables.
Verdict is_algebra_map(const std::vector<std::string>& names, const std::vector<SparseVec>& src_mult,
                       const Vec& src_unit, const std::vector<SparseVec>& dst_mult, const Vec& dst_unit,
                       const Matrix& f);

// Right H-comodule algebra A with coaction a_i ↦ Σ coef a_j ⊗ x_k.
struct CoactionTerm {
  std::size_t a;
  std::size_t h;
  Scalar coef;
};

struct ComoduleAlgebra {
  std::vector<std::string> basis;
  std::vector<SparseVec> mult;  // index i*m+j
  Vec unit;
  std::vector<std::vector<CoactionTerm>> coaction;

  std::size_t dim() const { return basis.size(); }
  Vec multiply(const Vec& a, const Vec& b) const;
};

// Throws StructureError naming the violated axiom (coassociativity, counit,
// multiplicativity, unit) and basis element.
void check_comodule_algebra(const HopfAlgebra& h, const ComoduleAlgebra& A);

ComoduleAlgebra regular_comodule_algebra(const HopfAlgebra& h);
ComoduleAlgebra as_comodule_algebra(const TwistedAlgebra& t);

// a *_α b = a_0 b_0 α(a_1, b_1), same coaction.
ComoduleAlgebra twist_comodule_algebra(const HopfAlgebra& h, const ComoduleAlgebra& A, const BilinearForm& a);

// Basis of A^{co-H} = {a : ρ(a) = a ⊗ 1}.
std::vector<Vec> coinvariants(const HopfAlgebra& h, const ComoduleAlgebra& A);

bool same_algebra(const ComoduleAlgebra& a, const ComoduleAlgebra& b);

// Fixture cocycles on the catalog group algebras.
// klein4-sign: α((i,j),(k,l)) = (-1)^{jk}.  s3-sign: -1 iff both arguments are odd.
BilinearForm klein_four_sign_cocycle(const HopfAlgebra& klein4);
BilinearForm s3_sign_cocycle(const HopfAlgebra& s3);

}  // namespace hopfgen
