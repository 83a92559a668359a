#pragma once

#include "hopfgen/linalg.hpp"
#include "hopfgen/scalar.hpp"

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hopfgen {

// Raised for inputs that are not even shaped like the thing they claim to be
// (wrong tensor sizes, non-group Cayley tables, broken coaction tensors).
class StructureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};


struct SparseEntry {
  std::size_t index;
  Scalar coef;
  bool operator==(const SparseEntry&) const = default;
};
using SparseVec = std::vector<SparseEntry>;

SparseVec to_sparse(const Vec& v);
Vec to_dense(const SparseVec& v, std::size_t n);

struct CoproductTerm {
  std::size_t left;
  std::size_t right;
  Scalar coef;
};

// Element of H^{⊗d}: basis index tuple -> coefficient, zero terms never stored.
struct TensorElement {
  std::size_t degree = 1;
  std::map<std::vector<std::size_t>, Scalar> terms;

  void add(const std::vector<std::size_t>& idx, const Scalar& c);
  bool operator==(const TensorElement&) const = default;
};

TensorElement swap_legs(const TensorElement& t);  // degree 2 only

// "2*x - 1/2*gx", "0" for the zero vector.
std::string format_vec(const std::vector<std::string>& names, const Vec& v);
// "x⊗1 + g⊗x", "0" when empty.
std::string format_tensor(const std::vector<std::string>& names, const TensorElement& t);

// Finite-dimensional Hopf algebra over Q given by structure constants on a basis.
// Construction checks shapes only; use validate_hopf for the axioms.
class HopfAlgebra {
 public:
  HopfAlgebra(std::vector<std::string> basis,
              std::vector<SparseVec> mult,  // index i*n+j: x_i x_j
              Vec unit,
              std::vector<std::vector<CoproductTerm>> comult,
              Vec counit,
              std::vector<SparseVec> antipode);

  std::size_t dim() const { return basis_.size(); }
  const std::vector<std::string>& basis() const { return basis_; }
  const std::string& name(std::size_t i) const { return basis_.at(i); }
  std::size_t index_of(const std::string& label) const;

  const SparseVec& mult(std::size_t i, std::size_t j) const { return mult_[i * dim() + j]; }
  const Vec& unit() const { return unit_; }
  const std::vector<CoproductTerm>& comult(std::size_t i) const { return comult_[i]; }
  const Vec& counit() const { return counit_; }
  const SparseVec& antipode(std::size_t i) const { return antipode_[i]; }

  Vec basis_vec(std::size_t i) const { return unit_vec(dim(), i); }
  Vec multiply(const Vec& a, const Vec& b) const;
  Scalar eps(const Vec& v) const;
  Vec apply_antipode(const Vec& v) const;
  TensorElement coproduct(const Vec& v) const;

  bool is_commutative() const;
  bool is_cocommutative() const;

  // Index of the unit when it is a basis vector; needed by formulas that
  // treat "1" as a basis element.
  std::optional<std::size_t> unit_index() const;

  const std::vector<SparseVec>& mult_table() const { return mult_; }
  const std::vector<std::vector<CoproductTerm>>& comult_table() const { return comult_; }
  const std::vector<SparseVec>& antipode_table() const { return antipode_; }

 private:
  std::vector<std::string> basis_;
  std::vector<SparseVec> mult_;
  Vec unit_;
  std::vector<std::vector<CoproductTerm>> comult_;
  Vec counit_;
  std::vector<SparseVec> antipode_;
};

struct AxiomResult {
  std::string axiom;
  bool passed = true;
  std::vector<std::size_t> witness;  // failing basis tuple
  std::string lhs;                   // both sides at the witness
  std::string rhs;
  std::string detail;
};

struct ValidationReport {
  std::vector<AxiomResult> axioms;
  bool ok() const;
  const AxiomResult* first_failure() const;
  std::string summary(const HopfAlgebra& h) const;
};

// Axiom names, in report order.
inline constexpr const char* kAxiomAssociativity = "associativity";
inline constexpr const char* kAxiomUnit = "unit";
inline constexpr const char* kAxiomCoassociativity = "coassociativity";
inline constexpr const char* kAxiomCounit = "counit";
inline constexpr const char* kAxiomComultMultiplicative = "comult-multiplicative";
inline constexpr const char* kAxiomComultUnital = "comult-unital";
inline constexpr const char* kAxiomCounitMultiplicative = "counit-multiplicative";
inline constexpr const char* kAxiomCounitUnital = "counit-unital";
inline constexpr const char* kAxiomAntipodeLeft = "antipode-left";
inline constexpr const char* kAxiomAntipodeRight = "antipode-right";

ValidationReport validate_hopf(const HopfAlgebra& h);

// Δ^{(d-1)}(v) in H^{⊗d}; expands the leftmost leg at each step.
TensorElement sweedler_expand(const HopfAlgebra& h, const Vec& v, std::size_t d);
// Same, expanding the rightmost leg; used to check both bracketings agree.
TensorElement sweedler_expand_right(const HopfAlgebra& h, const Vec& v, std::size_t d);

struct CayleyTable {
  std::vector<std::string> names;
  std::vector<std::vector<std::size_t>> table;  // table[a][b] = index of a*b

  std::size_t order() const { return names.size(); }
  std::size_t identity() const;
  std::size_t inverse(std::size_t g) const;
};

// Throws StructureError naming the failing triple/element when the table is not a group.
void check_group(const CayleyTable& g);

CayleyTable cyclic_group(std::size_t n, std::vector<std::string> names = {});
CayleyTable klein_four_group();
CayleyTable symmetric_group_3();

HopfAlgebra build_group_algebra(const CayleyTable& g);
HopfAlgebra build_dual_group_algebra(const CayleyTable& g);
HopfAlgebra sweedler_algebra();

// Builtin fixtures: "z2", "z3", "klein4", "s3", "dual_z2", "dual_s3", "sweedler".
std::vector<std::string> catalog_names();
HopfAlgebra catalog(const std::string& name);

struct QuotientAlgebra {
  std::shared_ptr<const HopfAlgebra> parent;
  std::vector<Vec> ideal_basis;         // reduced echelon rows spanning I
  std::vector<std::size_t> complement;  // parent basis indices whose images form a basis of H/I
  Matrix projection;                    // dim(H/I) x dim(H)
  bool hopf_ideal = false;
  std::shared_ptr<const HopfAlgebra> induced;  // set when hopf_ideal

  std::size_t dim() const { return complement.size(); }
  Vec project(const Vec& v) const { return projection.apply(v); }
};

// Smallest two-sided ideal containing all commutators; quotient carries the induced Hopf structure.
QuotientAlgebra abelianization(const HopfAlgebra& h);

// Quotient by the two-sided ideal generated by `generators`; induced structure filled in
// only when the ideal turns out to be a Hopf ideal.
QuotientAlgebra quotient_by_ideal(const HopfAlgebra& h, const std::vector<Vec>& generators);

}  // namespace hopfgen
