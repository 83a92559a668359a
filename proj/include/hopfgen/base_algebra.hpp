#pragma once

#include "hopfgen/gb_cache.hpp"
#include "hopfgen/presented_ring.hpp"
#include "hopfgen/verdict.hpp"

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace hopfgen {

// A subalgebra of the presented ring given by labelled generators. Each label is
// also a variable of the free tag ring `tags`; witnesses are tag polynomials.
class SubalgebraSpec {
 public:
  SubalgebraSpec(PresentedRingPtr ring, std::shared_ptr<const GenericCocycle> cocycle);

  const PresentedRing& ring() const { return *ring_; }
  const PresentedRingPtr& ring_ptr() const { return ring_; }
  // Set for the generic base algebra; null for hand-built generator lists.
  const GenericCocycle* cocycle() const { return cocycle_.get(); }

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<Polynomial>& generators() const { return generators_; }  // normal forms
  const PolynomialRing& tags() const { return *tags_; }
  std::size_t index_of(const std::string& label) const;

  // Throws std::invalid_argument on a duplicate label.
  void add(const std::string& label, const Polynomial& element);

  // Image of a tag polynomial in the presented ring; `substitute_raw` skips the
  // final normal form.
  Polynomial substitute(const Polynomial& tag_poly) const;
  Polynomial substitute_raw(const Polynomial& tag_poly) const;

  // Σ x_i y_j Y_{s(i,j)} (or Y_{si(i,j)} when inverse), i.e. σ^{±1}(x,y) as a tag polynomial.
  Polynomial tag_sigma(const Vec& x, const Vec& y, bool inverse) const;

 private:
  PresentedRingPtr ring_;
  std::shared_ptr<const GenericCocycle> cocycle_;
  std::vector<std::string> labels_;
  std::vector<Polynomial> generators_;
  std::vector<Polynomial> raw_;
  std::shared_ptr<const PolynomialRing> tags_;
  std::optional<std::size_t> unit_tag_[2];
};

// B_H^α: every σ(x_i,x_j) labelled "s(x_i,x_j)" and σ^{-1}(x_i,x_j) labelled
// "si(x_i,x_j)"; when 1 is not a basis vector also "s(1,1)" and "si(1,1)".
SubalgebraSpec base_algebra_spec(std::shared_ptr<const GenericCocycle> gc);
SubalgebraSpec base_algebra_spec(PresentedRingPtr ring);  // α = ε⊗ε

enum class Membership { member, non_member, inconclusive };
const char* to_string(Membership m);

// B lies in the coinvariants of ρ: t_x ↦ t_{x1} ⊗ π(x2), t^{-1}_x ↦ t^{-1}_{x2} ⊗ π(S(x1)),
// π: H → H_ab. For group algebras this is the H_ab-grading deg t_g = ḡ.
struct GradingCheck {
  bool coinvariant = true;
  std::string detail;  // ρ(p) against p ⊗ 1 when not coinvariant
};
GradingCheck hab_coinvariance(const PresentedRing& ring, const Polynomial& p);

struct MembershipCertificate {
  Polynomial element;  // normal form
  Membership verdict = Membership::inconclusive;      // elimination and grading combined
  Membership elimination = Membership::inconclusive;  // elimination basis alone
  Polynomial witness;  // tag polynomial, set when member
  bool witness_verified = false;
  GradingCheck grading;
  GroebnerStats stats;
  std::string note;
};

// Elimination ideal J + ⟨Y_l - g_l⟩ with (T,U) ≫ Y, computed once per spec.
class MembershipEngine {
 public:
  MembershipEngine(const SubalgebraSpec& spec, const GroebnerBudget& budget = {}, GroebnerCache* cache = nullptr);

  MembershipCertificate check(const Polynomial& element) const;
  bool complete() const { return gb_.complete(); }
  const GroebnerStats& stats() const { return stats_; }

 private:
  const SubalgebraSpec& spec_;
  RingPtr ring_;
  GroebnerBasis gb_;
  GroebnerStats stats_;
};

MembershipCertificate membership(const SubalgebraSpec& spec, const Polynomial& element,
                                 const GroebnerBudget& budget = {}, GroebnerCache* cache = nullptr);

// p, p', q, q' written through σ^{±1} with explicit tag witnesses, substituted and
// compared with their closed formulas. Needs α = ε⊗ε.
Verdict verify_pq_in_B(const SubalgebraSpec& spec);

struct ModuleTerm {
  Polynomial coefficient;  // tag polynomial
  std::size_t z = 0;       // basis index of T_z
};

struct ModuleForm {
  std::vector<ModuleTerm> terms;
  bool verified = false;
};

// e = Σ_z b_z T_z with b_z polynomials in the σ^{±1} tags, built from
// t_x t_y = σ(x1,y1) t_{x2y2}, t^{-1}_x = t_{S(x1)} σ^{-1}(S(x2),x3) σ^{-1}(1,1) and
// 1 = σ^{-1}(1,1) t_1, then verified by substitution. Needs α = ε⊗ε.
// Throws Timeout when budget.max_seconds runs out, MismatchError if verification fails.
ModuleForm rewrite_to_module_form(const SubalgebraSpec& spec, const Polynomial& element,
                                  const GroebnerBudget& budget = {});

// Same, keeping product rules and substituted tag monomials between calls.
class ModuleRewriter {
 public:
  explicit ModuleRewriter(const SubalgebraSpec& spec);
  ~ModuleRewriter();
  ModuleForm rewrite(const Polynomial& element, const GroebnerBudget& budget = {});

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

std::string format_module_form(const SubalgebraSpec& spec, const ModuleForm& f);

struct QuotientRingReport {
  bool finite = false;
  bool complete = true;
  std::size_t dimension = 0;
  std::vector<std::string> standard_monomials;
  // mult[a][b] = coordinates of (standard monomial a)·(standard monomial b)
  std::vector<std::vector<Vec>> mult;
  std::size_t abelianization_dimension = 0;
  Verdict isomorphism;
  GroebnerStats stats;
};

// R/(B^+) via J + ⟨g_l - ε(g_l)⟩, compared with H_ab through x̄ ↦ class of t_x.
QuotientRingReport quotient_by_Bplus(const SubalgebraSpec& spec, const GroebnerBudget& budget = {},
                                     GroebnerCache* cache = nullptr);

// Δ(σ^{±1}(x,y)) in the coideal form; for cocommutative H also
// Δ(σ^{±1}(x,y)) = σ^{±1}(x1,y1) ⊗ σ^{±1}(x2,y2). Needs α = ε⊗ε.
Verdict coideal_check(const SubalgebraSpec& spec);

// Group algebras only: every generator is a Laurent monomial Π t_g^{e_g} with Π ḡ^{e_g} = 1 in H_ab.
Verdict verify_lattice_kernel(const SubalgebraSpec& spec);

// Group algebras: Π t_g^{e_g} as a product of σ^{±1}(a,b), found by integer elimination on the
// exponent vectors e_a + e_b - e_{ab} and verified by substitution. nullopt when the exponent is
// outside that lattice or H is not a group algebra on its basis.
std::optional<Polynomial> lattice_witness(const SubalgebraSpec& spec, const std::vector<long>& exponent);

struct TinvProbe {
  std::string grouplike;
  MembershipCertificate t;     // t_g
  MembershipCertificate tinv;  // t_g^{-1}, only probed when t_g is a member
  bool tinv_probed = false;
};

// For each grouplike basis element g: is t_g in B, and if so, is t_g^{-1}? Tries the H_ab grading and,
// on group algebras, a lattice witness before the elimination basis.
std::vector<TinvProbe> tinv_experiment(const SubalgebraSpec& spec, const GroebnerBudget& budget = {},
                                       GroebnerCache* cache = nullptr);

}  // namespace hopfgen
