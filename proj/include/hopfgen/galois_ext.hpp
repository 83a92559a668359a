#pragma once

#include "hopfgen/cocycle.hpp"
#include "hopfgen/presented_ring.hpp"
#include "hopfgen/verdict.hpp"

#include <string>
#include <vector>

namespace hopfgen {

// Σ b_i ⊗ x_i in B ⊗ H; legs[i] is b_i in normal form.
struct ExtensionElement {
  std::vector<Polynomial> legs;
};

// b ⊗ x_i
ExtensionElement ext_basis(const PresentedRing& ring, std::size_t i, const Polynomial& b);
ExtensionElement ext_basis(const PresentedRing& ring, std::size_t i);  // b = 1

// "T_g^2*U_e ⊗ e + ..."; "0" for zero.
std::string format_extension(const PresentedRing& ring, const ExtensionElement& u);
bool ext_equal(const PresentedRing& ring, const ExtensionElement& u, const ExtensionElement& v);

// (b⊗x)(c⊗y) = bc σ(x1,y1) ⊗ x2y2, extended bilinearly.
ExtensionElement ext_multiply(const GenericCocycle& gc, const ExtensionElement& u, const ExtensionElement& v);

// σ^{-1}(1,1) ⊗ 1. The generic σ is not normalized (σ(1,1) = t_1), so 1⊗1 is
// not the unit; (σ^{-1}(1,1)⊗1)(1⊗x) = σ^{-1}(1,1) t_1 ⊗ x = 1⊗x.
ExtensionElement ext_unit(const GenericCocycle& gc);

// Associativity on all basis triples and ext_unit as a two-sided unit.
Verdict check_extension_algebra(const GenericCocycle& gc);

// e_λ applied to the ring legs of the product rule: the table of ^βH with
// β = specialize(gc, λ). Compared with twist_algebra(h, β) (for λ = ε this is ^αH);
// throws MismatchError when they differ, NotInvertible if λ is not invertible.
TwistedAlgebra specialize_extension(const GenericCocycle& gc, const LinearForm& lam);

// With L = ^αH^{α^{-1}}:
//   σ_α(x,y) = σ_ε^L(x1,y1) α(x2,y2),  σ_α^{-1}(x,y) = α^{-1}(x1,y1) σ_ε^{L,-1}(x2,y2),
//   (1⊗x)(1⊗y) in A_H^α equals the α-twisted product in A_L^ε,
// and for cocommutative H: L = H as algebras, σ_ε^L = σ_ε^H, and σ_α^{±1}(g,h) = α^{±1}(g,h) σ_ε^{±1}(g,h)
// on grouplike basis pairs.
// Throws PreconditionViolated if α is not a two-cocycle, NotInvertible if not invertible.
Verdict verify_reduction(const HopfAlgebra& h, const BilinearForm& alpha, const GroebnerBudget& budget = {},
                         GroebnerCache* cache = nullptr);

}  // namespace hopfgen
