#pragma once

#include "hopfgen/cocycle.hpp"
#include "hopfgen/gb_cache.hpp"
#include "hopfgen/groebner.hpp"
#include "hopfgen/hopf.hpp"
#include "hopfgen/verdict.hpp"

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hopfgen {

class WellDefinednessFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// k[T_1..T_n, U_1..U_n]/J with J generated by
//   Σ c^{jk}_i T_j U_k - ε(x_i)   and   Σ c^{jk}_i U_j T_k - ε(x_i),
// where Δ(x_i) = Σ c^{jk}_i x_j ⊗ x_k. T_i stands for t_{x_i}, U_i for t^{-1}_{x_i}.
// Order: degrevlex with T_1 < ... < T_n < U_1 < ... < U_n.
// Elements are plain polynomials kept in normal form modulo the reduced basis.
class PresentedRing {
 public:
  static std::shared_ptr<const PresentedRing> build(std::shared_ptr<const HopfAlgebra> h,
                                                    const GroebnerBudget& budget = {},
                                                    GroebnerCache* cache = nullptr);
  static std::shared_ptr<const PresentedRing> build(const HopfAlgebra& h, const GroebnerBudget& budget = {},
                                                    GroebnerCache* cache = nullptr);

  const HopfAlgebra& hopf() const { return *hopf_; }
  const std::shared_ptr<const HopfAlgebra>& hopf_ptr() const { return hopf_; }
  std::size_t n() const { return hopf_->dim(); }
  const PolynomialRing& poly() const { return *ring_; }
  const RingPtr& poly_ptr() const { return ring_; }
  const GroebnerBasis& groebner() const { return gb_; }
  const GroebnerStats& stats() const { return stats_; }
  bool complete() const { return gb_.complete(); }

  // Generators of J after dropping zeros and exact duplicates, first family first.
  const std::vector<Polynomial>& relations() const { return relations_; }
  // Both families as written, before deduplication.
  static std::vector<Polynomial> relation_families(const HopfAlgebra& h, const PolynomialRing& ring);

  std::size_t T(std::size_t i) const { return i; }
  std::size_t U(std::size_t i) const { return n() + i; }

  Polynomial t_of(const Vec& v) const;
  Polynomial tinv_of(const Vec& v) const;

  Polynomial nf(const Polynomial& p) const { return gb_.normal_form(p); }
  Polynomial mul(const Polynomial& a, const Polynomial& b) const { return nf(ring_->mul(a, b)); }
  bool equal(const Polynomial& a, const Polynomial& b) const { return nf(ring_->sub(a, b)).is_zero(); }

  std::string format(const Polynomial& p) const { return ring_->format(p); }
  Polynomial parse(std::string_view text) const { return nf(ring_->parse(text)); }

  // Ring morphism T_i ↦ t[i], U_i ↦ u[i] into Q.
  Scalar evaluate(const Polynomial& p, const Vec& t, const Vec& u) const;

 private:
  PresentedRing(std::shared_ptr<const HopfAlgebra> h, RingPtr ring, std::vector<Polynomial> relations,
                GroebnerBasis gb, GroebnerStats stats);

  std::shared_ptr<const HopfAlgebra> hopf_;
  RingPtr ring_;
  std::vector<Polynomial> relations_;
  GroebnerBasis gb_;
  GroebnerStats stats_;
};

using PresentedRingPtr = std::shared_ptr<const PresentedRing>;

// Two copies of the presented ring in disjoint variables T,U,T',U'; models
// R ⊗ R. The union of the two reduced bases is already a reduced basis of J + J'.
class DoubledRing {
 public:
  explicit DoubledRing(PresentedRingPtr base);

  const PresentedRing& base() const { return *base_; }
  const PolynomialRing& poly() const { return *ring_; }
  const RingPtr& poly_ptr() const { return ring_; }

  Polynomial left(const Polynomial& p) const;   // p ⊗ 1
  Polynomial right(const Polynomial& p) const;  // 1 ⊗ p
  Polynomial tensor(const Polynomial& a, const Polynomial& b) const;

  Polynomial nf(const Polynomial& p) const { return gb_.normal_form(p); }
  bool equal(const Polynomial& a, const Polynomial& b) const { return nf(ring_->sub(a, b)).is_zero(); }
  std::string format(const Polynomial& p) const { return ring_->format(p); }

 private:
  PresentedRingPtr base_;
  RingPtr ring_;
  GroebnerBasis gb_;
  std::vector<std::size_t> to_left_, to_right_;
};

// Δ(t_x) = t_{x1} ⊗ t_{x2}, Δ(t^{-1}_x) = t^{-1}_{x2} ⊗ t^{-1}_{x1}, ε(t_x) = ε(t^{-1}_x) = ε(x),
// S(t_x) = t^{-1}_x, S(t^{-1}_x) = t_x.
class HopfMaps {
 public:
  explicit HopfMaps(PresentedRingPtr ring);

  const DoubledRing& doubled() const { return doubled_; }

  Polynomial delta(const Polynomial& p) const;
  Polynomial delta_raw(const Polynomial& p) const;  // not reduced
  Scalar eps(const Polynomial& p) const;
  Polynomial antipode(const Polynomial& p) const;

  // Throws WellDefinednessFailure naming the first relation whose image is nonzero.
  void check_well_defined() const;

 private:
  PresentedRingPtr ring_;
  DoubledRing doubled_;
  std::vector<Polynomial> delta_images_;
  std::vector<Polynomial> swap_images_;
};

// Constructed and checked.
HopfMaps hopf_maps(PresentedRingPtr ring);

// σ(x,y) = t_{x1} t_{y1} α(x2,y2) t^{-1}_{x3y3},  σ^{-1}(x,y) = t_{x1y1} α^{-1}(x2,y2) t^{-1}_{x3} t^{-1}_{y3}.
struct GenericCocycle {
  PresentedRingPtr ring;
  BilinearForm alpha;
  BilinearForm alpha_inv;
  std::vector<Polynomial> sigma;      // index i*n+j, normal form
  std::vector<Polynomial> sigma_inv;  // index i*n+j, normal form
  // The defining formulas before reduction; identities are checked on these and
  // only the difference of both sides is reduced.
  std::vector<Polynomial> sigma_raw;
  std::vector<Polynomial> sigma_inv_raw;

  std::size_t n() const { return ring->n(); }
  const Polynomial& s(std::size_t i, std::size_t j) const { return sigma[i * n() + j]; }
  const Polynomial& sinv(std::size_t i, std::size_t j) const { return sigma_inv[i * n() + j]; }
  Polynomial sigma_of(const Vec& x, const Vec& y) const;
  Polynomial sigma_inv_of(const Vec& x, const Vec& y) const;
};

// Throws NotInvertible when α has no convolution inverse.
GenericCocycle generic_sigma(PresentedRingPtr ring, const BilinearForm& alpha);

// σ(x1,y1)σ(x2y2,z) = σ(y1,z1)σ(x,y2z2) on all basis triples, and σ*σ^{-1} = σ^{-1}*σ = ε⊗ε.
Verdict verify_cocycle_identity(const GenericCocycle& gc);

// e_λ: T_i ↦ λ(x_i), U_i ↦ λ^{-1}(x_i), applied to σ. Throws NotInvertible, and
// MismatchError if the result differs from cohomologous_transform(α, λ).
BilinearForm specialize(const GenericCocycle& gc, const LinearForm& lam);
// e_λ applied to σ^{-1}.
BilinearForm specialize_inverse(const GenericCocycle& gc, const LinearForm& lam);

// S(σ) = σ^{-1} and S(σ^{-1}) = σ. Skipped unless H is cocommutative and α = ε⊗ε.
Verdict antipode_on_sigma(const GenericCocycle& gc);

// Δ(σ(x,y)) = t_{x1}t_{y1}t^{-1}_{x3y3} ⊗ σ(x2,y2), Δ(σ^{-1}(x,y)) = t_{x1y1}t^{-1}_{x3}t^{-1}_{y3} ⊗ σ^{-1}(x2,y2),
// ε(σ(x,y)) = ε(σ^{-1}(x,y)) = ε(x)ε(y). Skipped unless α = ε⊗ε.
Verdict coproduct_of_sigma(const GenericCocycle& gc);

}  // namespace hopfgen
