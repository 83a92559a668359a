#pragma once

#include "hopfgen/hopf.hpp"
#include "hopfgen/presented_ring.hpp"
#include "hopfgen/verdict.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace hopfgen {

// Element of the tensor algebra T(X_H): words in the letters X_{x_i}.
struct FreeWord {
  std::map<std::vector<std::size_t>, Scalar> terms;

  static FreeWord one();
  static FreeWord letter(const Vec& v);  // X_v, linear in v

  bool is_zero() const { return terms.empty(); }
  FreeWord operator+(const FreeWord& o) const;
  FreeWord operator-(const FreeWord& o) const;
  FreeWord operator*(const FreeWord& o) const;
  FreeWord scaled(const Scalar& c) const;
  bool operator==(const FreeWord&) const = default;
};

// "X[x]·X[1] - X[g]·X[gx]"
std::string format_word(const HopfAlgebra& h, const FreeWord& w);

enum class Side { right, left };

// w ⊗ h (right) or h ⊗ w (left), stored as word -> H-vector.
struct CoactedWord {
  Side side = Side::right;
  std::map<std::vector<std::size_t>, Vec> terms;
  bool operator==(const CoactedWord&) const = default;
};

std::string format_coacted(const HopfAlgebra& h, const CoactedWord& c);

// Algebra-morphism extensions of X_x ↦ X_{x1} ⊗ x2 and X_x ↦ x1 ⊗ X_{x2}.
CoactedWord coact_right(const HopfAlgebra& h, const FreeWord& w);
CoactedWord coact_left(const HopfAlgebra& h, const FreeWord& w);

struct PQWords {
  FreeWord P;   // X_{x1} X_{S(x2)}
  FreeWord Pp;  // X_{S(x1)} X_{x2}
  FreeWord Q;   // X_{x1} X_{y1} X_{S(x2y2)}
  FreeWord Qp;  // X_{S(x1y1)} X_{x2} X_{y2}
};

PQWords build_P_Q(const HopfAlgebra& h, const Vec& x, const Vec& y);

// coact(w) = w ⊗ 1 (right) or 1 ⊗ w (left).
Verdict check_coinvariance(const HopfAlgebra& h, const FreeWord& w, Side side);

// Element of R ⊗ H: legs[k] is the ring coefficient of x_k.
struct RingTensorH {
  std::vector<Polynomial> legs;
};

std::string format_ring_tensor(const PresentedRing& ring, const RingTensorH& v);

// μ(X_x) = t_{x1} ⊗ x2, multiplicative; μ'(X_x) = t^{-1}_{x2} ⊗ S(x1), anti-multiplicative.
RingTensorH mu(const PresentedRing& ring, const FreeWord& w);
RingTensorH mu_prime(const PresentedRing& ring, const FreeWord& w);
RingTensorH multiply(const PresentedRing& ring, const RingTensorH& a, const RingTensorH& b);

// Σ μ(X_{x1}) μ'(X_{x2}) = Σ μ'(X_{x1}) μ(X_{x2}) = ε(x) 1⊗1 on every basis element.
Verdict check_mu_convolution(const PresentedRing& ring);

// Closed formulas:
//   p_x = t_{x1} t_{S(x2)},  p'_x = t^{-1}_{S(x1)} t^{-1}_{x2},
//   q_{x,y} = t_{x1} t_{y1} t_{S(x2y2)},  q'_{x,y} = t^{-1}_{S(x1y1)} t^{-1}_{x2} t^{-1}_{y2}.
Polynomial p_formula(const PresentedRing& ring, const Vec& x);
Polynomial pp_formula(const PresentedRing& ring, const Vec& x);
Polynomial q_formula(const PresentedRing& ring, const Vec& x, const Vec& y);
Polynomial qp_formula(const PresentedRing& ring, const Vec& x, const Vec& y);

struct PQElements {
  Polynomial p, pp, q, qp;
};

// p = μ(P), p' = μ'(P'), q = μ(Q), q' = μ'(Q'), each checked to have H-leg 1 and
// to agree with the closed formula. Throws MismatchError otherwise.
PQElements pq_elements(const PresentedRing& ring, const Vec& x, const Vec& y);

// Runs pq_elements on all basis pairs; a MismatchError becomes a failed verdict.
Verdict check_pq_dual_path(const PresentedRing& ring);

// σ(x,y) = q_{x1,y1} p'_{x2y2} and σ^{-1}(x,y) = p_{x1y1} q'_{x2,y2}. Needs α = ε⊗ε.
Verdict verify_prop_nice(const GenericCocycle& gc);

// S(p'_x) = p_x and S(q'_{x,y}) = q_{x,y}. Skipped unless H is cocommutative.
Verdict antipode_pq_cocommutative(const PresentedRing& ring);

struct GroupDeterminant {
  RingPtr ring;  // variables T_g
  Polynomial det;
};

// det(T_{gh^{-1}}) by fraction-free Bareiss elimination.
GroupDeterminant group_determinant(const CayleyTable& g);

// Exact quotient a / b; throws std::domain_error if b does not divide a.
Polynomial exact_divide(const PolynomialRing& ring, const Polynomial& a, const Polynomial& b);

}  // namespace hopfgen
