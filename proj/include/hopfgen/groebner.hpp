#pragma once

#include "hopfgen/polynomial.hpp"

#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace hopfgen {

struct GroebnerBudget {
  std::size_t max_pairs = std::numeric_limits<std::size_t>::max();
  unsigned degree_bound = std::numeric_limits<unsigned>::max();
  double max_seconds = std::numeric_limits<double>::infinity();
};

struct GroebnerStats {
  std::size_t pairs_created = 0;
  std::size_t pairs_reduced = 0;
  std::size_t zero_reductions = 0;
  std::size_t pairs_skipped_by_bound = 0;
  std::size_t basis_size = 0;
  unsigned max_degree = 0;  // of the returned basis
  bool complete = true;
  bool from_cache = false;
  double seconds = 0;
};

// Reduced Gröbner basis (monic, sorted by increasing leading monomial). When the
// computation ran out of budget the basis is only a generating set with partial
// S-pair closure: normal forms are still ideal-equivalent but not canonical.
class GroebnerBasis {
 public:
  GroebnerBasis(RingPtr ring, std::vector<Polynomial> polys, bool complete);

  const PolynomialRing& ring() const { return *ring_; }
  const RingPtr& ring_ptr() const { return ring_; }
  const std::vector<Polynomial>& polys() const { return polys_; }
  bool complete() const { return complete_; }

  Polynomial normal_form(const Polynomial& p) const;
  bool reduces_to_zero(const Polynomial& p) const { return normal_form(p).is_zero(); }

  // Monomials outside the leading-term ideal, or nullopt if there are infinitely
  // many (some variable has no pure-power leading term) or more than `limit`.
  std::optional<std::vector<Monomial>> standard_monomials(std::size_t limit = 100000) const;
  bool zero_dimensional() const;

 private:
  RingPtr ring_;
  std::vector<Polynomial> polys_;
  bool complete_;
};

// Normal form of p modulo an arbitrary list of polynomials with the division algorithm.
Polynomial reduce(const PolynomialRing& ring, const Polynomial& p, const std::vector<const Polynomial*>& divisors);

// Buchberger's algorithm with the Gebauer–Möller pair criteria and the normal
// selection strategy.
GroebnerBasis buchberger(RingPtr ring, const std::vector<Polynomial>& generators, const GroebnerBudget& budget = {},
                         GroebnerStats* stats = nullptr);

}  // namespace hopfgen
