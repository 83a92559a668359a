#pragma once

#include "hopfgen/scalar.hpp"

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hopfgen {

struct Monomial {
  std::vector<std::uint16_t> exp;

  unsigned degree() const;
  bool is_one() const;
  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;
  Monomial operator*(const Monomial& o) const;
  Monomial operator/(const Monomial& o) const;  // requires o.divides(*this)
  static Monomial lcm(const Monomial& a, const Monomial& b);
  bool operator==(const Monomial&) const = default;
};

struct Term {
  Monomial mono;
  Scalar coef;
};

// Terms strictly decreasing in the owning ring's order, no zero coefficients.
struct Polynomial {
  std::vector<Term> terms;

  bool is_zero() const { return terms.empty(); }
  const Term& lead() const { return terms.front(); }
  std::size_t size() const { return terms.size(); }
};

// Product of degrevlex blocks compared in priority order. Inside a block the
// variable with the lowest index is the smallest one.
struct MonomialOrder {
  std::vector<std::pair<std::size_t, std::size_t>> blocks;  // [begin, end)

  static MonomialOrder degrevlex(std::size_t nvars);
  static MonomialOrder elimination(std::size_t eliminated, std::size_t nvars);

  int compare(const Monomial& a, const Monomial& b) const;
  // a > b exactly when sort_key(a) < sort_key(b) lexicographically.
  std::vector<std::uint16_t> sort_key(const Monomial& m) const;
  Monomial from_sort_key(const std::vector<std::uint16_t>& key) const;
  std::string describe() const;
  bool operator==(const MonomialOrder&) const = default;
};

class PolynomialRing {
 public:
  PolynomialRing(std::vector<std::string> names, MonomialOrder order);
  explicit PolynomialRing(std::vector<std::string> names);

  std::size_t nvars() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const MonomialOrder& order() const { return order_; }
  std::size_t index_of(std::string_view name) const;

  int compare(const Monomial& a, const Monomial& b) const { return order_.compare(a, b); }

  Monomial one_monomial() const;
  Polynomial zero() const { return {}; }
  Polynomial constant(const Scalar& c) const;
  Polynomial var(std::size_t i) const;
  Polynomial monomial(const Monomial& m, const Scalar& c) const;

  // Sorts and combines an arbitrary term list.
  Polynomial from_terms(std::vector<Term> terms) const;

  Polynomial add(const Polynomial& a, const Polynomial& b) const;
  Polynomial sub(const Polynomial& a, const Polynomial& b) const;
  Polynomial neg(const Polynomial& a) const;
  Polynomial scale(const Polynomial& a, const Scalar& c) const;
  Polynomial mul(const Polynomial& a, const Polynomial& b) const;
  Polynomial mul_term(const Polynomial& a, const Monomial& m, const Scalar& c) const;
  Polynomial pow(const Polynomial& a, unsigned e) const;
  // a - c*m*b, the reduction step
  Polynomial sub_mul(const Polynomial& a, const Scalar& c, const Monomial& m, const Polynomial& b) const;

  Polynomial make_monic(const Polynomial& a) const;
  unsigned total_degree(const Polynomial& a) const;

  // Ring homomorphism into `target` sending variable i to images[i].
  Polynomial map(const Polynomial& p, const PolynomialRing& target, std::span<const Polynomial> images) const;
  // Same, into Q.
  Scalar evaluate(const Polynomial& p, std::span<const Scalar> point) const;
  // Renames variables by index: variable i becomes variable targets[i] of `target`.
  Polynomial rename(const Polynomial& p, const PolynomialRing& target, std::span<const std::size_t> targets) const;

  // Canonical text: "3*T_g^2*U_e - 1/2*U_x", "0" for zero.
  std::string format(const Polynomial& p) const;
  std::string format(const Monomial& m) const;
  // Inverse of format; also accepts parentheses-free sums of products with '^' powers.
  Polynomial parse(std::string_view text) const;

  bool uses_only(const Polynomial& p, std::size_t begin, std::size_t end) const;

 private:
  std::vector<std::string> names_;
  MonomialOrder order_;
};

using RingPtr = std::shared_ptr<const PolynomialRing>;

}  // namespace hopfgen
