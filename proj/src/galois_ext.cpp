#include "hopfgen/galois_ext.hpp"

#include <stdexcept>

namespace hopfgen {

namespace {

class Accumulator {
 public:
  explicit Accumulator(const PolynomialRing& ring) : ring_(ring) {}
  void add(const Polynomial& p, const Scalar& c = 1) {
    if (hopfgen::is_zero(c)) return;
    for (const auto& t : p.terms) terms_.push_back({t.mono, t.coef * c});
  }
  Polynomial take() { return ring_.from_terms(std::move(terms_)); }

 private:
  const PolynomialRing& ring_;
  std::vector<Term> terms_;
};

ExtensionElement zero_element(std::size_t n) { return {std::vector<Polynomial>(n)}; }

// Σ_{x,y} c_x d_y · table(x1,y1) ⊗ x2 ⋅ y2, legs unreduced
std::vector<Polynomial> pair_product_raw(const HopfAlgebra& h, const PolynomialRing& R,
                                         const std::vector<Polynomial>& table, std::size_t i, std::size_t j) {
  const std::size_t n = h.dim();
  std::vector<Accumulator> acc(n, Accumulator(R));
  for (const auto& x : h.comult(i))
    for (const auto& y : h.comult(j))
      for (const auto& e : h.mult(x.right, y.right)) acc[e.index].add(table[x.left * n + y.left], x.coef * y.coef * e.coef);
  std::vector<Polynomial> out;
  for (auto& a : acc) out.push_back(a.take());
  return out;
}

}  // namespace

ExtensionElement ext_basis(const PresentedRing& ring, std::size_t i, const Polynomial& b) {
  auto u = zero_element(ring.n());
  u.legs.at(i) = ring.nf(b);
  return u;
}

ExtensionElement ext_basis(const PresentedRing& ring, std::size_t i) {
  return ext_basis(ring, i, ring.poly().constant(1));
}

std::string format_extension(const PresentedRing& ring, const ExtensionElement& u) {
  std::string s;
  for (std::size_t i = 0; i < u.legs.size(); ++i) {
    if (u.legs[i].is_zero()) continue;
    if (!s.empty()) s += " + ";
    const bool sum = u.legs[i].terms.size() > 1;
    s += (sum ? "(" : "") + ring.format(u.legs[i]) + (sum ? ")" : "") + " ⊗ " + ring.hopf().name(i);
  }
  return s.empty() ? "0" : s;
}

bool ext_equal(const PresentedRing& ring, const ExtensionElement& u, const ExtensionElement& v) {
  if (u.legs.size() != v.legs.size()) return false;
  for (std::size_t i = 0; i < u.legs.size(); ++i)
    if (!ring.equal(u.legs[i], v.legs[i])) return false;
  return true;
}

ExtensionElement ext_multiply(const GenericCocycle& gc, const ExtensionElement& u, const ExtensionElement& v) {
  const auto& r = *gc.ring;
  const auto& h = r.hopf();
  const auto& R = r.poly();
  const std::size_t n = h.dim();
  std::vector<Accumulator> acc(n, Accumulator(R));
  for (std::size_t i = 0; i < n; ++i) {
    if (u.legs.at(i).is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (v.legs.at(j).is_zero()) continue;
      auto bc = R.mul(u.legs[i], v.legs[j]);
      auto rule = pair_product_raw(h, R, gc.sigma, i, j);
      for (std::size_t k = 0; k < n; ++k)
        if (!rule[k].is_zero()) acc[k].add(R.mul(bc, rule[k]));
    }
  }
  ExtensionElement out;
  for (auto& a : acc) out.legs.push_back(r.nf(a.take()));
  return out;
}

ExtensionElement ext_unit(const GenericCocycle& gc) {
  const auto& r = *gc.ring;
  const auto& h = r.hopf();
  const std::size_t n = h.dim();
  Accumulator acc(r.poly());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) acc.add(gc.sigma_inv[i * n + j], h.unit()[i] * h.unit()[j]);
  auto u = zero_element(n);
  auto c = r.nf(acc.take());
  for (std::size_t i = 0; i < n; ++i) u.legs[i] = r.poly().scale(c, h.unit()[i]);
  return u;
}

Verdict check_extension_algebra(const GenericCocycle& gc) {
  const auto& r = *gc.ring;
  const auto& h = r.hopf();
  const std::size_t n = h.dim();
  Verdict v;
  v.check = "extension-algebra";
  const ExtensionElement one = ext_unit(gc);
  std::vector<ExtensionElement> e;
  for (std::size_t i = 0; i < n; ++i) e.push_back(ext_basis(r, i));
  auto mismatch = [&](std::vector<std::string> at, const ExtensionElement& a, const ExtensionElement& b) {
    v.fail(std::move(at), format_extension(r, a), format_extension(r, b));
    if (!r.complete()) v.status = Status::inconclusive;
  };
  for (std::size_t i = 0; i < n && !v.failed(); ++i) {
    ++v.cases;
    auto l = ext_multiply(gc, one, e[i]), rr = ext_multiply(gc, e[i], one);
    if (!ext_equal(r, l, e[i])) mismatch({"left unit", h.name(i)}, l, e[i]);
    else if (!ext_equal(r, rr, e[i])) mismatch({"right unit", h.name(i)}, rr, e[i]);
  }
  for (std::size_t i = 0; i < n && !v.failed(); ++i)
    for (std::size_t j = 0; j < n && !v.failed(); ++j) {
      auto ij = ext_multiply(gc, e[i], e[j]);
      for (std::size_t k = 0; k < n && !v.failed(); ++k) {
        ++v.cases;
        auto lhs = ext_multiply(gc, ij, e[k]);
        auto rhs = ext_multiply(gc, e[i], ext_multiply(gc, e[j], e[k]));
        if (!ext_equal(r, lhs, rhs)) mismatch({"associativity", h.name(i), h.name(j), h.name(k)}, lhs, rhs);
      }
    }
  return v;
}

TwistedAlgebra specialize_extension(const GenericCocycle& gc, const LinearForm& lam) {
  const auto& r = *gc.ring;
  const auto& h = r.hopf();
  const std::size_t n = h.dim();
  const LinearForm inv = convolution_inverse(h, lam);
  const BilinearForm beta = specialize(gc, lam);
  TwistedAlgebra t = twist_algebra(h, beta);
  std::vector<SparseVec> table;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto legs = pair_product_raw(h, r.poly(), gc.sigma, i, j);
      Vec row = zero_vec(n);
      for (std::size_t k = 0; k < n; ++k) row[k] = r.evaluate(legs[k], lam.values, inv.values);
      table.push_back(to_sparse(row));
    }
  if (table != t.mult) {
    for (std::size_t p = 0; p < table.size(); ++p)
      if (table[p] != t.mult[p])
        throw MismatchError("specialized extension differs from the twisted algebra at (" + h.name(p / n) + "," +
                            h.name(p % n) + "): " + format_vec(h.basis(), to_dense(table[p], n)) + " vs " +
                            format_vec(h.basis(), to_dense(t.mult[p], n)));
  }
  return t;
}

Verdict verify_reduction(const HopfAlgebra& h, const BilinearForm& alpha, const GroebnerBudget& budget,
                         GroebnerCache* cache) {
  Verdict v;
  v.check = "reduction";
  if (auto c = is_two_cocycle(h, alpha); !c.passed())
    throw PreconditionViolated("verify_reduction: alpha is not a two-cocycle (" + c.describe() + ")");
  const BilinearForm alpha_inv = convolution_inverse(h, alpha);
  auto hp = std::make_shared<const HopfAlgebra>(h);
  auto lp = std::make_shared<const HopfAlgebra>(deform_hopf(h, alpha));
  auto ring_h = PresentedRing::build(hp, budget, cache);
  auto ring_l = PresentedRing::build(lp, budget, cache);
  if (ring_h->poly().names() != ring_l->poly().names())
    throw std::logic_error("verify_reduction: presented rings of H and L differ");
  const auto sa = generic_sigma(ring_h, alpha);
  const auto se = generic_sigma(ring_l, trivial_cocycle(*lp));
  const auto& r = *ring_h;
  const auto& R = r.poly();
  const std::size_t n = h.dim();
  auto differ = [&](const Polynomial& a, const Polynomial& b) { return !r.nf(R.sub(a, b)).is_zero(); };
  auto mismatch = [&](std::vector<std::string> at, const std::string& lhs, const std::string& rhs) {
    v.fail(std::move(at), lhs, rhs);
    if (!r.complete()) v.status = Status::inconclusive;
  };

  for (std::size_t i = 0; i < n && !v.failed(); ++i)
    for (std::size_t j = 0; j < n && !v.failed(); ++j) {
      Accumulator s(R), si(R);
      for (const auto& x : h.comult(i))
        for (const auto& y : h.comult(j)) {
          const Scalar c = x.coef * y.coef;
          s.add(se.sigma_raw[x.left * n + y.left], c * alpha.at(x.right, y.right));
          si.add(se.sigma_inv_raw[x.right * n + y.right], c * alpha_inv.at(x.left, y.left));
        }
      ++v.cases;
      auto rhs = s.take();
      if (differ(sa.sigma_raw[i * n + j], rhs)) {
        mismatch({"sigma", h.name(i), h.name(j)}, r.format(sa.s(i, j)), r.format(r.nf(rhs)));
        break;
      }
      ++v.cases;
      auto rhs_inv = si.take();
      if (differ(sa.sigma_inv_raw[i * n + j], rhs_inv))
        mismatch({"sigma^-1", h.name(i), h.name(j)}, r.format(sa.sinv(i, j)), r.format(r.nf(rhs_inv)));
    }

  // (1⊗x)(1⊗y) in A_H^α against Σ σ_ε^L(x1,y1) ⊗ x2 ·_L y2 α(x3,y3)
  for (std::size_t i = 0; i < n && !v.failed(); ++i)
    for (std::size_t j = 0; j < n && !v.failed(); ++j) {
      ++v.cases;
      auto lhs = pair_product_raw(h, R, sa.sigma_raw, i, j);
      std::vector<Accumulator> acc(n, Accumulator(R));
      for (const auto& x : h.comult(i))
        for (const auto& y : h.comult(j)) {
          const Scalar a = x.coef * y.coef * alpha.at(x.right, y.right);
          if (hopfgen::is_zero(a)) continue;
          auto part = pair_product_raw(*lp, R, se.sigma_raw, x.left, y.left);
          for (std::size_t k = 0; k < n; ++k) acc[k].add(part[k], a);
        }
      for (std::size_t k = 0; k < n && !v.failed(); ++k) {
        auto rhs = acc[k].take();
        if (differ(lhs[k], rhs))
          mismatch({"extension", h.name(i), h.name(j), h.name(k)}, r.format(r.nf(lhs[k])), r.format(r.nf(rhs)));
      }
    }

  // Cocommutative H: L = H as algebras, so σ_ε^L = σ_ε^H and B_H^α = B_H^ε. Only grouplike
  // pairs give scalar multiples; elsewhere σ_α(x,y) mixes several σ_ε(x1,y1).
  if (h.is_cocommutative() && !v.failed()) {
    for (std::size_t p = 0; p < n * n && !v.failed(); ++p) {
      ++v.cases;
      if (lp->mult(p / n, p % n) != h.mult(p / n, p % n))
        mismatch({"L product", h.name(p / n), h.name(p % n)}, format_vec(h.basis(), to_dense(lp->mult(p / n, p % n), n)),
                 format_vec(h.basis(), to_dense(h.mult(p / n, p % n), n)));
    }
    const auto s0 = generic_sigma(ring_h, trivial_cocycle(h));
    for (std::size_t p = 0; p < n * n && !v.failed(); ++p)
      for (int inv = 0; inv < 2 && !v.failed(); ++inv) {
        ++v.cases;
        const auto& a = inv ? se.sigma_inv[p] : se.sigma[p];
        const auto& b = inv ? s0.sigma_inv[p] : s0.sigma[p];
        if (differ(a, b)) mismatch({inv ? "L sigma^-1" : "L sigma", h.name(p / n), h.name(p % n)}, r.format(a), r.format(b));
      }
    auto grouplike = [&](std::size_t i) {
      const auto& d = h.comult(i);
      return d.size() == 1 && d[0].left == i && d[0].right == i && d[0].coef == 1;
    };
    std::size_t scaled = 0;
    for (std::size_t p = 0; p < n * n && !v.failed(); ++p) {
      const std::size_t i = p / n, j = p % n;
      if (!grouplike(i) || !grouplike(j)) continue;
      for (int inv = 0; inv < 2 && !v.failed(); ++inv) {
        ++v.cases;
        ++scaled;
        const auto& a = inv ? sa.sigma_inv[p] : sa.sigma[p];
        const auto& b = inv ? s0.sigma_inv[p] : s0.sigma[p];
        const Scalar c = inv ? alpha_inv.at(i, j) : alpha.at(i, j);
        if (differ(a, R.scale(b, c)))
          mismatch({inv ? "scalar sigma^-1" : "scalar sigma", h.name(i), h.name(j)}, r.format(a),
                   to_string(c) + " * (" + r.format(b) + ")");
      }
    }
    if (!v.failed())
      v.note = "cocommutative: L = H, so B_H^alpha = B_H^eps; " + std::to_string(scaled) +
               " grouplike generators are alpha^{±1}(x,y) times their eps counterparts";
  }
  return v;
}

}  // namespace hopfgen
