#include "hopfgen/presented_ring.hpp"

#include <utility>

namespace hopfgen {

namespace {

std::vector<std::string> variable_names(const HopfAlgebra& h, const std::string& t, const std::string& u) {
  std::vector<std::string> names;
  for (const auto& b : h.basis()) names.push_back(t + b);
  for (const auto& b : h.basis()) names.push_back(u + b);
  return names;
}

Monomial mono_of(const PolynomialRing& ring, std::initializer_list<std::size_t> vars) {
  Monomial m = ring.one_monomial();
  for (auto v : vars) ++m.exp[v];
  return m;
}

// Collects terms and combines them once at the end.
class Accumulator {
 public:
  explicit Accumulator(const PolynomialRing& ring) : ring_(ring) {}
  void add(const Polynomial& p, const Scalar& c) {
    for (const auto& t : p.terms) terms_.push_back({t.mono, t.coef * c});
  }
  void add(Polynomial&& p) {
    for (auto& t : p.terms) terms_.push_back(std::move(t));
  }
  Polynomial take() { return ring_.from_terms(std::move(terms_)); }

 private:
  const PolynomialRing& ring_;
  std::vector<Term> terms_;
};

bool is_trivial(const HopfAlgebra& h, const BilinearForm& a) { return a == trivial_cocycle(h); }

// Failing comparisons on an incomplete basis prove nothing.
void mismatch(Verdict& v, const PresentedRing& r, std::vector<std::string> at, std::string lhs, std::string rhs) {
  v.fail(std::move(at), std::move(lhs), std::move(rhs));
  if (!r.complete()) {
    v.status = Status::inconclusive;
    v.note = "Gröbner basis incomplete";
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// PresentedRing

PresentedRing::PresentedRing(std::shared_ptr<const HopfAlgebra> h, RingPtr ring, std::vector<Polynomial> relations,
                             GroebnerBasis gb, GroebnerStats stats)
    : hopf_(std::move(h)), ring_(std::move(ring)), relations_(std::move(relations)), gb_(std::move(gb)), stats_(stats) {}

std::vector<Polynomial> PresentedRing::relation_families(const HopfAlgebra& h, const PolynomialRing& ring) {
  const std::size_t n = h.dim();
  std::vector<Polynomial> out;
  for (int family = 0; family < 2; ++family)
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<Term> terms;
      for (const auto& c : h.comult(i)) {
        auto m = family == 0 ? mono_of(ring, {c.left, n + c.right}) : mono_of(ring, {n + c.left, c.right});
        terms.push_back({std::move(m), c.coef});
      }
      terms.push_back({ring.one_monomial(), -h.counit()[i]});
      out.push_back(ring.from_terms(std::move(terms)));
    }
  return out;
}

std::shared_ptr<const PresentedRing> PresentedRing::build(const HopfAlgebra& h, const GroebnerBudget& budget,
                                                          GroebnerCache* cache) {
  return build(std::make_shared<const HopfAlgebra>(h), budget, cache);
}

std::shared_ptr<const PresentedRing> PresentedRing::build(std::shared_ptr<const HopfAlgebra> h,
                                                          const GroebnerBudget& budget, GroebnerCache* cache) {
  auto ring = std::make_shared<const PolynomialRing>(variable_names(*h, "T_", "U_"));
  std::vector<Polynomial> rels;
  for (auto& r : relation_families(*h, *ring)) {
    if (r.is_zero()) continue;
    bool dup = false;
    for (const auto& s : rels) dup = dup || ring->sub(r, s).is_zero();
    if (!dup) rels.push_back(std::move(r));
  }
  GroebnerStats stats;
  auto gb = cached_groebner(ring, rels, budget, cache, &stats);
  return std::shared_ptr<const PresentedRing>(
      new PresentedRing(std::move(h), std::move(ring), std::move(rels), std::move(gb), stats));
}

Polynomial PresentedRing::t_of(const Vec& v) const {
  std::vector<Term> terms;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!is_zero(v[i])) terms.push_back({mono_of(*ring_, {T(i)}), v[i]});
  return nf(ring_->from_terms(std::move(terms)));
}

Polynomial PresentedRing::tinv_of(const Vec& v) const {
  std::vector<Term> terms;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!is_zero(v[i])) terms.push_back({mono_of(*ring_, {U(i)}), v[i]});
  return nf(ring_->from_terms(std::move(terms)));
}

Scalar PresentedRing::evaluate(const Polynomial& p, const Vec& t, const Vec& u) const {
  Vec point = t;
  point.insert(point.end(), u.begin(), u.end());
  return ring_->evaluate(p, point);
}

// ---------------------------------------------------------------------------
// DoubledRing

namespace {

RingPtr doubled_poly(const HopfAlgebra& h) {
  auto names = variable_names(h, "T_", "U_");
  auto primed = variable_names(h, "T'_", "U'_");
  names.insert(names.end(), primed.begin(), primed.end());
  return std::make_shared<const PolynomialRing>(std::move(names));
}

}  // namespace

DoubledRing::DoubledRing(PresentedRingPtr base)
    : base_(std::move(base)), ring_(doubled_poly(base_->hopf())), gb_(ring_, {}, base_->complete()) {
  const std::size_t m = 2 * base_->n();
  for (std::size_t i = 0; i < m; ++i) {
    to_left_.push_back(i);
    to_right_.push_back(m + i);
  }
  std::vector<Polynomial> polys;
  for (const auto& g : base_->groebner().polys()) polys.push_back(left(g));
  for (const auto& g : base_->groebner().polys()) polys.push_back(right(g));
  gb_ = GroebnerBasis(ring_, std::move(polys), base_->complete());
}

Polynomial DoubledRing::left(const Polynomial& p) const { return base_->poly().rename(p, *ring_, to_left_); }
Polynomial DoubledRing::right(const Polynomial& p) const { return base_->poly().rename(p, *ring_, to_right_); }
Polynomial DoubledRing::tensor(const Polynomial& a, const Polynomial& b) const {
  return nf(ring_->mul(left(a), right(b)));
}

// ---------------------------------------------------------------------------
// HopfMaps

HopfMaps::HopfMaps(PresentedRingPtr ring) : ring_(std::move(ring)), doubled_(ring_) {
  const auto& h = ring_->hopf();
  const std::size_t n = h.dim();
  const auto& D = doubled_.poly();
  delta_images_.assign(2 * n, Polynomial{});
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Term> t, u;
    for (const auto& c : h.comult(i)) {
      t.push_back({mono_of(D, {c.left, 2 * n + c.right}), c.coef});
      u.push_back({mono_of(D, {n + c.right, 3 * n + c.left}), c.coef});
    }
    delta_images_[i] = D.from_terms(std::move(t));
    delta_images_[n + i] = D.from_terms(std::move(u));
  }
  const auto& R = ring_->poly();
  for (std::size_t i = 0; i < n; ++i) swap_images_.push_back(R.var(n + i));
  for (std::size_t i = 0; i < n; ++i) swap_images_.push_back(R.var(i));
}

Polynomial HopfMaps::delta_raw(const Polynomial& p) const {
  return ring_->poly().map(p, doubled_.poly(), delta_images_);
}

Polynomial HopfMaps::delta(const Polynomial& p) const { return doubled_.nf(delta_raw(p)); }

Scalar HopfMaps::eps(const Polynomial& p) const {
  const auto& c = ring_->hopf().counit();
  return ring_->evaluate(p, c, c);
}

Polynomial HopfMaps::antipode(const Polynomial& p) const {
  return ring_->nf(ring_->poly().map(p, ring_->poly(), swap_images_));
}

void HopfMaps::check_well_defined() const {
  if (!ring_->complete()) return;
  for (const auto& r : ring_->relations()) {
    const auto text = ring_->format(r);
    if (auto d = delta(r); !d.is_zero())
      throw WellDefinednessFailure("Delta(" + text + ") = " + doubled_.format(d) + " mod J+J'");
    if (auto e = eps(r); !is_zero(e)) throw WellDefinednessFailure("Eps(" + text + ") = " + to_string(e));
    if (auto s = antipode(r); !s.is_zero())
      throw WellDefinednessFailure("Antipode(" + text + ") = " + ring_->format(s) + " mod J");
  }
}

HopfMaps hopf_maps(PresentedRingPtr ring) {
  HopfMaps maps(std::move(ring));
  maps.check_well_defined();
  return maps;
}

// ---------------------------------------------------------------------------
// Generic cocycle

Polynomial GenericCocycle::sigma_of(const Vec& x, const Vec& y) const {
  Accumulator acc(ring->poly());
  for (std::size_t i = 0; i < n(); ++i)
    for (std::size_t j = 0; j < n(); ++j)
      if (!is_zero(x[i]) && !is_zero(y[j])) acc.add(s(i, j), x[i] * y[j]);
  return acc.take();
}

Polynomial GenericCocycle::sigma_inv_of(const Vec& x, const Vec& y) const {
  Accumulator acc(ring->poly());
  for (std::size_t i = 0; i < n(); ++i)
    for (std::size_t j = 0; j < n(); ++j)
      if (!is_zero(x[i]) && !is_zero(y[j])) acc.add(sinv(i, j), x[i] * y[j]);
  return acc.take();
}

namespace {

std::vector<TensorElement> triple_expansions(const HopfAlgebra& h) {
  std::vector<TensorElement> out;
  for (std::size_t i = 0; i < h.dim(); ++i) out.push_back(sweedler_expand(h, h.basis_vec(i), 3));
  return out;
}

}  // namespace

GenericCocycle generic_sigma(PresentedRingPtr ring, const BilinearForm& alpha) {
  const auto& h = ring->hopf();
  const auto& R = ring->poly();
  const std::size_t n = h.dim();
  GenericCocycle gc{ring, alpha, convolution_inverse(h, alpha), {}, {}, {}, {}};
  auto ex = triple_expansions(h);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<Term> sig, inv;
      for (const auto& [li, u] : ex[i].terms)
        for (const auto& [lj, v] : ex[j].terms) {
          const Scalar uv = u * v;
          if (Scalar c = uv * alpha.at(li[1], lj[1]); !is_zero(c))
            for (const auto& e : h.mult(li[2], lj[2]))
              sig.push_back({mono_of(R, {ring->T(li[0]), ring->T(lj[0]), ring->U(e.index)}), c * e.coef});
          if (Scalar c = uv * gc.alpha_inv.at(li[1], lj[1]); !is_zero(c))
            for (const auto& e : h.mult(li[0], lj[0]))
              inv.push_back({mono_of(R, {ring->T(e.index), ring->U(li[2]), ring->U(lj[2])}), c * e.coef});
        }
      gc.sigma_raw.push_back(R.from_terms(std::move(sig)));
      gc.sigma_inv_raw.push_back(R.from_terms(std::move(inv)));
      gc.sigma.push_back(ring->nf(gc.sigma_raw.back()));
      gc.sigma_inv.push_back(ring->nf(gc.sigma_inv_raw.back()));
    }
  return gc;
}

Verdict verify_cocycle_identity(const GenericCocycle& gc) {
  const auto& ring = *gc.ring;
  const auto& h = ring.hopf();
  const auto& R = ring.poly();
  const auto& names = h.basis();
  const std::size_t n = h.dim();
  auto S = [&](std::size_t a, std::size_t b) -> const Polynomial& { return gc.sigma_raw[a * n + b]; };
  auto Sinv = [&](std::size_t a, std::size_t b) -> const Polynomial& { return gc.sigma_inv_raw[a * n + b]; };
  Verdict v;
  v.check = "cocycle-identity";

  // σ(x_i, x_b x_b') and σ(x_b x_b', x_k) as combinations of table entries
  auto sigma_left_product = [&](std::size_t b, std::size_t bp, std::size_t k) {
    Accumulator acc(R);
    for (const auto& e : h.mult(b, bp)) acc.add(S(e.index, k), e.coef);
    return acc.take();
  };
  auto sigma_right_product = [&](std::size_t i, std::size_t b, std::size_t bp) {
    Accumulator acc(R);
    for (const auto& e : h.mult(b, bp)) acc.add(S(i, e.index), e.coef);
    return acc.take();
  };

  for (std::size_t i = 0; i < n && !v.failed(); ++i)
    for (std::size_t j = 0; j < n && !v.failed(); ++j)
      for (std::size_t k = 0; k < n && !v.failed(); ++k) {
        Accumulator l(R), r(R);
        for (const auto& x : h.comult(i))
          for (const auto& y : h.comult(j))
            l.add(R.mul(S(x.left, y.left), sigma_left_product(x.right, y.right, k)), x.coef * y.coef);
        for (const auto& y : h.comult(j))
          for (const auto& z : h.comult(k))
            r.add(R.mul(S(y.left, z.left), sigma_right_product(i, y.right, z.right)), y.coef * z.coef);
        const Polynomial lhs = l.take(), rhs = r.take();
        ++v.cases;
        if (!ring.nf(R.sub(lhs, rhs)).is_zero())
          mismatch(v, ring, {names[i], names[j], names[k]}, ring.format(ring.nf(lhs)), ring.format(ring.nf(rhs)));
      }

  for (int side = 0; side < 2 && !v.failed(); ++side)
    for (std::size_t i = 0; i < n && !v.failed(); ++i)
      for (std::size_t j = 0; j < n && !v.failed(); ++j) {
        Accumulator sum(R);
        for (const auto& x : h.comult(i))
          for (const auto& y : h.comult(j)) {
            const auto& a = side == 0 ? S(x.left, y.left) : Sinv(x.left, y.left);
            const auto& b = side == 0 ? Sinv(x.right, y.right) : S(x.right, y.right);
            sum.add(R.mul(a, b), x.coef * y.coef);
          }
        const Polynomial acc = sum.take();
        ++v.cases;
        auto expect = R.constant(h.counit()[i] * h.counit()[j]);
        if (!ring.nf(R.sub(acc, expect)).is_zero())
          mismatch(v, ring, {side == 0 ? "sigma*sigma^-1" : "sigma^-1*sigma", names[i], names[j]},
                   ring.format(ring.nf(acc)), ring.format(expect));
      }
  return v;
}

namespace {

BilinearForm evaluate_table(const GenericCocycle& gc, const std::vector<Polynomial>& table, const LinearForm& lam) {
  const auto& h = gc.ring->hopf();
  auto inv = convolution_inverse(h, lam);
  const std::size_t n = h.dim();
  BilinearForm out{Matrix(n, n)};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out.values(i, j) = gc.ring->evaluate(table[i * n + j], lam.values, inv.values);
  return out;
}

}  // namespace

BilinearForm specialize(const GenericCocycle& gc, const LinearForm& lam) {
  auto beta = evaluate_table(gc, gc.sigma, lam);
  const auto& h = gc.ring->hopf();
  auto expect = cohomologous_transform(h, gc.alpha, lam);
  for (std::size_t i = 0; i < h.dim(); ++i)
    for (std::size_t j = 0; j < h.dim(); ++j)
      if (beta.at(i, j) != expect.at(i, j))
        throw MismatchError("specialize: e_lambda(sigma(" + h.name(i) + "," + h.name(j) + ")) = " +
                            to_string(beta.at(i, j)) + " but the cohomologous cocycle has " + to_string(expect.at(i, j)));
  return beta;
}

BilinearForm specialize_inverse(const GenericCocycle& gc, const LinearForm& lam) {
  return evaluate_table(gc, gc.sigma_inv, lam);
}

Verdict antipode_on_sigma(const GenericCocycle& gc) {
  const auto& ring = *gc.ring;
  const auto& h = ring.hopf();
  if (!h.is_cocommutative()) return Verdict::skipped("antipode-sigma", "H is not cocommutative");
  if (!is_trivial(h, gc.alpha)) return Verdict::skipped("antipode-sigma", "alpha is not the trivial cocycle");
  HopfMaps maps(gc.ring);
  Verdict v;
  v.check = "antipode-sigma";
  const auto& names = h.basis();
  for (std::size_t i = 0; i < h.dim() && !v.failed(); ++i)
    for (std::size_t j = 0; j < h.dim() && !v.failed(); ++j) {
      ++v.cases;
      if (auto s = maps.antipode(gc.s(i, j)); !ring.poly().sub(s, gc.sinv(i, j)).is_zero()) {
        mismatch(v, ring, {"S(sigma)", names[i], names[j]}, ring.format(s), ring.format(gc.sinv(i, j)));
        break;
      }
      if (auto s = maps.antipode(gc.sinv(i, j)); !ring.poly().sub(s, gc.s(i, j)).is_zero())
        mismatch(v, ring, {"S(sigma^-1)", names[i], names[j]}, ring.format(s), ring.format(gc.s(i, j)));
    }
  return v;
}

Verdict coproduct_of_sigma(const GenericCocycle& gc) {
  const auto& ring = *gc.ring;
  const auto& h = ring.hopf();
  if (!is_trivial(h, gc.alpha)) return Verdict::skipped("coprod-sigma", "alpha is not the trivial cocycle");
  HopfMaps maps(gc.ring);
  const auto& D = maps.doubled();
  const auto& R = ring.poly();
  const auto& names = h.basis();
  auto ex = triple_expansions(h);
  Verdict v;
  v.check = "coprod-sigma";
  for (std::size_t i = 0; i < h.dim() && !v.failed(); ++i)
    for (std::size_t j = 0; j < h.dim() && !v.failed(); ++j) {
      Accumulator as(D.poly()), ai(D.poly());
      for (const auto& [li, u] : ex[i].terms)
        for (const auto& [lj, w] : ex[j].terms) {
          const Scalar c = u * w;
          std::vector<Term> fs, fi;
          for (const auto& e : h.mult(li[2], lj[2]))
            fs.push_back({mono_of(R, {ring.T(li[0]), ring.T(lj[0]), ring.U(e.index)}), c * e.coef});
          for (const auto& e : h.mult(li[0], lj[0]))
            fi.push_back({mono_of(R, {ring.T(e.index), ring.U(li[2]), ring.U(lj[2])}), c * e.coef});
          as.add(D.poly().mul(D.left(R.from_terms(std::move(fs))), D.right(gc.sigma_raw[li[1] * h.dim() + lj[1]])));
          ai.add(D.poly().mul(D.left(R.from_terms(std::move(fi))), D.right(gc.sigma_inv_raw[li[1] * h.dim() + lj[1]])));
        }
      const Polynomial rs = as.take(), ri = ai.take();
      v.cases += 4;
      const std::size_t ij = i * h.dim() + j;
      if (!D.nf(D.poly().sub(maps.delta_raw(gc.sigma_raw[ij]), rs)).is_zero()) {
        mismatch(v, ring, {"Delta(sigma)", names[i], names[j]}, D.format(maps.delta(gc.s(i, j))), D.format(D.nf(rs)));
        break;
      }
      if (!D.nf(D.poly().sub(maps.delta_raw(gc.sigma_inv_raw[ij]), ri)).is_zero()) {
        mismatch(v, ring, {"Delta(sigma^-1)", names[i], names[j]}, D.format(maps.delta(gc.sinv(i, j))),
                 D.format(D.nf(ri)));
        break;
      }
      const Scalar ee = h.counit()[i] * h.counit()[j];
      for (int side = 0; side < 2; ++side) {
        const Scalar e = maps.eps(side == 0 ? gc.s(i, j) : gc.sinv(i, j));
        if (e != ee) {
          v.fail({side == 0 ? "eps(sigma)" : "eps(sigma^-1)", names[i], names[j]}, to_string(e), to_string(ee));
          break;
        }
      }
    }
  return v;
}

}  // namespace hopfgen
