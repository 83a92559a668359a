#include "hopfgen/groebner.hpp"

#include <map>

#include <algorithm>
#include <chrono>
#include <functional>

namespace hopfgen {

Polynomial reduce(const PolynomialRing& ring, const Polynomial& p, const std::vector<const Polynomial*>& divisors) {
  // Pending terms, largest first; each step only touches the divisor's terms.
  // Keyed by the order's sort key, so the map's smallest entry is the leading term.
  const auto& order = ring.order();
  std::map<std::vector<std::uint16_t>, Scalar> work;
  for (const auto& t : p.terms) work.emplace(order.sort_key(t.mono), t.coef);
  Polynomial rem;
  Scalar c, prod;
  while (!work.empty()) {
    auto it = work.begin();
    if (is_zero(it->second)) {
      work.erase(it);
      continue;
    }
    Monomial lead = order.from_sort_key(it->first);
    const Polynomial* div = nullptr;
    for (const auto* g : divisors)
      if (g->lead().mono.divides(lead)) {
        div = g;
        break;
      }
    if (!div) {
      rem.terms.push_back({std::move(lead), std::move(it->second)});
      work.erase(it);
      continue;
    }
    c = it->second / div->lead().coef;
    const Monomial m = lead / div->lead().mono;
    work.erase(it);
    for (std::size_t k = 1; k < div->terms.size(); ++k) {
      const auto& t = div->terms[k];
      auto [pos, inserted] = work.try_emplace(order.sort_key(t.mono * m));
      prod = c * t.coef;
      pos->second -= prod;
      if (!inserted && is_zero(pos->second)) work.erase(pos);
    }
  }
  return rem;
}

GroebnerBasis::GroebnerBasis(RingPtr ring, std::vector<Polynomial> polys, bool complete)
    : ring_(std::move(ring)), polys_(std::move(polys)), complete_(complete) {}

Polynomial GroebnerBasis::normal_form(const Polynomial& p) const {
  std::vector<const Polynomial*> divs;
  divs.reserve(polys_.size());
  for (const auto& g : polys_) divs.push_back(&g);
  return reduce(*ring_, p, divs);
}

bool GroebnerBasis::zero_dimensional() const {
  for (std::size_t v = 0; v < ring_->nvars(); ++v) {
    bool found = false;
    for (const auto& g : polys_) {
      const auto& m = g.lead().mono;
      if (m.exp[v] && m.degree() == m.exp[v]) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

std::optional<std::vector<Monomial>> GroebnerBasis::standard_monomials(std::size_t limit) const {
  if (polys_.size() == 1 && polys_[0].lead().mono.is_one()) return std::vector<Monomial>{};
  if (!zero_dimensional()) return std::nullopt;
  const std::size_t n = ring_->nvars();
  std::vector<Monomial> out;
  Monomial cur = ring_->one_monomial();
  bool overflow = false;
  auto standard = [&](const Monomial& m) {
    for (const auto& g : polys_)
      if (g.lead().mono.divides(m)) return false;
    return true;
  };
  // Standard monomials form an order ideal: extend variable by variable.
  std::function<void(std::size_t)> walk = [&](std::size_t v) {
    if (overflow) return;
    if (v == n) {
      if (out.size() >= limit) {
        overflow = true;
        return;
      }
      out.push_back(cur);
      return;
    }
    for (std::uint16_t e = 0;; ++e) {
      cur.exp[v] = e;
      if (!standard(cur)) break;
      walk(v + 1);
      if (overflow) break;
    }
    cur.exp[v] = 0;
  };
  walk(0);
  if (overflow) return std::nullopt;
  std::sort(out.begin(), out.end(), [this](const Monomial& a, const Monomial& b) { return ring_->compare(a, b) < 0; });
  return out;
}

namespace {

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
  unsigned degree;
};

class Buchberger {
 public:
  Buchberger(RingPtr ring, const GroebnerBudget& budget, GroebnerStats& stats)
      : ring_(std::move(ring)), r_(*ring_), budget_(budget), stats_(stats), start_(std::chrono::steady_clock::now()) {}

  void add_generator(const Polynomial& f) {
    Polynomial h = normal_form(f);
    if (!h.is_zero()) insert(r_.make_monic(h));
  }

  bool run() {
    while (!pairs_.empty()) {
      if (stats_.pairs_reduced >= budget_.max_pairs || elapsed() > budget_.max_seconds) return false;
      auto best = std::min_element(pairs_.begin(), pairs_.end(), [this](const Pair& a, const Pair& b) {
        if (a.degree != b.degree) return a.degree < b.degree;
        return r_.compare(a.lcm, b.lcm) < 0;
      });
      Pair p = std::move(*best);
      *best = std::move(pairs_.back());
      pairs_.pop_back();
      if (p.degree > budget_.degree_bound) {
        ++stats_.pairs_skipped_by_bound;
        bounded_out_ = true;
        continue;
      }
      ++stats_.pairs_reduced;
      Polynomial h = normal_form(spoly(p));
      if (h.is_zero()) {
        ++stats_.zero_reductions;
        continue;
      }
      insert(r_.make_monic(h));
      if (h.lead().mono.is_one()) {
        pairs_.clear();
        break;
      }
    }
    return !bounded_out_;
  }

  std::vector<Polynomial> reduced_basis() const {
    std::vector<Polynomial> basis;
    for (std::size_t k = 0; k < polys_.size(); ++k)
      if (active_[k]) basis.push_back(polys_[k]);
    for (const auto& g : basis)
      if (g.lead().mono.is_one()) return {r_.constant(Scalar(1))};
    // minimalize: drop elements whose leading monomial is divisible by another's
    std::vector<Polynomial> minimal;
    for (std::size_t a = 0; a < basis.size(); ++a) {
      bool redundant = false;
      for (std::size_t b = 0; b < basis.size() && !redundant; ++b) {
        if (a == b) continue;
        const auto& ma = basis[a].lead().mono;
        const auto& mb = basis[b].lead().mono;
        if (mb.divides(ma) && (mb != ma || b < a)) redundant = true;
      }
      if (!redundant) minimal.push_back(basis[a]);
    }
    // tail reduction
    for (std::size_t a = 0; a < minimal.size(); ++a) {
      std::vector<const Polynomial*> others;
      for (std::size_t b = 0; b < minimal.size(); ++b)
        if (b != a) others.push_back(&minimal[b]);
      Polynomial head = r_.monomial(minimal[a].lead().mono, minimal[a].lead().coef);
      Polynomial tail = minimal[a];
      tail.terms.erase(tail.terms.begin());
      minimal[a] = r_.make_monic(r_.add(head, reduce(r_, tail, others)));
    }
    std::sort(minimal.begin(), minimal.end(),
              [this](const Polynomial& a, const Polynomial& b) { return r_.compare(a.lead().mono, b.lead().mono) < 0; });
    return minimal;
  }

 private:
  double elapsed() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

  Polynomial normal_form(const Polynomial& f) const {
    std::vector<const Polynomial*> divs;
    for (std::size_t k = 0; k < polys_.size(); ++k)
      if (active_[k]) divs.push_back(&polys_[k]);
    return reduce(r_, f, divs);
  }

  Polynomial spoly(const Pair& p) const {
    const auto& f = polys_[p.i];
    const auto& g = polys_[p.j];
    Polynomial a = r_.mul_term(f, p.lcm / f.lead().mono, 1 / f.lead().coef);
    return r_.sub_mul(a, 1 / g.lead().coef, p.lcm / g.lead().mono, g);
  }

  // Gebauer–Möller update.
  void insert(Polynomial h) {
    const std::size_t hi = polys_.size();
    const Monomial& lh = h.lead().mono;
    std::vector<Pair> candidates;
    for (std::size_t k = 0; k < polys_.size(); ++k) {
      if (!active_[k]) continue;
      Monomial l = Monomial::lcm(lh, polys_[k].lead().mono);
      unsigned d = l.degree();
      candidates.push_back({k, hi, std::move(l), d});
    }
    stats_.pairs_created += candidates.size();
    // Chain criterion among new pairs; coprime pairs survive this step and are dropped below.
    std::vector<Pair> kept;
    for (std::size_t a = 0; a < candidates.size(); ++a) {
      const auto& p = candidates[a];
      bool coprime = lh.coprime(polys_[p.i].lead().mono);
      bool dominated = false;
      if (!coprime) {
        for (std::size_t b = 0; b < candidates.size() && !dominated; ++b) {
          if (a == b) continue;
          const auto& q = candidates[b];
          if (q.lcm.divides(p.lcm) && (q.lcm != p.lcm || b < a)) {
            // keep one representative among equal lcms
            if (q.lcm != p.lcm) dominated = true;
            else if (!lh.coprime(polys_[q.i].lead().mono)) dominated = true;
          }
        }
      }
      if (!dominated) kept.push_back(p);
    }
    std::vector<Pair> fresh;
    for (auto& p : kept)
      if (!lh.coprime(polys_[p.i].lead().mono)) fresh.push_back(std::move(p));
    // Old pairs made redundant by h.
    std::vector<Pair> old;
    for (auto& p : pairs_) {
      bool redundant = lh.divides(p.lcm) && Monomial::lcm(polys_[p.i].lead().mono, lh) != p.lcm &&
                       Monomial::lcm(lh, polys_[p.j].lead().mono) != p.lcm;
      if (!redundant) old.push_back(std::move(p));
    }
    pairs_ = std::move(old);
    for (auto& p : fresh) pairs_.push_back(std::move(p));
    for (std::size_t k = 0; k < polys_.size(); ++k)
      if (active_[k] && lh.divides(polys_[k].lead().mono)) active_[k] = false;
    polys_.push_back(std::move(h));
    active_.push_back(true);
  }

  RingPtr ring_;
  const PolynomialRing& r_;
  GroebnerBudget budget_;
  GroebnerStats& stats_;
  std::chrono::steady_clock::time_point start_;
  std::vector<Polynomial> polys_;
  std::vector<bool> active_;
  std::vector<Pair> pairs_;
  bool bounded_out_ = false;
};

}  // namespace

GroebnerBasis buchberger(RingPtr ring, const std::vector<Polynomial>& generators, const GroebnerBudget& budget,
                         GroebnerStats* stats) {
  GroebnerStats local;
  GroebnerStats& st = stats ? *stats : local;
  st = GroebnerStats{};
  auto t0 = std::chrono::steady_clock::now();
  std::vector<Polynomial> gens;
  for (const auto& g : generators)
    if (!g.is_zero()) gens.push_back(g);
  std::sort(gens.begin(), gens.end(), [&](const Polynomial& a, const Polynomial& b) {
    return ring->compare(a.lead().mono, b.lead().mono) < 0;
  });
  Buchberger algo(ring, budget, st);
  for (const auto& g : gens) algo.add_generator(g);
  bool complete = algo.run();
  auto basis = algo.reduced_basis();
  st.complete = complete;
  st.basis_size = basis.size();
  st.max_degree = 0;
  for (const auto& p : basis) st.max_degree = std::max(st.max_degree, ring->total_degree(p));
  st.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return GroebnerBasis(std::move(ring), std::move(basis), complete);
}

}  // namespace hopfgen
