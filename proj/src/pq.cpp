#include "hopfgen/pq.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace hopfgen {

// ---------------------------------------------------------------------------
// FreeWord

FreeWord FreeWord::one() {
  FreeWord w;
  w.terms[{}] = 1;
  return w;
}

FreeWord FreeWord::letter(const Vec& v) {
  FreeWord w;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!hopfgen::is_zero(v[i])) w.terms[{i}] = v[i];
  return w;
}

namespace {

void accumulate(std::map<std::vector<std::size_t>, Scalar>& m, const std::vector<std::size_t>& k, const Scalar& c) {
  if (is_zero(c)) return;
  auto [it, inserted] = m.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (is_zero(it->second)) m.erase(it);
  }
}

void accumulate(std::map<std::vector<std::size_t>, Vec>& m, const std::vector<std::size_t>& k, const Vec& v,
                const Scalar& c) {
  if (is_zero(c) || is_zero(v)) return;
  auto [it, inserted] = m.try_emplace(k, zero_vec(v.size()));
  axpy(it->second, c, v);
  if (is_zero(it->second)) m.erase(it);
}

std::string coefficient_prefix(const Scalar& c, bool first) {
  Scalar a = abs(c);
  std::string s = first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
  if (a != 1) s += to_string(a) + "*";
  return s;
}

std::string word_text(const HopfAlgebra& h, const std::vector<std::size_t>& word) {
  if (word.empty()) return "1";
  std::string s;
  for (std::size_t k = 0; k < word.size(); ++k) {
    if (k) s += "·";
    s += "X[" + h.name(word[k]) + "]";
  }
  return s;
}

}  // namespace

FreeWord FreeWord::operator+(const FreeWord& o) const {
  FreeWord r = *this;
  for (const auto& [w, c] : o.terms) accumulate(r.terms, w, c);
  return r;
}

FreeWord FreeWord::operator-(const FreeWord& o) const { return *this + o.scaled(-1); }

FreeWord FreeWord::operator*(const FreeWord& o) const {
  FreeWord r;
  for (const auto& [a, c] : terms)
    for (const auto& [b, d] : o.terms) {
      auto w = a;
      w.insert(w.end(), b.begin(), b.end());
      accumulate(r.terms, w, c * d);
    }
  return r;
}

FreeWord FreeWord::scaled(const Scalar& c) const {
  FreeWord r;
  if (hopfgen::is_zero(c)) return r;
  for (const auto& [w, d] : terms) r.terms[w] = c * d;
  return r;
}

std::string format_word(const HopfAlgebra& h, const FreeWord& w) {
  if (w.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [word, c] : w.terms) {
    std::string body = word_text(h, word);
    if (word.empty()) {
      s += (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ")) + to_string(abs(c));
    } else {
      s += coefficient_prefix(c, first) + body;
    }
    first = false;
  }
  return s;
}

std::string format_coacted(const HopfAlgebra& h, const CoactedWord& c) {
  if (c.terms.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [word, v] : c.terms) {
    if (!first) s += " + ";
    first = false;
    std::string leg = "(" + format_vec(h.basis(), v) + ")";
    s += c.side == Side::right ? word_text(h, word) + " ⊗ " + leg : leg + " ⊗ " + word_text(h, word);
  }
  return s;
}

// ---------------------------------------------------------------------------
// Coactions

namespace {

CoactedWord coact(const HopfAlgebra& h, const FreeWord& w, Side side) {
  CoactedWord out;
  out.side = side;
  for (const auto& [word, coef] : w.terms) {
    std::map<std::vector<std::size_t>, Vec> state;
    state[{}] = h.unit();
    for (auto letter : word) {
      std::map<std::vector<std::size_t>, Vec> next;
      for (const auto& [u, hv] : state)
        for (const auto& t : h.comult(letter)) {
          auto u2 = u;
          u2.push_back(side == Side::right ? t.left : t.right);
          const std::size_t leg = side == Side::right ? t.right : t.left;
          accumulate(next, u2, h.multiply(hv, h.basis_vec(leg)), t.coef);
        }
      state = std::move(next);
    }
    for (const auto& [u, hv] : state) accumulate(out.terms, u, hv, coef);
  }
  return out;
}

}  // namespace

CoactedWord coact_right(const HopfAlgebra& h, const FreeWord& w) { return coact(h, w, Side::right); }
CoactedWord coact_left(const HopfAlgebra& h, const FreeWord& w) { return coact(h, w, Side::left); }

PQWords build_P_Q(const HopfAlgebra& h, const Vec& x, const Vec& y) {
  PQWords r;
  auto X = [&](const Vec& v) { return FreeWord::letter(v); };
  auto S = [&](const Vec& v) { return h.apply_antipode(v); };
  auto e = [&](std::size_t i) { return h.basis_vec(i); };
  const auto dx = h.coproduct(x), dy = h.coproduct(y);
  for (const auto& [k, c] : dx.terms) {
    r.P = r.P + (X(e(k[0])) * X(S(e(k[1])))).scaled(c);
    r.Pp = r.Pp + (X(S(e(k[0]))) * X(e(k[1]))).scaled(c);
  }
  for (const auto& [k, c] : dx.terms)
    for (const auto& [l, d] : dy.terms) {
      r.Q = r.Q + (X(e(k[0])) * X(e(l[0])) * X(S(h.multiply(e(k[1]), e(l[1]))))).scaled(c * d);
      r.Qp = r.Qp + (X(S(h.multiply(e(k[0]), e(l[0])))) * X(e(k[1])) * X(e(l[1]))).scaled(c * d);
    }
  return r;
}

Verdict check_coinvariance(const HopfAlgebra& h, const FreeWord& w, Side side) {
  Verdict v;
  v.check = side == Side::right ? "coinvariance-right" : "coinvariance-left";
  v.cases = 1;
  auto got = side == Side::right ? coact_right(h, w) : coact_left(h, w);
  CoactedWord expect;
  expect.side = side;
  for (const auto& [word, c] : w.terms) accumulate(expect.terms, word, h.unit(), c);
  if (got != expect) v.fail({format_word(h, w)}, format_coacted(h, got), format_coacted(h, expect));
  return v;
}

// ---------------------------------------------------------------------------
// μ and μ'

std::string format_ring_tensor(const PresentedRing& ring, const RingTensorH& v) {
  std::string s;
  for (std::size_t k = 0; k < v.legs.size(); ++k) {
    if (v.legs[k].is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += "(" + ring.format(v.legs[k]) + ") ⊗ " + ring.hopf().name(k);
  }
  return s.empty() ? "0" : s;
}

RingTensorH multiply(const PresentedRing& ring, const RingTensorH& a, const RingTensorH& b) {
  const auto& h = ring.hopf();
  const auto& R = ring.poly();
  std::vector<std::vector<Term>> acc(h.dim());
  for (std::size_t k = 0; k < h.dim(); ++k) {
    if (a.legs[k].is_zero()) continue;
    for (std::size_t l = 0; l < h.dim(); ++l) {
      if (b.legs[l].is_zero()) continue;
      auto prod = R.mul(a.legs[k], b.legs[l]);
      for (const auto& e : h.mult(k, l))
        for (const auto& t : prod.terms) acc[e.index].push_back({t.mono, t.coef * e.coef});
    }
  }
  RingTensorH out;
  for (auto& terms : acc) out.legs.push_back(ring.nf(R.from_terms(std::move(terms))));
  return out;
}

namespace {

RingTensorH ring_unit(const PresentedRing& ring) {
  RingTensorH u;
  for (const auto& c : ring.hopf().unit()) u.legs.push_back(ring.poly().constant(c));
  return u;
}

RingTensorH mu_letter(const PresentedRing& ring, std::size_t i) {
  const auto& h = ring.hopf();
  const auto& R = ring.poly();
  std::vector<std::vector<Term>> acc(h.dim());
  for (const auto& t : h.comult(i)) acc[t.right].push_back({R.var(ring.T(t.left)).lead().mono, t.coef});
  RingTensorH out;
  for (auto& terms : acc) out.legs.push_back(R.from_terms(std::move(terms)));
  return out;
}

RingTensorH mu_prime_letter(const PresentedRing& ring, std::size_t i) {
  const auto& h = ring.hopf();
  const auto& R = ring.poly();
  std::vector<std::vector<Term>> acc(h.dim());
  for (const auto& t : h.comult(i))
    for (const auto& e : h.antipode(t.left)) acc[e.index].push_back({R.var(ring.U(t.right)).lead().mono, t.coef * e.coef});
  RingTensorH out;
  for (auto& terms : acc) out.legs.push_back(R.from_terms(std::move(terms)));
  return out;
}

RingTensorH scale(const PresentedRing& ring, const RingTensorH& a, const Scalar& c) {
  RingTensorH out;
  for (const auto& p : a.legs) out.legs.push_back(ring.poly().scale(p, c));
  return out;
}

RingTensorH add(const PresentedRing& ring, const RingTensorH& a, const RingTensorH& b) {
  RingTensorH out;
  for (std::size_t k = 0; k < a.legs.size(); ++k) out.legs.push_back(ring.poly().add(a.legs[k], b.legs[k]));
  return out;
}

RingTensorH zero_tensor(const PresentedRing& ring) {
  RingTensorH z;
  z.legs.assign(ring.n(), Polynomial{});
  return z;
}

bool same(const PresentedRing& ring, const RingTensorH& a, const RingTensorH& b) {
  for (std::size_t k = 0; k < a.legs.size(); ++k)
    if (!ring.equal(a.legs[k], b.legs[k])) return false;
  return true;
}

}  // namespace

RingTensorH mu(const PresentedRing& ring, const FreeWord& w) {
  RingTensorH out = zero_tensor(ring);
  for (const auto& [word, c] : w.terms) {
    RingTensorH acc = ring_unit(ring);
    for (auto letter : word) acc = multiply(ring, acc, mu_letter(ring, letter));
    out = add(ring, out, scale(ring, acc, c));
  }
  return out;
}

RingTensorH mu_prime(const PresentedRing& ring, const FreeWord& w) {
  RingTensorH out = zero_tensor(ring);
  for (const auto& [word, c] : w.terms) {
    RingTensorH acc = ring_unit(ring);
    for (auto it = word.rbegin(); it != word.rend(); ++it) acc = multiply(ring, acc, mu_prime_letter(ring, *it));
    out = add(ring, out, scale(ring, acc, c));
  }
  return out;
}

Verdict check_mu_convolution(const PresentedRing& ring) {
  const auto& h = ring.hopf();
  Verdict v;
  v.check = "mu-convolution";
  for (std::size_t i = 0; i < h.dim() && !v.failed(); ++i)
    for (int order = 0; order < 2 && !v.failed(); ++order) {
      RingTensorH acc = zero_tensor(ring);
      for (const auto& t : h.comult(i)) {
        auto a = order == 0 ? mu_letter(ring, t.left) : mu_prime_letter(ring, t.left);
        auto b = order == 0 ? mu_prime_letter(ring, t.right) : mu_letter(ring, t.right);
        acc = add(ring, acc, scale(ring, multiply(ring, a, b), t.coef));
      }
      auto expect = scale(ring, ring_unit(ring), h.counit()[i]);
      ++v.cases;
      if (!same(ring, acc, expect))
        v.fail({order == 0 ? "mu*mu'" : "mu'*mu", h.name(i)}, format_ring_tensor(ring, acc),
               format_ring_tensor(ring, expect));
    }
  return v;
}

// ---------------------------------------------------------------------------
// p, p', q, q'

namespace {

Polynomial p_raw(const PresentedRing& ring, const Vec& x) {
  const auto& h = ring.hopf();
  const auto& R = ring.poly();
  std::vector<Term> acc;
  for (const auto& [k, c] : h.coproduct(x).terms) {
    auto s = h.apply_antipode(h.basis_vec(k[1]));
    for (std::size_t m = 0; m < s.size(); ++m)
      if (!is_zero(s[m])) acc.push_back({R.mul(R.var(ring.T(k[0])), R.var(ring.T(m))).lead().mono, c * s[m]});
  }
  return R.from_terms(std::move(acc));
}

Polynomial pp_raw(const PresentedRing& ring, const Vec& x) {
  const auto& h = ring.hopf();
  const auto& R = ring.poly();
  std::vector<Term> acc;
  for (const auto& [k, c] : h.coproduct(x).terms) {
    auto s = h.apply_antipode(h.basis_vec(k[0]));
    for (std::size_t m = 0; m < s.size(); ++m)
      if (!is_zero(s[m])) acc.push_back({R.mul(R.var(ring.U(m)), R.var(ring.U(k[1]))).lead().mono, c * s[m]});
  }
  return R.from_terms(std::move(acc));
}

Polynomial q_raw(const PresentedRing& ring, const Vec& x, const Vec& y, bool inverse) {
  const auto& h = ring.hopf();
  const auto& R = ring.poly();
  std::vector<Term> acc;
  const auto dy = h.coproduct(y);
  for (const auto& [k, c] : h.coproduct(x).terms)
    for (const auto& [l, d] : dy.terms) {
      const std::size_t outer = inverse ? 0 : 1;  // leg that goes through S(x?y?)
      const std::size_t inner = 1 - outer;
      auto s = h.apply_antipode(h.multiply(h.basis_vec(k[outer]), h.basis_vec(l[outer])));
      for (std::size_t m = 0; m < s.size(); ++m) {
        if (is_zero(s[m])) continue;
        Monomial mono = R.one_monomial();
        if (inverse) {
          ++mono.exp[ring.U(m)];
          ++mono.exp[ring.U(k[inner])];
          ++mono.exp[ring.U(l[inner])];
        } else {
          ++mono.exp[ring.T(m)];
          ++mono.exp[ring.T(k[inner])];
          ++mono.exp[ring.T(l[inner])];
        }
        acc.push_back({std::move(mono), c * d * s[m]});
      }
    }
  return R.from_terms(std::move(acc));
}

// r with v = r ⊗ 1, if v has that shape.
std::optional<Polynomial> unit_leg(const PresentedRing& ring, const RingTensorH& v) {
  const auto& unit = ring.hopf().unit();
  std::size_t k = 0;
  while (is_zero(unit[k])) ++k;
  Polynomial r = ring.poly().scale(v.legs[k], 1 / unit[k]);
  for (std::size_t m = 0; m < unit.size(); ++m)
    if (!ring.equal(v.legs[m], ring.poly().scale(r, unit[m]))) return std::nullopt;
  return ring.nf(r);
}

}  // namespace

Polynomial p_formula(const PresentedRing& ring, const Vec& x) { return ring.nf(p_raw(ring, x)); }
Polynomial pp_formula(const PresentedRing& ring, const Vec& x) { return ring.nf(pp_raw(ring, x)); }
Polynomial q_formula(const PresentedRing& ring, const Vec& x, const Vec& y) { return ring.nf(q_raw(ring, x, y, false)); }
Polynomial qp_formula(const PresentedRing& ring, const Vec& x, const Vec& y) { return ring.nf(q_raw(ring, x, y, true)); }

PQElements pq_elements(const PresentedRing& ring, const Vec& x, const Vec& y) {
  const auto& h = ring.hopf();
  auto words = build_P_Q(h, x, y);
  PQElements out;
  auto take = [&](const char* what, const RingTensorH& word_path, const Polynomial& formula) {
    auto r = unit_leg(ring, word_path);
    if (!r)
      throw MismatchError(std::string(what) + " for (" + format_vec(h.basis(), x) + ", " + format_vec(h.basis(), y) +
                          ") has a non-trivial H-leg: " + format_ring_tensor(ring, word_path));
    if (!ring.equal(*r, formula))
      throw MismatchError(std::string(what) + " for (" + format_vec(h.basis(), x) + ", " + format_vec(h.basis(), y) +
                          "): word path gives " + ring.format(*r) + ", closed formula gives " + ring.format(formula));
    return *r;
  };
  out.p = take("p", mu(ring, words.P), p_formula(ring, x));
  out.pp = take("p'", mu_prime(ring, words.Pp), pp_formula(ring, x));
  out.q = take("q", mu(ring, words.Q), q_formula(ring, x, y));
  out.qp = take("q'", mu_prime(ring, words.Qp), qp_formula(ring, x, y));
  return out;
}

Verdict check_pq_dual_path(const PresentedRing& ring) {
  const auto& h = ring.hopf();
  Verdict v;
  v.check = "pq-dual-path";
  for (std::size_t i = 0; i < h.dim() && !v.failed(); ++i)
    for (std::size_t j = 0; j < h.dim() && !v.failed(); ++j) {
      v.cases += 4;
      try {
        pq_elements(ring, h.basis_vec(i), h.basis_vec(j));
      } catch (const MismatchError& e) {
        v.fail({h.name(i), h.name(j)}, e.what(), "");
      }
    }
  return v;
}

Verdict verify_prop_nice(const GenericCocycle& gc) {
  const auto& ring = *gc.ring;
  const auto& h = ring.hopf();
  const auto& R = ring.poly();
  if (gc.alpha != trivial_cocycle(h)) return Verdict::skipped("prop-nice", "alpha is not the trivial cocycle");
  Verdict v;
  v.check = "prop-nice";
  const std::size_t n = h.dim();
  auto e = [&](std::size_t i) { return h.basis_vec(i); };
  for (std::size_t i = 0; i < n && !v.failed(); ++i)
    for (std::size_t j = 0; j < n && !v.failed(); ++j) {
      std::vector<Term> s, si;
      for (const auto& x : h.comult(i))
        for (const auto& y : h.comult(j)) {
          const Scalar c = x.coef * y.coef;
          auto xy1 = h.multiply(e(x.left), e(y.left));
          auto xy2 = h.multiply(e(x.right), e(y.right));
          for (auto& t : R.mul(q_raw(ring, e(x.left), e(y.left), false), pp_raw(ring, xy2)).terms)
            s.push_back({std::move(t.mono), t.coef * c});
          for (auto& t : R.mul(p_raw(ring, xy1), q_raw(ring, e(x.right), e(y.right), true)).terms)
            si.push_back({std::move(t.mono), t.coef * c});
        }
      v.cases += 2;
      auto rs = R.from_terms(std::move(s)), ri = R.from_terms(std::move(si));
      if (!ring.nf(R.sub(rs, gc.sigma_raw[i * n + j])).is_zero()) {
        v.fail({"sigma", h.name(i), h.name(j)}, ring.format(gc.s(i, j)), ring.format(ring.nf(rs)));
        if (!ring.complete()) v.status = Status::inconclusive;
        break;
      }
      if (!ring.nf(R.sub(ri, gc.sigma_inv_raw[i * n + j])).is_zero()) {
        v.fail({"sigma^-1", h.name(i), h.name(j)}, ring.format(gc.sinv(i, j)), ring.format(ring.nf(ri)));
        if (!ring.complete()) v.status = Status::inconclusive;
      }
    }
  return v;
}

Verdict antipode_pq_cocommutative(const PresentedRing& ring) {
  const auto& h = ring.hopf();
  if (!h.is_cocommutative()) return Verdict::skipped("antipode-pq", "H is not cocommutative");
  Verdict v;
  v.check = "antipode-pq";
  const auto& R = ring.poly();
  const std::size_t n = h.dim();
  std::vector<Polynomial> swap;
  for (std::size_t i = 0; i < n; ++i) swap.push_back(R.var(ring.U(i)));
  for (std::size_t i = 0; i < n; ++i) swap.push_back(R.var(ring.T(i)));
  auto S = [&](const Polynomial& p) { return ring.nf(R.map(p, R, swap)); };
  for (std::size_t i = 0; i < n && !v.failed(); ++i) {
    ++v.cases;
    auto lhs = S(pp_formula(ring, h.basis_vec(i)));
    auto rhs = p_formula(ring, h.basis_vec(i));
    if (!R.sub(lhs, rhs).is_zero()) v.fail({"p", h.name(i)}, ring.format(lhs), ring.format(rhs));
  }
  for (std::size_t i = 0; i < n && !v.failed(); ++i)
    for (std::size_t j = 0; j < n && !v.failed(); ++j) {
      ++v.cases;
      auto lhs = S(qp_formula(ring, h.basis_vec(i), h.basis_vec(j)));
      auto rhs = q_formula(ring, h.basis_vec(i), h.basis_vec(j));
      if (!R.sub(lhs, rhs).is_zero()) v.fail({"q", h.name(i), h.name(j)}, ring.format(lhs), ring.format(rhs));
    }
  if (v.failed() && !ring.complete()) v.status = Status::inconclusive;
  return v;
}

// ---------------------------------------------------------------------------
// Group determinant

Polynomial exact_divide(const PolynomialRing& ring, const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::domain_error("exact_divide: division by zero");
  std::vector<Term> quotient;
  Polynomial r = a;
  while (!r.is_zero()) {
    const auto& lt = r.lead();
    if (!b.lead().mono.divides(lt.mono))
      throw std::domain_error("exact_divide: " + ring.format(b) + " does not divide " + ring.format(a));
    Term t{lt.mono / b.lead().mono, lt.coef / b.lead().coef};
    r = ring.sub_mul(r, t.coef, t.mono, b);
    quotient.push_back(std::move(t));
  }
  return ring.from_terms(std::move(quotient));
}

GroupDeterminant group_determinant(const CayleyTable& g) {
  check_group(g);
  std::vector<std::string> names;
  for (const auto& s : g.names) names.push_back("T_" + s);
  auto ring = std::make_shared<const PolynomialRing>(std::move(names));
  const auto& R = *ring;
  const std::size_t n = g.order();
  std::vector<std::vector<Polynomial>> m(n, std::vector<Polynomial>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) m[a][b] = R.var(g.table[a][g.inverse(b)]);
  Scalar sign = 1;
  Polynomial prev = R.constant(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t piv = k;
    while (piv < n && m[piv][k].is_zero()) ++piv;
    if (piv == n) return {ring, Polynomial{}};
    if (piv != k) {
      std::swap(m[piv], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = exact_divide(R, R.sub(R.mul(m[i][j], m[k][k]), R.mul(m[i][k], m[k][j])), prev);
    prev = m[k][k];
  }
  return {ring, R.scale(m[n - 1][n - 1], sign)};
}

}  // namespace hopfgen
