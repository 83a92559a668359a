#include "hopfgen/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace hopfgen {

unsigned Monomial::degree() const {
  unsigned d = 0;
  for (auto e : exp) d += e;
  return d;
}

bool Monomial::is_one() const {
  return std::all_of(exp.begin(), exp.end(), [](auto e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exp.size(); ++i)
    if (exp[i] > other.exp[i]) return false;
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < exp.size(); ++i)
    if (exp[i] && other.exp[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial m = *this;
  for (std::size_t i = 0; i < exp.size(); ++i) m.exp[i] = static_cast<std::uint16_t>(m.exp[i] + o.exp[i]);
  return m;
}

Monomial Monomial::operator/(const Monomial& o) const {
  Monomial m = *this;
  for (std::size_t i = 0; i < exp.size(); ++i) m.exp[i] = static_cast<std::uint16_t>(m.exp[i] - o.exp[i]);
  return m;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial m = a;
  for (std::size_t i = 0; i < a.exp.size(); ++i) m.exp[i] = std::max(a.exp[i], b.exp[i]);
  return m;
}

// ---------------------------------------------------------------------------

MonomialOrder MonomialOrder::degrevlex(std::size_t nvars) { return MonomialOrder{{{0, nvars}}}; }

MonomialOrder MonomialOrder::elimination(std::size_t eliminated, std::size_t nvars) {
  return MonomialOrder{{{0, eliminated}, {eliminated, nvars}}};
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  for (const auto& [lo, hi] : blocks) {
    unsigned da = 0, db = 0;
    for (std::size_t i = lo; i < hi; ++i) {
      da += a.exp[i];
      db += b.exp[i];
    }
    if (da != db) return da > db ? 1 : -1;
    for (std::size_t i = lo; i < hi; ++i)
      if (a.exp[i] != b.exp[i]) return a.exp[i] < b.exp[i] ? 1 : -1;
  }
  return 0;
}

std::vector<std::uint16_t> MonomialOrder::sort_key(const Monomial& m) const {
  std::vector<std::uint16_t> key;
  key.reserve(m.exp.size() + blocks.size());
  for (const auto& [lo, hi] : blocks) {
    unsigned d = 0;
    for (std::size_t i = lo; i < hi; ++i) d += m.exp[i];
    key.push_back(static_cast<std::uint16_t>(0xffffu - d));
    key.insert(key.end(), m.exp.begin() + static_cast<std::ptrdiff_t>(lo), m.exp.begin() + static_cast<std::ptrdiff_t>(hi));
  }
  return key;
}

Monomial MonomialOrder::from_sort_key(const std::vector<std::uint16_t>& key) const {
  Monomial m;
  m.exp.reserve(key.size() - blocks.size());
  std::size_t k = 0;
  for (const auto& [lo, hi] : blocks) {
    ++k;
    for (std::size_t i = lo; i < hi; ++i) m.exp.push_back(key[k++]);
  }
  return m;
}

std::string MonomialOrder::describe() const {
  std::ostringstream os;
  os << "degrevlex";
  for (const auto& [lo, hi] : blocks) os << "[" << lo << "," << hi << ")";
  return os.str();
}

// ---------------------------------------------------------------------------

PolynomialRing::PolynomialRing(std::vector<std::string> names, MonomialOrder order)
    : names_(std::move(names)), order_(std::move(order)) {
  std::size_t covered = 0;
  for (const auto& [lo, hi] : order_.blocks) {
    if (lo != covered || hi < lo) throw std::invalid_argument("monomial order blocks must tile the variables");
    covered = hi;
  }
  if (covered != names_.size()) throw std::invalid_argument("monomial order blocks must tile the variables");
}

PolynomialRing::PolynomialRing(std::vector<std::string> names)
    : PolynomialRing(names, MonomialOrder::degrevlex(names.size())) {}

std::size_t PolynomialRing::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  throw std::invalid_argument("unknown variable '" + std::string(name) + "'");
}

Monomial PolynomialRing::one_monomial() const { return Monomial{std::vector<std::uint16_t>(nvars(), 0)}; }

Polynomial PolynomialRing::constant(const Scalar& c) const {
  Polynomial p;
  if (!hopfgen::is_zero(c)) p.terms.push_back({one_monomial(), c});
  return p;
}

Polynomial PolynomialRing::var(std::size_t i) const {
  Monomial m = one_monomial();
  m.exp.at(i) = 1;
  return monomial(m, Scalar(1));
}

Polynomial PolynomialRing::monomial(const Monomial& m, const Scalar& c) const {
  Polynomial p;
  if (!hopfgen::is_zero(c)) p.terms.push_back({m, c});
  return p;
}

Polynomial PolynomialRing::from_terms(std::vector<Term> terms) const {
  std::vector<std::pair<std::vector<std::uint16_t>, std::size_t>> keys;
  keys.reserve(terms.size());
  for (std::size_t i = 0; i < terms.size(); ++i) keys.emplace_back(order_.sort_key(terms[i].mono), i);
  std::sort(keys.begin(), keys.end());
  Polynomial p;
  for (const auto& [key, i] : keys) {
    auto& t = terms[i];
    if (!p.terms.empty() && p.terms.back().mono == t.mono) {
      p.terms.back().coef += t.coef;
      if (hopfgen::is_zero(p.terms.back().coef)) p.terms.pop_back();
    } else if (!hopfgen::is_zero(t.coef)) {
      p.terms.push_back(std::move(t));
    }
  }
  return p;
}

namespace {

template <class F>
Polynomial merge(const PolynomialRing& r, const std::vector<Term>& a, const std::vector<Term>& b, F&& transform_b) {
  Polynomial out;
  out.terms.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  std::optional<Term> tb;
  while (i < a.size() || j < b.size()) {
    if (j == b.size()) {
      out.terms.push_back(a[i++]);
      continue;
    }
    if (!tb) tb = transform_b(b[j]);
    int c = i == a.size() ? -1 : r.compare(a[i].mono, tb->mono);
    if (c > 0) {
      out.terms.push_back(a[i++]);
    } else if (c < 0) {
      out.terms.push_back(std::move(*tb));
      tb.reset();
      ++j;
    } else {
      tb->coef += a[i].coef;
      if (!is_zero(tb->coef)) out.terms.push_back(std::move(*tb));
      tb.reset();
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Polynomial PolynomialRing::add(const Polynomial& a, const Polynomial& b) const {
  return merge(*this, a.terms, b.terms, [](const Term& t) { return t; });
}

Polynomial PolynomialRing::sub(const Polynomial& a, const Polynomial& b) const {
  return merge(*this, a.terms, b.terms, [](const Term& t) { return Term{t.mono, -t.coef}; });
}

Polynomial PolynomialRing::neg(const Polynomial& a) const { return scale(a, Scalar(-1)); }

Polynomial PolynomialRing::scale(const Polynomial& a, const Scalar& c) const {
  if (hopfgen::is_zero(c)) return {};
  Polynomial out = a;
  for (auto& t : out.terms) t.coef *= c;
  return out;
}

Polynomial PolynomialRing::mul_term(const Polynomial& a, const Monomial& m, const Scalar& c) const {
  if (hopfgen::is_zero(c)) return {};
  Polynomial out;
  out.terms.reserve(a.size());
  for (const auto& t : a.terms) out.terms.push_back({t.mono * m, t.coef * c});
  return out;
}

Polynomial PolynomialRing::mul(const Polynomial& a, const Polynomial& b) const {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.size() == 1) return mul_term(b, a.lead().mono, a.lead().coef);
  if (b.size() == 1) return mul_term(a, b.lead().mono, b.lead().coef);
  std::vector<Term> terms;
  terms.reserve(a.size() * b.size());
  for (const auto& x : a.terms)
    for (const auto& y : b.terms) terms.push_back({x.mono * y.mono, x.coef * y.coef});
  return from_terms(std::move(terms));
}

Polynomial PolynomialRing::pow(const Polynomial& a, unsigned e) const {
  Polynomial result = constant(Scalar(1));
  Polynomial base = a;
  while (e) {
    if (e & 1u) result = mul(result, base);
    e >>= 1u;
    if (e) base = mul(base, base);
  }
  return result;
}

Polynomial PolynomialRing::sub_mul(const Polynomial& a, const Scalar& c, const Monomial& m, const Polynomial& b) const {
  return merge(*this, a.terms, b.terms, [&](const Term& t) { return Term{t.mono * m, -c * t.coef}; });
}

Polynomial PolynomialRing::make_monic(const Polynomial& a) const {
  if (a.is_zero() || a.lead().coef == 1) return a;
  return scale(a, 1 / a.lead().coef);
}

unsigned PolynomialRing::total_degree(const Polynomial& a) const {
  unsigned d = 0;
  for (const auto& t : a.terms) d = std::max(d, t.mono.degree());
  return d;
}

Polynomial PolynomialRing::map(const Polynomial& p, const PolynomialRing& target, std::span<const Polynomial> images) const {
  if (images.size() != nvars()) throw std::invalid_argument("PolynomialRing::map: wrong number of images");
  // powers[i][e] = images[i]^e, built lazily
  std::vector<std::vector<Polynomial>> powers(nvars());
  auto power = [&](std::size_t i, unsigned e) -> const Polynomial& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(target.constant(Scalar(1)));
    while (cache.size() <= e) cache.push_back(target.mul(cache.back(), images[i]));
    return cache[e];
  };
  std::vector<Term> acc;
  for (const auto& t : p.terms) {
    Polynomial term = target.constant(t.coef);
    for (std::size_t i = 0; i < nvars() && !term.is_zero(); ++i)
      if (t.mono.exp[i]) term = target.mul(term, power(i, t.mono.exp[i]));
    for (auto& x : term.terms) acc.push_back(std::move(x));
  }
  return target.from_terms(std::move(acc));
}

Scalar PolynomialRing::evaluate(const Polynomial& p, std::span<const Scalar> point) const {
  if (point.size() != nvars()) throw std::invalid_argument("PolynomialRing::evaluate: wrong point size");
  Scalar total = 0;
  for (const auto& t : p.terms) {
    Scalar v = t.coef;
    for (std::size_t i = 0; i < nvars() && !hopfgen::is_zero(v); ++i)
      for (unsigned e = 0; e < t.mono.exp[i]; ++e) v *= point[i];
    total += v;
  }
  return total;
}

Polynomial PolynomialRing::rename(const Polynomial& p, const PolynomialRing& target, std::span<const std::size_t> targets) const {
  if (targets.size() != nvars()) throw std::invalid_argument("PolynomialRing::rename: wrong number of targets");
  std::vector<Term> terms;
  terms.reserve(p.size());
  for (const auto& t : p.terms) {
    Monomial m = target.one_monomial();
    for (std::size_t i = 0; i < nvars(); ++i) m.exp[targets[i]] = static_cast<std::uint16_t>(m.exp[targets[i]] + t.mono.exp[i]);
    terms.push_back({std::move(m), t.coef});
  }
  return target.from_terms(std::move(terms));
}

std::string PolynomialRing::format(const Monomial& m) const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < nvars(); ++i) {
    if (!m.exp[i]) continue;
    if (!first) os << "*";
    os << names_[i];
    if (m.exp[i] > 1) os << "^" << m.exp[i];
    first = false;
  }
  return first ? "1" : os.str();
}

std::string PolynomialRing::format(const Polynomial& p) const {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : p.terms) {
    Scalar c = t.coef;
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    c = abs(c);
    if (t.mono.is_one()) {
      os << c.get_str();
    } else {
      if (c != 1) os << c.get_str() << "*";
      os << format(t.mono);
    }
    first = false;
  }
  return os.str();
}

Polynomial PolynomialRing::parse(std::string_view text) const {
  std::vector<Term> terms;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("cannot parse polynomial '" + std::string(text) + "' at offset " + std::to_string(pos) + ": " + why);
  };
  auto is_name_char = [](char ch) {
    return !std::isspace(static_cast<unsigned char>(ch)) && ch != '+' && ch != '-' && ch != '*' && ch != '^';
  };
  skip_ws();
  if (pos == text.size()) fail("empty input");
  bool first = true;
  while (true) {
    skip_ws();
    if (pos == text.size()) break;
    Scalar sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      if (text[pos] == '-') sign = -1;
      ++pos;
    } else if (!first) {
      fail("expected '+' or '-'");
    }
    first = false;
    Term term{one_monomial(), sign};
    while (true) {
      skip_ws();
      std::size_t start = pos;
      while (pos < text.size() && is_name_char(text[pos])) ++pos;
      std::string_view tok = text.substr(start, pos - start);
      if (tok.empty()) fail("expected factor");
      unsigned e = 1;
      skip_ws();
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        skip_ws();
        std::size_t es = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (es == pos) fail("expected exponent");
        e = static_cast<unsigned>(std::stoul(std::string(text.substr(es, pos - es))));
      }
      if (std::isdigit(static_cast<unsigned char>(tok.front()))) {
        Scalar c = parse_scalar(tok);
        for (unsigned k = 0; k < e; ++k) term.coef *= c;
      } else {
        std::size_t v = index_of(tok);
        term.mono.exp[v] = static_cast<std::uint16_t>(term.mono.exp[v] + e);
      }
      skip_ws();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        continue;
      }
      break;
    }
    terms.push_back(std::move(term));
  }
  return from_terms(std::move(terms));
}

bool PolynomialRing::uses_only(const Polynomial& p, std::size_t begin, std::size_t end) const {
  for (const auto& t : p.terms)
    for (std::size_t i = 0; i < nvars(); ++i)
      if (t.mono.exp[i] && (i < begin || i >= end)) return false;
  return true;
}

}  // namespace hopfgen
