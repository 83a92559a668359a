#include "hopfgen/scalar.hpp"

#include <stdexcept>

namespace hopfgen {

Scalar make_scalar(long num, long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Scalar s(num, den);
  s.canonicalize();
  return s;
}

namespace {

bool valid_integer(std::string_view t) {
  if (!t.empty() && (t.front() == '-' || t.front() == '+')) t.remove_prefix(1);
  if (t.empty()) return false;
  for (char c : t)
    if (c < '0' || c > '9') return false;
  return true;
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!valid_integer(num) || !valid_integer(den) || den.front() == '-' || den.front() == '+')
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  std::string n(num.front() == '+' ? num.substr(1) : num);
  mpz_class d{std::string(den)};
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Scalar s(mpz_class{n}, d);
  s.canonicalize();
  return s;
}

std::string to_string(const Scalar& s) { return s.get_str(); }

Vec zero_vec(std::size_t n) { return Vec(n, Scalar(0)); }

Vec unit_vec(std::size_t n, std::size_t i) {
  Vec v = zero_vec(n);
  v.at(i) = 1;
  return v;
}

bool is_zero(const Vec& v) {
  for (const auto& x : v)
    if (!is_zero(x)) return false;
  return true;
}

Vec& axpy(Vec& y, const Scalar& a, const Vec& x) {
  if (is_zero(a)) return y;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!is_zero(x[i])) y[i] += a * x[i];
  return y;
}

}  // namespace hopfgen
