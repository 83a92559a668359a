#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace hopfgen {

// Exact rational scalar. mpq_class keeps values canonical (reduced, den > 0)
// as long as every construction from raw parts goes through make_scalar/parse_scalar.
using Scalar = mpq_class;

Scalar make_scalar(long num, long den = 1);

// Accepts "p", "-p", "p/q". Throws std::invalid_argument on malformed text or q == 0.
Scalar parse_scalar(std::string_view text);

std::string to_string(const Scalar& s);

inline bool is_zero(const Scalar& s) { return sgn(s) == 0; }

using Vec = std::vector<Scalar>;

Vec zero_vec(std::size_t n);
Vec unit_vec(std::size_t n, std::size_t i);
bool is_zero(const Vec& v);
Vec& axpy(Vec& y, const Scalar& a, const Vec& x);  // y += a*x

}  // namespace hopfgen
