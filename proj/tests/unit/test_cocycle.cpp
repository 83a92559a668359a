#include <doctest.h>

#include "hopfgen/cocycle.hpp"

#include <random>

using namespace hopfgen;

namespace {

// Classical group 2-cocycle identity a(g,h)a(gh,k) = a(h,k)a(g,hk).
bool group_cocycle_oracle(const CayleyTable& g, const BilinearForm& a) {
  for (std::size_t x = 0; x < g.order(); ++x)
    for (std::size_t y = 0; y < g.order(); ++y)
      for (std::size_t z = 0; z < g.order(); ++z)
        if (a.at(x, y) * a.at(g.table[x][y], z) != a.at(y, z) * a.at(x, g.table[y][z])) return false;
  return true;
}

BilinearForm sweedler_lazy_cocycle(const HopfAlgebra& h, const Scalar& t) {
  auto a = trivial_cocycle(h);
  a.values(2, 2) = t;
  a.values(2, 3) = -t;
  a.values(3, 2) = t;
  a.values(3, 3) = -t;
  return a;
}

BilinearForm coboundary(const HopfAlgebra& h, const LinearForm& lam) {
  return cohomologous_transform(h, trivial_cocycle(h), lam);
}

}  // namespace

TEST_CASE("convolution inverses") {
  for (const auto& name : catalog_names()) {
    auto h = catalog(name);
    auto e = trivial_cocycle(h);
    CHECK(convolution_inverse(h, e) == e);
    CHECK(convolution_inverse(h, counit_form(h)) == counit_form(h));
  }
  auto k4 = catalog("klein4");
  auto sign = klein_four_sign_cocycle(k4);
  CHECK(convolution_inverse(k4, sign) == sign);

  auto z2 = catalog("z2");
  LinearForm lam{{Scalar(1), Scalar(3)}};
  auto inv = convolution_inverse(z2, lam);
  CHECK(inv.values == Vec{Scalar(1), make_scalar(1, 3)});

  LinearForm degenerate{{Scalar(1), Scalar(0)}};
  CHECK_THROWS_AS(convolution_inverse(z2, degenerate), NotInvertible);
  auto zero = trivial_cocycle(z2);
  zero.values(1, 1) = 0;
  CHECK_THROWS_AS(convolution_inverse(z2, zero), NotInvertible);
}

TEST_CASE("convolution inverse is two-sided on a non-cocommutative algebra") {
  auto h = sweedler_algebra();
  auto a = sweedler_lazy_cocycle(h, make_scalar(3, 2));
  auto inv = convolution_inverse(h, a);
  CHECK(convolve(h, a, inv) == trivial_cocycle(h));
  CHECK(convolve(h, inv, a) == trivial_cocycle(h));
}

TEST_CASE("two-cocycle condition") {
  for (const auto& name : catalog_names()) {
    auto h = catalog(name);
    CHECK(is_two_cocycle(h, trivial_cocycle(h)).passed());
  }
  auto k4 = catalog("klein4");
  auto sign = klein_four_sign_cocycle(k4);
  auto v = is_two_cocycle(k4, sign);
  CHECK(v.passed());
  CHECK(v.cases == 64);

  auto altered = sign;
  altered.values(k4.index_of("b01"), k4.index_of("b10")) = 2;
  auto bad = is_two_cocycle(k4, altered);
  CHECK(bad.failed());
  CHECK(bad.witness.size() == 3);

  auto h = sweedler_algebra();
  CHECK(is_two_cocycle(h, sweedler_lazy_cocycle(h, 1)).passed());
  CHECK(is_two_cocycle(h, sweedler_lazy_cocycle(h, make_scalar(-5, 7))).passed());
}

TEST_CASE("Hopf cocycle condition matches the group cocycle identity on group algebras") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> pick(0, 3);
  const int values[] = {1, -1, 2, 1};
  for (auto g : {cyclic_group(2), cyclic_group(3), klein_four_group(), symmetric_group_3()}) {
    auto h = build_group_algebra(g);
    for (int trial = 0; trial < 30; ++trial) {
      BilinearForm a{Matrix(h.dim(), h.dim())};
      for (std::size_t i = 0; i < h.dim(); ++i)
        for (std::size_t j = 0; j < h.dim(); ++j) a.values(i, j) = values[pick(rng)];
      CHECK(is_two_cocycle(h, a).passed() == group_cocycle_oracle(g, a));
    }
    // coboundaries are cocycles
    LinearForm lam{zero_vec(h.dim())};
    for (auto& x : lam.values) x = values[pick(rng)] + 3;
    auto b = coboundary(h, lam);
    CHECK(group_cocycle_oracle(g, b));
    CHECK(is_two_cocycle(h, b).passed());
  }
  CHECK(group_cocycle_oracle(klein_four_group(), klein_four_sign_cocycle(catalog("klein4"))));
  CHECK(group_cocycle_oracle(symmetric_group_3(), s3_sign_cocycle(catalog("s3"))));
}

TEST_CASE("laziness") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> pick(-3, 3);
  auto s3 = catalog("s3");
  BilinearForm any{Matrix(6, 6)};
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) any.values(i, j) = pick(rng);
  CHECK(is_lazy(s3, any).passed());

  auto h = sweedler_algebra();
  CHECK(is_lazy(h, trivial_cocycle(h)).passed());
  CHECK(is_lazy(h, sweedler_lazy_cocycle(h, 2)).passed());

  // Witness found by random search over forms ε⊗ε + E_{ij}; the first hit is E_{1,x}.
  auto nonlazy = trivial_cocycle(h);
  nonlazy.values(h.index_of("1"), h.index_of("x")) = 1;
  auto v = is_lazy(h, nonlazy);
  REQUIRE(v.failed());
  CHECK(v.witness == std::vector<std::string>{"1", "x"});
  CHECK(v.lhs == "1 + x");
  CHECK(v.rhs == "g + x");
}

TEST_CASE("random search finds non-lazy forms on Sweedler's algebra") {
  auto h = sweedler_algebra();
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> pick(-2, 2);
  bool found = false;
  for (int trial = 0; trial < 50 && !found; ++trial) {
    BilinearForm a{Matrix(4, 4)};
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) a.values(i, j) = pick(rng);
    found = is_lazy(h, a).failed();
  }
  CHECK(found);
}

TEST_CASE("twisted algebras") {
  for (const auto& name : catalog_names()) {
    auto h = catalog(name);
    auto t = twist_algebra(h, trivial_cocycle(h));
    CHECK(t.mult == h.mult_table());
    CHECK(t.unit == h.unit());
    CHECK(t.associative);
    CHECK(t.unital);
  }
  auto k4 = catalog("klein4");
  auto t = twist_algebra(k4, klein_four_sign_cocycle(k4));
  auto b10 = k4.basis_vec(1), b01 = k4.basis_vec(2), b11 = k4.basis_vec(3);
  Vec minus_b11 = b11;
  minus_b11[3] = -1;
  CHECK(t.multiply(b01, b10) == minus_b11);
  CHECK(t.multiply(b10, b01) == b11);
  CHECK(t.cocycle_verified);
  CHECK(t.associative);
  CHECK(t.unital);

  auto bad = klein_four_sign_cocycle(k4);
  bad.values(2, 1) = 2;
  auto tb = twist_algebra(k4, bad);
  CHECK_FALSE(tb.cocycle_verified);
  CHECK_FALSE(tb.associative);
}

TEST_CASE("twisted comodule algebras have trivial coinvariants") {
  auto h = sweedler_algebra();
  for (const auto& a : {trivial_cocycle(h), sweedler_lazy_cocycle(h, 1)}) {
    auto A = as_comodule_algebra(twist_algebra(h, a));
    check_comodule_algebra(h, A);
    auto co = coinvariants(h, A);
    REQUIRE(co.size() == 1);
    CHECK(co[0] == h.unit());
  }
  auto k4 = catalog("klein4");
  CHECK(coinvariants(k4, as_comodule_algebra(twist_algebra(k4, klein_four_sign_cocycle(k4)))).size() == 1);
}

TEST_CASE("cocycle deformation") {
  SUBCASE("cocommutative algebras are undeformed") {
    auto s3 = catalog("s3");
    CHECK(deform_hopf(s3, s3_sign_cocycle(s3)).mult_table() == s3.mult_table());
    auto k4 = catalog("klein4");
    auto l = deform_hopf(k4, klein_four_sign_cocycle(k4));
    CHECK(l.mult_table() == k4.mult_table());
    CHECK(validate_hopf(l).ok());
  }
  SUBCASE("trivial cocycle") {
    for (const auto& name : catalog_names()) {
      auto h = catalog(name);
      CHECK(deform_hopf(h, trivial_cocycle(h)).mult_table() == h.mult_table());
    }
  }
  SUBCASE("lazy cocycles give back H") {
    auto h = sweedler_algebra();
    auto l = deform_hopf(h, sweedler_lazy_cocycle(h, 3));
    CHECK(l.mult_table() == h.mult_table());
  }
  SUBCASE("coboundary on H4 changes the table but stays Hopf") {
    auto h = sweedler_algebra();
    LinearForm lam{{Scalar(1), Scalar(1), Scalar(1), Scalar(0)}};
    auto beta = coboundary(h, lam);
    REQUIRE(is_two_cocycle(h, beta).passed());
    auto l = deform_hopf(h, beta);
    CHECK(validate_hopf(l).ok());
    // f(x) = λ^{-1}(x_1) x_2 λ(x_3) carries H = ^εH^ε isomorphically onto L.
    auto f = deformation_isomorphism(h, lam);
    CHECK(rank(f) == 4);
    CHECK(is_algebra_map(h.basis(), h.mult_table(), h.unit(), l.mult_table(), l.unit(), f).passed());
  }
  SUBCASE("errors") {
    auto k4 = catalog("klein4");
    auto bad = klein_four_sign_cocycle(k4);
    bad.values(2, 1) = 2;
    CHECK_THROWS_AS(deform_hopf(k4, bad), PreconditionViolated);
    auto zero = trivial_cocycle(k4);
    zero.values(1, 1) = 0;
    CHECK_THROWS_AS(deform_hopf(k4, zero), NotInvertible);
  }
}

TEST_CASE("cohomologous cocycles") {
  auto z2 = catalog("z2");
  auto eps = trivial_cocycle(z2);
  CHECK(cohomologous_transform(z2, eps, counit_form(z2)) == eps);

  const Scalar c = 2;
  LinearForm lam{{Scalar(1), c}};
  auto beta = cohomologous_transform(z2, eps, lam);
  CHECK(beta.at(1, 1) == c * c);
  CHECK(beta.at(0, 0) == 1);
  CHECK(beta.at(0, 1) == 1);
  CHECK(beta.at(1, 0) == 1);

  auto f = cohomology_isomorphism(z2, lam);
  auto src = twist_algebra(z2, eps), dst = twist_algebra(z2, beta);
  CHECK(rank(f) == 2);
  CHECK(is_algebra_map(z2.basis(), src.mult, z2.unit(), dst.mult, z2.unit(), f).passed());

  SUBCASE("round trip through the inverse form, and isomorphism of twisted algebras") {
    auto h = sweedler_algebra();
    auto alpha = sweedler_lazy_cocycle(h, 1);
    LinearForm mu{{Scalar(2), Scalar(-1), Scalar(3), make_scalar(1, 2)}};
    auto b = cohomologous_transform(h, alpha, mu);
    CHECK(is_two_cocycle(h, b).passed());
    CHECK(cohomologous_transform(h, b, convolution_inverse(h, mu)) == alpha);
    auto g = cohomology_isomorphism(h, mu);
    CHECK(rank(g) == 4);
    auto ta = twist_algebra(h, alpha), tb = twist_algebra(h, b);
    CHECK(tb.unit != h.unit());  // μ(1) = 2, so β is not normalized
    CHECK(is_algebra_map(h.basis(), ta.mult, ta.unit, tb.mult, tb.unit, g).passed());
  }
  SUBCASE("non-invertible λ") {
    LinearForm bad{{Scalar(1), Scalar(0)}};
    CHECK_THROWS_AS(cohomologous_transform(z2, eps, bad), NotInvertible);
  }
}

TEST_CASE("twisting comodule algebras") {
  auto k4 = catalog("klein4");
  auto A = regular_comodule_algebra(k4);
  check_comodule_algebra(k4, A);
  CHECK(same_algebra(twist_comodule_algebra(k4, A, trivial_cocycle(k4)), A));

  auto sign = klein_four_sign_cocycle(k4);
  auto twisted = twist_comodule_algebra(k4, A, sign);
  CHECK(same_algebra(twisted, as_comodule_algebra(twist_algebra(k4, sign))));
  auto back = twist_comodule_algebra(k4, twisted, convolution_inverse(k4, sign));
  CHECK(same_algebra(back, A));

  auto h = sweedler_algebra();
  auto alpha = sweedler_lazy_cocycle(h, 2);
  auto eps_h = as_comodule_algebra(twist_algebra(h, trivial_cocycle(h)));
  CHECK(same_algebra(twist_comodule_algebra(h, eps_h, alpha), as_comodule_algebra(twist_algebra(h, alpha))));

  auto broken = A;
  broken.coaction[1][0].h = 2;
  CHECK_THROWS_AS(twist_comodule_algebra(k4, broken, sign), StructureError);
}
