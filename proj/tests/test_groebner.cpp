#include <doctest.h>

#include <bit>

#include "helpers.hpp"

using namespace reestype;

namespace {

Ideal make_ideal(const PolyRing& R, const std::string& gens) {
  return Ideal(R, R.grevlex(), R.parse_list(gens, R.grevlex()));
}

}  // namespace

TEST_SUITE("groebner") {

TEST_CASE("division remainders") {
  PolyRing R = testutil::ring_xy();
  MonomialOrder ord = R.grevlex();
  auto basis1 = R.parse_list("x", ord);
  CHECK(reduce(R.parse("x^2", ord), basis1, R.field(), ord).is_zero());
  CHECK(reduce(R.parse("x+y", ord), basis1, R.field(), ord) == R.parse("y", ord));
  // one division step by hand: x^2 y + y = y*(x^2 - 1) + 2y
  auto basis2 = R.parse_list("x^2 - 1", ord);
  CHECK(reduce(R.parse("x^2*y + y", ord), basis2, R.field(), ord) ==
        R.parse("2*y", ord));
}

TEST_CASE("division cofactors reproduce the input") {
  PolyRing R = testutil::ring_xy();
  MonomialOrder ord = R.grevlex();
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Polynomial> basis = {testutil::random_poly(R, ord, rng, 2),
                                     testutil::random_poly(R, ord, rng, 2)};
    std::erase_if(basis, [](const Polynomial& p) { return p.is_zero(); });
    if (basis.empty()) continue;
    Polynomial f = testutil::random_poly(R, ord, rng, 4);
    DivisionResult dr = reduce_with_cofactors(f, basis, R.field(), ord);
    Polynomial back = dr.remainder;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      back = poly_add(back, poly_mul(dr.cofactors[i], basis[i], R.field(), ord),
                      R.field(), ord);
    }
    CHECK(back == f);
  }
}

TEST_CASE("buchberger on named inputs") {
  PolyRing R = testutil::ring_xy();
  MonomialOrder ord = R.grevlex();
  SUBCASE("monomial ideal is already a basis") {
    auto gb = buchberger(R.parse_list("x^2, x*y", ord), R.field(), ord);
    REQUIRE(gb.size() == 2);
    CHECK(gb[0] == R.parse("x*y", ord));
    CHECK(gb[1] == R.parse("x^2", ord));
  }
  SUBCASE("linear elimination") {
    auto gb = buchberger(R.parse_list("x - y, x + y", ord), R.field(), ord);
    REQUIRE(gb.size() == 2);
    CHECK(gb[0] == R.parse("y", ord));
    CHECK(gb[1] == R.parse("x", ord));
  }
  SUBCASE("circle meets diagonal (hand Buchberger oracle)") {
    auto gb = buchberger(R.parse_list("x^2 + y^2 - 1, x - y", ord), R.field(), ord);
    // expected, up to normalization: {x - y, 2y^2 - 1}
    REQUIRE(gb.size() == 2);
    CHECK(gb[0] == R.parse("x - y", ord));
    Polynomial two_ysq = R.parse("2*y^2 - 1", ord);
    CHECK(gb[1] == poly_monic(two_ysq, R.field()));
  }
}

TEST_CASE("buchberger is deterministic") {
  PolyRing R(kDefaultPrime, {"x", "y", "z"});
  MonomialOrder ord = R.grevlex();
  auto gens = R.parse_list("x*y - z^2, y^2 - x*z, x^3 - y*z", ord);
  auto gb1 = buchberger(gens, R.field(), ord);
  auto gb2 = buchberger(gens, R.field(), ord);
  REQUIRE(gb1.size() == gb2.size());
  for (std::size_t i = 0; i < gb1.size(); ++i) CHECK(gb1[i] == gb2[i]);
}

TEST_CASE("membership") {
  PolyRing R = testutil::ring_xy();
  CHECK(make_ideal(R, "x").contains(R.parse("x^2", R.grevlex())));
  CHECK_FALSE(make_ideal(R, "x").contains(R.parse("y", R.grevlex())));
  // xy in (x^2+y^2, x^2-y^2) iff xy in (x^2, y^2): no
  CHECK_FALSE(make_ideal(R, "x^2+y^2, x^2-y^2").contains(R.parse("x*y", R.grevlex())));
}

TEST_CASE("membership agrees with an exhaustive low-degree search") {
  PolyRing R = testutil::ring_xy();
  MonomialOrder ord = R.grevlex();
  std::mt19937_64 rng(123);
  // constructed members: the capped linear-algebra oracle and the Groebner
  // route must both certify them
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Polynomial> gens = {testutil::random_poly(R, ord, rng, 2, 3),
                                    testutil::random_poly(R, ord, rng, 2, 3)};
    std::erase_if(gens, [](const Polynomial& p) { return p.is_zero(); });
    if (gens.empty()) continue;
    Polynomial f;
    for (const auto& g : gens) {
      f = poly_add(f, poly_mul(testutil::random_poly(R, ord, rng, 1, 2), g,
                               R.field(), ord),
                   R.field(), ord);
    }
    CHECK(testutil::member_by_linear_algebra(f, gens, R, 3));
    Ideal I(R, ord, gens);
    CHECK(I.contains(f));
  }
  // random candidates: whenever the oracle finds a low-degree certificate,
  // the Groebner route must agree
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Polynomial> gens = {testutil::random_poly(R, ord, rng, 2, 3),
                                    testutil::random_poly(R, ord, rng, 2, 3)};
    std::erase_if(gens, [](const Polynomial& p) { return p.is_zero(); });
    if (gens.empty()) continue;
    Polynomial f = testutil::random_poly(R, ord, rng, 2, 3);
    if (testutil::member_by_linear_algebra(f, gens, R, 3)) {
      Ideal I(R, ord, gens);
      CHECK(I.contains(f));
    }
  }
}

TEST_CASE("lift_membership returns verified witnesses") {
  PolyRing R = testutil::ring_xy();
  MonomialOrder ord = R.grevlex();
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 15; ++trial) {
    std::vector<Polynomial> gens = {testutil::random_poly(R, ord, rng, 2, 3),
                                    testutil::random_poly(R, ord, rng, 2, 3)};
    std::erase_if(gens, [](const Polynomial& p) { return p.is_zero(); });
    if (gens.size() < 2) continue;
    Polynomial f = poly_add(
        poly_mul(testutil::random_poly(R, ord, rng, 2), gens[0], R.field(), ord),
        poly_mul(testutil::random_poly(R, ord, rng, 2), gens[1], R.field(), ord),
        R.field(), ord);
    auto witness = lift_membership(f, gens, R.field(), ord);
    REQUIRE(witness.has_value());
    Polynomial back;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      back = poly_add(back, poly_mul((*witness)[i], gens[i], R.field(), ord),
                      R.field(), ord);
    }
    CHECK(back == poly_reorder(f, R.field(), ord));
  }
  CHECK_FALSE(
      lift_membership(R.parse("y", ord), R.parse_list("x", ord), R.field(), ord)
          .has_value());
}

TEST_CASE("elimination") {
  SUBCASE("two bindings of t") {
    PolyRing R(kDefaultPrime, {"t", "x", "y"});
    Ideal I = make_ideal(R, "t - x, t - y");
    std::size_t front[] = {0};
    Ideal E = I.eliminate(front);
    REQUIRE(E.generators().size() == 1);
    CHECK(poly_monic(E.generators()[0], R.field()) ==
          poly_monic(R.parse("x - y", R.grevlex()), R.field()));
  }
  SUBCASE("eliminating the only variable of (x)") {
    PolyRing R = testutil::ring_xy();
    Ideal I = make_ideal(R, "x");
    std::size_t front[] = {0};
    CHECK(I.eliminate(front).generators().empty());
  }
  SUBCASE("twisted cubic cone") {
    PolyRing R(kDefaultPrime, {"x", "y", "t", "T1", "T2", "T3"});
    Ideal I = make_ideal(R, "T1 - t*x^2, T2 - t*x*y, T3 - t*y^2");
    std::size_t front[] = {2};
    Ideal E = I.eliminate(front);
    Ideal expected = make_ideal(R, "y*T1 - x*T2, y*T2 - x*T3, T2^2 - T1*T3");
    CHECK(E.equals(expected));
  }
  SUBCASE("idempotent over the same block") {
    PolyRing R(kDefaultPrime, {"t", "x", "y"});
    Ideal I = make_ideal(R, "t - x*y, x^2 - t*y");
    std::size_t front[] = {0};
    Ideal E1 = I.eliminate(front);
    Ideal E2 = E1.eliminate(front);
    CHECK(E1.equals(E2));
  }
}

TEST_CASE("colon ideals") {
  PolyRing R = testutil::ring_xy();
  MonomialOrder ord = R.grevlex();
  CHECK(make_ideal(R, "x*y").colon(R.parse("x", ord)).equals(make_ideal(R, "y")));
  CHECK(make_ideal(R, "x").colon(R.parse("x", ord)).equals(make_ideal(R, "1")));
  CHECK(make_ideal(R, "x^2, x*y").colon(R.parse("x", ord)).equals(make_ideal(R, "x, y")));
  CHECK_THROWS_AS(make_ideal(R, "x").colon(Polynomial::zero()), PreconditionError);
}

TEST_CASE("saturation") {
  PolyRing R = testutil::ring_xy();
  MonomialOrder ord = R.grevlex();
  CHECK(make_ideal(R, "x*y").saturate(R.parse("x", ord)).equals(make_ideal(R, "y")));
  CHECK(make_ideal(R, "x^2, x*y").saturate(R.parse("x", ord)).equals(make_ideal(R, "1")));
  CHECK(make_ideal(R, "x^2*y").saturate(R.parse("x*y", ord)).equals(make_ideal(R, "1")));
}

TEST_CASE("intersection") {
  PolyRing R = testutil::ring_xy();
  CHECK(make_ideal(R, "x").intersect(make_ideal(R, "y")).equals(make_ideal(R, "x*y")));
  CHECK(make_ideal(R, "x, y").intersect(make_ideal(R, "x, y")).equals(make_ideal(R, "x, y")));
  PolyRing R4(kDefaultPrime, {"a", "b", "c", "d"});
  // defining ideal of the two-planes ring
  CHECK(make_ideal(R4, "a, c")
            .intersect(make_ideal(R4, "b, d"))
            .equals(make_ideal(R4, "a*b, a*d, c*b, c*d")));
  PolyRing R3(kDefaultPrime, {"x", "y", "z"});
  CHECK_THROWS_AS(make_ideal(R, "x").intersect(make_ideal(R3, "x")), PreconditionError);
}

TEST_CASE("radical membership") {
  PolyRing R = testutil::ring_xy();
  MonomialOrder ord = R.grevlex();
  CHECK(make_ideal(R, "x^2").radical_contains(R.parse("x", ord)));
  CHECK_FALSE(make_ideal(R, "x^2").radical_contains(R.parse("y", ord)));
  // brute-force power oracle: find the least k <= 4 with (x+y)^k in (x^2, y^2)
  Ideal I = make_ideal(R, "x^2, y^2");
  Polynomial f = R.parse("x + y", ord);
  int least_power = 0;
  for (int k = 1; k <= 4 && least_power == 0; ++k) {
    if (I.contains(poly_pow(f, k, R.field(), ord))) least_power = k;
  }
  CHECK(least_power == 3);
  CHECK(I.radical_contains(f));
}

TEST_CASE("dimension via independent sets") {
  PolyRing R = testutil::ring_xy();
  CHECK(Ideal(R, R.grevlex(), {}).dimension() == 2);
  CHECK(make_ideal(R, "x").dimension() == 1);
  CHECK(make_ideal(R, "1").dimension() == -1);
  PolyRing R4(kDefaultPrime, {"a", "b", "c", "d"});
  // independent-set oracle by hand: {a,c} works, no 3-subset does
  CHECK(make_ideal(R4, "a*b, a*d, c*b, c*d").dimension() == 2);
}

TEST_CASE("colon, saturation, dimension properties on random ideals") {
  PolyRing R = testutil::ring_xy();
  MonomialOrder ord = R.grevlex();
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 12; ++trial) {
    std::vector<Polynomial> gens = {testutil::random_poly(R, ord, rng, 2, 3),
                                    testutil::random_poly(R, ord, rng, 2, 3)};
    std::erase_if(gens, [](const Polynomial& p) { return p.is_zero(); });
    if (gens.empty()) continue;
    Polynomial f = testutil::random_poly(R, ord, rng, 2, 2);
    if (f.is_zero()) continue;
    Ideal I(R, ord, gens);
    Ideal C = I.colon(f);
    Ideal S = I.saturate(f);
    // colon(I,f)*f inside I
    for (const auto& g : C.generators()) {
      CHECK(I.contains(poly_mul(g, f, R.field(), ord)));
    }
    // saturate >= colon >= I
    for (const auto& g : I.generators()) CHECK(C.contains(g));
    for (const auto& g : C.generators()) CHECK(S.contains(g));
  }
}

TEST_CASE("dimension + height = variable count on monomial ideals") {
  std::mt19937_64 rng(63);
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t nv = 2 + rng() % 3;
    MonomialIdeal I = testutil::random_monomial_ideal(rng, nv, 4, 2);
    std::vector<std::string> names;
    for (std::size_t v = 0; v < nv; ++v) names.push_back("x" + std::to_string(v + 1));
    PolyRing R(kDefaultPrime, names);
    MonomialOrder ord = R.grevlex();
    std::vector<Polynomial> gens;
    for (const auto& m : I.gens()) gens.push_back(R.monomial_poly(m, ord));
    Ideal J(R, ord, gens);
    // independent oracle: minimal vertex cover of the support hypergraph
    std::size_t best_cover = nv;
    for (std::uint32_t mask = 0; mask < (1u << nv); ++mask) {
      bool covers = true;
      for (const auto& g : I.gens()) {
        bool hit = false;
        for (std::size_t v = 0; v < nv; ++v) {
          if (g[v] > 0 && (mask & (1u << v))) hit = true;
        }
        if (!hit) covers = false;
      }
      if (covers) {
        best_cover =
            std::min<std::size_t>(best_cover, std::popcount(mask));
      }
    }
    CHECK(J.dimension() + static_cast<int>(best_cover) == static_cast<int>(nv));
    CHECK(height_as_codimension(J) == static_cast<int>(best_cover));
  }
}

TEST_CASE("exact division") {
  PolyRing R = testutil::ring_xy();
  MonomialOrder ord = R.grevlex();
  Polynomial a = R.parse("x^2 - y^2", ord);
  Polynomial b = R.parse("x - y", ord);
  CHECK(poly_exact_divide(a, b, R.field(), ord) == R.parse("x + y", ord));
  CHECK_THROWS_AS(poly_exact_divide(R.parse("x^2 + 1", ord), b, R.field(), ord),
                  PreconditionError);
  CHECK_THROWS_AS(poly_exact_divide(a, Polynomial::zero(), R.field(), ord),
                  PreconditionError);
}

TEST_CASE("degree cap aborts runaway computations") {
  PolyRing R = testutil::ring_xy();
  MonomialOrder ord = R.grevlex();
  BuchbergerOptions opt;
  opt.degree_cap = 2;
  auto gens = R.parse_list("x^3 + y, y^2", ord);
  CHECK_THROWS_AS(buchberger(gens, R.field(), ord, opt), DegreeCapError);
}

}  // TEST_SUITE
