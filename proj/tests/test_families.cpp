#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "riordan/families.hpp"

using namespace riordan;

namespace {

Triangle rows_to_triangle(std::vector<std::vector<long>> rows) {
  Triangle t;
  for (auto& row : rows) t.rows.emplace_back(row.begin(), row.end());
  return t;
}

const Triangle kLbp11 = rows_to_triangle({{1},
                                             {-2, 1},
                                             {2, -4, 1},
                                             {-2, 8, -6, 1},
                                             {2, -12, 18, -8, 1},
                                             {-2, 16, -38, 32, -10, 1}});

const Triangle kGenExample = rows_to_triangle({{1},
                                               {-3, 1},
                                               {7, -6, 1},
                                               {-17, 23, -9, 1},
                                               {41, -76, 48, -12, 1},
                                               {-99, 233, -204, 82, -15, 1}});

FamilyParams fp(long a, long b, Variant v = Variant::prop2) { return {Rat(a), Rat(b), v}; }

}  // namespace

TEST_CASE("lbp_triangle") {
  CHECK(lbp_triangle(fp(1, 1), 6).coeffs == kLbp11);
  CHECK(lbp_triangle(fp(0, 0), 6).coeffs == oracles::identity_triangle(6));
  // (x-2)(x-5) - 3x = x^2 - 10x + 10
  CHECK(lbp_triangle(fp(2, 3), 3).coeffs.rows[2] == std::vector<Rat>{Rat(10), Rat(-10), Rat(1)});

  SUBCASE("prop1 variant starts at x - alpha") {
    const Triangle t = lbp_triangle(fp(1, 1, Variant::prop1), 3).coeffs;
    CHECK(t.rows[1] == std::vector<Rat>{Rat(-1), Rat(1)});
    CHECK(t.rows[2] == std::vector<Rat>{Rat(1), Rat(-3), Rat(1)});
  }

  SUBCASE("recurrence equals the Riordan array, both variants") {
    oracles::RatRng rng;
    for (int trial = 0; trial < 6; ++trial) {
      const FamilyParams p{rng.small(), rng.small(),
                           trial % 2 ? Variant::prop1 : Variant::prop2};
      CHECK(lbp_triangle(p, 12).coeffs == triangle(lbp_array(p, 12)));
    }
  }

  SUBCASE("rows are monic") {
    const Triangle t = lbp_triangle(fp(3, -2), 9).coeffs;
    for (int n = 0; n < 9; ++n) CHECK(t.at(n, n) == Rat(1));
  }

  SUBCASE("local recurrence on the Riordan-built triangle") {
    oracles::RatRng rng;
    for (int trial = 0; trial < 4; ++trial) {
      const Rat alpha = rng.small(), beta = rng.small();
      const Triangle t = triangle(lbp_array({alpha, beta, Variant::prop2}, 10));
      for (int n = 2; n < 10; ++n)
        for (int k = 1; k < n; ++k)
          CHECK(t.at(n, k) ==
                t.at(n - 1, k - 1) - alpha * t.at(n - 1, k) - beta * t.at(n - 2, k - 1));
    }
  }
}

TEST_CASE("coeff_closed_form") {
  CHECK(coeff_closed_form(3, 1, fp(1, 1)) == Rat(8));
  CHECK(coeff_closed_form(4, 2, fp(1, 1)) == Rat(18));
  for (int n = 0; n < 8; ++n) CHECK(coeff_closed_form(n, n, fp(2, 5)) == Rat(1));
  CHECK_THROWS_AS(coeff_closed_form(2, 3, fp(1, 1)), std::out_of_range);

  SUBCASE("matches the recurrence triangle") {
    oracles::RatRng rng;
    for (int trial = 0; trial < 5; ++trial) {
      const FamilyParams p{rng.small(), rng.small(), Variant::prop2};
      const Triangle t = lbp_triangle(p, 12).coeffs;
      for (int n = 0; n < 12; ++n)
        for (int k = 0; k <= n; ++k) CHECK(coeff_closed_form(n, k, p) == t.at(n, k));
    }
  }
}

TEST_CASE("assoc_orthogonal") {
  SUBCASE("(1,1) gives the known orthogonal array") {
    const PolyFamily fam = assoc_orthogonal(fp(1, 1), 6);
    CHECK(fam.coeffs == triangle(assoc_array(fp(1, 1), 6)));
    CHECK(fam.coeffs.rows[2] == std::vector<Rat>{Rat(4), Rat(-5), Rat(1)});
  }

  SUBCASE("beta = 0 collapses to (x - alpha)^n") {
    const Triangle t = assoc_orthogonal(fp(3, 0), 7).coeffs;
    for (int n = 0; n < 7; ++n)
      for (int k = 0; k <= n; ++k)
        CHECK(t.at(n, k) == Rat(binomial(n, k)) * pow(Rat(-3), n - k));
    CHECK(t == lbp_triangle(fp(3, 0), 7).coeffs);
  }

  SUBCASE("recurrence equals the associated Riordan array") {
    oracles::RatRng rng;
    for (int trial = 0; trial < 5; ++trial) {
      const FamilyParams p{rng.small(), rng.small(), Variant::prop2};
      CHECK(assoc_orthogonal(p, 12).coeffs == triangle(assoc_array(p, 12)));
    }
  }
}

TEST_CASE("connection coefficients") {
  SUBCASE("beta = 0 gives the identity") {
    CHECK(connection(fp(4, 0), 6, ConnectionDirection::orthogonal_to_lbp) ==
          oracles::identity_triangle(6));
  }

  SUBCASE("reconstructs the LBP rows from the orthogonal rows at (1,1)") {
    const Triangle conn = connection(fp(1, 1), 6, ConnectionDirection::orthogonal_to_lbp);
    const Triangle built = oracles::matmul(conn, assoc_orthogonal(fp(1, 1), 6).coeffs);
    CHECK(built == kLbp11);
    CHECK(built.rows[3] == std::vector<Rat>{Rat(-2), Rat(8), Rat(-6), Rat(1)});
  }

  SUBCASE("the two directions are mutually inverse and transform both ways") {
    oracles::RatRng rng;
    for (int trial = 0; trial < 5; ++trial) {
      const FamilyParams p{rng.small(), rng.small(), Variant::prop2};
      const Triangle fwd = connection(p, 9, ConnectionDirection::orthogonal_to_lbp);
      const Triangle bwd = connection(p, 9, ConnectionDirection::lbp_to_orthogonal);
      CHECK(oracles::matmul(fwd, bwd) == oracles::identity_triangle(9));
      CHECK(oracles::matmul(fwd, assoc_orthogonal(p, 9).coeffs) == lbp_triangle(p, 9).coeffs);
      CHECK(oracles::matmul(bwd, lbp_triangle(p, 9).coeffs) == assoc_orthogonal(p, 9).coeffs);
    }
  }

  SUBCASE("connection factorization as a Riordan product") {
    oracles::RatRng rng;
    for (int trial = 0; trial < 5; ++trial) {
      const FamilyParams p{rng.small(), rng.small(), Variant::prop2};
      const RiordanArray btilde(RatFunc(Poly{Rat(1)}, Poly{Rat(1)}),
                                RatFunc(Poly{Rat(0), Rat(1)}, Poly{Rat(1), -p.beta}), 10);
      const RiordanArray product = mul(btilde, assoc_array(p, 10));
      CHECK(product.g(10) == lbp_array(p, 10).g(10));
      CHECK(product.f(10) == lbp_array(p, 10).f(10));
    }
  }
}

TEST_CASE("family_eval") {
  SUBCASE("t = 0 reads off column 0") {
    const Triangle t = lbp_triangle(fp(1, 1), 6).coeffs;
    const auto values = family_eval(fp(1, 1), Rat(0), 6);
    for (int n = 0; n < 6; ++n) CHECK(values[n] == t.at(n, 0));
  }

  CHECK(family_eval(fp(1, 1), Rat(1), 6) ==
        std::vector<Rat>{Rat(1), Rat(-1), Rat(-1), Rat(1), Rat(1), Rat(-1)});

  SUBCASE("matches the generating function (1 - beta x)/(1 + (alpha - t) x + beta t x^2)") {
    oracles::RatRng rng;
    for (int trial = 0; trial < 6; ++trial) {
      const FamilyParams p{rng.small(), rng.small(), Variant::prop2};
      const Rat t = trial == 0 ? Rat(2) : rng.small();
      const RatFunc gf(Poly{Rat(1), -p.beta}, Poly{Rat(1), p.alpha - t, p.beta * t});
      CHECK(family_eval(p, t, 10) == expand(gf, 10).coeffs());
    }
  }
}

TEST_CASE("gen_triangle") {
  CHECK(gen_triangle({Rat(2), Rat(1), Rat(1)}, 6).coeffs == kGenExample);
  CHECK(gen_triangle({Rat(0), Rat(0), Rat(5)}, 6).coeffs == oracles::identity_triangle(6));

  SUBCASE("gamma = 0 retrieves the plain family") {
    oracles::RatRng rng;
    for (int trial = 0; trial < 3; ++trial) {
      const Rat a = rng.small(), b = rng.small();
      CHECK(gen_triangle({a, b, Rat(0)}, 10).coeffs ==
            lbp_triangle({a, b, Variant::prop2}, 10).coeffs);
    }
  }

  SUBCASE("recurrence equals the generalized Riordan array") {
    oracles::RatRng rng;
    for (int trial = 0; trial < 5; ++trial) {
      const GenFamilyParams p{rng.small(), rng.small(), rng.small()};
      CHECK(gen_triangle(p, 12).coeffs == triangle(gen_array(p, 12)));
    }
  }
}

TEST_CASE("gen_assoc_orthogonal") {
  SUBCASE("excluded degenerate case") {
    CHECK_THROWS_AS(gen_assoc_array({Rat(2), Rat(1), Rat(3)}, 6), std::invalid_argument);
    CHECK_THROWS_AS(gen_assoc_orthogonal({Rat(1, 2), Rat(1, 2), Rat(1)}, 6), std::invalid_argument);
  }

  SUBCASE("gamma = 0 reduces to the plain associated array") {
    oracles::RatRng rng;
    for (int trial = 0; trial < 4; ++trial) {
      const Rat a = rng.small(), b = rng.small();
      if (a + b == Rat(0)) continue;
      const RiordanArray lhs = gen_assoc_array({a, b, Rat(0)}, 10);
      const RiordanArray rhs = assoc_array({a, b, Variant::prop2}, 10);
      CHECK(lhs.g(10) == rhs.g(10));
      CHECK(lhs.f(10) == rhs.f(10));
    }
  }

  SUBCASE("factorization through Btilde = (1, x/(1 - beta x))") {
    oracles::RatRng rng;
    for (int trial = 0; trial < 5; ++trial) {
      GenFamilyParams p{rng.small(), rng.small(), rng.small()};
      if (p.alpha + p.beta == p.gamma) p.gamma += Rat(1);
      const RiordanArray btilde(RatFunc(Poly{Rat(1)}, Poly{Rat(1)}),
                                RatFunc(Poly{Rat(0), Rat(1)}, Poly{Rat(1), -p.beta}), 10);
      const RiordanArray product = mul(btilde, gen_assoc_array(p, 10));
      CHECK(product.g(10) == gen_array(p, 10).g(10));
      CHECK(product.f(10) == gen_array(p, 10).f(10));
    }
  }
}

TEST_CASE("shift_params") {
  SUBCASE("(2,1,1) shifts to (1,1)") {
    const FamilyParams shifted = shift_params({Rat(2), Rat(1), Rat(1)});
    CHECK(shifted.alpha == Rat(1));
    CHECK(shifted.beta == Rat(1));
    const Triangle gen = gen_triangle({Rat(2), Rat(1), Rat(1)}, 8).coeffs;
    const Triangle plain = lbp_triangle(shifted, 8).coeffs;
    for (int n = 0; n < 8; ++n)
      CHECK(oracles::poly_shift(gen.rows[n], Rat(1)) == plain.rows[n]);
  }

  SUBCASE("gamma = 0 leaves the parameters alone") {
    const FamilyParams s = shift_params({Rat(7), Rat(-2), Rat(0)});
    CHECK(s.alpha == Rat(7));
    CHECK(s.beta == Rat(-2));
  }

  SUBCASE("(5,2,3) shifts to (2,2)") {
    const FamilyParams shifted = shift_params({Rat(5), Rat(2), Rat(3)});
    CHECK(shifted.alpha == Rat(2));
    CHECK(shifted.beta == Rat(2));
    const Triangle gen = gen_triangle({Rat(5), Rat(2), Rat(3)}, 9).coeffs;
    const Triangle plain = lbp_triangle(shifted, 9).coeffs;
    for (int n = 0; n < 9; ++n)
      CHECK(oracles::poly_shift(gen.rows[n], Rat(3)) == plain.rows[n]);
  }

  SUBCASE("the shift identity as a Riordan product, rational parameters") {
    oracles::RatRng rng;
    for (int trial = 0; trial < 5; ++trial) {
      const GenFamilyParams p{rng.small(), rng.small(), rng.small()};
      const Poly bden{Rat(1), -p.gamma};
      const RiordanArray bgamma(RatFunc(Poly{Rat(1)}, bden), RatFunc(Poly{Rat(0), Rat(1)}, bden), 10);
      const RiordanArray product = mul(gen_array(p, 10), bgamma);
      const RiordanArray target = lbp_array(shift_params(p), 10);
      CHECK(product.g(10) == target.g(10));
      CHECK(product.f(10) == target.f(10));
      const Triangle gen = gen_triangle(p, 10).coeffs;
      const Triangle plain = lbp_triangle(shift_params(p), 10).coeffs;
      for (int n = 0; n < 10; ++n)
        CHECK(oracles::poly_shift(gen.rows[n], p.gamma) == plain.rows[n]);
    }
  }
}

TEST_CASE("derivative_triangle") {
  SUBCASE("known rows at (1,1)") {
    const Triangle t = derivative_triangle(fp(1, 1), 3);
    CHECK(t.rows[0] == std::vector<Rat>{Rat(1)});
    CHECK(t.rows[1] == std::vector<Rat>{Rat(-4), Rat(2)});
    CHECK(t.rows[2] == std::vector<Rat>{Rat(8), Rat(-12), Rat(3)});
  }

  SUBCASE("R_0 = 1 for every (alpha, beta)") {
    oracles::RatRng rng;
    for (int trial = 0; trial < 4; ++trial) {
      const Triangle t = derivative_triangle({rng.small(), rng.small(), Variant::prop2}, 1);
      CHECK(t.rows[0] == std::vector<Rat>{Rat(1)});
    }
  }

  SUBCASE("e_{n,k} = (k+1) [x^n] g^2 f^k") {
    oracles::RatRng rng;
    for (int trial = 0; trial < 4; ++trial) {
      const Rat alpha = rng.small(), beta = rng.small();
      const Triangle t = derivative_triangle({alpha, beta, Variant::prop2}, 10);
      const Poly gn{Rat(1), -beta};
      const Poly den{Rat(1), alpha};
      const RiordanArray gsq(RatFunc(gn * gn, den * den), RatFunc(Poly{Rat(0), Rat(1), -beta}, den),
                             10);
      const Triangle structural = triangle(gsq);
      for (int n = 0; n < 10; ++n)
        for (int k = 0; k <= n; ++k)
          CHECK(t.at(n, k) == Rat(k + 1) * structural.at(n, k));
    }
  }
}

TEST_CASE("det_representation") {
  SUBCASE("n = 1 is x - (alpha + beta)") {
    CHECK(det_representation(fp(2, 3), 1) == std::vector<Rat>{Rat(-5), Rat(1)});
    CHECK(det_representation(fp(2, 3, Variant::prop1), 1) == std::vector<Rat>{Rat(-2), Rat(1)});
  }

  CHECK(det_representation(fp(1, 1), 2) == std::vector<Rat>{Rat(2), Rat(-4), Rat(1)});
  CHECK(det_representation(fp(1, 1), 3) == std::vector<Rat>{Rat(-2), Rat(8), Rat(-6), Rat(1)});

  SUBCASE("matches the recurrence rows up to n = 8, both variants") {
    oracles::RatRng rng;
    for (int trial = 0; trial < 5; ++trial) {
      const FamilyParams p{rng.small(), rng.small(),
                           trial % 2 ? Variant::prop1 : Variant::prop2};
      const Triangle t = lbp_triangle(p, 9).coeffs;
      for (int n = 1; n <= 8; ++n) CHECK(det_representation(p, n) == t.rows[n]);
    }
  }
}

TEST_CASE("hessenberg_charpoly on a generic matrix") {
  // [[a, s], [b, c]] -> (x-a)(x-c) - s b
  const Rat a(2), s(3), b(5), c(7);
  const std::vector<std::vector<Rat>> h{{a, s}, {b, c}};
  CHECK(hessenberg_charpoly(h) == std::vector<Rat>{a * c - s * b, -(a + c), Rat(1)});
}
