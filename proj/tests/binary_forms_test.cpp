#include <gtest/gtest.h>

#include <random>

#include "painleve/forms/binary_form.hpp"
#include "painleve/forms/sl2.hpp"
#include "support/form_oracle.hpp"

using painleve::exact::Integer;
using painleve::exact::Rational;
using Form = painleve::forms::BiForm<Rational>;
using namespace painleve::forms;

namespace {

const Form X = Form::x();
const Form Y = Form::y();

using oracle::random_form;
using oracle::random_mixed;
Form oracle_transvectant(const Form& u, const Form& v, int p) { return oracle::transvectant(u, v, p); }

}  // namespace

TEST(Transvectant, ZerothIsProduct) {
  std::mt19937_64 rng(1);
  const Form u = random_form(rng, 3);
  const Form v = random_form(rng, 4);
  EXPECT_EQ(transvectant(u, v, 0), u * v);
}

TEST(Transvectant, FirstOfCoordinates) { EXPECT_EQ(transvectant(X, Y, 1), Form(Rational(1))); }

TEST(Transvectant, ThirdOfCubicMonomials) {
  EXPECT_EQ(transvectant(X * X * Y, X * Y * Y, 3), Form(Rational(-2)));
}

TEST(Transvectant, VanishesBeyondMinDegree) {
  EXPECT_TRUE(transvectant(X * X, Y.pow(5), 3).is_zero());
}

TEST(Transvectant, AgreesWithDerivativeOracle) {
  std::mt19937_64 rng(2);
  for (int n = 0; n < 100; ++n) {
    const Form u = random_mixed(rng, 6);
    const Form v = random_mixed(rng, 6);
    for (int p = 0; p <= 6; ++p) EXPECT_EQ(transvectant(u, v, p), oracle_transvectant(u, v, p));
  }
}

TEST(Transvectant, SymmetryProperty) {
  std::mt19937_64 rng(3);
  for (int n = 0; n < 100; ++n) {
    const Form u = random_mixed(rng, 8);
    const Form v = random_mixed(rng, 8);
    for (int p = 0; p <= 8; ++p) {
      const Form l = transvectant(u, v, p);
      const Form r = transvectant(v, u, p);
      EXPECT_EQ(l, p % 2 == 0 ? r : -r);
    }
  }
}

TEST(Transvectant, PairingValuesOnMonomialBasis) {
  for (int p = 0; p <= 6; ++p) {
    for (int j = 0; j <= p; ++j) {
      for (int k = 0; k <= p; ++k) {
        const Form l = Form::monomial(p - j, j);
        const Form r = Form::monomial(k, p - k);
        const Form t = transvectant(l, r, p);
        if (k != j) {
          EXPECT_TRUE(t.is_zero());
        } else {
          Rational expect(Integer(painleve::exact::factorial(j) * painleve::exact::factorial(p - j)));
          if (j % 2 == 1) expect = -expect;
          EXPECT_EQ(t, Form(expect)) << "p=" << p << " j=" << j;
        }
      }
    }
  }
}

TEST(Transvectant, PairingValuesInGeneralFrame) {
  std::mt19937_64 rng(4);
  for (int n = 0; n < 100; ++n) {
    const Form a = random_form(rng, 1);
    const Form b = random_form(rng, 1);
    const Rational ab = scalar_part(transvectant(a, b, 1));
    const int p = n % 7;
    const int j = static_cast<int>(rng() % static_cast<unsigned>(p + 1));
    Rational expect(Integer(painleve::exact::factorial(j) * painleve::exact::factorial(p - j)));
    if (j % 2 == 1) expect = -expect;
    EXPECT_EQ(pairing(a.pow(p - j) * b.pow(j), a.pow(j) * b.pow(p - j)), expect * ab.pow(p));
  }
}

TEST(Pairing, ExtendsBilinearlyOverDegrees) {
  const Form u = X + X * Y;
  const Form v = Y + X * Y;
  EXPECT_EQ(pairing(u, v), Rational(1) + Rational(-1));
}

TEST(CgComponents, Examples) {
  EXPECT_EQ(cg_components(2, 2), (std::vector<int>{4, 2, 0}));
  EXPECT_EQ(cg_components(3, 3), (std::vector<int>{6, 4, 2, 0}));
  for (int l = 2; l <= 8; ++l) {
    EXPECT_EQ(cg_components(2 * l, 3), (std::vector<int>{2 * l + 3, 2 * l + 1, 2 * l - 1, 2 * l - 3}));
  }
}

TEST(Sl2Basis, StandardFrame) {
  const auto g = sl2_forms(X, Y);
  EXPECT_EQ(g[0], -(X * Y));
  EXPECT_EQ(g[1], (X * X).scaled(Rational(1, 2)));
  EXPECT_EQ(g[2], (Y * Y).scaled(Rational(-1, 2)));
  const auto e = sl2_basis(X, Y);
  EXPECT_EQ(e[0].form(), g[0]);
  EXPECT_EQ(e[1].form(), g[1]);
  EXPECT_EQ(e[2].form(), g[2]);
}

TEST(Sl2Basis, DegenerateFrameThrows) {
  try {
    (void)sl2_basis(X, X.scaled(Rational(3)));
    FAIL();
  } catch (const std::domain_error& e) {
    EXPECT_STREQ(e.what(), "degenerate frame");
  }
}

namespace {
void expect_bracket_relations(const Form& a, const Form& b) {
  const auto g = sl2_forms(a, b);
  EXPECT_EQ(bracket(g[0], g[1]), g[1].scaled(Rational(2)));
  EXPECT_EQ(bracket(g[0], g[2]), g[2].scaled(Rational(-2)));
  EXPECT_EQ(bracket(g[1], g[2]), g[0]);
  EXPECT_EQ(oracle_transvectant(g[0], g[1], 1), g[1].scaled(Rational(2)));
  EXPECT_EQ(oracle_transvectant(g[1], g[2], 1), g[0]);
}
}  // namespace

TEST(Sl2Basis, BracketRelationsStandardFrame) { expect_bracket_relations(X, Y); }

TEST(Sl2Basis, BracketRelationsShearedFrame) {
  const Form a = X + Y;
  EXPECT_EQ(scalar_part(oracle_transvectant(a, Y, 1)), Rational(1));
  expect_bracket_relations(a, Y);
}

TEST(Sl2Basis, BracketRelationsRandomFrames) {
  std::mt19937_64 rng(5);
  int done = 0;
  while (done < 100) {
    const Form a = random_form(rng, 1);
    const Form b = random_form(rng, 1);
    if (scalar_part(transvectant(a, b, 1)).is_zero()) continue;
    expect_bracket_relations(a, b);
    ++done;
  }
}

TEST(Bracket, MonomialExamples) {
  const auto g = sl2_forms(X, Y);
  EXPECT_EQ(bracket(g[0], X.pow(3)), X.pow(3).scaled(Rational(3)));
  EXPECT_EQ(bracket(g[1], Y.pow(3)), (X * Y * Y).scaled(Rational(3)));
  EXPECT_TRUE(bracket(g[1], X.pow(5)).is_zero());
}

TEST(Bracket, MonomialActionProperty) {
  std::mt19937_64 rng(6);
  for (int n = 0; n < 100; ++n) {
    Form a = random_form(rng, 1);
    Form b = random_form(rng, 1);
    if (scalar_part(transvectant(a, b, 1)).is_zero()) continue;
    const auto g = sl2_forms(a, b);
    const int i = static_cast<int>(rng() % 6);
    const int j = static_cast<int>(rng() % 6);
    const Form m = a.pow(i) * b.pow(j);
    EXPECT_EQ(bracket(g[0], m), m.scaled(Rational(i - j)));
    const Form up = j > 0 ? (a.pow(i + 1) * b.pow(j - 1)).scaled(Rational(j)) : Form();
    const Form down = i > 0 ? (a.pow(i - 1) * b.pow(j + 1)).scaled(Rational(i)) : Form();
    EXPECT_EQ(bracket(g[1], m), up);
    EXPECT_EQ(bracket(g[2], m), down);
  }
}

TEST(Bracket, DerivationOfProductProperty) {
  std::mt19937_64 rng(7);
  for (int n = 0; n < 100; ++n) {
    const Form g = random_form(rng, 2);
    const Form u = random_mixed(rng, 5);
    const Form v = random_mixed(rng, 5);
    EXPECT_EQ(bracket(g, u * v), bracket(g, u) * v + u * bracket(g, v));
  }
}

TEST(Bracket, JacobiIdentityProperty) {
  std::mt19937_64 rng(8);
  for (int n = 0; n < 100; ++n) {
    const Form a = random_form(rng, 2);
    const Form b = random_form(rng, 2);
    const Form c = random_form(rng, 2);
    const Form sum = bracket(a, bracket(b, c)) + bracket(b, bracket(c, a)) + bracket(c, bracket(a, b));
    EXPECT_TRUE(sum.is_zero());
  }
}

TEST(Sl2Decompose, RoundTrip) {
  std::mt19937_64 rng(9);
  for (int n = 0; n < 100; ++n) {
    const Form a = random_form(rng, 1);
    const Form b = random_form(rng, 1);
    if (scalar_part(transvectant(a, b, 1)).is_zero()) continue;
    const Form g = random_form(rng, 2);
    EXPECT_EQ(decompose(g, a, b).form(), g);
  }
}

TEST(Sl2Eigen, DiagonalElement) {
  Sl2Elem<Rational> e;
  e.c0 = Rational(-1, 4);
  const auto m = v1_action(e);
  EXPECT_EQ(m[0][0], Rational(-1, 4));
  EXPECT_EQ(m[1][1], Rational(1, 4));
  EXPECT_TRUE(m[0][1].is_zero());
  const auto [l1, l2] = v1_eigenvalues(e);
  EXPECT_EQ(l1, painleve::exact::RootScalar(Rational(1, 4)));
  EXPECT_EQ(l2, painleve::exact::RootScalar(Rational(-1, 4)));
}
