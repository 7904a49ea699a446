#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "painleve/exact/poly.hpp"
#include "painleve/exact/poly_over.hpp"
#include "painleve/exact/ratfun.hpp"
#include "painleve/exact/root_scalar.hpp"

using namespace painleve::exact;

namespace {

const Poly W = Poly::w();

Poly random_poly(std::mt19937_64& rng, int max_deg, int bound) {
  std::uniform_int_distribution<int> deg(0, max_deg);
  std::uniform_int_distribution<int> coef(-bound, bound);
  std::uniform_int_distribution<int> den(1, 4);
  const int d = deg(rng);
  std::vector<Rational> c(static_cast<std::size_t>(d) + 1);
  for (auto& x : c) x = Rational(coef(rng), den(rng));
  if (c.back().is_zero()) c.back() = Rational(1);
  return Poly::from_coeffs(c);
}

detail::ZPoly random_zpoly(std::mt19937_64& rng, std::size_t len, int bits) {
  detail::ZPoly z(len);
  gmp_randclass gr(gmp_randinit_default);
  gr.seed(static_cast<unsigned long>(rng()));
  for (auto& c : z) {
    c = gr.get_z_bits(static_cast<mp_bitcnt_t>(bits));
    if (rng() & 1U) c = -c;
  }
  if (sgn(z.back()) == 0) z.back() = 1;
  return z;
}

}  // namespace

TEST(Rational, CanonicalForm) {
  const Rational r(Integer(6), Integer(-4));
  EXPECT_EQ(r.num(), -3);
  EXPECT_EQ(r.den(), 2);
  EXPECT_EQ(Rational::parse("-6/4"), r);
  EXPECT_EQ(Rational(0).den(), 1);
  EXPECT_THROW(Rational::parse("1/0"), std::domain_error);
  EXPECT_THROW(Rational::parse("abc"), std::invalid_argument);
}

TEST(PolyGcd, SharedRoot) {
  EXPECT_EQ(poly_gcd(W * W - 1, W - 1), W - 1);
}

TEST(PolyGcd, WithZero) {
  const Poly p = 3 * W * W + 6;
  EXPECT_EQ(poly_gcd(p, Poly()), (p / Rational(3)));
  EXPECT_EQ(poly_gcd(Poly(), p), p.monic());
  EXPECT_TRUE(poly_gcd(Poly(), Poly()).is_zero());
}

TEST(PolyGcd, CoprimeIsOne) {
  EXPECT_EQ(poly_gcd(W * W + 1, W - 2), Poly(1));
}

TEST(PolyGcd, ScalesOutCommonFactorProperty) {
  std::mt19937_64 rng(20240611);
  for (int i = 0; i < 100; ++i) {
    const Poly p = random_poly(rng, 6, 9);
    const Poly q = random_poly(rng, 6, 9);
    const Poly r = random_poly(rng, 4, 9);
    EXPECT_EQ(poly_gcd(p * r, q * r), r.monic() * poly_gcd(p, q)) << "p=" << p << " q=" << q << " r=" << r;
  }
}

TEST(PolyGcd, LargeDegreeMultiprecision) {
  // A known degree-60 common factor hidden inside degree-400 inputs with
  // ~2000-bit coefficients.
  std::mt19937_64 rng(7);
  const detail::ZPoly g = random_zpoly(rng, 61, 300);
  const detail::ZPoly a = detail::mul(g, random_zpoly(rng, 340, 1700));
  const detail::ZPoly b = detail::mul(g, random_zpoly(rng, 340, 1700));
  const Poly expected = Poly::from_integer(g).monic();
  const Poly got = poly_gcd(Poly::from_integer(a), Poly::from_integer(b));
  // The random cofactors are coprime with overwhelming probability.
  EXPECT_EQ(got, expected);
}

TEST(IntegerPoly, KroneckerAgreesWithSchoolbook) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 40; ++i) {
    const auto a = random_zpoly(rng, 1 + rng() % 60, 1 + static_cast<int>(rng() % 300));
    const auto b = random_zpoly(rng, 1 + rng() % 60, 1 + static_cast<int>(rng() % 300));
    EXPECT_EQ(detail::mul_kronecker(a, b), detail::mul_schoolbook(a, b));
  }
}

TEST(IntegerPoly, ExactDivisionRoutesAgree) {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 40; ++i) {
    const auto a = random_zpoly(rng, 2 + rng() % 40, 1 + static_cast<int>(rng() % 200));
    const auto b = random_zpoly(rng, 2 + rng() % 40, 1 + static_cast<int>(rng() % 200));
    const auto ab = detail::mul(a, b);
    EXPECT_EQ(detail::divide_kronecker(ab, b), a);
    EXPECT_EQ(detail::divide_schoolbook(ab, b), a);
    auto off = ab;
    off[0] += 1;
    EXPECT_FALSE(detail::divide_kronecker(off, b).has_value());
    EXPECT_FALSE(detail::divide_schoolbook(off, b).has_value());
  }
}

TEST(RatFunReduce, CancelsCommonFactor) {
  EXPECT_EQ(ratfun_reduce(W * W - 1, W - 1), RatFun(W + 1));
}

TEST(RatFunReduce, ConstantNormalization) {
  const RatFun r = ratfun_reduce(2 * W, Poly(2));
  EXPECT_EQ(r, RatFun(W));
  EXPECT_EQ(r.den(), Poly(1));
}

TEST(RatFunReduce, HiddenCofactorGivesLambdaZeroPlus) {
  const Poly c = 7 * W * W * W - W + Rational(2, 3);
  const Poly num = (W - 3).pow(2) * (W * W - 1) * c;
  const Poly den = (W - 1) * (W + 3) * (W * W + 3) * c;
  // (w-3)^2 (w+1) / ((w+3)(w^2+3)) once w-1 and c cancel.
  const RatFun expected = RatFun((W - 3).pow(2) * (W + 1)) / RatFun((W + 3) * (W * W + 3));
  const RatFun r = ratfun_reduce(num, den);
  EXPECT_EQ(r, expected);
  EXPECT_EQ(r.den(), ((W + 3) * (W * W + 3)));
  EXPECT_EQ(r.num(), (W - 3).pow(2) * (W + 1));
}

TEST(RatFunReduce, ZeroDenominatorThrows) {
  try {
    (void)ratfun_reduce(W, Poly());
    FAIL() << "expected throw";
  } catch (const std::domain_error& e) {
    EXPECT_STREQ(e.what(), "division by zero rational function");
  }
}

TEST(RatFunReduce, IdempotentProperty) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    const Poly n = random_poly(rng, 6, 7);
    Poly d = random_poly(rng, 6, 7);
    const RatFun r = ratfun_reduce(n, d);
    EXPECT_EQ(ratfun_reduce(r.num(), r.den()), r);
    EXPECT_EQ(r.den().leading(), Rational(1));
    EXPECT_EQ(poly_gcd(r.num(), r.den()).degree(), r.is_zero() ? r.den().degree() : 0);
  }
}

TEST(RatFun, FieldArithmeticAgreesWithEvaluation) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 100; ++i) {
    const RatFun a = ratfun_reduce(random_poly(rng, 4, 6), random_poly(rng, 4, 6));
    const RatFun b = ratfun_reduce(random_poly(rng, 4, 6), random_poly(rng, 4, 6));
    const Rational x(static_cast<long>(rng() % 997) + 101, 13);
    Rational va;
    Rational vb;
    try {
      va = a.evaluate(x);
      vb = b.evaluate(x);
    } catch (const std::domain_error&) {
      continue;
    }
    EXPECT_EQ((a + b).evaluate(x), va + vb);
    EXPECT_EQ((a - b).evaluate(x), va - vb);
    EXPECT_EQ((a * b).evaluate(x), va * vb);
    if (!vb.is_zero()) EXPECT_EQ((a / b).evaluate(x), va / vb);
    EXPECT_EQ(a - a, RatFun());
    EXPECT_EQ((a + b) - b, a);
  }
}

TEST(RatFun, DerivativeMatchesQuotientRuleProperty) {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 100; ++i) {
    const Poly n = random_poly(rng, 5, 6);
    const Poly d = random_poly(rng, 5, 6) * random_poly(rng, 2, 3).pow(2);
    const RatFun r = ratfun_reduce(n, d);
    const RatFun expected = ratfun_reduce(n.derivative() * d - n * d.derivative(), d * d);
    EXPECT_EQ(r.derivative(), expected);
  }
}

TEST(RootScalar, SquareRootTimesItself) {
  const auto s2 = RootScalar::sqrt_of(Integer(2));
  const RootScalar p = root_mul(s2, s2);
  EXPECT_EQ(p, RootScalar(2));
  EXPECT_TRUE(p.is_rational());
}

TEST(RootScalar, ExtractsSquareFactor) {
  const RootScalar p = root_mul(RootScalar::sqrt_of(Integer(6)), RootScalar::sqrt_of(Integer(10)));
  EXPECT_EQ(p.coeff(), Rational(2));
  EXPECT_EQ(p.radicand(), 15);
}

TEST(RootScalar, MonadProductsForMThree) {
  // m = 3, l = 1: a_{1,0} = sqrt(416), a_{3,2} = 9 sqrt(24),
  // a_{1,1} = sqrt(24), a_{3,3} = 9 sqrt(416); both products are 144 sqrt(39).
  const auto a10 = RootScalar::sqrt_of(Integer(416));
  const auto a32 = RootScalar::sqrt_of(Integer(24), Rational(9));
  const auto a11 = RootScalar::sqrt_of(Integer(24));
  const auto a33 = RootScalar::sqrt_of(Integer(416), Rational(9));
  EXPECT_EQ(root_mul(a10, a32), root_mul(a11, a33));
  EXPECT_EQ(root_mul(a10, a32), RootScalar::sqrt_of(Integer(39), Rational(144)));
}

TEST(RootScalar, CanonicalZeroAndMixedAddition) {
  const RootScalar z = RootScalar::sqrt_of(Integer(0), Rational(5));
  EXPECT_TRUE(z.is_zero());
  EXPECT_EQ(z.radicand(), 1);
  EXPECT_THROW((void)(RootScalar::sqrt_of(Integer(2)) + RootScalar::sqrt_of(Integer(3))), std::domain_error);
  EXPECT_EQ(RootScalar::sqrt_of(Integer(8)) + RootScalar::sqrt_of(Integer(2)), RootScalar::sqrt_of(Integer(18)));
  EXPECT_THROW((void)RootScalar::sqrt_of(Integer(-1)), std::domain_error);
}

TEST(RootScalar, CommutativeAssociativeSquaresRationalProperty) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> n(0, 400);
  std::uniform_int_distribution<int> c(-9, 9);
  for (int i = 0; i < 200; ++i) {
    const auto a = RootScalar::sqrt_of(Integer(n(rng)), Rational(c(rng), 1 + (i % 3)));
    const auto b = RootScalar::sqrt_of(Integer(n(rng)), Rational(c(rng)));
    const auto d = RootScalar::sqrt_of(Integer(n(rng)), Rational(c(rng)));
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * d, a * (b * d));
    EXPECT_TRUE((a * a).is_rational());
    EXPECT_EQ((a * a).coeff(), a.square());
  }
}

TEST(PolyOver, EvaluateAndMultiply) {
  using PZ = PolyOver<Rational>;
  const PZ z = PZ::variable();
  const PZ p = (z - PZ(Rational(1))) * (z + PZ(Rational(2)));
  EXPECT_EQ(p.degree(), 2);
  EXPECT_EQ(p.evaluate(Rational(1)), Rational(0));
  EXPECT_EQ(p.evaluate(Rational(3)), Rational(10));
}
