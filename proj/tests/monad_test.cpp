#include <gtest/gtest.h>

#include "painleve/monad/monad.hpp"

using namespace painleve::monad;
using painleve::Status;

TEST(MonadIndices, EvenAndOddM) {
  EXPECT_TRUE(w_indices(0).empty());
  EXPECT_EQ(w_indices(1), (std::vector<int>{0}));
  EXPECT_EQ(w_indices(3), (std::vector<int>{0, 2}));
  EXPECT_EQ(w_indices(4), (std::vector<int>{1, 3}));
}

TEST(GenerateCoeffs, EmptyForMZero) { EXPECT_TRUE(generate_coeffs(0).entries.empty()); }

TEST(GenerateCoeffs, MTwoLOne) {
  const auto c = generate_coeffs(2);
  EXPECT_EQ(c.at(1, 0), RootScalar::sqrt_of(Integer(200)));
  EXPECT_EQ(c.at(1, 0), RootScalar::sqrt_of(Integer(2), Rational(10)));
  EXPECT_TRUE(c.at(1, 1).is_zero());
  EXPECT_EQ(c.at(1, 2), RootScalar::sqrt_of(Integer(6), Rational(10)));
  EXPECT_FALSE(c.has(1, 3));
}

TEST(GenerateCoeffs, TruncationOfPRange) {
  for (int m = 0; m <= 10; ++m) {
    const auto c = generate_coeffs(m);
    for (int l : w_indices(m)) {
      for (int p = 0; p <= 3; ++p) EXPECT_EQ(c.has(l, p), p <= std::min(2 * l, 3)) << m << " " << l << " " << p;
    }
  }
}

TEST(GenerateCoeffs, LastAOneVanishes) {
  for (int m = 1; m <= 10; ++m) {
    const auto c = generate_coeffs(m);
    if (c.has(m - 1, 1)) {
      EXPECT_TRUE(c.at(m - 1, 1).is_zero()) << m;
    }
  }
}

TEST(GenerateCoeffs, InjectivityRadicandPositive) {
  for (int m = 1; m <= 10; ++m) {
    for (int l : w_indices(m)) {
      EXPECT_GT(9 * (2 * m + 1) * (2 * m + 1) - (2 * l + 3) * (2 * l + 3), 0);
      EXPECT_FALSE(generate_coeffs(m).at(l, 0).is_zero());
    }
  }
}

TEST(VerifyMonad, AllConditionsHoldUpToTen) {
  for (int m = 0; m <= 10; ++m) {
    const auto rep = verify_monad(generate_coeffs(m));
    EXPECT_TRUE(rep.passed()) << rep.to_json().dump(1);
  }
}

TEST(VerifyMonad, OffDiagonalInstancesExist) {
  const auto rep = verify_monad(generate_coeffs(5));
  int off = 0;
  for (const auto& c : rep.cases) off += c.name.rfind("off-diagonal", 0) == 0;
  EXPECT_EQ(off, 1);  // l = 2 -> 4 for m = 5; l = 0 is excluded
}

TEST(VerifyMonad, DiagonalValuesForMTwo) {
  const auto rep = verify_monad(generate_coeffs(2));
  bool seen = false;
  for (const auto& c : rep.cases) {
    if (c.name == "diagonal-1 l=1") {
      seen = true;
      EXPECT_EQ(c.detail, "lhs=600 rhs=600");
    }
  }
  EXPECT_TRUE(seen);
}

TEST(VerifyMonad, PerturbedEntryFails) {
  auto c = generate_coeffs(2);
  const auto& a = c.at(1, 2);
  c.entries[{1, 2}] = RootScalar::sqrt_of(a.radicand(), a.coeff() + Rational(1));
  const auto rep = verify_monad(c);
  EXPECT_FALSE(rep.passed());
  for (const auto& r : rep.cases) {
    EXPECT_EQ(r.status == Status::pass, r.name != "diagonal-1 l=1") << r.name;
  }
}

TEST(VerifyMonad, ConsistentRescalingPasses) {
  for (int m = 1; m <= 10; ++m) {
    auto c = generate_coeffs(m);
    const int l0 = w_indices(m).front();
    for (auto& [key, v] : c.entries) {
      if (key.first == l0) v = v * Rational(2);
    }
    EXPECT_TRUE(verify_monad(c).passed()) << m;
  }
}

TEST(VerifyMonad, SingleEntryRescalingFails) {
  auto c = generate_coeffs(2);
  c.entries[{1, 0}] = c.at(1, 0) * Rational(2);
  EXPECT_FALSE(verify_monad(c).passed());
}

TEST(SpaceDims, Examples) {
  const auto d3 = space_dims(3);
  EXPECT_EQ(d3.dimW, 6);
  EXPECT_EQ(d3.rank, 2);
  const auto d0 = space_dims(0);
  EXPECT_EQ(d0.dimW, 0);
  EXPECT_EQ(d0.dimVhat, 2);
  EXPECT_EQ(d0.rank, 2);
  EXPECT_EQ(space_dims(4).dimW, 10);
}

TEST(SpaceDims, InvariantsUpToTen) {
  for (int m = 0; m <= 10; ++m) {
    const auto d = space_dims(m);
    EXPECT_EQ(d.dimW, m * (m + 1) / 2);
    EXPECT_EQ(d.dimVhat, d.dimV + 2 * m);
    EXPECT_EQ(d.rank, 2);
    EXPECT_EQ(d.c2, d.dimW);
  }
}
