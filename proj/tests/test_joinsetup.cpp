#include <gtest/gtest.h>

#include "oracles.hpp"
#include "sasakicone/joinsetup.hpp"

using namespace sasakicone;

TEST(MakeSetup, Examples) {
  const auto a = make_setup(1, Rational(-43137, 1337), 101, 1, Rational(1, 2));
  EXPECT_EQ(a.s, Rational(-200));
  EXPECT_EQ(a.p, 5);
  const auto b = make_setup(2, Rational(4631, 177), 4, 2, Rational(8, 10));
  EXPECT_EQ(b.s, Rational(-3));
  EXPECT_EQ(b.p, 6);
  const auto t = make_setup(1, Rational(1), 1, 5, Rational(1, 2));
  EXPECT_EQ(t.s, Rational(0));
  EXPECT_EQ(t.p, 5);
  EXPECT_EQ(make_setup(1, Rational(0), 0, 3, Rational(1, 2)).s, Rational(2, 3));
}

TEST(MakeSetup, Ranges) {
  EXPECT_THROW(make_setup(0, Rational(1), 0, 1, Rational(1, 2)), DomainError);
  EXPECT_THROW(make_setup(1, Rational(1), 0, 0, Rational(1, 2)), DomainError);
  EXPECT_THROW(make_setup(1, Rational(1), -1, 1, Rational(1, 2)), DomainError);
  EXPECT_THROW(make_setup(1, Rational(1), 0, 1, Rational(0)), DomainError);
  EXPECT_THROW(make_setup(1, Rational(1), 0, 1, Rational(1)), DomainError);
  EXPECT_THROW(make_setup_from_curvature(1, Rational(1), Rational(-2), Rational(3, 2)), DomainError);
}

TEST(JoinSmooth, Examples) {
  EXPECT_TRUE(join_is_smooth({1, 2, 2, 1}));
  EXPECT_FALSE(join_is_smooth({2, 1, 2, 2}));
  EXPECT_FALSE(join_is_smooth({3, 2, 3, 2}));
  for (long l1 = 1; l1 <= 7; ++l1)
    for (long l2 = 1; l2 <= 7; ++l2)
      if (std::gcd(l1, l2) == 1) EXPECT_TRUE(join_is_smooth({l1, l2, 1, 1}));
  EXPECT_THROW(join_is_smooth({2, 4, 1, 1}), DomainError);
}

TEST(JoinSmooth, AgreesWithBruteForceStabilizers) {
  oracle::RationalGen g(21);
  int cases = 0;
  while (cases < 50) {
    const long l1 = g.integer(1, 9), l2 = g.integer(1, 9);
    if (std::gcd(l1, l2) != 1) continue;
    const long o1 = g.integer(1, 6), o2 = g.integer(1, 6);
    EXPECT_EQ(join_is_smooth({l1, l2, o1, o2}), oracle::join_free(l1, l2, o1, o2))
        << l1 << ' ' << l2 << ' ' << o1 << ' ' << o2;
    ++cases;
  }
}

TEST(JoinSmooth, SymmetricUnderSwap) {
  for (long l1 = 1; l1 <= 6; ++l1)
    for (long l2 = 1; l2 <= 6; ++l2)
      for (long o1 = 1; o1 <= 4; ++o1)
        for (long o2 = 1; o2 <= 4; ++o2)
          if (std::gcd(l1, l2) == 1) EXPECT_EQ(join_is_smooth({l1, l2, o1, o2}), join_is_smooth({l2, l1, o2, o1}));
}

TEST(ConeDim, Examples) {
  EXPECT_EQ(cone_dim(1, 2), 2);
  EXPECT_EQ(cone_dim(1, 1), 1);
  EXPECT_EQ(cone_dim(2, 3), 4);
  EXPECT_THROW(cone_dim(0, 2), DomainError);
}

TEST(JoinVectors, Examples) {
  const auto a = join_vectors(1, 1);
  EXPECT_EQ(a.reeb, std::make_pair(Rational(1, 2), Rational(1, 2)));
  EXPECT_EQ(a.lvec, std::make_pair(Rational(1, 2), Rational(-1, 2)));
  EXPECT_EQ(a.contact, std::make_pair(1L, 1L));
  const auto b = join_vectors(2, 3);
  EXPECT_EQ(b.reeb, std::make_pair(Rational(1, 4), Rational(1, 6)));
  EXPECT_EQ(b.lvec, std::make_pair(Rational(1, 4), Rational(-1, 6)));
  EXPECT_EQ(b.contact, std::make_pair(2L, 3L));
  EXPECT_EQ(join_vectors(5, 1).reeb, std::make_pair(Rational(1, 10), Rational(1, 2)));
}

TEST(Polarization, Examples) {
  const auto genus2 = primitive_polarization({{}, -2, 1});
  EXPECT_EQ(genus2.l1, 1L);
  EXPECT_EQ(genus2.l2, 1L);
  const auto plain = primitive_polarization({{Rational(6), Rational(4)}, std::nullopt, 1});
  EXPECT_EQ(plain.scale, Rational(2));
  EXPECT_EQ(plain.primitive, (std::vector<mpz_class>{3, 2}));
  const auto six = primitive_polarization({{}, -6, 2});
  EXPECT_EQ(six.l1, 2L);
  EXPECT_EQ(six.l2, 1L);
  EXPECT_THROW(primitive_polarization({{Rational(1), Rational(-1)}, std::nullopt, 1}), DomainError);
  EXPECT_THROW(primitive_polarization({{Rational(0), Rational(0)}, std::nullopt, 1}), DomainError);
}

TEST(Polarization, PrimitiveReconstructs) {
  oracle::RationalGen g(22);
  for (int i = 0; i < 60; ++i) {
    std::vector<Rational> cls;
    const int n = static_cast<int>(g.integer(1, 4));
    for (int j = 0; j < n; ++j) cls.push_back(g.in(Rational(0), Rational(20), 30));
    if (i % 2) for (auto& c : cls) c = -c;
    const auto pol = primitive_polarization({cls, std::nullopt, 1});
    mpz_class gg = 0;
    for (std::size_t j = 0; j < cls.size(); ++j) {
      EXPECT_EQ(pol.scale * Rational(pol.primitive[j], mpz_class(1)), cls[j]);
      gg = gcd(gg, pol.primitive[j]);
    }
    EXPECT_EQ(gg, 1);
  }
}

TEST(Polarization, KeIndexDivisibleGivesSphereBundle) {
  for (int d = 1; d <= 5; ++d)
    for (long m = 1; m <= 6; ++m) {
      const auto pol = primitive_polarization({{}, -m * (d + 1), d});
      EXPECT_EQ(pol.l2, 1L);
      EXPECT_EQ(pol.l1, m);
    }
  // genus g surface: -I = 2(g-1), d + 1 = 2
  for (long g = 2; g <= 10; ++g) EXPECT_EQ(primitive_polarization({{}, -2 * (g - 1), 1}).l2, 1L);
}
