#include <gtest/gtest.h>

#include "oracles.hpp"
#include "sasakicone/reproduce.hpp"
#include "sasakicone/twins.hpp"

using namespace sasakicone;
using oracle::RationalGen;

namespace {

const UniPoly kBoundary{1, 0, -1};

/// Weight 4 profile solved as one linear system in (h_0..h_4, A, B).
std::vector<mpq_class> cp1_oracle(const mpq_class& k, const mpq_class& c) {
  // f^2 (k - H'') + 6 c f H' - 12 c^2 H = A z + B, f = 1 + c z
  std::vector<std::vector<mpq_class>> rows;
  std::vector<mpq_class> rhs;
  const mpq_class known[3] = {k, 2 * c * k, c * c * k};
  for (int j = 0; j <= 4; ++j) {
    std::vector<mpq_class> row(7);
    for (int i = 0; i <= 4; ++i) {
      mpq_class v = 0;
      const mpq_class ii = i;
      if (i >= 2) {
        const mpq_class d2 = ii * (ii - 1);
        if (j == i - 2) v += d2;
        if (j == i - 1) v += 2 * c * d2;
        if (j == i) v += c * c * d2;
      }
      if (i >= 1) {
        if (j == i - 1) v -= 6 * c * ii;
        if (j == i) v -= 6 * c * c * ii;
      }
      if (j == i) v += 12 * c * c;
      row[static_cast<std::size_t>(i)] = v;
    }
    if (j == 1) row[5] = 1;
    if (j == 0) row[6] = 1;
    rows.push_back(row);
    rhs.push_back(j < 3 ? known[j] : mpq_class(0));
  }
  std::vector<mpq_class> hm(7), hp(7), dm(7), dp(7);
  for (int i = 0; i <= 4; ++i) {
    const auto u = static_cast<std::size_t>(i);
    hp[u] = 1;
    hm[u] = i % 2 ? -1 : 1;
    dp[u] = i;
    dm[u] = i % 2 ? i : -i;
  }
  rows.push_back(hm), rhs.push_back(0);
  rows.push_back(hp), rhs.push_back(0);
  rows.push_back(dm), rhs.push_back(2);
  rows.push_back(dp), rhs.push_back(-2);
  return oracle::gauss_solve(rows, rhs);
}

ToricPotential random_potential(RationalGen& g, int n) {
  std::vector<Rational> v;
  for (int i = 0; i < n; ++i) v.push_back(g.in(Rational(-3), Rational(3), 19));
  return make_potential(v, g.in(Rational(1), Rational(9), 13));
}

}  // namespace

TEST(ProfileTwins, Examples) {
  const auto st = examples::twin_pair();
  EXPECT_EQ(st.s, Rational(-4));
  const auto rep = find_profile_twins(st, Rational(1, 2));
  EXPECT_FALSE(rep.continuum);
  EXPECT_EQ(rep.partners, std::vector<Rational>{Rational(-5, 6)});
  const Rational x(1, 2);
  EXPECT_EQ(rep.shared_F, (kBoundary * UniPoly{1, -x} * UniPoly{1, x} * UniPoly{1, x} * UniPoly(Rational(4, 3))));
  EXPECT_EQ(compute_profile(st, Rational(-5, 6)).F, compute_profile(st, Rational(1, 2)).F);
  EXPECT_TRUE(find_profile_twins(examples::no_csc(), Rational(2, 5)).partners.empty());
}

TEST(ProfileTwins, Symmetric) {
  const auto st = examples::twin_pair();
  const auto back = find_profile_twins(st, Rational(-5, 6));
  EXPECT_EQ(back.partners, std::vector<Rational>{Rational(1, 2)});
  for (const auto& s : {examples::no_csc(), examples::quasiregular(), examples::moat(Rational(9, 10))}) {
    for (const Rational& c : {Rational(-1, 3), Rational(1, 7), Rational(3, 4)}) {
      const auto rep = find_profile_twins(s, c);
      for (const auto& cp : rep.partners) {
        EXPECT_NE(cp, c);
        EXPECT_EQ(compute_profile(s, cp).F, rep.shared_F);
        const auto other = find_profile_twins(s, cp).partners;
        EXPECT_NE(std::find(other.begin(), other.end(), c), other.end());
      }
    }
  }
}

TEST(ProfileTwins, QuasiregularFamilyPairs) {
  // a = (5 - x^2)/(1 - x^2), s = -2/x: c = x pairs with c = -5x/3 when that is a ray
  RationalGen g(61);
  for (int i = 0; i < 10; ++i) {
    const Rational x = g.in(Rational(0), Rational(3, 5), 31);
    const auto st = make_setup_from_curvature(1, (Rational(5) - x * x) / (Rational(1) - x * x), Rational(-2) / x, x);
    const auto rep = find_profile_twins(st, x);
    EXPECT_EQ(rep.partners, std::vector<Rational>{Rational(-5) * x / Rational(3)}) << x.to_string();
  }
}

TEST(ProfileTwins, DegenerateSetupIsAContinuum) {
  ProductSetup st;
  st.d = 1;
  st.a = Rational(-3);
  st.s = Rational(0);
  st.x = Rational(0);
  st.p = 5;
  const auto rep = find_profile_twins(st, Rational(1, 3));
  EXPECT_TRUE(rep.continuum);
  EXPECT_EQ(rep.partners.size(), 12U);
  EXPECT_EQ(rep.shared_F, kBoundary);
  for (const auto& c : rep.partners) EXPECT_EQ(compute_profile(st, c).F, kBoundary);
}

TEST(Cp1, Examples) {
  const auto round = cp1_profile(Rational(-2), Rational(0));
  EXPECT_EQ(round.H, kBoundary);
  EXPECT_EQ(round.A, Rational(0));
  EXPECT_EQ(round.B, Rational(-2) + Rational(2));
  for (const Rational& c : {Rational(-7, 8), Rational(1, 3), Rational(9, 10)}) EXPECT_EQ(cp1_profile(Rational(-2), c).H, kBoundary);
  EXPECT_THROW(cp1_profile(Rational(1), Rational(0)), DomainError);
  EXPECT_THROW(cp1_profile(Rational(-20), Rational(9, 10)), DomainError);
  EXPECT_THROW(cp1_profile(Rational(-2), Rational(1)), DomainError);
}

TEST(Cp1, MatchesLinearSolveOracle) {
  RationalGen g(62);
  for (int i = 0; i < 30; ++i) {
    const Rational k = i == 0 ? Rational(-4) : -g.in(Rational(0), Rational(10), 23);
    const Rational c = i == 0 ? Rational(1, 2) : g.in(Rational(-1), Rational(1), 41);
    if ((Rational(12) - (Rational(2) - k) * c * c).sign() <= 0) continue;
    const auto prof = cp1_profile(k, c);
    const auto sol = cp1_oracle(k.raw(), c.raw());
    ASSERT_EQ(sol.size(), 7U);
    std::vector<Rational> h;
    for (int j = 0; j <= 4; ++j) h.emplace_back(sol[static_cast<std::size_t>(j)]);
    EXPECT_EQ(prof.H, UniPoly(h));
    EXPECT_EQ(prof.A, Rational(sol[5]));
    EXPECT_EQ(prof.B, Rational(sol[6]));
  }
}

TEST(Cp1, TwinIdentity) {
  RationalGen g(63);
  int tested = 0;
  while (tested < 50) {
    const Rational k = -g.in(Rational(0), Rational(12), 29);
    const Rational c = g.in(Rational(-1), Rational(1), 41);
    const Rational c2 = g.in(Rational(-1), Rational(1), 43);
    const auto ok = [&](const Rational& t) { return (Rational(12) - (Rational(2) - k) * t * t).sign() > 0; };
    if (!ok(c) || !ok(c2)) continue;
    ++tested;
    EXPECT_EQ(cp1_profile(k, c).H, cp1_profile(k, -c).H);
    if (k != Rational(-2) && c2 != c && c2 != -c) EXPECT_NE(cp1_profile(k, c).H, cp1_profile(k, c2).H);
  }
}

TEST(Cp1Twins, Examples) {
  EXPECT_EQ(cp1_twins(Rational(-4), Rational(1, 3)).partners, std::vector<Rational>{Rational(-1, 3)});
  const auto all = cp1_twins(Rational(-2), Rational(1, 3));
  EXPECT_TRUE(all.continuum);
  EXPECT_FALSE(all.partners.empty());
  const auto none = cp1_twins(Rational(-4), Rational(0));
  EXPECT_TRUE(none.partners.empty());
  EXPECT_FALSE(none.continuum);
}

TEST(Toric, FubiniStudyScalarCurvature) {
  for (int n = 1; n <= 4; ++n) {
    const auto h = cpn_inverse_hessian(n);
    MultiPoly scal(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) scal = scal - h[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].partial(i).partial(j);
    EXPECT_EQ(scal, MultiPoly::constant(n, Rational(2 * n)));
  }
}

TEST(Toric, ConstantWeightGivesConstantScal) {
  for (int n = 1; n <= 3; ++n) {
    const auto pot = make_potential(std::vector<Rational>(static_cast<std::size_t>(n), Rational(0)), Rational(5, 2));
    const Rational scal1(-7, 3);
    EXPECT_EQ(toric_weighted_scal(1, n, 6, scal1, pot), MultiPoly::constant(n, Rational(25, 4) * (scal1 + Rational(2 * n))));
  }
}

TEST(Toric, WeightedScalIsAffineAtTheRightScal1) {
  RationalGen g(64);
  for (int n = 1; n <= 4; ++n)
    for (int p = n; p <= n + 4; ++p) {
      const Rational s1 = scal1_for_weight(n, p);
      bool broken = false;
      for (int i = 0; i < 30; ++i) {
        const auto pot = random_potential(g, n);
        const MultiPoly s = toric_weighted_scal(0, n, p, s1, pot);
        EXPECT_TRUE(s.terms_of_degree_at_least(2).is_zero()) << "n=" << n << " p=" << p;
        broken = broken || !toric_weighted_scal(0, n, p, s1 + Rational(1, 7), pot).is_affine();
      }
      EXPECT_TRUE(broken) << "n=" << n << " p=" << p;
    }
}

TEST(Toric, ManyTwinsScal1) {
  RationalGen g(65);
  for (int d = 0; d <= 3; ++d)
    for (int n = 1; n <= 3; ++n) {
      const Rational s1(-2 * d * (d + 1), n + 1);
      for (int i = 0; i < 5; ++i) EXPECT_TRUE(toric_weighted_scal(d, n, d + n + 2, s1, random_potential(g, n)).is_affine());
    }
}

TEST(Toric, Scal1ParabolaMaximum) {
  for (int n = 1; n <= 6; ++n) {
    // 2(2 - m)(m - 1)/(n + 1) in m = p - n
    const UniPoly q = UniPoly{-2, 3, -1} * UniPoly(Rational(2, n + 1));
    EXPECT_LT(q.leading().sign(), 0);
    const UniPoly dq = q.derivative();
    const Rational top = -dq.coeff(0) / dq.coeff(1);
    EXPECT_EQ(top, Rational(3, 2));
    EXPECT_EQ(q.eval(top), Rational(1, 2 * (n + 1)));
    for (int p = 0; p <= n + 6; ++p) EXPECT_EQ(scal1_for_weight(n, p), q.eval(Rational(p - n)));
  }
}

TEST(TwinWeights, Examples) {
  const auto a = twin_weights(1, 1);
  EXPECT_EQ(a.p_low, 1);
  EXPECT_EQ(a.p_high, 4);
  EXPECT_EQ(a.scal1, Rational(-2));
  for (int n = 1; n <= 5; ++n) {
    const auto w = twin_weights(0, n);
    EXPECT_EQ(w.p_low, n + 1);
    EXPECT_EQ(w.p_high, n + 2);
    EXPECT_EQ(w.scal1, Rational(0));
  }
  const auto b = twin_weights(2, 1);
  EXPECT_EQ(b.p_low, 0);
  EXPECT_EQ(b.p_high, 5);
  EXPECT_EQ(b.scal1, Rational(-6));
  EXPECT_THROW(twin_weights(1, 0), DomainError);
}

TEST(ToricCsc, Examples) {
  const auto a = toric_csc_solutions(2, Rational(1), 1);
  ASSERT_EQ(a.candidates.size(), 2U);
  EXPECT_EQ(a.candidates[0].v, Rational(-1, 2));
  EXPECT_EQ(a.candidates[1].v, Rational(1));
  EXPECT_FALSE(a.any_admissible);
  EXPECT_TRUE(a.trivial_admissible);
  const auto b = toric_csc_solutions(3, Rational(2), 2);
  ASSERT_EQ(b.candidates.size(), 2U);
  EXPECT_EQ(b.candidates[0].v, Rational(-1));
  EXPECT_EQ(b.candidates[1].v, Rational(1));
  EXPECT_FALSE(b.any_admissible);
  EXPECT_THROW(toric_csc_solutions(3, Rational(1), 3), DomainError);
  EXPECT_THROW(toric_csc_solutions(3, Rational(0), 1), DomainError);
}

TEST(ToricCsc, NeverAdmissible) {
  for (int n = 2; n <= 6; ++n)
    for (const Rational& lambda : {Rational(1), Rational(3, 2), Rational(7, 3)})
      for (int l = 1; l < n; ++l) {
        const auto res = toric_csc_solutions(n, lambda, l);
        std::vector<Rational> vs;
        for (const auto& c : res.candidates) {
          vs.push_back(c.v);
          EXPECT_LE(c.min_vertex_value.sign(), 0);
        }
        std::vector<Rational> expect{lambda / Rational(l), -lambda / Rational(n - l + 1)};
        std::sort(expect.begin(), expect.end());
        EXPECT_EQ(vs, expect);
        EXPECT_FALSE(res.any_admissible);
        EXPECT_TRUE(res.trivial_admissible);
      }
}
