#include <gtest/gtest.h>

#include "oracles.hpp"
#include "sasakicone/cscs.hpp"
#include "sasakicone/profile.hpp"
#include "sasakicone/reproduce.hpp"

using namespace sasakicone;
using oracle::RationalGen;

namespace {

const UniPoly kBoundary{1, 0, -1};

using examples::end_on_pos;
using examples::no_csc;
ProductSetup moat9() { return make_setup(2, Rational(76561, 1387), 4, 2, Rational(9, 10)); }

ProductSetup random_setup(RationalGen& g) {
  const int d = static_cast<int>(g.integer(1, 3));
  const Rational a = g.in(Rational(-30), Rational(30), 41);
  const Rational s = g.in(Rational(-10), Rational(4), 23);
  return make_setup_from_curvature(d, a, s, g.in(Rational(0), Rational(1)));
}

/// Unknowns f_0..f_p, A1, A2 solved together from the ODE and endpoints;
/// no moment integrals involved.
struct FullSolve {
  UniPoly F;
  Rational A1, A2;
};

FullSolve full_solve(const ProductSetup& st, const Rational& c) {
  const int p = st.p, n = p + 3;
  const mpq_class cq = c.raw(), x = st.x.raw(), a = st.a.raw(), s = st.s.raw();
  std::vector<std::vector<mpq_class>> rows;
  std::vector<mpq_class> rhs;
  // coefficient of z^j in L(z^i) for L = (cz+1)^2 D^2 - 2(p-1)c(cz+1) D + p(p-1)c^2
  auto op = [&](int i, int j) -> mpq_class {
    mpq_class v = 0;
    const mpq_class ii = i;
    if (i >= 2) {
      const mpq_class k = ii * (ii - 1);
      if (j == i - 2) v += k;
      if (j == i - 1) v += 2 * cq * k;
      if (j == i) v += cq * cq * k;
    }
    if (i >= 1) {
      if (j == i - 1) v -= 2 * (p - 1) * cq * ii;
      if (j == i) v -= 2 * (p - 1) * cq * cq * ii;
    }
    if (j == i) v += p * (p - 1) * cq * cq;
    return v;
  };
  // rhs of the ODE: (cz+1)^2 (2a x z + 2a + 2 s x) - (A1 z + A2)(1 + x z)
  const mpq_class e0 = 2 * a + 2 * s * x, e1 = 2 * a * x;
  const mpq_class known[4] = {e0, e1 + 2 * cq * e0, 2 * cq * e1 + cq * cq * e0, cq * cq * e1};
  for (int j = 0; j <= p; ++j) {
    std::vector<mpq_class> row(static_cast<std::size_t>(n));
    for (int i = 0; i <= p; ++i) row[static_cast<std::size_t>(i)] = op(i, j);
    // move the A terms to the left: + A1 (z + x z^2) + A2 (1 + x z)
    if (j == 1) row[static_cast<std::size_t>(p + 1)] += 1, row[static_cast<std::size_t>(p + 2)] += x;
    if (j == 2) row[static_cast<std::size_t>(p + 1)] += x;
    if (j == 0) row[static_cast<std::size_t>(p + 2)] += 1;
    rows.push_back(row);
    rhs.push_back(j < 4 ? known[j] : mpq_class(0));
  }
  std::vector<mpq_class> fm1(n), fp1(n), dm1(n), dp1(n);
  for (int i = 0; i <= p; ++i) {
    fp1[static_cast<std::size_t>(i)] = 1;
    fm1[static_cast<std::size_t>(i)] = i % 2 ? -1 : 1;
    dp1[static_cast<std::size_t>(i)] = i;
    dm1[static_cast<std::size_t>(i)] = i % 2 ? i : -i;
  }
  rows.push_back(fm1), rhs.push_back(0);
  rows.push_back(fp1), rhs.push_back(0);
  rows.push_back(dm1), rhs.push_back(2 * (1 - x));
  rows.push_back(dp1), rhs.push_back(-2 * (1 + x));
  const auto sol = oracle::gauss_solve(rows, rhs);
  if (sol.empty()) throw std::runtime_error("full system singular");
  std::vector<Rational> f;
  for (int i = 0; i <= p; ++i) f.emplace_back(sol[static_cast<std::size_t>(i)]);
  return {UniPoly(f), Rational(sol[static_cast<std::size_t>(p + 1)]), Rational(sol[static_cast<std::size_t>(p + 2)])};
}

}  // namespace

TEST(Alpha, Examples) {
  RationalGen g(31);
  for (int i = 0; i < 5; ++i) {
    const auto st = random_setup(g);
    EXPECT_EQ(alpha(st, g.in(Rational(-1), Rational(1)), 0, 0), Rational(2));
  }
  const auto st = make_setup_from_curvature(1, Rational(0), Rational(0), Rational(1, 2));
  EXPECT_EQ(alpha(st, Rational(0), 1, -6), Rational(1, 3));
  EXPECT_TRUE(oracle::close(oracle::to_real(alpha(st, Rational(2, 5), 2, -6)), oracle::weighted_moment(2, -6, Rational(2, 5), Rational(1, 2))));
  EXPECT_THROW(alpha(st, Rational(1), 0, -6), DomainError);
}

TEST(Beta, Examples) {
  RationalGen g(32);
  for (int i = 0; i < 5; ++i) {
    const auto st = random_setup(g);
    EXPECT_EQ(beta(st, Rational(0), 0, 0), Rational(2) * st.a + Rational(2) * st.s * st.x + Rational(2));
    EXPECT_EQ(beta(st, Rational(0), 1, 0), Rational(2) * st.a * st.x / Rational(3) + Rational(2) * st.x);
  }
  const auto st = end_on_pos();
  const Rational c(1, 8);
  const oracle::Real cr = oracle::to_real(c), a = oracle::to_real(st.a), s = oracle::to_real(st.s), x = oracle::to_real(st.x);
  const oracle::Real ref =
      oracle::quad([&](const oracle::Real& t) { return (a * (1 + x * t) + s * x) * pow(cr * t + 1, -4); }, oracle::Real(-1), oracle::Real(1)) +
      pow(1 - cr, -4) * (1 - x) + pow(1 + cr, -4) * (1 + x);
  EXPECT_TRUE(oracle::close(oracle::to_real(beta(st, c, 0, -4)), ref));
}

TEST(SolveA, CscExamples) {
  const auto a = solve_A(no_csc(), Rational(2, 5));
  EXPECT_EQ(a.A1, Rational(2, 5) * a.A2);
  const auto m = solve_A(moat9(), Rational(9, 10));
  EXPECT_EQ(m.A1, Rational(9, 10) * m.A2);
}

TEST(SolveA, MatchesFullLinearSolve) {
  RationalGen g(33);
  for (int i = 0; i < 15; ++i) {
    const auto st = random_setup(g);
    const Rational c = i < 5 ? Rational(0) : g.in(Rational(-1), Rational(1));
    const auto ref = full_solve(st, c);
    const auto got = solve_A(st, c);
    EXPECT_EQ(got.A1, ref.A1);
    EXPECT_EQ(got.A2, ref.A2);
    EXPECT_EQ(compute_profile(st, c).F, ref.F);
  }
}

TEST(SolveA, ClassicalCaseAtCZero) {
  // c = 0: F'' = rhs exactly, so F is the classical extremal profile
  RationalGen g(34);
  for (int i = 0; i < 5; ++i) {
    const auto st = random_setup(g);
    const auto prof = compute_profile(st, Rational(0));
    EXPECT_EQ(prof.F.derivative().derivative(), profile_rhs(st, Rational(0), prof.A1, prof.A2));
    EXPECT_LE(prof.F.degree(), 4);
  }
}

TEST(ComputeProfile, GoldenExamples) {
  EXPECT_EQ(compute_profile(no_csc(), Rational(2, 5)).F,
            (kBoundary * UniPoly{5, 2} * UniPoly{-292, 191, 1820} * UniPoly(Rational(1, 8022))));
  EXPECT_EQ(compute_profile(end_on_pos(), Rational(1, 8)).F,
            (kBoundary * UniPoly{8, 1} * UniPoly{326, 142, 29} * UniPoly(Rational(1, 2982))));
  EXPECT_EQ(compute_profile(examples::resurrection(), Rational(3, 5)).F,
            (kBoundary * UniPoly{5, 3} * UniPoly{413335, 59909, -297891, -76401} * UniPoly(Rational(1, 527744))));
}

TEST(ComputeProfile, RejectsOutOfRange) {
  EXPECT_THROW(compute_profile(no_csc(), Rational(1)), DomainError);
  EXPECT_THROW(compute_profile(no_csc(), Rational(-3, 2)), DomainError);
  ProductSetup p4 = no_csc();
  p4.d = 0;
  p4.p = 4;
  EXPECT_THROW(compute_profile(p4, Rational(1, 3)), DomainError);
}

TEST(ComputeProfile, IntegralRepresentationAgainstQuadrature) {
  const auto st = no_csc();
  const Rational c(-3, 7);
  const auto prof = compute_profile(st, c);
  const int p = st.p;
  const oracle::Real cr = oracle::to_real(c);
  const UniPoly rhs = profile_rhs(st, c, prof.A1, prof.A2);
  for (const Rational& z : {Rational(-4, 5), Rational(1, 7), Rational(9, 10)}) {
    const oracle::Real zr = oracle::to_real(z);
    const oracle::Real inner = oracle::quad(
        [&](const oracle::Real& t) { return oracle::eval(rhs, t) * pow(cr * t + 1, -(p + 1)) * (zr - t); }, oracle::Real(-1), zr);
    const oracle::Real head = 2 * (1 - oracle::to_real(st.x)) / pow(1 - cr, p - 1) * (zr + 1);
    const oracle::Real ref = pow(cr * zr + 1, p - 1) * (head + inner);
    EXPECT_TRUE(oracle::close(oracle::to_real(prof.F.eval(z)), ref, oracle::Real("1e-35")));
    EXPECT_EQ(profile_value_by_integral(st, c, prof.A1, prof.A2, z), prof.F.eval(z));
  }
}

TEST(ReconstructScal, Examples) {
  const auto st = no_csc();
  const auto prof = compute_profile(st, Rational(2, 5));
  const UniPoly s = reconstruct_weighted_scal(prof, st);
  EXPECT_EQ(s, UniPoly::linear(prof.A1, prof.A2));
  EXPECT_EQ(s.coeff(1) / s.coeff(0), Rational(2, 5));

  const Rational x(1, 2);
  const auto q = make_setup_from_curvature(1, (Rational(5) - x * x) / (Rational(1) - x * x), Rational(-2) / x, x);
  const auto qp = compute_profile(q, x);
  EXPECT_EQ(qp.F, (kBoundary * UniPoly{1, -x} * UniPoly{1, x} * UniPoly{1, x} * UniPoly((Rational(1) - x * x).inverse())));
  EXPECT_EQ(reconstruct_weighted_scal(qp, q).degree(), 1);

  const auto c0 = make_setup_from_curvature(1, Rational(0), Rational(-3), Rational(1, 3));
  const auto p0 = compute_profile(c0, Rational(0));
  EXPECT_EQ(reconstruct_weighted_scal(p0, c0), UniPoly::linear(p0.A1, p0.A2));
}

TEST(CscSCheck, Examples) {
  EXPECT_TRUE(cscS_check(compute_profile(end_on_pos(), Rational(1, 8))));
  EXPECT_FALSE(cscS_check(compute_profile(no_csc(), Rational(1, 3))));
  ExtremalProfile flat{Rational(0), kBoundary, Rational(0), Rational(5), 5};
  EXPECT_TRUE(cscS_check(flat));
}

TEST(Properties, InvariantsOnRandomSetups) {
  RationalGen g(35);
  for (int i = 0; i < 100; ++i) {
    const auto st = random_setup(g);
    const Rational c = g.in(Rational(-1), Rational(1), 61);
    const auto prof = compute_profile(st, c);
    const Rational one(1), two(2);
    EXPECT_TRUE(prof.F.eval(one).is_zero());
    EXPECT_TRUE(prof.F.eval(-one).is_zero());
    EXPECT_EQ(prof.F.derivative().eval(-one), two * (one - st.x));
    EXPECT_EQ(prof.F.derivative().eval(one), -two * (one + st.x));
    EXPECT_TRUE(ode_residual(st, c, prof.F, prof.A1, prof.A2).is_zero());
    const UniPoly cof = profile_cofactor(prof);
    EXPECT_FALSE(cof.eval(one).is_zero());
    EXPECT_FALSE(cof.eval(-one).is_zero());
    EXPECT_EQ(reconstruct_weighted_scal(prof, st), UniPoly::linear(prof.A1, prof.A2));
  }
}

TEST(Properties, CscSCheckIffConditionVanishes) {
  const std::vector<std::pair<ProductSetup, Rational>> known{
      {no_csc(), Rational(2, 5)}, {end_on_pos(), Rational(1, 8)}, {moat9(), Rational(9, 10)},
      {make_setup(1, Rational(419, 19), 11, 9, Rational(9, 10)), Rational(9, 10)}};
  for (const auto& [st, c] : known) {
    EXPECT_TRUE(cscS_check(compute_profile(st, c)));
    EXPECT_TRUE(csc_condition(st, c).is_zero());
  }
  RationalGen g(36);
  for (int i = 0; i < 50; ++i) {
    const auto st = random_setup(g);
    const Rational c = g.in(Rational(-1), Rational(1));
    EXPECT_EQ(cscS_check(compute_profile(st, c)), csc_condition(st, c).is_zero());
  }
  // and on setups built so that c = x is a root: a = (5 - x^2)/(1 - x^2), s = -2/x
  for (int i = 0; i < 10; ++i) {
    const Rational x = g.in(Rational(0), Rational(1));
    const auto st = make_setup_from_curvature(1, (Rational(5) - x * x) / (Rational(1) - x * x), Rational(-2) / x, x);
    EXPECT_TRUE(cscS_check(compute_profile(st, x)));
    EXPECT_TRUE(csc_condition(st, x).is_zero());
  }
}

TEST(Properties, PositiveBaseCurvatureOverSphereGivesPositiveProfile) {
  RationalGen g(37);
  for (int i = 0; i < 200; ++i) {
    const auto st = make_setup(1, g.in(Rational(0), Rational(40), 53), 0, static_cast<int>(g.integer(1, 12)), g.in(Rational(0), Rational(1)));
    EXPECT_TRUE(is_extremal(compute_profile(st, g.in(Rational(-1), Rational(1), 89))));
  }
}
