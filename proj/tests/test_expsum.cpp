#include <gtest/gtest.h>

#include <random>

#include "test_helpers.hpp"
#include "tropexp/error.hpp"
#include "tropexp/expsum.hpp"

namespace tropexp {
namespace {

using testing::cov;
using testing::q;
using testing::sqrt2;
using testing::vec;

const FieldDescriptor kQ = FieldDescriptor::rationals();
const FieldDescriptor kQ2 = FieldDescriptor::quadratic(2);

ExpSum P(const std::string& text, std::size_t n, const FieldDescriptor& field = kQ) {
  return parse_expsum(text, field, n);
}

Complex re(const Scalar& x) { return {x, Scalar(0)}; }

ExpSum random_expsum(std::mt19937_64& rng, std::size_t n, bool quadratic) {
  std::uniform_int_distribution<std::size_t> count(2, n + 3);
  std::uniform_int_distribution<int> coin(0, 3);
  std::vector<ExpSum::Term> terms;
  for (auto& p : testing::random_points(rng, n, count(rng), 2)) {
    if (quadratic && coin(rng) == 0) p[0] += sqrt2();
    terms.push_back({re(Scalar(1 + coin(rng))), p});
  }
  return ExpSum(n, quadratic ? kQ2 : kQ, terms);
}

TEST(Parse, Examples) {
  const ExpSum f = P("exp(z1) - 1", 1);
  ASSERT_EQ(f.terms().size(), 2u);
  EXPECT_EQ(f.support(), (std::vector<Covector>{cov({0}), cov({1})}));
  EXPECT_EQ(f.terms()[0].coeff, re(q(-1)));
  EXPECT_EQ(f.terms()[1].coeff, re(q(1)));

  const ExpSum g = P("exp(sqrt2*z1) - 3", 1, kQ2);
  EXPECT_EQ(g.support(), (std::vector<Covector>{cov({0}), cov({sqrt2()})}));

  const ExpSum h = P("exp(z1) + exp(z1)", 1);
  ASSERT_EQ(h.terms().size(), 1u);
  EXPECT_EQ(h.terms()[0].coeff, re(q(2)));
}

TEST(Parse, GrammarFeatures) {
  const ExpSum f = P(" (1/2 + 3*i) * exp( 2*z1 - z2/3 ) + 1.25 - sqrt(4) ", 2);
  ASSERT_EQ(f.terms().size(), 2u);
  EXPECT_EQ(f.terms()[0].coeff, re(q(-3, 4)));
  EXPECT_EQ(f.terms()[1].exponent, cov({2, q(-1, 3)}));
  EXPECT_EQ(f.terms()[1].coeff, (Complex{q(1, 2), q(3)}));

  // Products of exponentials add exponents; powers expand.
  EXPECT_EQ(P("exp(z1)*exp(z2)", 2), P("exp(z1+z2)", 2));
  EXPECT_EQ(P("(exp(z1)-1)^2", 1), P("exp(2*z1) - 2*exp(z1) + 1", 1));
  EXPECT_EQ(P("exp(sqrt8*z1)", 1, kQ2), P("exp(2*sqrt2*z1)", 1, kQ2));
  EXPECT_EQ(P("exp(z1) - exp(z1)", 1).terms().size(), 0u);
  EXPECT_EQ(P("i*i", 1), P("-1", 1));
}

TEST(Parse, ErrorsCarryPositions) {
  try {
    P("exp(z1) + * 2", 1);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 10u);
  }
  try {
    P("exp(sqrt2*z1) - 1", 1);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 4u);
    EXPECT_NE(std::string(e.what()).find("not representable"), std::string::npos);
  }
  EXPECT_THROW(P("exp(z3)", 2), ParseError);
  EXPECT_THROW(P("exp(i*z1)", 1), ParseError);
  EXPECT_THROW(P("exp(z1*z1)", 1), ParseError);
  EXPECT_THROW(P("exp(z1 + 1)", 1), ParseError);
  EXPECT_THROW(P("z1 + 1", 1), ParseError);
  EXPECT_THROW(P("exp(z1", 1), ParseError);
  EXPECT_THROW(P("1/0", 1), ParseError);
  EXPECT_THROW(P("1/exp(z1)", 1), ParseError);
  EXPECT_THROW(P("foo(z1)", 1), ParseError);
  EXPECT_THROW(P("exp(sqrt3*z1)", 1, kQ2), ParseError);
}

TEST(Parse, TextRoundTrip) {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(trial % 3);
    std::vector<ExpSum::Term> terms;
    for (auto& p : testing::random_points(rng, n, 4, 3)) {
      p[0] = p[0] / q(3) + sqrt2(trial % 2);
      terms.push_back({Complex{testing::random_quadratic(rng, 3), testing::random_rational(rng, 2, 3)}, p});
    }
    const ExpSum f(n, kQ2, terms);
    EXPECT_EQ(P(f.to_string(), n, kQ2), f) << f.to_string();
  }
}

TEST(NewtonPolytope, Examples) {
  EXPECT_EQ(newton_polytope(P("exp(3/2*z1) - 5", 1)), segment(cov({q(3, 2)})));
  EXPECT_EQ(newton_polytope(P("exp(z1+2*z2)", 2)).dim(), 0u);
  EXPECT_EQ(newton_polytope(P("1 + exp(z1) + exp(z2) + exp(z1+z2)", 2)), unit_cube(2));
}

TEST(GroupBasis, Examples) {
  const GroupBasis a = group_basis({P("exp(z1) - 1", 1)});
  EXPECT_EQ(a.rank(), 1u);
  EXPECT_EQ(a.basis()[0], cov({1}));

  const GroupBasis b = group_basis({P("exp(z1) - 1", 1, kQ2), P("exp(sqrt2*z1) - 1", 1, kQ2)});
  ASSERT_EQ(b.rank(), 2u);
  EXPECT_EQ(b.winding().matrix().col(0), (Vec{Scalar(1), sqrt2()}));

  const GroupBasis c = group_basis({P("exp(z1) - 1", 2), P("exp(z2) - 1", 2)});
  EXPECT_EQ(c.basis(), (std::vector<Covector>{cov({1, 0}), cov({0, 1})}));
  EXPECT_EQ(c.coordinates(cov({2, -3})), (IntVec{2, -3}));
}

TEST(GroupBasis, NonSpanningNamesDirection) {
  try {
    group_basis({P("exp(z1) - 1", 2)});
    FAIL();
  } catch (const PreconditionError& e) {
    EXPECT_NE(std::string(e.what()).find("(0,1)"), std::string::npos) << e.what();
  }
}

TEST(HypersurfaceTrop, Examples) {
  const TropicalFan line = hypersurface_trop(P("exp(z1) - 1", 2));
  ASSERT_EQ(line.cones().size(), 1u);
  EXPECT_EQ(line.cones()[0].cone, Cone::subspace(2, {vec({0, 1})}));
  EXPECT_EQ(line.cones()[0].weight, ExteriorForm::from_covector(cov({1, 0})));

  for (const auto& [text, alpha] : std::vector<std::pair<std::string, Scalar>>{
           {"exp(z1) - 2", q(1)}, {"exp(3/2*z1) - 2", q(3, 2)}, {"exp(sqrt2*z1) - 2", sqrt2()}}) {
    for (auto route : {TropRoute::direct, TropRoute::model}) {
      TropOptions o;
      o.route = route;
      const TropicalFan f = hypersurface_trop(P(text, 1, kQ2), o);
      EXPECT_EQ(zero_cone_value(f), alpha) << text;
    }
  }
  EXPECT_TRUE(hypersurface_trop(P("3*exp(z1 - z2)", 2)).empty());
  TropOptions model;
  model.route = TropRoute::model;
  EXPECT_THROW(hypersurface_trop(P("exp(z1) - 1", 2), model), PreconditionError);
}

TEST(HypersurfaceTrop, RoutesAgreeAndGroupIndependence) {
  std::mt19937_64 rng(73);
  for (int trial = 0; trial < 12; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(trial % 3);
    const ExpSum f = random_expsum(rng, n, trial % 4 == 1);
    if (f.is_monomial()) continue;
    if (rank_of_rows([&] {
          std::vector<Vec> r;
          for (const auto& e : f.support()) r.push_back(e.coords());
          return r;
        }(), n) < n) {
      continue;
    }
    const TropicalFan direct = hypersurface_trop(f);
    TropOptions model;
    model.route = TropRoute::model;
    const TropicalFan via_model = hypersurface_trop(f, model);
    EXPECT_TRUE(balance_check(via_model).balanced);
    EXPECT_TRUE(equality_test(direct, via_model)) << f.to_string();

    Covector extra(n);
    extra[0] = q(1, 7) + (trial % 2 ? sqrt2(1, 3) : Scalar(0));
    model.group = group_basis({f}, {extra});
    // H is strictly larger than G: it contains a covector G misses.
    EXPECT_FALSE(group_basis({f}).covers(ExpSum(n, kQ2, {{re(q(1)), extra}})));
    EXPECT_GE(model.group->rank(), group_basis({f}).rank());
    EXPECT_TRUE(equality_test(direct, hypersurface_trop(f, model))) << f.to_string();
  }
}

TEST(SystemTrop, Examples) {
  const TropicalFan p = system_trop({P("exp(z1) - 1", 2), P("exp(z2) - 1", 2)});
  ASSERT_EQ(p.cones().size(), 1u);
  EXPECT_EQ(zero_cone_value(p), q(1));

  const ExpSum f = P("1 + exp(z1) + exp(z2)", 2);
  EXPECT_TRUE(equality_test(system_trop({f}), hypersurface_trop(f)));

  Diagnostics diag;
  const TropicalFan over = system_trop({P("exp(z1) - 1", 1), P("exp(z1) - 2", 1)}, {}, &diag);
  EXPECT_TRUE(over.empty());
  EXPECT_EQ(over.degree(), 2u);
  EXPECT_EQ(diag.size(), 1u);
}

TEST(IntersectionIndex, Examples) {
  EXPECT_EQ(intersection_index({{P("exp(3/2*z1) - 7", 1)}}), (ScaledDensity{q(3, 2), -1}));
  EXPECT_EQ(intersection_index({{P("exp(z1) - 1", 2)}, {P("exp(z2) - 1", 2)}}), (ScaledDensity{q(1), -2}));
  EXPECT_EQ(intersection_index({{P("exp(z1) - 1", 2, kQ2)}, {P("exp(sqrt2*z1 + z2) - 1", 2, kQ2)}}),
            (ScaledDensity{q(1), -2}));
  EXPECT_THROW(intersection_index({{P("exp(z1) - 1", 2)}}), PreconditionError);
}

TEST(WeakDensity, Examples) {
  EXPECT_EQ(weak_density({P("exp(z1) - 1", 1)}), (ScaledDensity{q(1), -1}));
  EXPECT_EQ(weak_density({P("exp(sqrt2*z1) - 5", 1, kQ2)}), (ScaledDensity{sqrt2(), -1}));
  EXPECT_EQ(weak_density({P("2*exp(z1)", 1)}).value, Scalar(0));
  EXPECT_EQ(weak_density({P("exp(z1) - 1", 1)}).to_string(), "1*(2*pi)^-1");
  EXPECT_NEAR(weak_density({P("exp(z1) - 1", 1)}).approximate(), 0.15915494309189535, 1e-15);
}

TEST(WeakDensity, BkkIdentityOnSamples) {
  std::mt19937_64 rng(79);
  for (int trial = 0; trial < 9; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(trial % 3);
    std::vector<std::vector<ExpSum>> systems;
    std::vector<Polytope> polys;
    for (std::size_t i = 0; i < n; ++i) {
      ExpSum f = random_expsum(rng, n, false);
      polys.push_back(newton_polytope(f));
      systems.push_back({std::move(f)});
    }
    Scalar nfact(1);
    for (std::size_t i = 2; i <= n; ++i) nfact *= Scalar(static_cast<long>(i));
    const ScaledDensity idx = intersection_index(systems);
    EXPECT_EQ(idx.two_pi_power, -static_cast<int>(n));
    EXPECT_EQ(idx.value, nfact * mixed_volume(polys));
  }
}

TEST(WeakDensity, HomogeneousUnderSupportScaling) {
  std::mt19937_64 rng(83);
  for (int trial = 0; trial < 4; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(trial % 2);
    std::vector<ExpSum> system;
    std::vector<ExpSum> scaled;
    const Scalar r = q(3 + trial, 2);
    for (std::size_t i = 0; i < n; ++i) {
      const ExpSum f = random_expsum(rng, n, false);
      std::vector<ExpSum::Term> terms = f.terms();
      for (auto& t : terms) t.exponent = r * t.exponent;
      system.push_back(f);
      scaled.push_back(ExpSum(n, kQ, terms));
    }
    Scalar rn(1);
    for (std::size_t i = 0; i < n; ++i) rn *= r;
    EXPECT_EQ(weak_density(scaled).value, rn * weak_density(system).value);
  }
}

TEST(RealizeFan, Examples) {
  const ExpSum f = realize_fan(segment(cov({1})));
  EXPECT_EQ(f, P("exp(z1) + 1", 1));
  EXPECT_EQ(zero_cone_value(hypersurface_trop(f)), q(1));

  const ExpSum g = realize_fan(unit_cube(2));
  EXPECT_EQ(g.terms().size(), 4u);
  EXPECT_TRUE(equality_test(hypersurface_trop(g), skeleton_fan(unit_cube(2), 1)));

  const ExpSum h = realize_fan(segment(cov({sqrt2()})));
  EXPECT_EQ(h.field(), kQ2);
  EXPECT_EQ(zero_cone_value(hypersurface_trop(h)), sqrt2());
}

}  // namespace
}  // namespace tropexp
