#include <gtest/gtest.h>

#include <random>

#include "test_helpers.hpp"
#include "tropexp/error.hpp"
#include "tropexp/exterior.hpp"
#include "tropexp/field.hpp"
#include "tropexp/lattice.hpp"
#include "tropexp/linalg.hpp"

namespace tropexp {
namespace {

using testing::cov;
using testing::q;
using testing::sqrt2;
using testing::vec;

TEST(FieldScalar, ConjugateProduct) {
  const Scalar x = Scalar(1) + sqrt2();
  const Scalar y = Scalar(1) - sqrt2();
  EXPECT_EQ(x * y, Scalar(-1));
  EXPECT_TRUE((x * y).is_rational());
}

TEST(FieldScalar, SignByIntegerComparison) {
  // -3 + 2 sqrt2: 9 > 8 so negative.
  EXPECT_EQ((Scalar(-3) + sqrt2(2)).sign(), -1);
  EXPECT_EQ((Scalar(3) - sqrt2(2)).sign(), 1);
  EXPECT_EQ((Scalar(-1) + sqrt2()).sign(), 1);
  EXPECT_EQ(Scalar(0).sign(), 0);
}

TEST(FieldScalar, RationalLowestTerms) {
  const Scalar s = q(1, 2) + q(1, 3);
  EXPECT_EQ(s.rational_part().get_num(), 5);
  EXPECT_EQ(s.rational_part().get_den(), 6);
  EXPECT_EQ(s.to_string(), "5/6");
}

TEST(FieldScalar, Errors) {
  EXPECT_THROW(q(1) / Scalar(0), PreconditionError);
  EXPECT_THROW(Scalar(0, 1, 2) + Scalar(0, 1, 3), FieldMismatchError);
  EXPECT_THROW(FieldDescriptor::quadratic(4), PreconditionError);
  EXPECT_THROW(FieldDescriptor::parse("R"), ParseError);
  EXPECT_EQ(FieldDescriptor::parse("Qsqrt:2").radicand(), 2);
}

TEST(FieldScalar, ToString) {
  EXPECT_EQ(sqrt2().to_string(), "sqrt2");
  EXPECT_EQ((q(1, 2) - sqrt2(3)).to_string(), "1/2-3*sqrt2");
  EXPECT_EQ((-sqrt2()).to_string(), "-sqrt2");
}

TEST(FieldScalar, FieldAxiomsOnSamples) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const Scalar x = testing::random_quadratic(rng, 9) / q(1 + i % 5);
    const Scalar y = testing::random_quadratic(rng, 9);
    const Scalar z = testing::random_quadratic(rng, 9);
    EXPECT_EQ((x + y) + z, x + (y + z));
    EXPECT_EQ((x * y) * z, x * (y * z));
    EXPECT_EQ(x * (y + z), x * y + x * z);
    if (!y.is_zero()) EXPECT_EQ((x / y) * y, x);
    if (x < y) EXPECT_LT(x + z, y + z);
    EXPECT_EQ((x * y).sign(), x.sign() * y.sign());
  }
}

TEST(Exterior, WedgeExamples) {
  const auto e1 = ExteriorForm::from_covector(cov({1, 0}));
  const auto e2 = ExteriorForm::from_covector(cov({0, 1}));
  const std::vector<Vector> frame{vec({1, 0}), vec({0, 1})};
  EXPECT_EQ(wedge(e1, e2).evaluate(frame), Scalar(1));
  EXPECT_TRUE(wedge(e1, e1).is_zero());
  EXPECT_EQ(wedge(e1 + e2, e2).evaluate(frame), Scalar(1));
  EXPECT_EQ(wedge(e2, e1).evaluate(frame), Scalar(-1));
}

TEST(Exterior, EvaluationAntisymmetry) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 4;
    std::vector<Covector> factors;
    for (int k = 0; k < 3; ++k) {
      Covector c(n);
      for (std::size_t i = 0; i < n; ++i) c[i] = testing::random_rational(rng, 4);
      factors.push_back(c);
    }
    const ExteriorForm w = ExteriorForm::wedge_of(factors, n);
    std::vector<Vector> args;
    for (int k = 0; k < 3; ++k) {
      Vector v(n);
      for (std::size_t i = 0; i < n; ++i) v[i] = testing::random_rational(rng, 4);
      args.push_back(v);
    }
    std::vector<Vector> swapped = args;
    std::swap(swapped[0], swapped[2]);
    EXPECT_EQ(w.evaluate(swapped), -w.evaluate(args));
    // Graded anticommutativity for 1-forms and 2-forms.
    const auto a = ExteriorForm::from_covector(factors[0]);
    const auto b = wedge(ExteriorForm::from_covector(factors[1]), ExteriorForm::from_covector(factors[2]));
    EXPECT_EQ(wedge(a, b), wedge(b, a));
    EXPECT_EQ(wedge(a, ExteriorForm::from_covector(factors[1])),
              -wedge(ExteriorForm::from_covector(factors[1]), a));
  }
}

TEST(Exterior, InteriorAndPullback) {
  // (e1* ^ e2*)(e1, .) = e2*
  const auto w = ExteriorForm::wedge_of(std::vector<Covector>{cov({1, 0, 0}), cov({0, 1, 0})}, 3);
  EXPECT_EQ(w.interior(vec({1, 0, 0})), ExteriorForm::from_covector(cov({0, 1, 0})));
  // Pull back e1* ^ e2* along the diagonal R -> R^2 is zero; along (x,y) -> (x, x+y) it is e1* ^ e2*.
  const auto w2 = ExteriorForm::wedge_of(std::vector<Covector>{cov({1, 0}), cov({0, 1})}, 2);
  Matrix s(2, 2);
  s(0, 0) = 1;
  s(1, 0) = 1;
  s(1, 1) = 1;
  EXPECT_EQ(w2.pullback(s), w2);
  Matrix diag(2, 1);
  diag(0, 0) = 1;
  diag(1, 0) = 1;
  EXPECT_TRUE(w2.pullback(diag).is_zero());
  EXPECT_EQ(ExteriorForm::from_covector(cov({1, 0})).pullback(diag).coefficients()[0], Scalar(1));
}

TEST(Lattice, HnfBasisExamples) {
  {
    const std::vector<Covector> gens{cov({q(1, 2)}), cov({q(1, 3)})};
    const CovectorGroup g = hnf_basis(gens, 1, 0);
    ASSERT_EQ(g.rank(), 1u);
    EXPECT_EQ(g.basis()[0][0], q(1, 6));
    EXPECT_EQ((*g.coordinates(gens[0]))[0], 3);
    EXPECT_EQ((*g.coordinates(gens[1]))[0], 2);
  }
  {
    const std::vector<Covector> gens{cov({1}), cov({sqrt2()})};
    const CovectorGroup g = hnf_basis(gens, 1, 2);
    ASSERT_EQ(g.rank(), 2u);
    EXPECT_EQ(g.basis()[0][0], Scalar(1));
    EXPECT_EQ(g.basis()[1][0], sqrt2());
  }
  {
    const std::vector<Covector> gens{cov({1, 0}), cov({0, 1}), cov({1, 1})};
    const CovectorGroup g = hnf_basis(gens, 2, 0);
    ASSERT_EQ(g.rank(), 2u);
    EXPECT_EQ(g.basis()[0], cov({1, 0}));
    EXPECT_EQ(g.basis()[1], cov({0, 1}));
  }
  EXPECT_EQ(hnf_basis(std::vector<Covector>{}, 2, 0).rank(), 0u);
}

TEST(Lattice, HnfIdempotentOnSamples) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Covector> gens;
    for (int k = 0; k < 4; ++k) {
      gens.push_back(cov({testing::random_rational(rng, 6, 4), testing::random_quadratic(rng, 3)}));
    }
    const CovectorGroup g = hnf_basis(gens, 2, 2);
    const CovectorGroup again = hnf_basis(g.basis(), 2, 2);
    EXPECT_EQ(again.basis(), g.basis());
    for (const auto& f : gens) EXPECT_TRUE(g.coordinates(f).has_value());
  }
}

TEST(Lattice, IntegerKernelIsSaturated) {
  // 2x + 4y = 0 has kernel Z*(2,-1), not Z*(4,-2).
  const auto k = integer_kernel({IntVec{2, 4}}, 2);
  ASSERT_EQ(k.size(), 1u);
  EXPECT_EQ(abs(k[0][0]), 2);
  EXPECT_EQ(abs(k[0][1]), 1);
}

TEST(Linear, SolveExamples) {
  const LinearMap id(Matrix::identity(3));
  const auto s = solve_linear(id, vec({1, 2, 3}));
  EXPECT_EQ(s.status, LinearSolution::Status::unique);
  EXPECT_EQ(s.particular, vec({1, 2, 3}));

  Matrix row(1, 2);
  row(0, 0) = 1;
  const auto k = solve_linear(LinearMap(row), vec({0}));
  EXPECT_EQ(k.status, LinearSolution::Status::underdetermined);
  ASSERT_EQ(k.kernel.size(), 1u);
  EXPECT_EQ(k.kernel[0], vec({0, 1}));

  Matrix irr(1, 2);
  irr(0, 0) = 1;
  irr(0, 1) = sqrt2();
  const auto k2 = solve_linear(LinearMap(irr), vec({0}));
  ASSERT_EQ(k2.kernel.size(), 1u);
  EXPECT_EQ(k2.kernel[0], vec({-sqrt2(), 1}));

  Matrix zero(2, 1);
  zero(0, 0) = 1;
  zero(1, 0) = 1;
  EXPECT_EQ(solve_linear(LinearMap(zero), vec({1, 2})).status, LinearSolution::Status::inconsistent);
}

}  // namespace
}  // namespace tropexp
