#include <gtest/gtest.h>

#include <random>
#include <map>

#include "test_helpers.hpp"
#include "tropexp/chambers.hpp"
#include "tropexp/error.hpp"

namespace tropexp {
namespace {

using testing::cov;
using testing::q;
using testing::sqrt2;
using testing::vec;

const FieldDescriptor kQ = FieldDescriptor::rationals();
const FieldDescriptor kQ2 = FieldDescriptor::quadratic(2);

std::vector<ExpSum> parse_all(const std::vector<std::string>& texts, std::size_t n, const FieldDescriptor& field) {
  std::vector<ExpSum> out;
  for (const auto& t : texts) out.push_back(parse_expsum(t, field, n));
  return out;
}

struct Pipeline {
  ModelSystem model;
  SubspaceFamily family;
};

Pipeline pipeline(const std::vector<ExpSum>& system) {
  Pipeline p{model_system(system), {}};
  p.family = nontransversal_loci(p.model.fan, p.model.winding_image);
  return p;
}

std::vector<ShiftedLattice> lattices_for(const Pipeline& p, std::uint64_t seed) {
  return zero_lattices(p.model, sample_chamber(p.family, p.model.fan, p.model.winding_image, seed));
}

TEST(NontransversalLoci, Examples) {
  EXPECT_TRUE(pipeline(parse_all({"exp(z1) - 1"}, 1, kQ)).family.empty());
  EXPECT_TRUE(pipeline(parse_all({"exp(z1) - 1", "exp(z2) - 1"}, 2, kQ)).family.empty());

  TropicalFan ray(2, 1);
  ray.add(Cone::from_generators(2, {vec({1, 1})}), ExteriorForm::from_covector(cov({1, -1})));
  EXPECT_TRUE(nontransversal_loci(ray, {vec({1, 0})}).subspaces().size() == 1u);  // only the origin's L
  const SubspaceFamily along = nontransversal_loci(ray, {vec({1, 1})});
  ASSERT_EQ(along.subspaces().size(), 1u);
  EXPECT_EQ(along.subspaces()[0], (std::vector<Vec>{{Scalar(1), Scalar(1)}}));
}

TEST(SampleChamber, Examples) {
  const Pipeline p = pipeline(parse_all({"exp(z1) - 1"}, 1, kQ));
  const Chamber c = sample_chamber(p.family, p.model.fan, p.model.winding_image, 1);
  EXPECT_EQ(c.active, (std::vector<std::size_t>{0}));
  EXPECT_EQ(sample_chamber(p.family, p.model.fan, p.model.winding_image, 2).active, c.active);
}

TEST(SampleChamber, ActiveSetsDependOnlyOnTheChamber) {
  // q = 2 > n = 1: the origin's translate of L splits R^2 into two chambers.
  const Pipeline p = pipeline(parse_all({"1 + exp(z1) + exp(sqrt2*z1)"}, 1, kQ2));
  ASSERT_EQ(p.family.subspaces().size(), 1u);
  const auto& line = p.family.subspaces()[0];
  std::map<int, std::vector<std::size_t>> by_side;
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    const Chamber c = sample_chamber(p.family, p.model.fan, p.model.winding_image, seed);
    // Side of the line = sign of det(line direction, point).
    const int side = (line[0][0] * c.point[1] - line[0][1] * c.point[0]).sign();
    auto [it, inserted] = by_side.emplace(side, c.active);
    if (!inserted) EXPECT_EQ(it->second, c.active);
  }
  EXPECT_EQ(by_side.size(), 2u);
  EXPECT_NE(by_side.begin()->second, by_side.rbegin()->second);
}

TEST(ZeroLattices, Examples) {
  {
    const auto lats = lattices_for(pipeline(parse_all({"exp(z1) - 1"}, 1, kQ)), 1);
    ASSERT_EQ(lats.size(), 1u);
    EXPECT_EQ(lats[0].basis_over_2pi, (std::vector<Vector>{vec({1})}));
    EXPECT_EQ(lats[0].multiplicity, 1);
  }
  {
    const auto lats = lattices_for(pipeline(parse_all({"exp(z1) - 1", "exp(z2) - 1"}, 2, kQ)), 1);
    ASSERT_EQ(lats.size(), 1u);
    EXPECT_TRUE(same_lattice(lats[0].basis_over_2pi, {vec({1, 0}), vec({0, 1})}));
    EXPECT_EQ(lats[0].multiplicity, 1);
  }
  {
    const auto lats = lattices_for(pipeline(parse_all({"exp(z1) - 1", "exp(sqrt2*z1 + z2) - 1"}, 2, kQ2)), 1);
    ASSERT_EQ(lats.size(), 1u);
    EXPECT_TRUE(same_lattice(lats[0].basis_over_2pi, {vec({1, -sqrt2()}), vec({0, 1})}));
    EXPECT_EQ(lats[0].multiplicity, 1);
  }
}

TEST(ZeroLattices, DefiningPropertyAndMultiplicities) {
  const std::vector<std::vector<ExpSum>> systems{
      parse_all({"exp(2*z1) - 1"}, 1, kQ),
      parse_all({"1 + exp(z1) + exp(sqrt2*z1)"}, 1, kQ2),
      parse_all({"1 + exp(z1) + exp(z2)", "exp(z1) + 2*exp(2*z2) - 1"}, 2, kQ),
      parse_all({"exp(z1) + exp(sqrt2*z2) + 1", "exp(z2) - exp(z1/2)"}, 2, kQ2),
  };
  for (const auto& system : systems) {
    const Pipeline p = pipeline(system);
    const std::size_t n = system.front().ambient_dim();
    for (std::uint64_t seed = 1; seed <= 4; ++seed) {
      const Chamber c = sample_chamber(p.family, p.model.fan, p.model.winding_image, seed);
      const auto lats = zero_lattices(p.model, c);
      for (std::size_t j = 0; j < lats.size(); ++j) {
        EXPECT_GE(lats[j].multiplicity, 1);
        // Pairing each mu_j with the basis gives integers (the lattice is 2 pi times them).
        ASSERT_EQ(lats[j].characters.size(), n);
        for (const auto& mu : lats[j].characters) {
          for (const auto& b : lats[j].basis_over_2pi) {
            const Scalar v = pair(mu, b);
            EXPECT_TRUE(v.is_rational() && v.rational_part().get_den() == 1);
          }
        }
      }
      EXPECT_EQ(density_sum(lats), weak_density(system)) << "seed " << seed;
    }
  }
}

TEST(DensitySum, Examples) {
  EXPECT_EQ(density_sum({ShiftedLattice{{vec({1, 0}), vec({0, 1})}, 1}}), (ScaledDensity{q(1), -2}));
  EXPECT_EQ(density_sum({ShiftedLattice{{vec({1, -sqrt2()}), vec({0, 1})}, 1}}), (ScaledDensity{q(1), -2}));
  EXPECT_EQ(density_sum({ShiftedLattice{{vec({1})}, 1}, ShiftedLattice{{vec({1})}, 1}}), (ScaledDensity{q(2), -1}));
  EXPECT_THROW(density_sum({ShiftedLattice{{vec({1, 1}), vec({2, 2})}, 1}}), PreconditionError);
}

TEST(SameLattice, DetectsChangeOfBasis) {
  EXPECT_TRUE(same_lattice({vec({1, 0}), vec({0, 1})}, {vec({1, 1}), vec({0, 1})}));
  EXPECT_FALSE(same_lattice({vec({1, 0}), vec({0, 1})}, {vec({2, 0}), vec({0, 1})}));
  EXPECT_FALSE(same_lattice({vec({1, 0}), vec({0, 1})}, {vec({q(1, 2), 0}), vec({0, 1})}));
}

}  // namespace
}  // namespace tropexp
