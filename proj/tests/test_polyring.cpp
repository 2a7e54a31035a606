#include <gtest/gtest.h>

#include <random>

#include "test_helpers.hpp"
#include "tropexp/error.hpp"
#include "tropexp/polyring.hpp"

namespace tropexp {
namespace {

using testing::cov;
using testing::q;

PolytopeClass G(const Polytope& p) { return PolytopeClass::generator(p); }
PolytopeClass sq() { return G(unit_cube(2)); }
PolytopeClass segx() { return G(segment(cov({1, 0}))); }
PolytopeClass segy() { return G(segment(cov({0, 1}))); }

TEST(ClassMultiply, Examples) {
  const PolytopeClass xy = class_multiply(segx(), segy());
  ASSERT_EQ(xy.terms().size(), 1u);
  EXPECT_EQ(xy.degree(), 2u);
  EXPECT_EQ(xy, class_multiply(segy(), segx()));

  EXPECT_TRUE(class_multiply(sq(), PolytopeClass(2, 1)).is_formally_zero());

  const PolytopeClass e = class_multiply(sq() - segx() - segy(), sq());
  EXPECT_EQ(e.terms().size(), 3u);
  EXPECT_TRUE(class_multiply(xy, segx()).is_formally_zero());
  EXPECT_EQ(class_multiply(xy, segx()).degree(), 3u);
}

TEST(TopPairing, Examples) {
  EXPECT_EQ(top_pairing(class_multiply(sq(), sq())), q(1));
  EXPECT_EQ(top_pairing(class_multiply(segx(), segy())), q(1, 2));
  EXPECT_EQ(top_pairing(class_multiply(sq(), sq()) - q(2) * class_multiply(segx(), segy())), q(0));
  EXPECT_THROW(top_pairing(sq()), PreconditionError);
  EXPECT_EQ(top_pairing(PolytopeClass::constant(0, q(5))), q(5));
}

TEST(IsZeroClass, Examples) {
  const PolytopeClass d = sq() - segx() - segy();
  ProbeFamily fam{"square and segments", {sq(), segx(), segy()}};
  const ZeroVerdict v = is_zero_class(d, fam);
  EXPECT_FALSE(v.nonzero);
  EXPECT_EQ(v.label(), "zero-relative-to-probes");
  EXPECT_EQ(v.family, "square and segments");
  EXPECT_EQ(v.probes_checked, 3u);

  const ZeroVerdict w = is_zero_class(q(2) * sq() - sq(), fam);
  ASSERT_TRUE(w.nonzero);
  EXPECT_EQ(w.label(), "nonzero-with-witness");
  EXPECT_EQ(*w.witness, sq());
  EXPECT_EQ(w.witness_value, q(1));

  EXPECT_FALSE(is_zero_class(PolytopeClass(2, 1), default_probes(sq(), 1)).nonzero);
  EXPECT_THROW(is_zero_class(sq(), ProbeFamily{"bad", {class_multiply(sq(), sq())}}), PreconditionError);
}

TEST(IsZeroClass, DefaultProbesNameTheFamily) {
  const ProbeFamily fam = default_probes(sq() - segx() - segy(), 1);
  EXPECT_EQ(fam.probes.size(), 4u);  // square, two segments, simplex
  EXPECT_NE(fam.name.find("standard simplex"), std::string::npos);
  EXPECT_FALSE(is_zero_class(sq() - segx() - segy(), fam).nonzero);
  EXPECT_TRUE(is_zero_class(sq() - segx(), fam).nonzero);
}

TEST(ToTrop, Examples) {
  const TropicalFan xy = to_trop(class_multiply(segx(), segy()));
  EXPECT_EQ(zero_cone_value(xy), q(1));
  EXPECT_TRUE(is_zero_class(to_trop(sq() - segx() - segy())));
  const TropicalFan c = to_trop(PolytopeClass::constant(2, q(3)));
  EXPECT_TRUE(equality_test(c, TropicalFan::whole_space(2, q(3))));
}

TEST(PolyringProperties, HomomorphismPairingAndEqualityNotions) {
  std::mt19937_64 rng(89);
  for (int trial = 0; trial < 5; ++trial) {
    const Polytope p1 = convex_hull(testing::random_points(rng, 2, 4, 2));
    const Polytope p2 = convex_hull(testing::random_points(rng, 2, 3, 2));
    const Polytope p3 = convex_hull(testing::random_points(rng, 2, 3, 2));
    const PolytopeClass a = G(p1) + q(2) * G(p2);
    const PolytopeClass b = G(p3) - G(p2);
    const PolytopeClass ab = class_multiply(a, b);
    EXPECT_TRUE(equality_test(to_trop(ab), stable_product(to_trop(a), to_trop(b))));
    EXPECT_EQ(zero_cone_value(to_trop(ab)), q(2) * top_pairing(ab));
    EXPECT_EQ(top_pairing(ab), top_pairing(class_multiply(b, a)));

    // Minkowski additivity: [P + Q] - [P] - [Q] is zero in both senses.
    const PolytopeClass z = G(minkowski_sum(p1, p2)) - G(p1) - G(p2);
    EXPECT_FALSE(is_zero_class(z, default_probes(z, 1)).nonzero);
    EXPECT_TRUE(is_zero_class(to_trop(z)));

    // A nonzero difference is caught by both.
    const PolytopeClass nz = G(p1) - G(p2);
    const bool trop_equal = equality_test(to_trop(G(p1)), to_trop(G(p2)));
    EXPECT_EQ(is_zero_class(nz, default_probes(nz, 1)).nonzero, !trop_equal);
  }
}

}  // namespace
}  // namespace tropexp
