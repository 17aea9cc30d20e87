#include "transgress/group_spec_string.hpp"
#include "transgress/lattices.hpp"

#include <gtest/gtest.h>

using namespace transgress;

namespace {

// |Lambda_w / Lambda_r| from the classification.
Integer table_center_order(const LieType& t) {
  switch (t.family) {
    case LieFamily::A: return t.rank + 1;
    case LieFamily::B:
    case LieFamily::C: return 2;
    case LieFamily::D: return 4;
    case LieFamily::E: return t.rank == 6 ? 3 : t.rank == 7 ? 2 : 1;
    default: return 1;
  }
}

std::size_t divisor_count(int n) {
  std::size_t c = 0;
  for (int d = 1; d <= n; ++d)
    if (n % d == 0) ++c;
  return c;
}

}  // namespace

TEST(Center, InvariantFactors) {
  using V = std::vector<Integer>;
  EXPECT_EQ(center_group(build_root_system({LieFamily::A, 2})).invariant_factors, V{3});
  EXPECT_EQ(center_group(build_root_system({LieFamily::D, 4})).invariant_factors, (V{2, 2}));
  EXPECT_EQ(center_group(build_root_system({LieFamily::D, 5})).invariant_factors, V{4});
  EXPECT_EQ(center_group(build_root_system({LieFamily::E, 8})).invariant_factors, V{});
}

TEST(Center, OrderEqualsCartanDeterminant) {
  for (const auto& t : all_types_up_to_rank(8)) {
    auto rs = build_root_system(t);
    auto c = center_group(rs);
    ASSERT_EQ(c.order(), determinant(rs.cartan)) << t.name();
    ASSERT_EQ(c.order(), table_center_order(t)) << t.name();
  }
}

TEST(Center, GeneratorsHaveStatedOrder) {
  for (const auto& t : all_types_up_to_rank(8)) {
    auto rs = build_root_system(t);
    auto c = center_group(rs);
    for (std::size_t k = 0; k < c.generators.size(); ++k) {
      const auto d = static_cast<std::int64_t>(c.invariant_factors[k]);
      for (std::int64_t m = 1; m <= d; ++m) {
        WeightVector v = c.generators[k];
        for (auto& x : v.coords) x *= m;
        const bool in_root_lattice = reduce_mod_root_lattice(rs, v).is_zero();
        ASSERT_EQ(in_root_lattice, m == d) << t.name();
      }
    }
  }
}

TEST(Subgroups, CountsForCyclicCenters) {
  for (int n = 1; n <= 8; ++n) {
    auto subs = enumerate_pi1_choices(build_root_system({LieFamily::A, n}));
    ASSERT_EQ(subs.size(), divisor_count(n + 1)) << n;
    EXPECT_EQ(subs.front().label, "sc");
    EXPECT_EQ(subs.back().label, "adj");
  }
  // Z/2 x Z/2 has five subgroups.
  EXPECT_EQ(enumerate_pi1_choices(build_root_system({LieFamily::D, 6})).size(), 5u);
  EXPECT_EQ(enumerate_pi1_choices(build_root_system({LieFamily::D, 7})).size(), 3u);
  EXPECT_EQ(enumerate_pi1_choices(build_root_system({LieFamily::G, 2})).size(), 1u);
}

TEST(Subgroups, LabelsParseBackToSameOrder) {
  for (const auto& t : all_types_up_to_rank(8)) {
    auto rs = build_root_system(t);
    for (const auto& s : enumerate_pi1_choices(rs)) {
      auto g = parse_group(t.name() + ":" + s.label);
      ASSERT_EQ(pi1_order(g), s.order) << t.name() << ":" << s.label;
    }
  }
}

TEST(GroupSpec, DescribeExamples) {
  auto a2 = adjoint({LieFamily::A, 2});
  EXPECT_EQ(pi1_order(a2), 3u);
  EXPECT_EQ(unit_lattice_basis(a2).theta, IntMatrix::identity(2));

  auto c3 = simply_connected({LieFamily::C, 3});
  EXPECT_EQ(pi1_order(c3), 1u);
  EXPECT_EQ(transition_matrix(c3), IntMatrix::identity(3));
}

TEST(GroupSpec, IntermediateForm) {
  // SO(6) = SU(4) / {+-1}: pi1 generated by phi_2.
  auto g = parse_group("A3:pi1=[0,1,0]");
  EXPECT_EQ(pi1_order(g), 2u);
  EXPECT_EQ(g.basis, BasisPreference::Hermite);
  auto theta = unit_lattice_basis(g).theta;
  EXPECT_EQ(lattice_index(g.root_system, theta), 2);
  EXPECT_TRUE(row_lattice_contains(theta, g.root_system.cartan));
  EXPECT_FALSE(row_lattice_contains(g.root_system.cartan, theta));
}

TEST(GroupSpec, GeneratorsThatFillTheCenterGiveAdjointBasis) {
  auto g = parse_group("A2:pi1=[1,0]");
  EXPECT_EQ(g.basis, BasisPreference::FundamentalWeights);
  auto h = parse_group("A2:pi1=[2,-1]");  // a root: trivial
  EXPECT_EQ(h.basis, BasisPreference::SimpleRoots);
  EXPECT_TRUE(h.pi1_generators.empty());
}

TEST(GroupSpec, WrongGeneratorLength) {
  EXPECT_THROW(make_group_spec(build_root_system({LieFamily::A, 2}), {WeightVector{1, 0, 0}}), InvalidInput);
}

TEST(Transition, IntegralAndReproducesRoots) {
  for (const auto& t : all_types_up_to_rank(6)) {
    auto rs = build_root_system(t);
    for (const auto& s : enumerate_pi1_choices(rs)) {
      auto g = make_group_spec(rs, s.generators);
      for (auto choice : {ThetaChoice::Preferred, ThetaChoice::Hermite}) {
        auto basis = unit_lattice_basis(g, choice);
        auto c = transition_matrix(g, basis);
        ASSERT_EQ(c * basis.theta, rs.cartan) << t.name() << ":" << s.label;
        ASSERT_EQ(lattice_index(rs, basis.theta), Integer(s.order)) << t.name() << ":" << s.label;
      }
    }
  }
}
