#include <gtest/gtest.h>

#include <algorithm>
#include <cstdint>
#include <vector>

#include "onepoint/finite_topology.hpp"

using namespace onepoint;
using namespace onepoint::finite;

TEST(Validate, Examples) {
  EXPECT_TRUE(validate_topology(2, {0b00, 0b01, 0b10, 0b11}));
  EXPECT_TRUE(validate_topology(2, {0b00, 0b01, 0b11}));
  EXPECT_FALSE(validate_topology(3, {0b000, 0b001, 0b010, 0b111}));  // {0} ∪ {1} missing
  EXPECT_FALSE(validate_topology(2, {0b01, 0b11}));                  // no empty set
  EXPECT_FALSE(validate_topology(2, {0b00, 0b01}));                  // no whole set
  EXPECT_FALSE(validate_topology(3, {0b000, 0b011, 0b110, 0b111}));  // intersection {1} missing
  EXPECT_TRUE(validate_topology(0, {0}));
  EXPECT_THROW(FiniteSpace(2, {0b00, 0b10}), Error);
}

TEST(Basics, SierpinskiAndDiscrete) {
  FiniteSpace s = FiniteSpace::sierpinski();
  EXPECT_TRUE(s.is_open(0b01));
  EXPECT_FALSE(s.is_open(0b10));
  EXPECT_TRUE(s.is_closed(0b10));
  EXPECT_EQ(s.closure(0b01), 0b11u);
  EXPECT_EQ(s.interior(0b10), 0u);
  EXPECT_EQ(s.minimal_neighbourhood(1), 0b11u);
  EXPECT_EQ(FiniteSpace::discrete(3).opens().size(), 8u);
  EXPECT_EQ(FiniteSpace::indiscrete(3).opens().size(), 2u);
}

TEST(Preorders, RoundTripForSmallSizes) {
  for (int n = 0; n <= 4; ++n) {
    std::size_t count = 0;
    for_each_preorder(n, [&](const Preorder& p) {
      ++count;
      ASSERT_TRUE(p.valid());
      ASSERT_EQ(to_preorder(from_preorder(p)), p);
    });
    EXPECT_GT(count, 0u);
  }
  // and topology -> preorder -> topology through the family enumerator
  for_each_topology_by_family(3, [](const FiniteSpace& t) { ASSERT_EQ(from_preorder(to_preorder(t)), t); });
}

TEST(Enumeration, CountsAgreeAcrossEnumerators) {
  const std::uint64_t expected[] = {1, 1, 4, 29, 355};
  for (int n = 0; n <= 4; ++n) {
    auto counts = enumerate_topologies(n);
    ASSERT_TRUE(counts.via_families.has_value());
    EXPECT_EQ(*counts.via_families, counts.via_preorders) << "n=" << n;
    EXPECT_EQ(counts.via_preorders, expected[n]) << "n=" << n;
  }
}

TEST(Enumeration, FivePoints) {
  auto counts = enumerate_topologies(5);
  EXPECT_EQ(counts.via_preorders, 6942u);
  EXPECT_FALSE(counts.via_families.has_value());
}

TEST(Enumeration, DistinctTopologies) {
  std::vector<std::vector<Subset>> seen;
  for_each_topology(4, [&](const FiniteSpace& t) { seen.push_back(t.opens()); });
  std::sort(seen.begin(), seen.end());
  EXPECT_EQ(std::unique(seen.begin(), seen.end()), seen.end());
}

// T0 topologies correspond to partial orders: 1, 1, 3, 19, 219.
TEST(Enumeration, T0CountsMatchPartialOrders) {
  const std::uint64_t expected[] = {1, 1, 3, 19, 219};
  for (int n = 0; n <= 4; ++n) {
    std::uint64_t t0 = 0;
    for_each_topology_by_family(n, [&](const FiniteSpace& t) { t0 += check_axiom(t, Axiom::T0); });
    EXPECT_EQ(t0, expected[n]) << "n=" << n;
  }
}

TEST(Enumeration, SizeLimits) {
  EXPECT_THROW(enumerate_topologies(7), Error);
  EXPECT_THROW(for_each_topology_by_family(5, [](const FiniteSpace&) {}), Error);
}

TEST(Axioms, Examples) {
  FiniteSpace s = FiniteSpace::sierpinski();
  EXPECT_TRUE(check_axiom(s, Axiom::T0));
  EXPECT_FALSE(check_axiom(s, Axiom::T1));
  EXPECT_FALSE(check_axiom(s, Axiom::T2));
  EXPECT_TRUE(check_axiom(s, Axiom::Connected));

  FiniteSpace d = FiniteSpace::discrete(2);
  EXPECT_TRUE(check_axiom(d, Axiom::T2));
  EXPECT_FALSE(check_axiom(d, Axiom::Connected));
  EXPECT_TRUE(check_axiom(d, Axiom::NormalPairs));

  FiniteSpace i = FiniteSpace::indiscrete(2);
  EXPECT_FALSE(check_axiom(i, Axiom::T0));
  EXPECT_TRUE(check_axiom(i, Axiom::Connected));

  // point 2 lies in every nonempty closed set
  FiniteSpace v = parse_topology("{},{0},{1},{0,1},{0,1,2}");
  EXPECT_TRUE(check_axiom(v, Axiom::Connected));
  EXPECT_FALSE(check_axiom(v, Axiom::T1));

  EXPECT_EQ(parse_axiom("normal-pairs"), Axiom::NormalPairs);
  EXPECT_EQ(to_string(Axiom::LocallyConnected), "locally_connected");
  EXPECT_THROW(parse_axiom("T3"), Error);
}

TEST(Axioms, T1FiniteSpacesAreDiscrete) {
  for (int n = 0; n <= 4; ++n)
    for_each_topology(n, [&](const FiniteSpace& t) {
      if (check_axiom(t, Axiom::T1)) EXPECT_EQ(t, FiniteSpace::discrete(n));
      EXPECT_EQ(check_axiom(t, Axiom::T1), check_axiom(t, Axiom::T2));
    });
}

TEST(Axioms, EveryFiniteSpaceIsLocallyConnected) {
  for (int n = 0; n <= 4; ++n)
    for_each_topology(n, [](const FiniteSpace& t) { EXPECT_TRUE(check_axiom(t, Axiom::LocallyConnected)); });
}

TEST(Components, ScanAgreesWithGrowth) {
  for (int n = 0; n <= 4; ++n)
    for_each_topology(n, [](const FiniteSpace& t) {
      auto a = components_by_scan(t);
      auto b = components_by_growth(t);
      ASSERT_EQ(a, b) << format_topology(t);
      Subset all = 0;
      for (Subset c : a) {
        EXPECT_EQ(all & c, 0u);
        all |= c;
        EXPECT_TRUE(t.is_open(c) && t.is_closed(c));
      }
      EXPECT_EQ(all, t.points());
      EXPECT_EQ(a.size() <= 1, is_connected(t));
    });
}

TEST(Subspace, TraceAndDensity) {
  FiniteSpace s = parse_topology("{},{0},{0,1},{0,1,2}");
  FiniteSpace sub = subspace(s, 0b110);
  EXPECT_EQ(sub, FiniteSpace::sierpinski());
  EXPECT_TRUE(is_dense(s, 0b001));
  EXPECT_FALSE(is_dense(s, 0b100));
  EXPECT_EQ(subspace(s, 0b000).size(), 0);
}

TEST(Search, Examples) {
  EXPECT_TRUE(search_one_point_connectifications(FiniteSpace::discrete(2), Axiom::T2).empty());
  EXPECT_TRUE(search_one_point_connectifications(FiniteSpace::discrete(1), Axiom::T2).empty());
  EXPECT_FALSE(search_one_point_connectifications(FiniteSpace::sierpinski(), Axiom::T0).empty());

  auto one = search_one_point_connectifications(FiniteSpace::discrete(1), Axiom::T0);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(format_topology(one[0]), "{},{0},{0,1}");

  EXPECT_THROW(search_one_point_connectifications(FiniteSpace::discrete(5), Axiom::T0), Error);
}

TEST(Search, ResultsSatisfyTheirDefinition) {
  for (int n = 1; n <= 3; ++n)
    for_each_topology(n, [&](const FiniteSpace& x) {
      for (const auto& y : search_one_point_connectifications(x, Axiom::T0)) {
        ASSERT_EQ(y.size(), n + 1);
        EXPECT_EQ(subspace(y, full_set(n)), x);
        EXPECT_TRUE(is_dense(y, full_set(n)));
        EXPECT_TRUE(is_connected(y));
        EXPECT_TRUE(check_axiom(y, Axiom::T0));
      }
    });
}

TEST(Literal, RoundTripAndErrors) {
  EXPECT_EQ(parse_topology("{},{0},{0,1}"), FiniteSpace::sierpinski());
  EXPECT_EQ(parse_topology("{0,1} , {0}, {}"), FiniteSpace::sierpinski());
  EXPECT_EQ(format_topology(FiniteSpace::discrete(2)), "{},{0},{1},{0,1}");
  for_each_topology(3, [](const FiniteSpace& t) { EXPECT_EQ(parse_topology(format_topology(t)), t); });

  auto code = [](const char* text) {
    try {
      parse_topology(text);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::FidelityFailure;
  };
  EXPECT_EQ(code("{0},{0,1}"), ErrorCode::InvalidTopology);
  EXPECT_EQ(code("{},{1}"), ErrorCode::InvalidTopology);
  EXPECT_EQ(code("x"), ErrorCode::ParseError);
  EXPECT_EQ(code("{},{a}"), ErrorCode::ParseError);
  EXPECT_EQ(code("{},{0"), ErrorCode::ParseError);
  EXPECT_EQ(code("{},{9}"), ErrorCode::SizeTooLarge);
}
