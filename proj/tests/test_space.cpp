#include <gtest/gtest.h>

#include <optional>
#include <vector>

#include "onepoint/corpus.hpp"
#include "onepoint/space.hpp"

using namespace onepoint;

namespace {

IntervalSet S(const char* text) { return parse_set(text); }

}  // namespace

TEST(Components, Examples) {
  auto c = Space::parse("(0,1) U [2,3]").components();
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(c[0].piece.str(), "(0,1)");
  EXPECT_EQ(c[1].piece.str(), "[2,3]");
  EXPECT_EQ(c[1].index, 1u);

  auto one = Space::parse("(0,1] U (1,2)").components();
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0].piece.str(), "(0,2)");

  auto pt = Space::parse("[0,0] U (1,2)").components();
  ASSERT_EQ(pt.size(), 2u);
  EXPECT_TRUE(pt[0].piece.degenerate());
}

TEST(Components, EmptySpaceRejected) {
  try {
    Space(IntervalSet{});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::EmptySpace);
  }
}

TEST(Components, PartitionIntoClopenSets) {
  Rng rng(5);
  for (int round = 0; round < 100; ++round) {
    Space x = corpus::random_space(rng, round % 2 == 0);
    IntervalSet all;
    auto comps = x.components();
    for (std::size_t i = 0; i < comps.size(); ++i) {
      IntervalSet c = comps[i].as_set();
      EXPECT_TRUE(is_open_in(c, x.ambient())) << c << " in " << x.ambient();
      EXPECT_TRUE(is_closed_in(c, x.ambient())) << c << " in " << x.ambient();
      for (std::size_t j = i + 1; j < comps.size(); ++j) EXPECT_TRUE(disjoint(c, comps[j].as_set()));
      all = unite(all, c);
    }
    EXPECT_EQ(all, x.ambient());
  }
}

TEST(Compactness, Examples) {
  EXPECT_TRUE(is_compact(parse_interval("[2,3]")));
  EXPECT_FALSE(is_compact(parse_interval("(0,1)")));
  EXPECT_FALSE(is_compact(parse_interval("[5,inf)")));
  EXPECT_TRUE(is_compact(parse_interval("[0,0]")));

  EXPECT_EQ(has_compact_component(Space::parse("(0,1) U [2,3]"))->piece.str(), "[2,3]");
  EXPECT_FALSE(has_compact_component(Space::parse("(0,1) U (2,3)")).has_value());
  EXPECT_EQ(has_compact_component(Space::parse("[0,0]"))->piece.str(), "[0,0]");
}

namespace {

// Greedy sweep over a finite family of sets open in C; returns the chosen
// members when they cover the compact interval C.
std::optional<std::vector<IntervalSet>> greedy_subcover(const Interval& c, const std::vector<IntervalSet>& family) {
  std::vector<IntervalSet> chosen;
  Rational pos = c.lo().value;
  bool need_pos = true;  // pos itself still uncovered
  while (true) {
    const IntervalSet* best = nullptr;
    std::optional<Interval> best_piece;
    for (const auto& member : family)
      for (const auto& p : member.pieces()) {
        bool covers_start = need_pos ? p.contains(pos) : (p.contains(pos) || (p.lo().value == pos && p.hi().value > pos));
        if (!covers_start) continue;
        if (!best_piece || best_piece->hi_cut() < p.hi_cut()) {
          best = &member;
          best_piece = p;
        }
      }
    if (!best) return std::nullopt;
    chosen.push_back(*best);
    Endpoint reach = best_piece->hi();
    if (reach.value > c.hi().value || (reach.value == c.hi().value && reach.included)) return chosen;
    pos = reach.value;
    need_pos = !reach.included;
  }
}

}  // namespace

// Compact pieces: a generated open cover always has a finite subcover.
// Non-compact pieces: the increasing escape cover has no finite subcover,
// since every member misses a point of C.
TEST(Compactness, CoverOracleOnHandBuiltCases) {
  const char* cases[] = {"[0,1]", "[2,3]", "[0,0]", "[-5,7/2]", "[1/3,1/2]", "[-1,-1]", "[0,100]",
                         "(0,1)", "[0,1)", "(0,1]", "[5,inf)", "(-inf,0)", "(-inf,inf)", "(-inf,3]",
                         "(2,inf)", "[-1/2,1/2)", "(1/4,3/4]", "(0,1/1024)", "[7,8)", "(-3,-2)"};
  Rng rng(3);
  int compact_cases = 0, open_cases = 0;
  for (const char* text : cases) {
    Interval c = parse_interval(text);
    IntervalSet cs(c);
    if (is_compact(c)) {
      ++compact_cases;
      for (int round = 0; round < 20; ++round) {
        std::vector<IntervalSet> family;
        IntervalSet covered;
        while (!is_subset(cs, covered)) {
          Rational mid = sample_point(rng, c);
          Rational width = c.hi().value - c.lo().value;
          Rational r = (width.sign() > 0 ? width / Rational(16) : Rational(1)) * Rational(rng.between(1, 4));
          IntervalSet member = intersect(IntervalSet(Interval::open(mid - r, mid + r)), cs);
          family.push_back(member);
          covered = unite(covered, member);
        }
        auto sub = greedy_subcover(c, family);
        ASSERT_TRUE(sub.has_value()) << text;
        IntervalSet u;
        for (const auto& m : *sub) u = unite(u, m);
        EXPECT_TRUE(is_subset(cs, u)) << text;
        EXPECT_LE(sub->size(), family.size());
      }
    } else {
      ++open_cases;
      // escape cover: members grow toward every non-compact end
      auto member = [&](std::int64_t n) {
        Endpoint lo = c.lo(), hi = c.hi();
        Endpoint mlo = !lo.finite() ? Endpoint::open(Rational(-n))
                                    : (lo.included ? Endpoint::closed(lo.value)
                                                   : Endpoint::open(lo.value + (Rational(1) / Rational(n + 1)) *
                                                                                   (hi.finite() ? hi.value - lo.value : Rational(1))));
        Endpoint mhi = !hi.finite() ? Endpoint::open(Rational(n))
                                    : (hi.included ? Endpoint::closed(hi.value)
                                                   : Endpoint::open(hi.value - (Rational(1) / Rational(n + 1)) *
                                                                                   (lo.finite() ? hi.value - lo.value : Rational(1))));
        IntervalSet m;
        if (mlo.value < mhi.value || !mlo.finite() || !mhi.finite()) m = intersect(IntervalSet(Interval::make(mlo, mhi)), cs);
        return m;
      };
      IntervalSet prev;
      for (std::int64_t n = 1; n <= 64; ++n) {
        IntervalSet m = member(n);
        EXPECT_TRUE(is_open_in(m, cs));
        EXPECT_TRUE(is_subset(prev, m)) << text << " n=" << n;
        EXPECT_FALSE(m == cs) << text << " member " << n << " already covers";
        prev = m;
      }
      // yet the family covers C: every sampled point lies in some member
      for (int i = 0; i < 50; ++i) {
        Rational z = sample_point(rng, c);
        bool found = false;
        for (std::int64_t n = 1; n <= (std::int64_t{1} << 40) && !found; n *= 2) found = member(n).contains(z);
        EXPECT_TRUE(found) << text << " point " << z;
      }
    }
  }
  EXPECT_EQ(compact_cases + open_cases, 20);
}

TEST(LocalConnectedness, Examples) {
  Space x = Space::parse("(0,1) U [2,3]");
  auto cert = local_connectedness_certificate(x);
  ASSERT_EQ(cert.windows.size(), 2u);
  EXPECT_EQ(cert.windows[1].window.str(), "(1,4)");
  EXPECT_EQ(intersect(IntervalSet(cert.windows[1].window), x.ambient()), S("[2,3]"));

  Space y = Space::parse("[0,1) U (1,2]");
  auto cy = local_connectedness_certificate(y);
  EXPECT_EQ(cy.windows[0].window.str(), "(-1,1)");
  EXPECT_EQ(intersect(IntervalSet(cy.windows[0].window), y.ambient()), S("[0,1)"));

  auto cz = local_connectedness_certificate(Space::parse("(0,inf)"));
  EXPECT_EQ(cz.windows[0].window.str(), "(0,inf)");
}

TEST(LocalConnectedness, WindowsIsolateComponents) {
  Rng rng(8);
  for (int round = 0; round < 100; ++round) {
    Space x = corpus::random_space(rng, false);
    auto cert = local_connectedness_certificate(x);
    ASSERT_EQ(cert.windows.size(), x.component_count());
    for (const auto& w : cert.windows) {
      EXPECT_FALSE(w.window.lo().included || w.window.hi().included);
      EXPECT_EQ(intersect(IntervalSet(w.window), x.ambient()), x.component(w.component).as_set());
    }
  }
}

TEST(Separation, Examples) {
  auto [u, v] = separate_disjoint_closed(Space::parse("(-inf,inf)"), S("[0,1]"), S("[2,3]"));
  EXPECT_EQ(u, S("(-inf,3/2)"));
  EXPECT_EQ(v, S("(3/2,inf)"));

  Space x = Space::parse("(0,1) U (1,2)");
  auto [u2, v2] = separate_disjoint_closed(x, S("(0,1)"), S("(1,2)"));
  EXPECT_EQ(u2, S("(0,1)"));
  EXPECT_EQ(v2, S("(1,2)"));

  auto [u3, v3] = separate_disjoint_closed(x, IntervalSet{}, S("[3/2,2)"));
  EXPECT_TRUE(u3.empty());
  EXPECT_EQ(v3, x.ambient());
}

TEST(Separation, Errors) {
  Space x = Space::parse("(0,1)");
  try {
    separate_disjoint_closed(x, S("(0,1/2)"), S("[3/4,1)"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotClosed);
  }
  try {
    separate_disjoint_closed(x, S("(0,1/2]"), S("[1/2,1)"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotDisjoint);
  }
}

TEST(Separation, PostconditionsOnRandomPairs) {
  Rng rng(21);
  for (int round = 0; round < 400; ++round) {
    Space x = corpus::random_space(rng, round % 3 == 0);
    IntervalSet f = random_closed_in(rng, x.ambient());
    IntervalSet g = random_closed_in(rng, x.ambient());
    // remove a real-open fattening of f so g stays closed and disjoint
    std::vector<Interval> fat;
    for (const auto& iv : f.pieces()) {
      Endpoint lo = iv.lo().finite() ? Endpoint::open(iv.lo().value - Rational(1, 16)) : Endpoint::neg_inf();
      Endpoint hi = iv.hi().finite() ? Endpoint::open(iv.hi().value + Rational(1, 16)) : Endpoint::pos_inf();
      fat.push_back(Interval::make(lo, hi));
    }
    g = difference(g, IntervalSet::normalize(fat));
    ASSERT_TRUE(is_closed_in(g, x.ambient()));
    auto [u, v] = separate_disjoint_closed(x, f, g);
    EXPECT_TRUE(is_open_in(u, x.ambient())) << u;
    EXPECT_TRUE(is_open_in(v, x.ambient())) << v;
    EXPECT_TRUE(is_subset(f, u)) << f << " vs " << u;
    EXPECT_TRUE(is_subset(g, v)) << g << " vs " << v;
    EXPECT_TRUE(disjoint(u, v));
  }
}

TEST(Separation, TouchingClosuresCutAtMissingPoint) {
  Space x = Space::parse("(-inf,0) U (0,inf)");
  auto [u, v] = separate_disjoint_closed(x, S("[-1,0)"), S("(0,1/2] U [2,3]"));
  EXPECT_EQ(u, S("(-inf,0)"));
  EXPECT_EQ(v, S("(0,inf)"));
  auto [u2, v2] = separate_disjoint_closed(x, S("[-1,0) U [5,6]"), S("(0,1/2]"));
  EXPECT_EQ(u2, S("(-inf,0) U (11/4,inf)"));
  EXPECT_EQ(v2, S("(0,11/4)"));
}
