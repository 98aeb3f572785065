#pragma once

// The invariant suite: one function per acceptance property, each returning
// deterministic summary lines. All checks are exact.

#include <cstdint>
#include <string>
#include <vector>

#include "onepoint/compactify.hpp"
#include "onepoint/connectify.hpp"
#include "onepoint/corpus.hpp"
#include "onepoint/finite_topology.hpp"

namespace onepoint::selftest {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = true;
  std::vector<std::string> lines;

  void expect(bool ok, const std::string& failure) {
    if (ok) return;
    if (passed || lines.size() < 20) lines.push_back("failure: " + failure);
    passed = false;
  }
};

/// Generated spaces beyond the fixed ones.
inline constexpr std::size_t kCorpusGenerated = 200;

inline const std::vector<Space>& corpus() {
  static const std::vector<Space> spaces = corpus::make_corpus(kCorpusGenerated);
  return spaces;
}

inline std::vector<Extension> connectifiable_corpus() {
  std::vector<Extension> out;
  for (const auto& x : corpus())
    if (auto v = check_connectifiable(x); std::holds_alternative<Extension>(v)) out.push_back(std::get<Extension>(v));
  return out;
}

inline CriterionResult verdict_dichotomy() {
  CriterionResult r{1, "verdict-dichotomy", true, {}};
  std::size_t refused = 0;
  for (const auto& x : corpus()) {
    Verdict v = check_connectifiable(x);
    auto compact = has_compact_component(x);
    bool is_refused = std::holds_alternative<Refusal>(v);
    r.expect(is_refused == compact.has_value(), "dichotomy broken on " + x.ambient().str());
    if (!is_refused) continue;
    ++refused;
    IntervalSet c = std::get<Refusal>(v).witness.as_set();
    r.expect(is_open_in(c, x.ambient()) && is_closed_in(c, x.ambient()),
             "refusal witness not clopen on " + x.ambient().str());
    r.expect(is_compact(std::get<Refusal>(v).witness), "refusal witness not compact on " + x.ambient().str());
  }
  r.lines.insert(r.lines.begin(), "spaces=" + std::to_string(corpus().size()) + " refused=" + std::to_string(refused));
  return r;
}

/// Clopen candidates: random opens plus unions of whole components with and
/// without p.
inline std::vector<ExtOpenSet> clopen_candidates(Rng& rng, const Extension& y, std::size_t count) {
  std::vector<ExtOpenSet> out;
  const std::size_t k = y.component_count();
  while (out.size() < count) {
    switch (rng.below(3)) {
      case 0: out.push_back(random_open_in_extension(rng, y)); break;
      case 1: {
        IntervalSet s;
        for (std::size_t i = 0; i < k; ++i)
          if (rng.chance(1, 2)) s = unite(s, y.filter(i).component().as_set());
        out.push_back(ExtOpenSet::type1(s));
        break;
      }
      default: {
        // whole components plus tails of the others, with p
        IntervalSet s;
        for (std::size_t i = 0; i < k; ++i) {
          const auto& f = y.filter(i);
          if (rng.chance(1, 2)) {
            s = unite(s, f.component().as_set());
          } else {
            Rational e = f.inner_endpoint(rng.below(6));
            Interval ray = f.rightward() ? Interval::make(Endpoint::open(e), Endpoint::pos_inf())
                                         : Interval::make(Endpoint::neg_inf(), Endpoint::open(e));
            s = unite(s, intersect(IntervalSet(ray), f.component().as_set()));
          }
        }
        if (auto nb = neighbourhood_of_p(y, s)) out.push_back(*nb);
        break;
      }
    }
  }
  return out;
}

inline CriterionResult construction_soundness() {
  CriterionResult r{2, "construction-soundness", true, {}};
  auto extensions = connectifiable_corpus();
  Rng rng(7);
  std::size_t candidates = 0, trivial = 0;
  for (const auto& y : extensions) {
    std::string tag = y.x().str();
    try {
      r.expect(density_check(y, 100).valid(), "density on " + tag);
      r.expect(subspace_fidelity(y, 100).valid(), "subspace fidelity on " + tag);
    } catch (const Error& e) {
      r.expect(false, std::string(e.what()) + " on " + tag);
    }
    auto cert = connectedness_certificate(y);
    r.expect(cert.replay(y).valid(), "connectedness replay on " + tag);
    for (const auto& s : clopen_candidates(rng, y, 200)) {
      ++candidates;
      ClopenVerdict v = clopen_falsifier(y, s);
      r.expect(!std::holds_alternative<ProperClopen>(v), "proper clopen found on " + tag);
      if (std::holds_alternative<IsTrivial>(v)) ++trivial;
      r.expect(cert.check_against(y, s), "certificate fails on a candidate over " + tag);
    }
  }
  r.lines.insert(r.lines.begin(), "extensions=" + std::to_string(extensions.size()) +
                                      " clopen-candidates=" + std::to_string(candidates) +
                                      " trivial=" + std::to_string(trivial));
  return r;
}

inline CriterionResult witness_soundness() {
  CriterionResult r{3, "witness-soundness", true, {}};
  auto extensions = connectifiable_corpus();
  Rng rng(11);
  std::size_t pairs = 0, closed_pairs = 0, p_cases = 0;
  for (const auto& y : extensions) {
    std::string tag = y.x().str();
    for (int i = 0; i < 100; ++i) {
      auto [a, b] = corpus::random_point_pair(rng, y);
      auto w = hausdorff_witness(y, a, b);
      ++pairs;
      r.expect(verify_hausdorff(y, a, b, w), "hausdorff " + a.str() + " vs " + b.str() + " on " + tag);
    }
    for (int i = 0; i < 50; ++i) {
      auto [f, g] = corpus::random_closed_pair(rng, y);
      r.expect(is_closed_in_extension(y, f) && is_closed_in_extension(y, g), "generator produced non-closed pair");
      auto w = normality_witness(y, f, g);
      ++closed_pairs;
      if (w.p_case) ++p_cases;
      r.expect(verify_normality(y, f, g, w), "normality " + f.trace.str() + " vs " + g.trace.str() + " on " + tag);
      r.expect(matches_displayed_shape(y, w), "normality shape on " + tag);
    }
  }
  r.expect(p_cases > 0, "no p-in-F normality cases were generated");
  r.lines.insert(r.lines.begin(), "point-pairs=" + std::to_string(pairs) + " closed-pairs=" +
                                      std::to_string(closed_pairs) + " p-cases=" + std::to_string(p_cases));
  return r;
}

inline CriterionResult filter_laws() {
  CriterionResult r{4, "filter-laws", true, {}};
  Rng rng(13);
  std::size_t filters = 0, points = 0;
  for (const auto& x : corpus()) {
    for (const auto& c : x.components()) {
      if (is_compact(c)) continue;
      EscapeFilter f = choose_escape(c);
      ++filters;
      IntervalSet cs = c.as_set();
      IntervalSet prev = f.element(0);
      r.expect(!prev.empty() && is_closed_in(prev, cs), "element 0 on " + c.piece.str());
      for (std::uint64_t n = 1; n <= 64; ++n) {
        IntervalSet cur = f.element(n);
        r.expect(!cur.empty(), "empty element " + std::to_string(n) + " on " + c.piece.str());
        r.expect(is_subset(cur, prev), "not nested at " + std::to_string(n) + " on " + c.piece.str());
        r.expect(is_closed_in(cur, cs), "not closed at " + std::to_string(n) + " on " + c.piece.str());
        prev = std::move(cur);
      }
      for (int i = 0; i < 200; ++i) {
        Rational z = sample_point(rng, c.piece);
        std::uint64_t n = f.avoid_index(z);
        ++points;
        r.expect(!f.element(n).contains(z), "avoid index does not avoid " + z.str());
        r.expect(n == 0 || f.element(n - 1).contains(z), "avoid index not least for " + z.str());
      }
    }
  }
  r.lines.insert(r.lines.begin(), "filters=" + std::to_string(filters) + " avoid-points=" + std::to_string(points));
  return r;
}

inline CriterionResult finite_enumeration() {
  CriterionResult r{5, "finite-enumeration", true, {}};
  const std::uint64_t expected[] = {1, 1, 4, 29, 355};
  for (int n = 0; n <= 4; ++n) {
    auto counts = finite::enumerate_topologies(n);
    r.lines.push_back("n=" + std::to_string(n) + " preorders=" + std::to_string(counts.via_preorders) +
                      " families=" + std::to_string(counts.via_families.value_or(0)));
    r.expect(counts.agree(), "enumerators disagree at n=" + std::to_string(n));
    r.expect(counts.via_preorders == expected[n], "unexpected count at n=" + std::to_string(n));
  }
  return r;
}

inline CriterionResult micro_necessity() {
  CriterionResult r{6, "micro-necessity", true, {}};
  for (int n = 1; n <= 4; ++n) {
    std::size_t t1_spaces = 0, found = 0;
    finite::for_each_topology(n, [&](const finite::FiniteSpace& x) {
      if (!finite::check_axiom(x, finite::Axiom::T1)) return;
      ++t1_spaces;
      found += finite::search_one_point_connectifications(x, finite::Axiom::T2).size();
    });
    r.lines.push_back("n=" + std::to_string(n) + " t1-spaces=" + std::to_string(t1_spaces) +
                      " t2-connectifications=" + std::to_string(found));
    r.expect(found == 0, "a T2 one-point connectification exists at n=" + std::to_string(n));
  }
  return r;
}

inline CriterionResult compactification_duality() {
  CriterionResult r{7, "compactification-duality", true, {}};
  Rng rng(17);
  std::size_t single = 0, witnesses = 0, covers = 0;
  for (const auto& x : corpus()) {
    bool compact_refused = std::holds_alternative<CompactRefusal>(compactify(x));
    r.expect(compact_refused == is_space_compact(x), "compactify verdict on " + x.ambient().str());
    if (x.component_count() == 1) {
      ++single;
      bool connect_refused = std::holds_alternative<Refusal>(check_connectifiable(x));
      r.expect(compact_refused == connect_refused, "duality broken on " + x.ambient().str());
    }
    if (compact_refused) continue;
    CompactExtension y{x};
    for (int i = 0; i < 20; ++i) {
      ExtPoint a = rng.chance(1, 4) ? ExtPoint::p() : ExtPoint::at(sample_point(rng, x.ambient()));
      ExtPoint b = ExtPoint::at(sample_point(rng, x.ambient()));
      if (a == b) continue;
      ++witnesses;
      r.expect(verify_compact_separation(y, a, b, compactification_hausdorff_witness(y, a, b)),
               "compactification witness " + a.str() + " vs " + b.str() + " on " + x.ambient().str());
    }
    for (int i = 0; i < 5; ++i) {
      auto cover = corpus::random_cover(rng, y);
      auto chosen = finite_subcover(y, cover);
      std::vector<CompactOpenSet> sub;
      for (auto idx : chosen) sub.push_back(cover.at(idx));
      ++covers;
      r.expect(covers_compactification(y, cover), "generated family is not a cover");
      r.expect(covers_compactification(y, sub), "subcover does not cover on " + x.ambient().str());
    }
  }
  r.lines.insert(r.lines.begin(), "single-component=" + std::to_string(single) + " witnesses=" +
                                      std::to_string(witnesses) + " covers=" + std::to_string(covers));
  return r;
}

inline std::vector<CriterionResult (*)()> all_criteria() {
  return {verdict_dichotomy, construction_soundness, witness_soundness, filter_laws,
          finite_enumeration, micro_necessity, compactification_duality};
}

}  // namespace onepoint::selftest
