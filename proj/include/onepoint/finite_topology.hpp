#pragma once

// Topologies on {0..n-1} for n ≤ 6, as explicit open-set families and as
// specialization preorders. Used as a brute-force oracle: two independent
// enumerators, definition-literal axiom checks, and an exhaustive search for
// one-point connectifications.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "onepoint/error.hpp"

namespace onepoint::finite {

using Subset = std::uint32_t;  // bit i set <=> point i in the subset

inline constexpr int kMaxPoints = 6;
inline constexpr int kMaxFamilyEnumeration = 4;

inline Subset full_set(int n) { return n == 0 ? 0u : (Subset{1} << n) - 1; }
inline bool has(Subset s, int i) { return (s >> i) & 1u; }
inline int cardinality(Subset s) { return std::popcount(s); }

/// Canonical order for open-set lists: by size, then by bit pattern.
inline bool subset_order(Subset a, Subset b) {
  int ca = cardinality(a), cb = cardinality(b);
  return ca != cb ? ca < cb : a < b;
}

inline bool validate_topology(int n, const std::vector<Subset>& family) {
  if (n < 0 || n > kMaxPoints) return false;
  Subset full = full_set(n);
  bool has_empty = false, has_full = false;
  for (Subset s : family) {
    if (s & ~full) return false;
    has_empty = has_empty || s == 0;
    has_full = has_full || s == full;
  }
  if (!has_empty || !has_full) return false;
  std::vector<bool> member(static_cast<std::size_t>(full) + 1, false);
  for (Subset s : family) member[s] = true;
  for (Subset a : family)
    for (Subset b : family)
      if (!member[a | b] || !member[a & b]) return false;
  return true;
}

class FiniteSpace {
 public:
  FiniteSpace(int n, std::vector<Subset> opens) : size_(n), opens_(std::move(opens)) {
    std::sort(opens_.begin(), opens_.end(), subset_order);
    opens_.erase(std::unique(opens_.begin(), opens_.end()), opens_.end());
    if (!validate_topology(n, opens_)) throw Error(ErrorCode::InvalidTopology, "family is not a topology");
  }

  static FiniteSpace discrete(int n) {
    std::vector<Subset> all;
    for (Subset s = 0; s <= full_set(n); ++s) all.push_back(s);
    return {n, all};
  }
  static FiniteSpace indiscrete(int n) { return {n, {0, full_set(n)}}; }
  static FiniteSpace sierpinski() { return {2, {0b00, 0b01, 0b11}}; }

  int size() const { return size_; }
  Subset points() const { return full_set(size_); }
  const std::vector<Subset>& opens() const { return opens_; }

  bool is_open(Subset s) const { return std::binary_search(opens_.begin(), opens_.end(), s, subset_order); }
  bool is_closed(Subset s) const { return is_open(points() & ~s); }

  Subset interior(Subset s) const {
    Subset out = 0;
    for (Subset u : opens_)
      if ((u & ~s) == 0) out |= u;
    return out;
  }
  Subset closure(Subset s) const { return points() & ~interior(points() & ~s); }

  /// Smallest open set containing point i.
  Subset minimal_neighbourhood(int i) const {
    Subset out = points();
    for (Subset u : opens_)
      if (has(u, i)) out &= u;
    return out;
  }

  friend bool operator==(const FiniteSpace&, const FiniteSpace&) = default;

 private:
  int size_;
  std::vector<Subset> opens_;
};

class Preorder {
 public:
  explicit Preorder(int n) : size_(n), rel_(static_cast<std::size_t>(n * n), false) {
    for (int i = 0; i < n; ++i) set(i, i);
  }

  int size() const { return size_; }
  bool leq(int i, int j) const { return rel_[static_cast<std::size_t>(i * size_ + j)]; }
  void set(int i, int j, bool v = true) { rel_[static_cast<std::size_t>(i * size_ + j)] = v; }

  bool valid() const {
    for (int i = 0; i < size_; ++i) {
      if (!leq(i, i)) return false;
      for (int j = 0; j < size_; ++j)
        for (int k = 0; k < size_; ++k)
          if (leq(i, j) && leq(j, k) && !leq(i, k)) return false;
    }
    return true;
  }

  friend bool operator==(const Preorder&, const Preorder&) = default;

 private:
  int size_;
  std::vector<bool> rel_;
};

/// Specialization preorder: i ≤ j iff every open set containing i contains j.
inline Preorder to_preorder(const FiniteSpace& t) {
  Preorder p(t.size());
  for (int i = 0; i < t.size(); ++i) {
    Subset nb = t.minimal_neighbourhood(i);
    for (int j = 0; j < t.size(); ++j) p.set(i, j, has(nb, j));
  }
  return p;
}

/// Opens are the up-closed sets of the preorder.
inline FiniteSpace from_preorder(const Preorder& p) {
  int n = p.size();
  std::vector<Subset> up(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (p.leq(i, j)) up[static_cast<std::size_t>(i)] |= Subset{1} << j;
  std::vector<Subset> opens;
  for (Subset s = 0; s <= full_set(n); ++s) {
    bool closed_up = true;
    for (int i = 0; i < n && closed_up; ++i)
      if (has(s, i) && (up[static_cast<std::size_t>(i)] & ~s)) closed_up = false;
    if (closed_up) opens.push_back(s);
  }
  return {n, opens};
}

/// Streams every preorder on n points. Point k is added to a preorder on
/// {0..k-1} by choosing its down-set D and up-set U: D down-closed, U
/// up-closed, and d ≤ u for all d ∈ D, u ∈ U.
inline void for_each_preorder(int n, const std::function<void(const Preorder&)>& visit) {
  if (n < 0 || n > kMaxPoints) throw Error(ErrorCode::SizeTooLarge, "n = " + std::to_string(n));
  std::function<void(const Preorder&, int)> extend = [&](const Preorder& base, int k) {
    if (k == n) {
      visit(base);
      return;
    }
    Subset old = full_set(k);
    for (Subset down = 0; down <= old; ++down) {
      bool down_closed = true;
      for (int i = 0; i < k && down_closed; ++i)
        for (int j = 0; j < k && down_closed; ++j)
          if (has(down, j) && base.leq(i, j) && !has(down, i)) down_closed = false;
      if (!down_closed) continue;
      for (Subset upset = 0; upset <= old; ++upset) {
        bool ok = true;
        for (int i = 0; i < k && ok; ++i)
          for (int j = 0; j < k && ok; ++j) {
            if (has(upset, i) && base.leq(i, j) && !has(upset, j)) ok = false;
            if (has(down, i) && has(upset, j) && !base.leq(i, j)) ok = false;
          }
        if (!ok) continue;
        Preorder next(k + 1);
        for (int i = 0; i < k; ++i)
          for (int j = 0; j < k; ++j) next.set(i, j, base.leq(i, j));
        for (int i = 0; i < k; ++i) {
          next.set(i, k, has(down, i));
          next.set(k, i, has(upset, i));
        }
        extend(next, k + 1);
      }
    }
  };
  extend(Preorder(0), 0);
}

inline void for_each_topology(int n, const std::function<void(const FiniteSpace&)>& visit) {
  for_each_preorder(n, [&](const Preorder& p) { visit(from_preorder(p)); });
}

/// Independent enumerator: every family of subsets of {0..n-1} that passes
/// validate_topology. Exhaustive over 2^(2^n) families, so n ≤ 4.
inline void for_each_topology_by_family(int n, const std::function<void(const FiniteSpace&)>& visit) {
  if (n < 0 || n > kMaxFamilyEnumeration) throw Error(ErrorCode::SizeTooLarge, "n = " + std::to_string(n));
  Subset full = full_set(n);
  std::uint32_t subsets = full + 1;
  if (n == 0) {
    visit(FiniteSpace(0, {0}));
    return;
  }
  // ∅ and the full set are forced; choose the rest freely.
  std::uint32_t free_count = subsets - 2;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free_count); ++mask) {
    std::vector<Subset> family{0, full};
    for (std::uint32_t b = 0; b < free_count; ++b)
      if ((mask >> b) & 1u) family.push_back(b + 1);
    if (validate_topology(n, family)) visit(FiniteSpace(n, family));
  }
}

struct EnumerationCounts {
  std::uint64_t via_preorders = 0;
  std::optional<std::uint64_t> via_families;  // n ≤ 4 only

  bool agree() const { return !via_families || *via_families == via_preorders; }
};

inline EnumerationCounts enumerate_topologies(int n) {
  EnumerationCounts counts;
  for_each_preorder(n, [&](const Preorder&) { ++counts.via_preorders; });
  if (n <= kMaxFamilyEnumeration) {
    std::uint64_t c = 0;
    for_each_topology_by_family(n, [&](const FiniteSpace&) { ++c; });
    counts.via_families = c;
  }
  return counts;
}

// ---------------------------------------------------------------------------
// Definition-literal checks

/// Trace topology on the points of a, relabelled 0..|a|-1 in increasing order.
inline FiniteSpace subspace(const FiniteSpace& s, Subset a) {
  std::vector<int> labels;
  for (int i = 0; i < s.size(); ++i)
    if (has(a, i)) labels.push_back(i);
  std::vector<Subset> opens;
  for (Subset u : s.opens()) {
    Subset t = 0;
    for (std::size_t k = 0; k < labels.size(); ++k)
      if (has(u, labels[k])) t |= Subset{1} << k;
    opens.push_back(t);
  }
  return {static_cast<int>(labels.size()), opens};
}

inline bool is_dense(const FiniteSpace& s, Subset a) { return s.closure(a) == s.points(); }

/// No proper nonempty subset of a is clopen in the trace topology on a.
inline bool is_connected_subset(const FiniteSpace& s, Subset a) {
  std::vector<Subset> traces;
  for (Subset u : s.opens()) traces.push_back(u & a);
  auto is_trace = [&](Subset t) { return std::find(traces.begin(), traces.end(), t) != traces.end(); };
  for (Subset t : traces)
    if (t != 0 && t != a && is_trace(a & ~t)) return false;
  return true;
}

inline bool is_connected(const FiniteSpace& s) { return is_connected_subset(s, s.points()); }

/// Components as maximal connected subsets: for each point, the union of
/// every connected subset containing it (exhaustive subset scan).
inline std::vector<Subset> components_by_scan(const FiniteSpace& s) {
  std::vector<Subset> out;
  Subset seen = 0;
  for (int i = 0; i < s.size(); ++i) {
    if (has(seen, i)) continue;
    Subset comp = 0;
    for (Subset a = 1; a <= s.points(); ++a)
      if (has(a, i) && is_connected_subset(s, a)) comp |= a;
    out.push_back(comp);
    seen |= comp;
  }
  return out;
}

/// Components by growing from a point through specialization-comparable
/// points until stable.
inline std::vector<Subset> components_by_growth(const FiniteSpace& s) {
  Preorder p = to_preorder(s);
  std::vector<Subset> out;
  Subset seen = 0;
  for (int i = 0; i < s.size(); ++i) {
    if (has(seen, i)) continue;
    Subset comp = Subset{1} << i;
    bool grew = true;
    while (grew) {
      grew = false;
      for (int a = 0; a < s.size(); ++a) {
        if (!has(comp, a)) continue;
        for (int b = 0; b < s.size(); ++b)
          if (!has(comp, b) && (p.leq(a, b) || p.leq(b, a))) {
            comp |= Subset{1} << b;
            grew = true;
          }
      }
    }
    out.push_back(comp);
    seen |= comp;
  }
  return out;
}

enum class Axiom { T0, T1, T2, Connected, LocallyConnected, NormalPairs };

inline std::string_view to_string(Axiom a) {
  switch (a) {
    case Axiom::T0: return "T0";
    case Axiom::T1: return "T1";
    case Axiom::T2: return "T2";
    case Axiom::Connected: return "connected";
    case Axiom::LocallyConnected: return "locally_connected";
    case Axiom::NormalPairs: return "normal-pairs";
  }
  return "?";
}

inline Axiom parse_axiom(std::string_view text) {
  for (Axiom a : {Axiom::T0, Axiom::T1, Axiom::T2, Axiom::Connected, Axiom::LocallyConnected, Axiom::NormalPairs})
    if (text == to_string(a)) return a;
  throw Error(ErrorCode::ParseError, "unknown axiom '" + std::string(text) + "'");
}

inline bool check_axiom(const FiniteSpace& s, Axiom axiom) {
  const int n = s.size();
  const auto& opens = s.opens();
  switch (axiom) {
    case Axiom::T0:
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          bool apart = std::any_of(opens.begin(), opens.end(), [&](Subset u) { return has(u, i) != has(u, j); });
          if (!apart) return false;
        }
      return true;
    case Axiom::T1:
      for (int i = 0; i < n; ++i)
        if (!s.is_closed(Subset{1} << i)) return false;
      return true;
    case Axiom::T2:
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          bool separated = false;
          for (Subset u : opens)
            for (Subset v : opens)
              if (has(u, i) && has(v, j) && (u & v) == 0) separated = true;
          if (!separated) return false;
        }
      return true;
    case Axiom::Connected:
      return is_connected(s);
    case Axiom::LocallyConnected:
      // every open U ∋ x contains a connected open V ∋ x
      for (int x = 0; x < n; ++x)
        for (Subset u : opens) {
          if (!has(u, x)) continue;
          bool found = std::any_of(opens.begin(), opens.end(), [&](Subset v) {
            return has(v, x) && (v & ~u) == 0 && is_connected_subset(s, v);
          });
          if (!found) return false;
        }
      return true;
    case Axiom::NormalPairs:
      for (Subset f = 0; f <= s.points(); ++f) {
        if (!s.is_closed(f)) continue;
        for (Subset g = 0; g <= s.points(); ++g) {
          if ((f & g) != 0 || !s.is_closed(g)) continue;
          bool separated = false;
          for (Subset u : opens)
            for (Subset v : opens)
              if ((f & ~u) == 0 && (g & ~v) == 0 && (u & v) == 0) separated = true;
          if (!separated) return false;
        }
      }
      return true;
  }
  return false;
}

/// All topologies on n+1 points in which the first n points carry x's
/// topology and are dense, the whole space is connected, and `axiom` holds.
/// The extra point is always labelled n.
inline std::vector<FiniteSpace> search_one_point_connectifications(const FiniteSpace& x, Axiom axiom) {
  const int n = x.size();
  if (n + 1 > 5) throw Error(ErrorCode::SizeTooLarge, "search needs |X|+1 <= 5");
  std::vector<FiniteSpace> out;
  Subset base = full_set(n);
  for_each_topology(n + 1, [&](const FiniteSpace& y) {
    if (subspace(y, base) == x && is_dense(y, base) && is_connected(y) && check_axiom(y, axiom)) out.push_back(y);
  });
  return out;
}

// ---------------------------------------------------------------------------
// Literal format: comma-separated open sets, e.g. `{},{0},{0,1}`.

inline std::string format_subset(Subset s) {
  std::string out = "{";
  bool first = true;
  for (int i = 0; i < 32; ++i)
    if (has(s, i)) {
      if (!first) out += ",";
      out += std::to_string(i);
      first = false;
    }
  return out + "}";
}

inline std::string format_topology(const FiniteSpace& s) {
  std::string out;
  for (std::size_t i = 0; i < s.opens().size(); ++i) {
    if (i) out += ",";
    out += format_subset(s.opens()[i]);
  }
  return out;
}

inline FiniteSpace parse_topology(std::string_view text) {
  std::vector<Subset> family;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == ',')) ++i;
  };
  skip();
  while (i < text.size()) {
    if (text[i] != '{') throw Error(ErrorCode::ParseError, "expected '{' in topology literal");
    auto close = text.find('}', i);
    if (close == std::string_view::npos) throw Error(ErrorCode::ParseError, "unterminated open set");
    std::string_view body = text.substr(i + 1, close - i - 1);
    Subset s = 0;
    std::size_t j = 0;
    while (j < body.size()) {
      while (j < body.size() && (body[j] == ' ' || body[j] == ',')) ++j;
      if (j == body.size()) break;
      std::size_t k = j;
      while (k < body.size() && body[k] >= '0' && body[k] <= '9') ++k;
      if (k == j) throw Error(ErrorCode::ParseError, "bad point label in topology literal");
      int label = std::stoi(std::string(body.substr(j, k - j)));
      if (label >= kMaxPoints) throw Error(ErrorCode::SizeTooLarge, "point label " + std::to_string(label));
      s |= Subset{1} << label;
      j = k;
    }
    family.push_back(s);
    i = close + 1;
    skip();
  }
  if (family.empty()) throw Error(ErrorCode::ParseError, "empty topology literal");
  Subset all = 0;
  for (Subset s : family) all |= s;
  int n = std::bit_width(all);
  if (all != full_set(n)) throw Error(ErrorCode::InvalidTopology, "points must be labelled 0..n-1");
  return {n, family};
}

}  // namespace onepoint::finite
