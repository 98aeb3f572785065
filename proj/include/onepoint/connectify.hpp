#pragma once

// One-point connectification Y = X ∪ {p} of a space X with no compact
// component.
//
// Every component C gets an escape filter: a descending chain of nonempty
// sets, closed in C, marching off one non-compact end of C, with empty total
// intersection. The neighbourhoods of p are the X-open traces that contain a
// member of every component's chain. The proof obligations (density,
// connectedness, Hausdorff, normality) are discharged by witness builders
// whose outputs are checkable with exact set algebra alone.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "onepoint/interval_set.hpp"
#include "onepoint/random.hpp"
#include "onepoint/space.hpp"

namespace onepoint {

enum class EscapeDirection { TowardPosInf, TowardNegInf, TowardOpenRight, TowardOpenLeft };

inline std::string_view to_string(EscapeDirection d) {
  switch (d) {
    case EscapeDirection::TowardPosInf: return "pos-inf";
    case EscapeDirection::TowardNegInf: return "neg-inf";
    case EscapeDirection::TowardOpenRight: return "open-right";
    case EscapeDirection::TowardOpenLeft: return "open-left";
  }
  return "?";
}

/// Largest chain index accepted for the halving directions; element n has a
/// denominator of about 2^n bits.
inline constexpr std::uint64_t kMaxHalvingIndex = 1u << 16;

class EscapeFilter {
 public:
  EscapeFilter(Component component, EscapeDirection direction, Rational end, Rational anchor)
      : component_(std::move(component)), direction_(direction), end_(std::move(end)), anchor_(std::move(anchor)) {}

  const Component& component() const { return component_; }
  EscapeDirection direction() const { return direction_; }
  /// The excluded endpoint being approached (halving directions only).
  const Rational& end() const { return end_; }
  const Rational& anchor() const { return anchor_; }

  bool rightward() const {
    return direction_ == EscapeDirection::TowardPosInf || direction_ == EscapeDirection::TowardOpenRight;
  }
  bool halving() const {
    return direction_ == EscapeDirection::TowardOpenRight || direction_ == EscapeDirection::TowardOpenLeft;
  }

  /// The closed end of element n.
  Rational inner_endpoint(std::uint64_t n) const {
    switch (direction_) {
      case EscapeDirection::TowardPosInf: return anchor_ + Rational(BigInt(n), 1);
      case EscapeDirection::TowardNegInf: return anchor_ - Rational(BigInt(n), 1);
      case EscapeDirection::TowardOpenRight:
        check_halving_index(n);
        return end_ - (end_ - anchor_).halved(n);
      case EscapeDirection::TowardOpenLeft:
        check_halving_index(n);
        return end_ + (anchor_ - end_).halved(n);
    }
    return anchor_;
  }

  /// Element n of the chain: the part of C from inner_endpoint(n) to the
  /// escape end, inclusive of the inner endpoint.
  IntervalSet element(std::uint64_t n) const {
    Rational e = inner_endpoint(n);
    Interval ray = rightward() ? Interval::make(Endpoint::closed(e), Endpoint::pos_inf())
                               : Interval::make(Endpoint::neg_inf(), Endpoint::closed(e));
    return intersect(IntervalSet(ray), component_.as_set());
  }

  /// Least n whose inner endpoint lies strictly (or weakly) beyond t in the
  /// escape direction.
  std::uint64_t first_index_beyond(const Rational& t, bool strict) const {
    if (!halving()) {
      Rational d = rightward() ? t - anchor_ : anchor_ - t;
      BigInt n;
      if (strict)
        n = d.sign() < 0 ? BigInt(0) : d.floor() + 1;
      else
        n = d.sign() <= 0 ? BigInt(0) : d.ceil();
      if (n > std::numeric_limits<std::uint64_t>::max())
        throw Error(ErrorCode::TailIndexTooLarge, "index for " + t.str() + " exceeds 2^64-1");
      return static_cast<std::uint64_t>(n);
    }
    // e_n = end ∓ width/2^n; beyond t  <=>  width/2^n < gap (or <=)
    Rational width = rightward() ? end_ - anchor_ : anchor_ - end_;
    Rational gap = rightward() ? end_ - t : t - end_;
    if (gap.sign() <= 0) throw Error(ErrorCode::PointOutsideComponent, t.str() + " lies at or past the escape end");
    Rational ratio = width / gap;
    Rational pow(1);
    std::uint64_t n = 0;
    while (strict ? !(ratio < pow) : pow < ratio) {
      pow = pow * Rational(2);
      if (++n > kMaxHalvingIndex) throw Error(ErrorCode::TailIndexTooLarge, "index for " + t.str());
    }
    return n;
  }

  /// Least n with z ∉ element(n).
  std::uint64_t avoid_index(const Rational& z) const {
    if (!component_.piece.contains(z))
      throw Error(ErrorCode::PointOutsideComponent, z.str() + " is not in " + component_.piece.str());
    return first_index_beyond(z, true);
  }

  /// Least n with element(n) ⊆ trace, or nullopt when trace contains no
  /// element at all (it does not reach the escape end inside C).
  std::optional<std::uint64_t> least_tail_inside(const IntervalSet& trace) const {
    IntervalSet local = intersect(trace, component_.as_set());
    if (local.empty()) return std::nullopt;
    const Interval& reaching = rightward() ? local.pieces().back() : local.pieces().front();
    if (rightward() ? !(reaching.hi_cut() == component_.piece.hi_cut())
                    : !(reaching.lo_cut() == component_.piece.lo_cut()))
      return std::nullopt;
    Endpoint inner = rightward() ? reaching.lo() : reaching.hi();
    if (!inner.finite()) return 0;
    return first_index_beyond(inner.value, !inner.included);
  }

 private:
  static void check_halving_index(std::uint64_t n) {
    if (n > kMaxHalvingIndex)
      throw Error(ErrorCode::TailIndexTooLarge, "halving index " + std::to_string(n) + " exceeds limit");
  }

  Component component_;
  EscapeDirection direction_;
  Rational end_;
  Rational anchor_;
};

/// Deterministic escape choice: the right end when it is non-compact, else
/// the left end.
inline EscapeFilter choose_escape(const Component& c) {
  if (is_compact(c)) throw Error(ErrorCode::CompactComponent, c.piece.str() + " is compact");
  Endpoint lo = c.piece.lo(), hi = c.piece.hi();
  Rational anchor;
  if (lo.finite() && hi.finite())
    anchor = Rational::midpoint(lo.value, hi.value);
  else if (lo.finite())
    anchor = lo.value + 1;
  else if (hi.finite())
    anchor = hi.value - 1;
  else
    anchor = 0;
  if (!hi.finite()) return {c, EscapeDirection::TowardPosInf, Rational(0), anchor};
  if (!hi.included) return {c, EscapeDirection::TowardOpenRight, hi.value, anchor};
  if (!lo.finite()) return {c, EscapeDirection::TowardNegInf, Rational(0), anchor};
  return {c, EscapeDirection::TowardOpenLeft, lo.value, anchor};
}

/// Y = X ∪ {p}, one escape filter per component.
class Extension {
 public:
  explicit Extension(Space base) : base_(std::move(base)) {
    for (const auto& c : base_.components()) filters_.push_back(choose_escape(c));
  }

  const Space& base() const { return base_; }
  const IntervalSet& x() const { return base_.ambient(); }
  const std::vector<EscapeFilter>& filters() const { return filters_; }
  const EscapeFilter& filter(std::size_t i) const { return filters_.at(i); }
  std::size_t component_count() const { return filters_.size(); }

 private:
  Space base_;
  std::vector<EscapeFilter> filters_;
};

struct Refusal {
  Component witness;
  std::string reason = "clopen-obstruction";
};

using Verdict = std::variant<Extension, Refusal>;

inline Verdict check_connectifiable(const Space& x) {
  if (auto c = has_compact_component(x)) return Refusal{*c};
  return Extension(x);
}

/// Open set of Y. TypeI sets are X-open traces; TypeII sets also contain p
/// and carry, per component, the index of a filter element they contain.
struct ExtOpenSet {
  enum class Kind { TypeI, TypeII };

  Kind kind = Kind::TypeI;
  IntervalSet trace;
  std::vector<std::uint64_t> tails;  // TypeII only, indexed by component

  static ExtOpenSet type1(IntervalSet trace) { return {Kind::TypeI, std::move(trace), {}}; }
  static ExtOpenSet type2(IntervalSet trace, std::vector<std::uint64_t> tails) {
    return {Kind::TypeII, std::move(trace), std::move(tails)};
  }

  bool has_p() const { return kind == Kind::TypeII; }

  friend bool operator==(const ExtOpenSet&, const ExtOpenSet&) = default;
};

/// A point of Y: a rational of X, or the extra point p.
struct ExtPoint {
  std::optional<Rational> coord;

  static ExtPoint p() { return {}; }
  static ExtPoint at(Rational q) { return {std::move(q)}; }
  bool is_p() const { return !coord.has_value(); }

  friend bool operator==(const ExtPoint&, const ExtPoint&) = default;

  std::string str() const { return is_p() ? "p" : coord->str(); }
};

inline bool contains(const ExtOpenSet& u, const ExtPoint& y) {
  return y.is_p() ? u.has_p() : u.trace.contains(*y.coord);
}

enum class OpenFailure { None, TraceOutsideSpace, TraceNotOpen, MissingTail };

inline std::string_view to_string(OpenFailure f) {
  switch (f) {
    case OpenFailure::None: return "None";
    case OpenFailure::TraceOutsideSpace: return "TraceOutsideSpace";
    case OpenFailure::TraceNotOpen: return "TraceNotOpen";
    case OpenFailure::MissingTail: return "MissingTail";
  }
  return "?";
}

struct OpenCheck {
  OpenFailure failure = OpenFailure::None;
  std::size_t component = 0;  // for MissingTail

  explicit operator bool() const { return failure == OpenFailure::None; }
};

/// Decides membership of U in the topology of Y.
inline OpenCheck is_open_in_extension(const Extension& y, const ExtOpenSet& u) {
  if (!is_subset(u.trace, y.x())) return {OpenFailure::TraceOutsideSpace};
  if (!is_open_in(u.trace, y.x())) return {OpenFailure::TraceNotOpen};
  if (u.kind == ExtOpenSet::Kind::TypeI) return {};
  for (std::size_t i = 0; i < y.component_count(); ++i) {
    if (i >= u.tails.size()) return {OpenFailure::MissingTail, i};
    const auto& f = y.filter(i);
    if (f.halving() && u.tails[i] > kMaxHalvingIndex) return {OpenFailure::MissingTail, i};
    if (!is_subset(f.element(u.tails[i]), u.trace)) return {OpenFailure::MissingTail, i};
  }
  if (u.tails.size() != y.component_count()) return {OpenFailure::MissingTail, y.component_count()};
  return {};
}

/// TypeII set with the given trace and the least admissible tails, if the
/// trace contains a filter element in every component.
inline std::optional<ExtOpenSet> neighbourhood_of_p(const Extension& y, const IntervalSet& trace) {
  std::vector<std::uint64_t> tails;
  for (const auto& f : y.filters()) {
    auto n = f.least_tail_inside(trace);
    if (!n) return std::nullopt;
    tails.push_back(*n);
  }
  return ExtOpenSet::type2(trace, std::move(tails));
}

inline ExtOpenSet whole_extension(const Extension& y) {
  return ExtOpenSet::type2(y.x(), std::vector<std::uint64_t>(y.component_count(), 0));
}

inline ExtOpenSet intersect_open(const ExtOpenSet& u, const ExtOpenSet& v) {
  IntervalSet trace = intersect(u.trace, v.trace);
  if (!u.has_p() || !v.has_p()) return ExtOpenSet::type1(std::move(trace));
  std::vector<std::uint64_t> tails(std::max(u.tails.size(), v.tails.size()), 0);
  for (std::size_t i = 0; i < tails.size(); ++i) {
    std::uint64_t a = i < u.tails.size() ? u.tails[i] : 0;
    std::uint64_t b = i < v.tails.size() ? v.tails[i] : 0;
    tails[i] = std::max(a, b);
  }
  return ExtOpenSet::type2(std::move(trace), std::move(tails));
}

inline ExtOpenSet union_open(const std::vector<ExtOpenSet>& sets) {
  IntervalSet trace;
  std::optional<std::vector<std::uint64_t>> tails;
  for (const auto& s : sets) {
    trace = unite(trace, s.trace);
    if (!s.has_p()) continue;
    if (!tails) {
      tails = s.tails;
      continue;
    }
    for (std::size_t i = 0; i < tails->size() && i < s.tails.size(); ++i) (*tails)[i] = std::min((*tails)[i], s.tails[i]);
  }
  if (!tails) return ExtOpenSet::type1(std::move(trace));
  return ExtOpenSet::type2(std::move(trace), std::move(*tails));
}

/// Complement in Y, with the least admissible tails when it contains p. A
/// complement that holds p without being a neighbourhood of p comes back
/// with no tails, so it fails is_open_in_extension.
inline ExtOpenSet complement_candidate(const Extension& y, const ExtOpenSet& u) {
  IntervalSet rest = difference(y.x(), u.trace);
  if (u.has_p()) return ExtOpenSet::type1(std::move(rest));
  if (auto nb = neighbourhood_of_p(y, rest)) return *nb;
  // Not a neighbourhood: keep the trace, tails left empty so the check fails.
  return ExtOpenSet::type2(std::move(rest), {});
}

// ---------------------------------------------------------------------------
// Certificates

struct Step {
  std::string claim;
  bool holds = false;
};

struct Certificate {
  std::string kind;
  std::vector<Step> steps;

  bool valid() const {
    return std::all_of(steps.begin(), steps.end(), [](const Step& s) { return s.holds; });
  }
  void add(std::string claim, bool holds) { steps.push_back({std::move(claim), holds}); }
};

/// Samples neighbourhoods of p with random tails (≤ max_tail) and random
/// open traces; each contains its tail elements, so it meets X.
inline ExtOpenSet random_neighbourhood_of_p(Rng& rng, const Extension& y, std::uint64_t max_tail = 32) {
  std::vector<std::uint64_t> tails;
  std::vector<Interval> rays;
  for (const auto& f : y.filters()) {
    std::uint64_t n = rng.below(max_tail + 1);
    tails.push_back(n);
    // an open ray starting a little before element n's inner end
    Rational e = f.inner_endpoint(n);
    Rational slack = f.halving() ? (f.rightward() ? f.end() - e : e - f.end()) * Rational(rng.between(1, 8))
                                 : Rational(rng.between(1, 8)) / Rational(4);
    rays.push_back(f.rightward() ? Interval::make(Endpoint::open(e - slack), Endpoint::pos_inf())
                                 : Interval::make(Endpoint::neg_inf(), Endpoint::open(e + slack)));
  }
  IntervalSet trace = unite(intersect(IntervalSet::normalize(std::move(rays)), y.x()), random_open_in(rng, y.x()));
  return ExtOpenSet::type2(std::move(trace), std::move(tails));
}

/// A random open set of Y: TypeI, TypeII, or a combination of both.
inline ExtOpenSet random_open_in_extension(Rng& rng, const Extension& y) {
  switch (rng.below(4)) {
    case 0: return ExtOpenSet::type1(random_open_in(rng, y.x()));
    case 1: return random_neighbourhood_of_p(rng, y);
    case 2: return intersect_open(random_neighbourhood_of_p(rng, y), random_open_in_extension(rng, y));
    default: return union_open({ExtOpenSet::type1(random_open_in(rng, y.x())), random_open_in_extension(rng, y)});
  }
}

/// Every sampled neighbourhood of p meets X, and its tail elements are
/// nonempty. Throws DensityFailure when a sample violates this.
inline Certificate density_check(const Extension& y, std::size_t samples, std::uint64_t seed = 1) {
  Rng rng(seed);
  Certificate cert{"density", {}};
  std::size_t nonempty_elements = 0, meeting = 0, valid = 0;
  for (std::size_t s = 0; s < samples; ++s) {
    ExtOpenSet nb = random_neighbourhood_of_p(rng, y);
    if (is_open_in_extension(y, nb)) ++valid;
    bool elements_ok = true;
    for (std::size_t i = 0; i < y.component_count(); ++i) {
      IntervalSet el = y.filter(i).element(nb.tails[i]);
      if (el.empty() || !is_subset(el, nb.trace)) elements_ok = false;
    }
    if (elements_ok) ++nonempty_elements;
    if (!intersect(nb.trace, y.x()).empty()) ++meeting;
  }
  cert.add("sampled " + std::to_string(samples) + " neighbourhoods of p; " + std::to_string(valid) + " open in Y",
           valid == samples);
  cert.add("every sampled tail element is nonempty and inside its neighbourhood", nonempty_elements == samples);
  cert.add("every sampled neighbourhood of p meets X", meeting == samples);
  // Nonempty TypeI sets are nonempty subsets of X.
  std::size_t type1_ok = 0, type1_total = 0;
  for (std::size_t s = 0; s < samples; ++s) {
    IntervalSet v = random_open_in(rng, y.x());
    if (v.empty()) continue;
    ++type1_total;
    if (!intersect(v, y.x()).empty()) ++type1_ok;
  }
  cert.add("every sampled nonempty TypeI set meets X (" + std::to_string(type1_total) + " sets)",
           type1_ok == type1_total);
  if (!cert.valid()) throw Error(ErrorCode::DensityFailure, "a neighbourhood of p misses X");
  return cert;
}

/// X carries the subspace topology of Y: traces of sampled Y-opens are open
/// in X, and every sampled X-open is a TypeI open of Y.
inline Certificate subspace_fidelity(const Extension& y, std::size_t samples, std::uint64_t seed = 2) {
  Rng rng(seed);
  Certificate cert{"subspace-fidelity", {}};
  std::size_t traces_ok = 0, lifts_ok = 0;
  for (std::size_t s = 0; s < samples; ++s) {
    ExtOpenSet u = random_open_in_extension(rng, y);
    if (is_open_in_extension(y, u) && is_open_in(u.trace, y.x())) ++traces_ok;
  }
  for (std::size_t s = 0; s < samples; ++s) {
    IntervalSet v = random_open_in(rng, y.x());
    if (is_open_in(v, y.x()) && is_open_in_extension(y, ExtOpenSet::type1(v))) ++lifts_ok;
  }
  cert.add("traces of " + std::to_string(samples) + " sampled opens of Y are open in X", traces_ok == samples);
  cert.add("TypeI lifts of " + std::to_string(samples) + " sampled opens of X are open in Y", lifts_ok == samples);
  if (!cert.valid()) throw Error(ErrorCode::FidelityFailure, "X is not a subspace of Y");
  return cert;
}

/// The connectedness argument, one entry per component: a clopen S ∋ p
/// contains a nonempty tail element inside C, C is an interval and clopen in
/// X, so S ∩ C is a nonempty clopen subset of a connected set, i.e. C.
struct ConnectednessCertificate {
  struct Entry {
    std::size_t component = 0;
    Interval piece;
    std::uint64_t tail = 0;
    IntervalSet tail_element;
  };
  std::vector<Entry> entries;
  IntervalSet covered;  // union of the component pieces

  /// Re-derives every step from exact set algebra.
  Certificate replay(const Extension& y) const {
    Certificate cert{"connectedness", {}};
    for (const auto& e : entries) {
      std::string tag = "C#" + std::to_string(e.component);
      IntervalSet c(e.piece);
      bool is_component = e.component < y.component_count() && y.filter(e.component).component().piece == e.piece;
      cert.add(tag + " = " + e.piece.str() + " is a component of X", is_component);
      cert.add(tag + " is a single interval (connected)", Space(c).component_count() == 1);
      cert.add(tag + " is open and closed in X", is_open_in(c, y.x()) && is_closed_in(c, y.x()));
      bool tail_ok = is_component && y.filter(e.component).element(e.tail) == e.tail_element;
      cert.add(tag + " tail element " + std::to_string(e.tail) + " = " + e.tail_element.str() + " is nonempty and inside " + tag,
               tail_ok && !e.tail_element.empty() && is_subset(e.tail_element, c));
      cert.add(tag + " clopen S containing p meets " + tag + ", hence contains " + tag, tail_ok && !e.tail_element.empty());
    }
    cert.add("components cover X: union = " + covered.str(), covered == y.x() && entries.size() == y.component_count());
    cert.add("therefore every clopen S containing p equals Y", cert.valid());
    return cert;
  }

  /// Runs the argument on a concrete S: if S is clopen and contains p, every
  /// deduction is checked on S and S must come out as Y.
  bool check_against(const Extension& y, const ExtOpenSet& s) const {
    if (!s.has_p() || !is_open_in_extension(y, s)) return true;
    ExtOpenSet rest = complement_candidate(y, s);
    if (!is_open_in_extension(y, rest)) return true;  // not clopen
    for (const auto& e : entries) {
      IntervalSet c(e.piece);
      IntervalSet local = intersect(s.trace, c);
      IntervalSet el = y.filter(e.component).element(s.tails.at(e.component));
      if (el.empty() || !is_subset(el, local)) return false;
      bool clopen_local = is_open_in(local, c) && is_closed_in(local, c);
      if (!clopen_local || !(local == c)) return false;
    }
    return s.trace == y.x();
  }
};

inline ConnectednessCertificate connectedness_certificate(const Extension& y) {
  ConnectednessCertificate cert;
  for (std::size_t i = 0; i < y.component_count(); ++i) {
    const auto& f = y.filter(i);
    if (is_compact(f.component())) throw Error(ErrorCode::InvalidExtension, "compact component in extension");
    cert.entries.push_back({i, f.component().piece, 0, f.element(0)});
    cert.covered = unite(cert.covered, f.component().as_set());
  }
  return cert;
}

struct NotClopenEvidence {
  bool set_itself_not_open = false;  // otherwise the complement fails
  OpenFailure failure = OpenFailure::None;
  std::size_t component = 0;
  std::optional<Rational> boundary_point;
};

struct IsTrivial {};
/// A proper nonempty clopen set; it would disconnect Y.
struct ProperClopen {};

using ClopenVerdict = std::variant<NotClopenEvidence, IsTrivial, ProperClopen>;

namespace detail {
inline std::optional<Rational> first_boundary_point(const IntervalSet& s, const IntervalSet& x) {
  IntervalSet bad = difference(s, interior_in(s, x));
  if (bad.empty()) return std::nullopt;
  return bad.pieces().front().lo().value;
}
}  // namespace detail

inline ClopenVerdict clopen_falsifier(const Extension& y, const ExtOpenSet& s) {
  if ((s.kind == ExtOpenSet::Kind::TypeI && s.trace.empty()) || (s.has_p() && s.trace == y.x())) return IsTrivial{};
  if (auto check = is_open_in_extension(y, s); !check) {
    NotClopenEvidence ev{true, check.failure, check.component, {}};
    if (check.failure == OpenFailure::TraceNotOpen) ev.boundary_point = detail::first_boundary_point(s.trace, y.x());
    return ev;
  }
  ExtOpenSet rest = complement_candidate(y, s);
  if (auto check = is_open_in_extension(y, rest); !check) {
    NotClopenEvidence ev{false, check.failure, check.component, {}};
    if (check.failure == OpenFailure::TraceNotOpen) {
      ev.boundary_point = detail::first_boundary_point(rest.trace, y.x());
    } else if (check.failure == OpenFailure::MissingTail) {
      // locate the first component whose escape end the complement misses
      for (std::size_t i = 0; i < y.component_count(); ++i)
        if (!y.filter(i).least_tail_inside(rest.trace)) {
          ev.component = i;
          break;
        }
    }
    return ev;
  }
  return ProperClopen{};
}

// ---------------------------------------------------------------------------
// Separation witnesses

struct SeparationWitness {
  ExtOpenSet u;
  ExtOpenSet v;
};

/// Disjoint opens U ∋ y and V ∋ z.
inline SeparationWitness hausdorff_witness(const Extension& y, const ExtPoint& a, const ExtPoint& b) {
  if (a == b) throw Error(ErrorCode::EqualPoints, "points must differ: " + a.str());
  for (const auto* pt : {&a, &b})
    if (!pt->is_p() && !y.x().contains(*pt->coord))
      throw Error(ErrorCode::PointOutsideComponent, pt->coord->str() + " is not a point of Y");

  if (!a.is_p() && !b.is_p()) {
    Rational mid = Rational::midpoint(*a.coord, *b.coord);
    IntervalSet left = intersect(IntervalSet(Interval::make(Endpoint::neg_inf(), Endpoint::open(mid))), y.x());
    IntervalSet right = intersect(IntervalSet(Interval::make(Endpoint::open(mid), Endpoint::pos_inf())), y.x());
    if (*a.coord < *b.coord) return {ExtOpenSet::type1(left), ExtOpenSet::type1(right)};
    return {ExtOpenSet::type1(right), ExtOpenSet::type1(left)};
  }
  if (!a.is_p()) {
    auto swapped = hausdorff_witness(y, b, a);
    return {swapped.v, swapped.u};
  }

  // a = p, b = z ∈ C: the element avoiding z bounds a window around z; U is
  // (Y ∖ C) together with the open ray of C past that element's inner end.
  const Rational& z = *b.coord;
  Component c = y.base().component_of(z);
  const EscapeFilter& f = y.filter(c.index);
  std::uint64_t n = f.avoid_index(z);
  Rational e = f.inner_endpoint(n);
  Rational radius = f.rightward() ? e - z : z - e;
  IntervalSet window = intersect(IntervalSet(Interval::open(z - radius, z + radius)), c.as_set());
  Interval ray = f.rightward() ? Interval::make(Endpoint::open(e), Endpoint::pos_inf())
                               : Interval::make(Endpoint::neg_inf(), Endpoint::open(e));
  IntervalSet trace = unite(difference(y.x(), c.as_set()), intersect(IntervalSet(ray), c.as_set()));
  std::vector<std::uint64_t> tails(y.component_count(), 0);
  tails[c.index] = *f.least_tail_inside(trace);
  return {ExtOpenSet::type2(std::move(trace), std::move(tails)), ExtOpenSet::type1(std::move(window))};
}

/// Closed set of Y, identified by whether it holds p and its trace on X.
struct ExtClosedSet {
  bool has_p = false;
  IntervalSet trace;

  friend bool operator==(const ExtClosedSet&, const ExtClosedSet&) = default;
};

inline ExtOpenSet complement_of_closed(const Extension& y, const ExtClosedSet& f) {
  IntervalSet rest = difference(y.x(), f.trace);
  if (f.has_p) return ExtOpenSet::type1(std::move(rest));
  if (auto nb = neighbourhood_of_p(y, rest)) return *nb;
  return ExtOpenSet::type2(std::move(rest), {});
}

inline bool is_closed_in_extension(const Extension& y, const ExtClosedSet& f) {
  return is_subset(f.trace, y.x()) && static_cast<bool>(is_open_in_extension(y, complement_of_closed(y, f)));
}

struct NormalityWitness {
  struct Part {
    std::size_t component = 0;
    std::uint64_t tail = 0;
    IntervalSet u;  // U_C ∩ C
    IntervalSet v;  // V_C ∩ C
  };

  ExtOpenSet u;  // contains F
  ExtOpenSet v;  // contains G
  bool p_case = false;
  bool swapped = false;     // p was in G; parts are built for (G, F)
  std::vector<Part> parts;  // p case only
};

/// Disjoint opens U ⊇ F and V ⊇ G.
inline NormalityWitness normality_witness(const Extension& y, const ExtClosedSet& f, const ExtClosedSet& g) {
  if (f.has_p && g.has_p) throw Error(ErrorCode::PInBoth, "p lies in both closed sets");
  if (!is_closed_in_extension(y, f)) throw Error(ErrorCode::NotClosedInY, "F = " + f.trace.str());
  if (!is_closed_in_extension(y, g)) throw Error(ErrorCode::NotClosedInY, "G = " + g.trace.str());
  if (!disjoint(f.trace, g.trace)) throw Error(ErrorCode::NotDisjoint, f.trace.str() + " meets " + g.trace.str());

  if (!f.has_p && !g.has_p) {
    auto [u, v] = separate_disjoint_closed(y.base(), f.trace, g.trace);
    return {ExtOpenSet::type1(std::move(u)), ExtOpenSet::type1(std::move(v)), false, false, {}};
  }
  if (g.has_p) {
    NormalityWitness w = normality_witness(y, g, f);
    std::swap(w.u, w.v);
    w.swapped = true;
    return w;
  }

  // p ∈ F: Y ∖ G is a neighbourhood of p, so it holds an element A_C of
  // every component's filter; separate (F ∩ X) ∪ A_C from G inside each C.
  NormalityWitness w;
  w.p_case = true;
  IntervalSet outside_g = difference(y.x(), g.trace);
  IntervalSet u_trace, v_trace;
  std::vector<std::uint64_t> tails;
  for (const auto& filter : y.filters()) {
    const Component& c = filter.component();
    std::uint64_t n = *filter.least_tail_inside(outside_g);
    IntervalSet cs = c.as_set();
    IntervalSet fc = intersect(unite(f.trace, filter.element(n)), cs);
    IntervalSet gc = intersect(g.trace, cs);
    auto [uc, vc] = separate_disjoint_closed(Space(cs), fc, gc);
    u_trace = unite(u_trace, uc);
    v_trace = unite(v_trace, vc);
    tails.push_back(n);
    w.parts.push_back({c.index, n, std::move(uc), std::move(vc)});
  }
  w.u = ExtOpenSet::type2(std::move(u_trace), std::move(tails));
  w.v = ExtOpenSet::type1(std::move(v_trace));
  return w;
}

// ---------------------------------------------------------------------------
// Independent verification of witnesses: only the topology membership test
// and exact set algebra are consulted.

inline bool disjoint_in_extension(const ExtOpenSet& u, const ExtOpenSet& v) {
  return !(u.has_p() && v.has_p()) && disjoint(u.trace, v.trace);
}

inline bool verify_hausdorff(const Extension& y, const ExtPoint& a, const ExtPoint& b, const SeparationWitness& w) {
  return is_open_in_extension(y, w.u) && is_open_in_extension(y, w.v) && contains(w.u, a) && contains(w.v, b) &&
         disjoint_in_extension(w.u, w.v);
}

inline bool verify_normality(const Extension& y, const ExtClosedSet& f, const ExtClosedSet& g,
                             const NormalityWitness& w) {
  auto covers = [](const ExtOpenSet& u, const ExtClosedSet& k) {
    return (!k.has_p || u.has_p()) && is_subset(k.trace, u.trace);
  };
  return is_open_in_extension(y, w.u) && is_open_in_extension(y, w.v) && covers(w.u, f) && covers(w.v, g) &&
         disjoint_in_extension(w.u, w.v);
}

/// The p-side set is {p} ∪ ⋃(C ∩ U_C) and the other side is ⋃(C ∩ V_C).
inline bool matches_displayed_shape(const Extension& y, const NormalityWitness& w) {
  if (!w.p_case) return true;
  const ExtOpenSet& p_side = w.swapped ? w.v : w.u;
  const ExtOpenSet& other = w.swapped ? w.u : w.v;
  if (!p_side.has_p() || other.has_p() || w.parts.size() != y.component_count()) return false;
  IntervalSet us, vs;
  for (const auto& part : w.parts) {
    IntervalSet c = y.filter(part.component).component().as_set();
    if (!is_subset(part.u, c) || !is_subset(part.v, c)) return false;
    if (!is_subset(y.filter(part.component).element(part.tail), part.u)) return false;
    us = unite(us, part.u);
    vs = unite(vs, part.v);
  }
  return p_side.trace == us && other.trace == vs && p_side.tails.size() == w.parts.size();
}

}  // namespace onepoint
