// Command-line front end: parses spaces and points, calls the library, and
// prints text or record output.
//
// Exit codes: 0 success, 1 internal invariant violation, 2 parse error,
// 3 mathematical refusal.

#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

#include "onepoint/onepoint.hpp"

namespace {

using namespace onepoint;

constexpr int kExitOk = 0;
constexpr int kExitBug = 1;
constexpr int kExitParse = 2;
constexpr int kExitRefused = 3;

struct Options {
  std::string format = "text";
  bool records() const { return format == "records"; }
};

void print(const std::vector<std::string>& lines) {
  for (const auto& l : lines) std::cout << l << '\n';
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

ExtPoint parse_point(const std::string& text) {
  if (text == "p") return ExtPoint::p();
  return ExtPoint::at(Rational::parse(text));
}

/// `p`, `p+SET`, or `SET`.
ExtClosedSet parse_closed(const std::string& text) {
  if (text == "p") return {true, {}};
  if (text.rfind("p+", 0) == 0) return {true, parse_set(text.substr(2))};
  return {false, parse_set(text)};
}

int run_components(const Options& opt, const std::string& set) {
  Space x = Space::parse(set);
  auto comps = x.components();
  if (opt.records()) {
    std::cout << "components=" << comps.size() << '\n';
    for (const auto& c : comps) std::cout << "component " << records::component_tag(c.index) << " piece=" << c.piece << '\n';
  } else {
    std::cout << x.ambient() << " has " << comps.size() << " component(s)\n";
    for (const auto& c : comps) std::cout << "  " << records::component_tag(c.index) << "  " << c.piece << '\n';
  }
  return kExitOk;
}

int run_check(const Options& opt, const std::string& set) {
  Space x = Space::parse(set);
  auto cert = local_connectedness_certificate(x);
  bool windows_ok = true;
  for (const auto& w : cert.windows)
    windows_ok = windows_ok && intersect(IntervalSet(w.window), x.ambient()) == x.component(w.component).as_set();
  if (!windows_ok) {
    std::cerr << "internal error: local connectedness window does not isolate its component\n";
    return kExitBug;
  }
  auto compact_component = has_compact_component(x);
  if (opt.records()) {
    std::cout << "space=" << x.ambient() << " compact=" << yes_no(is_space_compact(x))
              << " locally-connected=yes components=" << x.component_count()
              << " compact-component=" << (compact_component ? compact_component->piece.str() : "none") << '\n';
    for (const auto& w : cert.windows) {
      auto c = x.component(w.component);
      std::cout << "component " << records::component_tag(c.index) << " piece=" << c.piece
                << " compact=" << yes_no(is_compact(c)) << " window=" << w.window << '\n';
    }
  } else {
    std::cout << "space " << x.ambient() << '\n'
              << "  compact: " << yes_no(is_space_compact(x)) << '\n'
              << "  locally connected: yes (every component is isolated by an open window)\n";
    for (const auto& w : cert.windows) {
      auto c = x.component(w.component);
      std::cout << "  " << records::component_tag(c.index) << " " << c.piece << "  compact=" << yes_no(is_compact(c))
                << "  window " << w.window << '\n';
    }
  }
  return kExitOk;
}

int run_connectify(const Options& opt, const std::string& set) {
  Space x = Space::parse(set);
  Verdict v = check_connectifiable(x);
  if (const auto* r = std::get_if<Refusal>(&v)) {
    if (opt.records())
      print(records::verdict(v));
    else
      std::cout << "Refused component=" << r->witness.piece << " (compact, hence clopen in any one-point Hausdorff extension)\n";
    return kExitRefused;
  }
  const auto& y = std::get<Extension>(v);
  Certificate cert = connectedness_certificate(y).replay(y);
  if (opt.records()) {
    print(records::verdict(v));
    print(records::certificate(cert));
  } else {
    std::cout << "Connectifiable: Y = " << y.x() << " U {p}, " << y.component_count() << " escape filter(s)\n";
    for (const auto& f : y.filters())
      std::cout << "  " << records::component_tag(f.component().index) << " " << f.component().piece << "  escapes "
                << to_string(f.direction()) << ", element 0 = " << f.element(0) << '\n';
    std::cout << "connectedness certificate: " << (cert.valid() ? "valid" : "INVALID") << " (" << cert.steps.size()
              << " steps)\n";
  }
  return cert.valid() ? kExitOk : kExitBug;
}

int run_hausdorff(const Options& opt, const std::string& set, const std::string& a_text, const std::string& b_text) {
  Space x = Space::parse(set);
  ExtPoint a = parse_point(a_text), b = parse_point(b_text);
  Verdict v = check_connectifiable(x);
  if (std::holds_alternative<Refusal>(v)) {
    print(records::verdict(v));
    return kExitRefused;
  }
  const auto& y = std::get<Extension>(v);
  auto w = hausdorff_witness(y, a, b);
  bool ok = verify_hausdorff(y, a, b, w);
  if (opt.records()) {
    print(records::separation("hausdorff", w.u, w.v));
    std::cout << "verified=" << yes_no(ok) << '\n';
  } else {
    std::cout << "U (contains " << a.str() << "): " << records::open_set(w.u) << '\n'
              << "V (contains " << b.str() << "): " << records::open_set(w.v) << '\n'
              << "independent check: " << (ok ? "passed" : "FAILED") << '\n';
  }
  return ok ? kExitOk : kExitBug;
}

int run_normal(const Options& opt, const std::string& set, const std::string& f_text, const std::string& g_text) {
  Space x = Space::parse(set);
  ExtClosedSet f = parse_closed(f_text), g = parse_closed(g_text);
  Verdict v = check_connectifiable(x);
  if (std::holds_alternative<Refusal>(v)) {
    print(records::verdict(v));
    return kExitRefused;
  }
  const auto& y = std::get<Extension>(v);
  auto w = normality_witness(y, f, g);
  bool ok = verify_normality(y, f, g, w) && matches_displayed_shape(y, w);
  if (opt.records()) {
    print(records::normality(w));
    std::cout << "verified=" << yes_no(ok) << '\n';
  } else {
    std::cout << "F: " << records::closed_set(f) << "\nG: " << records::closed_set(g) << '\n';
    for (const auto& part : w.parts)
      std::cout << "  " << records::component_tag(part.component) << " tail " << part.tail << ": U_C=" << part.u
                << "  V_C=" << part.v << '\n';
    std::cout << "U: " << records::open_set(w.u) << "\nV: " << records::open_set(w.v) << '\n'
              << "independent check: " << (ok ? "passed" : "FAILED") << '\n';
  }
  return ok ? kExitOk : kExitBug;
}

int run_compactify(const Options& opt, const std::string& set) {
  Space x = Space::parse(set);
  CompactVerdict v = compactify(x);
  if (std::holds_alternative<CompactRefusal>(v)) {
    if (opt.records())
      std::cout << "verdict=Refused space=" << x.ambient() << " reason=space is compact\n";
    else
      std::cout << "Refused: " << x.ambient() << " is already compact\n";
    return kExitRefused;
  }
  if (opt.records())
    std::cout << "verdict=CompactExtension space=" << x.ambient() << '\n';
  else
    std::cout << "Compactifiable: alpha X = " << x.ambient() << " U {inf}\n";
  return kExitOk;
}

int run_finite_enumerate(const Options& opt, int n, bool list) {
  auto counts = finite::enumerate_topologies(n);
  if (!counts.agree()) {
    std::cerr << "internal error: enumerators disagree at n=" << n << '\n';
    return kExitBug;
  }
  std::cout << "count=" << counts.via_preorders << '\n';
  if (opt.records() || counts.via_families)
    std::cout << "preorders=" << counts.via_preorders
              << " families=" << (counts.via_families ? std::to_string(*counts.via_families) : "skipped") << '\n';
  if (list) finite::for_each_topology(n, [](const finite::FiniteSpace& t) { std::cout << finite::format_topology(t) << '\n'; });
  return kExitOk;
}

int run_finite_search(const Options&, const std::string& literal, const std::string& axiom_text) {
  finite::FiniteSpace x = finite::parse_topology(literal);
  finite::Axiom axiom = finite::parse_axiom(axiom_text);
  auto found = finite::search_one_point_connectifications(x, axiom);
  std::cout << "results=" << found.size() << '\n';
  for (const auto& t : found) std::cout << finite::format_topology(t) << '\n';
  return kExitOk;
}

int run_selftest(const Options& opt) {
  bool all = true;
  for (auto criterion : selftest::all_criteria()) {
    auto r = criterion();
    all = all && r.passed;
    if (opt.records()) {
      std::cout << "criterion " << r.id << " " << r.name << " " << (r.passed ? "pass" : "fail") << '\n';
      for (const auto& l : r.lines) std::cout << "  " << l << '\n';
    } else {
      std::cout << (r.passed ? "[PASS] " : "[FAIL] ") << r.id << " " << r.name << '\n';
      for (const auto& l : r.lines) std::cout << "       " << l << '\n';
    }
  }
  return all ? kExitOk : kExitBug;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"One-point connectification and compactification engine"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"text", "records"}));

  std::string set, a, b, literal, axiom;
  int n = 0;
  bool list = false;
  std::function<int()> action;

  auto* components = app.add_subcommand("components", "List the components of a space");
  components->add_option("SET", set)->required();
  components->callback([&] { action = [&] { return run_components(opt, set); }; });

  auto* check = app.add_subcommand("check", "Compactness and local connectedness report");
  check->add_option("SET", set)->required();
  check->callback([&] { action = [&] { return run_check(opt, set); }; });

  auto* connectify = app.add_subcommand("connectify", "Decide and build a one-point connectification");
  connectify->add_option("SET", set)->required();
  connectify->callback([&] { action = [&] { return run_connectify(opt, set); }; });

  auto* witness = app.add_subcommand("witness", "Separation witnesses in the connectification");
  witness->require_subcommand(1);
  auto* hausdorff = witness->add_subcommand("hausdorff", "Separate two points (use p for the extra point)");
  hausdorff->add_option("SET", set)->required();
  hausdorff->add_option("Y", a)->required();
  hausdorff->add_option("Z", b)->required();
  hausdorff->callback([&] { action = [&] { return run_hausdorff(opt, set, a, b); }; });
  auto* normal = witness->add_subcommand("normal", "Separate two closed sets (p, p+SET, or SET)");
  normal->add_option("SET", set)->required();
  normal->add_option("F", a)->required();
  normal->add_option("G", b)->required();
  normal->callback([&] { action = [&] { return run_normal(opt, set, a, b); }; });

  auto* compact = app.add_subcommand("compactify", "Decide the one-point compactification");
  compact->add_option("SET", set)->required();
  compact->callback([&] { action = [&] { return run_compactify(opt, set); }; });

  auto* finite_cmd = app.add_subcommand("finite", "Finite-topology oracle");
  finite_cmd->require_subcommand(1);
  auto* enumerate = finite_cmd->add_subcommand("enumerate", "Count topologies on n points");
  enumerate->add_option("n", n)->required();
  enumerate->add_flag("--list", list, "Print every topology, one per line");
  enumerate->callback([&] { action = [&] { return run_finite_enumerate(opt, n, list); }; });
  auto* search = finite_cmd->add_subcommand("search", "Search one-point connectifications of a finite space");
  search->add_option("TOPOLOGY", literal)->required();
  search->add_option("AXIOM", axiom)->required();
  search->callback([&] { action = [&] { return run_finite_search(opt, literal, axiom); }; });

  auto* self = app.add_subcommand("selftest", "Run the full invariant suite");
  self->callback([&] { action = [&] { return run_selftest(opt); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }

  try {
    return action();
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    switch (e.code()) {
      case ErrorCode::EmptySpace:
        return kExitRefused;
      case ErrorCode::ParseError:
      case ErrorCode::MalformedInterval:
      case ErrorCode::NotASubset:
      case ErrorCode::NotClosed:
      case ErrorCode::NotClosedInY:
      case ErrorCode::NotDisjoint:
      case ErrorCode::PInBoth:
      case ErrorCode::EqualPoints:
      case ErrorCode::PointOutsideComponent:
      case ErrorCode::SizeTooLarge:
      case ErrorCode::InvalidTopology:
        return kExitParse;
      default:
        return kExitBug;
    }
  }
}
