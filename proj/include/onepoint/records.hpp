#pragma once

// Stable single-line text records for filters, open sets, witnesses and
// certificates. Component order and ascending indices are fixed, so output
// is byte-identical across runs.

#include <string>
#include <vector>

#include "onepoint/compactify.hpp"
#include "onepoint/connectify.hpp"

namespace onepoint::records {

inline std::string component_tag(std::size_t i) { return "C#" + std::to_string(i); }

inline std::string tails(const std::vector<std::uint64_t>& t) {
  std::string out;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) out += ",";
    out += component_tag(i) + ":" + std::to_string(t[i]);
  }
  return out;
}

inline std::string open_set(const ExtOpenSet& u) {
  if (!u.has_p()) return "variant=TypeI trace=" + u.trace.str();
  return "variant=TypeII trace=" + u.trace.str() + " tails=" + tails(u.tails);
}

inline std::string open_set(const CompactOpenSet& u) {
  if (!u.has_infinity()) return "variant=TypeI trace=" + u.trace.str();
  return "variant=TypeInf removed=" + u.removed.str();
}

inline std::string closed_set(const ExtClosedSet& f) {
  return std::string("p=") + (f.has_p ? "yes" : "no") + " trace=" + f.trace.str();
}

inline std::string filter(const EscapeFilter& f) {
  std::string out = "filter " + component_tag(f.component().index) + " component=" + f.component().piece.str() +
                    " direction=" + std::string(to_string(f.direction()));
  if (f.halving()) out += " end=" + f.end().str();
  out += " anchor=" + f.anchor().str() + " element0=" + f.element(0).str();
  return out;
}

inline std::vector<std::string> verdict(const Verdict& v) {
  std::vector<std::string> lines;
  if (const auto* r = std::get_if<Refusal>(&v)) {
    lines.push_back("verdict=Refused component=" + r->witness.piece.str() + " index=" + component_tag(r->witness.index) +
                    " reason=" + r->reason);
    return lines;
  }
  const auto& y = std::get<Extension>(v);
  lines.push_back("verdict=Connectifiable space=" + y.x().str() + " filters=" + std::to_string(y.component_count()));
  for (const auto& f : y.filters()) lines.push_back(filter(f));
  return lines;
}

inline std::vector<std::string> separation(const std::string& kind, const ExtOpenSet& u, const ExtOpenSet& v) {
  return {"witness kind=" + kind, "open U " + open_set(u), "open V " + open_set(v)};
}

inline std::vector<std::string> normality(const NormalityWitness& w) {
  std::vector<std::string> lines{"witness kind=normal case=" + std::string(w.p_case ? "p" : "x")};
  for (const auto& part : w.parts)
    lines.push_back("part " + component_tag(part.component) + " tail=" + std::to_string(part.tail) +
                    " U_C=" + part.u.str() + " V_C=" + part.v.str());
  lines.push_back("open U " + open_set(w.u));
  lines.push_back("open V " + open_set(w.v));
  return lines;
}

inline std::vector<std::string> certificate(const Certificate& c) {
  std::vector<std::string> lines{"certificate kind=" + c.kind + " steps=" + std::to_string(c.steps.size()) +
                                 " valid=" + (c.valid() ? "yes" : "no")};
  for (std::size_t i = 0; i < c.steps.size(); ++i)
    lines.push_back("step " + std::to_string(i + 1) + " " + (c.steps[i].holds ? "ok" : "FAIL") + " " + c.steps[i].claim);
  return lines;
}

}  // namespace onepoint::records
