// Builds the connectification of (0,1) U [5,inf) and prints a few witnesses.

#include <iostream>

#include "onepoint/onepoint.hpp"

int main() {
  using namespace onepoint;

  Space x = Space::parse("(0,1) U [5,inf)");
  Verdict verdict = check_connectifiable(x);
  for (const auto& line : records::verdict(verdict)) std::cout << line << '\n';

  const auto& y = std::get<Extension>(verdict);

  auto sep = hausdorff_witness(y, ExtPoint::p(), ExtPoint::at(Rational(20)));
  for (const auto& line : records::separation("hausdorff", sep.u, sep.v)) std::cout << line << '\n';

  ExtClosedSet f{true, parse_set("[10,inf)")};
  ExtClosedSet g{false, parse_set("[5,6]")};
  for (const auto& line : records::normality(normality_witness(y, f, g))) std::cout << line << '\n';

  for (const auto& line : records::certificate(connectedness_certificate(y).replay(y))) std::cout << line << '\n';
}
