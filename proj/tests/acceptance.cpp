// Acceptance gate: every criterion at its runtime limit, one line each.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>

#include "onepoint/selftest.hpp"

namespace {

struct Limit {
  int id;
  double seconds;
};

constexpr Limit kLimits[] = {{1, 5}, {2, 30}, {3, 60}, {4, 10}, {5, 60}, {6, 120}, {7, 10}};

std::pair<int, std::string> run_cli(const std::string& args) {
  std::string cmd = std::string(ONEPOINT_CLI) + " " + args;
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, out};
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

}  // namespace

int main() {
  using clock = std::chrono::steady_clock;
  bool all = true;
  auto criteria = onepoint::selftest::all_criteria();
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto start = clock::now();
    auto r = criteria[i]();
    double secs = std::chrono::duration<double>(clock::now() - start).count();
    bool in_time = secs < kLimits[i].seconds;
    bool ok = r.passed && in_time;
    all = all && ok;
    std::printf("%s criterion %d %s (%.2fs, limit %.0fs)\n", ok ? "PASS" : "FAIL", r.id, r.name.c_str(), secs,
                kLimits[i].seconds);
    for (const auto& l : r.lines) std::printf("       %s\n", l.c_str());
    if (!in_time) std::printf("       runtime limit exceeded\n");
  }

  auto start = clock::now();
  auto first = run_cli("selftest --format records");
  auto second = run_cli("selftest --format records");
  double secs = std::chrono::duration<double>(clock::now() - start).count();
  bool same = first.second == second.second && !first.second.empty();
  bool ok = same && first.first == 0 && second.first == 0;
  all = all && ok;
  std::printf("%s criterion 8 determinism (%.2fs, %zu bytes, %s, exit %d/%d)\n", ok ? "PASS" : "FAIL", secs,
              first.second.size(), same ? "identical" : "DIFFERENT", first.first, second.first);

  std::fflush(stdout);
  return all ? 0 : 1;
}
