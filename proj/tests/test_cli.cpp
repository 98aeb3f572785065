#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <string>

#include "onepoint/onepoint.hpp"

using namespace onepoint;

namespace {

struct Result {
  int status = -1;
  std::string out;
};

// Runs the CLI with a shell-quoted argument string; stderr is discarded.
Result cli(const std::string& args) {
  std::string cmd = std::string(ONEPOINT_CLI) + " " + args + " 2>/dev/null";
  Result r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

bool has(const std::string& haystack, const std::string& needle) { return haystack.find(needle) != std::string::npos; }

std::string joined(const std::vector<std::string>& lines) {
  std::string out;
  for (const auto& l : lines) out += l + "\n";
  return out;
}

}  // namespace

TEST(Cli, ConnectifyRefusal) {
  Result r = cli("connectify '(0,1) U [2,3]'");
  EXPECT_EQ(r.status, 3);
  EXPECT_TRUE(has(r.out, "Refused component=[2,3]")) << r.out;

  Result rec = cli("--format records connectify '(0,1) U [2,3]'");
  EXPECT_EQ(rec.status, 3);
  EXPECT_TRUE(has(rec.out, "verdict=Refused component=[2,3] index=C#1 reason=clopen-obstruction")) << rec.out;
}

TEST(Cli, ConnectifyAccepts) {
  Result r = cli("connectify '(0,1) U [5,inf)'");
  EXPECT_EQ(r.status, 0);
  EXPECT_TRUE(has(r.out, "2 escape filter(s)")) << r.out;

  Result rec = cli("--format records connectify '(0,1) U [5,inf)'");
  EXPECT_EQ(rec.status, 0);
  Extension y = std::get<Extension>(check_connectifiable(Space::parse("(0,1) U [5,inf)")));
  EXPECT_TRUE(has(rec.out, joined(records::verdict(Verdict{y})))) << rec.out;
  EXPECT_TRUE(has(rec.out, "filters=2"));
  EXPECT_TRUE(has(rec.out, "valid=yes"));
}

TEST(Cli, FormatAfterSubcommand) {
  Result r = cli("connectify '(0,1)' --format records");
  EXPECT_EQ(r.status, 0);
  EXPECT_TRUE(has(r.out, "verdict=Connectifiable")) << r.out;
}

TEST(Cli, Witnesses) {
  Result h = cli("--format records witness hausdorff '[5,inf)' p 20");
  EXPECT_EQ(h.status, 0);
  EXPECT_TRUE(has(h.out, records::open_set(ExtOpenSet::type2(parse_set("(21,inf)"), {16})))) << h.out;
  EXPECT_TRUE(has(h.out, "verified=yes"));

  Result n = cli("--format records witness normal '[5,inf)' p '[5,7]'");
  EXPECT_EQ(n.status, 0);
  EXPECT_TRUE(has(n.out, records::open_set(ExtOpenSet::type2(parse_set("(15/2,inf)"), {2})))) << n.out;
  EXPECT_TRUE(has(n.out, "verified=yes"));

  EXPECT_EQ(cli("witness hausdorff '[5,inf)' p p").status, 2);
  EXPECT_EQ(cli("witness normal '(0,1)' p 'p+[1/4,1/2]'").status, 2);
  EXPECT_EQ(cli("witness hausdorff '(0,1) U [2,3]' p 1/2").status, 3);
}

TEST(Cli, Finite) {
  Result e = cli("finite enumerate 3");
  EXPECT_EQ(e.status, 0);
  EXPECT_TRUE(has(e.out, "count=29")) << e.out;
  Result l = cli("finite enumerate 2 --list");
  EXPECT_TRUE(has(l.out, "{},{0},{0,1}"));
  EXPECT_EQ(cli("finite enumerate 9").status, 2);

  Result s = cli("finite search '{},{0},{1},{0,1}' T2");
  EXPECT_EQ(s.status, 0);
  EXPECT_TRUE(has(s.out, "results=0")) << s.out;
  EXPECT_TRUE(has(cli("finite search '{},{0}' T0").out, "results=1"));
  EXPECT_EQ(cli("finite search '{},{0}' T9").status, 2);
}

TEST(Cli, ComponentsCheckCompactify) {
  Result c = cli("--format records components '(0,1] U (1,2) U [3,3]'");
  EXPECT_EQ(c.status, 0);
  EXPECT_TRUE(has(c.out, "components=2"));
  EXPECT_TRUE(has(c.out, "component C#0 piece=(0,2)"));

  Result k = cli("--format records check '(0,1) U [2,3]'");
  EXPECT_EQ(k.status, 0);
  EXPECT_TRUE(has(k.out, "window=(1,4)")) << k.out;

  EXPECT_EQ(cli("compactify '[0,1]'").status, 3);
  EXPECT_EQ(cli("compactify '(0,1)'").status, 0);
}

TEST(Cli, ParseErrors) {
  EXPECT_EQ(cli("connectify '(0,1'").status, 2);
  EXPECT_EQ(cli("connectify '(1,0)'").status, 2);
  EXPECT_EQ(cli("connectify").status, 2);
  EXPECT_EQ(cli("frobnicate").status, 2);
  EXPECT_EQ(cli("--format xml connectify '(0,1)'").status, 2);
  EXPECT_EQ(cli("connectify '{}'").status, 3);
}
