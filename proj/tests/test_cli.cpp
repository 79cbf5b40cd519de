#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct CliRun {
  int code = -1;
  std::string out;
};

CliRun run(const std::string &args, const std::string &env = "")
{
  const std::string cmd = env + " " HYPERFORMS_CLI_PATH " " + args + " 2>/dev/null";
  CliRun r;
  FILE *p = popen(cmd.c_str(), "r");
  if (!p)
    return r;
  std::array<char, 4096> buf;
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), p)) > 0)
    r.out.append(buf.data(), got);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

double mid_of(const nlohmann::json &ball) { return std::stod(ball.at("mid").get<std::string>()); }

} // namespace

TEST(Cli, AsymptoticsExample)
{
  CliRun r = run("asymptotics --s 40 --digits 60");
  ASSERT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_NEAR(mid_of(j.at("ln_g_x0")), -40.54232882, 1e-7);
  EXPECT_NEAR(mid_of(j.at("ln_g_x0p")), -40.54234026, 1e-7);
  EXPECT_EQ(j.at("digits"), 60);
  EXPECT_EQ(run("zeta asymptotics --s 40 --digits 60").out, r.out);
}

TEST(Cli, IdentityExample)
{
  CliRun r = run("identity th-cat --n 1 --c 3/2 --d 5/2 --digits 40");
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(nlohmann::json::parse(r.out).at("pass").get<bool>());
}

TEST(Cli, UsageErrors)
{
  EXPECT_EQ(run("identity bogus").code, 2);
  EXPECT_EQ(run("identity th-cat --n 1 --c 3/2").code, 2);            // missing d
  EXPECT_EQ(run("identity th-cat --n 1 --c 3/2 --d 5/2 --x 1").code, 2); // extra parameter
  EXPECT_EQ(run("identity th-cat --n 1/2 --c 3/2 --d 5/2").code, 2);   // inadmissible
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("zeta asymptotics --s 8 --digits 5").code, 2);
  EXPECT_EQ(run("zeta asymptotics --s 9").code, 2);
  EXPECT_EQ(run("zeta form --s 8 --n 1 --output csv").code, 2);
  EXPECT_EQ(run("approx PI2_R --n-range 1 --integrality").code, 2);
  EXPECT_EQ(run("approx LOG2_R --n-range 3..1").code, 2);
  EXPECT_EQ(run("group reps --params 1,2,3,5,6").code, 2);
  EXPECT_EQ(run("zeta asymptotics --s 8", "HYPERFORMS_DIGITS=abc").code, 2);
  EXPECT_EQ(run("selftest").code, 2);
}

TEST(Cli, FailedCheckExitsOne)
{
  // no first-order recurrence with constant coefficients exists for these forms
  CliRun r = run("approx LOG2_R --n-range 0..12 --recurrence --order 1 --degree 0");
  EXPECT_EQ(r.code, 1);
  EXPECT_TRUE(nlohmann::json::parse(r.out).at("recurrence").is_null());
}

TEST(Cli, RecurrenceAndVerification)
{
  CliRun r = run("approx LOG2_R --n-range 0..12 --recurrence --verify --integrality");
  ASSERT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("rows").size(), 13u);
  EXPECT_EQ(j.at("recurrence").at("order"), 2);
}

TEST(Cli, DigitsFromEnvironment)
{
  CliRun r = run("zeta asymptotics --s 8", "HYPERFORMS_DIGITS=25");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(nlohmann::json::parse(r.out).at("digits"), 25);
  CliRun o = run("zeta asymptotics --s 8 --digits 30", "HYPERFORMS_DIGITS=25");
  EXPECT_EQ(nlohmann::json::parse(o.out).at("digits"), 30);
}

TEST(Cli, SweepIsDeterministic)
{
  CliRun a = run("sweep T3240 --count 4 --seed 11"), b = run("sweep T3240 --count 4 --seed 11");
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out, run("sweep T3240 --count 4 --seed 12").out);
  CliRun csv = run("sweep T3240 --count 4 --seed 11 --output csv");
  ASSERT_EQ(csv.code, 0);
  EXPECT_EQ(std::count(csv.out.begin(), csv.out.end(), '\n'), 5);
}

TEST(Cli, GroupCommands)
{
  CliRun o = run("group orbit --params 2,3,5/2,7,13/2 --digits 30");
  ASSERT_EQ(o.code, 0);
  auto j = nlohmann::json::parse(o.out);
  EXPECT_EQ(j.at("order"), 120);
  EXPECT_EQ(j.at("rows").size(), 120u);
  CliRun r = run("group reps --params 1,2,3/2,5,9/2");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(nlohmann::json::parse(r.out).at("representatives"), 12);
  CliRun m = run("group orbit --matrix '{\"c00\":\"1\"}'");
  EXPECT_EQ(m.code, 2);
}

TEST(Cli, ZetaCommands)
{
  CliRun f = run("zeta form --s 8 --n 1 --variant WT --derivative --verify");
  ASSERT_EQ(f.code, 0);
  EXPECT_EQ(nlohmann::json::parse(f.out).at("form").at("basis").at(0), "one");
  CliRun i = run("zeta integrality --s 8 --n 3");
  ASSERT_EQ(i.code, 0);
  EXPECT_TRUE(nlohmann::json::parse(i.out).at("pass").get<bool>());
  CliRun t = run("zeta theorem-table --collection 1 --check-s 10");
  ASSERT_EQ(t.code, 0);
  auto rows = nlohmann::json::parse(t.out).at("rows");
  EXPECT_EQ(rows.size(), 21u);
  EXPECT_EQ(rows.at(0).at("kappa"), "1/14");
  EXPECT_EQ(rows.at(0).at("from_forms"), "1/14");
}

TEST(Cli, SelftestSingleCriterion)
{
  CliRun r = run("selftest --criterion 1 --criterion 11");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(nlohmann::json::parse(r.out).at("rows").size(), 2u);
}
