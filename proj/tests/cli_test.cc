#include <gtest/gtest.h>
#include <sys/wait.h>

#include <algorithm>
#include <cstdio>
#include <string>

#include "test_support.h"

namespace compsum {
namespace {

struct CliRun {
  int status;
  std::string out;
};

CliRun run(const std::string& args) {
  std::string cmd = std::string(COMPSUM_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  char buf[4096];
  size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  int raw = ::pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    std::string sources;
    for (const auto& p : testing::college_fixtures()) sources += " '" + p.string() + "'";
    CliRun r = run("index --store '" + store() + "'" + sources);
    ASSERT_EQ(r.status, 0) << r.out;
  }
  std::string store() const { return (dir_.path() / "store").string(); }

  testing::TempDir dir_;
};

TEST_F(CliTest, IndexPrintsIds) {
  CliRun r = run("index --store '" + store() + "' '" +
              testing::college_fixtures()[0].string() + "'");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find(testing::college_fixtures()[0].stem().string()), std::string::npos);
}

TEST_F(CliTest, SearchListsMatches) {
  CliRun r = run("search 'engineering college' --limit 3 --store '" + store() + "'");
  EXPECT_EQ(r.status, 0) << r.out;
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 3);
}

TEST_F(CliTest, SummarizeWritesHtml) {
  auto fixtures = testing::college_fixtures();
  std::string out = (dir_.path() / "summary.html").string();
  CliRun r = run("summarize --store '" + store() + "' --docs " + fixtures[0].stem().string() +
              "," + fixtures[1].stem().string() +
              " --query 'engineering college' --features 'placement, recruiters' --out '" +
              out + "'");
  ASSERT_EQ(r.status, 0) << r.out;
  std::string html = testing::read_file(out);
  EXPECT_NE(html.find("<b>IT</b>"), std::string::npos);
  EXPECT_NE(html.find("<b>ECE</b>"), std::string::npos);
}

TEST_F(CliTest, ErrorsMapToExitCodes) {
  CliRun missing = run("summarize --store '" + store() +
                    "' --docs missing --features placement");
  EXPECT_EQ(missing.status, 3);
  EXPECT_NE(missing.out.find("compsum: not-found:"), std::string::npos);

  CliRun empty = run("search 'the' --store '" + store() + "'");
  EXPECT_EQ(empty.status, 2);

  CliRun bad_file = run("index --store '" + store() + "' /nonexistent/page.html");
  EXPECT_NE(bad_file.status, 0);
}

}  // namespace
}  // namespace compsum
