#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <json.hpp>
#include <string>

namespace {

struct Run {
  int status = -1;
  std::string out;
};

// Runs the CLI with stderr discarded and returns exit status plus stdout.
Run kwforge(const std::string& args, const std::string& env = "") {
  const std::string command = env + " " KWFORGE_BIN " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buffer{};
  while (std::fgets(buffer.data(), static_cast<int>(buffer.size()), pipe)) r.out += buffer.data();
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::size_t count_lines(const std::string& text) {
  std::size_t n = 0;
  for (char c : text) n += c == '\n';
  return n;
}

TEST(Cli, AnalyzeDeterminantalJson) {
  const auto r = kwforge("analyze --p 8 --q 17 --gens 69,70,71 --json");
  ASSERT_EQ(r.status, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["kwd_witness"], nlohmann::json({{"x", 2}, {"y", 1}}));
  EXPECT_EQ(j["pf"], nlohmann::json({60, 61, 62, 63}));
  EXPECT_EQ(j["betti"], nlohmann::json({1, 10, 20, 15, 4}));
  EXPECT_EQ(j.dump(2) + "\n", r.out);
}

TEST(Cli, AnalyzeNonDeterminantal) {
  const auto r = kwforge("analyze --p 8 --q 17 --gens 60,69,78 --json --no-betti");
  ASSERT_EQ(r.status, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j["kwd_witness"].is_null());
  EXPECT_EQ(j["pf"], nlohmann::json({43, 52, 61, 87}));
}

TEST(Cli, AnalyzeTextEchoIsSorted) {
  const auto r = kwforge("analyze --p 8 --q 17 --gens 53,62,55 --no-betti");
  ASSERT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("<8, 17, 53, 62, 55>"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("45, 47, 54, 60"), std::string::npos);
}

TEST(Cli, ExitCodes) {
  const auto not_member = kwforge("analyze --p 8 --q 17 --gens 100 --json");
  EXPECT_EQ(not_member.status, 2);
  EXPECT_EQ(nlohmann::json::parse(not_member.out)["error"], "NO_REPRESENTATION");
  EXPECT_EQ(kwforge("analyze --p 8 --q 16 --gens 60").status, 4);
  EXPECT_EQ(kwforge("analyze --p 8 --q 17 --gens 6x").status, 4);
  EXPECT_EQ(kwforge("count --p 8").status, 4);
  EXPECT_EQ(kwforge("frobnicate").status, 4);
  EXPECT_EQ(kwforge("--help").status, 0);
  EXPECT_EQ(kwforge("conjecture-scan --p-max 2 --q-max 9").status, 4);
  // both p and q odd: no window-boundary members, every check passes
  EXPECT_EQ(kwforge("verify --p 7 --q 9").status, 0);
  EXPECT_EQ(kwforge("verify --p 8 --q 17").status, 1);
}

TEST(Cli, Enumerate) {
  EXPECT_EQ(count_lines(kwforge("enumerate --p 8 --q 17 --only-kwd").out), 44u);
  EXPECT_EQ(count_lines(kwforge("enumerate --p 8 --q 17 --edim 5").out), 224u);
  const auto small = kwforge("enumerate --p 4 --q 5");
  ASSERT_EQ(small.status, 0);
  EXPECT_EQ(count_lines(small.out), 5u);
  std::size_t degenerate = 0;
  for (std::size_t at = 0; (at = small.out.find("degenerate", at)) != std::string::npos; ++at) ++degenerate;
  EXPECT_EQ(degenerate, 1u);
  EXPECT_EQ(count_lines(kwforge("enumerate --p 4 --q 5 --skip-degenerate").out), 4u);
}

TEST(Cli, EnumerateCsv) {
  const auto r = kwforge("enumerate --p 8 --q 17 --only-kwd --csv");
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "p,q,n,xs,ys,hs,kwd_x,kwd_y,pf,frobenius,betti,face_sig,degenerate");
  EXPECT_EQ(count_lines(r.out), 45u);
}

TEST(Cli, Count) {
  const auto r = kwforge("count --p 8 --q 17");
  ASSERT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("kw=494 kwd=44 rho=44/494"), std::string::npos) << r.out;
  const auto j = nlohmann::json::parse(kwforge("count --p 8 --q 17 --json").out);
  EXPECT_EQ(j["rho"], "44/494");
  EXPECT_EQ(j["rho_reduced"], "22/247");
}

TEST(Cli, FacesContains) {
  const auto r = kwforge("faces --p 8 --q 17 --contains 53,62,55 --json");
  ASSERT_EQ(r.status, 0);
  const auto faces = nlohmann::json::parse(r.out)["faces"];
  ASSERT_EQ(faces.size(), 1u);
  EXPECT_EQ(faces[0]["n"], 5);
  EXPECT_EQ(faces[0]["ys"], nlohmann::json({3, 2, 1}));
  bool has_gp = false, has_g = false;
  for (const auto& m : faces[0]["members"]) {
    has_gp = has_gp || m == nlohmann::json({69, 70, 71});
    has_g = has_g || m == nlohmann::json({53, 62, 55});
  }
  EXPECT_TRUE(has_gp);
  EXPECT_TRUE(has_g);
}

TEST(Cli, BettiAndPoset) {
  const auto betti = kwforge("betti --gens 8,17,36,45,63");
  ASSERT_EQ(betti.status, 0);
  EXPECT_NE(betti.out.find("1,10,20,15,4"), std::string::npos) << betti.out;
  const auto dot = kwforge("poset --gens 8,17,53,62,55 --dot");
  EXPECT_NE(dot.out.find("digraph"), std::string::npos);
}

TEST(Cli, ConjectureScanReportsWitness) {
  // (4,5) contains the complete intersection <4,5,6>
  const auto r = kwforge("conjecture-scan --p-max 4 --q-max 5");
  EXPECT_EQ(r.status, 3);
  EXPECT_NE(r.out.find("COUNTEREXAMPLE: (4,5) n=3"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("betti=1,2,1 [boundary]"), std::string::npos) << r.out;
  const auto j = nlohmann::json::parse(kwforge("conjecture-scan --p-max 4 --q-max 5 --json").out);
  EXPECT_EQ(j["total_counterexamples"], 1);
  EXPECT_EQ(j["counterexamples"][0]["hs"], nlohmann::json({6}));
  EXPECT_EQ(kwforge("conjecture-scan --p 7 --q 9").status, 0);
}

TEST(Cli, JobsDefaultFromEnvironmentKeepsOutput) {
  const auto serial = kwforge("conjecture-scan --p-max 6 --q-max 11 --csv");
  const auto parallel = kwforge("conjecture-scan --p-max 6 --q-max 11 --csv", "KWFORGE_JOBS=3");
  EXPECT_EQ(serial.status, parallel.status);
  EXPECT_EQ(serial.out, parallel.out);
}

}  // namespace
