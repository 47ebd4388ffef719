#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>

#include "centrax/fixtures.hpp"
#include "centrax/io.hpp"

#ifndef CENTRAX_BIN
#error "CENTRAX_BIN must point at the centrax executable"
#endif

using namespace centrax;
using io::json;

namespace {

  struct Run {
    int         status = -1;
    std::string out;
  };

  std::filesystem::path const& dir() {
    static auto const d = [] {
      auto p = std::filesystem::temp_directory_path() / "centrax-cli-tests";
      std::filesystem::create_directories(p);
      return p;
    }();
    return d;
  }

  Run run(std::string const& args, std::string const& env = "") {
    std::string const cmd = "cd '" + dir().string() + "' && " + env + " '" CENTRAX_BIN "' " + args + " 2>/dev/null";
    Run               r;
    FILE*             pipe = popen(cmd.c_str(), "r");
    std::array<char, 4096> buf;
    while (auto n = fread(buf.data(), 1, buf.size(), pipe)) {
      r.out.append(buf.data(), n);
    }
    int const raw = pclose(pipe);
    r.status      = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
  }

  class Cli : public ::testing::Test {
   protected:
    static void SetUpTestSuite() {
      for (auto const* name : {"trivial", "diamond", "m3", "n5", "alpha", "c-into-d", "degenerate"}) {
        ASSERT_EQ(run(std::string("fixture ") + name + " -o " + name + ".json").status, 0) << name;
      }
      ASSERT_EQ(run("fixture meet-chain --n 2 -o mc2.json").status, 0);
      ASSERT_EQ(run("fixture join-chain --n 2 -o jc2.json").status, 0);
      ASSERT_EQ(run("fixture chain --n 2 -o c2.json").status, 0);
      ASSERT_EQ(run("fixture meet-power --k 2 -o mp2.json").status, 0);
      ASSERT_EQ(run("fixture meet-power --k 4 -o mp4.json").status, 0);
      ASSERT_EQ(run("fixture join-power --k 2 -o jp2.json").status, 0);
    }
  };

}  // namespace

TEST_F(Cli, AnalyzeAlpha) {
  auto const r = run("analyze-hom alpha.json");
  EXPECT_EQ(r.status, 1);
  EXPECT_NE(r.out.find("preserves_complementary: false, witness: ((0,1),(1,0))"), std::string::npos) << r.out;
}

TEST_F(Cli, CentralsDiamond) {
  auto const r = run("centrals diamond.json");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("4 central elements, Boolean algebra 2^2"), std::string::npos) << r.out;
}

TEST_F(Cli, ZeroOne) {
  EXPECT_EQ(run("check zero-one trivial.json").status, 0);
  EXPECT_EQ(run("check zero-one degenerate.json").status, 1);
}

TEST_F(Cli, Verdicts) {
  EXPECT_EQ(run("check dp diamond.json").status, 0);
  EXPECT_EQ(run("check rexdfc mp2.json").status, 0);
  EXPECT_EQ(run("check rexdfc jp2.json").status, 1);
  EXPECT_EQ(run("check lexdfc jp2.json").status, 0);
  EXPECT_EQ(run("check fhp c2.json c2.json").status, 0);
  EXPECT_EQ(run("check fhp jc2.json jc2.json").status, 1);
  EXPECT_EQ(run("check stability alpha.json").status, 1);
  EXPECT_EQ(run("check stability c-into-d.json").status, 1);
  EXPECT_EQ(run("decompose diamond.json").status, 0);
  EXPECT_EQ(run("decompose m3.json").status, 1);
  EXPECT_EQ(run("congruences n5.json").status, 0);
  EXPECT_EQ(run("factors m3.json").status, 0);
  EXPECT_EQ(run("synthesize-r mc2.json").status, 0);
  EXPECT_EQ(run("pushout alpha.json --collapse 'one,(0,1)'").status, 0);
  EXPECT_EQ(run("witness mp2.json --pair '(0,0),(0,1)' --generators '(1,0),(1,1)'").status, 0);
  EXPECT_EQ(run("witness n5.json --pair 'a,b' --generators '0,a'").status, 1);
}

TEST_F(Cli, Errors) {
  EXPECT_EQ(run("").status, 2);
  EXPECT_EQ(run("frobnicate x.json").status, 2);
  EXPECT_EQ(run("centrals missing.json").status, 2);
  EXPECT_EQ(run("check nonsense diamond.json").status, 2);
  EXPECT_EQ(run("check fhp diamond.json").status, 2);
  EXPECT_EQ(run("centrals degenerate.json").status, 2);
  EXPECT_EQ(run("fixture no-such-fixture").status, 2);
  EXPECT_EQ(run("--format yaml centrals diamond.json").status, 2);
  EXPECT_EQ(run("witness n5.json --pair 'a,zzz' --generators '0,a'").status, 2);
  EXPECT_EQ(run("--cap bogus centrals diamond.json").status, 2);
}

TEST_F(Cli, Caps) {
  // 16 elements: past the default Con(A) cap, within it once raised.
  EXPECT_EQ(run("congruences mp4.json").status, 2);
  EXPECT_EQ(run("--cap 16 congruences mp4.json").status, 0);
  EXPECT_EQ(run("congruences mp4.json", "CENTRAX_CAP=congruence=16").status, 0);
  EXPECT_EQ(run("--cap carrier=4 centrals m3.json").status, 2);
}

TEST_F(Cli, JsonRoundTrip) {
  auto const r = run("--format json congruences n5.json");
  ASSERT_EQ(r.status, 0);
  auto const j = json::parse(r.out);
  auto const a = io::load_algebra(dir() / "n5.json");
  EXPECT_EQ(j["count"], 5);
  for (auto const& c : j["congruences"]) {
    EXPECT_NO_THROW(io::congruence_from_json(c, a));
  }

  auto const z = json::parse(run("--format json centrals diamond.json").out);
  EXPECT_EQ(z["count"], 4);

  auto const h = json::parse(run("--format json analyze-hom alpha.json").out);
  EXPECT_EQ(h["preserves_centrals"], true);
  EXPECT_EQ(h["preserves_complementary"], false);
  EXPECT_EQ(h["broken_pair"]["display"], "((0,1),(1,0))");

  auto const f = json::parse(run("--format json check fhp jc2.json jc2.json").out);
  EXPECT_EQ(f["witness"]["generators"], json::parse("[[2,3]]"));

  // A written fixture reloads to the same structure.
  auto const fx = json::parse(run("fixture zmod --n 6").out);
  EXPECT_TRUE(same_structure(io::algebra_from_json(fx), fixtures::zmod(6)));
}

TEST_F(Cli, Deterministic) {
  auto const a = run("--format json fixture random --seed 9 --n 5");
  auto const b = run("--format json fixture random --seed 9 --n 5");
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(run("synthesize-r mc2.json").out, run("synthesize-r mc2.json").out);
}
