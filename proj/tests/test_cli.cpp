#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

// Drives the installed binary through popen and checks exit codes, output
// shapes and the golden render snapshots.

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(WONDERSYS_BIN) + " " + args + " 2>&1";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  int status = pclose(p);
  return {WEXITSTATUS(status), out};
}

std::string fixture(const std::string& name) { return std::string(FIXTURES_DIR) + "/" + name; }

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("validate exit codes") {
  auto ok = run("validate " + fixture("a1_rank1.wsys"));
  CHECK(ok.exit_code == 0);
  CHECK(ok.out.find("AXIOM S: PASS") != std::string::npos);

  auto bad = run("validate " + fixture("a2_broken_a2.wsys"));
  CHECK(bad.exit_code == 1);
  CHECK(bad.out.find("AXIOM A2: FAIL") != std::string::npos);

  auto malformed = run("validate " + fixture("malformed.wsys"));
  CHECK(malformed.exit_code == 2);
  CHECK(malformed.out.find("line 4") != std::string::npos);

  CHECK(run("validate /no/such/file.wsys").exit_code == 2);
}

TEST_CASE("classify report") {
  auto r = run("classify " + fixture("a1_rank1.wsys"));
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("cuspidal: true") != std::string::npos);
  CHECK(r.out.find("decomposable: false") != std::string::npos);
  CHECK(r.out.find("combs: D1(n=1) D2(n=1)") != std::string::npos);
  CHECK(r.out.find("tails: -") != std::string::npos);
  CHECK(r.out.find("primitive: false") != std::string::npos);
  CHECK(r.out.find("primitive-1-combs: D1 D2") != std::string::npos);
  CHECK(r.out.find("defect: 1") != std::string::npos);
  CHECK(r.out.find("reductive: true") != std::string::npos);
  CHECK(r.out.find("strict: false") != std::string::npos);
  CHECK(r.out.find("spherically-closed: true") != std::string::npos);

  auto p = run("classify " + fixture("a1a1_product.wsys"));
  CHECK(p.out.find("decomposable: true") != std::string::npos);

  auto t = run("classify " + fixture("b4_2b2_tail.wsys"));
  CHECK(t.out.find("tails: 2b(2)") != std::string::npos);
}

TEST_CASE("quotients listing and --by") {
  auto list = run("quotients " + fixture("a1_rank1.wsys"));
  CHECK(list.exit_code == 0);
  CHECK(list.out.find("# distinguished subsets: 4") != std::string::npos);
  CHECK(list.out.find("{D1} -> rank 0") != std::string::npos);

  auto by = run("quotients " + fixture("a2_full.wsys") + " --by Dm1,Dm2");
  CHECK(by.exit_code == 0);
  CHECK(by.out.find("# sigma'1 = 1*s1 + 1*s2") != std::string::npos);
  CHECK(by.out.find("sigma:\n  1 1\n") != std::string::npos);

  auto notdist = run("quotients " + fixture("a2_full.wsys") + " --by Dm1");
  CHECK(notdist.exit_code == 1);
  CHECK(notdist.out.find("not distinguished") != std::string::npos);

  CHECK(run("quotients " + fixture("a2_full.wsys") + " --by Zork").exit_code == 2);
}

TEST_CASE("localize") {
  auto r = run("localize " + fixture("a2_full.wsys") + " --roots 1");
  CHECK(r.exit_code == 0);
  CHECK(r.out ==
        "group: A1\n"
        "sp: -\n"
        "sigma:\n"
        "  1\n"
        "A:\n"
        "  Dp1: 1\n"
        "  Dm1: 1\n");
}

TEST_CASE("enumerate") {
  auto r = run("enumerate --group A1");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("# total: 4") != std::string::npos);

  auto c = run("enumerate --group A1xA1 --cuspidal --jobs 2");
  CHECK(c.exit_code == 0);
  CHECK(c.out.find("# total:") != std::string::npos);

  CHECK(run("enumerate --group E9").exit_code == 2);
}

TEST_CASE("render golden snapshots") {
  auto a1 = run("render " + fixture("a1_rank1.wsys"));
  CHECK(a1.exit_code == 0);
  CHECK(a1.out == slurp(std::string(GOLDEN_DIR) + "/render_a1_rank1.txt"));

  auto b4 = run("render " + fixture("b4_2b2_tail.wsys"));
  CHECK(b4.exit_code == 0);
  CHECK(b4.out == slurp(std::string(GOLDEN_DIR) + "/render_b4_tail.txt"));
}

TEST_CASE("table overlay via --table") {
  // the shipped table adds the exceptional-support entries: a G2 system
  // that the builtin table rejects validates with the file loaded
  std::string sys_path = std::string(FIXTURES_DIR) + "/g2_sum.tmp.wsys";
  {
    std::ofstream out(sys_path);
    out << "group: G2\nsp: -\nsigma:\n  1 1\nA:\n";
  }
  auto without = run("validate " + sys_path);
  CHECK(without.exit_code == 1);
  auto with = run("--table " + std::string(DATA_DIR) + "/rankone.tbl validate " + sys_path);
  CHECK(with.exit_code == 0);
  std::remove(sys_path.c_str());
}
