#include <catch_amalgamated.hpp>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace {

struct Run {
  int status = -1;
  std::string out;
};

// Runs bialint with the given arguments; stderr is folded into out unless
// stdout_only is set.
Run bialint(const std::string& args, bool stdout_only = false, const std::string& env = "") {
  const std::string cmd = env + " " + BIALINT_EXE + std::string(" ") + args + (stdout_only ? " 2>/dev/null" : " 2>&1");
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) r.out.append(buf, n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string data(const std::string& name) { return std::string(BIALINT_DATA_DIR) + "/" + name; }

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("list names the catalog") {
  const Run r = bialint("list");
  CHECK(r.status == 0);
  for (const char* name : {"poly_grouplike", "quantum_plane", "sixdim", "sweedler_h4", "a_times_k"}) {
    CHECK(contains(r.out, name));
  }
}

TEST_CASE("verify kx prints the delta table") {
  const Run r = bialint("verify kx");
  CHECK(r.status == 0);
  CHECK(contains(r.out, "dim = 1"));
  CHECK(contains(r.out, "m = 0: 1 0 0 0 0 0 0"));
  CHECK(contains(r.out, "m = 2: 0 0 1 0 0"));
  CHECK(contains(r.out, "d = 6"));
}

TEST_CASE("verify sixdim and quantum_plane pass") {
  const Run six = bialint("verify sixdim");
  CHECK(six.status == 0);
  CHECK(contains(six.out, "dimension 4"));
  const Run qp = bialint("verify quantum_plane");
  CHECK(qp.status == 0);
  CHECK(contains(qp.out, "interior dim 0"));
  CHECK(contains(qp.out, "classical: dim 0"));
  const Run one = bialint("verify quantum_plane --q 1/3");
  CHECK(one.status == 0);
  CHECK(contains(one.out, "q = 1/3"));
  CHECK_FALSE(contains(one.out, "(q = 2)"));
}

TEST_CASE("options are echoed") {
  const Run r = bialint("integrals quantum_plane --degree 4 --slack 1 --margin 1 --q -1");
  CHECK(r.status == 0);
  CHECK(contains(r.out, "d = 4"));
  CHECK(contains(r.out, "slack = 1"));
  CHECK(contains(r.out, "margin = 1"));
  CHECK(contains(r.out, "q = -1"));
  CHECK(contains(r.out, "mode = oslash_new"));
}

TEST_CASE("JSON reports are schema-versioned and deterministic") {
  const Run a = bialint("report sweedler_h4 --json", true);
  const Run b = bialint("report sweedler_h4 --json", true);
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
  const auto j = nlohmann::json::parse(a.out);
  CHECK(j["schema_version"] == 1);
  CHECK(j["command"] == "report");
  CHECK(j["inputs"]["d"] == "5");
  CHECK(j["passed"] == true);
  CHECK(j["checks"].is_array());
  CHECK_FALSE(j.contains("timings"));
  const auto t = nlohmann::json::parse(bialint("basis group_c2 --json --timings", true).out);
  CHECK(t.contains("timings"));
}

TEST_CASE("reports can go to a file") {
  const auto path = std::filesystem::temp_directory_path() / "bialint_cli_out.txt";
  std::filesystem::remove(path);
  const Run r = bialint("basis " + data("quantum_plane_q2.bialg") + " --degree 2 --out " + path.string());
  CHECK(r.status == 0);
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(contains(ss.str(), "quantum_plane_q2"));
  std::filesystem::remove(path);
}

TEST_CASE("files are read and validated") {
  CHECK(bialint("integrals " + data("quantum_plane_q2.bialg")).status == 0);
  CHECK(bialint("antipode " + data("sweedler_h4.bialg")).status == 0);

  const Run biideal = bialint("basis " + data("bad_biideal.bialg"));
  CHECK(biideal.status == 2);
  CHECK(contains(biideal.out, "delta(y.y)"));

  const Run counit = bialint("basis " + data("bad_counit.bialg"));
  CHECK(counit.status == 2);
  CHECK(contains(counit.out, "line 5"));
  CHECK(contains(counit.out, "malformed rational"));
}

TEST_CASE("exit status contract") {
  // a failed check
  const Run wrong = bialint("antipode " + data("laurent_wrong_antipode.bialg"));
  CHECK(wrong.status == 1);
  CHECK(contains(wrong.out, "FAIL declared antipode"));
  // input errors
  CHECK(bialint("frobnicate sixdim").status == 2);
  CHECK(bialint("basis no_such_thing").status == 2);
  CHECK(bialint("basis").status == 2);
  CHECK(bialint("integrals quantum_plane --degree 2 --margin 3").status == 2);
  CHECK(bialint("integrals quantum_plane --mode sideways").status == 2);
  CHECK(bialint("integrals quantum_plane --q 0").status == 2);
  CHECK(bialint("verify nothing").status == 2);
  // resource guard
  const Run guard = bialint("integrals quantum_plane", false, "BIALINT_GUARD=1");
  CHECK(guard.status == 3);
  CHECK(contains(guard.out, "resource guard"));
}
