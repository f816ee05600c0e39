#include <doctest.h>

#include <sys/wait.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "csrkn/cli.hpp"
#include "csrkn/verification.hpp"

using namespace csrkn;
namespace fs = std::filesystem;

namespace {

struct Run {
  int status;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

fs::path scratch_dir() {
  static const fs::path dir = [] {
    const fs::path d = fs::temp_directory_path() / ("csrkn_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

Run cli(const std::string& args) {
  const fs::path out = scratch_dir() / "stdout.txt";
  const fs::path err = scratch_dir() / "stderr.txt";
  const std::string cmd = std::string(CSRKN_CLI_PATH) + " " + args + " >" + out.string() + " 2>" +
                          err.string();
  const int raw = std::system(cmd.c_str());
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, slurp(out), slurp(err)};
}

std::vector<std::vector<std::string>> read_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

}  // namespace

TEST_CASE("derive writes a tableau that reads back") {
  const fs::path file = scratch_dir() / "legendre4.txt";
  const Run r = cli("derive --method legendre4 --gamma 0 --out " + file.string());
  REQUIRE(r.status == 0);
  std::ifstream in(file);
  const RKNTableau t = read_tableau(in);
  const RKNTableau ref = builtin("legendre4");
  REQUIRE(t.stages() == 2);
  const double s3 = std::sqrt(3.0);
  CHECK(std::abs(t.a_bar(0, 0) - 1.0 / 12) < 1e-15);
  CHECK(std::abs(t.a_bar(0, 1) - (1 - s3) / 12) < 1e-15);
  CHECK(std::abs(t.a_bar(1, 0) - (1 + s3) / 12) < 1e-15);
  CHECK(std::abs(t.b_bar[0] - (3 + s3) / 12) < 1e-15);
  CHECK(t.c == ref.c);
  CHECK(t.a_bar == ref.a_bar);
  CHECK(t.b_prime == ref.b_prime);
  REQUIRE(t.provenance);
  CHECK(t.provenance->method == "legendre4");
}

TEST_CASE("check reports hermite3's B(4) defect") {
  const Run r = cli("check --method hermite3");
  REQUIRE(r.status == 0);
  CHECK(r.out.find("B(4)") != std::string::npos);
  CHECK(r.out.find("5.000e-01") != std::string::npos);
  CHECK(r.out.find("symmetry not applicable") != std::string::npos);
  CHECK(r.out.find("predicted order 3") != std::string::npos);

  const Run csv = cli("check --method hermite3 --csv");
  REQUIRE(csv.status == 0);
  const auto rows = read_csv(csv.out);
  REQUIRE(!rows.empty());
  CHECK(rows[0] == std::vector<std::string>{"condition", "kappa", "residual"});
  bool found = false;
  for (const auto& row : rows)
    if (row.size() == 3 && row[0] == "B" && row[1] == "4") {
      found = true;
      CHECK(std::abs(std::stod(row[2]) - 0.5) < 1e-12);
    }
  CHECK(found);
}

TEST_CASE("run writes a Kepler trajectory with invariant errors") {
  const fs::path a = scratch_dir() / "traj_a.csv";
  const fs::path b = scratch_dir() / "traj_b.csv";
  const std::string args = "run --method legendre4 --problem kepler --h 0.1 --steps 10000 --out ";
  REQUIRE(cli(args + a.string()).status == 0);
  REQUIRE(cli(args + b.string()).status == 0);
  const std::string text = slurp(a);
  CHECK(text == slurp(b));
  const auto rows = read_csv(text);
  REQUIRE(rows.size() == 10002);
  CHECK(rows[0] == std::vector<std::string>{"t", "q1", "q2", "p1", "p2", "H_err", "angmom_err",
                                            "rlp_err"});
  double worst = 0.0;
  for (std::size_t i = 1; i < rows.size(); ++i) worst = std::max(worst, std::stod(rows[i][6]));
  CHECK(worst < 1e-11);
  CHECK(text.find('\r') == std::string::npos);
}

TEST_CASE("run to stdout with sparse recording") {
  const Run r = cli("run --method chebyshev4 --problem henon_heiles --steps 20 --record-every 10");
  REQUIRE(r.status == 0);
  const auto rows = read_csv(r.out);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0] == std::vector<std::string>{"t", "q1", "q2", "p1", "p2", "H_err"});
  CHECK(rows[3][0] == "2");
}

TEST_CASE("order prints the halving table") {
  const Run r = cli("order --method legendre4 --problem harmonic --h0 0.1 --levels 5");
  REQUIRE(r.status == 0);
  const auto rows = read_csv(r.out);
  REQUIRE(rows.size() == 7);
  CHECK(rows[0] == std::vector<std::string>{"h", "error", "slope"});
  for (int i = 2; i <= 5; ++i) CHECK(std::abs(std::stod(rows[i][2]) - 4.0) < 0.2);
}

TEST_CASE("every builtin is accepted by every verb") {
  for (const auto& m : builtin_methods()) {
    const std::string name(m.name);
    CAPTURE(name);
    CHECK(cli("derive --method " + name).status == 0);
    CHECK(cli("check --method " + name).status == 0);
    CHECK(cli("run --method " + name + " --steps 5").status == 0);
    CHECK(cli("order --method " + name + " --problem harmonic --levels 3").status == 0);
  }
}

TEST_CASE("custom construction from the command line") {
  const Run r = cli("check --family legendre --stages 2 --alpha 1,1=0 1,2=0 2,2=0");
  REQUIRE(r.status == 0);
  CHECK(r.out.find("predicted order 4") != std::string::npos);
  const Run bad = cli("check --family legendre --xi 3 --eta 3");
  CHECK(bad.status == 2);
  CHECK(bad.err.find("construction failed") != std::string::npos);
}

TEST_CASE("tableau files feed the other verbs") {
  const fs::path file = scratch_dir() / "hermite4.txt";
  REQUIRE(cli("derive --method hermite4 --out " + file.string()).status == 0);
  const Run r = cli("check --tableau " + file.string());
  REQUIRE(r.status == 0);
  CHECK(r.out.find("predicted order 4") != std::string::npos);
}

TEST_CASE("usage errors exit with 1") {
  const Run m = cli("check --method rk4");
  CHECK(m.status == 1);
  CHECK(m.err.find("unknown method") != std::string::npos);
  const Run p = cli("run --method legendre4 --problem lorenz");
  CHECK(p.status == 1);
  CHECK(p.err.find("unknown problem") != std::string::npos);
  CHECK(cli("frobnicate").status == 1);
  CHECK(cli("run --method legendre4 --steps abc").status == 1);
  CHECK(cli("").status == 1);
  CHECK(cli("check --tableau /nonexistent/t.txt").status == 1);
  CHECK(cli("order --method legendre4 --problem henon_heiles").status == 1);
}

TEST_CASE("solver failures exit with 2 and name the step") {
  const Run r = cli("run --method legendre4 --problem kepler --max-iters 1");
  CHECK(r.status == 2);
  CHECK(r.err.find("at step 0") != std::string::npos);
}

TEST_CASE("execute in process") {
  Command c;
  c.verb = Verb::Derive;
  c.method = "chebyshev4";
  std::ostringstream out, err;
  CHECK(execute(c, out, err) == kExitOk);
  std::istringstream in(out.str());
  const RKNTableau t = read_tableau(in);
  CHECK(std::abs(t.b_prime[1] - 5.0 / 9) < 1e-15);
  CHECK(err.str().empty());

  c.method = "nope";
  std::ostringstream out2, err2;
  CHECK(execute(c, out2, err2) == kExitUsage);
}
