#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "dichro/edgelist.hpp"
#include "dichro/generators.hpp"
#include "test_util.hpp"

namespace fs = std::filesystem;
using json = nlohmann::json;

namespace {

// Runs the CLI binary (path from $DICHRO_CLI) and captures stdout.
struct CliResult {
  int exit_code;
  std::string output;
};

class CliFixture {
 public:
  CliFixture() {
    const char* env = std::getenv("DICHRO_CLI");
    REQUIRE_MESSAGE(env != nullptr, "DICHRO_CLI must point at the binary");
    cli_ = env;
    dir_ = fs::temp_directory_path() /
           ("dichro_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(dir_);
  }
  ~CliFixture() { fs::remove_all(dir_); }

  fs::path path(const std::string& name) const { return dir_ / name; }

  CliResult run(const std::string& args) const {
    const fs::path out = dir_ / "stdout.txt";
    const std::string cmd =
        cli_ + " " + args + " > " + out.string() + " 2> /dev/null";
    const int status = std::system(cmd.c_str());
    CliResult result;
    result.exit_code = WEXITSTATUS(status);
    std::ifstream in(out);
    std::ostringstream buf;
    buf << in.rdbuf();
    result.output = buf.str();
    return result;
  }

 private:
  std::string cli_;
  fs::path dir_;
};

}  // namespace

TEST_CASE("cli end to end") {
  CliFixture cli;

  const auto c7 = cli.path("c7.txt");
  dichro::write_edge_list_file(dichro::gen_directed_cycle(7), c7.string());
  const auto digon = cli.path("digon.txt");
  dichro::write_edge_list_file(dichro::Digraph(2, {{0, 1}, {1, 0}}), digon.string());
  const auto dag = cli.path("dag.txt");
  dichro::write_edge_list_file(dichro::testing::transitive_tournament(5), dag.string());
  const auto c5 = cli.path("c5.txt");
  dichro::write_edge_list_file(dichro::gen_directed_cycle(5), c5.string());
  const auto c15 = cli.path("c15.txt");
  dichro::write_edge_list_file(dichro::gen_directed_cycle(15), c15.string());
  const auto triangle = cli.path("triangle.txt");
  dichro::write_edge_list_file(
      dichro::Digraph(3, {{0, 1}, {1, 2}, {2, 0}}), triangle.string());

  SUBCASE("color emits valid JSON within the bound") {
    const auto res = cli.run("color " + c7.string() + " --g 3");
    CHECK(res.exit_code == 0);
    const json doc = json::parse(res.output);
    CHECK(doc["n"] == 7);
    CHECK(doc["m"] == 7);
    CHECK(doc["g"] == 3);
    CHECK(doc["digirth"] == 7);
    CHECK(doc["valid"] == true);
    CHECK(doc["colors_used"].get<int>() <= 4);
    CHECK(doc["assignment"].size() == 7);
    CHECK(doc["colors_used"].get<int>() <= doc["integer_bound"].get<int>());
  }

  SUBCASE("color of a DAG uses one color") {
    const auto res = cli.run("color " + dag.string());
    CHECK(res.exit_code == 0);
    const json doc = json::parse(res.output);
    CHECK(doc["colors_used"] == 1);
    CHECK(doc["digirth"] == "inf");
  }

  SUBCASE("color exits 3 when the digirth is too small for g") {
    CHECK(cli.run("color " + digon.string() + " --g 2").exit_code == 3);
  }

  SUBCASE("color exits 2 on a missing file") {
    CHECK(cli.run("color " + cli.path("nope.txt").string()).exit_code == 2);
  }

  SUBCASE("exact prints the dichromatic number") {
    const auto res = cli.run("exact " + c5.string());
    CHECK(res.exit_code == 0);
    CHECK(res.output == "2\n");

    const auto k3 = cli.path("k3.txt");
    dichro::write_edge_list_file(dichro::testing::bidirected_complete(3),
                                 k3.string());
    const auto res3 = cli.run("exact " + k3.string());
    CHECK(res3.exit_code == 0);
    CHECK(res3.output == "3\n");
  }

  SUBCASE("exact respects the size cap") {
    CHECK(cli.run("exact " + c15.string()).exit_code == 4);
    const auto res = cli.run("exact " + c15.string() + " --cap 15");
    CHECK(res.exit_code == 0);
    CHECK(res.output == "2\n");
  }

  SUBCASE("verify distinguishes valid, invalid and mismatched input") {
    const auto good = cli.path("good.json");
    std::ofstream(good) << R"({"assignment":[0,0,1]})";
    CHECK(cli.run("verify " + triangle.string() + " " + good.string()).exit_code == 0);

    const auto bad = cli.path("bad.json");
    std::ofstream(bad) << R"({"assignment":[0,0,0]})";
    const auto res = cli.run("verify " + triangle.string() + " " + bad.string());
    CHECK(res.exit_code == 1);
    CHECK(res.output.find("0 1 2") != std::string::npos);

    const auto mismatched = cli.path("mismatched.json");
    std::ofstream(mismatched) << R"({"assignment":[0,0]})";
    CHECK(cli.run("verify " + triangle.string() + " " + mismatched.string())
              .exit_code == 2);
  }

  SUBCASE("gen cycle then digirth round-trips") {
    const auto out = cli.path("gen.txt");
    CHECK(cli.run("gen cycle --n 9 --out " + out.string()).exit_code == 0);
    const auto res = cli.run("digirth " + out.string());
    CHECK(res.exit_code == 0);
    CHECK(res.output == "9\n");
  }

  SUBCASE("gen random honors the digirth floor") {
    const auto out = cli.path("rand.txt");
    CHECK(cli.run("gen random --n 30 --p 0.2 --gamma 5 --seed 3 --out " +
                  out.string())
              .exit_code == 0);
    const auto res = cli.run("digirth " + out.string());
    CHECK(res.exit_code == 0);
    const int girth = std::stoi(res.output);
    CHECK(girth >= 5);
  }

  SUBCASE("digirth prints inf for acyclic input") {
    const auto res = cli.run("digirth " + dag.string());
    CHECK(res.exit_code == 0);
    CHECK(res.output == "inf\n");
  }

  SUBCASE("stats reports delta_tilde at most delta/2 on digon-free input") {
    const auto res = cli.run("stats " + c7.string());
    CHECK(res.exit_code == 0);
    double delta = -1.0, tilde = -1.0;
    std::istringstream lines(res.output);
    std::string key;
    double value;
    while (lines >> key >> value) {
      if (key == "delta") delta = value;
      if (key == "delta_tilde") tilde = value;
    }
    CHECK(delta == 2.0);
    CHECK(tilde <= delta / 2 + 1e-12);
  }

  SUBCASE("bench CSV is deterministic and internally consistent") {
    const auto a = cli.path("bench_a.csv");
    const auto b = cli.path("bench_b.csv");
    CHECK(cli.run("bench --count 6 --seed 5 --nmax 16 --out " + a.string())
              .exit_code == 0);
    CHECK(cli.run("bench --count 6 --seed 5 --nmax 16 --out " + b.string())
              .exit_code == 0);
    std::ifstream fa(a), fb(b);
    std::stringstream sa, sb;
    sa << fa.rdbuf();
    sb << fb.rdbuf();
    CHECK(sa.str() == sb.str());
    CHECK(sa.str().find("instance_id,n,m,delta,digirth,g,colors_theorem,"
                        "integer_bound,colors_greedy,chi_exact_or_blank,"
                        "ms_theorem,ms_greedy") == 0);

    // Row invariants: colors_theorem <= integer_bound, and when chi is
    // present it bounds both procedures from below.
    std::istringstream rows(sa.str());
    std::string line;
    std::getline(rows, line);  // header
    int row_count = 0;
    while (std::getline(rows, line)) {
      ++row_count;
      std::vector<std::string> fields;
      std::istringstream fs(line);
      std::string field;
      while (std::getline(fs, field, ',')) fields.push_back(field);
      REQUIRE(fields.size() == 12);
      const int colors_theorem = std::stoi(fields[6]);
      const int integer_bound = std::stoi(fields[7]);
      const int colors_greedy = std::stoi(fields[8]);
      CHECK(colors_theorem <= integer_bound);
      if (!fields[9].empty()) {
        const int chi = std::stoi(fields[9]);
        CHECK(chi <= colors_theorem);
        CHECK(chi <= colors_greedy);
      }
    }
    CHECK(row_count == 6);
  }

  SUBCASE("usage errors exit 2") {
    CHECK(cli.run("wat").exit_code == 2);
    CHECK(cli.run("color").exit_code == 2);
  }
}
