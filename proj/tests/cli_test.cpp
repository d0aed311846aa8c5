#include <catch2/catch_amalgamated.hpp>

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include "rsmat/io.hpp"
#include "rsmat/matroid.hpp"

using namespace rsmat;
using nlohmann::json;

namespace {

struct RunResult {
  int status;
  std::string out;
};

// runs the built binary; stderr is folded into the captured stream
RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(RSMAT_CLI_PATH) + " " + args + " 2>&1";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  char buf[4096];
  std::size_t k;
  while ((k = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, k);
  int raw = pclose(p);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

const std::string kPartitionFile = "cli_partition.txt";
const std::string kMatrixFile = "cli_matrix.txt";
const std::string kZeroColFile = "cli_zerocol.txt";

void write_fixtures() {
  std::ofstream(kPartitionFile) << "universe x1 x2 x3 x4 x5\n"
                                   "block x1 x3\n"
                                   "block x2 x4 x5\n";
  std::ofstream(kMatrixFile) << "field gf2\n"
                                "1 0 0 1 1 0\n"
                                "0 1 0 1 0 1\n"
                                "0 0 1 0 1 1\n";
  std::ofstream(kZeroColFile) << "field gf2\n"
                                 "1 0\n"
                                 "1 0\n";
}

Partition fixture_partition() {
  Universe u = Universe::standard(5);
  return Partition(u, {ElementSet(u, {0, 2}), ElementSet(u, {1, 3, 4})});
}

ExactMatrix fixture_matrix(const FieldSpec& spec) {
  return ExactMatrix::from_int_rows(spec,
                                    {{1, 0, 0, 1, 1, 0}, {0, 1, 0, 1, 0, 1}, {0, 0, 1, 0, 1, 1}});
}

}  // namespace

TEST_CASE("approximations print canonical sets") {
  write_fixtures();
  auto lower = run_cli("approx " + kPartitionFile + " x1,x2,x3 lower");
  CHECK(lower.status == 0);
  CHECK(lower.out == "x1 x3\n");

  auto upper = run_cli("approx " + kPartitionFile + " x1,x2,x3 upper");
  CHECK(upper.status == 0);
  CHECK(upper.out == "x1 x2 x3 x4 x5\n");

  auto empty = run_cli("approx " + kPartitionFile + " \"\" lower");
  CHECK(empty.status == 0);
  CHECK(empty.out.empty());

  auto structured = run_cli("approx " + kPartitionFile + " x1,x2,x3 lower --format structured");
  CHECK(structured.status == 0);
  CHECK(json::parse(structured.out) == json::parse(R"({"set":["x1","x3"]})"));
}

TEST_CASE("encode prints the canonical matrix text") {
  write_fixtures();
  auto r = run_cli("compute encode " + kPartitionFile);
  CHECK(r.status == 0);
  CHECK(r.out ==
        "field gf2\n"
        "labels x1 x2 x3 x4 x5\n"
        "1 0 1 0 0\n"
        "0 1 0 1 1\n");

  auto s = run_cli("compute encode " + kPartitionFile + " --format structured");
  auto doc = json::parse(s.out);
  CHECK(doc["matrix"]["field"] == "gf2");
  CHECK(doc["matrix"]["rows"][0] == json::parse(R"(["1","0","1","0","0"])"));

  auto gf3 = run_cli("compute encode " + kPartitionFile + " --field gf3");
  CHECK(gf3.out.substr(0, 9) == "field gf3");
}

TEST_CASE("compute paths match direct library calls byte for byte") {
  write_fixtures();
  auto gf2 = FieldSpec::binary();
  Partition P = fixture_partition();

  CHECK(run_cli("compute circuits " + kMatrixFile).out ==
        format_family(circuits(VectorMatroid(fixture_matrix(gf2)))));
  CHECK(run_cli("compute circuits " + kMatrixFile + " --field q").out ==
        format_family(circuits(VectorMatroid(fixture_matrix(FieldSpec::rationals())))));
  CHECK(run_cli("compute bases " + kMatrixFile).out ==
        format_family(bases(VectorMatroid(fixture_matrix(gf2)))));
  CHECK(run_cli("compute circuits " + kPartitionFile).out ==
        format_family(partition_circuits(P)));
  CHECK(run_cli("compute bases " + kPartitionFile).out == format_family(partition_bases(P)));
  CHECK(run_cli("compute nullspace-min " + kPartitionFile).out ==
        format_family(circuits_via_nullspace(encode_matrix(P))));
  CHECK(run_cli("compute ones-min " + kPartitionFile).out ==
        format_family(bases_via_ones(encode_matrix(P))));
  CHECK(run_cli("compute relation " + kPartitionFile).out ==
        format_relation(relation_from_matrix(encode_matrix(P))));
}

TEST_CASE("the circuit family splits by field") {
  write_fixtures();
  auto triple = json::parse(R"(["x4","x5","x6"])");
  auto contains_triple = [&](const RunResult& r) {
    auto family = json::parse(r.out)["family"];
    return std::find(family.begin(), family.end(), triple) != family.end();
  };
  CHECK(contains_triple(run_cli("compute circuits " + kMatrixFile + " --format structured")));
  CHECK_FALSE(contains_triple(
      run_cli("compute circuits " + kMatrixFile + " --field q --format structured")));
}

TEST_CASE("membership verdicts carry witnesses") {
  write_fixtures();
  auto zero = run_cli("compute is-bdm " + kZeroColFile);
  CHECK(zero.status == 0);
  CHECK(zero.out == "non-member\nwitness zero column: x2\n");

  auto circuit = run_cli("compute is-bdm " + kMatrixFile + " --format structured");
  auto doc = json::parse(circuit.out);
  CHECK(doc["member"] == false);
  CHECK(doc["witness"].contains("set"));

  auto member = run_cli("compute is-bdm " + kPartitionFile);
  CHECK(member.out == "member\n");
}

TEST_CASE("independence checks read the subset flag") {
  write_fixtures();
  CHECK(run_cli("compute indep-check " + kPartitionFile + " --set x1,x2").out == "independent\n");
  CHECK(run_cli("compute indep-check " + kPartitionFile + " --set x2,x4").out == "dependent\n");
  CHECK(run_cli("compute indep-check " + kMatrixFile + " --set x4,x5,x6").out == "dependent\n");
  auto structured =
      run_cli("compute indep-check " + kMatrixFile + " --set x1,x2 --format structured");
  CHECK(json::parse(structured.out) == json::parse(R"({"independent":true})"));

  auto missing = run_cli("compute indep-check " + kMatrixFile);
  CHECK(missing.status == 2);
  CHECK(missing.out.find("error: ParseError") != std::string::npos);
}

TEST_CASE("verify reports pass and stay reproducible") {
  auto t3 = run_cli("verify t3 --max-n 3");
  CHECK(t3.status == 0);
  CHECK(t3.out.rfind("verify t3: instances=8 failures=0 seed=42 time=", 0) == 0);

  auto a = run_cli("verify t2 --max-n 5 --samples 20 --format structured");
  auto b = run_cli("verify t2 --max-n 5 --samples 20 --format structured");
  REQUIRE(a.status == 0);
  REQUIRE(b.status == 0);
  auto da = json::parse(a.out)["reports"][0];
  auto db = json::parse(b.out)["reports"][0];
  CHECK(da["id"] == "t2");
  CHECK(da["instances"] == 30);
  CHECK(da["failures"].empty());
  CHECK(da["seed"] == 42);
  da.erase("seconds");
  db.erase("seconds");
  CHECK(da == db);

  auto reseeded = run_cli("verify t2 --max-n 5 --samples 20 --seed 99 --format structured");
  auto dr = json::parse(reseeded.out)["reports"][0];
  CHECK(dr["seed"] == 99);
  CHECK(dr["failures"].empty());

  auto all = run_cli("verify all --max-n 3 --samples 6 --format structured");
  CHECK(all.status == 0);
  CHECK(json::parse(all.out)["reports"].size() == 5);
}

TEST_CASE("failures exit nonzero with a coded message") {
  write_fixtures();
  auto missing = run_cli("compute circuits no_such_file.txt");
  CHECK(missing.status == 2);
  CHECK(missing.out.find("error: ParseError") != std::string::npos);

  auto wrong_kind = run_cli("compute encode " + kMatrixFile);
  CHECK(wrong_kind.status == 2);
  CHECK(wrong_kind.out.find("error: ParseError: encode needs a partition input") !=
        std::string::npos);

  auto big = run_cli("verify t1 --max-n 13");
  CHECK(big.status == 2);
  CHECK(big.out.find("error: UniverseTooLarge") != std::string::npos);
  CHECK(big.out.find("12") != std::string::npos);

  auto bad_field = run_cli("compute circuits " + kMatrixFile + " --field gf4");
  CHECK(bad_field.status == 2);
  CHECK(bad_field.out.find("error: NonPrimeModulus") != std::string::npos);

  auto bad_flag = run_cli("verify nope");
  CHECK(bad_flag.status != 0);

  auto no_sub = run_cli("");
  CHECK(no_sub.status != 0);
}

TEST_CASE("identical invocations produce identical bytes") {
  write_fixtures();
  for (const std::string& args :
       {"compute circuits " + kMatrixFile, "compute relation " + kPartitionFile,
        "compute encode " + kPartitionFile + " --format structured"}) {
    auto first = run_cli(args);
    auto second = run_cli(args);
    CHECK(first.status == second.status);
    CHECK(first.out == second.out);
  }
}
