#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <string>

#include <sys/wait.h>

#include "finsemi/instance_io.hpp"
#include "test_util.hpp"

namespace {

struct CliResult {
  int exit_code;
  std::string output;
};

CliResult run_cli(const std::string& args) {
  std::string cmd = std::string(FINSEMI_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name, const std::string& contents)
      : path("finsemi_cli_" + name) {
    std::ofstream out(path);
    out << contents;
  }
  ~TempFile() { std::remove(path.c_str()); }
};

std::string sample_instance_doc() {
  finsemi::json doc{
      {"name", "z20"},
      {"semiring", {{"kind", "ntrunc"}, {"r", 3}, {"d", 20}}},
      {"module", {{"kind", "zmod-action"}, {"n", 20}}},
      {"subsemimodules",
       {{"N", {{"members", {0}}}}, {"whole", {{"generators", {1}}}}}},
      {"tsets", {{"T", {{"generators", {2}}}}, {"T0", {{"members", {0, 1}}}}}},
  };
  return doc.dump();
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("classify prints the record and exits cleanly") {
    TempFile doc("classify.json", sample_instance_doc());
    CliResult r = run_cli("classify --instance " + doc.path + " --name N");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("weakly 1-absorbing prime: yes") != std::string::npos);
    CHECK(r.output.find("1-absorbing prime: no") != std::string::npos);
    CHECK(r.output.find("(2,2,5)") != std::string::npos);
  }

  TEST_CASE("classify rejects unknown and improper names with exit 2") {
    TempFile doc("classify2.json", sample_instance_doc());
    CHECK(run_cli("classify --instance " + doc.path + " --name nope").exit_code == 2);
    CHECK(run_cli("classify --instance " + doc.path + " --name whole").exit_code == 2);
    CHECK(run_cli("classify --instance missing.json --name N").exit_code == 2);
  }

  TEST_CASE("verify writes a report and exits 0 when nothing fails") {
    TempFile doc("verify.json", sample_instance_doc());
    CliResult r = run_cli("verify --instance " + doc.path +
                          " --theorem tz-ncube --theorem char-1abs --json cli_verify_out.json");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("PASS") != std::string::npos);
    finsemi::json rep = finsemi::load_json_file("cli_verify_out.json");
    CHECK(rep.at("results").size() == 2);
    CHECK(rep.at("summary").at("fail") == 0);
    std::remove("cli_verify_out.json");

    CHECK(run_cli("verify --instance " + doc.path + " --theorem bogus").exit_code == 2);

    // theorems that need missing parts are reported per-row and flip the exit code
    CliResult all = run_cli("verify --instance " + doc.path);
    CHECK(all.exit_code == 2);  // the sample document carries no homomorphism
    CHECK(all.output.find("ERROR  hom-colon") != std::string::npos);
    CHECK(all.output.find("PASS  char-1abs") != std::string::npos);
  }

  TEST_CASE("sweep of the built-in catalog is clean") {
    CliResult r = run_cli("sweep --json cli_sweep_out.json");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find(" 0 fail") != std::string::npos);
    finsemi::json rep = finsemi::load_json_file("cli_sweep_out.json");
    CHECK(rep.at("summary").at("fail") == 0);
    CHECK(rep.at("summary").at("error") == 0);
    std::remove("cli_sweep_out.json");
  }

  TEST_CASE("search serializes its finding") {
    CliResult r = run_cli("search --relation weakly-not-1abs --json cli_search_out.json");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("found: bxb-self") != std::string::npos);
    finsemi::json rep = finsemi::load_json_file("cli_search_out.json");
    CHECK(rep.at("found") == true);
    std::remove("cli_search_out.json");

    CliResult none = run_cli("search --relation prime-not-1abs");
    CHECK(none.exit_code == 0);
    CHECK(none.output.find("NONE") != std::string::npos);

    // the size cap prunes the scan: the smallest separation has total carrier 8
    CliResult capped = run_cli("search --relation weakly-not-1abs --cap 12");
    CHECK(capped.exit_code == 0);
    CHECK(capped.output.find("found: bxb-self") != std::string::npos);
    CliResult tight = run_cli("search --relation weakly-not-1abs --cap 7");
    CHECK(tight.exit_code == 0);
    CHECK(tight.output.find("NONE") != std::string::npos);

    CHECK(run_cli("search --relation bogus").exit_code == 2);
  }

  TEST_CASE("localize reports classes and collapse") {
    TempFile doc("localize.json", sample_instance_doc());
    CliResult r = run_cli("localize --instance " + doc.path + " --tset T");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("collapsed: no") != std::string::npos);

    CliResult c = run_cli("localize --instance " + doc.path + " --tset T0");
    CHECK(c.exit_code == 0);
    CHECK(c.output.find("collapsed: yes") != std::string::npos);

    CHECK(run_cli("localize --instance " + doc.path + " --tset nope").exit_code == 2);
  }

  TEST_CASE("usage errors exit with 2") {
    CHECK(run_cli("").exit_code == 2);
    CHECK(run_cli("classify").exit_code == 2);
  }
}
