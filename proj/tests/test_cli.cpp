#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "fockcb/cli.hpp"

namespace {

struct CliResult {
  int status = 0;
  std::string out;
  std::string err;
};

CliResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int status = fockcb::run_cli(args, out, err);
  return {status, out.str(), err.str()};
}

}  // namespace

TEST_CASE("a-sequence command") {
  CliResult r = run({"aseq", "-e", "4", "-v", "0,2,3", "-p", "1|3.1|2.1.1"});
  CHECK(r.status == 0);
  CHECK(r.out == "3,2,2,1,1,3,0,0,0\n");
  CHECK(r.err.empty());
}

TEST_CASE("a-value command") {
  CliResult r = run({"avalue", "-e", "2", "-v", "0", "-p", "2"});
  CHECK(r.status == 0);
  CHECK(r.out == "-10\n");

  CliResult fractional = run({"avalue", "-e", "4", "-v", "0,2,3", "-p", "1|-|-"});
  CHECK(fractional.status == 0);
  CHECK(!fractional.out.empty());
}

TEST_CASE("flotw command") {
  CliResult r = run({"flotw", "-n", "3", "-e", "2", "-v", "0"});
  CHECK(r.status == 0);
  CHECK(r.out == "3\n2.1\n");
}

TEST_CASE("basis command") {
  CliResult r = run({"basis", "-n", "3", "-e", "2", "-v", "0"});
  CHECK(r.status == 0);
  CHECK(r.out ==
        "G(3)\n"
        "3 : 1\n"
        "1.1.1 : q\n"
        "G(2.1)\n"
        "2.1 : 1\n");
}

TEST_CASE("matrix command") {
  CliResult text = run({"matrix", "-n", "2", "-e", "2", "-v", "0"});
  CHECK(text.status == 0);
  CHECK(text.out ==
        "     2\n"
        "2    1\n"
        "1.1  1\n");

  CliResult csv = run({"matrix", "-n", "3", "-e", "2", "-v", "0", "--format", "csv"});
  CHECK(csv.status == 0);
  CHECK(csv.out ==
        ",3,2.1\n"
        "3,1,0\n"
        "2.1,0,1\n"
        "1.1.1,1,0\n");

  CliResult q_text = run({"matrix", "-n", "2", "-e", "2", "-v", "0", "--q"});
  CHECK(q_text.status == 0);
  CHECK(q_text.out ==
        "     2\n"
        "2    1\n"
        "1.1  q\n");
}

TEST_CASE("deterministic output across repeated runs") {
  CliResult first = run({"matrix", "-n", "4", "-e", "3", "-v", "0,1", "--format", "json"});
  CliResult second = run({"matrix", "-n", "4", "-e", "3", "-v", "0,1", "--format", "json"});
  CHECK(first.status == 0);
  CHECK(first.out == second.out);
}

TEST_CASE("output file") {
  std::string path = "cli_test_output.csv";
  CliResult r = run({"matrix", "-n", "2", "-e", "2", "-v", "0", "--format", "csv", "-o", path});
  CHECK(r.status == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::stringstream content;
  content << in.rdbuf();
  CHECK(content.str() == ",2\n2,1\n1.1,1\n");
  std::remove(path.c_str());
}

TEST_CASE("rejected inputs") {
  // charges outside 0 <= v_0 <= ... <= v_{d-1} < e
  CliResult bad_charge = run({"matrix", "-n", "2", "-e", "2", "-v", "3"});
  CHECK(bad_charge.status != 0);
  CHECK(bad_charge.out.empty());
  CHECK(bad_charge.err.find("0 <= v_0") != std::string::npos);

  CliResult bad_format = run({"matrix", "-n", "2", "-e", "2", "-v", "0", "--format", "xml"});
  CHECK(bad_format.status != 0);
  CHECK(!bad_format.err.empty());

  CliResult csv_q = run({"matrix", "-n", "2", "-e", "2", "-v", "0", "--q", "--format", "csv"});
  CHECK(csv_q.status != 0);

  CliResult no_command = run({});
  CHECK(no_command.status != 0);

  CliResult missing_n = run({"matrix", "-e", "2", "-v", "0"});
  CHECK(missing_n.status != 0);

  CliResult not_flotw = run({"aseq", "-e", "2", "-v", "0", "-p", "1.1"});
  CHECK(not_flotw.status != 0);
  CHECK(not_flotw.out.empty());
  CHECK(!not_flotw.err.empty());

  CliResult wrong_level = run({"aseq", "-e", "4", "-v", "0,2,3", "-p", "2.1"});
  CHECK(wrong_level.status != 0);

  CliResult bad_mp = run({"avalue", "-e", "2", "-v", "0", "-p", "1.3"});
  CHECK(bad_mp.status != 0);
}

TEST_CASE("help exits cleanly") {
  CliResult help = run({"--help"});
  CHECK(help.status == 0);
  CHECK(help.out.find("matrix") != std::string::npos);
}
