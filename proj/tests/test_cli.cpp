#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <json.hpp>
#include <string>

#include "charbasis/symfunc.hpp"

using namespace charbasis;

namespace {

struct Run {
  int code;
  std::string out;
};

// Runs the CLI with stderr discarded.
Run cli(const std::string& args) {
  std::string cmd = std::string(CHARBASIS_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

bool has_line(const std::string& out, const std::string& line) {
  return ("\n" + out).find("\n" + line + "\n") != std::string::npos;
}

}  // namespace

TEST_CASE("expand") {
  auto r = cli("expand 'ht[2,1]*st[2,2]' --basis st");
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "st[4] 6"));
  r = cli("expand 'st[1]' --basis h");
  CHECK(r.out == "h[] -1\nh[1] 1\n");
  CHECK(cli("expand 'st[]' --basis st").out == "st[] 1\n");
  CHECK(cli("expand 'st[1]'").out == "st[1] 1\n");
  CHECK(cli("expand '0*h[1]'").out == "0\n");
}

TEST_CASE("coeff") {
  CHECK(cli("coeff 'h[2,1]*st[2,2]' --of 'st[4]'").out == "8\n");
  CHECK(cli("coeff 'ht[2]*ht[1]*st[2,2]' --of 'st[4]'").out == "7\n");
  CHECK(cli("coeff 'st[2]*st[1]*st[2,2]' --of 'st[4]'").out == "5\n");
  CHECK(cli("coeff 'st[3]' --of 'st[3]'").out == "1\n");
  CHECK(cli("coeff 'h[2]' --of 'p[1,1]'").out == "1/2\n");
  CHECK(cli("coeff 'h[1,1]@h[1,1]' --of 's[2]'").out == "2\n");
}

TEST_CASE("tableaux") {
  CHECK(cli("tableaux --gamma [4] --lambda [2,2] --alpha [2,1] --profile pair --lattice").out == "6\n");
  CHECK(cli("tableaux --gamma [4] --lambda [2,2] --alpha [2,1] --profile multiset --lattice").out == "8\n");
  CHECK(cli("tableaux --gamma [] --lambda [] --alpha []").out == "1\n");
  auto r = cli("tableaux --gamma [1] --lambda [1] --alpha [1] --print");
  CHECK(r.code == 0);
  CHECK(r.out == "2\n\n[1~|1]\n[.]\n\n[1~]\n[.] [1]\n");
}

TEST_CASE("gbar and dims") {
  CHECK(cli("gbar --lambda [1] --mu [1]").out == "st[] 1\nst[1] 1\nst[2] 1\nst[1,1] 1\n");
  CHECK(cli("gbar --lambda [2,1] --mu [3,1,1] --nu [4,2,1,1]").out == "2\n");
  CHECK(cli("dims --algebra partition --r 2 --lambda []").out == "2\n");
  CHECK(cli("dims --algebra quasi-partition --r 2 --lambda [2]").out == "1\n");
  CHECK(cli("dims --r 1").out == "[] 1\n[1] 1\n");
}

TEST_CASE("selftest") {
  auto r = cli("selftest --max-degree 3");
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "12/12 suites passed"));
  CHECK(cli("--quiet selftest --max-degree 1").out.empty());
  CHECK(cli("selftest --max-degree 0").code == 1);
}

TEST_CASE("json output") {
  auto r = cli("--json expand 'h[2,1]*st[2,2]'");
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  SymExpr f = symexpr_from_json(j);
  CHECK(f.basis() == Basis::kST);
  CHECK(f.coeff({4}) == 8);
  CHECK(nlohmann::json::parse(cli("--json coeff 'st[3]' --of 'st[3]'").out)["coeff"] == "1");
  auto t = nlohmann::json::parse(cli("--json tableaux --gamma [4] --lambda [2,2] --alpha [2,1] --lattice --print").out);
  CHECK(t["count"] == 8);
  CHECK(t["tableaux"].size() == 8);
  auto s = nlohmann::json::parse(cli("--json selftest --max-degree 1").out);
  CHECK(s["failed"] == 0);
}

TEST_CASE("exit codes") {
  CHECK(cli("").code == 2);
  CHECK(cli("frobnicate").code == 2);
  CHECK(cli("coeff 'st[3]'").code == 2);
  CHECK(cli("expand").code == 2);
  CHECK(cli("--help").code == 0);
  CHECK(cli("expand 'h[1,2]'").code == 1);
  CHECK(cli("expand 'h[2]@h[1]'").code == 1);
  CHECK(cli("expand 'h[1]' --basis q").code == 1);
  CHECK(cli("tableaux --profile bag").code == 1);
  CHECK(cli("dims --algebra brauer --r 2").code == 1);
  CHECK(cli("dims --r x").code == 2);
}

TEST_CASE("output is deterministic") {
  const std::string args = "--json tableaux --gamma [3,3] --lambda [4,2] --alpha [1,2,1] --profile pair --lattice --print";
  CHECK(cli(args).out == cli(args).out);
  CHECK(cli("expand 'st[2]*st[2,1]'").out == cli("expand 'st[2]*st[2,1]'").out);
}
