// charbasis: command-line front end for the s~ / h~ library.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "charbasis/expr.hpp"
#include "charbasis/mct.hpp"
#include "charbasis/oracles.hpp"
#include "charbasis/selftest.hpp"
#include "charbasis/stable_bases.hpp"

using namespace charbasis;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kComputationError = 1;
constexpr int kUsageError = 2;

struct Globals {
  bool json = false;
  bool quiet = false;
};

void print_expr(const SymExpr& f, const Globals& g) {
  if (g.json) {
    std::cout << to_json(f).dump() << "\n";
  } else if (f.is_zero()) {
    std::cout << "0\n";
  } else {
    std::cout << f.to_string();
  }
}

int cmd_expand(const Globals& g, const std::string& text, const std::string& basis) {
  print_expr(change_basis(evaluate(text), parse_basis(basis)), g);
  return kOk;
}

int cmd_coeff(const Globals& g, const std::string& text, const std::string& of) {
  auto [basis, index] = parse_atom(of);
  Rational c = change_basis(evaluate(text), basis).coeff(index);
  if (g.json)
    std::cout << json{{"of", std::string(to_string(basis)) + index.to_string()}, {"coeff", to_string(c)}}.dump()
              << "\n";
  else
    std::cout << to_string(c) << "\n";
  return kOk;
}

int cmd_tableaux(const Globals& g, const std::string& gamma, const std::string& lambda, const std::string& alpha,
                 const std::string& profile, bool lattice, bool print) {
  auto ts = enumerate_mct(Partition::parse(gamma), Partition::parse(lambda), Composition::parse(alpha),
                          parse_profile(profile), lattice);
  if (g.json) {
    json out{{"count", ts.size()}};
    if (print) {
      json list = json::array();
      for (const auto& t : ts) list.push_back(t.render());
      out["tableaux"] = list;
    }
    std::cout << out.dump() << "\n";
    return kOk;
  }
  std::cout << ts.size() << "\n";
  if (print)
    for (const auto& t : ts) std::cout << "\n" << t.render();
  return kOk;
}

int cmd_gbar(const Globals& g, const std::string& lambda, const std::string& mu, const std::string& nu) {
  const Partition l = Partition::parse(lambda);
  const Partition m = Partition::parse(mu);
  if (nu.empty()) {
    print_expr(gbar(l, m), g);
    return kOk;
  }
  Integer c = gbar_coeff(l, m, Partition::parse(nu));
  if (g.json)
    std::cout << json{{"coeff", c.get_str()}}.dump() << "\n";
  else
    std::cout << c.get_str() << "\n";
  return kOk;
}

int cmd_dims(const Globals& g, const std::string& kind, int r, const std::string& lambda) {
  if (kind != "partition" && kind != "quasi-partition") throw InvalidInput("unknown algebra '" + kind + "'");
  if (r < 0) throw InvalidInput("r must be nonnegative");
  auto dim = [&](const Partition& l) { return kind == "partition" ? partition_algebra_dim(l, r) : quasi_partition_dim(l, r); };
  std::vector<std::pair<Partition, Integer>> rows;
  if (!lambda.empty()) {
    rows.emplace_back(Partition::parse(lambda), 0);
  } else {
    for (const auto& l : partitions_up_to(r)) rows.emplace_back(l, 0);
  }
  for (auto& [l, d] : rows) d = dim(l);
  if (lambda.empty()) std::erase_if(rows, [](const auto& row) { return row.second == 0; });
  if (g.json) {
    json list = json::array();
    for (const auto& [l, d] : rows) list.push_back({{"partition", l.vec()}, {"dim", d.get_str()}});
    std::cout << json{{"algebra", kind}, {"r", r}, {"dims", list}}.dump() << "\n";
  } else if (!lambda.empty()) {
    std::cout << rows.front().second.get_str() << "\n";
  } else {
    for (const auto& [l, d] : rows) std::cout << l.to_string() << " " << d.get_str() << "\n";
  }
  return kOk;
}

int cmd_selftest(const Globals& g, int max_degree) {
  if (max_degree < 1) throw InvalidInput("--max-degree must be at least 1");
  auto results = run_selftest(default_suites(), max_degree);
  int failed = 0;
  json list = json::array();
  for (const auto& r : results) {
    if (!r.passed) ++failed;
    list.push_back({{"suite", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    if (!g.json && (!g.quiet || !r.passed))
      std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << (r.passed ? "" : ": " + r.detail) << "\n";
  }
  if (g.json)
    std::cout << json{{"max_degree", max_degree}, {"suites", list}, {"failed", failed}}.dump() << "\n";
  else if (!g.quiet)
    std::cout << results.size() - failed << "/" << results.size() << " suites passed\n";
  return failed ? kComputationError : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact arithmetic with the character bases s~ and h~ of symmetric functions"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_flag("--json", g.json, "Machine-readable output");
  app.add_flag("--quiet", g.quiet, "Only print results and failures");

  std::function<int()> action;

  std::string expr_text, basis = "st", of;
  auto* expand = app.add_subcommand("expand", "Expand an expression in a basis");
  expand->add_option("expr", expr_text, "Expression, e.g. 'h[2,1]*st[2,2]'")->required();
  expand->add_option("--basis", basis, "h, p, s, ht or st")->capture_default_str();
  expand->callback([&] { action = [&] { return cmd_expand(g, expr_text, basis); }; });

  auto* coeff = app.add_subcommand("coeff", "Coefficient of one basis element");
  coeff->add_option("expr", expr_text, "Expression")->required();
  coeff->add_option("--of", of, "Basis element, e.g. 'st[4]'")->required();
  coeff->callback([&] { action = [&] { return cmd_coeff(g, expr_text, of); }; });

  std::string gamma = "[]", lambda = "[]", alpha = "[]", profile = "multiset";
  bool lattice = false, print = false;
  auto* tableaux = app.add_subcommand("tableaux", "Count multiset-valued tableaux");
  tableaux->add_option("--gamma", gamma, "Shape above the first row")->capture_default_str();
  tableaux->add_option("--lambda", lambda, "Barred content")->capture_default_str();
  tableaux->add_option("--alpha", alpha, "Unbarred content (a composition)")->capture_default_str();
  tableaux->add_option("--profile", profile, "multiset, set, set-no-singleton-row1 or pair")->capture_default_str();
  tableaux->add_flag("--lattice", lattice, "Keep lattice tableaux only");
  tableaux->add_flag("--print", print, "Print the tableaux");
  tableaux->callback([&] { action = [&] { return cmd_tableaux(g, gamma, lambda, alpha, profile, lattice, print); }; });

  std::string gl, gm, gn;
  auto* gb = app.add_subcommand("gbar", "Product s~_lambda s~_mu, or one coefficient of it");
  gb->add_option("--lambda", gl, "First index")->required();
  gb->add_option("--mu", gm, "Second index")->required();
  gb->add_option("--nu", gn, "Only this coefficient");
  gb->callback([&] { action = [&] { return cmd_gbar(g, gl, gm, gn); }; });

  std::string kind = "partition", dl;
  int r = 0;
  auto* dims = app.add_subcommand("dims", "Irreducible dimensions of partition and quasi-partition algebras");
  dims->add_option("--algebra", kind, "partition or quasi-partition")->capture_default_str();
  dims->add_option("--r", r, "Number of tensor factors")->required();
  dims->add_option("--lambda", dl, "Only this irreducible");
  dims->callback([&] { action = [&] { return cmd_dims(g, kind, r, dl); }; });

  int max_degree = 3;
  auto* selftest = app.add_subcommand("selftest", "Run the built-in invariant suites");
  selftest->add_option("--max-degree", max_degree, "Degree bound for the suites")->capture_default_str();
  selftest->callback([&] { action = [&] { return cmd_selftest(g, max_degree); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  try {
    return action();
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kComputationError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kComputationError;
  }
}
