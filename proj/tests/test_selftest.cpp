#include <doctest.h>

#include <stdexcept>

#include "charbasis/selftest.hpp"

using namespace charbasis;

TEST_CASE("default suites pass") {
  for (int d = 1; d <= 3; ++d) {
    auto results = run_selftest(default_suites(), d);
    CHECK(results.size() == default_suites().size());
    for (const auto& r : results) {
      CAPTURE(r.name);
      CHECK(r.passed);
      CHECK(r.detail.empty());
      CHECK(r.seconds >= 0);
    }
  }
}

TEST_CASE("suite names are unique") {
  auto suites = default_suites();
  for (std::size_t i = 0; i < suites.size(); ++i)
    for (std::size_t j = i + 1; j < suites.size(); ++j) CHECK(suites[i].name != suites[j].name);
}

TEST_CASE("failures and exceptions are reported") {
  std::vector<SelftestSuite> suites{
      {"ok", [](int) { return std::string(); }},
      {"broken", [](int d) { return "bad at degree " + std::to_string(d); }},
      {"throws", [](int) -> std::string { throw std::runtime_error("boom"); }},
  };
  auto results = run_selftest(suites, 2);
  REQUIRE(results.size() == 3);
  CHECK(results[0].passed);
  CHECK_FALSE(results[1].passed);
  CHECK(results[1].detail == "bad at degree 2");
  CHECK_FALSE(results[2].passed);
  CHECK(results[2].detail.find("boom") != std::string::npos);
}
