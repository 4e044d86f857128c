#include <doctest.h>

#include "glued/error.hpp"
#include "glued/suite.hpp"

using namespace glued;

namespace
{

SuiteConfig small(std::uint64_t seed)
{
  SuiteConfig cfg;
  cfg.seed = seed;
  cfg.samples = 100;
  cfg.lef_mode = "sample:2000";
  return cfg;
}

} // namespace

TEST_CASE("every suite passes over Z*Z")
{
  for (auto const &name : suite_names()) {
    auto report = run_suite(name, small(3));
    CHECK_MESSAGE(report.ok(), report.text());
    CHECK_FALSE(report.checks.empty());
  }
}

TEST_CASE("reports are deterministic in the seed")
{
  auto cfg = small(42);
  auto a = run_suite("all", cfg);
  auto b = run_suite("all", cfg);
  CHECK(a.text() == b.text());
  CHECK(a.jsonl() == b.jsonl());
}

TEST_CASE("a single check reruns with the same draws")
{
  auto cfg = small(7);
  auto full = run_suite("core", cfg);
  cfg.only = "associativity";
  auto one = run_suite("core", cfg);
  REQUIRE(one.checks.size() == 1);
  for (auto const &c : full.checks)
    if (c.name == "associativity")
      CHECK(c.detail == one.checks[0].detail);
  CHECK(one.checks[0].repro.find("--only associativity") != std::string::npos);
  CHECK(one.checks[0].repro.find("--seed 7") != std::string::npos);
}

TEST_CASE("mixed and finite contexts")
{
  auto cfg = small(5);
  cfg.right = "Z/3";
  cfg.lef_mode = "exhaustive";
  auto report = run_suite("all", cfg);
  CHECK_MESSAGE(report.ok(), report.text());
  bool skipped_commutator = false;
  for (auto const &c : report.checks)
    if (c.name == "commutator")
      skipped_commutator = c.status == SuiteCheck::Status::skip;
  CHECK(skipped_commutator);

  cfg.left = "Z/2";
  cfg.right = "Z/2";
  report = run_suite("all", cfg);
  CHECK(report.ok());
}

TEST_CASE("unknown names")
{
  CHECK_THROWS_AS(run_suite("nope", {}), PreconditionError);
  SuiteConfig cfg;
  cfg.only = "nope";
  CHECK_THROWS_AS(run_suite("core", cfg), PreconditionError);
}
