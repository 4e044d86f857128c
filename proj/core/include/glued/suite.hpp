#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace glued
{

struct SuiteConfig
{
  std::uint64_t seed = 1;
  std::string left = "Z";
  std::string right = "Z";
  /// Random instances per sampled property.
  std::uint64_t samples = 1000;
  /// Cap on pair checks in the LEF suite.
  std::uint64_t budget = 10'000'000;
  std::int64_t lef_n = 1;
  /// "exhaustive" or "sample:K" for LEF multiplicativity.
  std::string lef_mode = "exhaustive";
  std::optional<std::uint64_t> modulus;
  /// Run only the named check.
  std::optional<std::string> only;
};

struct SuiteCheck
{
  enum class Status
  {
    pass,
    fail,
    skip
  };

  std::string suite;
  std::string name;
  Status status = Status::pass;
  std::string detail;
  /// Command line that re-runs just this check with the same inputs.
  std::string repro;
};

struct SuiteReport
{
  std::vector<SuiteCheck> checks;

  bool ok() const;
  std::size_t failures() const;
  std::string text() const;
  std::string jsonl() const;
};

/// core, finite, cube, lef, dynamics.
std::vector<std::string> const &suite_names();

/// Runs one suite or "all". Throws PreconditionError for an unknown name.
/// Reports are deterministic in (name, cfg).
SuiteReport run_suite(std::string_view name, SuiteConfig const &cfg);

} // namespace glued
