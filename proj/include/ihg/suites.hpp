#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ihg/io.hpp"

namespace ihg {

struct SuiteConfig {
  int genus = 2;
  std::uint64_t seed = 0;
  std::optional<int> samples;  // suite default when unset
  std::optional<int> max_word_length;
  std::optional<Weight> weight_cap;
};

struct SuiteResult {
  std::string check;
  bool verdict = false;
  Json details;
};

/// Checks runnable by run_suite, in the order "all" runs them.
const std::vector<std::string>& suite_names();

/// Empty if the check runs at this genus, otherwise the reason it is refused.
std::string suite_refusal(const std::string& check, int genus);

/// Pool recipe of the graph-based suites, with the config overrides applied.
PoolRecipe suite_recipe(const SuiteConfig& config);

/// Runs one check. Throws InvalidInput for unknown or refused checks.
SuiteResult run_suite(const std::string& check, const SuiteConfig& config);

/// Every check that applies at the genus; the verdict is their conjunction.
std::vector<SuiteResult> run_all_suites(const SuiteConfig& config);

/// Pools and graphs are built once per recipe and shared between suites.
const CurvePool& cached_pool(const PoolRecipe& recipe);
const ComplexGraph& cached_graph(const PoolRecipe& recipe, bool include_pants);

}  // namespace ihg
