#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ihg/curve.hpp"
#include "ihg/reference.hpp"

namespace ihg {

/// One factor T_label^power of a mapping class.
struct TwistLetter {
  std::string label;
  int power = 1;
  friend bool operator==(const TwistLetter&, const TwistLetter&) = default;
};

/// Product of twists about reference curves. The rightmost letter acts first.
using TwistWord = std::vector<TwistLetter>;

/// Parses "c1 c2^-1 c5^2" (also accepts "T_c1", "c_1").
TwistWord parse_twist_word(const std::string& text);
std::string format_twist_word(const TwistWord& word);

/// Image of a curve under the mapping class of the word.
CurveClass apply_twist_word(const TwistWord& word, const CurveClass& curve);

struct PoolRecipe {
  int genus = 2;
  std::vector<std::string> seeds;
  std::vector<std::string> alphabet;
  int max_word_length = 2;
  Weight weight_cap = 12;  // largest allowed edge weight
  std::uint64_t prng_seed = 0;
};

struct CurvePool {
  PoolRecipe recipe;
  std::vector<CurveClass> curves;  // ordered by total weight, then coordinates
};

/// Breadth-first orbit of the seeds under single twists (powers +1 and -1)
/// about alphabet curves, up to max_word_length twists; curves with an edge
/// weight above the cap are dropped and not expanded.
CurvePool generate_pool(const PoolRecipe& recipe);

/// Recipe used by the verification suites at genus g.
PoolRecipe default_recipe(int genus);

/// Number of worker threads for parallel loops (at least 1).
unsigned worker_count();

}  // namespace ihg
