#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ihg/kernel.hpp"

namespace ihg {

/// True iff the curves are pairwise disjoint, distinct and non-parallel, and
/// cut the surface into pairs of pants.
bool is_pants_decomposition(const std::vector<CurveClass>& curves);

struct DecompositionResult {
  std::optional<std::vector<CurveClass>> curves;  // start curves first
  std::string diagnostic;
  long nodes = 0;
};

/// Depth-first completion of `start` to a pants decomposition using pool
/// curves that pass `allowed`; `accept` vets complete decompositions.
DecompositionResult complete_decomposition(
    const std::vector<CurveClass>& start, const std::vector<CurveClass>& pool,
    const std::function<bool(const CurveClass&)>& allowed,
    const std::function<bool(const std::vector<CurveClass>&)>& accept = {},
    long node_budget = 200000);

/// Completes a non-meridian curve to a decomposition by non-meridian pool
/// curves. Rejects a meridian. Failure only means the pool was insufficient.
DecompositionResult extend_decomposition(const CurveClass& curve,
                                         const std::vector<CurveClass>& pool);

}  // namespace ihg
