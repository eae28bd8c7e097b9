#include "ihg/search.hpp"

#include <algorithm>

#include "ihg/error.hpp"

namespace ihg {

namespace {

bool has_parallel_pieces(const std::vector<ComplementComponent>& comps) {
  return std::any_of(comps.begin(), comps.end(), [](const ComplementComponent& c) {
    return c.genus == 0 && c.boundary.size() <= 2;
  });
}

}  // namespace

bool is_pants_decomposition(const std::vector<CurveClass>& curves) {
  if (curves.empty()) return false;
  const int g = curves.front().genus();
  if (static_cast<int>(curves.size()) != 3 * g - 3) return false;
  for (std::size_t i = 0; i < curves.size(); ++i) {
    for (std::size_t j = i + 1; j < curves.size(); ++j) {
      if (curves[i] == curves[j] || intersection_number(curves[i], curves[j]) != 0) return false;
    }
  }
  const auto comps = complement_components(curves);
  return std::all_of(comps.begin(), comps.end(), [](const ComplementComponent& c) {
    return c.genus == 0 && c.boundary.size() == 3;
  });
}

DecompositionResult complete_decomposition(
    const std::vector<CurveClass>& start, const std::vector<CurveClass>& pool,
    const std::function<bool(const CurveClass&)>& allowed,
    const std::function<bool(const std::vector<CurveClass>&)>& accept, long node_budget) {
  DecompositionResult result;
  if (start.empty()) throw InvalidInput("decomposition search needs a starting curve");
  const int g = start.front().genus();
  const std::size_t target = 3 * g - 3;
  for (std::size_t i = 0; i < start.size(); ++i) {
    for (std::size_t j = i + 1; j < start.size(); ++j) {
      if (intersection_number(start[i], start[j]) != 0) {
        result.diagnostic = "starting curves intersect";
        return result;
      }
    }
  }
  if (start.size() > target || has_parallel_pieces(complement_components(start))) {
    result.diagnostic = "starting curves are not part of any pants decomposition";
    return result;
  }

  std::vector<CurveClass> candidates;
  for (const CurveClass& c : pool) {
    if (c.genus() != g || !allowed(c)) continue;
    if (std::find(start.begin(), start.end(), c) != start.end()) continue;
    bool disjoint = true;
    for (const CurveClass& s : start) disjoint = disjoint && intersection_number(c, s) == 0;
    if (disjoint) candidates.push_back(c);
  }

  std::vector<CurveClass> current = start;
  std::function<bool(const std::vector<CurveClass>&)> dfs = [&](const std::vector<CurveClass>& open) {
    if (current.size() == target) {
      if (!is_pants_decomposition(current)) return false;
      return !accept || accept(current);
    }
    if (++result.nodes > node_budget) return false;
    for (std::size_t k = 0; k < open.size(); ++k) {
      current.push_back(open[k]);
      if (!has_parallel_pieces(complement_components(current))) {
        std::vector<CurveClass> rest;
        for (std::size_t m = k + 1; m < open.size(); ++m) {
          if (intersection_number(open[m], open[k]) == 0) rest.push_back(open[m]);
        }
        if (current.size() + rest.size() >= target && dfs(rest)) return true;
      }
      current.pop_back();
      if (result.nodes > node_budget) return false;
    }
    return false;
  };
  if (dfs(candidates)) {
    result.curves = current;
  } else {
    result.diagnostic = result.nodes > node_budget
                            ? "search budget exhausted"
                            : "pool has no completion (" + std::to_string(candidates.size()) +
                                  " admissible disjoint candidates)";
  }
  return result;
}

DecompositionResult extend_decomposition(const CurveClass& curve,
                                         const std::vector<CurveClass>& pool) {
  if (curve.is_meridian()) throw InvalidInput("cannot extend a meridian to an incompressible decomposition");
  return complete_decomposition({curve}, pool, [](const CurveClass& c) { return !c.is_meridian(); });
}

}  // namespace ihg
