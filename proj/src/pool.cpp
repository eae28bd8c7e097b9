#include "ihg/pool.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <sstream>

#include "ihg/error.hpp"
#include "ihg/kernel.hpp"
#include "ihg/parallel.hpp"

namespace ihg {

unsigned worker_count() {
  if (const char* env = std::getenv("IHG_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return static_cast<unsigned>(n);
  }
  return std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
}

TwistWord parse_twist_word(const std::string& text) {
  TwistWord word;
  std::istringstream in(text);
  std::string token;
  while (in >> token) {
    TwistLetter letter;
    if (token.rfind("T_", 0) == 0) token = token.substr(2);
    const auto caret = token.find('^');
    letter.label = token.substr(0, caret);
    if (caret != std::string::npos) {
      const std::string exp = token.substr(caret + 1);
      std::size_t used = 0;
      try {
        letter.power = std::stoi(exp, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || used != exp.size()) throw InvalidInput("bad exponent in twist word: " + token);
    }
    if (letter.label.empty()) throw InvalidInput("empty label in twist word");
    word.push_back(letter);
  }
  return word;
}

std::string format_twist_word(const TwistWord& word) {
  std::string out;
  for (const TwistLetter& l : word) {
    if (!out.empty()) out += ' ';
    out += l.label;
    if (l.power != 1) out += "^" + std::to_string(l.power);
  }
  return out;
}

CurveClass apply_twist_word(const TwistWord& word, const CurveClass& curve) {
  const ReferenceCurveSet& refs = reference_curves(curve.genus());
  CurveClass out = curve;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    out = dehn_twist(out, refs.at(it->label), it->power);
  }
  return out;
}

CurvePool generate_pool(const PoolRecipe& recipe) {
  if (recipe.max_word_length < 0) throw InvalidInput("max word length must be non-negative");
  if (recipe.weight_cap <= 0) throw InvalidInput("weight cap must be positive");
  const ReferenceCurveSet& refs = reference_curves(recipe.genus);
  std::vector<CurveClass> about;
  for (const auto& label : recipe.alphabet) about.push_back(refs.at(label));
  auto within_cap = [&](const CurveClass& c) {
    return *std::max_element(c.coords().begin(), c.coords().end()) <= recipe.weight_cap;
  };

  std::set<CurveClass> seen;
  std::vector<CurveClass> frontier;
  for (const auto& label : recipe.seeds) {
    const CurveClass& c = refs.at(label);
    if (seen.insert(c).second) frontier.push_back(c);
  }
  for (int len = 0; len < recipe.max_word_length && !about.empty(); ++len) {
    const std::size_t tasks = frontier.size() * about.size() * 2;
    std::vector<std::optional<CurveClass>> images(tasks);
    parallel_for(tasks, [&](std::size_t i) {
      const CurveClass& c = frontier[i / (2 * about.size())];
      const CurveClass& x = about[(i / 2) % about.size()];
      images[i] = dehn_twist(c, x, i % 2 == 0 ? 1 : -1);
    });
    std::vector<CurveClass> next;
    for (auto& img : images) {
      if (within_cap(*img) && seen.insert(*img).second) next.push_back(std::move(*img));
    }
    frontier = std::move(next);
  }
  CurvePool pool{recipe, {seen.begin(), seen.end()}};
  std::sort(pool.curves.begin(), pool.curves.end(), weight_order);
  return pool;
}

PoolRecipe default_recipe(int genus) {
  PoolRecipe r;
  r.genus = genus;
  const auto& refs = reference_curves(genus);
  for (const auto& [label, curve] : refs.entries()) {
    if (label[0] == 'c') {
      r.seeds.push_back(label);
      r.alphabet.push_back(label);
    }
  }
  if (genus >= 3) {
    for (const auto& [label, curve] : refs.entries()) {
      if (label.rfind("fig1_", 0) == 0) r.seeds.push_back(label);
    }
  }
  r.max_word_length = genus == 2 ? 3 : 2;
  r.weight_cap = genus == 2 ? 6 : 4;
  return r;
}

}  // namespace ihg
