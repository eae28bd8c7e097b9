#include "ihg/words.hpp"

#include <algorithm>

namespace ihg {

namespace {

bool cancels(const Pi1Letter& x, const Pi1Letter& y) {
  return x.generator == y.generator && x.sign == -y.sign;
}

std::vector<Pi1Letter> inverse(const std::vector<Pi1Letter>& word) {
  std::vector<Pi1Letter> out(word.rbegin(), word.rend());
  for (auto& l : out) l.sign = -l.sign;
  return out;
}

}  // namespace

std::vector<Pi1Letter> cyclically_reduce(std::vector<Pi1Letter> word) {
  std::vector<Pi1Letter> stack;
  for (const auto& l : word) {
    if (!stack.empty() && cancels(stack.back(), l)) stack.pop_back();
    else stack.push_back(l);
  }
  std::size_t lo = 0, hi = stack.size();
  while (hi - lo >= 2 && cancels(stack[lo], stack[hi - 1])) {
    ++lo;
    --hi;
  }
  return {stack.begin() + lo, stack.begin() + hi};
}

std::vector<Pi1Letter> canonical_cyclic(const std::vector<Pi1Letter>& word) {
  if (word.empty()) return word;
  std::vector<Pi1Letter> best;
  for (const auto& base : {word, inverse(word)}) {
    for (std::size_t r = 0; r < base.size(); ++r) {
      std::vector<Pi1Letter> rot(base.begin() + r, base.end());
      rot.insert(rot.end(), base.begin(), base.begin() + r);
      if (best.empty() || rot < best) best = std::move(rot);
    }
  }
  return best;
}

HandlebodyWord to_handlebody(const std::vector<Pi1Letter>& surface_word) {
  std::vector<Pi1Letter> image;
  for (const auto& l : surface_word) {
    if (l.generator % 2 == 0) image.push_back({l.generator / 2, l.sign});
  }
  return {canonical_cyclic(cyclically_reduce(std::move(image)))};
}

std::vector<long> exponent_sums(const std::vector<Pi1Letter>& word, int num_generators) {
  std::vector<long> sums(num_generators, 0);
  for (const auto& l : word) sums[l.generator] += l.sign;
  return sums;
}

std::string format_surface_word(const std::vector<Pi1Letter>& word) {
  std::string out;
  for (const auto& l : word) {
    if (!out.empty()) out += ' ';
    out += generator_name(l.generator);
    if (l.sign < 0) out += "^-1";
  }
  return out.empty() ? "1" : out;
}

std::string format_handlebody_word(const HandlebodyWord& word) {
  std::string out;
  for (const auto& l : word.letters) {
    if (!out.empty()) out += ' ';
    out += "x" + std::to_string(l.generator + 1);
    if (l.sign < 0) out += "^-1";
  }
  return out.empty() ? "1" : out;
}

std::vector<std::string> surface_letters(const std::vector<Pi1Letter>& word) {
  std::vector<std::string> out;
  for (const auto& l : word) out.push_back((l.sign < 0 ? "-" : "") + generator_name(l.generator));
  return out;
}

std::vector<std::string> handlebody_letters(const HandlebodyWord& word) {
  std::vector<std::string> out;
  for (const auto& l : word.letters) {
    out.push_back((l.sign < 0 ? "-x" : "x") + std::to_string(l.generator + 1));
  }
  return out;
}

bool is_proper_power(const std::vector<Pi1Letter>& word) {
  const std::size_t n = word.size();
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    bool periodic = true;
    for (std::size_t i = d; i < n && periodic; ++i) periodic = word[i] == word[i - d];
    if (periodic) return true;
  }
  return false;
}

}  // namespace ihg
