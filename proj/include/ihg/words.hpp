#pragma once

#include <string>
#include <vector>

#include "ihg/surface.hpp"

namespace ihg {

/// Cyclic word in the surface generators, freely and cyclically reduced and
/// brought to the least rotation of itself or its inverse.
struct Pi1Word {
  std::vector<Pi1Letter> letters;
  friend bool operator==(const Pi1Word&, const Pi1Word&) = default;
};

/// Image of a curve in the free group pi_1(H_g) on x_1..x_g, in the same
/// cyclic canonical form. Letters reuse Pi1Letter with generator = handle.
struct HandlebodyWord {
  std::vector<Pi1Letter> letters;
  bool empty() const { return letters.empty(); }
  friend bool operator==(const HandlebodyWord&, const HandlebodyWord&) = default;
};

/// Free reduction followed by cyclic reduction.
std::vector<Pi1Letter> cyclically_reduce(std::vector<Pi1Letter> word);

/// Least rotation of the word or of its inverse (word assumed cyclically reduced).
std::vector<Pi1Letter> canonical_cyclic(const std::vector<Pi1Letter>& word);

/// Drops b-letters and sends a_i to x_i.
HandlebodyWord to_handlebody(const std::vector<Pi1Letter>& surface_word);

/// Exponent sum per generator.
std::vector<long> exponent_sums(const std::vector<Pi1Letter>& word, int num_generators);

/// "a1 b2^-1" / "x1 x1".
std::string format_surface_word(const std::vector<Pi1Letter>& word);
std::string format_handlebody_word(const HandlebodyWord& word);

/// Signed-letter arrays for serialization: "a1", "-b2", "x1", "-x2".
std::vector<std::string> surface_letters(const std::vector<Pi1Letter>& word);
std::vector<std::string> handlebody_letters(const HandlebodyWord& word);

/// True iff the cyclic word is a proper power u^k with k >= 2.
bool is_proper_power(const std::vector<Pi1Letter>& word);

}  // namespace ihg
