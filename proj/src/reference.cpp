#include "ihg/reference.hpp"

#include <map>
#include <memory>
#include <mutex>

#include "ihg/chords.hpp"
#include "ihg/error.hpp"
#include "ihg/kernel.hpp"

namespace ihg {

namespace {

std::string normalize_label(const std::string& label) {
  std::string out;
  for (std::size_t i = 0; i < label.size(); ++i) {
    // "c_1" -> "c1", but keep the separator in "fig1_1".
    if (label[i] == '_' && i == 1) continue;
    out += label[i];
  }
  return out;
}

CurveClass from_chords(const TriangulatedSurface& surface, const std::vector<Chord>& chords) {
  return CurveClass::from_coords(surface.genus(), coords_from_chords(surface, chords));
}

}  // namespace

ReferenceCurveSet::ReferenceCurveSet(int genus) : genus_(genus) {
  const TriangulatedSurface& surface = surface_of_genus(genus);
  std::vector<CurveClass> a, b, d;
  for (int i = 0; i < genus; ++i) {
    const int s = 4 * i;
    a.push_back(from_chords(surface, {{{s + 1, 500}, {s + 3, 500}}}));
    b.push_back(from_chords(surface, {{{s, 500}, {s + 2, 500}}}));
    if (i + 1 < genus) {
      d.push_back(from_chords(surface, {{{s + 1, 500}, {s + 4, 666}},
                                        {{s + 3, 500}, {s + 4, 333}},
                                        {{s + 5, 500}, {s + 6, 334}},
                                        {{s + 6, 667}, {s + 7, 500}}}));
    }
  }
  for (int i = 0; i < genus; ++i) entries_.push_back({"a" + std::to_string(i + 1), a[i]});
  for (int i = 0; i < genus; ++i) entries_.push_back({"b" + std::to_string(i + 1), b[i]});
  std::vector<CurveClass> chain{a.front()};
  for (int i = 0; i < genus; ++i) {
    chain.push_back(b[i]);
    if (i + 1 < genus) chain.push_back(d[i]);
  }
  chain.push_back(a.back());
  for (std::size_t k = 0; k < chain.size(); ++k) {
    entries_.push_back({"c" + std::to_string(k + 1), chain[k]});
  }
  if (genus < 3) return;

  // fig1: the a's, the d's, and the images of the middle a's under the
  // hyperelliptic involution T_c1 ... T_cn T_cn ... T_c1.
  auto involution = [&](CurveClass x) {
    for (const CurveClass& c : chain) x = dehn_twist(x, c, 1);
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) x = dehn_twist(x, *it, 1);
    return x;
  };
  std::vector<CurveClass> fig1 = a;
  fig1.insert(fig1.end(), d.begin(), d.end());
  for (int i = 1; i + 1 < genus; ++i) fig1.push_back(involution(a[i]));

  // fig2: T_a1 T_b1 carries a1 to the meridian b1 and keeps the rest off the
  // disk set.
  std::vector<CurveClass> fig2;
  for (const CurveClass& c : fig1) fig2.push_back(dehn_twist(dehn_twist(c, b[0], 1), a[0], 1));
  if (!(fig2.front() == b[0])) throw InternalError("fig2 construction missed the meridian");

  for (std::size_t k = 0; k < fig1.size(); ++k) {
    entries_.push_back({"fig1_" + std::to_string(k + 1), fig1[k]});
  }
  for (std::size_t k = 0; k < fig2.size(); ++k) {
    entries_.push_back({"fig2_" + std::to_string(k + 1), fig2[k]});
  }
}

bool ReferenceCurveSet::contains(const std::string& label) const {
  const std::string key = normalize_label(label);
  for (const auto& [name, curve] : entries_) {
    if (name == key) return true;
  }
  return false;
}

const CurveClass& ReferenceCurveSet::at(const std::string& label) const {
  const std::string key = normalize_label(label);
  for (const auto& [name, curve] : entries_) {
    if (name == key) return curve;
  }
  throw InvalidInput("unknown reference curve '" + label + "' at genus " + std::to_string(genus_));
}

std::vector<CurveClass> ReferenceCurveSet::prefixed(const std::string& prefix) const {
  std::vector<CurveClass> out;
  for (int k = 1; contains(prefix + std::to_string(k)); ++k) out.push_back(at(prefix + std::to_string(k)));
  return out;
}

std::vector<CurveClass> ReferenceCurveSet::chain() const { return prefixed("c"); }
std::vector<CurveClass> ReferenceCurveSet::fig1() const { return prefixed("fig1_"); }
std::vector<CurveClass> ReferenceCurveSet::fig2() const { return prefixed("fig2_"); }

const ReferenceCurveSet& reference_curves(int genus) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<ReferenceCurveSet>> cache;
  if (genus < 2) throw InvalidInput("genus must be at least 2");
  std::lock_guard lock(mutex);
  auto& slot = cache[genus];
  if (!slot) slot = std::make_unique<ReferenceCurveSet>(genus);
  return *slot;
}

}  // namespace ihg
