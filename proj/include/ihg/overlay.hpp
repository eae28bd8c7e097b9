#pragma once

#include <array>
#include <vector>

#include "ihg/normal.hpp"

namespace ihg {

/// A strand point: slot index along an oriented edge.
struct SlotRef {
  int edge;
  Weight slot;
  friend bool operator==(const SlotRef&, const SlotRef&) = default;
};

/// Several normal multicurves drawn together on the triangulation.
///
/// On every edge the strands of family 0 come first (in edge orientation),
/// then family 1, and so on. Inside a triangle every normal arc becomes a
/// chord; chords of different families cross when their endpoints interleave.
/// The chords cut each triangle into cells; cells glued across edge gaps and
/// the vertex form the complementary regions of the union.
///
/// Each crossing x carries four darts 4x+d (d = 0..3) in counter-clockwise
/// order, so the rotation is d -> d+1 mod 4.
class Arrangement {
 public:
  Arrangement(const TriangulatedSurface& surface, const std::vector<Weights>& families);

  struct ChordInfo {
    int family;
    int triangle;
    std::array<SlotRef, 2> ends;
    std::array<int, 2> side_cells;  // left of end0->end1, left of end1->end0 (first/last piece)
    int num_crossings;
  };

  int num_cells() const { return num_cells_; }
  int num_crossings() const { return static_cast<int>(dart_twin_.size() / 4); }
  int num_regions() const { return static_cast<int>(region_euler_.size()); }

  const std::vector<ChordInfo>& chords() const { return chords_; }
  /// Chord index carrying strand point `slot` inside the given triangle.
  int chord_at(int triangle, const SlotRef& slot) const;

  /// Dart data: the dart at the far end of the curve arc, the cell to the left
  /// of the arc near its start, and the family of the arc.
  int dart_twin(int dart) const { return dart_twin_[dart]; }
  int dart_cell(int dart) const { return dart_cell_[dart]; }
  int dart_family(int dart) const { return dart_family_[dart]; }

  /// Regions are numbered by their least cell.
  int region_of_cell(int cell) const { return region_of_cell_[cell]; }
  int region_euler(int region) const { return region_euler_[region]; }
  int region_least_cell(int region) const { return region_least_cell_[region]; }
  int vertex_region() const { return vertex_region_; }
  /// Region containing the gap before strand `gap` on an edge (0..width).
  int region_of_gap(int edge, Weight gap) const;

  /// Strands per edge in the overlay.
  const std::vector<Weight>& widths() const { return width_; }

  /// Resolves every crossing: an arc of family 0 turns left onto family 1
  /// when sign > 0, right when sign < 0. Returns per triangle the matching of
  /// strand points produced inside it.
  std::vector<std::vector<std::array<SlotRef, 2>>> smoothing(int sign) const;

 private:
  struct Local;
  void build_triangle(int t, const std::vector<Weights>& families,
                      const std::vector<std::vector<Weight>>& offsets);
  void link_crossings();
  void build_regions();

  const TriangulatedSurface* surface_;
  std::vector<Weight> width_;
  std::vector<Local> locals_;
  std::vector<ChordInfo> chords_;
  int num_cells_ = 0;
  std::vector<int> dart_twin_, dart_cell_, dart_family_;
  std::vector<int> region_of_cell_, region_euler_, region_least_cell_;
  int vertex_region_ = -1;

 public:
  ~Arrangement();
  Arrangement(Arrangement&&) noexcept;
};

/// Geometric intersection number by overlay and bigon removal.
Weight geometric_intersection(const TriangulatedSurface& surface, const Weights& first,
                              const Weights& second);

}  // namespace ihg
