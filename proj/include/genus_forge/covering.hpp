#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "genus_forge/rational.hpp"

namespace genus {

/// Nested sublattices (2^{j-1} Z)^k of Z^k, j = 1..depth.
struct Tower {
  int k = 0;
  std::vector<Rational> scales;   // 2^{j-1}
  std::vector<Rational> indices;  // [L_1 : L_j] = 2^{(j-1)k}
};

Tower tower(int k, int depth);

/// Cayley graph of Z/n_1 x ... x Z/n_k with unit generator edges +-e_i.
class TorusQuotientGraph {
 public:
  static constexpr std::size_t kDefaultVertexCap = 1'000'000;

  explicit TorusQuotientGraph(std::vector<int> moduli, std::size_t vertex_cap = kDefaultVertexCap);

  int rank() const { return static_cast<int>(moduli_.size()); }
  const std::vector<int>& moduli() const { return moduli_; }
  std::size_t vertex_count() const { return vertices_; }

  /// Eccentricity of vertex 0 by breadth-first search (all vertices are alike).
  int bfs_diameter() const;
  /// sum floor(n_i / 2)
  int closed_form_diameter() const;
  /// Diameter of the graph as a length space (edges are unit segments, points
  /// inside edges count), i.e. of the 1-skeleton of the flat torus with side
  /// lengths n_i. A half-integer, derived from the BFS distances.
  Rational length_diameter() const;

 private:
  std::vector<int> distances_from_zero() const;
  std::vector<std::size_t> strides() const;

  std::vector<int> moduli_;
  std::size_t vertices_ = 1;
};

struct CoverDiameter {
  int base_diam = 0;   // vertex diameters
  int cover_diam = 0;
  Rational base_length_diam;  // length-space diameters
  Rational cover_length_diam;
  Rational index;
  /// cover_length_diam <= index * base_length_diam
  bool inequality_holds = false;
  /// The same comparison on vertex diameters; fails for some odd moduli.
  bool vertex_inequality_holds = false;
};

/// Compares the diameter of the cover with moduli sub_factor * base_moduli
/// against [G_1 : G_j] times the base diameter. Throws TooLarge beyond vertex_cap.
CoverDiameter cover_diameter(int k, std::span<const int> base_moduli, int sub_factor,
                             std::size_t vertex_cap = TorusQuotientGraph::kDefaultVertexCap);

/// b_p(T^k) / [G_1 : G_j] for j = 1..depth; torus covers are tori.
std::vector<Rational> l2_betti_ratio(int k, int p, int depth);

}  // namespace genus
