#pragma once

#include <array>
#include <string>
#include <vector>

#include "spectra/geometry.hpp"

namespace spectra {

enum class Region : int { Interior = 0, Layer = 1 };

/// Conforming triangulation of a star-shaped domain, optionally extended by
/// a structured coating ring. Node layout (fixed by construction):
///   index 0                    : origin
///   1 .. m*nb                  : interior rings, ring j at radius fraction
///                                j/m of the boundary point, nb nodes each
///   ring m                     : the interface (tau = 0)
///   m*nb+1 .. (m+nl)*nb        : layer rows tau_j = j*eps/nl, j = 1..nl
/// The interior-only mesh of the same (curve, nb, m) uses identical indices
/// for the shared nodes, so fields transfer between the two meshes verbatim.
struct Mesh2D {
  std::vector<Vec2> nodes;
  std::vector<std::array<int, 3>> triangles;  // counterclockwise
  std::vector<Region> region;                 // per triangle

  std::vector<int> interface_nodes;  // on the curve, ordered by parameter t
  std::vector<int> outer_nodes;      // on the outer boundary (tau = eps)

  /// Chart coordinates for interface/layer nodes; NaN for interior nodes.
  std::vector<double> node_t;
  std::vector<double> node_tau;

  double layer_thickness = 0.0;  // 0 for interior-only meshes
  int n_boundary = 0;
  int n_layer = 0;
  int interior_levels = 0;

  int node_count() const { return int(nodes.size()); }
  int triangle_count() const { return int(triangles.size()); }
  bool has_layer() const { return n_layer > 0; }

  /// Number of nodes belonging to the closed interior region (including the
  /// interface row). These come first in the node numbering.
  int interior_node_count() const { return 1 + interior_levels * n_boundary; }

  double triangle_area(int tri) const;
  double total_area() const;
  double region_area(Region r) const;

  /// Node/triangle CSV dump for external visualization:
  ///   nodes:     id,x,y
  ///   triangles: id,n0,n1,n2,tag
  void dump_csv(const std::string& node_path,
                const std::string& tri_path) const;
};

/// Structured mesh of the coated domain: a mapped radial-angular interior
/// with a central fan, plus an n_boundary x n_layer quad-split coating ring
/// sharing the interface nodes verbatim.
Mesh2D build_mesh(const BoundaryCurve& curve, double eps, int n_boundary,
                  int n_layer, int interior_levels);

/// Interior-only variant (no coating ring); node indices of the shared
/// region coincide with build_mesh output for equal (curve, n_boundary,
/// interior_levels).
Mesh2D build_interior_mesh(const BoundaryCurve& curve, int n_boundary,
                           int interior_levels);

}  // namespace spectra
