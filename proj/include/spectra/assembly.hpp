#pragma once

#include <Eigen/Sparse>
#include <string>
#include <vector>

#include "spectra/geometry.hpp"
#include "spectra/mesh.hpp"

namespace spectra {

/// Assembled symmetric sparse operator. Stores the full symmetric pattern;
/// `constrained` records whether essential (Dirichlet) rows/columns have
/// been eliminated, i.e. whether the matrix lives in reduced numbering.
struct SparseSymmetric {
  Eigen::SparseMatrix<double> mat;
  bool constrained = false;

  int n() const { return int(mat.rows()); }

  /// Coordinate text export (row, col, value), upper triangle only.
  void write_coordinate_format(const std::string& path) const;
};

/// Stiffness/mass pencil of the two-phase form with the outer Dirichlet
/// boundary eliminated symmetrically. reduced_to_full/full_to_reduced map
/// between mesh node ids and pencil indices (-1 marks eliminated nodes).
struct TwoPhasePencil {
  SparseSymmetric A;
  SparseSymmetric B;
  std::vector<int> reduced_to_full;
  std::vector<int> full_to_reduced;
  double sigma = 0.0;
};

/// Robin pencil on the interior mesh: A = stiffness + alpha * (boundary mass
/// on the interface, edge-by-edge with exact arclength), B = mass. No
/// essential constraints.
struct RobinPencil {
  SparseSymmetric A;
  SparseSymmetric B;
};

/// Element conductivity is 1 on Interior triangles and sigma = alpha*eps on
/// Layer triangles; the transmission condition is carried by conformity.
TwoPhasePencil assemble_two_phase(const Mesh2D& mesh, double alpha,
                                  double eps);

RobinPencil assemble_robin(const Mesh2D& interior_mesh,
                           const BoundaryCurve& curve, double alpha);

/// Unconstrained stiffness and mass restricted to one region's triangles,
/// in full node numbering (rows of absent nodes are empty). Conductivity 1.
void assemble_region(const Mesh2D& mesh, Region region,
                     Eigen::SparseMatrix<double>& stiffness,
                     Eigen::SparseMatrix<double>& mass);

/// Boundary mass matrix on the interface nodes, in interface-local indexing
/// (row i corresponds to mesh.interface_nodes[i]). Edge lengths are exact
/// arclengths from quadrature of |p'|, not chord lengths.
Eigen::SparseMatrix<double> interface_mass(const Mesh2D& mesh,
                                           const BoundaryCurve& curve);

/// Exact arclength of the curve between parameters [t0, t1] (5-point Gauss).
double edge_arclength(const BoundaryCurve& curve, double t0, double t1);

}  // namespace spectra
