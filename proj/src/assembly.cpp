#include "spectra/assembly.hpp"

#include <array>
#include <cmath>
#include <fstream>
#include <stdexcept>

namespace spectra {

namespace {

using Triplet = Eigen::Triplet<double>;

// P1 element matrices. With b_i = y_j - y_k, c_i = x_k - x_j (cyclic),
// K_ij = (b_i b_j + c_i c_j) / (4 A) and M = A/12 [[2,1,1],[1,2,1],[1,1,2]],
// both exact for straight triangles.
void element_matrices(const Vec2& p0, const Vec2& p1, const Vec2& p2,
                      double K[3][3], double M[3][3], double& area) {
  const double b[3] = {p1.y - p2.y, p2.y - p0.y, p0.y - p1.y};
  const double c[3] = {p2.x - p1.x, p0.x - p2.x, p1.x - p0.x};
  area = 0.5 * ((p1 - p0).cross(p2 - p0));
  if (!(area > 0.0))
    throw std::runtime_error("element_matrices: non-positive triangle area");
  const double s = 1.0 / (4.0 * area);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      K[i][j] = s * (b[i] * b[j] + c[i] * c[j]);
      M[i][j] = (i == j ? 2.0 : 1.0) * area / 12.0;
    }
}

void add_element(std::vector<Triplet>& out, const std::array<int, 3>& ids,
                 const double E[3][3], double scale) {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      out.emplace_back(ids[i], ids[j], scale * E[i][j]);
}

}  // namespace

void SparseSymmetric::write_coordinate_format(const std::string& path) const {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path);
  f.precision(17);
  for (int k = 0; k < mat.outerSize(); ++k)
    for (Eigen::SparseMatrix<double>::InnerIterator it(mat, k); it; ++it)
      if (it.row() <= it.col())
        f << it.row() << ' ' << it.col() << ' ' << it.value() << '\n';
}

double edge_arclength(const BoundaryCurve& curve, double t0, double t1) {
  // 5-point Gauss-Legendre on [t0, t1]
  static const double xg[5] = {-0.9061798459386640, -0.5384693101056831, 0.0,
                               0.5384693101056831, 0.9061798459386640};
  static const double wg[5] = {0.2369268850561891, 0.4786286704993665,
                               0.5688888888888889, 0.4786286704993665,
                               0.2369268850561891};
  const double mid = 0.5 * (t0 + t1), half = 0.5 * (t1 - t0);
  double s = 0.0;
  for (int g = 0; g < 5; ++g)
    s += wg[g] * curve.surface_measure(mid + half * xg[g]);
  return s * half;
}

Eigen::SparseMatrix<double> interface_mass(const Mesh2D& mesh,
                                           const BoundaryCurve& curve) {
  const int nb = int(mesh.interface_nodes.size());
  if (nb == 0) throw std::runtime_error("interface_mass: no interface nodes");
  std::vector<Triplet> trip;
  const double two_pi = 2.0 * M_PI;
  for (int i = 0; i < nb; ++i) {
    const int j = (i + 1) % nb;
    const double t0 = mesh.node_t[mesh.interface_nodes[i]];
    double t1 = (j == 0) ? two_pi : mesh.node_t[mesh.interface_nodes[j]];
    const double len = edge_arclength(curve, t0, t1);
    if (!(len > 0.0))
      throw std::runtime_error("interface_mass: zero-length boundary edge");
    trip.emplace_back(i, i, len / 3.0);
    trip.emplace_back(j, j, len / 3.0);
    trip.emplace_back(i, j, len / 6.0);
    trip.emplace_back(j, i, len / 6.0);
  }
  Eigen::SparseMatrix<double> m(nb, nb);
  m.setFromTriplets(trip.begin(), trip.end());
  return m;
}

void assemble_region(const Mesh2D& mesh, Region region,
                     Eigen::SparseMatrix<double>& stiffness,
                     Eigen::SparseMatrix<double>& mass) {
  const int n = mesh.node_count();
  std::vector<Triplet> kt, mt;
  double K[3][3], M[3][3], area;
  for (int e = 0; e < mesh.triangle_count(); ++e) {
    if (mesh.region[std::size_t(e)] != region) continue;
    const auto& T = mesh.triangles[std::size_t(e)];
    element_matrices(mesh.nodes[T[0]], mesh.nodes[T[1]], mesh.nodes[T[2]], K,
                     M, area);
    add_element(kt, T, K, 1.0);
    add_element(mt, T, M, 1.0);
  }
  stiffness.resize(n, n);
  stiffness.setFromTriplets(kt.begin(), kt.end());
  mass.resize(n, n);
  mass.setFromTriplets(mt.begin(), mt.end());
}

TwoPhasePencil assemble_two_phase(const Mesh2D& mesh, double alpha,
                                  double eps) {
  if (!mesh.has_layer())
    throw std::invalid_argument("assemble_two_phase: mesh has no layer");
  const double sigma = alpha * eps;
  if (!(sigma > 0.0))
    throw std::invalid_argument("assemble_two_phase: sigma = alpha*eps <= 0");

  TwoPhasePencil out;
  out.sigma = sigma;

  const int n = mesh.node_count();
  out.full_to_reduced.assign(n, 0);
  for (int id : mesh.outer_nodes) out.full_to_reduced[std::size_t(id)] = -1;
  for (int i = 0; i < n; ++i) {
    if (out.full_to_reduced[std::size_t(i)] == 0) {
      out.full_to_reduced[std::size_t(i)] = int(out.reduced_to_full.size());
      out.reduced_to_full.push_back(i);
    }
  }
  const int nr = int(out.reduced_to_full.size());

  std::vector<Triplet> at, bt;
  double K[3][3], M[3][3], area;
  double mass_sum = 0.0;
  for (int e = 0; e < mesh.triangle_count(); ++e) {
    const auto& T = mesh.triangles[std::size_t(e)];
    element_matrices(mesh.nodes[T[0]], mesh.nodes[T[1]], mesh.nodes[T[2]], K,
                     M, area);
    const double q =
        (mesh.region[std::size_t(e)] == Region::Layer) ? sigma : 1.0;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        mass_sum += M[i][j];
        const int ri = out.full_to_reduced[std::size_t(T[i])];
        const int rj = out.full_to_reduced[std::size_t(T[j])];
        if (ri < 0 || rj < 0) continue;  // symmetric elimination
        at.emplace_back(ri, rj, q * K[i][j]);
        bt.emplace_back(ri, rj, M[i][j]);
      }
  }
  const double mesh_area = mesh.total_area();
  if (std::abs(mass_sum - mesh_area) > 1e-10 * std::max(1.0, mesh_area))
    throw std::runtime_error(
        "assemble_two_phase: mass total does not match mesh area");

  out.A.mat.resize(nr, nr);
  out.A.mat.setFromTriplets(at.begin(), at.end());
  out.A.constrained = true;
  out.B.mat.resize(nr, nr);
  out.B.mat.setFromTriplets(bt.begin(), bt.end());
  out.B.constrained = true;
  return out;
}

RobinPencil assemble_robin(const Mesh2D& interior_mesh,
                           const BoundaryCurve& curve, double alpha) {
  if (interior_mesh.has_layer())
    throw std::invalid_argument(
        "assemble_robin: expected an interior-only mesh");
  if (interior_mesh.interface_nodes.empty())
    throw std::invalid_argument("assemble_robin: empty interface node set");

  Eigen::SparseMatrix<double> K, M;
  assemble_region(interior_mesh, Region::Interior, K, M);

  Eigen::SparseMatrix<double> mg = interface_mass(interior_mesh, curve);
  // scatter the interface mass into full numbering
  std::vector<Triplet> bt;
  for (int k = 0; k < mg.outerSize(); ++k)
    for (Eigen::SparseMatrix<double>::InnerIterator it(mg, k); it; ++it)
      bt.emplace_back(interior_mesh.interface_nodes[std::size_t(it.row())],
                      interior_mesh.interface_nodes[std::size_t(it.col())],
                      it.value());
  Eigen::SparseMatrix<double> boundary(interior_mesh.node_count(),
                                       interior_mesh.node_count());
  boundary.setFromTriplets(bt.begin(), bt.end());

  RobinPencil out;
  out.A.mat = K + alpha * boundary;
  out.B.mat = M;
  return out;
}

}  // namespace spectra
