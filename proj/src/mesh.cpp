#include "spectra/mesh.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <stdexcept>

namespace spectra {

namespace {

double signed_area2(const Vec2& a, const Vec2& b, const Vec2& c) {
  return (b - a).cross(c - a);
}

Mesh2D build_impl(const BoundaryCurve& curve, double eps, int nb, int nl,
                  int m) {
  if (nb < 3) throw std::invalid_argument("build_mesh: n_boundary < 3");
  if (m < 1) throw std::invalid_argument("build_mesh: interior_levels < 1");
  if (nl > 0 && nl < 4) throw std::invalid_argument("build_mesh: n_layer < 4");

  Mesh2D mesh;
  mesh.n_boundary = nb;
  mesh.n_layer = nl;
  mesh.interior_levels = m;
  mesh.layer_thickness = (nl > 0) ? eps : 0.0;

  const int n_nodes = 1 + (m + nl) * nb;
  mesh.nodes.reserve(n_nodes);
  mesh.node_t.assign(n_nodes, std::numeric_limits<double>::quiet_NaN());
  mesh.node_tau.assign(n_nodes, std::numeric_limits<double>::quiet_NaN());

  mesh.nodes.push_back({0.0, 0.0});  // origin

  const double two_pi = 2.0 * M_PI;
  std::vector<Vec2> boundary(nb), normals(nb);
  for (int i = 0; i < nb; ++i) {
    const double t = two_pi * double(i) / double(nb);
    boundary[i] = curve.point(t);
    normals[i] = curve.normal(t);
  }

  // interior rings: scaled copies of the boundary polygon (star-shaped)
  for (int j = 1; j <= m; ++j) {
    const double f = double(j) / double(m);
    for (int i = 0; i < nb; ++i) mesh.nodes.push_back(boundary[i] * f);
  }
  // coating rows
  for (int j = 1; j <= nl; ++j) {
    const double tau = eps * double(j) / double(nl);
    for (int i = 0; i < nb; ++i)
      mesh.nodes.push_back(boundary[i] + normals[i] * tau);
  }

  auto ring_node = [nb](int ring, int i) {
    return (ring == 0) ? 0 : 1 + (ring - 1) * nb + (i % nb);
  };

  // chart coordinates on the interface and in the layer
  for (int i = 0; i < nb; ++i) {
    const double t = two_pi * double(i) / double(nb);
    const int iface = ring_node(m, i);
    mesh.node_t[iface] = t;
    mesh.node_tau[iface] = 0.0;
    for (int j = 1; j <= nl; ++j) {
      const int id = ring_node(m + j, i);
      mesh.node_t[id] = t;
      mesh.node_tau[id] = eps * double(j) / double(nl);
    }
  }

  // central fan
  for (int i = 0; i < nb; ++i)
    mesh.triangles.push_back({0, ring_node(1, i), ring_node(1, i + 1)});
  // ring-to-ring quads, split into two CCW triangles
  const int total_rings = m + nl;
  for (int j = 1; j < total_rings; ++j) {
    for (int i = 0; i < nb; ++i) {
      const int a = ring_node(j, i), b = ring_node(j, i + 1);
      const int c = ring_node(j + 1, i + 1), d = ring_node(j + 1, i);
      mesh.triangles.push_back({a, b, c});
      mesh.triangles.push_back({a, c, d});
    }
  }

  mesh.region.assign(mesh.triangles.size(), Region::Interior);
  // layer triangles are the ones in rings beyond the interface
  const std::size_t n_interior_tris = std::size_t(nb) * (1 + 2 * (m - 1));
  for (std::size_t k = n_interior_tris; k < mesh.triangles.size(); ++k)
    mesh.region[k] = Region::Layer;

  for (int i = 0; i < nb; ++i)
    mesh.interface_nodes.push_back(ring_node(m, i));
  if (nl > 0)
    for (int i = 0; i < nb; ++i)
      mesh.outer_nodes.push_back(ring_node(m + nl, i));

  for (int k = 0; k < mesh.triangle_count(); ++k) {
    if (!(mesh.triangle_area(k) > 0.0))
      throw std::runtime_error("build_mesh: inverted or degenerate triangle #" +
                               std::to_string(k));
  }
  return mesh;
}

}  // namespace

double Mesh2D::triangle_area(int tri) const {
  const auto& T = triangles[std::size_t(tri)];
  return 0.5 * signed_area2(nodes[T[0]], nodes[T[1]], nodes[T[2]]);
}

double Mesh2D::total_area() const {
  double a = 0.0;
  for (int k = 0; k < triangle_count(); ++k) a += triangle_area(k);
  return a;
}

double Mesh2D::region_area(Region r) const {
  double a = 0.0;
  for (int k = 0; k < triangle_count(); ++k)
    if (region[std::size_t(k)] == r) a += triangle_area(k);
  return a;
}

void Mesh2D::dump_csv(const std::string& node_path,
                      const std::string& tri_path) const {
  std::ofstream nf(node_path);
  if (!nf) throw std::runtime_error("cannot open " + node_path);
  nf << "id,x,y\n";
  nf.precision(17);
  for (int i = 0; i < node_count(); ++i)
    nf << i << ',' << nodes[i].x << ',' << nodes[i].y << '\n';

  std::ofstream tf(tri_path);
  if (!tf) throw std::runtime_error("cannot open " + tri_path);
  tf << "id,n0,n1,n2,tag\n";
  for (int k = 0; k < triangle_count(); ++k) {
    const auto& T = triangles[std::size_t(k)];
    tf << k << ',' << T[0] << ',' << T[1] << ',' << T[2] << ','
       << (region[std::size_t(k)] == Region::Layer ? "LAYER" : "INTERIOR")
       << '\n';
  }
}

Mesh2D build_mesh(const BoundaryCurve& curve, double eps, int n_boundary,
                  int n_layer, int interior_levels) {
  if (n_layer < 4) throw std::invalid_argument("build_mesh: n_layer must be >= 4");
  // validates the injectivity bound for the offset band
  LayerChart chart(curve, eps);
  return build_impl(curve, eps, n_boundary, n_layer, interior_levels);
}

Mesh2D build_interior_mesh(const BoundaryCurve& curve, int n_boundary,
                           int interior_levels) {
  return build_impl(curve, 0.0, n_boundary, 0, interior_levels);
}

}  // namespace spectra
