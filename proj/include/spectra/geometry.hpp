#pragma once

#include <string>
#include <vector>

namespace spectra {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  Vec2() = default;
  Vec2(double x_, double y_) : x(x_), y(y_) {}

  Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
  Vec2 operator*(double s) const { return {x * s, y * s}; }
  double dot(const Vec2& o) const { return x * o.x + y * o.y; }
  double cross(const Vec2& o) const { return x * o.y - y * o.x; }
  double norm() const;
};

/// A smooth, closed, simple, positively oriented interface curve in the
/// plane, parametrized over [0, 2pi). Supplies analytic first and second
/// derivatives; curvature is signed so that a counterclockwise circle with
/// outward normal has curvature +1/R.
class BoundaryCurve {
 public:
  static BoundaryCurve circle(double R);
  static BoundaryCurve ellipse(double a, double b);
  /// Star-shaped radial profile rho(t) = rho0 + sum_k (c_k cos((k+1)t)
  /// + s_k sin((k+1)t)); derivatives are evaluated analytically from the
  /// coefficients.
  static BoundaryCurve fourier(double rho0, std::vector<double> cos_coeffs,
                               std::vector<double> sin_coeffs);

  Vec2 point(double t) const;
  Vec2 derivative(double t) const;
  Vec2 second_derivative(double t) const;

  /// Outward unit normal (rotated tangent; points away from the enclosed
  /// region for a positively oriented curve).
  Vec2 normal(double t) const;

  /// Signed curvature (p' x p'') / |p'|^3.
  double curvature(double t) const;

  /// Arclength density |p'(t)|; integrating over [0,2pi) gives the length.
  double surface_measure(double t) const;

  /// Total length by the periodic trapezoid rule (spectrally accurate for
  /// smooth closed curves).
  double length(int samples = 4096) const;

  double max_curvature(int samples = 2048) const;
  double min_curvature(int samples = 2048) const;

  std::string describe() const;

 private:
  enum class Kind { Circle, Ellipse, Fourier };

  BoundaryCurve(Kind kind, double a, double b, std::vector<double> cc,
                std::vector<double> sc);
  void validate() const;
  double rho(double t) const;
  double rho_d1(double t) const;
  double rho_d2(double t) const;

  Kind kind_;
  double a_ = 1.0;  // circle: R; ellipse: semi-axis a; fourier: rho0
  double b_ = 1.0;
  std::vector<double> cos_coeffs_;
  std::vector<double> sin_coeffs_;
};

/// Tubular coordinates (t, tau) -> p(t) + tau * normal(t) over the coating
/// layer 0 <= tau <= thickness. The offset map must stay injective:
/// the exact planar volume element is |p'(t)| (1 + curvature(t) tau), so the
/// constructor rejects thickness values for which 1 + curvature*tau can
/// vanish.
class LayerChart {
 public:
  LayerChart(BoundaryCurve curve, double thickness);

  Vec2 offset_point(double t, double tau) const;

  /// Exact volume element of the offset map, |p'(t)| (1 + curvature(t) tau).
  double layer_jacobian(double t, double tau) const;

  double thickness() const { return thickness_; }
  const BoundaryCurve& curve() const { return curve_; }

 private:
  void check_tau(double tau) const;

  BoundaryCurve curve_;
  double thickness_;
};

}  // namespace spectra
