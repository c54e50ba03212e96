#include "spectra/geometry.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace spectra {

double Vec2::norm() const { return std::hypot(x, y); }

BoundaryCurve::BoundaryCurve(Kind kind, double a, double b,
                             std::vector<double> cc, std::vector<double> sc)
    : kind_(kind), a_(a), b_(b), cos_coeffs_(std::move(cc)),
      sin_coeffs_(std::move(sc)) {
  validate();
}

BoundaryCurve BoundaryCurve::circle(double R) {
  if (!(R > 0.0)) throw std::invalid_argument("circle: R must be positive");
  return BoundaryCurve(Kind::Circle, R, R, {}, {});
}

BoundaryCurve BoundaryCurve::ellipse(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0))
    throw std::invalid_argument("ellipse: semi-axes must be positive");
  return BoundaryCurve(Kind::Ellipse, a, b, {}, {});
}

BoundaryCurve BoundaryCurve::fourier(double rho0, std::vector<double> cc,
                                     std::vector<double> sc) {
  if (!(rho0 > 0.0))
    throw std::invalid_argument("fourier: rho0 must be positive");
  return BoundaryCurve(Kind::Fourier, rho0, 0.0, std::move(cc), std::move(sc));
}

double BoundaryCurve::rho(double t) const {
  double r = a_;
  for (std::size_t k = 0; k < cos_coeffs_.size(); ++k)
    r += cos_coeffs_[k] * std::cos(double(k + 1) * t);
  for (std::size_t k = 0; k < sin_coeffs_.size(); ++k)
    r += sin_coeffs_[k] * std::sin(double(k + 1) * t);
  return r;
}

double BoundaryCurve::rho_d1(double t) const {
  double r = 0.0;
  for (std::size_t k = 0; k < cos_coeffs_.size(); ++k) {
    const double m = double(k + 1);
    r -= m * cos_coeffs_[k] * std::sin(m * t);
  }
  for (std::size_t k = 0; k < sin_coeffs_.size(); ++k) {
    const double m = double(k + 1);
    r += m * sin_coeffs_[k] * std::cos(m * t);
  }
  return r;
}

double BoundaryCurve::rho_d2(double t) const {
  double r = 0.0;
  for (std::size_t k = 0; k < cos_coeffs_.size(); ++k) {
    const double m = double(k + 1);
    r -= m * m * cos_coeffs_[k] * std::cos(m * t);
  }
  for (std::size_t k = 0; k < sin_coeffs_.size(); ++k) {
    const double m = double(k + 1);
    r -= m * m * sin_coeffs_[k] * std::sin(m * t);
  }
  return r;
}

Vec2 BoundaryCurve::point(double t) const {
  const double c = std::cos(t), s = std::sin(t);
  switch (kind_) {
    case Kind::Circle: return {a_ * c, a_ * s};
    case Kind::Ellipse: return {a_ * c, b_ * s};
    case Kind::Fourier: {
      const double r = rho(t);
      return {r * c, r * s};
    }
  }
  return {};
}

Vec2 BoundaryCurve::derivative(double t) const {
  const double c = std::cos(t), s = std::sin(t);
  switch (kind_) {
    case Kind::Circle: return {-a_ * s, a_ * c};
    case Kind::Ellipse: return {-a_ * s, b_ * c};
    case Kind::Fourier: {
      const double r = rho(t), r1 = rho_d1(t);
      return {r1 * c - r * s, r1 * s + r * c};
    }
  }
  return {};
}

Vec2 BoundaryCurve::second_derivative(double t) const {
  const double c = std::cos(t), s = std::sin(t);
  switch (kind_) {
    case Kind::Circle: return {-a_ * c, -a_ * s};
    case Kind::Ellipse: return {-a_ * c, -b_ * s};
    case Kind::Fourier: {
      const double r = rho(t), r1 = rho_d1(t), r2 = rho_d2(t);
      return {r2 * c - 2.0 * r1 * s - r * c, r2 * s + 2.0 * r1 * c - r * s};
    }
  }
  return {};
}

Vec2 BoundaryCurve::normal(double t) const {
  const Vec2 d = derivative(t);
  const double n = d.norm();
  if (!(n > 0.0) || !std::isfinite(n))
    throw std::runtime_error("normal: curve is not regular at t=" +
                             std::to_string(t));
  return {d.y / n, -d.x / n};
}

double BoundaryCurve::curvature(double t) const {
  const Vec2 d1 = derivative(t);
  const Vec2 d2 = second_derivative(t);
  const double speed = d1.norm();
  if (!std::isfinite(speed) || !(speed > 0.0))
    throw std::runtime_error("curvature: non-finite or singular derivative");
  const double k = d1.cross(d2) / (speed * speed * speed);
  if (!std::isfinite(k))
    throw std::runtime_error("curvature: non-finite value");
  return k;
}

double BoundaryCurve::surface_measure(double t) const {
  const double n = derivative(t).norm();
  if (!std::isfinite(n))
    throw std::runtime_error("surface_measure: non-finite derivative");
  return n;
}

double BoundaryCurve::length(int samples) const {
  const double two_pi = 2.0 * M_PI;
  double sum = 0.0;
  for (int i = 0; i < samples; ++i)
    sum += surface_measure(two_pi * double(i) / double(samples));
  return sum * two_pi / double(samples);
}

double BoundaryCurve::max_curvature(int samples) const {
  double m = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < samples; ++i)
    m = std::max(m, curvature(2.0 * M_PI * double(i) / double(samples)));
  return m;
}

double BoundaryCurve::min_curvature(int samples) const {
  double m = std::numeric_limits<double>::infinity();
  for (int i = 0; i < samples; ++i)
    m = std::min(m, curvature(2.0 * M_PI * double(i) / double(samples)));
  return m;
}

std::string BoundaryCurve::describe() const {
  std::ostringstream os;
  switch (kind_) {
    case Kind::Circle: os << "circle(R=" << a_ << ")"; break;
    case Kind::Ellipse: os << "ellipse(a=" << a_ << ", b=" << b_ << ")"; break;
    case Kind::Fourier:
      os << "fourier(rho0=" << a_ << ", " << cos_coeffs_.size() << " cos, "
         << sin_coeffs_.size() << " sin)";
      break;
  }
  return os.str();
}

void BoundaryCurve::validate() const {
  const int n = 1024;
  double area2 = 0.0;  // twice the signed area, by quadrature of p x p'
  for (int i = 0; i < n; ++i) {
    const double t = 2.0 * M_PI * double(i) / double(n);
    const double speed = derivative(t).norm();
    if (!(speed > 1e-14) || !std::isfinite(speed))
      throw std::invalid_argument("curve is not regular at t=" +
                                  std::to_string(t));
    if (kind_ == Kind::Fourier && !(rho(t) > 0.0))
      throw std::invalid_argument("fourier profile is not star-shaped: "
                                  "rho(t) <= 0 at t=" + std::to_string(t));
    area2 += point(t).cross(derivative(t));
  }
  area2 *= 2.0 * M_PI / double(n);
  if (!(area2 > 0.0))
    throw std::invalid_argument("curve is not positively oriented");
}

LayerChart::LayerChart(BoundaryCurve curve, double thickness)
    : curve_(std::move(curve)), thickness_(thickness) {
  if (!(thickness_ > 0.0))
    throw std::invalid_argument("layer thickness must be positive");
  // Outward offsets degenerate where the curve bends away from the layer:
  // need 1 + curvature*tau > 0 for all tau in [0, thickness].
  const double kmin = curve_.min_curvature();
  if (kmin < 0.0 && thickness_ * (-kmin) >= 1.0)
    throw std::invalid_argument(
        "layer too thick: offset map loses injectivity (1 + kappa*tau <= 0)");
}

void LayerChart::check_tau(double tau) const {
  if (!(tau >= 0.0) || !(tau <= thickness_))
    throw std::domain_error("tau outside [0, thickness]");
}

Vec2 LayerChart::offset_point(double t, double tau) const {
  check_tau(tau);
  return curve_.point(t) + curve_.normal(t) * tau;
}

double LayerChart::layer_jacobian(double t, double tau) const {
  check_tau(tau);
  const double factor = 1.0 + curve_.curvature(t) * tau;
  if (!(factor > 0.0))
    throw std::runtime_error(
        "layer_jacobian: degenerate offset, 1 + kappa*tau <= 0 at t=" +
        std::to_string(t));
  return curve_.surface_measure(t) * factor;
}

}  // namespace spectra
