#include "spectra/bessel.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace spectra {

namespace {

constexpr double kSeriesCutoff = 8.0;

// Ascending series J_n(x) = sum_k (-1)^k (x/2)^(2k+n) / (k! (k+n)!).
// At x = 8 the largest term is ~1e2, so the summed cancellation error stays
// below ~1e-13 absolute.
double series_j(int n, double x) {
  const double half = 0.5 * x;
  double term = (n == 0) ? 1.0 : half;
  double sum = term;
  const double q = half * half;
  for (int k = 1; k < 80; ++k) {
    term *= -q / (double(k) * double(k + n));
    sum += term;
    if (std::abs(term) < 1e-18 * (std::abs(sum) + 1e-30)) break;
  }
  return sum;
}

// Backward (Miller) recurrence: run J_{k-1} = (2k/x) J_k - J_{k+1} down from
// a start order well above x, then normalize with J_0 + 2 sum J_{2k} = 1.
void miller_j01(double x, double& j0, double& j1) {
  const int start0 = int(x + 18.0 * std::cbrt(x) + 28.0);
  const int m = start0 + (start0 & 1);  // even start order
  double jp = 0.0;       // J_{k+1}
  double jc = 1e-30;     // J_k (arbitrary scale)
  double sum = 0.0;      // accumulates J_0 + 2*sum_{even k>=2} J_k
  double r0 = 0.0, r1 = 0.0;
  for (int k = m; k >= 1; --k) {
    const double jm = (2.0 * double(k) / x) * jc - jp;
    jp = jc;
    jc = jm;
    if ((k - 1) % 2 == 0 && k - 1 >= 2) sum += 2.0 * jc;
    if (k - 1 == 1) r1 = jc;
    if (k - 1 == 0) r0 = jc;
    // rescale to dodge overflow on long recurrences
    if (std::abs(jc) > 1e250) {
      jc *= 1e-250;
      jp *= 1e-250;
      sum *= 1e-250;
      r0 *= 1e-250;
      r1 *= 1e-250;
    }
  }
  sum += r0;
  j0 = r0 / sum;
  j1 = r1 / sum;
}

}  // namespace

double bessel_j0(double x) {
  x = std::abs(x);  // J0 is even
  if (x < kSeriesCutoff) return series_j(0, x);
  double j0, j1;
  miller_j01(x, j0, j1);
  return j0;
}

double bessel_j1(double x) {
  const double sign = (x < 0.0) ? -1.0 : 1.0;  // J1 is odd
  x = std::abs(x);
  if (x < kSeriesCutoff) return sign * series_j(1, x);
  double j0, j1;
  miller_j01(x, j0, j1);
  return sign * j1;
}

double bessel_j(int order, double x) {
  if (order == 0) return bessel_j0(x);
  if (order == 1) return bessel_j1(x);
  throw std::invalid_argument("bessel_j: order must be 0 or 1");
}

}  // namespace spectra
