#pragma once

namespace spectra {

/// Bessel functions of the first kind, orders 0 and 1, full double accuracy
/// on [0, 50] and beyond. Small arguments use the ascending power series;
/// large arguments use normalized backward recurrence, which avoids the
/// cancellation of the raw series and the truncation floor of the asymptotic
/// expansion.
double bessel_j0(double x);
double bessel_j1(double x);

/// order must be 0 or 1.
double bessel_j(int order, double x);

}  // namespace spectra
