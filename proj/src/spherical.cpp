#include "willmore/spherical.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <sstream>
#include <vector>

namespace willmore {

namespace {

// pi_{lm}(t) = P_l^m(t) / (1-t^2)^{m/2} without the Condon-Shortley phase;
// a polynomial in t, generated by the stable upward recurrence
//   pi_{mm} = (2m-1)!!,  pi_{m+1,m} = (2m+1) t pi_{mm},
//   (l-m) pi_{lm} = (2l-1) t pi_{l-1,m} - (l-1+m) pi_{l-2,m}.
double legendre_ratio(int l, int m, double t) {
  double pmm = 1.0;
  for (int k = 1; k <= m; ++k) pmm *= (2 * k - 1);
  if (l == m) return pmm;
  double prev = pmm;
  double cur = (2 * m + 1) * t * pmm;
  for (int ll = m + 2; ll <= l; ++ll) {
    const double next = ((2 * ll - 1) * t * cur - (ll - 1 + m) * prev) / (ll - m);
    prev = cur;
    cur = next;
  }
  return cur;
}

// (l-m)! / (l+m)! as a product of reciprocals (exact integers overflow
// factorial() long before the ratio loses accuracy).
double factorial_ratio(int l, int m) {
  double ratio = 1.0;
  for (int k = l - m + 1; k <= l + m; ++k) ratio /= k;
  return ratio;
}

}  // namespace

double harmonics_norm_constant(int l) {
  return (2 * l + 1) / (4.0 * std::numbers::pi);
}

RVec real_spherical_harmonics(int l, const Eigen::Vector3d& p) {
  if (l < 0) throw SchemaError("real_spherical_harmonics: degree must be >= 0");
  const double x = p(0), y = p(1), z = p(2);
  RVec out = RVec::Zero(2 * l + 1);
  // cos(m*phi) sin^m(theta) = Re((x+iy)^m); sin branch from Im.
  std::complex<double> wm(1.0, 0.0);
  const std::complex<double> w(x, y);
  std::vector<std::complex<double>> powers(l + 1);
  powers[0] = wm;
  for (int m = 1; m <= l; ++m) powers[m] = powers[m - 1] * w;
  for (int m = l; m >= 1; --m) {
    const double norm = std::sqrt((2 * l + 1) / (2.0 * std::numbers::pi) *
                                  factorial_ratio(l, m));
    const double pi_lm = legendre_ratio(l, m, z);
    const int i = 2 * (l - m);
    out(i) = norm * pi_lm * powers[m].imag();
    out(i + 1) = norm * pi_lm * powers[m].real();
  }
  out(2 * l) = std::sqrt(harmonics_norm_constant(l)) * legendre_ratio(l, 0, z);
  return out;
}

Eigen::Vector3d stereographic_point(Cplx z) {
  const double u = z.real(), v = z.imag();
  const double r2 = u * u + v * v;
  if (!std::isfinite(r2) || r2 > 1e300) {
    return Eigen::Vector3d(0.0, 0.0, -1.0);
  }
  return Eigen::Vector3d(2 * u, 2 * v, 1 - r2) / (1 + r2);
}

RVec veronese_point(int m, Cplx z) {
  if (m < 1) throw SchemaError("veronese_point: degree must be >= 1");
  const double cm = std::sqrt(harmonics_norm_constant(m));
  return real_spherical_harmonics(m, stereographic_point(z)) / cm;
}

}  // namespace willmore
