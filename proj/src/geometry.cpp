#include "willmore/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <numbers>
#include <random>
#include <sstream>

#include "willmore/spherical.hpp"

namespace willmore {

namespace {

constexpr double kUnitNormTol = 1e-12;

void check_immersed(double e, double tol, Cplx z) {
  if (!(e > tol)) {
    std::ostringstream msg;
    msg << "surface is not immersed near (" << z.real() << ", " << z.imag()
        << "): E = " << e;
    throw NumericalError(msg.str());
  }
}

struct FirstOrder {
  RVec y, yu, yv;
  double e, f, g;
};

FirstOrder first_order(const SurfaceSampler& y, Cplx z, double h, double tol) {
  FirstOrder d;
  d.y = y(z);
  d.yu = (y(z + h) - y(z - h)) / (2 * h);
  d.yv = (y(z + Cplx(0, h)) - y(z - Cplx(0, h))) / (2 * h);
  d.e = d.yu.squaredNorm();
  d.f = d.yu.dot(d.yv);
  d.g = d.yv.squaredNorm();
  check_immersed(d.e, tol, z);
  return d;
}

double metric_e(const SurfaceSampler& y, Cplx z, double h) {
  return ((y(z + h) - y(z - h)) / (2 * h)).squaredNorm();
}

RVec mean_vector_from(const FirstOrder& d, const RVec& lap) {
  RVec hv = 0.5 * lap / d.e + d.y;
  const RVec b0 = d.y.normalized();
  const RVec b1 = d.yu / std::sqrt(d.e);
  const RVec b2 = d.yv / std::sqrt(d.g);
  for (const RVec& b : {b0, b1, b2}) hv -= hv.dot(b) * b;
  return hv;
}

}  // namespace

double SurfaceGrid::unit_norm_residual() const {
  double worst = 0.0;
  for (const RVec& s : samples) worst = std::max(worst, std::abs(s.norm() - 1.0));
  return worst;
}

SurfaceGrid make_surface_grid(const SurfaceSampler& y, double u0, double u1,
                              double v0, double v1, double h) {
  if (!(h > 0.0) || !(u1 > u0) || !(v1 > v0)) {
    throw SchemaError("make_surface_grid: chart must be a nonempty rectangle "
                      "with positive spacing");
  }
  SurfaceGrid grid;
  grid.u0 = u0;
  grid.u1 = u1;
  grid.v0 = v0;
  grid.v1 = v1;
  grid.h = h;
  grid.nu = static_cast<int>(std::lround((u1 - u0) / h)) + 1;
  grid.nv = static_cast<int>(std::lround((v1 - v0) / h)) + 1;
  if (grid.nu < 5 || grid.nv < 5) {
    throw SchemaError("make_surface_grid: chart must hold at least a 5x5 grid "
                      "at the requested spacing");
  }
  grid.samples.reserve(static_cast<size_t>(grid.nu) * grid.nv);
  for (int iu = 0; iu < grid.nu; ++iu) {
    for (int iv = 0; iv < grid.nv; ++iv) {
      grid.samples.push_back(y(grid.point(iu, iv)));
    }
  }
  const double unit = grid.unit_norm_residual();
  if (unit > kUnitNormTol) {
    std::ostringstream msg;
    msg << "make_surface_grid: samples leave the unit sphere by " << unit;
    throw NumericalError(msg.str());
  }
  return grid;
}

SurfaceSampler sampler_from_grid(const SurfaceGrid& grid) {
  auto shared = std::make_shared<SurfaceGrid>(grid);
  return [shared](Cplx z) -> RVec {
    const double fu = (z.real() - shared->u0) / shared->h;
    const double fv = (z.imag() - shared->v0) / shared->h;
    const int iu = static_cast<int>(std::lround(fu));
    const int iv = static_cast<int>(std::lround(fv));
    if (std::abs(fu - iu) > 1e-6 || std::abs(fv - iv) > 1e-6 || iu < 0 ||
        iv < 0 || iu >= shared->nu || iv >= shared->nv) {
      std::ostringstream msg;
      msg << "grid sampler: (" << z.real() << ", " << z.imag()
          << ") is not a grid node";
      throw SchemaError(msg.str());
    }
    return shared->sample(iu, iv);
  };
}

SurfaceFields surface_fields(const SurfaceSampler& y, Cplx z, double h,
                             double degenerate_tol) {
  if (!(h > 0.0)) throw SchemaError("surface_fields: spacing must be positive");
  SurfaceFields out;
  const FirstOrder d = first_order(y, z, h, degenerate_tol);
  out.E = d.e;
  out.F = d.f;
  out.G = d.g;
  out.conformality = std::max(std::abs(d.e - d.g), std::abs(d.f)) / d.e;

  const RVec lap = (y(z + h) + y(z - h) + y(z + Cplx(0, h)) + y(z - Cplx(0, h)) -
                    4.0 * d.y) /
                   (h * h);
  out.mean_vector = mean_vector_from(d, lap);
  out.mean_norm = out.mean_vector.norm();

  // K = -lap(w)/E with w = log(E)/2, from the five-point cross of E values.
  const double w0 = 0.5 * std::log(d.e);
  const double wpu = 0.5 * std::log(metric_e(y, z + h, h));
  const double wmu = 0.5 * std::log(metric_e(y, z - h, h));
  const double wpv = 0.5 * std::log(metric_e(y, z + Cplx(0, h), h));
  const double wmv = 0.5 * std::log(metric_e(y, z - Cplx(0, h), h));
  const double lapw = (wpu + wmu + wpv + wmv - 4.0 * w0) / (h * h);
  out.gauss = -lapw / d.e;
  return out;
}

namespace {

struct GridStencil {
  const SurfaceGrid& g;

  RVec yu(int iu, int iv) const {
    return (g.sample(iu + 1, iv) - g.sample(iu - 1, iv)) / (2 * g.h);
  }
  RVec yv(int iu, int iv) const {
    return (g.sample(iu, iv + 1) - g.sample(iu, iv - 1)) / (2 * g.h);
  }
  double e(int iu, int iv) const { return yu(iu, iv).squaredNorm(); }
  RVec lap(int iu, int iv) const {
    return (g.sample(iu + 1, iv) + g.sample(iu - 1, iv) + g.sample(iu, iv + 1) +
            g.sample(iu, iv - 1) - 4.0 * g.sample(iu, iv)) /
           (g.h * g.h);
  }
  double gauss(int iu, int iv) const {
    const double e0 = e(iu, iv);
    const double lapw = (0.5 * std::log(e(iu + 1, iv)) +
                         0.5 * std::log(e(iu - 1, iv)) +
                         0.5 * std::log(e(iu, iv + 1)) +
                         0.5 * std::log(e(iu, iv - 1)) -
                         2.0 * std::log(e0)) /
                        (g.h * g.h);
    return -lapw / e0;
  }
};

void check_interior(const SurfaceGrid& grid, int margin, const char* what) {
  if (grid.nu < 2 * margin + 1 || grid.nv < 2 * margin + 1) {
    std::ostringstream msg;
    msg << what << ": grid interior is empty at margin " << margin;
    throw SchemaError(msg.str());
  }
}

}  // namespace

double conformality_defect(const SurfaceGrid& grid) {
  check_interior(grid, 1, "conformality_defect");
  const GridStencil st{grid};
  double worst = 0.0;
  for (int iu = 1; iu + 1 < grid.nu; ++iu) {
    for (int iv = 1; iv + 1 < grid.nv; ++iv) {
      const RVec yu = st.yu(iu, iv), yv = st.yv(iu, iv);
      const double e = yu.squaredNorm();
      check_immersed(e, 1e-12, grid.point(iu, iv));
      const double f = yu.dot(yv), g = yv.squaredNorm();
      worst = std::max(worst, std::max(std::abs(e - g), std::abs(f)) / e);
    }
  }
  return worst;
}

double mean_curvature_defect(const SurfaceGrid& grid) {
  check_interior(grid, 1, "mean_curvature_defect");
  const GridStencil st{grid};
  double worst = 0.0;
  for (int iu = 1; iu + 1 < grid.nu; ++iu) {
    for (int iv = 1; iv + 1 < grid.nv; ++iv) {
      FirstOrder d;
      d.y = grid.sample(iu, iv);
      d.yu = st.yu(iu, iv);
      d.yv = st.yv(iu, iv);
      d.e = d.yu.squaredNorm();
      d.f = d.yu.dot(d.yv);
      d.g = d.yv.squaredNorm();
      check_immersed(d.e, 1e-12, grid.point(iu, iv));
      worst = std::max(worst, mean_vector_from(d, st.lap(iu, iv)).norm());
    }
  }
  return worst;
}

std::vector<double> gauss_curvature(const SurfaceGrid& grid) {
  check_interior(grid, 2, "gauss_curvature");
  const GridStencil st{grid};
  std::vector<double> field;
  field.reserve(static_cast<size_t>(grid.nu - 4) * (grid.nv - 4));
  for (int iu = 2; iu + 2 < grid.nu; ++iu) {
    for (int iv = 2; iv + 2 < grid.nv; ++iv) {
      field.push_back(st.gauss(iu, iv));
    }
  }
  return field;
}

FieldStats field_stats(const std::vector<double>& values) {
  if (values.empty()) throw SchemaError("field_stats: empty field");
  FieldStats s;
  s.count = static_cast<long>(values.size());
  s.min = s.max = values.front();
  double sum = 0.0, sq = 0.0;
  for (double v : values) {
    s.min = std::min(s.min, v);
    s.max = std::max(s.max, v);
    sum += v;
    sq += v * v;
  }
  s.mean = sum / s.count;
  s.stddev = std::sqrt(std::max(0.0, sq / s.count - s.mean * s.mean));
  return s;
}

double willmore_energy(const SurfaceGrid& grid) {
  check_interior(grid, 2, "willmore_energy");
  const GridStencil st{grid};
  double total = 0.0;
  for (int iu = 2; iu + 2 < grid.nu; ++iu) {
    for (int iv = 2; iv + 2 < grid.nv; ++iv) {
      FirstOrder d;
      d.y = grid.sample(iu, iv);
      d.yu = st.yu(iu, iv);
      d.yv = st.yv(iu, iv);
      d.e = d.yu.squaredNorm();
      d.f = d.yu.dot(d.yv);
      d.g = d.yv.squaredNorm();
      check_immersed(d.e, 1e-12, grid.point(iu, iv));
      const double h2 = mean_vector_from(d, st.lap(iu, iv)).squaredNorm();
      const double k = st.gauss(iu, iv);
      const double da = std::sqrt(std::max(0.0, d.e * d.g - d.f * d.f));
      // trapezoidal weights on the doubly-interior rectangle
      double wgt = 1.0;
      if (iu == 2 || iu + 3 == grid.nu) wgt *= 0.5;
      if (iv == 2 || iv + 3 == grid.nv) wgt *= 0.5;
      total += wgt * (h2 - k + 1.0) * da * grid.h * grid.h;
    }
  }
  return total;
}

ChartIntegrals disk_integrals(const SurfaceSampler& y, double radius,
                              const QuadratureOptions& opt) {
  if (!(radius > 0.0) || opt.radial < 1 || opt.angular < 1 || !(opt.stencil > 0)) {
    throw SchemaError("disk_integrals: invalid quadrature options");
  }
  const double psi_max = 2.0 * std::atan(radius);
  ChartIntegrals out;
  bool first = true;
  for (int ia = 0; ia < opt.angular; ++ia) {
    const double phi = 2.0 * std::numbers::pi * ia / opt.angular;
    const Cplx dir(std::cos(phi), std::sin(phi));
    for (int ir = 0; ir < opt.radial; ++ir) {
      const double psi = psi_max * (ir + 0.5) / opt.radial;
      const double r = std::tan(psi / 2);
      const double dr_dpsi = 0.5 / (std::cos(psi / 2) * std::cos(psi / 2));
      const Cplx z = r * dir;
      const SurfaceFields f = surface_fields(y, z, opt.stencil);
      const double jac = std::sqrt(std::max(0.0, f.E * f.G - f.F * f.F)) / f.E;
      const double da = f.E * jac * r * dr_dpsi * (psi_max / opt.radial) *
                        (2.0 * std::numbers::pi / opt.angular);
      out.area += da;
      out.total_gauss += f.gauss * da;
      out.willmore += (f.mean_norm * f.mean_norm - f.gauss + 1.0) * da;
      out.max_conformality = std::max(out.max_conformality, f.conformality);
      out.max_mean_norm = std::max(out.max_mean_norm, f.mean_norm);
      if (first) {
        out.k_min = out.k_max = f.gauss;
        first = false;
      } else {
        out.k_min = std::min(out.k_min, f.gauss);
        out.k_max = std::max(out.k_max, f.gauss);
      }
      out.k_sum += f.gauss;
      out.k_sq_sum += f.gauss * f.gauss;
      out.samples += 1;
    }
  }
  return out;
}

SphereReport sphere_report(const SurfaceSampler& chart1,
                           const SurfaceSampler& chart2,
                           const QuadratureOptions& opt) {
  const ChartIntegrals c1 = disk_integrals(chart1, opt.radius, opt);
  const ChartIntegrals c2 = disk_integrals(chart2, 1.0 / opt.radius, opt);
  SphereReport rep;
  rep.area = c1.area + c2.area;
  rep.gauss_bonnet = c1.total_gauss + c2.total_gauss;
  rep.willmore = c1.willmore + c2.willmore;
  rep.conformality = std::max(c1.max_conformality, c2.max_conformality);
  rep.minimality = std::max(c1.max_mean_norm, c2.max_mean_norm);
  rep.gauss.count = c1.samples + c2.samples;
  rep.gauss.min = std::min(c1.k_min, c2.k_min);
  rep.gauss.max = std::max(c1.k_max, c2.k_max);
  rep.gauss.mean = (c1.k_sum + c2.k_sum) / rep.gauss.count;
  rep.gauss.stddev = std::sqrt(std::max(
      0.0, (c1.k_sq_sum + c2.k_sq_sum) / rep.gauss.count -
               rep.gauss.mean * rep.gauss.mean));
  return rep;
}

SurfaceSampler make_inverted_sampler(SurfaceSampler y) {
  return [y = std::move(y)](Cplx w) -> RVec {
    if (w == Cplx(0.0, 0.0)) return y(Cplx(1e300, 0.0));
    return y(-1.0 / std::conj(w));
  };
}

double antipodal_residual(const SurfaceSampler& y, int parity,
                          const std::vector<Cplx>& samples) {
  if (parity != 1 && parity != -1) {
    throw SchemaError("antipodal_residual: parity must be +1 or -1");
  }
  double worst = 0.0;
  for (const Cplx& z : samples) {
    if (std::abs(z) < 1e-9) {
      throw SchemaError("antipodal_residual: samples must avoid the origin");
    }
    const RVec lhs = y(-1.0 / std::conj(z));
    const RVec rhs = static_cast<double>(parity) * y(z);
    worst = std::max(worst, (lhs - rhs).cwiseAbs().maxCoeff());
  }
  return worst;
}

double antipodal_check(int m, int count, unsigned seed) {
  if (m < 1 || count < 1) {
    throw SchemaError("antipodal_check: degree and sample count must be >= 1");
  }
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  std::vector<Cplx> samples;
  samples.reserve(count);
  while (static_cast<int>(samples.size()) < count) {
    const Cplx z(1.5 * gauss(rng), 1.5 * gauss(rng));
    if (std::abs(z) < 1e-6) continue;
    samples.push_back(z);
  }
  const int parity = (m % 2 == 0) ? 1 : -1;
  return antipodal_residual([m](Cplx z) { return veronese_point(m, z); }, parity,
                            samples);
}

}  // namespace willmore
