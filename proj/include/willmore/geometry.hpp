#pragma once

#include <functional>
#include <vector>

#include "willmore/linalg.hpp"

namespace willmore {

// A parametrized surface patch: z = u + iv maps to a unit vector in the
// ambient sphere S^{N-1}.
using SurfaceSampler = std::function<RVec(Cplx)>;

// Uniformly sampled rectangular chart of an immersion into a round sphere.
struct SurfaceGrid {
  double u0 = 0.0, u1 = 0.0;
  double v0 = 0.0, v1 = 0.0;
  double h = 0.0;
  int nu = 0, nv = 0;                // grid is nu x nv, lexicographic in (iu, iv)
  std::vector<RVec> samples;         // samples[iu * nv + iv] = y(u0+iu*h, v0+iv*h)

  Cplx point(int iu, int iv) const { return Cplx(u0 + iu * h, v0 + iv * h); }
  const RVec& sample(int iu, int iv) const { return samples[iu * nv + iv]; }
  // Unit-norm invariant for all stored samples.
  double unit_norm_residual() const;
};

// Sample a chart [u0,u1] x [v0,v1] at spacing h (node counts rounded from the
// extents; throws SchemaError unless the chart holds at least a 5x5 grid).
SurfaceGrid make_surface_grid(const SurfaceSampler& y, double u0, double u1,
                              double v0, double v1, double h);

// View a grid as a sampler over its own nodes; looking up a point off the
// node lattice throws SchemaError.
SurfaceSampler sampler_from_grid(const SurfaceGrid& grid);

// Pointwise second-order stencil data of an immersion at z.
struct SurfaceFields {
  double E = 0.0, F = 0.0, G = 0.0;  // first fundamental form
  double conformality = 0.0;         // max(|E-G|, |F|) / E
  RVec mean_vector;                  // ambient mean curvature vector
  double mean_norm = 0.0;            // |H|
  double gauss = 0.0;                // K = -lap(log(E)/2) / E
};

// Central differences at spacing h: E,F,G from first derivatives; the mean
// curvature vector as (1/2) lap(y)/E + y projected orthogonal to
// span{y, y_u, y_v}; K from the conformal-factor Laplacian (requires the
// sampler to be conformal for the K value to be meaningful).
SurfaceFields surface_fields(const SurfaceSampler& y, Cplx z, double h,
                             double degenerate_tol = 1e-12);

// Maximum of max(|E-G|,|F|)/E over the interior nodes of the grid.
double conformality_defect(const SurfaceGrid& grid);

// Maximum of |H| over interior nodes; meaningful on conformal grids.
double mean_curvature_defect(const SurfaceGrid& grid);

// K at each node of the doubly-interior region (two nodes away from each
// edge), row-major over that region.
std::vector<double> gauss_curvature(const SurfaceGrid& grid);

struct FieldStats {
  double min = 0.0, max = 0.0, mean = 0.0, stddev = 0.0;
  long count = 0;
};
FieldStats field_stats(const std::vector<double>& values);

// Trapezoidal quadrature of (|H|^2 - K + 1) dA over the doubly-interior
// region of the grid (a patch energy, not a closed-surface energy).
double willmore_energy(const SurfaceGrid& grid);

// Radial-midpoint x uniform-angle quadrature of a stereographic disk chart.
// The default radius 1.0 splits a closed surface into two hemispherical
// charts; keeping the charts small matters because the finite-difference
// curvature noise grows like (1 + |z|^2)^2 near a chart's rim.
struct QuadratureOptions {
  double radius = 1.0;    // chart 1 covers |z| <= radius
  int radial = 256;       // radial midpoint nodes
  int angular = 128;      // uniform angular nodes
  double stencil = 1e-3;  // finite-difference spacing for the fields
};

struct ChartIntegrals {
  double area = 0.0;
  double total_gauss = 0.0;   // integral of K dA
  double willmore = 0.0;      // integral of (|H|^2 - K + 1) dA
  double max_conformality = 0.0;
  double max_mean_norm = 0.0;
  double k_min = 0.0, k_max = 0.0;
  double k_sum = 0.0, k_sq_sum = 0.0;  // unweighted nodal sums for stats
  long samples = 0;
};

ChartIntegrals disk_integrals(const SurfaceSampler& y, double radius,
                              const QuadratureOptions& opt);

// Closed-surface report: chart 1 integrates y over |z| <= R; chart 2
// integrates the complementary cap by quadrature of a second sampler over
// |w| <= 1/R, which must parametrize the surface near z = infinity.  For a
// surface with the antipodal symmetry y(-1/conj(z)) = +/- y(z) the original
// sampler itself serves as the second chart; otherwise use
// make_inverted_sampler(y) (valid whenever the immersion extends over the
// point at infinity).
struct SphereReport {
  double area = 0.0;
  double gauss_bonnet = 0.0;  // integral of K dA over the full sphere
  double willmore = 0.0;
  double conformality = 0.0;  // max over both charts
  double minimality = 0.0;    // max |H| over both charts
  FieldStats gauss;
};

SphereReport sphere_report(const SurfaceSampler& chart1,
                           const SurfaceSampler& chart2,
                           const QuadratureOptions& opt);

// w -> y(-1/conj(w)): the surface in the antipodal stereographic chart.
SurfaceSampler make_inverted_sampler(SurfaceSampler y);

// max over samples of || y(-1/conj(z)) - parity * y(z) ||; parity = +/-1.
double antipodal_residual(const SurfaceSampler& y, int parity,
                          const std::vector<Cplx>& samples);

// Parity residual of the degree-m equivariant sphere immersion over `count`
// pseudo-random sample points (deterministic in seed); parity is (-1)^m.
double antipodal_check(int m, int count, unsigned seed);

}  // namespace willmore
