#include "willmore/frames.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "willmore/so3.hpp"

namespace willmore {

namespace {

double loop_max_abs(const LaurentLoop& loop) {
  double out = 0.0;
  for (int k = -loop.degree(); k <= loop.degree(); ++k) {
    out = std::max(out, max_abs(loop.coeff(k)));
  }
  return out;
}

LaurentLoop constant_loop(const RMat& x, const BilinearForm& form,
                          const BlockSplit& split) {
  LaurentLoop out(0, form, split);
  out.coeff(0) = x.cast<Cplx>();
  return out;
}

// -2 * arctan(r) / r, continued through r = 0 by its Taylor series.
double arctan_factor(double r) {
  if (r < 1e-4) {
    const double r2 = r * r;
    double term = 1.0;
    double sum = 0.0;
    for (int k = 0; k < 7; ++k) {
      sum += term / (2 * k + 1);
      term *= -r2;
    }
    return -2.0 * sum;
  }
  return -2.0 * std::atan(r) / r;
}

}  // namespace

HomogeneousSphereData veronese_monodromy(int m) {
  if (m < 1) {
    throw SchemaError("veronese_monodromy: the degree m must be >= 1");
  }
  const So3Triple rep = build_irreducible(m);
  const int d = 2 * m + 1;  // spatial dimension
  const int ambient = d + 1;

  HomogeneousSphereData data;
  data.m = m;
  data.form = lorentz_form(ambient);
  data.split = BlockSplit{4, 2 * m - 2};
  data.weight = std::sqrt(m * (m + 1) / 2.0);

  // Adapted spatial basis: the base point, its first-order directions, and
  // the remaining rotation planes in ascending speed.
  RVec y0 = RVec::Zero(d);
  y0(2 * m) = 1.0;
  RVec e1 = -(rep.r(2) * y0) / data.weight;
  RVec e2 = -(rep.r(1) * y0) / data.weight;

  RMat q = RMat::Zero(d, d);
  q.col(0) = y0;
  q.col(1) = e1;
  q.col(2) = e2;
  int col = 3;
  for (int k = 2; k <= m; ++k) {
    RVec sk = RVec::Zero(d);
    sk(2 * (m - k)) = 1.0;
    RVec ck = RVec::Zero(d);
    ck(2 * (m - k) + 1) = 1.0;
    q.col(col++) = sk;
    q.col(col++) = ck;
  }
  if (q.determinant() < 0.0) q.col(d - 1) *= -1.0;
  data.adapted_basis = q;

  // Generators in the adapted basis, padded by the zero time direction.
  std::array<RMat, 3> amb;
  for (int a = 0; a < 3; ++a) {
    amb[a] = RMat::Zero(ambient, ambient);
    amb[a].block(1, 1, d, d) = q.transpose() * rep.rho[a] * q;
  }

  const Mat k1 = block_diagonal_part(amb[0].cast<Cplx>(), data.split);
  const Mat p1 = block_off_diagonal_part(amb[0].cast<Cplx>(), data.split);
  const Mat k2 = block_diagonal_part(amb[1].cast<Cplx>(), data.split);
  const Mat p2 = block_off_diagonal_part(amb[1].cast<Cplx>(), data.split);

  const Cplx i(0.0, 1.0);
  const Mat h1 = (p1 + i * p2) / 2.0;
  const Mat l1 = (p2 - i * p1) / 2.0;

  data.A1 = LaurentLoop(1, data.form, data.split);
  data.A1.coeff(-1) = h1;
  data.A1.coeff(0) = k1;
  data.A1.coeff(1) = h1.conjugate();

  data.A2 = LaurentLoop(1, data.form, data.split);
  data.A2.coeff(-1) = l1;
  data.A2.coeff(0) = k2;
  data.A2.coeff(1) = l1.conjugate();

  data.A3 = amb[2];
  return data;
}

double MonodromyResiduals::max() const {
  double out = std::max(loop_structure, rotation_algebra);
  out = std::max(out, a3_membership);
  out = std::max(out, a3_block_diagonal);
  out = std::max(out, harmonicity);
  out = std::max(out, basis_orthogonality);
  return out;
}

MonodromyResiduals monodromy_residuals(const HomogeneousSphereData& data) {
  MonodromyResiduals r;
  r.loop_structure =
      std::max(data.A1.residuals().max(), data.A2.residuals().max());

  const LaurentLoop a3 = constant_loop(data.A3, data.form, data.split);
  r.rotation_algebra = loop_max_abs(a3.bracket(data.A2) + data.A1);
  r.rotation_algebra =
      std::max(r.rotation_algebra, loop_max_abs(a3.bracket(data.A1) - data.A2));
  r.rotation_algebra =
      std::max(r.rotation_algebra, loop_max_abs(data.A1.bracket(data.A2) - a3));

  r.a3_membership = membership_residual(data.A3, data.form);
  r.a3_block_diagonal =
      max_abs(block_off_diagonal_part(data.A3.cast<Cplx>(), data.split));

  const Mat k1 = data.A1.coeff(0);
  const Mat p1 = data.A1.coeff(-1) + data.A1.coeff(1);
  const Mat k2 = data.A2.coeff(0);
  const Mat p2 = data.A2.coeff(-1) + data.A2.coeff(1);
  r.harmonicity = max_abs(Mat(commutator(k1, p1) + commutator(k2, p2)));

  if (data.adapted_basis.size() > 0) {
    const RMat gram =
        data.adapted_basis.transpose() * data.adapted_basis -
        RMat::Identity(data.adapted_basis.rows(), data.adapted_basis.cols());
    r.basis_orthogonality = max_abs(gram);
  }
  r.degree_windows =
      degree_window_check(data.A1) && degree_window_check(data.A2);
  return r;
}

RMat frame_sphere(const HomogeneousSphereData& data, Cplx z,
                  double lambda_theta) {
  const double u = z.real();
  const double v = z.imag();
  const double r = std::abs(z);
  const double f = arctan_factor(r);
  const RMat direction = u * data.A2.eval_real(lambda_theta) +
                         v * data.A1.eval_real(lambda_theta);
  return expm(RMat(f * direction));
}

RMat frame_sphere_polar(const HomogeneousSphereData& data, Cplx z,
                        double lambda_theta) {
  const double r = std::abs(z);
  const double theta_hat = (r == 0.0) ? 0.0 : std::atan2(z.imag(), z.real());
  const RMat rot_out = expm(RMat(-theta_hat * data.A3));
  const RMat rot_in = expm(RMat(theta_hat * data.A3));
  const RMat radial =
      expm(RMat(-2.0 * std::atan(r) * data.A2.eval_real(lambda_theta)));
  return rot_out * radial * rot_in;
}

RVec lightcone_project(const RMat& frame, double tol) {
  if (frame.rows() != frame.cols() || frame.rows() < 2) {
    throw SchemaError("lightcone_project: frame must be square, dim >= 2");
  }
  const RVec x = frame.col(0) + frame.col(1);
  if (x(0) <= tol) {
    std::ostringstream msg;
    msg << "lightcone_project: time component " << x(0)
        << " is not positive; the point leaves the chart";
    throw NumericalError(msg.str());
  }
  return x.tail(frame.rows() - 1) / x(0);
}

double homogeneity_residual(const HomogeneousSphereData& data,
                            double theta_hat, const std::vector<Cplx>& grid) {
  const RMat rot = expm(RMat(-theta_hat * data.A3));
  const Cplx phase = std::exp(Cplx(0.0, theta_hat));
  double residual = 0.0;
  for (const Cplx& z : grid) {
    const RVec rotated =
        lightcone_project(frame_sphere(data, phase * z, 0.0));
    const RMat frame = frame_sphere(data, z, 0.0);
    const RVec x = rot * RVec(frame.col(0) + frame.col(1));
    if (x(0) <= 1e-9) {
      throw NumericalError(
          "homogeneity_residual: rotated point leaves the lightcone chart");
    }
    const RVec projected = x.tail(x.size() - 1) / x(0);
    residual = std::max(residual, max_abs(RMat(rotated - projected)));
  }
  return residual;
}

double ConstantPotential::commuting_residual() const {
  return loop_max_abs(A.bracket(B));
}

ConstantPotential clifford_potential() {
  const BilinearForm form = lorentz_form(6);
  const BlockSplit split{4, 2};

  RVec a1 = RVec::Zero(6);
  a1(1) = 1.0 / std::sqrt(2.0);
  a1(3) = 1.0 / std::sqrt(2.0);
  RVec a2 = RVec::Zero(6);
  a2(2) = 1.0;
  const RMat ra = a2 * a1.transpose() - a1 * a2.transpose();

  RVec b1 = RVec::Zero(6);
  b1(1) = 1.0 / std::sqrt(2.0);
  b1(3) = -1.0 / std::sqrt(2.0);
  RVec b2 = RVec::Zero(6);
  b2(4) = 1.0;
  const RMat j = b2 * b1.transpose() - b1 * b2.transpose();

  ConstantPotential pot;
  pot.A = LaurentLoop(0, form, split);
  pot.A.coeff(0) = ra.cast<Cplx>();
  pot.B = LaurentLoop(1, form, split);
  pot.B.coeff(-1) = 0.5 * j.cast<Cplx>();
  pot.B.coeff(1) = 0.5 * j.cast<Cplx>();
  return pot;
}

RMat frame_plane(const ConstantPotential& pot, double u, double v,
                 double lambda_theta, double tol) {
  const double comm = pot.commuting_residual();
  if (comm > tol) {
    std::ostringstream msg;
    msg << "frame_plane: potential directions do not commute (residual "
        << comm << " > " << tol << "); the two-parameter frame is undefined";
    throw NumericalError(msg.str());
  }
  const RMat direction =
      u * pot.A.eval_real(lambda_theta) + v * pot.B.eval_real(lambda_theta);
  return expm(direction);
}

}  // namespace willmore
