#include "willmore/so3.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/Eigenvalues>

namespace willmore {

const RMat& So3Triple::r(int a) const {
  if (a < 1 || a > 3) throw SchemaError("So3Triple::r: index must be 1..3");
  return rho[static_cast<size_t>(a - 1)];
}

So3Triple build_irreducible(int l) {
  if (l < 1) throw SchemaError("build_irreducible: level must be >= 1");
  const int n = 2 * l + 1;

  // Complex weight basis |m>, m = -l..l at index m + l.
  Mat j3 = Mat::Zero(n, n);
  Mat jp = Mat::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    const double m = i - l;
    j3(i, i) = m;
    if (i + 1 < n) {
      jp(i + 1, i) = std::sqrt(l * (l + 1.0) - m * (m + 1.0));
    }
  }
  const Mat jm = jp.adjoint();
  const Cplx mi(0.0, -1.0);
  const std::array<Mat, 3> gen = {mi * 0.5 * (jp + jm),
                                  mi * (jp - jm) / Cplx(0.0, 2.0), mi * j3};

  // Real basis: for k = l..1 the pair (s_k, c_k), then the kernel vector.
  Mat u = Mat::Zero(n, n);
  const double invsq2 = 1.0 / std::sqrt(2.0);
  int col = 0;
  for (int k = l; k >= 1; --k) {
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    u(k + l, col) = Cplx(0.0, -sign * invsq2);
    u(-k + l, col) = Cplx(0.0, invsq2);
    ++col;
    u(k + l, col) = Cplx(sign * invsq2, 0.0);
    u(-k + l, col) = Cplx(invsq2, 0.0);
    ++col;
  }
  u(l, col) = Cplx(1.0, 0.0);

  So3Triple t;
  for (int a = 0; a < 3; ++a) {
    const Mat m = u.adjoint() * gen[static_cast<size_t>(a)] * u;
    t.rho[static_cast<size_t>(a)] =
        real_part_checked(m, 1e-12, "build_irreducible");
  }
  return t;
}

So3Triple trivial_rep(int dim) {
  if (dim < 1) throw SchemaError("trivial_rep: dimension must be >= 1");
  So3Triple t;
  for (auto& m : t.rho) m = RMat::Zero(dim, dim);
  return t;
}

So3Triple direct_sum(const So3Triple& a, const So3Triple& b) {
  So3Triple t;
  const int na = a.dim();
  const int nb = b.dim();
  for (int i = 0; i < 3; ++i) {
    RMat m = RMat::Zero(na + nb, na + nb);
    m.topLeftCorner(na, na) = a.rho[static_cast<size_t>(i)];
    m.bottomRightCorner(nb, nb) = b.rho[static_cast<size_t>(i)];
    t.rho[static_cast<size_t>(i)] = m;
  }
  return t;
}

double commutation_residual(const So3Triple& t) {
  const RMat& r1 = t.r(1);
  const RMat& r2 = t.r(2);
  const RMat& r3 = t.r(3);
  double res = max_abs(RMat(commutator(r3, r2) + r1));
  res = std::max(res, max_abs(RMat(commutator(r3, r1) - r2)));
  res = std::max(res, max_abs(RMat(commutator(r1, r2) - r3)));
  return res;
}

RMat casimir_matrix(const So3Triple& t) {
  return t.r(1) * t.r(1) + t.r(2) * t.r(2) + t.r(3) * t.r(3);
}

std::vector<int> decompose(const So3Triple& t, double lattice_tol,
                           double pre_tol) {
  const double comm = commutation_residual(t);
  if (comm > pre_tol) {
    std::ostringstream msg;
    msg << "decompose: commutation relations fail (residual " << comm << ")";
    throw NumericalError(msg.str());
  }
  const auto mult =
      skew_eigenstructure(t.r(3), euclidean_form(t.dim()), lattice_tol);

  int top = 0;
  for (const auto& [k, c] : mult) top = std::max(top, k);

  // A spin-l summand contributes one rotation pair at every speed 1..l and
  // one zero direction; peel multiplicities from the top.
  std::vector<int> levels;
  int prev_count = 0;
  for (int k = top; k >= 1; --k) {
    const auto it = mult.find(k);
    const int count = (it == mult.end()) ? 0 : it->second;
    const int n_k = count - prev_count;
    if (n_k < 0) {
      throw NumericalError(
          "decompose: rotation-speed multiplicities are not monotone; no "
          "sum of irreducibles matches");
    }
    for (int i = 0; i < n_k; ++i) levels.push_back(k);
    prev_count = count;
  }
  const int zeros = mult.count(0) ? mult.at(0) : 0;
  // Every nontrivial summand consumes exactly one zero direction.
  const int trivial = zeros - static_cast<int>(levels.size());
  if (trivial < 0) {
    throw NumericalError(
        "decompose: zero multiplicity too small for the rotation pairs "
        "present");
  }
  for (int i = 0; i < trivial; ++i) levels.push_back(0);
  return levels;  // already descending
}

int invariant_vector_count(const So3Triple& t) {
  const RMat cas = casimir_matrix(t);
  Eigen::SelfAdjointEigenSolver<RMat> es(cas);
  if (es.info() != Eigen::Success) {
    throw NumericalError("invariant_vector_count: eigensolve failed");
  }
  int count = 0;
  for (int i = 0; i < t.dim(); ++i) {
    if (std::abs(es.eigenvalues()(i)) < 0.5) ++count;
  }
  return count;
}

bool is_irreducible_ambient(const So3Triple& t, double lattice_tol) {
  const auto mult =
      skew_eigenstructure(t.r(3), euclidean_form(t.dim()), lattice_tol);
  const int zeros = mult.count(0) ? mult.at(0) : 0;
  return zeros == 2 && invariant_vector_count(t) == 1;
}

Mat su2_generator(int axis) {
  Mat t = Mat::Zero(2, 2);
  const Cplx mi2(0.0, -0.5);
  switch (axis) {
    case 1:
      t(0, 1) = mi2;
      t(1, 0) = mi2;
      break;
    case 2:
      t(0, 1) = Cplx(-0.5, 0.0);
      t(1, 0) = Cplx(0.5, 0.0);
      break;
    case 3:
      t(0, 0) = mi2;
      t(1, 1) = -mi2;
      break;
    default:
      throw SchemaError("su2_generator: axis must be 1..3");
  }
  return t;
}

Mat su2_rotation(int axis, double t) {
  const double c = std::cos(0.5 * t);
  const double s = std::sin(0.5 * t);
  Mat g = Mat::Zero(2, 2);
  switch (axis) {
    case 1:
      g(0, 0) = c;
      g(0, 1) = Cplx(0.0, -s);
      g(1, 0) = Cplx(0.0, -s);
      g(1, 1) = c;
      break;
    case 2:
      g(0, 0) = c;
      g(0, 1) = -s;
      g(1, 0) = s;
      g(1, 1) = c;
      break;
    case 3:
      g(0, 0) = std::exp(Cplx(0.0, -0.5 * t));
      g(1, 1) = std::exp(Cplx(0.0, 0.5 * t));
      break;
    default:
      throw SchemaError("su2_rotation: axis must be 1..3");
  }
  return g;
}

MobiusPoint mobius_act(const Mat& g, const MobiusPoint& z) {
  if (g.rows() != 2 || g.cols() != 2) {
    throw SchemaError("mobius_act: expected a 2x2 matrix");
  }
  const Cplx a = g(0, 0), b = g(0, 1), c = g(1, 0), d = g(1, 1);
  Cplx num, den;
  if (z.infinite) {
    num = a;
    den = c;
  } else {
    num = a * z.value + b;
    den = c * z.value + d;
  }
  // The action is projective: (num, den) == (0, 0) cannot occur for an
  // invertible g, so a (relatively) vanishing denominator means the point
  // at infinity.
  if (std::abs(den) <= 1e-14 * (std::abs(num) + std::abs(den))) {
    return MobiusPoint{Cplx(0.0, 0.0), true};
  }
  return MobiusPoint{num / den, false};
}

MobiusPoint mobius_act(int axis, double t, const MobiusPoint& z) {
  return mobius_act(su2_rotation(axis, t), z);
}

}  // namespace willmore
