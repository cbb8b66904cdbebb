#ifndef LIEBALL_GEOMETRY_HPP
#define LIEBALL_GEOMETRY_HPP

#include <Eigen/Dense>
#include <complex>
#include <optional>

#include "lieball/errors.hpp"
#include "lieball/specfun.hpp"

namespace lieball {

using CVec = Eigen::VectorXcd;
using CMat = Eigen::MatrixXcd;
using RVec = Eigen::VectorXd;
using RMat = Eigen::MatrixXd;

// model parameters (n, nu) with nu in the Wallach set; nu = 0 is rejected
struct ModelParams {
  int n;
  double nu;

  ModelParams(int n_, double nu_);

  double rho() const { return 0.5 * (n - 1); }
  double wallach_bound() const { return 0.5 * (n - 2); }
  bool minimal() const { return nu == wallach_bound(); }
  bool atom_regime() const { return nu < 0.5 * (n - 1) && !minimal(); }
};

// bilinear form q(z,w) = 2 sum z_k w_k and q(z) = sum z_k^2
Complex qform(const CVec& z);
Complex qform2(const CVec& z, const CVec& w);

// point of C^n with the cached invariants q = zz^t and s = <z,z>
struct Point {
  CVec z;
  Complex q;  // zz^t, bilinear
  double s;   // <z,z>, Hermitian

  explicit Point(CVec coords);
  int n() const { return int(z.size()); }
  // 1 - 2<z,z> + |zz^t|^2 > 0 and |z| < 1
  bool in_domain() const;
};

struct MatrixBallPoint {
  RMat Z;  // n x 2, Z^t Z < I_2
  bool in_domain() const;
};

// Jordan triple machinery for the quadratic form q(z) = sum z_k^2:
//   D(x, conj y) z = 2<x,y> z + 2<z,y> x - 2 q(x,z)/2 ... (displayed form)
CVec triple_D(const CVec& x, const CVec& y, const CVec& z);
// Q(x)y = q(x,y) x - q(x) y  (y is the already-conjugated argument)
CVec quadratic_Q(const CVec& x, const CVec& y);
// B(x,y) = I - D(x, conj y) + Q(x) Qbar(conj y) as a matrix in the standard basis
CMat bergman_B(const CVec& x, const CVec& y);

// h(z,w) = 1 - 2<z,w> + (zz^t) conj(ww^t)
Complex h_kernel(const CVec& z, const CVec& w);

// h(z,w)^(-nu) on the principal branch, certified along the homotopy
// t -> h(z, t w); throws branch_error if the path winds or hits zero
Complex h_power(const CVec& z, const CVec& w, double exponent);
Complex bergman_kernel(const CVec& z, const CVec& w, double nu);

struct SpectralDecomposition {
  double lambda1, lambda2;  // lambda1 >= lambda2 >= 0
  CVec c1, c2;              // orthogonal tripotents, z = l1 c1 + l2 c2
};
SpectralDecomposition spectral_decomposition(const CVec& z);
double spectral_norm(const CVec& z);

// the automorphism exp(xi_v) with u = tanh v given directly:
//   z -> u + B(u,u)^{1/2} B(z,-u)^{-1} (z + Q(z) conj(u))
class MoebiusMap {
 public:
  explicit MoebiusMap(CVec u);
  const CVec& parameter() const { return u_; }
  CVec apply(const CVec& z) const;
  CMat differential(const CVec& z) const;  // B(u,u)^{1/2} B(z,-u)^{-1}
  Complex jacobian_det(const CVec& z) const;
  MoebiusMap inverse() const { return MoebiusMap(-u_); }
  const CMat& sqrt_Buu() const { return sqrtB_; }

 private:
  CVec u_;
  CMat sqrtB_;  // principal square root of B(u,u)
};

// Hua transform between the Lie ball and the real n x 2 matrix ball
MatrixBallPoint hua_transform(const CVec& z);
CVec hua_inverse(const MatrixBallPoint& Z);

// Cayley transform c(z) = ((1-zz^t) e1 + 2 z') / (1 - 2 z1 + zz^t) and its
// inverse w -> -c(-w)
CVec cayley(const CVec& z);
CVec cayley_inverse(const CVec& w);

// element of SO_0(1,n) in block form (a, b; c, D), preserving diag(1,-1,...,-1)
struct LorentzElement {
  RMat g;  // (1+n) x (1+n)

  explicit LorentzElement(RMat m);
  int n() const { return int(g.rows()) - 1; }
  static LorentzElement identity(int n);
  static LorentzElement boost(int n, double rapidity, const RVec& direction);
  static LorentzElement rotation(const RMat& O);  // O in SO(n)
};

// fractional-linear action X -> (c + D X)(a + b X)^{-1} on the real unit ball
RVec lorentz_apply(const LorentzElement& g, const RVec& x);
// embedding theta: SO(1,n) -> SO(2,n) fixing the second time-like direction
RMat embed_theta(const LorentzElement& g);

// action of theta(g) on a matrix-ball point
MatrixBallPoint matrix_ball_apply(const RMat& big, const MatrixBallPoint& Z);

// an element of H = SO_0(1,n) acting on the Lie ball through the z-model:
// a composition  rotation o moebius(real u) o rotation  with closed-form
// Jacobians; boundary_* act on the sphere |zeta| = 1
class RealAutomorphism {
 public:
  RealAutomorphism() = default;
  static RealAutomorphism moebius(const RVec& u);
  static RealAutomorphism rotation(const RMat& O);
  static RealAutomorphism from_lorentz(const LorentzElement& g);  // g = boost * rotation
  RealAutomorphism then(const RealAutomorphism& next) const;      // this, then next
  RealAutomorphism inverse() const;

  RVec apply(const RVec& x) const;
  CVec apply_complex(const CVec& z) const;
  double jacobian(const RVec& x) const;          // real points, radial limit safe
  Complex jacobian_complex(const CVec& z) const; // via det of the differential
  bool is_identity() const { return steps_.empty(); }

 private:
  struct Step {
    bool is_rotation;
    RMat O;   // rotation
    RVec u;   // moebius parameter (real)
  };
  std::vector<Step> steps_;  // applied left to right
};

}  // namespace lieball

#endif
