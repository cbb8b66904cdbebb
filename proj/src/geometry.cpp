#include "lieball/geometry.hpp"

#include <cmath>
#include <numbers>

#include <unsupported/Eigen/MatrixFunctions>

namespace lieball {

ModelParams::ModelParams(int n_, double nu_) : n(n_), nu(nu_) {
  if (n < 3) throw parameter_error("ModelParams: n must be >= 3");
  if (nu == 0.0) throw parameter_error("ModelParams: nu = 0 (trivial representation) is rejected");
  if (nu < wallach_bound()) throw parameter_error("ModelParams: nu below the Wallach bound (n-2)/2");
}

Complex qform(const CVec& z) { return z.transpose() * z; }

Complex qform2(const CVec& z, const CVec& w) { return 2.0 * (z.transpose() * w)(0); }

Point::Point(CVec coords) : z(std::move(coords)) {
  q = qform(z);
  s = z.squaredNorm();
}

bool Point::in_domain() const { return 1.0 - 2.0 * s + std::norm(q) > 0.0 && s < 1.0; }

bool MatrixBallPoint::in_domain() const {
  Eigen::Matrix2d ZtZ = Z.transpose() * Z;
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(ZtZ);
  return es.eigenvalues()(1) < 1.0;
}

CVec triple_D(const CVec& x, const CVec& y, const CVec& z) {
  Complex xdoty = (x.array() * y.conjugate().array()).sum();
  Complex zdoty = (z.array() * y.conjugate().array()).sum();
  Complex xz = (x.array() * z.array()).sum();
  return 2.0 * xdoty * z + 2.0 * zdoty * x - 2.0 * xz * y.conjugate();
}

CVec quadratic_Q(const CVec& x, const CVec& y) {
  return qform2(x, y) * x - qform(x) * y;
}

namespace {

// Qbar(conj y) w = conj( Q(y) conj(w) )
CVec qbar_apply(const CVec& y, const CVec& w) { return quadratic_Q(y, w.conjugate()).conjugate(); }

}  // namespace

CMat bergman_B(const CVec& x, const CVec& y) {
  const int n = int(x.size());
  CMat B(n, n);
  CVec e = CVec::Zero(n);
  for (int j = 0; j < n; ++j) {
    e(j) = 1.0;
    B.col(j) = e - triple_D(x, y, e) + quadratic_Q(x, qbar_apply(y, e));
    e(j) = 0.0;
  }
  return B;
}

Complex h_kernel(const CVec& z, const CVec& w) {
  Complex zw = (z.array() * w.conjugate().array()).sum();
  return 1.0 - 2.0 * zw + qform(z) * std::conj(qform(w));
}

Complex h_power(const CVec& z, const CVec& w, double exponent) {
  // continuous log along t -> h(z, t w), starting from h(z,0) = 1
  Complex zw = (z.array() * w.conjugate().array()).sum();
  Complex qq = qform(z) * std::conj(qform(w));
  auto h_at = [&](double t) { return 1.0 - 2.0 * t * zw + t * t * qq; };
  int m = 64;
  while (true) {
    double arg_sum = 0.0;
    Complex prev = h_at(0.0);
    bool ok = true;
    for (int k = 1; k <= m; ++k) {
      Complex cur = h_at(double(k) / m);
      if (std::abs(cur) < 1e-14) throw branch_error("h_power: kernel vanishes along the homotopy");
      double step = std::arg(cur / prev);
      if (std::abs(step) > 1.5) {  // winding not resolved at this resolution
        ok = false;
        break;
      }
      arg_sum += step;
      prev = cur;
    }
    if (ok) {
      Complex log_h(std::log(std::abs(prev)), arg_sum);
      return std::exp(exponent * log_h);
    }
    m *= 4;
    if (m > 65536) throw branch_error("h_power: could not certify the principal branch");
  }
}

Complex bergman_kernel(const CVec& z, const CVec& w, double nu) { return h_power(z, w, -nu); }

SpectralDecomposition spectral_decomposition(const CVec& z) {
  const int n = int(z.size());
  const double s = z.squaredNorm();
  if (s == 0.0) throw parameter_error("spectral_decomposition: z must be nonzero");
  const Complex q = qform(z);
  const double aq = std::abs(q);
  const double disc = std::sqrt(std::max(s * s - aq * aq, 0.0));
  SpectralDecomposition out;
  out.lambda1 = std::sqrt(s + disc);
  out.lambda2 = std::sqrt(std::max(s - disc, 0.0));
  const double psi = (aq > 0.0) ? std::arg(q) : 0.0;
  const Complex phase = std::exp(Complex(0.0, -0.5 * psi));
  CVec w = phase * z;
  RVec a = w.real(), b = w.imag();
  RVec ahat = a.normalized();
  RVec bp = b - b.dot(ahat) * ahat;
  RVec bhat;
  if (bp.norm() > 1e-13 * std::sqrt(s)) {
    bhat = bp.normalized();
  } else {
    // degenerate direction: complete ahat with any orthogonal unit vector
    bhat = RVec::Zero(n);
    int pick = 0;
    for (int i = 1; i < n; ++i)
      if (std::abs(ahat(i)) < std::abs(ahat(pick))) pick = i;
    bhat(pick) = 1.0;
    bhat -= bhat.dot(ahat) * ahat;
    bhat.normalize();
  }
  const Complex conj_phase = std::exp(Complex(0.0, 0.5 * psi));
  out.c1 = conj_phase * 0.5 * (ahat.cast<Complex>() + Complex(0, 1) * bhat.cast<Complex>());
  out.c2 = conj_phase * 0.5 * (ahat.cast<Complex>() - Complex(0, 1) * bhat.cast<Complex>());
  return out;
}

double spectral_norm(const CVec& z) {
  if (z.squaredNorm() == 0.0) return 0.0;
  return spectral_decomposition(z).lambda1;
}

MoebiusMap::MoebiusMap(CVec u) : u_(std::move(u)) {
  if (spectral_norm(u_) >= 1.0) throw parameter_error("MoebiusMap: parameter must have spectral norm < 1");
  CMat Buu = bergman_B(u_, u_);
  sqrtB_ = Buu.sqrt();  // principal square root (spectra stay in the right half-plane)
}

CVec MoebiusMap::apply(const CVec& z) const {
  CMat Bz = bergman_B(z, -u_);
  Eigen::PartialPivLU<CMat> lu(Bz);
  if (std::abs(lu.determinant()) < 1e-12)
    throw parameter_error("MoebiusMap::apply: B(z,-u) singular, z outside the domain");
  CVec rhs = z + quadratic_Q(z, u_.conjugate());
  return u_ + sqrtB_ * lu.solve(rhs);
}

CMat MoebiusMap::differential(const CVec& z) const {
  CMat Bz = bergman_B(z, -u_);
  Eigen::PartialPivLU<CMat> lu(Bz);
  if (std::abs(lu.determinant()) < 1e-12)
    throw parameter_error("MoebiusMap::differential: B(z,-u) singular, z outside the domain");
  return sqrtB_ * lu.inverse();
}

Complex MoebiusMap::jacobian_det(const CVec& z) const { return differential(z).determinant(); }

MatrixBallPoint hua_transform(const CVec& z) {
  const int n = int(z.size());
  const Complex q = qform(z);
  const Complex a = 0.5 * (q + 1.0), b = Complex(0, 0.5) * (q - 1.0);
  const Complex c = 0.5 * (std::conj(q) + 1.0), d = Complex(0, -0.5) * (std::conj(q) - 1.0);
  const Complex det = a * d - b * c;  // = i (1-|q|^2) / 2
  if (std::abs(det) < 1e-14) throw parameter_error("hua_transform: z outside the domain (|zz^t| = 1)");
  MatrixBallPoint out;
  out.Z.resize(n, 2);
  for (int k = 0; k < n; ++k) {
    Complex r1 = z(k), r2 = std::conj(z(k));
    Complex xk = (d * r1 - b * r2) / det;
    Complex yk = (-c * r1 + a * r2) / det;
    out.Z(k, 0) = xk.real();
    out.Z(k, 1) = yk.real();
  }
  return out;
}

CVec hua_inverse(const MatrixBallPoint& Zp) {
  const int n = int(Zp.Z.rows());
  RVec X = Zp.Z.col(0), Y = Zp.Z.col(1);
  const double nx = X.squaredNorm(), ny = Y.squaredNorm(), xy = X.dot(Y);
  const double disc = (1.0 - nx) * (1.0 - ny) - xy * xy;  // det(I - Z^t Z)
  if (disc <= 0.0) throw parameter_error("hua_inverse: Z outside the matrix ball");
  CVec w = X.cast<Complex>() + Complex(0, 1) * Y.cast<Complex>();
  const Complex qw = qform(w);
  // zz^t solves a quadratic in q; the interior root is conj(qw) / N_plus with
  // N_plus = 2 - |X|^2 - |Y|^2 + 2 sqrt(disc), stable also as qw -> 0
  const double Nplus = 2.0 - nx - ny + 2.0 * std::sqrt(disc);
  const Complex qz = std::conj(qw) / Nplus;
  CVec z(n);
  for (int k = 0; k < n; ++k)
    z(k) = 0.5 * ((qz + 1.0) * Complex(X(k)) + Complex(0, 1) * (qz - 1.0) * Complex(Y(k)));
  return z;
}

CVec cayley(const CVec& z) {
  const int n = int(z.size());
  const Complex q = qform(z);
  const Complex den = 1.0 - 2.0 * z(0) + q;
  if (std::abs(den) < 1e-14) throw parameter_error("cayley: pole at 1 - 2 z1 + zz^t = 0");
  CVec out(n);
  out(0) = (1.0 - q) / den;
  for (int k = 1; k < n; ++k) out(k) = 2.0 * z(k) / den;
  return out;
}

CVec cayley_inverse(const CVec& w) { return -cayley(-w); }

namespace {

RMat lorentz_form(int n) {
  RMat eta = -RMat::Identity(n + 1, n + 1);
  eta(0, 0) = 1.0;
  return eta;
}

}  // namespace

LorentzElement::LorentzElement(RMat m) : g(std::move(m)) {
  const int N = int(g.rows());
  if (g.cols() != N || N < 4) throw parameter_error("LorentzElement: expected square (1+n)x(1+n), n >= 3");
  RMat eta = lorentz_form(N - 1);
  double resid = (g.transpose() * eta * g - eta).cwiseAbs().maxCoeff();
  if (resid > 1e-9) throw parameter_error("LorentzElement: matrix does not preserve the form");
  if (g(0, 0) < 1.0 - 1e-12) throw parameter_error("LorentzElement: not in the identity component");
}

LorentzElement LorentzElement::identity(int n) { return LorentzElement(RMat::Identity(n + 1, n + 1)); }

LorentzElement LorentzElement::boost(int n, double rapidity, const RVec& direction) {
  RVec d = direction.normalized();
  RMat g = RMat::Identity(n + 1, n + 1);
  const double ch = std::cosh(rapidity), sh = std::sinh(rapidity);
  g(0, 0) = ch;
  g.block(0, 1, 1, n) = sh * d.transpose();
  g.block(1, 0, n, 1) = sh * d;
  g.block(1, 1, n, n) = RMat::Identity(n, n) + (ch - 1.0) * d * d.transpose();
  return LorentzElement(g);
}

LorentzElement LorentzElement::rotation(const RMat& O) {
  const int n = int(O.rows());
  if ((O.transpose() * O - RMat::Identity(n, n)).cwiseAbs().maxCoeff() > 1e-10 || O.determinant() < 0.0)
    throw parameter_error("LorentzElement::rotation: O must be in SO(n)");
  RMat g = RMat::Identity(n + 1, n + 1);
  g.block(1, 1, n, n) = O;
  return LorentzElement(g);
}

RVec lorentz_apply(const LorentzElement& g, const RVec& x) {
  const int n = g.n();
  const double a = g.g(0, 0);
  RVec b = g.g.block(0, 1, 1, n).transpose();
  RVec c = g.g.block(1, 0, n, 1);
  RMat D = g.g.block(1, 1, n, n);
  const double den = a + b.dot(x);
  return (c + D * x) / den;
}

RMat embed_theta(const LorentzElement& g) {
  const int n = g.n();
  RMat big = RMat::Zero(n + 2, n + 2);
  big(0, 0) = g.g(0, 0);
  big(1, 1) = 1.0;
  big.block(0, 2, 1, n) = g.g.block(0, 1, 1, n);
  big.block(2, 0, n, 1) = g.g.block(1, 0, n, 1);
  big.block(2, 2, n, n) = g.g.block(1, 1, n, n);
  return big;
}

MatrixBallPoint matrix_ball_apply(const RMat& big, const MatrixBallPoint& Z) {
  const int n = int(Z.Z.rows());
  RMat A = big.block(0, 0, 2, 2);
  RMat Bb = big.block(0, 2, 2, n);
  RMat Cc = big.block(2, 0, n, 2);
  RMat Dd = big.block(2, 2, n, n);
  Eigen::Matrix2d M = A + Bb * Z.Z;
  MatrixBallPoint out;
  out.Z = (Cc + Dd * Z.Z) * M.inverse();
  return out;
}

RealAutomorphism RealAutomorphism::moebius(const RVec& u) {
  RealAutomorphism g;
  g.steps_.push_back({false, RMat(), u});
  return g;
}

RealAutomorphism RealAutomorphism::rotation(const RMat& O) {
  RealAutomorphism g;
  g.steps_.push_back({true, O, RVec()});
  return g;
}

RealAutomorphism RealAutomorphism::from_lorentz(const LorentzElement& g) {
  const int n = g.n();
  const double a = g.g(0, 0);
  RVec c = g.g.block(1, 0, n, 1);
  RealAutomorphism out;
  RMat Dblock;
  if (c.norm() < 1e-14) {
    Dblock = g.g.block(1, 1, n, n);
    out.steps_.push_back({true, Dblock, RVec()});
    return out;
  }
  const double t = std::acosh(std::max(a, 1.0));
  RVec dir = c.normalized();
  LorentzElement B = LorentzElement::boost(n, t, dir);
  // g = B * R with R a pure rotation; the ball action applies R first
  RMat Rfull = B.g.inverse() * g.g;
  RMat O = Rfull.block(1, 1, n, n);
  out.steps_.push_back({true, O, RVec()});
  RVec u = std::tanh(0.5 * t) * dir;
  out.steps_.push_back({false, RMat(), u});
  return out;
}

RealAutomorphism RealAutomorphism::then(const RealAutomorphism& next) const {
  RealAutomorphism out = *this;
  out.steps_.insert(out.steps_.end(), next.steps_.begin(), next.steps_.end());
  return out;
}

RealAutomorphism RealAutomorphism::inverse() const {
  RealAutomorphism out;
  for (auto it = steps_.rbegin(); it != steps_.rend(); ++it) {
    if (it->is_rotation)
      out.steps_.push_back({true, RMat(it->O.transpose()), RVec()});
    else
      out.steps_.push_back({false, RMat(), RVec(-it->u)});
  }
  return out;
}

RVec RealAutomorphism::apply(const RVec& x) const {
  RVec cur = x;
  for (const auto& st : steps_) {
    if (st.is_rotation) {
      cur = st.O * cur;
    } else {
      MoebiusMap m(st.u.cast<Complex>());
      cur = m.apply(cur.cast<Complex>()).real();
    }
  }
  return cur;
}

CVec RealAutomorphism::apply_complex(const CVec& z) const {
  CVec cur = z;
  for (const auto& st : steps_) {
    if (st.is_rotation)
      cur = st.O.cast<Complex>() * cur;
    else
      cur = MoebiusMap(st.u.cast<Complex>()).apply(cur);
  }
  return cur;
}

double RealAutomorphism::jacobian(const RVec& x) const {
  // closed form for a moebius factor: J(x) = h(u,u)^{n/2} / h(x,-u)^n,
  // valid up to and including the boundary |x| = 1
  const int n = int(x.size());
  RVec cur = x;
  double J = 1.0;
  for (const auto& st : steps_) {
    if (st.is_rotation) {
      cur = st.O * cur;
    } else {
      const double huu = std::pow(1.0 - st.u.squaredNorm(), 2);  // h(u,u) for real u
      // for real x: h(x,-u) = 1 + 2 (x,u) + (xx^t)(uu^t)
      const double hxmu = 1.0 + 2.0 * cur.dot(st.u) + cur.squaredNorm() * st.u.squaredNorm();
      J *= std::pow(huu, 0.5 * n) / std::pow(hxmu, n);
      cur = MoebiusMap(st.u.cast<Complex>()).apply(cur.cast<Complex>()).real();
    }
  }
  return J;
}

Complex RealAutomorphism::jacobian_complex(const CVec& z) const {
  CVec cur = z;
  Complex J = 1.0;
  for (const auto& st : steps_) {
    if (st.is_rotation) {
      J *= st.O.cast<Complex>().determinant();
      cur = st.O.cast<Complex>() * cur;
    } else {
      MoebiusMap m(st.u.cast<Complex>());
      J *= m.jacobian_det(cur);
      cur = m.apply(cur);
    }
  }
  return J;
}

}  // namespace lieball
