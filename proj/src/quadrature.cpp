#include "lieball/quadrature.hpp"

#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>

namespace lieball {

namespace {
constexpr double kPi = std::numbers::pi;
}

QuadratureRule gauss_legendre(int order) {
  if (order < 1) throw parameter_error("gauss_legendre: order must be >= 1");
  QuadratureRule r;
  r.nodes.resize(order);
  r.weights.resize(order);
  const int m = (order + 1) / 2;
  for (int i = 1; i <= m; ++i) {
    // Newton on P_order with the usual Chebyshev-like start
    double z = std::cos(kPi * (i - 0.25) / (order + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p1 = 1.0, p2 = 0.0;
      for (int j = 1; j <= order; ++j) {
        double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j - 1.0) * z * p2 - (j - 1.0) * p3) / j;
      }
      pp = order * (z * p1 - p2) / (z * z - 1.0);
      double z1 = z;
      z = z1 - p1 / pp;
      if (std::abs(z - z1) < 1e-15) break;
    }
    double p1 = 1.0, p2 = 0.0;
    for (int j = 1; j <= order; ++j) {
      double p3 = p2;
      p2 = p1;
      p1 = ((2.0 * j - 1.0) * z * p2 - (j - 1.0) * p3) / j;
    }
    pp = order * (z * p1 - p2) / (z * z - 1.0);
    r.nodes[i - 1] = -z;
    r.nodes[order - i] = z;
    r.weights[i - 1] = 2.0 / ((1.0 - z * z) * pp * pp);
    r.weights[order - i] = r.weights[i - 1];
  }
  return r;
}

QuadratureRule gauss_legendre(int order, double a, double b) {
  QuadratureRule r = gauss_legendre(order);
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  for (int i = 0; i < order; ++i) {
    r.nodes[i] = mid + half * r.nodes[i];
    r.weights[i] *= half;
  }
  return r;
}

QuadratureRule gauss_jacobi(int order, double alpha, double beta) {
  if (order < 1) throw parameter_error("gauss_jacobi: order must be >= 1");
  if (alpha <= -1.0 || beta <= -1.0) throw parameter_error("gauss_jacobi: exponents must exceed -1");
  // Golub-Welsch on the symmetric Jacobi recurrence matrix
  Eigen::MatrixXd T = Eigen::MatrixXd::Zero(order, order);
  auto diag = [&](int k) {
    double s = 2.0 * k + alpha + beta;
    if (k == 0) return (beta - alpha) / (alpha + beta + 2.0);
    return (beta * beta - alpha * alpha) / (s * (s + 2.0));
  };
  auto offdiag = [&](int k) {  // b_k for k >= 1
    double s = 2.0 * k + alpha + beta;
    double num = 4.0 * k * (k + alpha) * (k + beta) * (k + alpha + beta);
    double den = s * s * (s + 1.0) * (s - 1.0);
    if (k == 1) {
      num = 4.0 * (1.0 + alpha) * (1.0 + beta);
      den = (alpha + beta + 2.0) * (alpha + beta + 2.0) * (alpha + beta + 3.0);
      return std::sqrt(num / den);
    }
    return std::sqrt(num / den);
  };
  for (int k = 0; k < order; ++k) {
    T(k, k) = diag(k);
    if (k + 1 < order) T(k, k + 1) = T(k + 1, k) = offdiag(k + 1);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(T);
  const double mu0 = std::pow(2.0, alpha + beta + 1.0) *
                     std::exp(std::lgamma(alpha + 1.0) + std::lgamma(beta + 1.0) - std::lgamma(alpha + beta + 2.0));
  QuadratureRule r;
  r.nodes.resize(order);
  r.weights.resize(order);
  for (int i = 0; i < order; ++i) {
    r.nodes[i] = es.eigenvalues()(i);
    double v = es.eigenvectors()(0, i);
    r.weights[i] = mu0 * v * v;
  }
  return r;
}

SphereRule sphere_rule(int n, int order) {
  if (n < 3) throw parameter_error("sphere_rule: supported only for n >= 3");
  if (order < 1) throw parameter_error("sphere_rule: order must be >= 1");
  if (n == 3) {
    // S^2: t = cos(theta) Gauss-Legendre (weight 1 after normalisation),
    // azimuth uniform with 2*order points
    QuadratureRule tr = gauss_legendre(order);
    const int m = 2 * order;
    SphereRule s;
    s.points.resize(order * m, 3);
    s.weights.resize(order * m);
    for (int i = 0; i < order; ++i) {
      double t = tr.nodes[i], st = std::sqrt(std::max(0.0, 1.0 - t * t));
      for (int j = 0; j < m; ++j) {
        double phi = 2.0 * kPi * (j + 0.5) / m;
        int row = i * m + j;
        s.points(row, 0) = t;
        s.points(row, 1) = st * std::cos(phi);
        s.points(row, 2) = st * std::sin(phi);
        s.weights(row) = 0.5 * tr.weights[i] / m;
      }
    }
    return s;
  }
  // zeta = (t, sqrt(1-t^2) omega), omega on S^{n-2};
  // dsigma_n = c_n (1-t^2)^((n-3)/2) dt dsigma_{n-1}
  QuadratureRule tr = gauss_jacobi(order, 0.5 * (n - 3), 0.5 * (n - 3));
  double total = 0.0;
  for (double w : tr.weights) total += w;
  SphereRule sub = sphere_rule(n - 1, order);
  SphereRule s;
  const Eigen::Index nsub = sub.points.rows();
  s.points.resize(order * nsub, n);
  s.weights.resize(order * nsub);
  for (int i = 0; i < order; ++i) {
    double t = tr.nodes[i], st = std::sqrt(std::max(0.0, 1.0 - t * t));
    for (Eigen::Index j = 0; j < nsub; ++j) {
      Eigen::Index row = i * nsub + j;
      s.points(row, 0) = t;
      s.points.row(row).tail(n - 1) = st * sub.points.row(j);
      s.weights(row) = (tr.weights[i] / total) * sub.weights(j);
    }
  }
  return s;
}

QuadratureRule half_line_rule(double lambda_max, int panels, int per_panel) {
  if (lambda_max <= 0.0 || panels < 1) throw parameter_error("half_line_rule: bad parameters");
  QuadratureRule r;
  r.domain_tag = DomainTag::half_line;
  const double h = lambda_max / panels;
  for (int p = 0; p < panels; ++p) {
    QuadratureRule g = gauss_legendre(per_panel, p * h, (p + 1) * h);
    r.nodes.insert(r.nodes.end(), g.nodes.begin(), g.nodes.end());
    r.weights.insert(r.weights.end(), g.weights.begin(), g.weights.end());
  }
  return r;
}

}  // namespace lieball
