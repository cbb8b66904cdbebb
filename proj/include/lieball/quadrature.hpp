#ifndef LIEBALL_QUADRATURE_HPP
#define LIEBALL_QUADRATURE_HPP

#include <Eigen/Dense>
#include <vector>

#include "lieball/errors.hpp"

namespace lieball {

enum class DomainTag { interval, sphere, half_line };

// one-dimensional rule (interval or half-line panels)
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  DomainTag domain_tag = DomainTag::interval;

  template <class F>
  auto integrate(F&& f) const {
    using R = decltype(f(0.0));
    R s = weights.empty() ? R{} : R(weights[0]) * f(nodes[0]);
    for (std::size_t i = 1; i < nodes.size(); ++i) s += R(weights[i]) * f(nodes[i]);
    return s;
  }
};

// nodes on S^{n-1} with weights summing to 1 (the invariant probability
// measure sigma); product Gauss rules in angular coordinates
struct SphereRule {
  Eigen::MatrixXd points;   // N x n, rows on the unit sphere
  Eigen::VectorXd weights;  // sums to 1

  template <class F>
  auto integrate(F&& f) const {
    using R = decltype(f(points.row(0)));
    R s = weights(0) * f(points.row(0));
    for (Eigen::Index i = 1; i < points.rows(); ++i) s += weights(i) * f(points.row(i));
    return s;
  }
};

// Gauss-Legendre on [-1,1]
QuadratureRule gauss_legendre(int order);
QuadratureRule gauss_legendre(int order, double a, double b);

// Gauss-Jacobi on [-1,1] with weight (1-t)^alpha (1+t)^beta, alpha,beta > -1
QuadratureRule gauss_jacobi(int order, double alpha, double beta);

// product rule on S^{n-1}, n >= 3; exact on spherical harmonics of degree
// <= 2*order-1 in each angular factor
SphereRule sphere_rule(int n, int order);

// composite Gauss-Legendre panels on [0, lambda_max]
QuadratureRule half_line_rule(double lambda_max, int panels, int per_panel = 20);

}  // namespace lieball

#endif
