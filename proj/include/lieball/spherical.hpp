#ifndef LIEBALL_SPHERICAL_HPP
#define LIEBALL_SPHERICAL_HPP

#include <optional>

#include "lieball/fock.hpp"
#include "lieball/geometry.hpp"
#include "lieball/quadrature.hpp"

namespace lieball {

// point of the spectrum Lambda: the continuous ray lambda > 0 or the atom
// lambda = i (nu - (n-1)/2), stored through its imaginary part
struct SpectralPoint {
  enum class Kind { continuous, atom };
  Kind kind;
  double value;  // lambda itself, or nu - (n-1)/2 for the atom

  static SpectralPoint continuous(double lam) { return {Kind::continuous, lam}; }
  static SpectralPoint atom(const ModelParams& mp) {
    if (!mp.atom_regime()) throw parameter_error("SpectralPoint::atom: exists only for (n-2)/2 < nu < (n-1)/2");
    return {Kind::atom, mp.nu - mp.rho()};
  }
  Complex i_lambda() const {
    return kind == Kind::continuous ? Complex(0.0, value) : Complex(-value, 0.0);
  }
  double lambda_sq() const { return kind == Kind::continuous ? value * value : -value * value; }
};

// spherical function phi_lambda on the real ball through the 2F1 closed form
//   phi(x) = (1-u)^(rho+i lam) 2F1(rho+i lam, 1/2+i lam; n/2; u),  u = xx^t
Complex phi_hyp(const RVec& x, const SpectralPoint& lam, const ModelParams& mp);

// the sphere-integral route (Cor. form); the branch/sign oracle
Complex phi_quad(const RVec& x, const SpectralPoint& lam, const ModelParams& mp, const SphereRule& rule);

// coefficients c_k of R^{-1} phi_lambda(z) = sum c_k (zz^t)^k:
//   c_k = S_k(lam^2; 1/2, rho, nu-rho) / (k! (n/2)_k)
std::vector<double> rinv_phi_coeffs(const SpectralPoint& lam, const ModelParams& mp, int K);

// R^{-1} phi_lambda at a real point, closed form
Complex rinv_phi(const RVec& x, const SpectralPoint& lam, const ModelParams& mp);

// series route with a geometric tail estimate; throws convergence_error if
// the bound exceeds tol
Complex rinv_phi_series(const RVec& x, const SpectralPoint& lam, const ModelParams& mp, int K, double tol);

// p_{nu,k}(lambda) = c_k(lambda) ||(zz^t)^k||_nu, orthonormal under mu
double p_coeff(int k, const SpectralPoint& lam, const ModelParams& mp);

struct PlancherelMeasure {
  ModelParams params;
  double normalization;             // Gamma(n/2) Gamma(nu-(n-2)/2) Gamma(nu)
  std::optional<double> atom_mass;  // present iff (n-2)/2 < nu < (n-1)/2
  double lambda_max;
  double tail_bound;  // neglected weight mass beyond lambda_max (with poly factor)
  QuadratureRule grid;

  // (1/2pi) |Gamma(1/2+il) Gamma(rho+il) Gamma(nu-rho+il) / Gamma(2il)|^2
  double weight(double lam) const;

  // integral of f against d mu = (weight dlam + atom mass * delta)/normalization;
  // f is evaluated on SpectralPoints so the atom term uses the same code path
  template <class F>
  auto integrate(F&& f) const {
    auto cont = grid.integrate([&](double l) { return weight(l) * f(SpectralPoint::continuous(l)); });
    if (atom_mass) cont += *atom_mass * f(SpectralPoint::atom(params));
    return cont * (1.0 / normalization);
  }
  // continuous part only (used by the atom-necessity tests)
  template <class F>
  auto integrate_continuous_only(F&& f) const {
    auto cont = grid.integrate([&](double l) { return weight(l) * f(SpectralPoint::continuous(l)); });
    return cont * (1.0 / normalization);
  }
};

// build the measure; lambda_max <= 0 or panels <= 0 choose adaptive defaults
PlancherelMeasure plancherel_measure(const ModelParams& mp, double lambda_max = 0.0, int panels = 0);

// holomorphically extended e-function:
//   R^{-1} e_{lambda,b}(z) = (1-zz^t)^(i lam + rho - nu) (1 - 2(z,b) + zz^t)^(-(i lam + rho))
Complex rinv_e_function(const SpectralPoint& lam, const RVec& b, const CVec& z, const ModelParams& mp);

// boundary e-function on the real ball, e_{lambda,b}(x) = (h(x,x)^{1/2}/h(x,b))^{i lam + rho}
Complex e_function(const SpectralPoint& lam, const RVec& b, const RVec& x, const ModelParams& mp);

}  // namespace lieball

#endif
