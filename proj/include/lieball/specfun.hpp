#ifndef LIEBALL_SPECFUN_HPP
#define LIEBALL_SPECFUN_HPP

#include <complex>

#include "lieball/errors.hpp"

namespace lieball {

using Complex = std::complex<double>;

// log of the Gamma function for complex argument, Lanczos approximation with
// reflection for Re z < 1/2.  exp(ln_gamma(z)) reproduces Gamma(z) to ~1e-14
// relative in the desk range |z| <= 50; throws parameter_error at the poles.
Complex ln_gamma(Complex z);

Complex gamma_c(Complex z);

// rising factorial (a)_k = a (a+1) ... (a+k-1)
Complex pochhammer(Complex a, int k);
double pochhammer(double a, int k);

struct HypParams {
  Complex a, b, c;
};

// 2F1(a,b;c;x) for real x < 1.  Negative arguments go through the Pfaff map
// x -> x/(x-1); arguments in [0,1) are summed directly (they stay well below
// 1 in this library).  Throws parameter_error if c is a non-positive integer
// that the series reaches, convergence_error if the tail does not close.
Complex gauss_2f1(const HypParams& p, double x);

// terminating 3F2(-k, a2, a3; b1, b2; 1), exact finite sum of k+1 terms
Complex hyp3f2_terminating(int k, Complex a2, Complex a3, Complex b1, Complex b2);

// continuous dual Hahn polynomial S_k(x^2; a,b,c).  xsq may be negative
// (x imaginary); the value is real either way because the conjugate pair
// (a+ix)_l (a-ix)_l is the real product prod_j ((a+j)^2 + x^2).
double dual_hahn(int k, double xsq, double a, double b, double c);

}  // namespace lieball

#endif
