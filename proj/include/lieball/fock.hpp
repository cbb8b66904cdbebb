#ifndef LIEBALL_FOCK_HPP
#define LIEBALL_FOCK_HPP

#include "lieball/geometry.hpp"
#include "lieball/poly.hpp"

namespace lieball {

// Fock-Fischer pairing <p,q> = p(d) q* |_0 computed in the w-coordinates
// w = sqrt(2) z; on z-monomials this is <z^a, z^b> = delta_ab 2^{-|a|} a!,
// so the value is rational for rational inputs.
RatC fock_inner(const PolyQ& p, const PolyQ& q);
Complex fock_inner(const PolyC& p, const PolyC& q);

struct HarmonicComponent {
  int k;         // power of zz^t
  PolyQ h;       // harmonic factor of degree m - 2k
};

// Hua-Schmid decomposition p = sum_k (zz^t)^k h_{m-2k} of a homogeneous p,
// exact over the rationals
std::vector<HarmonicComponent> harmonic_decompose(const PolyQ& p, int m);
std::vector<HarmonicComponent> harmonic_decompose_c(const PolyC& p, int m);

// ||(zz^t)^k||^2 in n-variable Fock norm: k! (n/2)_k
Rational fock_norm_qk_sq(int n, int k);

// (nu)_{m-k} (nu - (n-2)/2)_k, the coefficient of K_{(m-k,k)} in h^{-nu}
double kernel_expansion_coeff(int m, int k, const ModelParams& mp);

// ||(zz^t)^k||^2 in the H_nu norm: k!(n/2)_k / ((nu)_k (nu-(n-2)/2)_k)
double hnu_norm_qk_sq(const ModelParams& mp, int k);

// inner product of H_nu on polynomials: decompose into E_{m-2k} (x) (zz^t)^k
// blocks and scale the Fock pairing by 1/((nu)_{m-k}(nu-(n-2)/2)_k).
// At the minimal point nu = (n-2)/2 only k = 0 blocks are admissible.
Complex hnu_inner(const PolyC& p, const PolyC& q, const ModelParams& mp);

// exact moment of the invariant probability measure on S^{n-1}:
// int zeta^e dsigma = prod (1/2)_{e_i/2} / (n/2)_{|e|/2} for even e, else 0
Rational sphere_moment(const std::vector<int>& e, int n);

// int_B p conj(q) dsigma for polynomials restricted to the sphere, exact
RatC sphere_l2_inner(const PolyQ& p, const PolyQ& q, int n);
Complex sphere_l2_inner(const PolyC& p, const PolyC& q, int n);

// scalar-form reproducing kernels of E_j with the Fock norm: F_j(z,w) is a
// polynomial in t = (z, conj w), a = zz^t, b = conj(ww^t); returned as
// coefficients of t^(j-2i) (a b)^i, i = 0..j/2
std::vector<double> fock_harmonic_kernel(int n, int j);

}  // namespace lieball

#endif
