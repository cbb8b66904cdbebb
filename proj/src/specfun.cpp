#include "lieball/specfun.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace lieball {

namespace {

constexpr double kPi = std::numbers::pi;

bool near_nonpositive_integer(Complex z, double tol = 1e-13) {
  if (std::abs(z.imag()) > tol) return false;
  double r = z.real();
  if (r > 0.5) return false;
  return std::abs(r - std::round(r)) < tol;
}

// Lanczos, g = 607/128, 15 terms (Godfrey's coefficients)
constexpr double kLanczosG = 607.0 / 128.0;
constexpr double kLanczos[15] = {
    0.99999999999999709182,     57.156235665862923517,
    -59.597960355475491248,     14.136097974741747174,
    -0.49191381609762019978,    0.33994649984811888699e-4,
    0.46523628927048575665e-4,  -0.98374475304879564677e-4,
    0.15808870322491248884e-3,  -0.21026444172410488319e-3,
    0.21743961811521264320e-3,  -0.16431810653676389022e-3,
    0.84418223983852743293e-4,  -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
};

Complex ln_gamma_lanczos(Complex z) {
  // valid for Re z >= 1/2
  Complex sum = kLanczos[0];
  for (int k = 1; k < 15; ++k) sum += kLanczos[k] / (z - 1.0 + double(k));
  Complex t = z - 0.5 + kLanczosG;
  return 0.5 * std::log(2.0 * kPi) + (z - 0.5) * std::log(t) - t + std::log(sum);
}

}  // namespace

Complex ln_gamma(Complex z) {
  if (near_nonpositive_integer(z))
    throw parameter_error("ln_gamma: pole at non-positive integer z=" + std::to_string(z.real()));
  if (z.real() >= 0.5) return ln_gamma_lanczos(z);
  // reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z)
  return std::log(kPi) - std::log(std::sin(kPi * z)) - ln_gamma_lanczos(1.0 - z);
}

Complex gamma_c(Complex z) { return std::exp(ln_gamma(z)); }

Complex pochhammer(Complex a, int k) {
  Complex p = 1.0;
  for (int j = 0; j < k; ++j) p *= a + double(j);
  return p;
}

double pochhammer(double a, int k) {
  double p = 1.0;
  for (int j = 0; j < k; ++j) p *= a + double(j);
  return p;
}

namespace {

// direct series for x in [0,1)
Complex series_2f1(Complex a, Complex b, Complex c, double x) {
  if (near_nonpositive_integer(c))
    throw parameter_error("gauss_2f1: lower parameter c is a non-positive integer");
  Complex term = 1.0, sum = 1.0;
  const int kmax = 200000;
  for (int k = 0; k < kmax; ++k) {
    term *= (a + double(k)) * (b + double(k)) / ((c + double(k)) * double(k + 1)) * x;
    sum += term;
    if (std::abs(term) <= 1e-17 * (1.0 + std::abs(sum))) return sum;
    if (term == Complex(0.0, 0.0)) return sum;  // terminating case
  }
  throw convergence_error("gauss_2f1: series did not converge at x=" + std::to_string(x) +
                          " after 200000 terms (|last term| = " + std::to_string(std::abs(term)) + ")");
}

}  // namespace

Complex gauss_2f1(const HypParams& p, double x) {
  if (!(x < 1.0)) throw parameter_error("gauss_2f1: argument must satisfy x < 1");
  if (x == 0.0) return 1.0;
  if (x < 0.0) {
    // Pfaff: 2F1(a,b;c;x) = (1-x)^(-a) 2F1(a, c-b; c; x/(x-1)), x/(x-1) in (0,1)
    double y = x / (x - 1.0);
    return std::pow(Complex(1.0 - x), -p.a) * series_2f1(p.a, p.c - p.b, p.c, y);
  }
  if (x <= 0.95) return series_2f1(p.a, p.b, p.c, x);
  throw convergence_error("gauss_2f1: argument too close to 1 (x=" + std::to_string(x) + ")");
}

Complex hyp3f2_terminating(int k, Complex a2, Complex a3, Complex b1, Complex b2) {
  Complex term = 1.0, sum = 1.0;
  for (int l = 0; l < k; ++l) {
    Complex d1 = b1 + double(l), d2 = b2 + double(l);
    Complex num = (double(-k) + double(l)) * (a2 + double(l)) * (a3 + double(l));
    if (num == Complex(0.0)) break;  // terminated early
    if (near_nonpositive_integer(d1) || near_nonpositive_integer(d2))
      throw parameter_error("hyp3f2_terminating: denominator parameter hits a non-positive integer inside the sum");
    term *= num / (d1 * d2 * double(l + 1));
    sum += term;
  }
  return sum;
}

double dual_hahn(int k, double xsq, double a, double b, double c) {
  if (near_nonpositive_integer(Complex(a + b)) || near_nonpositive_integer(Complex(a + c)))
    throw parameter_error("dual_hahn: a+b and a+c must not be non-positive integers");
  // 3F2(-k, a+ix, a-ix; a+b, a+c; 1) with (a+ix)_l (a-ix)_l = prod_j ((a+j)^2 + x^2)
  double term = 1.0, sum = 1.0;
  for (int l = 0; l < k; ++l) {
    double q = (a + l) * (a + l) + xsq;
    term *= double(-k + l) * q / ((a + b + l) * (a + c + l) * double(l + 1));
    sum += term;
  }
  return pochhammer(a + b, k) * pochhammer(a + c, k) * sum;
}

}  // namespace lieball
