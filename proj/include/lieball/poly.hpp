#ifndef LIEBALL_POLY_HPP
#define LIEBALL_POLY_HPP

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_int.hpp>
#include <complex>
#include <cstdint>
#include <map>
#include <vector>

#include "lieball/errors.hpp"

namespace lieball {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// complex number with exact rational parts
struct RatC {
  Rational re, im;

  RatC() = default;
  RatC(Rational r) : re(std::move(r)) {}
  RatC(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
  RatC(int r) : re(r) {}

  friend RatC operator+(const RatC& a, const RatC& b) { return {a.re + b.re, a.im + b.im}; }
  friend RatC operator-(const RatC& a, const RatC& b) { return {a.re - b.re, a.im - b.im}; }
  friend RatC operator-(const RatC& a) { return {-a.re, -a.im}; }
  friend RatC operator*(const RatC& a, const RatC& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  RatC& operator+=(const RatC& b) {
    re += b.re;
    im += b.im;
    return *this;
  }
  friend RatC operator/(const RatC& a, const Rational& d) { return {a.re / d, a.im / d}; }
  friend bool operator==(const RatC& a, const RatC& b) { return a.re == b.re && a.im == b.im; }
};

inline bool coef_is_zero(const RatC& c) { return c.re == 0 && c.im == 0; }
inline bool coef_is_zero(const std::complex<double>& c) { return c == std::complex<double>(0.0, 0.0); }
inline RatC coef_conj(const RatC& c) { return {c.re, -c.im}; }
inline std::complex<double> coef_conj(const std::complex<double>& c) { return std::conj(c); }
inline std::complex<double> to_complex(const RatC& c) {
  return {static_cast<double>(c.re), static_cast<double>(c.im)};
}

// exponent multi-index packed into 8 bytes, lexicographic order = key order
using MonoKey = std::uint64_t;

inline MonoKey mono_pack(const std::vector<int>& e) {
  MonoKey k = 0;
  for (std::size_t i = 0; i < e.size(); ++i) k |= MonoKey(e[i] & 0xff) << (8 * (7 - i));
  return k;
}
inline int mono_exp(MonoKey k, int i) { return int((k >> (8 * (7 - i))) & 0xff); }
inline int mono_degree(MonoKey k) {
  int d = 0;
  for (int i = 0; i < 8; ++i) d += int((k >> (8 * i)) & 0xff);
  return d;
}

// sparse multivariate polynomial over C (complex<double> or RatC coefficients)
template <class C>
struct Poly {
  int nvars = 0;
  std::map<MonoKey, C> terms;

  Poly() = default;
  explicit Poly(int n) : nvars(n) {
    if (n < 1 || n > 8) throw parameter_error("Poly: supported for 1..8 variables");
  }

  static Poly constant(int n, C c) {
    Poly p(n);
    if (!coef_is_zero(c)) p.terms[0] = std::move(c);
    return p;
  }
  static Poly variable(int n, int i) {
    Poly p(n);
    std::vector<int> e(n, 0);
    e[i] = 1;
    p.terms[mono_pack(e)] = C(1);
    return p;
  }

  void add_term(const std::vector<int>& e, C c) {
    if (coef_is_zero(c)) return;
    MonoKey k = mono_pack(e);
    auto it = terms.find(k);
    if (it == terms.end()) {
      terms.emplace(k, std::move(c));
    } else {
      it->second += c;
      if (coef_is_zero(it->second)) terms.erase(it);
    }
  }

  int degree() const {
    int d = 0;
    for (const auto& [k, c] : terms) d = std::max(d, mono_degree(k));
    return d;
  }
  bool is_zero() const { return terms.empty(); }
  bool is_homogeneous(int m) const {
    for (const auto& [k, c] : terms)
      if (mono_degree(k) != m) return false;
    return true;
  }

  Poly homogeneous_component(int m) const {
    Poly out(nvars);
    for (const auto& [k, c] : terms)
      if (mono_degree(k) == m) out.terms[k] = c;
    return out;
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    Poly out = a;
    for (const auto& [k, c] : b.terms) {
      auto it = out.terms.find(k);
      if (it == out.terms.end()) {
        out.terms[k] = c;
      } else {
        it->second += c;
        if (coef_is_zero(it->second)) out.terms.erase(it);
      }
    }
    return out;
  }
  friend Poly operator-(const Poly& a, const Poly& b) { return a + (C(-1) * b); }
  friend Poly operator*(const C& s, const Poly& p) {
    Poly out(p.nvars);
    if (coef_is_zero(s)) return out;
    for (const auto& [k, c] : p.terms) {
      C v = s * c;
      if (!coef_is_zero(v)) out.terms[k] = v;
    }
    return out;
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly out(a.nvars);
    for (const auto& [ka, ca] : a.terms)
      for (const auto& [kb, cb] : b.terms) {
        C v = ca * cb;
        if (coef_is_zero(v)) continue;
        MonoKey k = ka + kb;
        auto it = out.terms.find(k);
        if (it == out.terms.end()) {
          out.terms[k] = v;
        } else {
          it->second += v;
          if (coef_is_zero(it->second)) out.terms.erase(it);
        }
      }
    return out;
  }

  Poly derivative(int i) const {
    Poly out(nvars);
    std::vector<int> e(nvars);
    for (const auto& [k, c] : terms) {
      for (int j = 0; j < nvars; ++j) e[j] = mono_exp(k, j);
      if (e[i] == 0) continue;
      C v = C(e[i]) * c;
      e[i] -= 1;
      out.terms[mono_pack(e)] = v;
      e[i] += 1;
    }
    return out;
  }

  Poly laplacian() const {
    Poly out(nvars);
    for (int i = 0; i < nvars; ++i) out = out + derivative(i).derivative(i);
    return out;
  }

  Poly conj_coeffs() const {
    Poly out(nvars);
    for (const auto& [k, c] : terms) out.terms[k] = coef_conj(c);
    return out;
  }

  template <class Pt>
  auto eval(const Pt& z) const {
    std::complex<double> s = 0.0;
    for (const auto& [k, c] : terms) {
      std::complex<double> m = 1.0;
      for (int i = 0; i < nvars; ++i)
        for (int j = 0; j < mono_exp(k, i); ++j) m *= z(i);
      if constexpr (std::is_same_v<C, RatC>)
        s += to_complex(c) * m;
      else
        s += c * m;
    }
    return s;
  }
};

using PolyC = Poly<std::complex<double>>;
using PolyQ = Poly<RatC>;

inline PolyC to_complex(const PolyQ& p) {
  PolyC out(p.nvars);
  for (const auto& [k, c] : p.terms) out.terms[k] = to_complex(c);
  return out;
}
inline PolyQ to_rational(const PolyC& p) {
  PolyQ out(p.nvars);
  for (const auto& [k, c] : p.terms) out.terms[k] = RatC(Rational(c.real()), Rational(c.imag()));
  return out;
}

// the radial generator zz^t = z_1^2 + ... + z_n^2
template <class C>
Poly<C> q_poly(int n) {
  Poly<C> p(n);
  std::vector<int> e(n, 0);
  for (int i = 0; i < n; ++i) {
    e[i] = 2;
    p.add_term(e, C(1));
    e[i] = 0;
  }
  return p;
}

// finite coefficient list a_k for sum a_k (zz^t)^k
struct RadialPolynomial {
  std::vector<std::complex<double>> coeffs;

  int top_degree() const { return coeffs.empty() ? -1 : int(coeffs.size()) - 1; }
  PolyC expand(int n) const {
    PolyC out(n), qk = PolyC::constant(n, 1.0);
    PolyC q = q_poly<std::complex<double>>(n);
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      out = out + coeffs[k] * qk;
      qk = qk * q;
    }
    return out;
  }
};

}  // namespace lieball

#endif
