#include "lieball/fock.hpp"

#include <cmath>

namespace lieball {

namespace {

BigInt factorial_big(int k) {
  BigInt f = 1;
  for (int j = 2; j <= k; ++j) f *= j;
  return f;
}

// a! 2^{-|a|} as a rational
Rational mono_fock_weight(MonoKey k, int nvars) {
  BigInt num = 1;
  int deg = 0;
  for (int i = 0; i < nvars; ++i) {
    int e = mono_exp(k, i);
    num *= factorial_big(e);
    deg += e;
  }
  BigInt den = BigInt(1) << deg;
  return Rational(num, den);
}

}  // namespace

RatC fock_inner(const PolyQ& p, const PolyQ& q) {
  RatC s(0);
  const PolyQ *small = &p, *big = &q;
  if (p.terms.size() > q.terms.size()) std::swap(small, big);
  for (const auto& [k, a] : small->terms) {
    auto it = big->terms.find(k);
    if (it == big->terms.end()) continue;
    const RatC& cp = (small == &p) ? a : it->second;
    const RatC& cq = (small == &p) ? it->second : a;
    s += cp * coef_conj(cq) * RatC(mono_fock_weight(k, p.nvars));
  }
  return s;
}

Complex fock_inner(const PolyC& p, const PolyC& q) {
  Complex s = 0.0;
  for (const auto& [k, a] : p.terms) {
    auto it = q.terms.find(k);
    if (it == q.terms.end()) continue;
    s += a * std::conj(it->second) * static_cast<double>(mono_fock_weight(k, p.nvars));
  }
  return s;
}

std::vector<HarmonicComponent> harmonic_decompose(const PolyQ& p, int m) {
  if (!p.is_homogeneous(m)) throw parameter_error("harmonic_decompose: input not homogeneous of the stated degree");
  std::vector<HarmonicComponent> out;
  if (p.is_zero()) return out;
  if (m <= 1) {
    out.push_back({0, p});
    return out;
  }
  PolyQ lap = p.laplacian();
  std::vector<HarmonicComponent> sub = harmonic_decompose(lap, m - 2);
  // lap((zz^t)^k h) = 2k (n + 2m - 2k - 2) (zz^t)^{k-1} h for harmonic h of degree m-2k
  const int n = p.nvars;
  PolyQ rest = p;
  PolyQ q = q_poly<RatC>(n);
  for (const auto& comp : sub) {
    int k = comp.k + 1;
    Rational gamma = Rational(2 * k) * Rational(n + 2 * m - 2 * k - 2);
    PolyQ h(n);
    for (const auto& [key, c] : comp.h.terms) h.terms[key] = c / gamma;
    PolyQ qk = PolyQ::constant(n, RatC(1));
    for (int j = 0; j < k; ++j) qk = qk * q;
    rest = rest - qk * h;
    if (!h.is_zero()) out.push_back({k, h});
  }
  if (!rest.is_zero()) out.insert(out.begin(), {0, rest});
  return out;
}

std::vector<HarmonicComponent> harmonic_decompose_c(const PolyC& p, int m) {
  return harmonic_decompose(to_rational(p), m);
}

Rational fock_norm_qk_sq(int n, int k) {
  // k! (n/2)_k = k! prod (n/2 + j) with halves kept exact
  Rational r = Rational(factorial_big(k));
  for (int j = 0; j < k; ++j) r *= Rational(n + 2 * j, 2);
  return r;
}

double kernel_expansion_coeff(int m, int k, const ModelParams& mp) {
  if (m - 2 * k < 0) throw parameter_error("kernel_expansion_coeff: requires m - 2k >= 0");
  return pochhammer(mp.nu, m - k) * pochhammer(mp.nu - mp.wallach_bound(), k);
}

double hnu_norm_qk_sq(const ModelParams& mp, int k) {
  if (mp.minimal() && k > 0)
    throw parameter_error("hnu_norm_qk_sq: (zz^t)^k is not in the space at the minimal point");
  return static_cast<double>(fock_norm_qk_sq(mp.n, k)) /
         (pochhammer(mp.nu, k) * pochhammer(mp.nu - mp.wallach_bound(), k));
}

Complex hnu_inner(const PolyC& p, const PolyC& q, const ModelParams& mp) {
  if (p.is_zero() || q.is_zero()) return 0.0;
  const int dp = p.degree(), dq = q.degree();
  Complex s = 0.0;
  for (int m = 0; m <= std::min(dp, dq); ++m) {
    PolyC pm = p.homogeneous_component(m), qm = q.homogeneous_component(m);
    if (pm.is_zero() || qm.is_zero()) continue;
    auto pc = harmonic_decompose_c(pm, m);
    auto qc = harmonic_decompose_c(qm, m);
    if (mp.minimal()) {
      for (const auto& comp : pc)
        if (comp.k > 0) throw parameter_error("hnu_inner: k > 0 component at the minimal point nu = (n-2)/2");
      for (const auto& comp : qc)
        if (comp.k > 0) throw parameter_error("hnu_inner: k > 0 component at the minimal point nu = (n-2)/2");
    }
    PolyQ qpoly = q_poly<RatC>(p.nvars);
    for (const auto& a : pc)
      for (const auto& b : qc) {
        if (a.k != b.k) continue;  // blocks with different k are orthogonal
        PolyQ qk = PolyQ::constant(p.nvars, RatC(1));
        for (int j = 0; j < a.k; ++j) qk = qk * qpoly;
        RatC pair = fock_inner(qk * a.h, qk * b.h);
        s += to_complex(pair) / kernel_expansion_coeff(m, a.k, mp);
      }
  }
  return s;
}

Rational sphere_moment(const std::vector<int>& e, int n) {
  int total = 0;
  for (int x : e) {
    if (x % 2 != 0) return Rational(0);
    total += x / 2;
  }
  Rational r(1);
  for (int x : e)
    for (int j = 0; j < x / 2; ++j) r *= Rational(1 + 2 * j, 2);  // (1/2)_{x/2}
  for (int j = 0; j < total; ++j) r /= Rational(n + 2 * j, 2);    // (n/2)_{total}
  return r;
}

RatC sphere_l2_inner(const PolyQ& p, const PolyQ& q, int n) {
  RatC s(0);
  std::vector<int> e(n);
  for (const auto& [ka, a] : p.terms)
    for (const auto& [kb, b] : q.terms) {
      for (int i = 0; i < n; ++i) e[i] = mono_exp(ka, i) + mono_exp(kb, i);
      Rational m = sphere_moment(e, n);
      if (m != 0) s += a * coef_conj(b) * RatC(m);
    }
  return s;
}

Complex sphere_l2_inner(const PolyC& p, const PolyC& q, int n) {
  Complex s = 0.0;
  std::vector<int> e(n);
  for (const auto& [ka, a] : p.terms)
    for (const auto& [kb, b] : q.terms) {
      for (int i = 0; i < n; ++i) e[i] = mono_exp(ka, i) + mono_exp(kb, i);
      Rational m = sphere_moment(e, n);
      if (m != 0) s += a * std::conj(b) * static_cast<double>(m);
    }
  return s;
}

std::vector<double> fock_harmonic_kernel(int n, int j) {
  // recurrence from  2^j t^j / j! = sum_{2k<=j} a^k b^k F_{j-2k}(t,ab) / (k! (n/2 + j - 2k)_k)
  // where t^j is the full P^j Fock kernel; solved top-down for F_j
  static_assert(sizeof(double) == 8);
  std::vector<std::vector<double>> F(j + 1);
  for (int d = 0; d <= j; ++d) {
    std::vector<double> coef(d / 2 + 1, 0.0);
    coef[0] = std::pow(2.0, d) / std::tgamma(d + 1.0);  // t^d coefficient of the P^d kernel
    for (int k = 1; 2 * k <= d; ++k) {
      double scale = 1.0 / (std::tgamma(k + 1.0) * pochhammer(0.5 * n + d - 2 * k, k));
      // subtract (ab)^k F_{d-2k}: its t^{d-2k-2i}(ab)^{i+k} terms
      const auto& sub = F[d - 2 * k];
      for (std::size_t i = 0; i < sub.size(); ++i) coef[i + k] -= scale * sub[i];
    }
    F[d] = std::move(coef);
  }
  return F[j];
}

}  // namespace lieball
