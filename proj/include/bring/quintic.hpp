#ifndef BRING_QUINTIC_HPP
#define BRING_QUINTIC_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

namespace bring {

using cplx = std::complex<double>;

/// Coefficients of x^5 + a x + b.
struct QuinticParams {
  cplx a;
  cplx b;

  cplx eval(cplx x) const { return x * x * x * x * x + a * x + b; }
  cplx derivative(cplx x) const { return 5.0 * x * x * x * x + a; }
  /// Magnitude of the terms at x; residuals are measured relative to it.
  double scale(cplx x) const { return std::pow(std::abs(x), 5) + std::abs(a) * std::abs(x) + std::abs(b); }
  /// 5^5 b^4 + 4^4 a^5, zero iff two roots coincide.
  cplx discriminant() const { return 3125.0 * std::pow(b, 4) + 256.0 * std::pow(a, 5); }
};

using Roots5 = std::array<cplx, 5>;

struct root_solve_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Largest relative residual |q(x)| / scale(x) over the roots.
inline double max_relative_residual(const QuinticParams& p, const Roots5& r) {
  double worst = 0;
  for (const auto& x : r) {
    const double s = p.scale(x);
    worst = std::max(worst, s > 0 ? std::abs(p.eval(x)) / s : 0.0);
  }
  return worst;
}

/// The five roots of x^5 + a x + b by Weierstrass (Durand-Kerner) iteration
/// followed by Newton polishing, sorted by real then imaginary part.
/// Throws root_solve_error if the relative residual stays above `tol`.
inline Roots5 roots5(const QuinticParams& p, double tol = 1e-12) {
  if (p.a == cplx{} && p.b == cplx{}) return {};
  // Cauchy bound on the root moduli.
  const double radius = 1.0 + std::max(std::abs(p.a), std::abs(p.b));
  const double rho = std::min(radius, std::max(std::pow(std::abs(p.b), 0.2), std::pow(std::abs(p.a), 0.25)) + 0.5);
  Roots5 z;
  const cplx seed = std::polar(1.0, 0.4);
  for (int k = 0; k < 5; ++k) z[k] = rho * std::pow(seed, k) * std::polar(1.0, 2 * std::numbers::pi * k / 5);

  constexpr int kMaxIter = 1000;
  int it = 0;
  for (; it < kMaxIter; ++it) {
    double change = 0;
    for (int i = 0; i < 5; ++i) {
      cplx denom = 1.0;
      for (int j = 0; j < 5; ++j)
        if (j != i) denom *= z[i] - z[j];
      if (denom == cplx{}) denom = 1e-300;
      const cplx delta = p.eval(z[i]) / denom;
      z[i] -= delta;
      change = std::max(change, std::abs(delta) / std::max(1.0, std::abs(z[i])));
    }
    if (change < 1e-15) break;
  }
  for (auto& x : z) {
    for (int k = 0; k < 3; ++k) {
      const cplx d = p.derivative(x);
      if (d == cplx{}) break;
      const cplx nx = x - p.eval(x) / d;
      if (std::abs(p.eval(nx)) >= std::abs(p.eval(x))) break;
      x = nx;
    }
  }
  if (max_relative_residual(p, z) > tol) throw root_solve_error("roots5: no convergence");
  std::sort(z.begin(), z.end(), [](const cplx& u, const cplx& v) {
    return u.real() != v.real() ? u.real() < v.real() : u.imag() < v.imag();
  });
  return z;
}

/// A point of the Riemann sphere.
struct ExtendedComplex {
  cplx value;
  bool infinite = false;
};

/// 256 a^5 / (256 a^5 + 3125 b^4); infinite when the denominator vanishes
/// relative to its terms. Throws for a = b = 0.
inline ExtendedComplex f_value(const QuinticParams& p, double rel_eps = 1e-13) {
  if (p.a == cplx{} && p.b == cplx{}) throw std::invalid_argument("f_value: a = b = 0 is not a point");
  const cplx num = 256.0 * std::pow(p.a, 5);
  const cplx other = 3125.0 * std::pow(p.b, 4);
  const cplx den = num + other;
  if (std::abs(den) <= rel_eps * (std::abs(num) + std::abs(other))) return {cplx{}, true};
  return {num / den, false};
}

/// b with f_value(1, b) = t, i.e. 3125 b^4 = 256 (1 - t) / t. Branch k picks
/// i^k times the principal fourth root.
inline cplx b_from_t(cplx t, int branch = 0) {
  if (t == cplx{}) throw std::invalid_argument("b_from_t: t = 0 has no finite preimage");
  const cplx w = 256.0 * (1.0 - t) / (3125.0 * t);
  if (w == cplx{}) return {};
  static constexpr std::array<cplx, 4> kUnits{cplx{1, 0}, cplx{0, 1}, cplx{-1, 0}, cplx{0, -1}};
  return std::pow(w, 0.25) * kUnits[((branch % 4) + 4) % 4];
}

}  // namespace bring

#endif  // BRING_QUINTIC_HPP
