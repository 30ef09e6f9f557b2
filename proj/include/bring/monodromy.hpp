#ifndef BRING_MONODROMY_HPP
#define BRING_MONODROMY_HPP

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "bring/dessin.hpp"
#include "bring/group.hpp"
#include "bring/quintic.hpp"

namespace bring {

enum class Puncture { Zero, One, Infinity };
enum class Direction { CounterClockwise, Clockwise };

inline std::string to_string(Puncture p) {
  switch (p) {
    case Puncture::Zero: return "0";
    case Puncture::One: return "1";
    default: return "inf";
  }
}

/// A loop in the t-plane based at `base`: straight segment to a circle of
/// `radius` about the puncture, once around, and back. The circle about
/// infinity is centred at 0 and entered from below the real axis.
struct LoopSpec {
  Puncture puncture = Puncture::Zero;
  cplx base{0.5, 0.0};
  double radius = 0.25;
  std::size_t steps = 256;
  Direction direction = Direction::CounterClockwise;
  int branch = 0;
};

struct TrackConfig {
  cplx base_t{0.5, 0.0};
  double radius0 = 0.25;
  double radius1 = 0.25;
  double radius_inf = 8.0;
  std::size_t steps = 256;
  double tol_residual = 1e-10;
  double tol_match_ratio = 3.0;
  double tol_lambda = 1e-8;
  double collision_floor = 1e-8;
  /// Each nominal step may be halved at most this many times.
  int max_halvings = 4;
  int branch = 0;
};

struct tracking_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct TrackResult {
  Permutation pi;        // sheet i (initial root i) ends on root pi(i)
  cplx lambda;           // b_end / b_start, a fourth root of unity
  double lambda_error = 0;  // |lambda^4 - 1|
  double max_residual = 0;
  double min_separation = 0;
  double min_ratio = 0;  // worst second-nearest / nearest distance seen
  std::size_t steps_used = 0;
  std::size_t halvings = 0;
};

namespace detail {

struct LoopPath {
  cplx base, entry, center;
  double radius;
  double sign;
  double seg_len, circ_len;

  cplx at(double s) const {
    const double total = 2 * seg_len + circ_len;
    double u = s * total;
    if (u <= seg_len) return base + (entry - base) * (seg_len > 0 ? u / seg_len : 0.0);
    u -= seg_len;
    if (u <= circ_len) return center + (entry - center) * std::polar(1.0, sign * 2 * std::numbers::pi * u / circ_len);
    u -= circ_len;
    return entry + (base - entry) * (seg_len > 0 ? std::min(1.0, u / seg_len) : 0.0);
  }
};

inline LoopPath make_path(const LoopSpec& spec) {
  if (spec.base == cplx{0, 0} || spec.base == cplx{1, 0}) throw std::invalid_argument("loop: base point is a puncture");
  if (!(spec.radius > 0)) throw std::invalid_argument("loop: radius must be positive");
  if (spec.steps == 0) throw std::invalid_argument("loop: steps must be positive");
  LoopPath p{};
  p.base = spec.base;
  p.radius = spec.radius;
  p.sign = spec.direction == Direction::CounterClockwise ? 1.0 : -1.0;
  if (spec.puncture == Puncture::Infinity) {
    const double x = spec.base.real();
    if (spec.radius <= std::abs(spec.base) || spec.radius <= 1.0 + 1e-9 || std::abs(x) >= spec.radius)
      throw std::invalid_argument("loop: circle about infinity must enclose 0, 1 and the base point");
    p.center = 0;
    p.entry = cplx{x, -std::sqrt(spec.radius * spec.radius - x * x)};
    // Around infinity "counterclockwise" is clockwise in the t-plane.
    p.sign = -p.sign;
  } else {
    p.center = spec.puncture == Puncture::Zero ? cplx{0, 0} : cplx{1, 0};
    const cplx other = spec.puncture == Puncture::Zero ? cplx{1, 0} : cplx{0, 0};
    const double dist = std::abs(spec.base - p.center);
    if (spec.radius >= dist || spec.radius >= std::abs(other - p.center))
      throw std::invalid_argument("loop: circle must enclose exactly one puncture and exclude the base point");
    p.entry = p.center + (spec.base - p.center) * (spec.radius / dist);
    // The segment from the base to the entry must not pass the other puncture.
    const cplx dir = p.entry - p.base;
    const double s = std::clamp(std::real((other - p.base) * std::conj(dir)) / std::norm(dir), 0.0, 1.0);
    if (std::abs(p.base + s * dir - other) <= spec.radius * 1e-3)
      throw std::invalid_argument("loop: connecting segment passes the other puncture");
  }
  p.seg_len = std::abs(p.entry - p.base);
  p.circ_len = 2 * std::numbers::pi * spec.radius;
  return p;
}

// Index of the nearest candidate and the second-nearest / nearest distance ratio.
template <std::size_t N>
inline std::pair<std::size_t, double> nearest(const std::array<cplx, N>& cands, cplx x) {
  std::size_t best = 0;
  double d1 = INFINITY, d2 = INFINITY;
  for (std::size_t k = 0; k < N; ++k) {
    const double d = std::abs(cands[k] - x);
    if (d < d1) {
      d2 = d1;
      d1 = d;
      best = k;
    } else if (d < d2) {
      d2 = d;
    }
  }
  return {best, d1 > 0 ? d2 / d1 : INFINITY};
}

inline std::array<cplx, 4> fourth_roots_b(cplx t) {
  const cplx b = b_from_t(t, 0);
  return {b, b * cplx{0, 1}, -b, b * cplx{0, -1}};
}

inline double min_pairwise(const Roots5& r) {
  double m = INFINITY;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) m = std::min(m, std::abs(r[i] - r[j]));
  return m;
}

// Greedy nearest matching of `from` to `to`; nullopt if ambiguous under `ratio`.
inline std::optional<std::array<std::size_t, 5>> match_roots(const Roots5& from, const Roots5& to, double ratio,
                                                              double& worst_ratio) {
  std::array<std::size_t, 5> m{};
  std::array<bool, 5> used{};
  for (int i = 0; i < 5; ++i) {
    const auto [j, r] = nearest(to, from[i]);
    worst_ratio = std::min(worst_ratio, r);
    if (r < ratio || used[j]) return std::nullopt;
    used[j] = true;
    m[i] = j;
  }
  return m;
}

}  // namespace detail

/// Continues the roots of x^5 + x + b(t) along the loop. b(t) is continued
/// among the fourth roots of 256 (1 - t) / (3125 t) by nearest choice. At the
/// end b has become lambda b0 with lambda^4 = 1; the final roots times
/// mu = 1 / lambda solve the starting quintic and are matched to its roots.
inline TrackResult track_loop(const LoopSpec& spec, const TrackConfig& cfg) {
  const auto path = detail::make_path(spec);
  const cplx b0 = b_from_t(spec.base, spec.branch);
  const Roots5 start = roots5({1.0, b0}, cfg.tol_residual);

  TrackResult res;
  res.max_residual = max_relative_residual({1.0, b0}, start);
  res.min_separation = detail::min_pairwise(start);
  res.min_ratio = INFINITY;

  const double h0 = 1.0 / static_cast<double>(spec.steps);
  const double h_min = h0 / std::ldexp(1.0, cfg.max_halvings);
  double s = 0, h = h0;
  cplx b = b0;
  Roots5 cur = start;
  while (s < 1.0) {
    const double s_next = std::min(1.0, s + h);
    const cplx t = path.at(s_next);
    bool ok = false;
    cplx b_next{};
    Roots5 next{};
    const auto cands = detail::fourth_roots_b(t);
    const auto [k, bratio] = detail::nearest(cands, b);
    if (bratio >= cfg.tol_match_ratio) {
      b_next = cands[k];
      const Roots5 fresh = roots5({1.0, b_next}, cfg.tol_residual);
      double ratio = bratio;
      if (auto m = detail::match_roots(cur, fresh, cfg.tol_match_ratio, ratio)) {
        for (int i = 0; i < 5; ++i) next[i] = fresh[(*m)[i]];
        ok = true;
        res.min_ratio = std::min(res.min_ratio, ratio);
        res.max_residual = std::max(res.max_residual, max_relative_residual({1.0, b_next}, fresh));
        res.min_separation = std::min(res.min_separation, detail::min_pairwise(fresh));
      }
    }
    if (!ok) {
      h /= 2;
      ++res.halvings;
      if (h < h_min) throw tracking_error("track_loop: step size fell below the floor near t = " + std::to_string(t.real()) + (t.imag() < 0 ? "" : "+") + std::to_string(t.imag()) + "i");
      continue;
    }
    if (res.min_separation < cfg.collision_floor) throw tracking_error("track_loop: roots collided");
    s = s_next;
    b = b_next;
    cur = next;
    ++res.steps_used;
    h = std::min(h0, 2 * h);
  }

  res.lambda = b / b0;
  res.lambda_error = std::abs(std::pow(res.lambda, 4) - 1.0);
  if (res.lambda_error > cfg.tol_lambda) throw tracking_error("track_loop: b did not return to a fourth-root multiple");
  const cplx mu = b0 / b;
  Roots5 rescaled;
  for (int i = 0; i < 5; ++i) rescaled[i] = mu * cur[i];
  double r = INFINITY;
  const auto m = detail::match_roots(rescaled, start, cfg.tol_match_ratio, r);
  if (!m) throw tracking_error("track_loop: final roots do not match the starting fibre");
  std::vector<point_t> im(5);
  for (int i = 0; i < 5; ++i) im[i] = static_cast<point_t>((*m)[i]);
  res.pi = Permutation(std::move(im));
  return res;
}

/// Monodromy around 0, 1 and infinity with pi0 * pi1 * pi_inf = 1, where
/// (p * q)(x) = p(q(x)).
struct MonodromyTriple {
  Permutation pi0, pi1, pi_inf;
  TrackResult loop0, loop1, loop_inf;  // loop_inf is the direct tracking of the big circle
  bool direct_inf_matches = false;      // direct pi_inf equals (pi0 pi1)^-1 exactly
  bool inverted_convention = false;     // raw loops needed the global inversion
};

inline LoopSpec loop_spec(Puncture p, const TrackConfig& cfg) {
  LoopSpec s;
  s.puncture = p;
  s.base = cfg.base_t;
  s.steps = cfg.steps;
  s.branch = cfg.branch;
  s.radius = p == Puncture::Zero ? cfg.radius0 : p == Puncture::One ? cfg.radius1 : cfg.radius_inf;
  return s;
}

/// The ordering (0, 1, infinity) of counterclockwise loops composes to the
/// identity when loop paths multiply right to left. If the direct tracking
/// around infinity instead satisfies the reversed product, every permutation
/// is inverted once so that the right-to-left convention holds.
inline MonodromyTriple monodromy_triple(const TrackConfig& cfg) {
  MonodromyTriple m;
  m.loop0 = track_loop(loop_spec(Puncture::Zero, cfg), cfg);
  m.loop1 = track_loop(loop_spec(Puncture::One, cfg), cfg);
  m.loop_inf = track_loop(loop_spec(Puncture::Infinity, cfg), cfg);
  Permutation p0 = m.loop0.pi, p1 = m.loop1.pi, pinf = m.loop_inf.pi;
  if (!(p0 * p1 * pinf).is_identity() && (pinf * p1 * p0).is_identity()) {
    p0 = p0.inverse();
    p1 = p1.inverse();
    pinf = pinf.inverse();
    m.inverted_convention = true;
  }
  m.pi0 = p0;
  m.pi1 = p1;
  m.pi_inf = (p0 * p1).inverse();
  m.direct_inf_matches = m.pi_inf == pinf;
  return m;
}

/// The 120-sheet dessin: left regular action of pi0 and pi1 on the group they generate.
inline Dessin sheet_constellation(const MonodromyTriple& m) {
  const GroupClosure g = closure({m.pi0, m.pi1});
  if (g.order() != 120) throw std::invalid_argument("sheet_constellation: monodromy group does not have order 120");
  return Dessin(regular_representation(m.pi0, g), regular_representation(m.pi1, g));
}

/// Aggregate numerical findings over random quintics.
struct BringIdentityReport {
  std::size_t samples = 0;
  double max_power_sum = 0;         // max_k |p_k| / sum |x_i|^k for k = 1, 2, 3
  double max_root_residual = 0;
  double max_identity_error = 0;    // 1 - 1/f against -3125 b^4 / (256 a^5)
  double max_symmetric_error = 0;   // -3125 / (256 prod x (sum 1/x)^5) against the same
  double max_quartic_form_deviation = 0; // 3125 (sum 1/x)^4 / (256 prod x) against the same
  double max_quartic_form_scaling_error = 0;  // deviation of its rescaling ratio from lambda^-9
  double max_identity_scaling_error = 0; // deviation of 1 - 1/f from invariance
  bool quartic_form_invariant = true;
};

inline BringIdentityReport verify_bring_identities(std::size_t samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coord(-2.0, 2.0);
  std::uniform_real_distribution<double> modulus(0.5, 1.5);
  std::uniform_real_distribution<double> angle(0.0, 2 * std::numbers::pi);
  BringIdentityReport rep;
  rep.samples = samples;

  struct Eval {
    double power_sum, residual;
    cplx one_minus_inv_f, closed, symmetric, quartic_form;
  };
  auto evaluate = [](const QuinticParams& q) {
    const Roots5 r = roots5(q);
    Eval e{};
    e.residual = max_relative_residual(q, r);
    for (int k = 1; k <= 3; ++k) {
      cplx pk = 0;
      double mag = 0;
      for (const auto& x : r) {
        pk += std::pow(x, k);
        mag += std::pow(std::abs(x), k);
      }
      e.power_sum = std::max(e.power_sum, std::abs(pk) / mag);
    }
    cplx prod = 1, inv_sum = 0;
    for (const auto& x : r) {
      prod *= x;
      inv_sum += 1.0 / x;
    }
    const auto f = f_value(q);
    e.one_minus_inv_f = 1.0 - 1.0 / f.value;
    e.closed = -3125.0 * std::pow(q.b, 4) / (256.0 * std::pow(q.a, 5));
    e.symmetric = -3125.0 / (256.0 * prod * std::pow(inv_sum, 5));
    e.quartic_form = 3125.0 * std::pow(inv_sum, 4) / (256.0 * prod);
    return e;
  };
  auto rel = [](cplx x, cplx ref) { return std::abs(x - ref) / std::abs(ref); };

  for (std::size_t i = 0; i < samples; ++i) {
    const QuinticParams q{{coord(rng), coord(rng)}, {coord(rng), coord(rng)}};
    const cplx lambda = std::polar(modulus(rng), angle(rng));
    const QuinticParams scaled{std::pow(lambda, 4) * q.a, std::pow(lambda, 5) * q.b};
    const Eval e = evaluate(q);
    const Eval es = evaluate(scaled);
    rep.max_power_sum = std::max({rep.max_power_sum, e.power_sum, es.power_sum});
    rep.max_root_residual = std::max({rep.max_root_residual, e.residual, es.residual});
    rep.max_identity_error = std::max(rep.max_identity_error, rel(e.one_minus_inv_f, e.closed));
    rep.max_symmetric_error = std::max(rep.max_symmetric_error, rel(e.symmetric, e.closed));
    rep.max_quartic_form_deviation = std::max(rep.max_quartic_form_deviation, rel(e.quartic_form, e.closed));
    rep.max_identity_scaling_error = std::max(rep.max_identity_scaling_error, rel(es.one_minus_inv_f, e.one_minus_inv_f));
    const cplx ratio = es.quartic_form / e.quartic_form;
    rep.max_quartic_form_scaling_error = std::max(rep.max_quartic_form_scaling_error, std::abs(ratio * std::pow(lambda, 9) - 1.0));
    if (std::abs(ratio - 1.0) >= 1e-9) rep.quartic_form_invariant = false;
  }
  return rep;
}

}  // namespace bring

#endif  // BRING_MONODROMY_HPP
