#ifndef BRING_DESSIN_HPP
#define BRING_DESSIN_HPP

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "bring/group.hpp"
#include "bring/permutation.hpp"

namespace bring {

/// Raised by operations that need a connected dessin.
struct disconnected_dessin : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Cycle types of the black, white and face permutations.
struct Passport {
  CycleType black;
  CycleType white;
  CycleType face;

  bool operator==(const Passport&) const = default;
  std::string to_string() const { return black.to_string() + " " + white.to_string() + " " + face.to_string(); }
};

/// A dessin d'enfant as a pair of permutations on a common dart set.
///
/// sigma0 rotates darts around black vertices and sigma1 around white
/// vertices. The face permutation is derived, sigma_inf = (sigma0 sigma1)^-1,
/// so that sigma0 sigma1 sigma_inf = 1.
class Dessin {
 public:
  Dessin(Permutation sigma0, Permutation sigma1) : sigma0_(std::move(sigma0)), sigma1_(std::move(sigma1)) {
    if (sigma0_.degree() != sigma1_.degree()) throw degree_mismatch("dessin: sigma0 and sigma1 differ in degree");
    sigma_inf_ = (sigma0_ * sigma1_).inverse();
    if (!(sigma0_ * sigma1_ * sigma_inf_).is_identity()) throw std::logic_error("dessin: product identity violated");
    components_ = count_components();
  }

  std::size_t dart_count() const { return sigma0_.degree(); }
  const Permutation& sigma0() const { return sigma0_; }
  const Permutation& sigma1() const { return sigma1_; }
  const Permutation& sigma_inf() const { return sigma_inf_; }
  std::size_t components() const { return components_; }
  bool is_connected() const { return components_ == 1; }

  Passport passport() const { return {sigma0_.cycle_type(), sigma1_.cycle_type(), sigma_inf_.cycle_type()}; }

  /// c(sigma0) + c(sigma1) + c(sigma_inf) - d, which equals 2 - 2g when connected.
  long long euler_characteristic() const {
    return static_cast<long long>(sigma0_.cycle_count() + sigma1_.cycle_count() + sigma_inf_.cycle_count()) -
           static_cast<long long>(dart_count());
  }

  int genus() const {
    require_connected("genus");
    const long long chi = euler_characteristic();
    if ((2 - chi) % 2 != 0 || chi > 2) throw std::logic_error("dessin: inconsistent Euler characteristic");
    return static_cast<int>((2 - chi) / 2);
  }

  void require_connected(const char* what) const {
    if (!is_connected()) throw disconnected_dessin(std::string(what) + ": dessin is not connected");
  }

  bool operator==(const Dessin& o) const { return sigma0_ == o.sigma0_ && sigma1_ == o.sigma1_; }

 private:
  std::size_t count_components() const {
    const std::size_t d = dart_count();
    std::vector<bool> seen(d, false);
    std::size_t comps = 0;
    std::vector<point_t> stack;
    for (point_t s = 0; s < d; ++s) {
      if (seen[s]) continue;
      ++comps;
      seen[s] = true;
      stack.push_back(s);
      while (!stack.empty()) {
        const point_t x = stack.back();
        stack.pop_back();
        for (point_t y : {sigma0_(x), sigma1_(x)}) {
          if (!seen[y]) {
            seen[y] = true;
            stack.push_back(y);
          }
        }
      }
    }
    return comps;
  }

  Permutation sigma0_;
  Permutation sigma1_;
  Permutation sigma_inf_;
  std::size_t components_ = 0;
};

inline Dessin new_dessin(Permutation sigma0, Permutation sigma1) { return Dessin(std::move(sigma0), std::move(sigma1)); }
inline Passport passport(const Dessin& d) { return d.passport(); }
inline int genus(const Dessin& d) { return d.genus(); }

/// Swap black and white vertices (beta -> 1 - beta).
inline Dessin recolor(const Dessin& d) { return Dessin(d.sigma1(), d.sigma0()); }

/// Reverse the orientation of the surface.
inline Dessin mirror(const Dessin& d) { return Dessin(d.sigma0().inverse(), d.sigma1().inverse()); }

/// Face centres become black vertices, white vertices stay (beta -> 1/beta).
/// The pair (sigma_inf, sigma0 sigma1 sigma0^-1) has face permutation sigma0,
/// which makes the operation an exact involution.
inline Dessin dual(const Dessin& d) {
  return Dessin(d.sigma_inf(), d.sigma0() * d.sigma1() * d.sigma0().inverse());
}

/// Every vertex becomes black and a white midpoint is put on every edge
/// (beta -> 4 beta (1 - beta)). Darts e in [0, d) are the old darts seen from
/// the black side; d + e is the half of the same edge seen from the old white vertex.
inline Dessin subdivide(const Dessin& d) {
  const auto n = static_cast<point_t>(d.dart_count());
  std::vector<point_t> s0(2 * n), s1(2 * n);
  for (point_t e = 0; e < n; ++e) {
    s0[e] = d.sigma0()(e);
    s0[n + e] = n + d.sigma1()(e);
    s1[e] = n + e;
    s1[n + e] = e;
  }
  return Dessin(Permutation(std::move(s0)), Permutation(std::move(s1)));
}

/// Superimpose the dessin with its dual (beta -> 4 beta / (beta + 1)^2).
/// Dart d + e is the dual edge leaving the white vertex of e in the corner
/// between e and sigma1(e); it ends at the black vertex centred in that face.
inline Dessin union_with_dual(const Dessin& d) {
  d.require_connected("union_with_dual");
  const auto n = static_cast<point_t>(d.dart_count());
  std::vector<point_t> s0(2 * n), s1(2 * n);
  for (point_t e = 0; e < n; ++e) {
    s0[e] = d.sigma0()(e);
    s0[n + e] = n + d.sigma_inf()(e);
    s1[e] = n + e;
    s1[n + e] = d.sigma1()(e);
  }
  return Dessin(Permutation(std::move(s0)), Permutation(std::move(s1)));
}

/// Dart bijection h with h sigma_i = sigma_i' h.
struct IsoMap {
  Permutation map;
  bool mirrored = false;
};

namespace detail {

// Extend 0 -> image along sigma0/sigma1; nullopt on the first conflict.
inline std::optional<Permutation> extend_anchor(const Dessin& a, const Dessin& b, point_t image) {
  const std::size_t d = a.dart_count();
  constexpr point_t unset = ~point_t{0};
  std::vector<point_t> h(d, unset);
  std::vector<bool> used(d, false);
  std::vector<point_t> queue{0};
  h[0] = image;
  used[image] = true;
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const point_t x = queue[qi];
    const point_t pairs[2][2] = {{a.sigma0()(x), b.sigma0()(h[x])}, {a.sigma1()(x), b.sigma1()(h[x])}};
    for (const auto& [y, hy] : pairs) {
      if (h[y] == unset) {
        if (used[hy]) return std::nullopt;
        h[y] = hy;
        used[hy] = true;
        queue.push_back(y);
      } else if (h[y] != hy) {
        return std::nullopt;
      }
    }
  }
  if (queue.size() != d) return std::nullopt;
  return Permutation(std::move(h));
}

}  // namespace detail

/// True iff h sigma0 = sigma0' h and h sigma1 = sigma1' h.
inline bool is_isomorphism(const Dessin& a, const Dessin& b, const Permutation& h) {
  return h.degree() == a.dart_count() && a.dart_count() == b.dart_count() &&
         h * a.sigma0() == b.sigma0() * h && h * a.sigma1() == b.sigma1() * h;
}

/// Anchor-and-extend search: dart 0 of `a` is sent to each dart of `b` in turn.
inline std::optional<IsoMap> isomorphic(const Dessin& a, const Dessin& b) {
  a.require_connected("isomorphic");
  b.require_connected("isomorphic");
  if (a.dart_count() != b.dart_count() || a.passport() != b.passport()) return std::nullopt;
  if (a.dart_count() == 0) return IsoMap{Permutation::identity(0)};
  for (point_t t = 0; t < b.dart_count(); ++t)
    if (auto h = detail::extend_anchor(a, b, t)) return IsoMap{std::move(*h)};
  return std::nullopt;
}

/// Isomorphism to `b` or, failing that, to mirror(b) (flagged).
inline std::optional<IsoMap> isomorphic_up_to_mirror(const Dessin& a, const Dessin& b) {
  if (auto h = isomorphic(a, b)) return h;
  if (auto h = isomorphic(a, mirror(b))) {
    h->mirrored = true;
    return h;
  }
  return std::nullopt;
}

/// All colour- and orientation-preserving automorphisms as a permutation group on darts.
inline GroupClosure automorphism_group(const Dessin& d) {
  d.require_connected("automorphism_group");
  std::vector<Permutation> auts;
  for (point_t t = 0; t < d.dart_count(); ++t)
    if (auto h = detail::extend_anchor(d, d, t)) auts.push_back(std::move(*h));
  std::sort(auts.begin(), auts.end());
  GroupClosure g;
  g.degree = d.dart_count();
  g.generators = auts;
  g.elements = std::move(auts);
  return g;
}

/// True iff no non-identity element fixes a point.
inline bool acts_freely(const GroupClosure& g) {
  for (const auto& e : g.elements)
    if (!e.is_identity() && e.fixed_points() != 0) return false;
  return true;
}

/// `darts: <d>` / `sigma0: <cycles>` / `sigma1: <cycles>`, newline terminated.
inline std::string to_text(const Dessin& d) {
  return "darts: " + std::to_string(d.dart_count()) + "\nsigma0: " + d.sigma0().to_string() +
         "\nsigma1: " + d.sigma1().to_string() + "\n";
}

inline Dessin parse_dessin(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  auto field = [&](const std::string& key) {
    if (!std::getline(in, line) || line.rfind(key + ":", 0) != 0)
      throw std::invalid_argument("dessin text: expected '" + key + ":'");
    return line.substr(key.size() + 1);
  };
  const std::size_t d = std::stoul(field("darts"));
  auto s0 = Permutation::parse(field("sigma0"), d);
  auto s1 = Permutation::parse(field("sigma1"), d);
  return Dessin(std::move(s0), std::move(s1));
}

/// Bipartite multigraph: one edge per dart joining its black and white vertex.
/// `bpos`/`wpos` give the dart's position in the rotation at each end.
inline std::string to_dot(const Dessin& d, const std::string& name = "dessin") {
  const std::size_t n = d.dart_count();
  std::vector<std::size_t> bvert(n), bpos(n), wvert(n), wpos(n);
  const auto bc = d.sigma0().cycles();
  const auto wc = d.sigma1().cycles();
  for (std::size_t i = 0; i < bc.size(); ++i)
    for (std::size_t k = 0; k < bc[i].size(); ++k) bvert[bc[i][k]] = i, bpos[bc[i][k]] = k;
  for (std::size_t j = 0; j < wc.size(); ++j)
    for (std::size_t k = 0; k < wc[j].size(); ++k) wvert[wc[j][k]] = j, wpos[wc[j][k]] = k;

  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (std::size_t i = 0; i < bc.size(); ++i)
    out << "  b" << i << " [color=black, style=filled, fillcolor=black, shape=circle];\n";
  for (std::size_t j = 0; j < wc.size(); ++j)
    out << "  w" << j << " [color=black, style=filled, fillcolor=white, shape=circle];\n";
  for (std::size_t e = 0; e < n; ++e)
    out << "  b" << bvert[e] << " -- w" << wvert[e] << " [dart=" << e << ", bpos=" << bpos[e]
        << ", wpos=" << wpos[e] << "];\n";
  out << "}\n";
  return out.str();
}

}  // namespace bring

#endif  // BRING_DESSIN_HPP
