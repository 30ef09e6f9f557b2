#ifndef BRING_SURFACE_HPP
#define BRING_SURFACE_HPP

#include <array>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bring/cells.hpp"
#include "bring/dessin.hpp"

namespace bring {

/// A face boundary step along `edge`, from its tail to its head iff `forward`.
struct Side {
  std::size_t edge;
  bool forward;
  bool operator==(const Side&) const = default;
};

/// Closed 2-complex: polygonal faces glued along edges.
struct SurfaceComplex {
  std::size_t vertex_count = 0;
  std::vector<std::array<std::size_t, 2>> edges;  // (tail, head)
  std::vector<std::vector<Side>> faces;

  std::size_t start_vertex(const Side& s) const { return edges[s.edge][s.forward ? 0 : 1]; }
  std::size_t end_vertex(const Side& s) const { return edges[s.edge][s.forward ? 1 : 0]; }

  /// For every edge, the (face, side index) pairs that use it.
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> incidences() const {
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> inc(edges.size());
    for (std::size_t f = 0; f < faces.size(); ++f)
      for (std::size_t i = 0; i < faces[f].size(); ++i) inc.at(faces[f][i].edge).emplace_back(f, i);
    return inc;
  }

  /// Throws unless every edge has two face incidences and face boundaries close up.
  void validate() const {
    for (const auto& [t, h] : edges)
      if (t >= vertex_count || h >= vertex_count) throw std::invalid_argument("surface: edge endpoint out of range");
    for (const auto& inc : incidences())
      if (inc.size() != 2) throw std::invalid_argument("surface: edge is not shared by exactly two face sides");
    for (const auto& face : faces) {
      if (face.empty()) throw std::invalid_argument("surface: empty face");
      for (std::size_t i = 0; i < face.size(); ++i)
        if (end_vertex(face[i]) != start_vertex(face[(i + 1) % face.size()]))
          throw std::invalid_argument("surface: face boundary is not a closed walk");
    }
  }

  std::size_t component_count() const {
    std::vector<std::size_t> parent(faces.size());
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& inc : incidences())
      if (inc.size() == 2) parent[find(inc[0].first)] = find(inc[1].first);
    std::size_t c = 0;
    for (std::size_t f = 0; f < faces.size(); ++f) c += find(f) == f;
    return c;
  }
};

inline long long euler_characteristic(const SurfaceComplex& s) {
  return static_cast<long long>(s.vertex_count) - static_cast<long long>(s.edges.size()) +
         static_cast<long long>(s.faces.size());
}

namespace detail {

// Face orientations (+1 keeps the stored boundary order) making every edge
// traversed once in each direction; nullopt if propagation contradicts itself.
inline std::optional<std::vector<int>> coherent_orientation(const SurfaceComplex& s) {
  const auto inc = s.incidences();
  std::vector<int> orient(s.faces.size(), 0);
  for (std::size_t root = 0; root < s.faces.size(); ++root) {
    if (orient[root]) continue;
    orient[root] = 1;
    std::vector<std::size_t> queue{root};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      const std::size_t f = queue[qi];
      for (std::size_t i = 0; i < s.faces[f].size(); ++i) {
        const Side& side = s.faces[f][i];
        for (const auto& [g, j] : inc[side.edge]) {
          if (g == f && j == i) continue;
          const int dir_f = side.forward ? 1 : -1;
          const int dir_g = s.faces[g][j].forward ? 1 : -1;
          const int want = -orient[f] * dir_f * dir_g;
          if (orient[g] == 0) {
            orient[g] = want;
            queue.push_back(g);
          } else if (orient[g] != want) {
            return std::nullopt;
          }
        }
      }
    }
  }
  return orient;
}

// Vertices recovered from the gluing: darts (edge, end) are identified at every face corner.
inline std::vector<std::size_t> glued_dart_vertices(const SurfaceComplex& s, std::size_t& count) {
  std::vector<std::size_t> parent(2 * s.edges.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto start_dart = [](const Side& sd) { return 2 * sd.edge + (sd.forward ? 0 : 1); };
  auto end_dart = [](const Side& sd) { return 2 * sd.edge + (sd.forward ? 1 : 0); };
  for (const auto& face : s.faces)
    for (std::size_t i = 0; i < face.size(); ++i)
      parent[find(end_dart(face[i]))] = find(start_dart(face[(i + 1) % face.size()]));
  std::vector<std::size_t> id(parent.size(), ~std::size_t{0}), out(parent.size());
  count = 0;
  for (std::size_t x = 0; x < parent.size(); ++x) {
    const std::size_t r = find(x);
    if (id[r] == ~std::size_t{0}) id[r] = count++;
    out[x] = id[r];
  }
  return out;
}

}  // namespace detail

/// Requires a connected complex.
inline bool is_orientable(const SurfaceComplex& s) {
  if (s.component_count() != 1) throw std::invalid_argument("is_orientable: complex is not connected");
  return detail::coherent_orientation(s).has_value();
}

/// Number of vertices implied by the face gluing alone (ignores `vertex_count`).
inline std::size_t glued_vertex_count(const SurfaceComplex& s) {
  std::size_t n = 0;
  detail::glued_dart_vertices(s, n);
  return n;
}

/// The orientation double cover and its projection data.
struct OrientedCover {
  SurfaceComplex complex;
  std::vector<std::pair<std::size_t, int>> face_lift;  // cover face -> (base face, sheet +1/-1)
  std::vector<std::size_t> edge_lift;                  // cover edge -> base edge
  std::vector<std::size_t> vertex_lift;                // cover vertex -> base vertex
  std::size_t components = 0;
};

/// Each base face appears twice, with stored (+1) and reversed (-1) boundary.
/// Base edge e lifts to cover edges 2e and 2e+1, where 2e is the one on sheet
/// +1 of the first face using e. Cover faces 2f and 2f+1 are (f,+1) and (f,-1).
inline OrientedCover orientation_cover(const SurfaceComplex& base) {
  base.validate();
  const auto inc = base.incidences();
  OrientedCover cov;
  auto& cx = cov.complex;
  cx.edges.resize(2 * base.edges.size());
  cov.edge_lift.resize(cx.edges.size());

  // lift[f][i][sheet] -> cover edge used by side i of face f on that sheet
  std::vector<std::vector<std::array<std::size_t, 2>>> lift(base.faces.size());
  for (std::size_t f = 0; f < base.faces.size(); ++f) lift[f].resize(base.faces[f].size());
  for (std::size_t e = 0; e < base.edges.size(); ++e) {
    const auto [f1, i1] = inc[e][0];
    const auto [f2, i2] = inc[e][1];
    const int d1 = base.faces[f1][i1].forward ? 1 : -1;
    const int d2 = base.faces[f2][i2].forward ? 1 : -1;
    for (int sheet : {1, -1}) {
      const std::size_t ce = 2 * e + (sheet == 1 ? 0 : 1);
      const int sheet2 = -sheet * d1 * d2;
      lift[f1][i1][sheet == 1 ? 0 : 1] = ce;
      lift[f2][i2][sheet2 == 1 ? 0 : 1] = ce;
      cov.edge_lift[ce] = e;
    }
  }
  for (std::size_t f = 0; f < base.faces.size(); ++f) {
    const auto& face = base.faces[f];
    std::vector<Side> up, down;
    for (std::size_t i = 0; i < face.size(); ++i) up.push_back({lift[f][i][0], face[i].forward});
    for (std::size_t i = face.size(); i-- > 0;) down.push_back({lift[f][i][1], !face[i].forward});
    cx.faces.push_back(std::move(up));
    cx.faces.push_back(std::move(down));
    cov.face_lift.emplace_back(f, 1);
    cov.face_lift.emplace_back(f, -1);
  }

  const auto dart_vertex = detail::glued_dart_vertices(cx, cx.vertex_count);
  cov.vertex_lift.assign(cx.vertex_count, 0);
  for (std::size_t ce = 0; ce < cx.edges.size(); ++ce) {
    cx.edges[ce] = {dart_vertex[2 * ce], dart_vertex[2 * ce + 1]};
    const auto& be = base.edges[cov.edge_lift[ce]];
    cov.vertex_lift[cx.edges[ce][0]] = be[0];
    cov.vertex_lift[cx.edges[ce][1]] = be[1];
  }
  cx.validate();
  cov.components = cx.component_count();
  return cov;
}

/// Genus of a connected orientable closed complex.
inline int surface_genus(const SurfaceComplex& s) {
  const long long chi = euler_characteristic(s);
  if ((2 - chi) % 2 != 0) throw std::invalid_argument("surface_genus: odd Euler characteristic");
  return static_cast<int>((2 - chi) / 2);
}

/// Clean dessin of the cover: black vertices are cover vertices, white
/// vertices edge midpoints. Darts 2e and 2e+1 are the two halves of cover
/// edge e, the first at its endpoint with the smaller vertex id. sigma0 is
/// the counterclockwise rotation induced by the face orientations; with
/// `reversed` the opposite global orientation is used.
inline Dessin cover_to_dessin(const OrientedCover& cov, bool reversed = false) {
  const auto& cx = cov.complex;
  if (cov.components != 1 || cx.component_count() != 1)
    throw std::invalid_argument("cover_to_dessin: cover is not connected");
  const auto orient = detail::coherent_orientation(cx);
  if (!orient) throw std::invalid_argument("cover_to_dessin: cover is not orientable");
  for (int o : *orient)
    if (o != 1) throw std::invalid_argument("cover_to_dessin: stored face orientations are not coherent");

  const std::size_t n = 2 * cx.edges.size();
  // dart of (edge, end) where end 0 = tail
  auto dart = [&](std::size_t e, int end) {
    const auto [t, h] = cx.edges[e];
    const bool tail_first = t <= h;
    return static_cast<point_t>(2 * e + ((end == 0) == tail_first ? 0 : 1));
  };
  constexpr point_t unset = ~point_t{0};
  std::vector<point_t> s0(n, unset), s1(n);
  for (std::size_t e = 0; e < cx.edges.size(); ++e) {
    s1[2 * e] = static_cast<point_t>(2 * e + 1);
    s1[2 * e + 1] = static_cast<point_t>(2 * e);
  }
  for (const auto& face : cx.faces) {
    const std::size_t m = face.size();
    for (std::size_t i = 0; i < m; ++i) {
      const Side& in = face[i];
      const Side& out = face[(i + 1) % m];
      const point_t in_dart = dart(in.edge, in.forward ? 1 : 0);
      const point_t out_dart = dart(out.edge, out.forward ? 0 : 1);
      point_t& slot = reversed ? s0[in_dart] : s0[out_dart];
      if (slot != unset) throw std::logic_error("cover_to_dessin: corner assigned twice");
      slot = reversed ? out_dart : in_dart;
    }
  }
  return Dessin(Permutation(std::move(s0)), Permutation(std::move(s1)));
}

/// The n = 5 cell complex as a surface. Edge e runs from its lower to its
/// higher vertex id; face sides go corner (i-1) -> corner i.
inline SurfaceComplex surface_from_complex5(const CellComplexData& cx) {
  SurfaceComplex s;
  s.vertex_count = cx.vertices.size();
  s.edges = cx.edge_endpoints;
  for (const auto& sides : cx.face_sides) {
    std::vector<Side> face;
    for (std::size_t i = 0; i < 5; ++i) {
      const std::size_t from = sides[(i + 4) % 5].corner;
      face.push_back({sides[i].edge, s.edges[sides[i].edge][0] == from});
    }
    s.faces.push_back(std::move(face));
  }
  s.validate();
  return s;
}

/// The dessin of the cell decomposition of the orientation cover.
inline Dessin build_D(bool reversed = false) {
  return cover_to_dessin(orientation_cover(surface_from_complex5(build_complex5())), reversed);
}

}  // namespace bring

#endif  // BRING_SURFACE_HPP
