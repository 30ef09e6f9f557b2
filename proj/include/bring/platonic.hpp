#ifndef BRING_PLATONIC_HPP
#define BRING_PLATONIC_HPP

#include <array>

#include "bring/dessin.hpp"

namespace bring {

namespace detail {

// Neighbours of each icosahedron vertex in counterclockwise order seen from
// outside. Vertex 0 is a pole, 1-5 and 6-10 the two pentagonal rings, 11 the
// antipode of 0.
inline constexpr std::array<std::array<point_t, 5>, 12> kIcosahedronRotation{{
    {1, 2, 3, 4, 5},
    {0, 5, 10, 6, 2},
    {0, 1, 6, 7, 3},
    {0, 2, 7, 8, 4},
    {0, 3, 8, 9, 5},
    {0, 4, 9, 10, 1},
    {1, 10, 11, 7, 2},
    {2, 6, 11, 8, 3},
    {3, 7, 11, 9, 4},
    {4, 8, 11, 10, 5},
    {1, 5, 9, 11, 6},
    {6, 10, 9, 8, 7},
}};

}  // namespace detail

/// The icosahedron with white vertices at edge midpoints: 60 darts, dart
/// 5v + k is the k-th edge around vertex v.
inline Dessin build_icosahedron() {
  const auto& rot = detail::kIcosahedronRotation;
  std::vector<point_t> s0(60), s1(60);
  for (point_t v = 0; v < 12; ++v) {
    for (point_t k = 0; k < 5; ++k) {
      s0[5 * v + k] = 5 * v + (k + 1) % 5;
      const point_t u = rot[v][k];
      point_t back = 0;
      while (rot[u][back] != v) ++back;
      s1[5 * v + k] = 5 * u + back;
    }
  }
  return Dessin(Permutation(std::move(s0)), Permutation(std::move(s1)));
}

/// The 4-icosahedron: the icosahedron graph with every vertex rotation
/// (e1 e2 e3 e4 e5) replaced by (e1 e3 e5 e2 e4), i.e. sigma0 squared.
inline Dessin build_i4() {
  const Dessin ico = build_icosahedron();
  return Dessin(ico.sigma0() * ico.sigma0(), ico.sigma1());
}

/// recolor(dual(I4 u I4*)).
inline Dessin build_j() { return recolor(dual(union_with_dual(build_i4()))); }

}  // namespace bring

#endif  // BRING_PLATONIC_HPP
