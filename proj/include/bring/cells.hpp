#ifndef BRING_CELLS_HPP
#define BRING_CELLS_HPP

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

namespace bring {

/// A chord between two polygon corners, stored with first < second.
/// Corner c sits between side c-1 and side c.
using Chord = std::pair<int, int>;

/// Two chords cross iff their endpoints strictly interleave.
inline bool chords_cross(const Chord& p, const Chord& q) {
  const auto [a, b] = p;
  const auto [c, d] = q;
  return (a < c && c < b && b < d) || (c < a && a < d && d < b);
}

/// An n-gon with sides labelled by a permutation of 1..n and a set of
/// pairwise non-crossing diagonals.
struct LabeledPolygon {
  int n = 0;
  std::vector<int> labels;
  std::vector<Chord> diagonals;

  LabeledPolygon() = default;
  LabeledPolygon(std::vector<int> l, std::vector<Chord> d = {})
      : n(static_cast<int>(l.size())), labels(std::move(l)), diagonals(std::move(d)) {
    normalize();
    validate();
  }

  int dimension() const { return n - 3 - static_cast<int>(diagonals.size()); }

  bool is_admissible(Chord c) const {
    if (c.first > c.second) std::swap(c.first, c.second);
    if (c.first < 0 || c.second >= n) return false;
    if (c.second - c.first < 2 || (c.first == 0 && c.second == n - 1)) return false;
    for (const auto& d : diagonals)
      if (d == c || chords_cross(c, d)) return false;
    return true;
  }

  bool has_diagonal(Chord c) const {
    if (c.first > c.second) std::swap(c.first, c.second);
    return std::binary_search(diagonals.begin(), diagonals.end(), c);
  }

  void normalize() {
    for (auto& d : diagonals)
      if (d.first > d.second) std::swap(d.first, d.second);
    std::sort(diagonals.begin(), diagonals.end());
  }

  void validate() const {
    if (n < 3) throw std::invalid_argument("polygon: need at least 3 sides");
    std::vector<int> sorted = labels;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < n; ++i)
      if (sorted[i] != i + 1) throw std::invalid_argument("polygon: labels must be a permutation of 1..n");
    for (std::size_t i = 0; i < diagonals.size(); ++i) {
      const auto [a, b] = diagonals[i];
      if (a < 0 || b >= n || b - a < 2 || (a == 0 && b == n - 1))
        throw std::invalid_argument("polygon: diagonal joins adjacent or invalid corners");
      for (std::size_t j = 0; j < i; ++j)
        if (diagonals[j] == diagonals[i] || chords_cross(diagonals[i], diagonals[j]))
          throw std::invalid_argument("polygon: diagonals repeat or cross");
    }
  }

  auto operator<=>(const LabeledPolygon& o) const {
    if (auto c = labels <=> o.labels; c != 0) return c;
    return diagonals <=> o.diagonals;
  }
  bool operator==(const LabeledPolygon&) const = default;

  /// `n=5; labels=(1,2,3,4,5); diags={(0,2)}`
  std::string to_string() const {
    std::string s = "n=" + std::to_string(n) + "; labels=(";
    for (int i = 0; i < n; ++i) s += (i ? "," : "") + std::to_string(labels[i]);
    s += "); diags={";
    for (std::size_t i = 0; i < diagonals.size(); ++i)
      s += (i ? ",(" : "(") + std::to_string(diagonals[i].first) + "," + std::to_string(diagonals[i].second) + ")";
    return s + "}";
  }
};

namespace detail {

inline LabeledPolygon rotated(const LabeledPolygon& p, int r) {
  LabeledPolygon q;
  q.n = p.n;
  q.labels.resize(p.n);
  for (int s = 0; s < p.n; ++s) q.labels[(s + r) % p.n] = p.labels[s];
  for (auto [a, b] : p.diagonals) q.diagonals.emplace_back((a + r) % p.n, (b + r) % p.n);
  q.normalize();
  return q;
}

inline LabeledPolygon reflected(const LabeledPolygon& p) {
  LabeledPolygon q;
  q.n = p.n;
  q.labels.resize(p.n);
  for (int s = 0; s < p.n; ++s) q.labels[p.n - 1 - s] = p.labels[s];
  for (auto [a, b] : p.diagonals) q.diagonals.emplace_back((p.n - a) % p.n, (p.n - b) % p.n);
  q.normalize();
  return q;
}

// Rotate so that label 1 sits on side 0; every dihedral orbit element has exactly one such rotation.
inline LabeledPolygon rotation_normalized(const LabeledPolygon& p) {
  const int pos = static_cast<int>(std::find(p.labels.begin(), p.labels.end(), 1) - p.labels.begin());
  return pos == 0 ? p : rotated(p, p.n - pos);
}

inline std::string key_of(const LabeledPolygon& p) {
  std::string k;
  k.reserve(p.labels.size() + 2 * p.diagonals.size());
  for (int l : p.labels) k.push_back(static_cast<char>(l));
  for (auto [a, b] : p.diagonals) {
    k.push_back(static_cast<char>(a));
    k.push_back(static_cast<char>(b));
  }
  return k;
}

}  // namespace detail

/// Cut along `d`, flip the piece not containing side 0, reglue. The flipped
/// piece carries its own diagonals with it; all other diagonals stay put.
inline LabeledPolygon twist(const LabeledPolygon& p, Chord d) {
  if (d.first > d.second) std::swap(d.first, d.second);
  if (!p.has_diagonal(d)) throw std::invalid_argument("twist: chord is not a diagonal of the polygon");
  const int n = p.n;
  const auto [i, j] = d;
  LabeledPolygon q = p;
  if (i == 0) {
    // sides j..n-1, corners j..n (corner n is corner 0)
    for (int s = j; s < n; ++s) q.labels[s] = p.labels[j + n - 1 - s];
    for (auto& [a, b] : q.diagonals) {
      if (a >= j || (a == 0 && b >= j)) {
        auto m = [&](int c) { return (j + n - (c == 0 ? n : c)) % n; };
        a = m(a);
        b = m(b);
      }
    }
  } else {
    // sides i..j-1, corners i..j
    for (int s = i; s < j; ++s) q.labels[s] = p.labels[i + j - 1 - s];
    for (auto& [a, b] : q.diagonals) {
      if (a >= i && b <= j) {
        a = i + j - a;
        b = i + j - b;
      }
    }
  }
  q.normalize();
  return q;
}

/// Equivalence class of a labelled polygon under twists and the dihedral group.
struct CellClass {
  LabeledPolygon representative;
  std::size_t orbit_size = 0;

  int n() const { return representative.n; }
  int dimension() const { return representative.dimension(); }
  bool operator==(const CellClass& o) const { return representative == o.representative; }
  auto operator<=>(const CellClass& o) const { return representative <=> o.representative; }
  std::string to_string() const { return representative.to_string(); }
};

namespace detail {

// Breadth-first orbit over rotation-normalised polygons. Calls `visit` on each.
template <typename Visit>
inline void for_each_in_orbit(const LabeledPolygon& start, Visit&& visit) {
  std::unordered_set<std::string> seen;
  std::vector<LabeledPolygon> queue{rotation_normalized(start)};
  seen.insert(key_of(queue.front()));
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const LabeledPolygon cur = queue[qi];
    visit(cur);
    auto push = [&](const LabeledPolygon& q) {
      LabeledPolygon r = rotation_normalized(q);
      if (seen.insert(key_of(r)).second) queue.push_back(std::move(r));
    };
    push(reflected(cur));
    for (const auto& d : cur.diagonals) push(twist(cur, d));
  }
}

}  // namespace detail

/// Lexicographically least polygon of the orbit; orbit_size counts every polygon in it.
inline CellClass canonical_class(const LabeledPolygon& p) {
  p.validate();
  CellClass c;
  std::size_t normalized = 0;
  bool first = true;
  detail::for_each_in_orbit(p, [&](const LabeledPolygon& q) {
    ++normalized;
    if (first || q < c.representative) c.representative = q;
    first = false;
  });
  c.orbit_size = normalized * static_cast<std::size_t>(p.n);
  return c;
}

namespace detail {

inline std::vector<Chord> all_chords(int n) {
  std::vector<Chord> out;
  for (int a = 0; a < n; ++a)
    for (int b = a + 2; b < n; ++b)
      if (!(a == 0 && b == n - 1)) out.emplace_back(a, b);
  return out;
}

inline void noncrossing_sets(const std::vector<Chord>& chords, std::size_t from, int k, std::vector<Chord>& cur,
                             std::vector<std::vector<Chord>>& out) {
  if (k == 0) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = from; i < chords.size(); ++i) {
    bool ok = true;
    for (const auto& c : cur)
      if (chords_cross(c, chords[i])) ok = false;
    if (!ok) continue;
    cur.push_back(chords[i]);
    noncrossing_sets(chords, i + 1, k - 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace detail

/// All cell classes of the n-gon complex with k diagonals, sorted by representative.
inline std::vector<CellClass> enumerate_cells(int n, int k) {
  if (n < 3 || n > 8) throw std::invalid_argument("enumerate_cells: n must be in [3, 8]");
  if (k < 0 || k > n - 3) throw std::invalid_argument("enumerate_cells: k must be in [0, n-3]");

  std::vector<std::vector<Chord>> chord_sets;
  std::vector<Chord> cur;
  detail::noncrossing_sets(detail::all_chords(n), 0, k, cur, chord_sets);

  std::vector<int> labels(n);
  std::iota(labels.begin(), labels.end(), 1);
  std::unordered_set<std::string> visited;
  std::vector<CellClass> out;
  do {
    for (const auto& chords : chord_sets) {
      LabeledPolygon p(labels, chords);
      if (visited.count(detail::key_of(p))) continue;
      CellClass c;
      std::size_t normalized = 0;
      bool first = true;
      detail::for_each_in_orbit(p, [&](const LabeledPolygon& q) {
        visited.insert(detail::key_of(q));
        ++normalized;
        if (first || q < c.representative) c.representative = q;
        first = false;
      });
      c.orbit_size = normalized * static_cast<std::size_t>(n);
      out.push_back(std::move(c));
    }
  } while (std::next_permutation(labels.begin() + 1, labels.end()));
  std::sort(out.begin(), out.end());
  return out;
}

/// Classes obtained by adding one admissible diagonal to the representative.
inline std::vector<CellClass> refinements(const CellClass& c) {
  if (c.dimension() < 1) throw std::invalid_argument("refinements: cell has dimension 0");
  const auto& rep = c.representative;
  std::vector<CellClass> out;
  for (const auto& ch : detail::all_chords(rep.n)) {
    if (!rep.is_admissible(ch)) continue;
    auto diags = rep.diagonals;
    diags.push_back(ch);
    CellClass r = canonical_class(LabeledPolygon(rep.labels, diags));
    if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(std::move(r));
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// One side of a pentagonal face: the boundary edge and the vertex at the
/// corner shared with the next side.
struct FaceSide {
  std::size_t edge;
  std::size_t corner;
  Chord diagonal;
};

struct EdgeIncidence {
  std::size_t face;
  std::size_t side;
};

/// Incidence structure of the n = 5 complex: 12 pentagons, 30 edges, 15 vertices.
struct CellComplexData {
  std::vector<CellClass> faces;
  std::vector<CellClass> edges;
  std::vector<CellClass> vertices;
  std::vector<std::array<FaceSide, 5>> face_sides;
  std::vector<std::array<std::size_t, 2>> edge_endpoints;
  std::vector<std::vector<EdgeIncidence>> edge_cofaces;
};

namespace detail {

// The five diagonals of a pentagon, ordered so that consecutive ones share a
// corner (equivalently, do not cross). Starts at the least chord and moves to
// its lesser non-crossing neighbour.
inline std::array<Chord, 5> pentagon_side_cycle() {
  const auto chords = all_chords(5);
  std::array<Chord, 5> out{};
  out[0] = chords.front();
  std::vector<bool> used(chords.size(), false);
  used[0] = true;
  for (int i = 1; i < 5; ++i) {
    for (std::size_t c = 0; c < chords.size(); ++c) {
      if (!used[c] && !chords_cross(chords[c], out[i - 1])) {
        out[i] = chords[c];
        used[c] = true;
        break;
      }
    }
  }
  return out;
}

}  // namespace detail

inline CellComplexData build_complex5() {
  CellComplexData cx;
  cx.faces = enumerate_cells(5, 0);
  cx.edges = enumerate_cells(5, 1);
  cx.vertices = enumerate_cells(5, 2);

  auto index_by_rep = [](const std::vector<CellClass>& cells) {
    std::map<LabeledPolygon, std::size_t> idx;
    for (std::size_t i = 0; i < cells.size(); ++i) idx.emplace(cells[i].representative, i);
    return idx;
  };
  const auto edge_idx = index_by_rep(cx.edges);
  const auto vert_idx = index_by_rep(cx.vertices);
  auto lookup = [](const auto& idx, const LabeledPolygon& p) {
    auto it = idx.find(canonical_class(p).representative);
    if (it == idx.end()) throw std::logic_error("build_complex5: cell missing from enumeration");
    return it->second;
  };

  const auto cycle = detail::pentagon_side_cycle();
  cx.edge_cofaces.assign(cx.edges.size(), {});
  cx.edge_endpoints.assign(cx.edges.size(), {~std::size_t{0}, ~std::size_t{0}});
  for (std::size_t f = 0; f < cx.faces.size(); ++f) {
    const auto& labels = cx.faces[f].representative.labels;
    std::array<FaceSide, 5> sides{};
    for (std::size_t i = 0; i < 5; ++i) {
      const Chord d = cycle[i], next = cycle[(i + 1) % 5];
      sides[i] = {lookup(edge_idx, LabeledPolygon(labels, {d})), lookup(vert_idx, LabeledPolygon(labels, {d, next})),
                  d};
    }
    for (std::size_t i = 0; i < 5; ++i) {
      const std::size_t e = sides[i].edge;
      std::array<std::size_t, 2> ends{sides[(i + 4) % 5].corner, sides[i].corner};
      std::sort(ends.begin(), ends.end());
      if (ends[0] == ends[1]) throw std::logic_error("build_complex5: edge with coincident endpoints");
      if (cx.edge_cofaces[e].empty())
        cx.edge_endpoints[e] = ends;
      else if (cx.edge_endpoints[e] != ends)
        throw std::logic_error("build_complex5: inconsistent edge endpoints across a gluing");
      cx.edge_cofaces[e].push_back({f, i});
    }
    cx.face_sides.push_back(sides);
  }
  for (const auto& inc : cx.edge_cofaces)
    if (inc.size() != 2) throw std::logic_error("build_complex5: edge without exactly two cofaces");
  return cx;
}

}  // namespace bring

#endif  // BRING_CELLS_HPP
