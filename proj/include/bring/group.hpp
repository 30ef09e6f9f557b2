#ifndef BRING_GROUP_HPP
#define BRING_GROUP_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "bring/permutation.hpp"

namespace bring {

inline constexpr std::size_t kDefaultClosureCap = 10000;

/// The subgroup generated by a list of permutations, enumerated in ascending
/// lexicographic order of image vectors.
struct GroupClosure {
  std::vector<Permutation> elements;
  std::vector<Permutation> generators;
  std::size_t degree = 0;
  bool cap_exceeded = false;

  std::size_t order() const { return elements.size(); }

  /// Position of `g` in `elements`, or nullopt.
  std::optional<std::size_t> index_of(const Permutation& g) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), g);
    if (it == elements.end() || *it != g) return std::nullopt;
    return static_cast<std::size_t>(it - elements.begin());
  }
  bool contains(const Permutation& g) const { return index_of(g).has_value(); }

  bool operator==(const GroupClosure& o) const { return elements == o.elements; }
};

/// Breadth-first closure of `gens` under right multiplication by generators.
/// Stops once more than `cap` elements are known and sets `cap_exceeded`.
inline GroupClosure closure(std::size_t degree, const std::vector<Permutation>& gens,
                            std::size_t cap = kDefaultClosureCap) {
  if (cap == 0) throw std::invalid_argument("closure: cap must be positive");
  for (const auto& g : gens)
    if (g.degree() != degree) throw degree_mismatch("closure: generator degree mismatch");

  GroupClosure out;
  out.degree = degree;
  out.generators = gens;
  std::unordered_map<Permutation, bool, PermutationHash> seen;
  std::vector<Permutation> frontier{Permutation::identity(degree)};
  seen.emplace(frontier.front(), true);
  std::vector<Permutation> all = frontier;
  while (!frontier.empty() && !out.cap_exceeded) {
    std::vector<Permutation> next;
    for (const auto& x : frontier) {
      for (const auto& s : gens) {
        Permutation y = x * s;
        if (seen.emplace(y, true).second) {
          all.push_back(y);
          next.push_back(std::move(y));
          if (all.size() > cap) {
            out.cap_exceeded = true;
            break;
          }
        }
      }
      if (out.cap_exceeded) break;
    }
    frontier = std::move(next);
  }
  std::sort(all.begin(), all.end());
  out.elements = std::move(all);
  return out;
}

/// Degree taken from the first generator; the empty list yields the trivial group of degree 0.
inline GroupClosure closure(const std::vector<Permutation>& gens, std::size_t cap = kDefaultClosureCap) {
  return closure(gens.empty() ? 0 : gens.front().degree(), gens, cap);
}

/// Left-multiplication action x -> g x on the enumerated elements of `group`.
inline Permutation regular_representation(const Permutation& g, const GroupClosure& group) {
  if (group.cap_exceeded) throw std::invalid_argument("regular_representation: group not fully enumerated");
  if (!group.contains(g)) throw std::invalid_argument("regular_representation: element not in group");
  std::vector<point_t> im(group.order());
  for (std::size_t i = 0; i < group.order(); ++i)
    im[i] = static_cast<point_t>(*group.index_of(g * group.elements[i]));
  return Permutation(std::move(im));
}

enum class GroupKind { A5, S5, Other };

struct GroupId {
  GroupKind kind = GroupKind::Other;
  std::size_t order = 0;

  std::string to_string() const {
    switch (kind) {
      case GroupKind::A5: return "A5";
      case GroupKind::S5: return "S5";
      default: return "Other(" + std::to_string(order) + ")";
    }
  }
  bool operator==(const GroupId&) const = default;
};

namespace detail {

// Order 60 and generated by x, y with x^5 = y^2 = (xy)^3 = 1: a quotient of the
// (2,3,5) triangle group, which has order 60, hence isomorphic to A5.
inline bool has_a5_presentation(const GroupClosure& g) {
  if (g.order() != 60) return false;
  std::vector<const Permutation*> fives, twos;
  for (const auto& e : g.elements) {
    const auto o = e.order();
    if (o == 5) fives.push_back(&e);
    if (o == 2) twos.push_back(&e);
  }
  for (const auto* x : fives) {
    for (const auto* y : twos) {
      if (!((*x) * (*y)).pow(3).is_identity()) continue;
      if (closure(g.degree, {*x, *y}, 60).order() == 60) return true;
    }
  }
  return false;
}

inline GroupClosure derived_subgroup(const GroupClosure& g) {
  std::unordered_map<Permutation, bool, PermutationHash> comms;
  for (const auto& a : g.elements) {
    const auto ai = a.inverse();
    for (const auto& b : g.elements) comms.emplace(a * b * ai * b.inverse(), true);
  }
  std::vector<Permutation> gens;
  gens.reserve(comms.size());
  for (auto& [p, _] : comms) gens.push_back(p);
  std::sort(gens.begin(), gens.end());
  return closure(g.degree, gens);
}

inline bool has_trivial_center(const GroupClosure& g) {
  for (const auto& z : g.elements) {
    if (z.is_identity()) continue;
    bool central = true;
    for (const auto& s : g.generators) {
      if (z * s != s * z) {
        central = false;
        break;
      }
    }
    if (central) return false;
  }
  return true;
}

}  // namespace detail

/// Classifies an enumerated group as A5, S5 or Other(order).
inline GroupId identify_group(const GroupClosure& g) {
  if (g.cap_exceeded) throw std::invalid_argument("identify_group: closure cap exceeded");
  if (g.order() == 60 && detail::has_a5_presentation(g)) return {GroupKind::A5, 60};
  if (g.order() == 120 && detail::has_trivial_center(g) &&
      detail::has_a5_presentation(detail::derived_subgroup(g)))
    return {GroupKind::S5, 120};
  return {GroupKind::Other, g.order()};
}

inline GroupId identify_group(const std::vector<Permutation>& gens, std::size_t cap = kDefaultClosureCap) {
  return identify_group(closure(gens, cap));
}

}  // namespace bring

#endif  // BRING_GROUP_HPP
