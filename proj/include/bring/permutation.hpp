#ifndef BRING_PERMUTATION_HPP
#define BRING_PERMUTATION_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bring {

using point_t = std::uint32_t;

/// Raised when two permutations of different degree are combined.
struct degree_mismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Sorted-descending multiset of cycle lengths (fixed points included).
struct CycleType {
  std::vector<std::size_t> lengths;

  CycleType() = default;
  explicit CycleType(std::vector<std::size_t> l) : lengths(std::move(l)) {
    std::sort(lengths.begin(), lengths.end(), std::greater<>());
  }

  /// `[5^12]`, `[3,2]`, `[2,1^3]`.
  static CycleType uniform(std::size_t length, std::size_t count) {
    return CycleType(std::vector<std::size_t>(count, length));
  }

  std::size_t degree() const { return std::accumulate(lengths.begin(), lengths.end(), std::size_t{0}); }
  std::size_t cycles() const { return lengths.size(); }

  /// Multiset union.
  CycleType operator+(const CycleType& other) const {
    auto l = lengths;
    l.insert(l.end(), other.lengths.begin(), other.lengths.end());
    return CycleType(std::move(l));
  }

  bool operator==(const CycleType&) const = default;

  /// Exponential notation, e.g. `[5^24]` or `[2,1^3]`.
  std::string to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < lengths.size();) {
      std::size_t j = i;
      while (j < lengths.size() && lengths[j] == lengths[i]) ++j;
      if (i != 0) out += ',';
      out += std::to_string(lengths[i]);
      if (j - i > 1) out += '^' + std::to_string(j - i);
      i = j;
    }
    return out + "]";
  }
};

/// A bijection of {0, ..., n-1}. Composition is right-to-left: (p * q)(x) = p(q(x)).
class Permutation {
 public:
  Permutation() = default;

  /// Throws std::invalid_argument unless `images` is a bijection of {0..n-1}.
  explicit Permutation(std::vector<point_t> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (point_t x : images_) {
      if (x >= images_.size() || seen[x]) throw std::invalid_argument("permutation: images are not a bijection");
      seen[x] = true;
    }
  }

  static Permutation identity(std::size_t n) {
    std::vector<point_t> im(n);
    std::iota(im.begin(), im.end(), point_t{0});
    return Permutation(std::move(im), unchecked{});
  }

  /// Builds a permutation of degree n from disjoint cycles.
  static Permutation from_cycles(std::size_t n, const std::vector<std::vector<point_t>>& cycles) {
    std::vector<point_t> im(n);
    std::iota(im.begin(), im.end(), point_t{0});
    std::vector<bool> used(n, false);
    for (const auto& c : cycles) {
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] >= n || used[c[i]]) throw std::invalid_argument("permutation: cycles are not disjoint");
        used[c[i]] = true;
        im[c[i]] = c[(i + 1) % c.size()];
      }
    }
    return Permutation(std::move(im), unchecked{});
  }

  /// Parses `(0 1 4)(2 3)`; `()` is the identity. Commas are accepted as separators.
  static Permutation parse(std::string_view text, std::size_t n) {
    std::vector<std::vector<point_t>> cycles;
    std::size_t i = 0;
    auto skip_ws = [&] {
      while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == ',')) ++i;
    };
    skip_ws();
    while (i < text.size()) {
      if (text[i] != '(') throw std::invalid_argument("permutation: expected '('");
      ++i;
      std::vector<point_t> cycle;
      for (;;) {
        skip_ws();
        if (i >= text.size()) throw std::invalid_argument("permutation: unterminated cycle");
        if (text[i] == ')') {
          ++i;
          break;
        }
        if (text[i] < '0' || text[i] > '9') throw std::invalid_argument("permutation: expected digit");
        std::uint64_t v = 0;
        while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
          v = v * 10 + static_cast<std::uint64_t>(text[i] - '0');
          if (v > (1u << 30)) throw std::invalid_argument("permutation: point out of range");
          ++i;
        }
        cycle.push_back(static_cast<point_t>(v));
      }
      if (!cycle.empty()) cycles.push_back(std::move(cycle));
      skip_ws();
    }
    return from_cycles(n, cycles);
  }

  std::size_t degree() const { return images_.size(); }
  point_t operator()(point_t x) const { return images_[x]; }
  std::span<const point_t> images() const { return images_; }

  bool is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i)
      if (images_[i] != i) return false;
    return true;
  }

  /// (p * q)(x) = p(q(x)).
  friend Permutation operator*(const Permutation& p, const Permutation& q) {
    if (p.degree() != q.degree()) throw degree_mismatch("compose: degree mismatch");
    std::vector<point_t> im(p.degree());
    for (std::size_t x = 0; x < im.size(); ++x) im[x] = p.images_[q.images_[x]];
    return Permutation(std::move(im), unchecked{});
  }

  Permutation inverse() const {
    std::vector<point_t> im(images_.size());
    for (std::size_t x = 0; x < im.size(); ++x) im[images_[x]] = static_cast<point_t>(x);
    return Permutation(std::move(im), unchecked{});
  }

  Permutation pow(long long k) const {
    Permutation base = k < 0 ? inverse() : *this;
    unsigned long long e = k < 0 ? static_cast<unsigned long long>(-k) : static_cast<unsigned long long>(k);
    Permutation result = identity(degree());
    while (e) {
      if (e & 1) result = result * base;
      base = base * base;
      e >>= 1;
    }
    return result;
  }

  /// q p q^-1
  Permutation conjugate_by(const Permutation& q) const { return q * *this * q.inverse(); }

  /// Disjoint cycles including fixed points, each starting at its smallest point, sorted by that point.
  std::vector<std::vector<point_t>> cycles() const {
    std::vector<std::vector<point_t>> out;
    std::vector<bool> seen(images_.size(), false);
    for (point_t s = 0; s < images_.size(); ++s) {
      if (seen[s]) continue;
      std::vector<point_t> c;
      for (point_t x = s; !seen[x]; x = images_[x]) {
        seen[x] = true;
        c.push_back(x);
      }
      out.push_back(std::move(c));
    }
    return out;
  }

  std::size_t cycle_count() const { return cycles().size(); }

  CycleType cycle_type() const {
    std::vector<std::size_t> l;
    for (const auto& c : cycles()) l.push_back(c.size());
    return CycleType(std::move(l));
  }

  /// Order of the permutation as a group element (lcm of the cycle lengths).
  std::size_t order() const {
    std::size_t o = 1;
    for (const auto& c : cycles()) o = std::lcm(o, c.size());
    return o;
  }

  std::size_t fixed_points() const {
    std::size_t k = 0;
    for (std::size_t i = 0; i < images_.size(); ++i) k += images_[i] == i;
    return k;
  }

  /// Canonical cycle notation with fixed points omitted; `()` for the identity.
  std::string to_string() const {
    std::string out;
    for (const auto& c : cycles()) {
      if (c.size() == 1) continue;
      out += '(';
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(c[i]);
      }
      out += ')';
    }
    return out.empty() ? "()" : out;
  }

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation& o) const { return images_ <=> o.images_; }

 private:
  struct unchecked {};
  Permutation(std::vector<point_t> images, unchecked) : images_(std::move(images)) {}

  std::vector<point_t> images_;
};

inline Permutation compose(const Permutation& p, const Permutation& q) { return p * q; }
inline Permutation inverse(const Permutation& p) { return p.inverse(); }
inline CycleType cycle_type(const Permutation& p) { return p.cycle_type(); }

/// Disjoint union: p acts on [0, n) and q on [n, n+m).
inline Permutation direct_sum(const Permutation& p, const Permutation& q) {
  std::vector<point_t> im(p.degree() + q.degree());
  const auto shift = static_cast<point_t>(p.degree());
  for (std::size_t x = 0; x < p.degree(); ++x) im[x] = p(static_cast<point_t>(x));
  for (std::size_t x = 0; x < q.degree(); ++x) im[shift + x] = shift + q(static_cast<point_t>(x));
  return Permutation(std::move(im));
}

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (point_t x : p.images()) h = (h ^ x) * 1099511628211ull;
    return h;
  }
};

}  // namespace bring

#endif  // BRING_PERMUTATION_HPP
