// Independent reference implementations used only by the tests.
#ifndef BRING_TEST_ORACLES_HPP
#define BRING_TEST_ORACLES_HPP

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "bring/dessin.hpp"
#include "bring/permutation.hpp"

namespace oracle {

using Images = std::vector<bring::point_t>;

inline Images images(const bring::Permutation& p) { return Images(p.images().begin(), p.images().end()); }

inline bring::Permutation random_perm(std::size_t n, std::mt19937_64& rng) {
  Images v(n);
  std::iota(v.begin(), v.end(), 0);
  std::shuffle(v.begin(), v.end(), rng);
  return bring::Permutation(v);
}

inline std::size_t count_cycles(const Images& p) {
  std::vector<bool> seen(p.size());
  std::size_t c = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    ++c;
    for (std::size_t j = i; !seen[j]; j = p[j]) seen[j] = true;
  }
  return c;
}

inline bring::CycleType naive_cycle_type(const bring::Permutation& p) {
  const auto v = images(p);
  std::vector<std::size_t> lens;
  std::vector<bool> seen(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = v[j]) seen[j] = true, ++len;
    lens.push_back(len);
  }
  return bring::CycleType(lens);
}

// Smallest k > 0 with p^k = id, by repeated multiplication.
inline std::size_t naive_order(const bring::Permutation& p) {
  auto v = images(p);
  const auto start = v;
  Images id(v.size());
  std::iota(id.begin(), id.end(), 0);
  std::size_t k = 1;
  auto cur = v;
  while (cur != id) {
    Images next(v.size());
    for (std::size_t x = 0; x < v.size(); ++x) next[x] = v[cur[x]];
    cur = next;
    ++k;
  }
  return k;
}

// Fixed-point iteration: multiply every known element by every known element.
inline std::set<Images> brute_closure(const std::vector<bring::Permutation>& gens) {
  std::set<Images> all;
  for (const auto& g : gens) all.insert(images(g));
  if (!gens.empty()) {
    Images id(gens.front().degree());
    std::iota(id.begin(), id.end(), 0);
    all.insert(id);
  }
  for (bool grew = true; grew;) {
    grew = false;
    const std::vector<Images> cur(all.begin(), all.end());
    for (const auto& a : cur)
      for (const auto& b : cur) {
        Images c(a.size());
        for (std::size_t x = 0; x < a.size(); ++x) c[x] = a[b[x]];
        grew |= all.insert(c).second;
      }
  }
  return all;
}

// Genus from cycle counts, without going through the library's passport.
inline long long riemann_hurwitz_genus(const bring::Permutation& s0, const bring::Permutation& s1) {
  const auto a = images(s0), b = images(s1);
  const std::size_t n = a.size();
  Images inf(n);
  // sigma_inf = (s0 s1)^{-1}
  for (std::size_t x = 0; x < n; ++x) inf[a[b[x]]] = static_cast<bring::point_t>(x);
  const long long chi = static_cast<long long>(count_cycles(a) + count_cycles(b) + count_cycles(inf)) -
                        static_cast<long long>(n);
  return (2 - chi) / 2;
}

}  // namespace oracle

#endif
