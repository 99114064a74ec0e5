#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <random>
#include <vector>

#include "rankfuse/ranking.hpp"

namespace rankfuse {

// gtest printer so failed comparisons show the order.
inline void PrintTo(const Ranking& r, std::ostream* os) {
  *os << '[';
  for (std::size_t i = 0; i < r.size(); ++i) *os << (i ? "," : "") << r.order()[i];
  *os << ']';
}

}  // namespace rankfuse

namespace rankfuse::testing {

inline Ranking R(std::vector<ObjectId> order) { return Ranking(std::move(order)); }

inline Ranking random_permutation(std::size_t m, std::mt19937_64& rng, ObjectId first = 1) {
  std::vector<ObjectId> ids(m);
  std::iota(ids.begin(), ids.end(), first);
  std::shuffle(ids.begin(), ids.end(), rng);
  return Ranking(std::move(ids));
}

inline RankingList random_list(std::size_t n, std::size_t m, std::mt19937_64& rng) {
  std::vector<Ranking> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(random_permutation(m, rng));
  return RankingList::uniform(std::move(out));
}

/// Every permutation of 1..m in lexicographic order.
inline std::vector<Ranking> all_permutations(std::size_t m) {
  std::vector<ObjectId> ids(m);
  std::iota(ids.begin(), ids.end(), ObjectId{1});
  std::vector<Ranking> out;
  do {
    out.emplace_back(ids);
  } while (std::next_permutation(ids.begin(), ids.end()));
  return out;
}

/// Footrule by scanning both orders directly.
inline std::int64_t brute_footrule(const Ranking& a, const Ranking& b) {
  std::int64_t d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (a.order()[i] == b.order()[j]) d += std::llabs(static_cast<std::int64_t>(i) - static_cast<std::int64_t>(j));
    }
  }
  return d;
}

/// Kendall distance by checking every object pair.
inline std::int64_t brute_kendall(const Ranking& a, const Ranking& b) {
  std::int64_t d = 0;
  const auto& o = a.order();
  for (std::size_t i = 0; i < o.size(); ++i) {
    for (std::size_t j = i + 1; j < o.size(); ++j) {
      // a ranks o[i] above o[j]; discordant if b disagrees.
      if (b.position(o[i]) > b.position(o[j])) ++d;
    }
  }
  return d;
}

}  // namespace rankfuse::testing
