#pragma once

#include "conekit/rational.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

namespace conekit {

// Simplex of the A_n Coxeter complex: a strictly increasing chain of
// nonempty proper subsets of {0, ..., n}, subsets packed as bitmasks.
struct CoxeterSimplex {
  std::vector<std::uint32_t> chain;

  friend bool operator==(const CoxeterSimplex& a, const CoxeterSimplex& b) {
    return a.chain == b.chain;
  }
  friend bool operator<(const CoxeterSimplex& a, const CoxeterSimplex& b) {
    return a.chain < b.chain;
  }
};

// Full enumeration of the A_n Coxeter complex as a chain poset. Chambers are
// the maximal chains; two chambers are adjacent iff they differ in exactly
// one subset. Scale-limited: the enumeration is exhaustive.
class CoxeterComplex {
 public:
  static CoxeterComplex enumerate(int rank) {
    if (rank < 1 || rank > 5)
      throw DomainError("coxeter_complex: rank out of supported range [1, 5]");
    CoxeterComplex cx;
    cx.rank_ = rank;
    cx.ground_size_ = rank + 1;
    const std::uint32_t full = (1u << cx.ground_size_) - 1;
    std::vector<std::uint32_t> subsets;
    for (std::uint32_t s = 1; s < full; ++s) subsets.push_back(s);
    std::sort(subsets.begin(), subsets.end(), [](std::uint32_t a, std::uint32_t b) {
      int pa = std::popcount(a), pb = std::popcount(b);
      return pa != pb ? pa < pb : a < b;
    });
    std::vector<std::uint32_t> chain;
    cx.extend(subsets, 0, chain);
    for (const auto& s : cx.simplices_)
      if (static_cast<int>(s.chain.size()) == rank) cx.chambers_.push_back(s);
    return cx;
  }

  int rank() const { return rank_; }
  const std::vector<CoxeterSimplex>& simplices() const { return simplices_; }
  const std::vector<CoxeterSimplex>& chambers() const { return chambers_; }
  std::size_t chamber_count() const { return chambers_.size(); }

  // Number of simplices with exactly k subsets in the chain.
  std::size_t face_count(int k) const {
    std::size_t n = 0;
    for (const auto& s : simplices_)
      if (static_cast<int>(s.chain.size()) == k) ++n;
    return n;
  }

  static bool adjacent(const CoxeterSimplex& a, const CoxeterSimplex& b) {
    if (a.chain.size() != b.chain.size()) return false;
    std::size_t diff = 0;
    for (std::size_t i = 0; i < a.chain.size(); ++i)
      if (a.chain[i] != b.chain[i]) ++diff;
    return diff == 1;
  }

  // Codimension-1 faces of chambers, with the number of chambers containing
  // each. Thinness of the Coxeter complex means every count is 2.
  std::map<CoxeterSimplex, int> wall_chamber_counts() const {
    std::map<CoxeterSimplex, int> counts;
    for (const auto& c : chambers_) {
      for (std::size_t drop = 0; drop < c.chain.size(); ++drop) {
        CoxeterSimplex wall;
        for (std::size_t i = 0; i < c.chain.size(); ++i)
          if (i != drop) wall.chain.push_back(c.chain[i]);
        counts[wall] += 1;
      }
    }
    return counts;
  }

  // Image of a simplex under a permutation of the ground set.
  static CoxeterSimplex apply_permutation(const std::vector<int>& perm,
                                          const CoxeterSimplex& s) {
    CoxeterSimplex out;
    for (std::uint32_t mask : s.chain) {
      std::uint32_t image = 0;
      for (std::size_t i = 0; i < perm.size(); ++i)
        if (mask & (1u << i)) image |= 1u << perm[i];
      out.chain.push_back(image);
    }
    return out;
  }

  // The symmetric group on the ground set acts simply transitively on
  // chambers; checked exhaustively.
  bool action_simply_transitive() const {
    std::vector<int> perm(ground_size_);
    std::iota(perm.begin(), perm.end(), 0);
    std::map<CoxeterSimplex, int> index;
    for (std::size_t i = 0; i < chambers_.size(); ++i)
      index[chambers_[i]] = static_cast<int>(i);
    std::vector<std::vector<int>> hits(chambers_.size(),
                                       std::vector<int>(chambers_.size(), 0));
    do {
      for (std::size_t i = 0; i < chambers_.size(); ++i) {
        CoxeterSimplex img = apply_permutation(perm, chambers_[i]);
        std::sort(img.chain.begin(), img.chain.end(),
                  [](std::uint32_t a, std::uint32_t b) { return std::popcount(a) < std::popcount(b); });
        auto it = index.find(img);
        if (it == index.end()) return false;
        hits[i][static_cast<std::size_t>(it->second)] += 1;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    for (const auto& row : hits)
      for (int h : row)
        if (h != 1) return false;
    return true;
  }

 private:
  void extend(const std::vector<std::uint32_t>& subsets, std::size_t from,
              std::vector<std::uint32_t>& chain) {
    for (std::size_t i = from; i < subsets.size(); ++i) {
      if (!chain.empty()) {
        std::uint32_t prev = chain.back();
        if ((prev & subsets[i]) != prev || prev == subsets[i]) continue;
      }
      chain.push_back(subsets[i]);
      simplices_.push_back({chain});
      extend(subsets, i + 1, chain);
      chain.pop_back();
    }
  }

  int rank_ = 0;
  int ground_size_ = 0;
  std::vector<CoxeterSimplex> simplices_;
  std::vector<CoxeterSimplex> chambers_;
};

}  // namespace conekit
