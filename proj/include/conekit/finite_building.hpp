#pragma once

#include "conekit/coxeter.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

namespace conekit {

// Finite flag complex of GF(q)^m with its full apartment system, small enough
// to verify the building axioms by exhaustion. Vectors are encoded as base-q
// integers; a subspace is the sorted set of its nonzero vectors, which is a
// canonical key.
class FiniteFlagComplex {
 public:
  using Vec = int;                    // base-q encoding of a vector
  using PointSet = std::vector<Vec>;  // sorted nonzero vectors of a subspace

  struct Chamber {
    std::vector<int> subspaces;  // indices into subspaces(), increasing dim

    friend bool operator==(const Chamber& a, const Chamber& b) {
      return a.subspaces == b.subspaces;
    }
    friend bool operator<(const Chamber& a, const Chamber& b) {
      return a.subspaces < b.subspaces;
    }
  };

  struct Apartment {
    std::vector<int> lines;  // m pairwise independent spanning lines, sorted
  };

  struct AxiomResult {
    std::string axiom;
    bool holds = false;
    std::string counterexample;  // empty when holds
  };

  static FiniteFlagComplex build(int q, int m) {
    if ((q != 2 && q != 3) || (m != 2 && m != 3))
      throw DomainError("finite_flag_complex: supported only for q in {2,3}, m in {2,3}");
    FiniteFlagComplex fc;
    fc.q_ = q;
    fc.m_ = m;
    fc.enumerate_subspaces();
    fc.enumerate_chambers();
    fc.enumerate_apartments();
    fc.build_mask_table();
    return fc;
  }

  int q() const { return q_; }
  int m() const { return m_; }
  std::size_t chamber_count() const { return chambers_.size(); }
  std::size_t apartment_count() const { return apartments_.size(); }
  std::size_t line_count() const { return by_dim_[1].size(); }
  const std::vector<Chamber>& chambers() const { return chambers_; }
  const std::vector<Apartment>& apartments() const { return apartments_; }

  // Chambers of one apartment: the full flags built from orderings of its
  // frame lines.
  std::vector<Chamber> apartment_chambers(std::size_t ap) const {
    std::vector<int> order(static_cast<std::size_t>(m_));
    std::iota(order.begin(), order.end(), 0);
    std::vector<Chamber> out;
    do {
      Chamber c;
      std::uint32_t mask = 0;
      for (int d = 0; d + 1 < m_; ++d) {
        mask |= 1u << order[static_cast<std::size_t>(d)];
        c.subspaces.push_back(mask_vertex_[ap][mask]);
      }
      out.push_back(std::move(c));
    } while (std::next_permutation(order.begin(), order.end()));
    std::sort(out.begin(), out.end());
    return out;
  }

  // B1: every apartment subcomplex is isomorphic to the A_{m-1} Coxeter
  // complex. The isomorphism sends span(S) to the subset S of frame lines; it
  // is enough that distinct proper subsets span distinct subspaces of the
  // right dimension and that chamber counts agree.
  AxiomResult check_b1() const {
    CoxeterComplex cox = CoxeterComplex::enumerate(m_ - 1);
    const std::uint32_t full = (1u << m_) - 1;
    for (std::size_t ap = 0; ap < apartments_.size(); ++ap) {
      std::set<int> distinct;
      for (std::uint32_t mask = 1; mask < full; ++mask) {
        int v = mask_vertex_[ap][mask];
        if (subspaces_[static_cast<std::size_t>(v)].first != std::popcount(mask))
          return {"B1", false, "frame subset spans wrong dimension in apartment"};
        distinct.insert(v);
      }
      if (distinct.size() != full - 1)
        return {"B1", false, "frame subsets do not span distinct subspaces"};
      if (apartment_chambers(ap).size() != cox.chamber_count())
        return {"B1", false, "apartment chamber count differs from Coxeter complex"};
    }
    return {"B1", true, ""};
  }

  // B2: any two chambers lie in a common apartment. Exhaustive over all
  // chamber pairs.
  AxiomResult check_b2() const {
    std::vector<std::set<Chamber>> per_apartment;
    per_apartment.reserve(apartments_.size());
    for (std::size_t ap = 0; ap < apartments_.size(); ++ap) {
      auto cs = apartment_chambers(ap);
      per_apartment.emplace_back(cs.begin(), cs.end());
    }
    for (std::size_t a = 0; a < chambers_.size(); ++a)
      for (std::size_t b = a; b < chambers_.size(); ++b) {
        bool found = false;
        for (const auto& cs : per_apartment)
          if (cs.count(chambers_[a]) && cs.count(chambers_[b])) {
            found = true;
            break;
          }
        if (!found)
          return {"B2", false,
                  "chambers " + std::to_string(a) + ", " + std::to_string(b) +
                      " share no apartment"};
      }
    return {"B2", true, ""};
  }

  // B3: for apartment pairs, some isomorphism fixes the intersection
  // simplex-wise. Type-preserving isomorphisms of apartment subcomplexes are
  // induced by bijections of the frames, so the m! candidates are tried
  // directly; fixing all common vertices fixes every common simplex.
  AxiomResult check_b3(int max_pairs = 0) const {
    int tried = 0;
    for (std::size_t a = 0; a < apartments_.size(); ++a)
      for (std::size_t b = a + 1; b < apartments_.size(); ++b) {
        if (max_pairs > 0 && tried >= max_pairs) return {"B3", true, ""};
        ++tried;
        if (!isomorphism_fixing_intersection(a, b))
          return {"B3", false,
                  "apartments " + std::to_string(a) + ", " + std::to_string(b) +
                      ": no isomorphism fixes the intersection"};
      }
    return {"B3", true, ""};
  }

  // Panel thickness: every codimension-1 face of a chamber lies in exactly
  // q + 1 chambers. For m = 2 the panel is the empty simplex.
  AxiomResult check_thickness() const {
    if (m_ == 2) {
      if (chambers_.size() == static_cast<std::size_t>(q_) + 1) return {"thickness", true, ""};
      return {"thickness", false, "empty panel not in q+1 chambers"};
    }
    std::map<std::vector<int>, int> counts;
    for (const Chamber& c : chambers_)
      for (std::size_t drop = 0; drop < c.subspaces.size(); ++drop) {
        std::vector<int> panel;
        for (std::size_t i = 0; i < c.subspaces.size(); ++i)
          if (i != drop) panel.push_back(c.subspaces[i]);
        counts[panel] += 1;
      }
    for (const auto& [panel, count] : counts)
      if (count != q_ + 1)
        return {"thickness", false,
                "panel in " + std::to_string(count) + " chambers, expected " +
                    std::to_string(q_ + 1)};
    return {"thickness", true, ""};
  }

  std::vector<AxiomResult> check_axioms(int b3_max_pairs = 0) const {
    return {check_b1(), check_b2(), check_b3(b3_max_pairs), check_thickness()};
  }

 private:
  int vec_count() const {
    int n = 1;
    for (int i = 0; i < m_; ++i) n *= q_;
    return n;
  }

  std::array<int, 4> decode(Vec v) const {
    std::array<int, 4> c{};
    for (int i = 0; i < m_; ++i) {
      c[static_cast<std::size_t>(i)] = v % q_;
      v /= q_;
    }
    return c;
  }

  Vec add(Vec a, Vec b) const {
    auto ca = decode(a), cb = decode(b);
    Vec out = 0, base = 1;
    for (int i = 0; i < m_; ++i) {
      out += ((ca[static_cast<std::size_t>(i)] + cb[static_cast<std::size_t>(i)]) % q_) * base;
      base *= q_;
    }
    return out;
  }

  Vec scale(int s, Vec a) const {
    auto ca = decode(a);
    Vec out = 0, base = 1;
    for (int i = 0; i < m_; ++i) {
      out += ((s * ca[static_cast<std::size_t>(i)]) % q_) * base;
      base *= q_;
    }
    return out;
  }

  // Span of a set of vectors; returns the sorted nonzero vectors.
  PointSet span_points(const std::vector<Vec>& gens) const {
    std::set<Vec> pts{0};
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<Vec> current(pts.begin(), pts.end());
      for (Vec p : current)
        for (Vec g : gens)
          for (int s = 1; s < q_; ++s)
            if (pts.insert(add(p, scale(s, g))).second) grew = true;
    }
    PointSet out;
    for (Vec p : pts)
      if (p != 0) out.push_back(p);
    return out;
  }

  int dimension_of(const PointSet& pts) const {
    std::size_t n = pts.size() + 1;  // includes zero
    int dim = 0;
    std::size_t power = 1;
    while (power < n) {
      power *= static_cast<std::size_t>(q_);
      ++dim;
    }
    return dim;
  }

  void enumerate_subspaces() {
    by_dim_.assign(static_cast<std::size_t>(m_), {});
    std::set<PointSet> seen;
    for (Vec v = 1; v < vec_count(); ++v) {
      PointSet line = span_points({v});
      if (seen.insert(line).second) register_subspace(1, line);
    }
    for (int d = 2; d < m_; ++d) {
      std::vector<int> smaller = by_dim_[static_cast<std::size_t>(d - 1)];
      for (int idx : smaller) {
        const PointSet base = subspaces_[static_cast<std::size_t>(idx)].second;
        for (Vec v = 1; v < vec_count(); ++v) {
          if (std::binary_search(base.begin(), base.end(), v)) continue;
          std::vector<Vec> gens(base);
          gens.push_back(v);
          PointSet bigger = span_points(gens);
          if (dimension_of(bigger) == d && seen.insert(bigger).second)
            register_subspace(d, bigger);
        }
      }
    }
  }

  void register_subspace(int dim, const PointSet& pts) {
    int idx = static_cast<int>(subspaces_.size());
    subspaces_.push_back({dim, pts});
    subspace_index_[pts] = idx;
    by_dim_[static_cast<std::size_t>(dim)].push_back(idx);
  }

  void enumerate_chambers() {
    std::vector<int> chain;
    build_chains(1, chain);
    std::sort(chambers_.begin(), chambers_.end());
  }

  void build_chains(int dim, std::vector<int>& chain) {
    if (dim == m_) {
      chambers_.push_back({chain});
      return;
    }
    for (int idx : by_dim_[static_cast<std::size_t>(dim)]) {
      if (!chain.empty()) {
        const PointSet& prev = subspaces_[static_cast<std::size_t>(chain.back())].second;
        const PointSet& cur = subspaces_[static_cast<std::size_t>(idx)].second;
        if (!std::includes(cur.begin(), cur.end(), prev.begin(), prev.end())) continue;
      }
      chain.push_back(idx);
      build_chains(dim + 1, chain);
      chain.pop_back();
    }
  }

  void enumerate_apartments() {
    std::vector<int> pick;
    enumerate_frames(0, pick);
  }

  void enumerate_frames(std::size_t from, std::vector<int>& pick) {
    const auto& lines = by_dim_[1];
    if (static_cast<int>(pick.size()) == m_) {
      apartments_.push_back({pick});
      return;
    }
    for (std::size_t i = from; i < lines.size(); ++i) {
      std::vector<Vec> gens;
      for (int idx : pick) {
        const auto& pts = subspaces_[static_cast<std::size_t>(idx)].second;
        gens.insert(gens.end(), pts.begin(), pts.end());
      }
      const auto& line = subspaces_[static_cast<std::size_t>(lines[i])].second;
      gens.insert(gens.end(), line.begin(), line.end());
      if (dimension_of(span_points(gens)) != static_cast<int>(pick.size()) + 1) continue;
      pick.push_back(lines[i]);
      enumerate_frames(i + 1, pick);
      pick.pop_back();
    }
  }

  // mask_vertex_[ap][mask] = subspace spanned by the masked frame lines, for
  // every nonempty proper mask. Everything downstream is table lookups.
  void build_mask_table() {
    const std::uint32_t full = (1u << m_) - 1;
    mask_vertex_.assign(apartments_.size(), std::vector<int>(full + 1, -1));
    for (std::size_t ap = 0; ap < apartments_.size(); ++ap) {
      for (std::uint32_t mask = 1; mask < full; ++mask) {
        std::vector<Vec> gens;
        for (int b = 0; b < m_; ++b)
          if (mask & (1u << b)) {
            const auto& pts =
                subspaces_[static_cast<std::size_t>(apartments_[ap].lines[static_cast<std::size_t>(b)])].second;
            gens.insert(gens.end(), pts.begin(), pts.end());
          }
        mask_vertex_[ap][mask] = subspace_index_.at(span_points(gens));
      }
    }
  }

  bool isomorphism_fixing_intersection(std::size_t a, std::size_t b) const {
    const std::uint32_t full = (1u << m_) - 1;
    std::set<int> vb;
    for (std::uint32_t mask = 1; mask < full; ++mask) vb.insert(mask_vertex_[b][mask]);
    std::vector<int> perm(static_cast<std::size_t>(m_));
    std::iota(perm.begin(), perm.end(), 0);
    do {
      bool ok = true;
      for (std::uint32_t mask = 1; mask < full && ok; ++mask) {
        int src = mask_vertex_[a][mask];
        std::uint32_t image_mask = 0;
        for (int bit = 0; bit < m_; ++bit)
          if (mask & (1u << bit)) image_mask |= 1u << perm[static_cast<std::size_t>(bit)];
        int dst = mask_vertex_[b][image_mask];
        if (vb.count(src) && dst != src) ok = false;  // common vertex must be fixed
      }
      if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
  }

  int q_ = 0;
  int m_ = 0;
  std::vector<std::pair<int, PointSet>> subspaces_;  // (dim, points)
  std::map<PointSet, int> subspace_index_;
  std::vector<std::vector<int>> by_dim_;
  std::vector<Chamber> chambers_;
  std::vector<Apartment> apartments_;
  std::vector<std::vector<int>> mask_vertex_;
};

}  // namespace conekit
