#pragma once

#include "conekit/matrix.hpp"

#include <algorithm>
#include <utility>
#include <vector>

namespace conekit {

// Lexicographic order on vectors over K, used only to give unordered
// collections a canonical storage order.
inline bool lex_less(const VectorK& a, const VectorK& b) {
  for (Eigen::Index i = 0; i < std::min(a.size(), b.size()); ++i) {
    Ordering c = compare(a(i), b(i));
    if (c == Ordering::Less) return true;
    if (c == Ordering::Greater) return false;
  }
  return a.size() < b.size();
}

// Scales a nonzero vector so its first nonzero coordinate is 1.
inline VectorK projective_normalize(VectorK v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (!v(i).is_zero()) {
      HahnNumber inv = HahnNumber(1) / v(i);
      for (Eigen::Index j = i; j < v.size(); ++j) v(j) = v(j) * inv;
      return v;
    }
  }
  throw DomainError("projective_normalize: zero vector");
}

// Unordered frame of K^m: m lines, pairwise independent and jointly
// spanning, each stored by a projectively normalized representative. The
// stored order is the order lines were given in; equality is set equality.
struct Frame {
  std::vector<VectorK> lines;

  Eigen::Index dim() const { return lines.empty() ? 0 : lines.front().size(); }

  friend bool operator==(const Frame& a, const Frame& b) {
    if (a.lines.size() != b.lines.size()) return false;
    auto sa = a.lines, sb = b.lines;
    std::sort(sa.begin(), sa.end(), lex_less);
    std::sort(sb.begin(), sb.end(), lex_less);
    for (std::size_t i = 0; i < sa.size(); ++i)
      if (!(sa[i] == sb[i])) return false;
    return true;
  }
};

inline Frame make_frame(std::vector<VectorK> lines) {
  if (lines.empty()) throw DomainError("frame: no lines");
  const Eigen::Index m = lines.front().size();
  if (static_cast<Eigen::Index>(lines.size()) != m)
    throw DomainError("frame: need exactly m lines in K^m");
  MatrixK mat(m, m);
  for (Eigen::Index i = 0; i < m; ++i) {
    if (lines[static_cast<std::size_t>(i)].size() != m)
      throw DomainError("frame: inconsistent vector dimension");
    lines[static_cast<std::size_t>(i)] = projective_normalize(std::move(lines[static_cast<std::size_t>(i)]));
    mat.row(i) = lines[static_cast<std::size_t>(i)].transpose();
  }
  if (rank<HahnNumber>(mat) != m) throw DomainError("frame: lines do not span");
  return Frame{std::move(lines)};
}

inline Frame standard_frame(Eigen::Index m) {
  std::vector<VectorK> lines;
  for (Eigen::Index i = 0; i < m; ++i) {
    VectorK v = VectorK::Zero(m);
    v(i) = HahnNumber(1);
    lines.push_back(std::move(v));
  }
  return make_frame(std::move(lines));
}

// Subspace of K^m as a reduced-echelon basis matrix (rows). The echelon form
// is canonical, so subspace equality is row-wise equality.
struct Subspace {
  MatrixK basis;  // rref, no zero rows

  Eigen::Index dim() const { return basis.rows(); }
  Eigen::Index ambient() const { return basis.cols(); }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    if (a.basis.rows() != b.basis.rows() || a.basis.cols() != b.basis.cols()) return false;
    for (Eigen::Index i = 0; i < a.basis.rows(); ++i)
      for (Eigen::Index j = 0; j < a.basis.cols(); ++j)
        if (!(a.basis(i, j) == b.basis(i, j))) return false;
    return true;
  }
};

inline Subspace span_of_rows(const MatrixK& rows) { return Subspace{rref<HahnNumber>(rows)}; }

inline Subspace span_of_vectors(const std::vector<VectorK>& vs) {
  if (vs.empty()) throw DomainError("span: no vectors");
  MatrixK rows(static_cast<Eigen::Index>(vs.size()), vs.front().size());
  for (std::size_t i = 0; i < vs.size(); ++i) rows.row(static_cast<Eigen::Index>(i)) = vs[i].transpose();
  return span_of_rows(rows);
}

inline bool subspace_contains(const Subspace& s, const VectorK& v) {
  MatrixK stacked(s.basis.rows() + 1, s.basis.cols());
  stacked.topRows(s.basis.rows()) = s.basis;
  stacked.row(s.basis.rows()) = v.transpose();
  return rank<HahnNumber>(stacked) == s.dim();
}

inline bool subspace_contains(const Subspace& outer, const Subspace& inner) {
  MatrixK stacked(outer.basis.rows() + inner.basis.rows(), outer.basis.cols());
  stacked.topRows(outer.basis.rows()) = outer.basis;
  stacked.bottomRows(inner.basis.rows()) = inner.basis;
  return rank<HahnNumber>(stacked) == outer.dim();
}

inline Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  MatrixK stacked(a.basis.rows() + b.basis.rows(), a.basis.cols());
  stacked.topRows(a.basis.rows()) = a.basis;
  stacked.bottomRows(b.basis.rows()) = b.basis;
  return span_of_rows(stacked);
}

// Intersection via the kernel of [A^T | -B^T]: a point lies in both row
// spaces iff it is u^T A = v^T B for some coefficient vectors u, v.
inline Subspace subspace_intersection(const Subspace& a, const Subspace& b) {
  const Eigen::Index m = a.ambient();
  const Eigen::Index ra = a.dim(), rb = b.dim();
  if (ra == 0 || rb == 0) return Subspace{MatrixK(0, m)};
  MatrixK sys(m, ra + rb);
  sys.leftCols(ra) = a.basis.transpose();
  sys.rightCols(rb) = -b.basis.transpose();
  MatrixK ker = kernel_basis<HahnNumber>(sys);
  if (ker.cols() == 0) return Subspace{MatrixK(0, m)};
  MatrixK rows(ker.cols(), m);
  for (Eigen::Index k = 0; k < ker.cols(); ++k)
    rows.row(k) = (ker.col(k).head(ra).transpose() * a.basis);
  return span_of_rows(rows);
}

// Chain of nonzero proper subspaces with strictly increasing dimensions.
// Echelon bases make flag equality representational.
struct Flag {
  std::vector<Subspace> subspaces;

  Eigen::Index ambient() const {
    return subspaces.empty() ? 0 : subspaces.front().ambient();
  }
  bool full() const {
    return static_cast<Eigen::Index>(subspaces.size()) == ambient() - 1;
  }

  friend bool operator==(const Flag& a, const Flag& b) {
    return a.subspaces == b.subspaces;
  }
};

inline Flag make_flag(std::vector<Subspace> subspaces) {
  if (subspaces.empty()) throw DomainError("flag: no subspaces");
  const Eigen::Index m = subspaces.front().ambient();
  for (std::size_t i = 0; i < subspaces.size(); ++i) {
    const Subspace& s = subspaces[i];
    if (s.ambient() != m) throw DomainError("flag: inconsistent ambient dimension");
    if (s.dim() == 0 || s.dim() >= m)
      throw DomainError("flag: subspaces must be nonzero and proper");
    if (i > 0) {
      if (!(subspaces[i - 1].dim() < s.dim()) || !subspace_contains(s, subspaces[i - 1]))
        throw DomainError("flag: chain must be strictly increasing");
    }
  }
  return Flag{std::move(subspaces)};
}

// The chamber (or face) at infinity selected by a direction in the standard
// apartment of a frame: coordinates of the direction are grouped by value in
// decreasing order, and the k-th subspace is spanned by the lines whose value
// lies in the top k groups.
inline Flag flag_at_infinity(const Frame& frame, const std::vector<Rational>& direction) {
  const Eigen::Index m = frame.dim();
  if (static_cast<Eigen::Index>(direction.size()) != m)
    throw DomainError("flag_at_infinity: direction length must match frame size");
  Rational sum(0);
  bool nonzero = false;
  for (const auto& t : direction) {
    sum += t;
    if (t != 0) nonzero = true;
  }
  if (sum != 0 || !nonzero)
    throw DomainError("flag_at_infinity: direction must be nonzero with zero sum");

  std::vector<Rational> values = direction;
  std::sort(values.begin(), values.end(), std::greater<Rational>());
  values.erase(std::unique(values.begin(), values.end()), values.end());

  std::vector<Subspace> subspaces;
  std::vector<VectorK> picked;
  for (std::size_t g = 0; g + 1 < values.size(); ++g) {  // last group would give K^m
    for (Eigen::Index i = 0; i < m; ++i)
      if (direction[static_cast<std::size_t>(i)] == values[g])
        picked.push_back(frame.lines[static_cast<std::size_t>(i)]);
    subspaces.push_back(span_of_vectors(picked));
  }
  return make_flag(std::move(subspaces));
}

// True iff every subspace of the flag is spanned by the frame lines it
// contains (the frame is adapted to the flag).
inline bool frame_adapts(const Frame& frame, const Flag& flag) {
  for (const Subspace& s : flag.subspaces) {
    std::vector<VectorK> inside;
    for (const VectorK& line : frame.lines)
      if (subspace_contains(s, line)) inside.push_back(line);
    if (inside.empty()) return false;
    Subspace sp = span_of_vectors(inside);
    if (!(sp.dim() == s.dim()) || !subspace_contains(s, sp)) return false;
  }
  return true;
}

// Constructive common apartment for two flags (building axiom B2 for the
// flag complex of K^m): refine the double filtration
//   T_{ij} = V_i  ^  W_j,   lower = V_{i-1} ^ W_j + V_i ^ W_{j-1},
// picking dim T - dim lower new vectors per cell, row-major. The picks form a
// basis adapted to both flags.
inline Frame common_frame(const Flag& f1, const Flag& f2) {
  const Eigen::Index m = f1.ambient();
  if (f2.ambient() != m) throw DomainError("common_frame: flags in different spaces");

  auto filtration = [m](const Flag& f) {
    std::vector<Subspace> out;
    out.push_back(Subspace{MatrixK(0, m)});  // 0
    for (const Subspace& s : f.subspaces) out.push_back(s);
    out.push_back(span_of_rows(MatrixK::Identity(m, m)));  // K^m
    return out;
  };
  std::vector<Subspace> v = filtration(f1), w = filtration(f2);

  std::vector<VectorK> picked;
  Subspace current{MatrixK(0, m)};  // span of everything picked so far
  for (std::size_t i = 1; i < v.size(); ++i) {
    for (std::size_t j = 1; j < w.size(); ++j) {
      Subspace target = subspace_intersection(v[i], w[j]);
      Subspace lower = subspace_sum(subspace_intersection(v[i - 1], w[j]),
                                    subspace_intersection(v[i], w[j - 1]));
      Subspace blocked = subspace_sum(lower, current);
      for (Eigen::Index row = 0; row < target.basis.rows(); ++row) {
        VectorK cand = target.basis.row(row).transpose();
        if (!subspace_contains(blocked, cand)) {
          picked.push_back(cand);
          blocked = subspace_sum(blocked, span_of_vectors({cand}));
          current = subspace_sum(current, span_of_vectors({cand}));
        }
      }
    }
  }
  Frame out = make_frame(std::move(picked));
  if (!frame_adapts(out, f1) || !frame_adapts(out, f2))
    throw std::logic_error("common_frame: constructed frame is not adapted");
  return out;
}

}  // namespace conekit
