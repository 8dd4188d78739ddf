#include "conekit/diamond.hpp"

#include <doctest.h>

#include <algorithm>

using namespace conekit;

namespace {

VectorQ vq(std::initializer_list<long> xs) {
  VectorQ v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (long x : xs) v(i++) = Rational(x);
  return v;
}

VectorQ vq3(const Rational& a, const Rational& b, const Rational& c) {
  VectorQ v(3);
  v << a, b, c;
  return v;
}

bool vertex_set_equal(std::vector<VectorQ> got, std::vector<VectorQ> want) {
  auto less = [](const VectorQ& a, const VectorQ& b) {
    for (Eigen::Index i = 0; i < a.size(); ++i) {
      if (a(i) < b(i)) return true;
      if (b(i) < a(i)) return false;
    }
    return false;
  };
  std::sort(got.begin(), got.end(), less);
  std::sort(want.begin(), want.end(), less);
  if (got.size() != want.size()) return false;
  for (std::size_t i = 0; i < got.size(); ++i)
    if (!(got[i] == want[i])) return false;
  return true;
}

}  // namespace

TEST_CASE("diamond: degenerate pair is a single point") {
  Diamond d(vq({0, 0, 0}), vq({0, 0, 0}));
  CHECK(d.member(vq({0, 0, 0})));
  CHECK_FALSE(d.member(vq({1, 0, -1})));
  CHECK(vertex_set_equal(d.vertices(), {vq({0, 0, 0})}));
}

TEST_CASE("diamond: rank one is the segment") {
  Diamond d(vq({0, 0}), vq({1, -1}));
  CHECK(vertex_set_equal(d.vertices(), {vq({0, 0}), vq({1, -1})}));
  VectorQ mid(2);
  mid << make_rational(1, 2), make_rational(-1, 2);
  CHECK(d.member(mid));
  CHECK_FALSE(d.member(vq({2, -2})));
}

TEST_CASE("diamond: pinned four-vertex example in rank two") {
  Diamond d(vq({0, 0, 0}), vq({1, 0, -1}));
  std::vector<VectorQ> want{
      vq({0, 0, 0}), vq({1, 0, -1}),
      vq3(make_rational(2, 3), make_rational(-1, 3), make_rational(-1, 3)),
      vq3(make_rational(1, 3), make_rational(1, 3), make_rational(-2, 3))};
  CHECK(vertex_set_equal(d.vertices(), want));
  CHECK(d.member(vq({0, 0, 0})));
  CHECK(d.member(vq({1, 0, -1})));
}

TEST_CASE("diamond: contains both tips and is symmetric in them") {
  std::mt19937 gen(40);
  std::uniform_int_distribution<int> coord(-4, 4);
  for (int i = 0; i < 25; ++i) {
    VectorQ x(3), y(3);
    long xs = 0, ys = 0;
    for (Eigen::Index k = 0; k < 2; ++k) {
      long a = coord(gen), b = coord(gen);
      x(k) = Rational(a);
      y(k) = Rational(b);
      xs += a;
      ys += b;
    }
    x(2) = Rational(-xs);
    y(2) = Rational(-ys);
    Diamond d(x, y), swapped(y, x);
    CHECK(d.member(x));
    CHECK(d.member(y));
    CHECK(vertex_set_equal(d.vertices(), swapped.vertices()));
    // monotone nesting: diamonds to interior points stay inside
    for (const VectorQ& v : d.vertices()) {
      Diamond inner(x, v);
      for (const VectorQ& w : inner.vertices()) CHECK(d.member(w));
    }
  }
}

TEST_CASE("diamond: convex combinations of vertices are members") {
  std::mt19937 gen(41);
  std::uniform_int_distribution<int> coord(-3, 3);
  std::uniform_int_distribution<int> weight(0, 4);
  for (int trial = 0; trial < 10; ++trial) {
    Eigen::Index m = trial % 2 == 0 ? 3 : 4;
    VectorQ x(m), y(m);
    long xs = 0, ys = 0;
    for (Eigen::Index k = 0; k + 1 < m; ++k) {
      long a = coord(gen), b = coord(gen);
      x(k) = Rational(a);
      y(k) = Rational(b);
      xs += a;
      ys += b;
    }
    x(m - 1) = Rational(-xs);
    y(m - 1) = Rational(-ys);
    Diamond d(x, y);
    auto verts = d.vertices();
    REQUIRE(!verts.empty());
    for (int pick = 0; pick < 10; ++pick) {
      VectorQ z = VectorQ::Zero(m);
      Rational total(0);
      for (const auto& v : verts) {
        Rational w(weight(gen));
        z += w * v;
        total += w;
      }
      if (total == 0) continue;
      z /= total;
      CHECK(d.member(z));
    }
  }
}

TEST_CASE("diamond: tied root forms freeze to the wall") {
  // x and y lie on the wall z1 = z2; so must the whole diamond
  Diamond d(vq({0, 0, 0}), vq({1, 1, -2}));
  for (const VectorQ& v : d.vertices()) CHECK(v(0) == v(1));
  CHECK_FALSE(d.member(vq({1, 0, -1})));
}

TEST_CASE("sector membership: dominant chamber examples") {
  VectorQ origin = vq({0, 0, 0});
  std::vector<int> dominant{0, 1, 2};
  CHECK(sector_member(origin, dominant, vq({1, 0, -1})));
  CHECK_FALSE(sector_member(origin, dominant, vq({0, 1, -1})));
  CHECK(sector_member(origin, dominant, vq({1, 1, -2})));  // closed cone includes walls
  CHECK_THROWS_AS(sector_member(origin, {0, 0, 1}, origin), DomainError);
}

TEST_CASE("sector membership: translation and permutation equivariance") {
  std::vector<int> chamber{1, 2, 0};
  VectorQ x = vq({1, -1, 0});
  VectorQ z = vq({2, 3, -5});
  bool base = sector_member(x, chamber, z);
  VectorQ t = vq({2, -1, -1});
  CHECK(sector_member(x + t, chamber, z + t) == base);

  // permuting coordinates and the chamber labels together
  std::vector<int> perm{2, 0, 1};  // position i holds old coordinate perm[i]
  auto apply = [&](const VectorQ& v) {
    VectorQ out(3);
    for (int i = 0; i < 3; ++i) out(perm[static_cast<std::size_t>(i)]) = v(i);
    return out;
  };
  std::vector<int> pchamber(3);
  for (int i = 0; i < 3; ++i) pchamber[static_cast<std::size_t>(i)] = perm[static_cast<std::size_t>(chamber[static_cast<std::size_t>(i)])];
  CHECK(sector_member(apply(x), pchamber, apply(z)) == base);
}

TEST_CASE("diamonds transform equivariantly under the affine Weyl action") {
  // w = (permutation, translation) maps cvx{x, y} onto cvx{w x, w y}
  VectorQ x = vq({0, 0, 0}), y = vq({2, -1, -1});
  std::vector<int> perm{1, 2, 0};
  VectorQ t = vq({1, 0, -1});
  auto apply = [&](const VectorQ& v) {
    VectorQ out(3);
    for (int i = 0; i < 3; ++i) out(perm[static_cast<std::size_t>(i)]) = v(i);
    return VectorQ(out + t);
  };
  auto unapply = [&](const VectorQ& v) {
    VectorQ shifted = v - t;
    VectorQ out(3);
    for (int i = 0; i < 3; ++i) out(i) = shifted(perm[static_cast<std::size_t>(i)]);
    return out;
  };
  Diamond d(x, y);
  Diamond image(apply(x), apply(y));
  std::vector<VectorQ> mapped;
  for (const VectorQ& v : d.vertices()) mapped.push_back(apply(v));
  std::vector<VectorQ> got = image.vertices();
  REQUIRE(mapped.size() == got.size());
  for (const VectorQ& v : mapped) CHECK(image.member(v));
  for (const VectorQ& v : got) CHECK(d.member(unapply(v)));
}

TEST_CASE("sector recovery: dominant sector is the union of the diamond chain") {
  Direction v(vq({1, 0, -1}));
  auto report = sector_recovery_check(vq({0, 0, 0}), {0, 1, 2}, v, Rational(3), 100, 7);
  CHECK(report.passed);
  CHECK(report.interior_covered == 100);
  CHECK(report.exterior_rejected == 100);
  CHECK(report.k_cap >= 1);
}

TEST_CASE("sector recovery: the tip is covered at k = 0") {
  VectorQ x = vq({1, -2, 1});
  Diamond d(x, x);
  CHECK(d.member(x));
}

TEST_CASE("sector recovery: points outside are never covered") {
  VectorQ outside = vq({0, 1, -1});
  Direction v(vq({1, 0, -1}));
  for (long k = 0; k <= 6; ++k) {
    VectorQ tip = Rational(k) * v.t;
    CHECK_FALSE(Diamond(vq({0, 0, 0}), tip).member(outside));
  }
}

TEST_CASE("sector recovery: irregular direction rejected") {
  Direction wall(vq({1, 1, -2}));
  CHECK_THROWS_AS(sector_recovery_check(vq({0, 0, 0}), {0, 1, 2}, wall, Rational(2), 10, 0),
                  DomainError);
}
