#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "wsp/linalg.hpp"

using namespace wsp;

namespace {

IntMatrix randomMatrix(std::mt19937& rng, std::size_t r, std::size_t c, int bound) {
  std::uniform_int_distribution<int> e(-bound, bound);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = e(rng);
  return m;
}

Rat frac(long p, long q) {
  Rat r(p, q);
  r.canonicalize();
  return r;
}

bool isUnimodular(const IntMatrix& m) {
  const Int d = oracle::cofactorDet(m);
  return d == 1 || d == -1;
}

bool isHermite(const IntMatrix& h) {
  std::size_t lastPivot = 0;
  bool seen = false;
  bool zeroRow = false;
  for (std::size_t i = 0; i < h.rows(); ++i) {
    std::size_t p = 0;
    while (p < h.cols() && h(i, p) == 0) ++p;
    if (p == h.cols()) {
      zeroRow = true;
      continue;
    }
    if (zeroRow) return false;
    if (seen && p <= lastPivot) return false;
    if (h(i, p) <= 0) return false;
    for (std::size_t k = 0; k < i; ++k)
      if (h(k, p) < 0 || h(k, p) >= h(i, p)) return false;
    lastPivot = p;
    seen = true;
  }
  return true;
}

IntVector diagonal(const IntMatrix& d) {
  IntVector out;
  for (std::size_t i = 0; i < std::min(d.rows(), d.cols()); ++i)
    if (d(i, i) != 0) out.push_back(d(i, i));
  return out;
}

bool isDiagonal(const IntMatrix& d) {
  for (std::size_t i = 0; i < d.rows(); ++i)
    for (std::size_t j = 0; j < d.cols(); ++j)
      if (i != j && d(i, j) != 0) return false;
  return true;
}

RatMatrix ratCols(std::initializer_list<std::initializer_list<Rat>> cols) {
  std::vector<RatVector> v;
  for (const auto& c : cols) v.emplace_back(c);
  return RatMatrix::fromColumns(v.front().size(), v);
}

}  // namespace

TEST_CASE("hnf of the identity and of an already reduced matrix") {
  const auto r = hnf(IntMatrix::identity(3));
  CHECK(r.H == IntMatrix::identity(3));
  CHECK(r.U == IntMatrix::identity(3));
  const IntMatrix a{{2, 0}, {0, 3}};
  const auto s = hnf(a);
  CHECK(s.H == a);
  CHECK(s.U == IntMatrix::identity(2));
}

TEST_CASE("hnf pivot is the gcd of the first column") {
  const auto r = hnf(IntMatrix{{4, 6}, {2, 4}});
  CHECK(r.H(0, 0) == 2);
  CHECK(r.U * IntMatrix{{4, 6}, {2, 4}} == r.H);
}

TEST_CASE("hnf properties on random matrices") {
  std::mt19937 rng(11);
  for (int t = 0; t < 200; ++t) {
    const std::size_t rows = 1 + rng() % 4, cols = 1 + rng() % 4;
    const IntMatrix a = randomMatrix(rng, rows, cols, 6);
    const auto r = hnf(a);
    CHECK(r.U * a == r.H);
    CHECK(isUnimodular(r.U));
    CHECK(isHermite(r.H));
  }
}

TEST_CASE("snf examples") {
  const auto r = snf(IntMatrix{{6, 0}, {0, 4}});
  CHECK(r.D == IntMatrix{{2, 0}, {0, 12}});
  const auto id = snf(IntMatrix::identity(3));
  CHECK(id.D == IntMatrix::identity(3));
  CHECK(id.U == IntMatrix::identity(3));
  CHECK(id.V == IntMatrix::identity(3));
  const auto z = snf(IntMatrix(2, 3));
  CHECK(z.D.isZero());
  CHECK(z.U == IntMatrix::identity(2));
  CHECK(z.V == IntMatrix::identity(3));
}

TEST_CASE("snf agrees with determinantal divisors") {
  std::mt19937 rng(12);
  for (int t = 0; t < 300; ++t) {
    const std::size_t rows = 1 + rng() % 4, cols = 1 + rng() % 4;
    const IntMatrix a = randomMatrix(rng, rows, cols, 8);
    const auto r = snf(a);
    CHECK(r.U * a * r.V == r.D);
    CHECK(isUnimodular(r.U));
    CHECK(isUnimodular(r.V));
    CHECK(isDiagonal(r.D));
    const IntVector d = diagonal(r.D);
    for (std::size_t i = 0; i < d.size(); ++i) {
      CHECK(d[i] > 0);
      if (i + 1 < d.size()) CHECK(d[i + 1] % d[i] == 0);
    }
    CHECK(d == oracle::invariantFactors(a));
    CHECK(elementaryDivisors(a) == d);
  }
}

TEST_CASE("snfConstrainedSL keeps the chosen side in SL") {
  const IntMatrix m{{1, 0, 0}, {0, 1, 0}, {0, 0, -1}};
  const auto r = snfConstrainedSL(m, Side::Right);
  CHECK(r.D == IntMatrix::identity(3));
  CHECK(determinant(r.V) == 1);
  CHECK(r.U * m * r.V == r.D);

  const IntMatrix d{{2, 0, 0}, {0, 6, 0}, {0, 0, 6}};
  const auto s = snfConstrainedSL(d, Side::Right);
  CHECK(s.D == d);
  CHECK(determinant(s.V) == 1);

  const auto id = snfConstrainedSL(IntMatrix::identity(3), Side::Left);
  CHECK(id.D == IntMatrix::identity(3));
  CHECK(determinant(id.U) == 1);

  std::mt19937 rng(13);
  int tested = 0;
  while (tested < 100) {
    const IntMatrix a = randomMatrix(rng, 3, 3, 5);
    if (determinant(a) == 0) continue;
    ++tested;
    for (Side side : {Side::Left, Side::Right}) {
      const auto t = snfConstrainedSL(a, side);
      CHECK(t.U * a * t.V == t.D);
      CHECK(determinant(side == Side::Right ? t.V : t.U) == 1);
      CHECK(diagonal(t.D) == oracle::invariantFactors(a));
    }
  }
  CHECK_THROWS_AS(snfConstrainedSL(IntMatrix(3, 3), Side::Right), Error);
}

TEST_CASE("determinant and rank agree with independent computations") {
  std::mt19937 rng(14);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 1 + rng() % 5;
    const IntMatrix a = randomMatrix(rng, n, n, 4);
    CHECK(determinant(a) == oracle::cofactorDet(a));
    CHECK(determinant(toRat(a)) == Rat(oracle::cofactorDet(a)));
    const IntMatrix b = randomMatrix(rng, 1 + rng() % 4, 1 + rng() % 4, 2);
    CHECK(rank(b) == oracle::oracleRank(b));
    CHECK(rank(toRat(b)) == oracle::rationalRank(toRat(b)));
  }
}

TEST_CASE("arbitrary precision survives large entries") {
  const Int big("123456789012345678901234567890");
  const IntMatrix a{{big, 1}, {0, big}};
  CHECK(determinant(a) == big * big);
  CHECK(elementaryDivisors(a) == IntVector{1, big * big});
}

TEST_CASE("nullspace, solve, inverse") {
  std::mt19937 rng(15);
  for (int t = 0; t < 100; ++t) {
    const RatMatrix a = toRat(randomMatrix(rng, 1 + rng() % 4, 1 + rng() % 5, 3));
    const RatMatrix n = nullspace(a);
    CHECK(n.cols() + oracle::rationalRank(a) == a.cols());
    CHECK((a * n).isZero());
    RatVector x(a.cols());
    for (auto& e : x) e = frac(static_cast<long>(rng() % 7) - 3, 1 + static_cast<long>(rng() % 3));
    const RatVector b = a * x;
    const auto s = solve(a, b);
    REQUIRE(s);
    CHECK(a * *s == b);
  }
  const RatMatrix sq = toRat(IntMatrix{{2, 1}, {1, 1}});
  CHECK(*inverse(sq) * sq == RatMatrix::identity(2));
  CHECK_FALSE(inverse(toRat(IntMatrix{{1, 2}, {2, 4}})));
  CHECK_FALSE(solve(toRat(IntMatrix{{1, 1}, {1, 1}}), RatVector{1, 2}));
  CHECK(inverseUnimodular(IntMatrix{{2, 1}, {1, 1}}) == IntMatrix{{1, -1}, {-1, 2}});
  CHECK_THROWS_AS(inverseUnimodular(IntMatrix{{2, 0}, {0, 1}}), Error);
}

TEST_CASE("integer kernel is a saturated basis of the kernel") {
  std::mt19937 rng(16);
  for (int t = 0; t < 150; ++t) {
    const IntMatrix a = randomMatrix(rng, 1 + rng() % 3, 1 + rng() % 5, 4);
    const IntMatrix k = integerKernel(a);
    CHECK(k.cols() + oracle::oracleRank(a) == a.cols());
    CHECK((a * k).isZero());
    // Saturated: all invariant factors equal 1.
    for (const auto& f : oracle::invariantFactors(k)) CHECK(f == 1);
  }
}

TEST_CASE("lattice membership examples") {
  const Lattice z2 = Lattice::standard(2);
  CHECK(latticeMembership(z2, {1, 1}) == IntVector{1, 1});
  const Lattice sub(ratCols({{2, 0}, {0, 1}}));
  CHECK_FALSE(latticeMembership(sub, {1, 0}));
  const Lattice half(ratCols({{Rat(1, 2), Rat(1, 2)}, {0, 1}}));
  CHECK(latticeMembership(half, {1, 0}) == IntVector{2, -1});
  CHECK_FALSE(latticeMembership(z2, {Rat(1, 2), 0}));
}

TEST_CASE("lattice intersections with subspaces") {
  const Lattice z2 = Lattice::standard(2);
  CHECK(sameLattice(latticeIntersectSubspace(z2, ratCols({{1, 0}})), Lattice(ratCols({{1, 0}}))));
  CHECK(sameLattice(latticeIntersectSubspace(z2, ratCols({{1, 1}})), Lattice(ratCols({{1, 1}}))));
  // The combinations of (2,0) and (1,1) on the x-axis: a(2,0) + b(1,1) with b = 0.
  const Lattice l(ratCols({{2, 0}, {1, 1}}));
  const Lattice cut = latticeIntersectSubspace(l, ratCols({{1, 0}}));
  CHECK(sameLattice(cut, Lattice(ratCols({{2, 0}}))));
  for (const auto& v : oracle::enumerateLattice(l.basis(), 5))
    if (v[1] == 0) CHECK(latticeMembership(cut, v));
}

TEST_CASE("split complements") {
  const Lattice z2 = Lattice::standard(2);
  const Lattice e1(ratCols({{1, 0}}));
  const Lattice c = splitComplement(z2, e1);
  CHECK(c.rank() == 1);
  CHECK(sameLattice(directSum(e1, c), z2));
  const Lattice diag(ratCols({{1, 1}}));
  const Lattice c2 = splitComplement(z2, diag);
  const RatMatrix both = directSum(diag, c2).basis();
  const Rat det = determinant(both);
  CHECK((det == 1 || det == -1));
  CHECK(splitComplement(z2, z2).rank() == 0);
  CHECK_THROWS_AS(splitComplement(z2, Lattice(ratCols({{2, 0}}))), Error);
}

TEST_CASE("lattice operations agree with bounded enumeration") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> num(-3, 3), den(1, 3);
  int done = 0;
  while (done < 100) {
    const std::size_t n = 2 + rng() % 2;
    RatMatrix b(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) b(i, j) = frac(num(rng), den(rng));
    if (oracle::rationalRank(b) != n) continue;
    ++done;
    const Lattice l(b);
    RatMatrix s(n, 1);
    for (std::size_t i = 0; i < n; ++i) s(i, 0) = num(rng);
    if (oracle::rationalRank(s) == 0) s(0, 0) = 1;
    const Lattice cut = latticeIntersectSubspace(l, s);
    for (std::size_t j = 0; j < cut.rank(); ++j) {
      CHECK(latticeMembership(l, cut.vector(j)));
      CHECK(oracle::inSpan(s, cut.vector(j)));
    }
    for (const auto& v : oracle::enumerateLattice(b, 3)) {
      CHECK(latticeMembership(l, v));
      if (oracle::inSpan(s, v)) CHECK(latticeMembership(cut, v));
    }
    RatVector probe(n);
    for (auto& x : probe) x = frac(num(rng), den(rng));
    const auto coords = latticeMembership(l, probe);
    if (coords) CHECK(b * toRat(*coords) == probe);
  }
}
