#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "wsp/alt2.hpp"
#include "wsp/cli.hpp"
#include "wsp/realize.hpp"
#include "wsp/wpp.hpp"

namespace wsp {

namespace {

struct Verdict {
  bool ok;
  std::string detail;
};

Verdict expect(bool ok, const std::string& detail) { return {ok, detail}; }

template <class T>
std::string show(const T& x) {
  std::ostringstream s;
  s << x;
  return s.str();
}

std::string show(const IntMatrix& m) {
  std::ostringstream s;
  s << "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    s << (i ? ",[" : "[");
    for (std::size_t k = 0; k < m.cols(); ++k) s << (k ? "," : "") << m(i, k);
    s << "]";
  }
  s << "]";
  return s.str();
}

IntMatrix int3(std::initializer_list<std::initializer_list<long>> rows) {
  IntMatrix m(3, 3);
  std::size_t i = 0;
  for (const auto& r : rows) {
    std::size_t k = 0;
    for (long x : r) m(i, k++) = Int(x);
    ++i;
  }
  return m;
}

// Coefficient of target basis element `t` in a * b.
Rat productCoefficient(const StructRing& r, std::size_t a, std::size_t b, std::size_t t) {
  return r.mult[a][b][t];
}

// True when b_a * b_b is exactly `coeff` times b_t.
bool productIs(const StructRing& r, std::size_t a, std::size_t b, std::size_t t, const Rat& coeff) {
  const RatVector& p = r.mult[a][b];
  for (std::size_t k = 0; k < p.size(); ++k)
    if (p[k] != (k == t ? coeff : Rat(0))) return false;
  return true;
}

// a1 a2 a3 expressed as a multiple of a123; nullopt when not a multiple.
std::optional<Rat> tripleProduct(const StructRing& r, const Degrees& d) {
  const RatVector p = r.multiply(r.multiply(r.basisVector(weightedIndex(0b001, d)),
                                            r.basisVector(weightedIndex(0b010, d))),
                                 r.basisVector(weightedIndex(0b100, d)));
  const std::size_t top = weightedIndex(kFullSet, d);
  for (std::size_t k = 0; k < p.size(); ++k)
    if (k != top && p[k] != 0) return std::nullopt;
  return p[top];
}

// Column of f_n at a source label, as {target label: coefficient}.
std::map<std::string, Int> imageOf(const ChainMap& f, int n, const std::string& label) {
  const std::size_t j = f.source.indexOf(n, label);
  const IntMatrix m = f.at(n);
  std::map<std::string, Int> out;
  for (std::size_t i = 0; i < m.rows(); ++i)
    if (m(i, j) != 0) out[f.target.labels[static_cast<std::size_t>(n)][i]] = m(i, j);
  return out;
}

Verdict etaExample(const std::string& word, const std::string& target, const Int& expected) {
  const Degrees d{2, 3, 4};
  const CoefficientSequence c(2, 3, 5, 30);
  const ChainMap eta = buildEtaChainMap(d, c);
  const Word w{word[0], word[1], word[2]};
  const int n = wordDegree(w, d);
  const auto image = imageOf(eta, n, wordLabel(w));
  const bool ok = image.size() == 1 && image.begin()->first == target &&
                  image.begin()->second == expected;
  std::string got;
  for (const auto& [l, x] : image) got += show(x) + "*" + l + " ";
  return expect(ok, wordLabel(w) + " -> " + got);
}

bool isZeroVector(const IntVector& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

IntVector applyMatrix(const IntMatrix& m, const IntVector& v) {
  IntVector out(m.rows(), Int(0));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t k = 0; k < m.cols(); ++k) out[i] += m(i, k) * v[k];
  return out;
}

}  // namespace

OrderInput nonWeightedExampleOrder() {
  OrderInput in;
  in.d = {2, 2, 3};
  in.names = {"x2", "y2", "z3"};
  auto gen = [](std::initializer_list<std::pair<Subset, Rat>> terms) {
    RatVector v(8, Rat(0));
    for (const auto& [s, x] : terms) v[s] = x;
    return v;
  };
  const Rat half(1, 2);
  in.gens = {gen({{0b000, 1}}),
             gen({{0b001, 1}}),
             gen({{0b010, 1}}),
             gen({{0b100, 1}}),
             gen({{0b011, 1}}),
             gen({{0b101, 1}}),
             gen({{0b101, half}, {0b110, half}}),
             gen({{0b111, half}})};
  return in;
}

std::vector<SelftestCase> runSelftest() {
  std::vector<std::pair<std::string, std::function<Verdict()>>> cases;
  auto add = [&](std::string name, std::function<Verdict()> f) {
    cases.emplace_back(std::move(name), std::move(f));
  };

  add("sign a1*a2 with d=(3,3,3) is +1", [] {
    const int s = signOfProduct(0b001, 0b010, {3, 3, 3});
    return expect(s == 1, "sign " + show(s));
  });
  add("sign a2*a1 with d=(3,3,3) is -1", [] {
    const int s = signOfProduct(0b010, 0b001, {3, 3, 3});
    return expect(s == -1, "sign " + show(s));
  });
  add("sign a2*a1 with d=(2,3,5) is +1", [] {
    const int s = signOfProduct(0b010, 0b001, {2, 3, 5});
    return expect(s == 1, "sign " + show(s));
  });
  add("A(c,d) with c12=2, c123=2, d=(3,3,3): a1a2 = 2a12, a12a3 = a123", [] {
    const Degrees d{3, 3, 3};
    const StructRing r = buildWeightedRing(CoefficientSequence(2, 1, 1, 2), d);
    const bool ok = productIs(r, weightedIndex(0b001, d), weightedIndex(0b010, d),
                              weightedIndex(0b011, d), 2) &&
                    productIs(r, weightedIndex(0b011, d), weightedIndex(0b100, d),
                              weightedIndex(kFullSet, d), 1);
    return expect(ok, "a1a2 coefficient " +
                          show(productCoefficient(r, weightedIndex(0b001, d),
                                                  weightedIndex(0b010, d),
                                                  weightedIndex(0b011, d))));
  });
  add("edge {1,2} pushout adds z12, z12.x3 with dz12 = c12(x1.y2 + (-1)^d1 y1.x2)", [] {
    Verdict v{true, ""};
    for (const Degrees& d : {Degrees{2, 3, 4}, Degrees{3, 3, 2}}) {
      const CoefficientSequence c(6, 1, 1, 6);
      const auto [i, j] = edgeSquare(0b011, d, c);
      const PushoutResult po = pushoutComplex(i, j);
      std::size_t added = 0;
      for (int n = 0; n <= po.complex.top(); ++n)
        added += po.complex.rank(n) - j.target.rank(n);
      const int n = d[0] + d[1];
      const std::size_t z = po.complex.indexOf(n, "z12");
      po.complex.indexOf(n + d[2] - 1, "z12.x3");
      const IntMatrix dn = po.complex.d(n);
      std::map<std::string, Int> bd;
      for (std::size_t r = 0; r < dn.rows(); ++r)
        if (dn(r, z) != 0) bd[po.complex.labels[static_cast<std::size_t>(n - 1)][r]] = dn(r, z);
      const Int sign = d[0] % 2 == 0 ? 1 : -1;
      const std::map<std::string, Int> want{{"x1.y2", 6}, {"y1.x2", 6 * sign}};
      if (added != 2 || bd != want) {
        v.ok = false;
        v.detail += "failed for d=(" + show(d[0]) + "," + show(d[1]) + "," + show(d[2]) + ") ";
      }
    }
    if (v.ok) v.detail = "two generators, boundary matches for d1 even and odd";
    return v;
  });
  add("eta on top homology is c12 c23 c13 / lcm", [] {
    const Degrees d{2, 3, 4};
    const CoefficientSequence c(2, 2, 3, 6);
    const ChainMap eta = buildEtaChainMap(d, c);
    const TopGenerators g = topGenerators(d, c);
    const IntMatrix m = inducedOnHomology(eta, g.degree);
    const bool ok = m.rows() == 1 && m.cols() == 1 && m(0, 0) == 2;
    return expect(ok, "H_" + show(g.degree) + "(eta) = " + show(m));
  });
  add("power sequence for c12=6: c^{12}=(6,1,1), c^{123}_1=6", [] {
    const PowerSequence3 p = powerSequenceFromCoefficients(CoefficientSequence(6, 1, 1, 6));
    const bool ok = p.c[0b011] == std::array<Int, 3>{6, 1, 1} && p.c[kFullSet][0] == 6;
    return expect(ok, "c^{12}_1=" + show(p.c[0b011][0]) + ", c^{123}_1=" + show(p.c[kFullSet][0]));
  });
  add("c = 1 boundary complex has the homology of a sphere of dimension d123-1", [] {
    const Degrees d{2, 3, 4};
    const HomologyResult h = homology(buildBoundaryComplex(d, CoefficientSequence()));
    bool ok = true;
    for (std::size_t n = 0; n < h.degrees.size(); ++n) {
      const bool sphere = n == 0 || n == 8;
      ok = ok && h.degrees[n].torsion.empty() && h.degrees[n].freeRank == (sphere ? 1u : 0u);
    }
    return expect(ok, "checked degrees 0.." + show(h.degrees.size() - 1));
  });
  add("d=(2,2,2), c12=2: H3 contains Z/2 and H5 = Z", [] {
    const HomologyResult h = homology(buildBoundaryComplex({2, 2, 2}, CoefficientSequence(2, 1, 1, 2)));
    const auto& h3 = h.degrees.at(3);
    const auto& h5 = h.degrees.at(5);
    const bool has2 = std::find(h3.torsion.begin(), h3.torsion.end(), Int(2)) != h3.torsion.end();
    const bool ok = has2 && h5.freeRank == 1 && h5.torsion.empty();
    return expect(ok, "H3 torsion count " + show(h3.torsion.size()) + ", H5 rank " + show(h5.freeRank));
  });
  add("eta(y1.y2.x3) = c13 c23 z12.x3", [] { return etaExample("yyx", "z12.x3", 3 * 5); });
  add("eta(y1.x2.y3) = c12 c23 z13~x2", [] { return etaExample("yxy", "z13~x2", 2 * 5); });
  add("eta(x1.y2.y3) = c12 c13 x1.z23", [] { return etaExample("xyy", "x1.z23", 2 * 3); });
  add("u is a cycle in the unweighted complex", [] {
    const Degrees d{3, 2, 4};
    const ChainComplex cx = buildBoundaryComplex(d, CoefficientSequence());
    const TopGenerators g = topGenerators(d, CoefficientSequence(2, 3, 4, 12));
    return expect(isZeroVector(applyMatrix(cx.d(g.degree), g.u)), "degree " + show(g.degree));
  });
  add("v is a cycle in the weighted complex", [] {
    const Degrees d{3, 2, 4};
    const CoefficientSequence c(2, 3, 4, 12);
    const ChainComplex cx = buildBoundaryComplex(d, c);
    const TopGenerators g = topGenerators(d, c);
    return expect(isZeroVector(applyMatrix(cx.d(g.degree), g.v)), "degree " + show(g.degree));
  });
  add("eta(u) = (c12 c23 c13 / lcm) v", [] {
    const Degrees d{3, 2, 4};
    const CoefficientSequence c(2, 3, 4, 12);
    const ChainMap eta = buildEtaChainMap(d, c);
    const TopGenerators g = topGenerators(d, c);
    const IntMatrix m = inducedOnFreeHomology(eta, g.degree, {g.u}, {g.v});
    // 2*3*4 / lcm(2,3,4) = 2
    const bool ok = m.rows() == 1 && m.cols() == 1 && m(0, 0) == 2;
    return expect(ok, "[u] -> " + show(m) + "[v]");
  });
  add("full-simplex product ring, c12=2: a1a2 = 2a12, a1a2a3 = 2a123", [] {
    const Degrees d{2, 3, 4};
    const StructRing r = ringOfWeightedProduct(CoefficientSequence(2, 1, 1, 2), d);
    const auto t = tripleProduct(r, d);
    const bool ok = productIs(r, weightedIndex(0b001, d), weightedIndex(0b010, d),
                              weightedIndex(0b011, d), 2) &&
                    t && *t == 2;
    return expect(ok, "a1a2a3 = " + (t ? show(*t) : std::string("?")) + " a123");
  });
  add("full-simplex product ring, c12=2, c23=3: a1a2a3 = 6a123", [] {
    const Degrees d{2, 3, 4};
    const auto t = tripleProduct(ringOfWeightedProduct(CoefficientSequence(2, 1, 3, 6), d), d);
    return expect(t && *t == 6, "a1a2a3 = " + (t ? show(*t) : std::string("?")) + " a123");
  });
  add("X(c,d) with pairs 1 and c123=5: a1a2a3 = 5a123, pairwise unweighted", [] {
    const Degrees d{2, 3, 4};
    const CoefficientSequence c(1, 1, 1, 5);
    const RealizedRing r = realizeRing(c, d);
    const auto t = tripleProduct(r.ring, d);
    bool pairs = true;
    for (Subset s : {0b011u, 0b101u, 0b110u}) {
      const Subset lo = s & (~s + 1);
      const Rat p = productCoefficient(r.ring, weightedIndex(lo, d), weightedIndex(s ^ lo, d),
                                       weightedIndex(s, d));
      pairs = pairs && (p == 1 || p == -1);
    }
    const bool same = r.ring.mult == buildWeightedRing(c, d).mult;
    return expect(t && *t == 5 && pairs && same && r.witnessVerified,
                  "a1a2a3 = " + (t ? show(*t) : std::string("?")) + " a123");
  });
  add("top-degree chase yields c123 independently of k", [] {
    const Degrees d{2, 3, 4};
    std::string detail;
    bool ok = true;
    for (const auto& c : {CoefficientSequence(2, 1, 1, 2), CoefficientSequence(2, 2, 3, 12),
                          CoefficientSequence(1, 1, 1, 5), CoefficientSequence(4, 6, 2, 48)}) {
      const LesReport rep = lesTopDegreeCheck(c, d);
      const bool good = rep.kIndependent && rep.productInX.kExponent == 0 &&
                        rep.productInX.coeff == Rat(c.c123());
      ok = ok && good;
      detail += show(rep.productInX.coeff) + " ";
    }
    return expect(ok, "constants " + detail);
  });
  add("A(c,d) embedded by a_s = x_s / c_s is an order", [] {
    const Degrees d{3, 2, 3};
    const CoefficientSequence c(2, 3, 4, 24);
    const VerifiedOrder vo = verifyOrder(weightedOrder(c, d));
    return expect(vo.ring.size() == 8, "rank " + show(vo.ring.size()));
  });
  add("non-weighted example: L(2) has degrees {4,5,5}", [] {
    const Decomposition dec = decompose(nonWeightedExampleOrder());
    std::string got;
    for (int x : dec.l2Degrees) got += show(x) + " ";
    return expect(dec.l2Degrees == std::vector<int>{4, 5, 5}, "degrees " + got);
  });
  add("non-weighted example is certified, family {+-x2, +-y2} fails at degree 5", [] {
    const OrderInput in = nonWeightedExampleOrder();
    const ClassificationResult r = classifyOrder(in);
    bool family = false;
    for (const auto& f : r.report.families) {
      std::vector<std::string> names;
      for (const auto& v : f.candidates) names.push_back(formatElement(v, in.names));
      if (names == std::vector<std::string>{"x2", "y2"} && f.pinned) family = true;
    }
    bool allAtFive = !r.report.trials.empty();
    for (const auto& t : r.report.trials) allAtFive = allAtFive && t.failingDegree == 5;
    const bool ok = r.outcome == Outcome::NotWeightedCertified && family && allAtFive &&
                    !r.report.capped;
    return expect(ok, std::string(toString(r.outcome)) + " via " + r.method + ", " +
                          show(r.report.trials.size()) + " trials");
  });
  add("alt2 of [[1,-a,0],[0,1,0],[0,0,1]] is the reference [[1,0,a],[0,1,0],[0,0,1]]", [] {
    const IntMatrix got = alt2(int3({{1, -3, 0}, {0, 1, 0}, {0, 0, 1}}));
    const IntMatrix want = int3({{1, 0, 3}, {0, 1, 0}, {0, 0, 1}});
    return expect(got == want, "a=3 gives " + show(got));
  });
  add("det alt2(g) = det(g)^2 on random integer matrices", [] {
    std::mt19937 rng(20261015);
    std::uniform_int_distribution<int> entry(-5, 5);
    for (int trial = 0; trial < 200; ++trial) {
      IntMatrix g(3, 3);
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t k = 0; k < 3; ++k) g(i, k) = entry(rng);
      const Int dg = determinant(g);
      if (determinant(alt2(g)) != dg * dg) return expect(false, "fails on " + show(g));
    }
    return expect(true, "200 matrices");
  });
  add("alt2Section round trip on [[1,0,a],[0,1,0],[0,0,1]]", [] {
    const IntMatrix m = int3({{1, 0, 3}, {0, 1, 0}, {0, 0, 1}});
    const IntMatrix y = alt2Section(m);
    return expect(alt2(y) == m, "Y = " + show(y));
  });
  add("alt2 preimage of [[1,0,a],[0,1,0],[0,0,1]] is [[1,-a,0],[0,1,0],[0,0,1]]", [] {
    const IntMatrix y = int3({{1, -3, 0}, {0, 1, 0}, {0, 0, 1}});
    const IntMatrix m = int3({{1, 0, 3}, {0, 1, 0}, {0, 0, 1}});
    return expect(alt2(y) == m, "alt2 of the reference Y is " + show(alt2(y)));
  });
  add("monomial order classifies as weighted with c = 1", [] {
    const Degrees d{2, 3, 5};
    const ClassificationResult r = classifyOrder(weightedOrder(CoefficientSequence(), d));
    const bool ok = r.outcome == Outcome::Weighted && r.c && *r.c == CoefficientSequence();
    return expect(ok, std::string(toString(r.outcome)) + " via " + r.method);
  });

  std::vector<SelftestCase> out;
  for (auto& [name, f] : cases) {
    SelftestCase sc{name, false, ""};
    try {
      const Verdict v = f();
      sc.ok = v.ok;
      sc.detail = v.detail;
    } catch (const std::exception& e) {
      sc.detail = std::string("threw ") + e.what();
    }
    out.push_back(std::move(sc));
  }
  return out;
}

}  // namespace wsp
