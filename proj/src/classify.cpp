#include "wsp/classify.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "wsp/alt2.hpp"

namespace wsp {

namespace {

using Basis3 = std::array<RatVector, 3>;

constexpr std::size_t kMaxTested = 100000;
constexpr std::size_t kMaxConsidered = 2000000;
constexpr std::size_t kMaxReportedTrials = 64;

RatVector unitVector(Subset s) {
  RatVector v(8, Rat(0));
  v[s] = 1;
  return v;
}

bool isZero(const RatVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x == 0; });
}

RatVector scale(const RatVector& v, const Rat& s) {
  RatVector out = v;
  for (auto& x : out) x *= s;
  return out;
}

RatVector add(const RatVector& a, const RatVector& b) {
  RatVector out = a;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
  return out;
}

// Span of the monomials of degree t with at least minSize factors.
RatMatrix monomialSpan(const Degrees& d, int t, int minSize) {
  std::vector<RatVector> cols;
  for (Subset s = 0; s < 8; ++s)
    if (subsetDegree(s, d) == t && subsetSize(s) >= minSize) cols.push_back(unitVector(s));
  return RatMatrix::fromColumns(8, cols);
}

Lattice columnsLattice(const std::vector<RatVector>& cols) {
  return Lattice(RatMatrix::fromColumns(8, cols));
}

// Homogeneous pieces of a verified order.
class Pieces {
 public:
  explicit Pieces(const VerifiedOrder& vo) {
    std::map<int, std::vector<RatVector>> cols;
    for (std::size_t k = 0; k < vo.input.gens.size(); ++k)
      cols[vo.degrees[k]].push_back(vo.input.gens[k]);
    for (auto& [t, c] : cols) pieces_.emplace(t, columnsLattice(c));
  }
  const Lattice& at(int t) const {
    auto it = pieces_.find(t);
    if (it == pieces_.end())
      throw Error(ErrorKind::Internal, "no piece in degree " + std::to_string(t));
    return it->second;
  }

 private:
  std::map<int, Lattice> pieces_;
};

// Primitive generator g of the lattice meeting the line through v, with
// v = lambda g and lambda > 0.
std::pair<RatVector, Rat> primitiveOnLine(const Lattice& piece, const RatVector& v) {
  const Lattice line = latticeIntersectSubspace(piece, RatMatrix::fromColumns(8, {v}));
  if (line.rank() != 1) throw Error(ErrorKind::Internal, "line meets the lattice trivially");
  RatVector g = line.vector(0);
  std::size_t k = 0;
  while (v[k] == 0) ++k;
  Rat lambda = v[k] / g[k];
  if (lambda < 0) {
    g = scale(g, Rat(-1));
    lambda = -lambda;
  }
  return {g, lambda};
}

RatVector orderedProduct(const Basis3& y, Subset s, const Degrees& d) {
  RatVector out = unitVector(0);
  for (int i = 0; i < 3; ++i)
    if (s & (1u << i)) out = multiplyInR(out, y[static_cast<std::size_t>(i)], d);
  return out;
}

// Integer coordinates of vectors in a lattice basis, one column each.
std::optional<IntMatrix> coordinates(const Lattice& l, const std::vector<RatVector>& vs) {
  IntMatrix m(l.rank(), vs.size());
  for (std::size_t j = 0; j < vs.size(); ++j) {
    auto c = latticeMembership(l, vs[j]);
    if (!c) return std::nullopt;
    for (std::size_t i = 0; i < l.rank(); ++i) m(i, j) = (*c)[i];
  }
  return m;
}

bool isBasisOf(const Lattice& l, const std::vector<RatVector>& vs) {
  if (vs.size() != l.rank()) return false;
  auto m = coordinates(l, vs);
  return m && abs(determinant(*m)) == 1;
}

struct TestOutcome {
  bool ok = false;
  std::optional<int> failingDegree;
  std::string reason;
  std::optional<CoefficientSequence> c;
  std::optional<RingMapWitness> witness;
};

// Whether y1, y2, y3 exhibit the order as A(c, d): every piece A_t must have
// a basis of primitive multiples of the monomials b_sigma in the y's.
TestOutcome testBasis(const VerifiedOrder& vo, const Pieces& pieces, const Basis3& y) {
  const Degrees& d = vo.input.d;
  TestOutcome out;
  for (int i = 0; i < 3; ++i) {
    const auto& yi = y[static_cast<std::size_t>(i)];
    if (homogeneousDegree(yi, d) != d[static_cast<std::size_t>(i)]) {
      out.reason = "y" + std::to_string(i + 1) + " has the wrong degree";
      return out;
    }
    if (!isZero(multiplyInR(yi, yi, d))) {
      out.reason = "y" + std::to_string(i + 1) + " does not square to zero";
      return out;
    }
  }
  for (int t : std::set<int>(d.begin(), d.end())) {
    const Lattice& piece = pieces.at(t);
    std::vector<RatVector> cols;
    for (int i = 0; i < 3; ++i)
      if (d[static_cast<std::size_t>(i)] == t) cols.push_back(y[static_cast<std::size_t>(i)]);
    const Lattice n2 = latticeIntersectSubspace(piece, monomialSpan(d, t, 2));
    for (std::size_t j = 0; j < n2.rank(); ++j) cols.push_back(n2.vector(j));
    if (!isBasisOf(piece, cols)) {
      out.reason = "generators do not span A modulo N^2 in degree " + std::to_string(t);
      return out;
    }
  }

  std::array<RatVector, 8> g;
  std::array<Int, 8> c;
  std::map<int, std::vector<Subset>> byDegree;
  for (Subset s = 0; s < 8; ++s) byDegree[subsetDegree(s, d)].push_back(s);
  for (const auto& [t, subsets] : byDegree) {
    std::vector<RatVector> gens;
    for (Subset s : subsets) {
      const RatVector b = orderedProduct(y, s, d);
      if (isZero(b)) {
        out.failingDegree = t;
        out.reason = "monomial vanishes";
        return out;
      }
      auto [gs, lambda] = primitiveOnLine(pieces.at(t), b);
      if (lambda.get_den() != 1)
        throw Error(ErrorKind::Internal, "closed order produced a non-integral multiple");
      g[s] = gs;
      c[s] = lambda.get_num();
      gens.push_back(gs);
    }
    if (!isBasisOf(pieces.at(t), gens)) {
      out.failingDegree = t;
      out.reason = "no basis of fractional monomials in degree " + std::to_string(t);
      return out;
    }
  }
  for (Subset s = 0; s < 8; ++s)
    if (subsetSize(static_cast<Subset>(s)) <= 1 && c[s] != 1) {
      out.reason = "generator is not primitive";
      return out;
    }
  try {
    out.c = CoefficientSequence(c[0b011], c[0b101], c[0b110], c[0b111]);
  } catch (const Error& e) {
    out.reason = e.what();
    return out;
  }
  const StructRing weighted = buildWeightedRing(*out.c, d);
  RatMatrix w(vo.ring.size(), weighted.size());
  for (Subset s = 0; s < 8; ++s) {
    auto coords = latticeMembership(vo.lattice, g[s]);
    if (!coords) throw Error(ErrorKind::Internal, "fractional monomial left the order");
    const std::size_t col = weightedIndex(s, d);
    for (std::size_t i = 0; i < coords->size(); ++i) w(i, col) = Rat((*coords)[i]);
  }
  out.witness = RingMapWitness{w};
  if (!checkRingMap(*out.witness, weighted, vo.ring)) {
    out.reason = "witness is not a ring isomorphism";
    out.witness.reset();
    return out;
  }
  out.ok = true;
  return out;
}

// L(1) vectors assigned to positions: equal degrees keep basis order.
Basis3 assignL1(const Decomposition& dec, const Degrees& d) {
  std::array<int, 3> positions{0, 1, 2};
  std::stable_sort(positions.begin(), positions.end(),
                   [&](int a, int b) { return d[static_cast<std::size_t>(a)] < d[static_cast<std::size_t>(b)]; });
  Basis3 y;
  for (std::size_t k = 0; k < 3; ++k) y[static_cast<std::size_t>(positions[k])] = dec.l1.vector(k);
  return y;
}

// For even d_k = d_i + d_j, the shift of y_k by N^2 that makes it square to
// zero; nullopt when no integral shift exists.
std::optional<RatVector> squareZeroLift(const RatVector& yk, int k, const Degrees& d,
                                        const Pieces& pieces) {
  const int dk = d[static_cast<std::size_t>(k)];
  const Subset pair = kFullSet & ~(1u << k);
  if (dk % 2 != 0 || subsetDegree(pair, d) != dk) return yk;
  const Lattice n2 = latticeIntersectSubspace(pieces.at(dk), monomialSpan(d, dk, 2));
  if (n2.rank() != 1) throw Error(ErrorKind::Internal, "unexpected rank of N^2 piece");
  const RatVector w = n2.vector(0);
  const Rat t = -yk[pair] / w[pair];
  if (t.get_den() != 1) return std::nullopt;
  return add(yk, scale(w, t));
}

bool hasRepeatedEven(const Degrees& d) {
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (d[static_cast<std::size_t>(i)] == d[static_cast<std::size_t>(j)] &&
          d[static_cast<std::size_t>(i)] % 2 == 0)
        return true;
  return false;
}

// Primitive integer vectors of height at most h, up to sign, ordered by
// (max-abs, L1 norm, lexicographic).
std::vector<IntVector> primitiveVectors(std::size_t dim, int h) {
  std::vector<IntVector> out;
  IntVector v(dim, Int(-h));
  while (true) {
    std::size_t first = 0;
    while (first < dim && v[first] == 0) ++first;
    if (first < dim && v[first] > 0) {
      Int g = 0;
      for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
      if (g == 1) out.push_back(v);
    }
    std::size_t i = dim;
    while (i > 0 && v[i - 1] == h) v[--i] = -h;
    if (i == 0) break;
    ++v[i - 1];
  }
  auto key = [](const IntVector& v) {
    Int mx = 0, l1 = 0;
    for (const auto& x : v) {
      mx = std::max(mx, Int(abs(x)));
      l1 += abs(x);
    }
    return std::pair{mx, l1};
  };
  std::stable_sort(out.begin(), out.end(),
                   [&](const IntVector& a, const IntVector& b) { return key(a) < key(b); });
  return out;
}

// Calls f on each k-subset of {0..n-1} in lexicographic order until f
// returns false.
template <class F>
bool forEachCombination(std::size_t n, std::size_t k, F&& f) {
  if (k > n) return true;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    if (!f(idx)) return false;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return true;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

ClassificationResult weightedResult(const std::string& method, const Basis3& y,
                                    TestOutcome&& t) {
  ClassificationResult r;
  r.outcome = Outcome::Weighted;
  r.method = method;
  r.c = std::move(t.c);
  r.witness = std::move(t.witness);
  r.basis.assign(y.begin(), y.end());
  return r;
}

}  // namespace

std::string_view toString(Outcome o) {
  switch (o) {
    case Outcome::Weighted: return "Weighted";
    case Outcome::NotWeightedCertified: return "NotWeightedCertified";
    case Outcome::Inconclusive: return "Inconclusive";
  }
  return "Unknown";
}

RatVector multiplyInR(const RatVector& a, const RatVector& b, const Degrees& d) {
  if (a.size() != 8 || b.size() != 8)
    throw Error(ErrorKind::DimensionMismatch, "elements of R have 8 coordinates");
  RatVector out(8, Rat(0));
  for (Subset s = 0; s < 8; ++s) {
    if (a[s] == 0) continue;
    for (Subset t = 0; t < 8; ++t) {
      if (b[t] == 0 || (s & t)) continue;
      out[s | t] += signOfProduct(s, t, d) * a[s] * b[t];
    }
  }
  return out;
}

std::optional<int> homogeneousDegree(const RatVector& v, const Degrees& d) {
  std::optional<int> deg;
  for (Subset s = 0; s < v.size(); ++s) {
    if (v[s] == 0) continue;
    const int t = subsetDegree(s, d);
    if (deg && *deg != t) return std::nullopt;
    deg = t;
  }
  return deg;
}

std::string formatElement(const RatVector& v, const std::array<std::string, 3>& names) {
  std::string out;
  for (Subset s = 0; s < v.size(); ++s) {
    if (v[s] == 0) continue;
    std::string mono;
    for (int i = 0; i < 3; ++i)
      if (s & (1u << i)) mono += names[static_cast<std::size_t>(i)];
    Rat coeff = v[s];
    if (!out.empty()) {
      out += coeff < 0 ? " - " : " + ";
      coeff = abs(coeff);
    } else if (coeff < 0 && !mono.empty() && coeff == -1) {
      out += "-";
      coeff = 1;
    }
    if (mono.empty())
      out += coeff.get_str();
    else if (coeff == 1)
      out += mono;
    else
      out += coeff.get_str() + "*" + mono;
  }
  return out.empty() ? "0" : out;
}

VerifiedOrder verifyOrder(const OrderInput& in) {
  const Degrees& d = in.d;
  for (int x : d)
    if (x < 1) throw Error(ErrorKind::InvalidInput, "degrees must be positive");
  if (in.gens.size() != 8)
    throw Error(ErrorKind::WrongRank, "an order in R needs 8 generators, got " +
                                             std::to_string(in.gens.size()));
  VerifiedOrder vo;
  vo.input = in;
  std::map<int, int> expected, actual;
  for (Subset s = 0; s < 8; ++s) ++expected[subsetDegree(s, d)];
  for (std::size_t k = 0; k < 8; ++k) {
    if (in.gens[k].size() != 8)
      throw Error(ErrorKind::InvalidInput, "generator " + std::to_string(k) + " needs 8 coordinates");
    auto t = homogeneousDegree(in.gens[k], d);
    if (!t)
      throw Error(ErrorKind::InvalidInput,
                  "generator " + std::to_string(k) + " is zero or not homogeneous");
    vo.degrees.push_back(*t);
    ++actual[*t];
  }
  if (expected != actual)
    throw Error(ErrorKind::WrongRank, "generator degrees do not match the ranks of R");
  if (rank(RatMatrix::fromColumns(8, in.gens)) != 8)
    throw Error(ErrorKind::WrongRank, "generators are linearly dependent");
  for (std::size_t k = 0; k < 8; ++k)
    if (vo.degrees[k] == 0 && in.gens[k][0] == -1) vo.input.gens[k][0] = 1;

  vo.lattice = Lattice(RatMatrix::fromColumns(8, vo.input.gens));
  if (!latticeMembership(vo.lattice, unitVector(0)))
    throw Error(ErrorKind::NotUnital, "1 is not in the lattice");

  StructRing& ring = vo.ring;
  ring.degrees = vo.degrees;
  ring.mult.assign(8, std::vector<RatVector>(8));
  for (std::size_t k = 0; k < 8; ++k) {
    ring.labels.push_back("g" + std::to_string(k));
    if (vo.degrees[k] == 0) ring.unit = k;
  }
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) {
      const RatVector p = multiplyInR(vo.input.gens[i], vo.input.gens[j], d);
      auto coords = latticeMembership(vo.lattice, p);
      if (!coords)
        throw Error(ErrorKind::NotClosed,
                    "g" + std::to_string(i) + "*g" + std::to_string(j) + " = " +
                        formatElement(p, in.names) + " is not in the lattice");
      ring.mult[i][j] = toRat(*coords);
    }
  return vo;
}

Decomposition decompose(const OrderInput& in) {
  const VerifiedOrder vo = verifyOrder(in);
  const Degrees& d = vo.input.d;
  const Pieces pieces(vo);
  Decomposition dec;
  std::vector<RatVector> c1, c2, c3;
  for (int t : std::set<int>(vo.degrees.begin(), vo.degrees.end())) {
    const Lattice& at = pieces.at(t);
    if (t == 0) {
      dec.unit = at.vector(0);
      continue;
    }
    const Lattice n2 = latticeIntersectSubspace(at, monomialSpan(d, t, 2));
    const Lattice n3 = latticeIntersectSubspace(n2, monomialSpan(d, t, 3));
    const Lattice l1 = splitComplement(at, n2);
    const Lattice l2 = splitComplement(n2, n3);
    for (std::size_t j = 0; j < l1.rank(); ++j) {
      c1.push_back(l1.vector(j));
      dec.l1Degrees.push_back(t);
    }
    for (std::size_t j = 0; j < l2.rank(); ++j) {
      c2.push_back(l2.vector(j));
      dec.l2Degrees.push_back(t);
    }
    for (std::size_t j = 0; j < n3.rank(); ++j) {
      c3.push_back(n3.vector(j));
      dec.l3Degrees.push_back(t);
    }
  }
  dec.l1 = columnsLattice(c1);
  dec.l2 = columnsLattice(c2);
  dec.l3 = columnsLattice(c3);
  std::vector<int> sorted(d.begin(), d.end());
  std::sort(sorted.begin(), sorted.end());
  if (dec.l1.rank() != 3 || dec.l2.rank() != 3 || dec.l3.rank() != 1 || dec.l1Degrees != sorted)
    throw Error(ErrorKind::Internal, "filtration quotients have the wrong ranks");
  return dec;
}

ClassificationResult classifyOrder(const OrderInput& in, int heightBound) {
  const Degrees& d = in.d;
  if (hasRepeatedEven(d)) return notWeightedSearch(in, heightBound);
  const VerifiedOrder vo = verifyOrder(in);
  const Decomposition dec = decompose(vo.input);
  const Pieces pieces(vo);
  Basis3 y = assignL1(dec, d);

  for (int k = 0; k < 3; ++k) {
    auto lifted = squareZeroLift(y[static_cast<std::size_t>(k)], k, d, pieces);
    if (!lifted) {
      ClassificationResult r;
      r.outcome = Outcome::NotWeightedCertified;
      r.method = "square-zero-lift";
      r.basis.assign(y.begin(), y.end());
      r.report.note = "no element of A in degree " + std::to_string(d[static_cast<std::size_t>(k)]) +
                      " with leading term on " + vo.input.names[static_cast<std::size_t>(k)] +
                      " squares to zero while completing a basis";
      return r;
    }
    y[static_cast<std::size_t>(k)] = *lifted;
  }

  std::string method;
  if (d[0] == d[1] && d[1] == d[2]) {
    method = "all-equal";
    std::vector<RatVector> products{multiplyInR(y[0], y[1], d), multiplyInR(y[0], y[2], d),
                                    multiplyInR(y[1], y[2], d)};
    auto x = coordinates(dec.l2, products);
    if (!x) throw Error(ErrorKind::Internal, "pair products leave L(2)");
    const SnfResult s = snfConstrainedSL(*x, Side::Right);
    const IntMatrix change = alt2Section(s.V);
    Basis3 next;
    for (std::size_t j = 0; j < 3; ++j) {
      next[j] = RatVector(8, Rat(0));
      for (std::size_t i = 0; i < 3; ++i) next[j] = add(next[j], scale(y[i], Rat(change(i, j))));
    }
    y = next;
  } else if (d[0] == d[1] || d[0] == d[2] || d[1] == d[2]) {
    method = "two-equal";
    const std::size_t p = d[0] == d[1] || d[0] == d[2] ? 0 : 1;
    const std::size_t q = d[0] == d[1] ? 1 : 2;
    const std::size_t r = 3 - p - q;
    const int t = d[p] + d[r];
    std::vector<RatVector> rows;
    for (std::size_t j = 0; j < dec.l2.rank(); ++j)
      if (dec.l2Degrees[j] == t) rows.push_back(dec.l2.vector(j));
    auto x0 = coordinates(columnsLattice(rows),
                          {multiplyInR(y[p], y[r], d), multiplyInR(y[q], y[r], d)});
    if (!x0) throw Error(ErrorKind::Internal, "pair products leave L(2)");
    const SnfResult s = snf(*x0);
    const RatVector yp = y[p], yq = y[q];
    y[p] = add(scale(yp, Rat(s.V(0, 0))), scale(yq, Rat(s.V(1, 0))));
    y[q] = add(scale(yp, Rat(s.V(0, 1))), scale(yq, Rat(s.V(1, 1))));
  } else {
    method = "distinct";
  }
  TestOutcome t = testBasis(vo, pieces, y);
  if (!t.ok) throw Error(ErrorKind::Internal, "classification basis failed: " + t.reason);
  return weightedResult(method, y, std::move(t));
}

ClassificationResult notWeightedSearch(const OrderInput& in, int heightBound) {
  if (heightBound < 1) throw Error(ErrorKind::InvalidInput, "height bound must be positive");
  const VerifiedOrder vo = verifyOrder(in);
  const Decomposition dec = decompose(vo.input);
  const Pieces pieces(vo);
  const Degrees& d = vo.input.d;

  ClassificationResult result;
  result.method = "search";
  SearchReport& report = result.report;

  std::map<int, std::vector<int>> blocks;
  for (int i = 0; i < 3; ++i) blocks[d[static_cast<std::size_t>(i)]].push_back(i);
  for (const auto& [e, positions] : blocks) {
    CandidateFamily fam;
    fam.positions = positions;
    fam.degree = e;
    std::vector<RatVector> l1e;
    for (std::size_t j = 0; j < dec.l1.rank(); ++j)
      if (dec.l1Degrees[j] == e) l1e.push_back(dec.l1.vector(j));
    if (positions.size() == 1) {
      fam.pinned = true;
      if (auto lifted = squareZeroLift(l1e[0], positions[0], d, pieces))
        fam.candidates.push_back(*lifted);
    } else if (e % 2 == 0) {
      // Square zero forces a single monomial: (sum u_i x_i)^2 = 2 sum u_i u_j x_i x_j.
      fam.pinned = true;
      for (int i : positions) fam.candidates.push_back(primitiveOnLine(pieces.at(e), unitVector(1u << i)).first);
    } else {
      fam.pinned = false;
      const RatMatrix basis = RatMatrix::fromColumns(8, l1e);
      for (const auto& u : primitiveVectors(l1e.size(), heightBound))
        fam.candidates.push_back(basis * toRat(u));
    }
    report.families.push_back(std::move(fam));
  }

  // Choices per family: index subsets of the family's candidates.
  const auto& fams = report.families;
  std::vector<std::vector<std::vector<std::size_t>>> choices(fams.size());
  std::size_t considered = 0;
  for (std::size_t f = 0; f < fams.size(); ++f) {
    forEachCombination(fams[f].candidates.size(), fams[f].positions.size(),
                       [&](const std::vector<std::size_t>& idx) {
                         choices[f].push_back(idx);
                         return ++considered < kMaxConsidered;
                       });
    if (considered >= kMaxConsidered) report.capped = true;
  }

  std::vector<std::size_t> pick(fams.size(), 0);
  bool done = std::any_of(choices.begin(), choices.end(), [](const auto& c) { return c.empty(); });
  while (!done) {
    Basis3 y;
    for (std::size_t f = 0; f < fams.size(); ++f)
      for (std::size_t k = 0; k < fams[f].positions.size(); ++k)
        y[static_cast<std::size_t>(fams[f].positions[k])] = fams[f].candidates[choices[f][pick[f]][k]];
    if (report.tested >= kMaxTested) {
      report.capped = true;
      break;
    }
    ++report.tested;
    TestOutcome t = testBasis(vo, pieces, y);
    if (t.ok) {
      ClassificationResult r = weightedResult("search", y, std::move(t));
      r.report = std::move(report);
      return r;
    }
    if (report.trials.size() < kMaxReportedTrials)
      report.trials.push_back({y, t.failingDegree, t.reason});

    std::size_t f = 0;
    while (f < fams.size() && ++pick[f] == choices[f].size()) pick[f++] = 0;
    done = f == fams.size();
  }
  const bool pinned = std::all_of(fams.begin(), fams.end(), [](const auto& f) { return f.pinned; });
  result.outcome = pinned && !report.capped ? Outcome::NotWeightedCertified : Outcome::Inconclusive;
  if (result.outcome == Outcome::Inconclusive)
    report.note = "bounded search found no weighted basis; odd blocks of equal degree are not pinned";
  return result;
}

OrderInput weightedOrder(const CoefficientSequence& c, const Degrees& d) {
  OrderInput in;
  in.d = d;
  for (Subset s : subsetsByDegree(d)) {
    RatVector v = unitVector(s);
    v[s] = Rat(1) / Rat(c[s]);
    in.gens.push_back(v);
  }
  return in;
}

}  // namespace wsp
