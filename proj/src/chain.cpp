#include "wsp/chain.hpp"

#include <algorithm>

namespace wsp {

namespace {

IntMatrix blockDiagonal(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix m(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, a.cols() + j) = b(i, j);
  return m;
}

IntVector scaledVector(const IntVector& v, const Int& s) {
  IntVector out = v;
  for (auto& x : out) x *= s;
  return out;
}

bool allZero(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

}  // namespace

ChainComplex::ChainComplex(int top) {
  labels.assign(static_cast<std::size_t>(top + 1), {});
  boundary.assign(static_cast<std::size_t>(top + 1), IntMatrix(0, 0));
}

std::size_t ChainComplex::rank(int n) const {
  if (n < 0 || n > top()) return 0;
  return labels[static_cast<std::size_t>(n)].size();
}

std::size_t ChainComplex::addGenerator(int n, std::string label) {
  if (n < 0) throw Error(ErrorKind::InvalidInput, "negative degree");
  while (top() < n) {
    const std::size_t below = rank(top());
    labels.emplace_back();
    boundary.emplace_back(below, 0);
  }
  const auto un = static_cast<std::size_t>(n);
  IntMatrix grown(boundary[un].rows(), boundary[un].cols() + 1);
  for (std::size_t i = 0; i < grown.rows(); ++i)
    for (std::size_t j = 0; j + 1 < grown.cols(); ++j) grown(i, j) = boundary[un](i, j);
  boundary[un] = std::move(grown);
  if (n < top()) {
    IntMatrix& up = boundary[un + 1];
    IntMatrix taller(up.rows() + 1, up.cols());
    for (std::size_t i = 0; i < up.rows(); ++i)
      for (std::size_t j = 0; j < up.cols(); ++j) taller(i, j) = up(i, j);
    up = std::move(taller);
  }
  labels[un].push_back(std::move(label));
  return labels[un].size() - 1;
}

std::size_t ChainComplex::indexOf(int n, const std::string& label) const {
  if (n >= 0 && n <= top()) {
    const auto& l = labels[static_cast<std::size_t>(n)];
    auto it = std::find(l.begin(), l.end(), label);
    if (it != l.end()) return static_cast<std::size_t>(it - l.begin());
  }
  throw Error(ErrorKind::InvalidInput,
              "no generator \"" + label + "\" in degree " + std::to_string(n));
}

IntMatrix ChainComplex::d(int n) const {
  if (n < 0 || n > top()) return IntMatrix(rank(n - 1), rank(n));
  return boundary[static_cast<std::size_t>(n)];
}

void ChainComplex::validate() const {
  if (boundary.size() != labels.size())
    throw Error(ErrorKind::NotAComplex, "boundary list does not match degree list");
  for (int n = 0; n <= top(); ++n) {
    const IntMatrix& b = boundary[static_cast<std::size_t>(n)];
    if (b.rows() != rank(n - 1) || b.cols() != rank(n))
      throw Error(ErrorKind::NotAComplex, "boundary in degree " + std::to_string(n) +
                                              " has the wrong shape");
  }
  for (int n = 1; n <= top(); ++n)
    if (!(d(n - 1) * d(n)).isZero())
      throw Error(ErrorKind::NotAComplex,
                  "d" + std::to_string(n - 1) + " d" + std::to_string(n) + " != 0");
}

IntMatrix ChainMap::at(int n) const {
  if (n < 0 || static_cast<std::size_t>(n) >= f.size())
    return IntMatrix(target.rank(n), source.rank(n));
  return f[static_cast<std::size_t>(n)];
}

void ChainMap::validate() const {
  const int top = std::max(source.top(), target.top());
  for (int n = 0; n <= top; ++n) {
    const IntMatrix fn = at(n);
    if (fn.rows() != target.rank(n) || fn.cols() != source.rank(n))
      throw Error(ErrorKind::NotAComplex,
                  "chain map in degree " + std::to_string(n) + " has the wrong shape");
    if (n > 0 && target.d(n) * fn != at(n - 1) * source.d(n))
      throw Error(ErrorKind::NotAComplex,
                  "chain map does not commute with d in degree " + std::to_string(n));
  }
}

ChainMap identityMap(const ChainComplex& c) {
  ChainMap m{c, c, {}};
  for (int n = 0; n <= c.top(); ++n) m.f.push_back(IntMatrix::identity(c.rank(n)));
  return m;
}

ChainMap compose(const ChainMap& g, const ChainMap& f) {
  ChainMap m{f.source, g.target, {}};
  const int top = std::max({f.source.top(), g.target.top(), 0});
  for (int n = 0; n <= top; ++n) m.f.push_back(g.at(n) * f.at(n));
  return m;
}

ChainComplex directSum(const ChainComplex& a, const ChainComplex& b) {
  ChainComplex s(std::max(a.top(), b.top()));
  for (int n = 0; n <= s.top(); ++n) {
    auto& l = s.labels[static_cast<std::size_t>(n)];
    if (n <= a.top()) l = a.labels[static_cast<std::size_t>(n)];
    if (n <= b.top())
      l.insert(l.end(), b.labels[static_cast<std::size_t>(n)].begin(),
               b.labels[static_cast<std::size_t>(n)].end());
    s.boundary[static_cast<std::size_t>(n)] = blockDiagonal(a.d(n), b.d(n));
  }
  return s;
}

HomologyDegree::HomologyDegree(const ChainComplex& c, int n) : dn_(c.d(n)) {
  const std::size_t cn = c.rank(n);
  const SnfResult sd = snf(dn_);
  while (rank_ < std::min(sd.D.rows(), sd.D.cols()) && sd.D(rank_, rank_) != 0) ++rank_;
  vInverse_ = inverseUnimodular(sd.V);
  const std::size_t k = cn - rank_;

  // Boundaries written in the kernel basis V[:, rank:].
  const IntMatrix up = c.d(n + 1);
  const IntMatrix coords = (vInverse_ * up).rowsRange(rank_, cn);
  const SnfResult t = snf(coords);
  p_ = t.U;
  std::size_t s = 0;
  while (s < std::min(t.D.rows(), t.D.cols()) && t.D(s, s) != 0) ++s;
  while (trivial_ < s && t.D(trivial_, trivial_) == 1) ++trivial_;

  IntMatrix kernel = sd.V.columns(rank_, cn) * inverseUnimodular(t.U);
  boundaryHnf_ = hnf(up.transpose()).H;
  for (std::size_t j = trivial_; j < k; ++j) {
    if (j < s) group_.torsion.push_back(t.D(j, j));
    IntVector rep = reduceModBoundaries(kernel.column(j));
    // Orient each generator so its reduced representative leads with a
    // positive entry; flipping the column of P^-1 flips the row of P.
    const auto lead = std::find_if(rep.begin(), rep.end(), [](const Int& x) { return x != 0; });
    if (lead != rep.end() && *lead < 0) {
      for (std::size_t i = 0; i < kernel.rows(); ++i) kernel(i, j) = -kernel(i, j);
      for (std::size_t i = 0; i < p_.cols(); ++i) p_(j, i) = -p_(j, i);
      rep = reduceModBoundaries(kernel.column(j));
    }
    group_.representatives.push_back(std::move(rep));
  }
  group_.freeRank = k - s;
}

IntVector HomologyDegree::reduceModBoundaries(IntVector v) const {
  const IntMatrix& h = boundaryHnf_;
  std::size_t col = 0;
  for (std::size_t i = 0; i < h.rows(); ++i) {
    while (col < h.cols() && h(i, col) == 0) ++col;
    if (col == h.cols()) break;
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), v[col].get_mpz_t(), h(i, col).get_mpz_t());
    if (q != 0)
      for (std::size_t j = col; j < h.cols(); ++j) v[j] -= q * h(i, j);
  }
  return v;
}

bool HomologyDegree::isBoundary(const IntVector& chain) const {
  return allZero(reduceModBoundaries(chain));
}

IntVector HomologyDegree::classOf(const IntVector& cycle) const {
  if (cycle.size() != dn_.cols())
    throw Error(ErrorKind::DimensionMismatch, "chain has the wrong length");
  if (!allZero(dn_ * cycle)) throw Error(ErrorKind::NotACycle, "chain is not a cycle");
  const IntVector w = vInverse_ * cycle;
  const IntVector y(w.begin() + static_cast<std::ptrdiff_t>(rank_), w.end());
  const IntVector full = p_ * y;
  IntVector out(full.begin() + static_cast<std::ptrdiff_t>(trivial_), full.end());
  for (std::size_t j = 0; j < group_.torsion.size(); ++j)
    mpz_fdiv_r(out[j].get_mpz_t(), out[j].get_mpz_t(), group_.torsion[j].get_mpz_t());
  return out;
}

HomologyResult homology(const ChainComplex& c) {
  c.validate();
  HomologyResult r;
  for (int n = 0; n <= c.top(); ++n) r.degrees.push_back(HomologyDegree(c, n).group());
  return r;
}

IntMatrix inducedOnHomology(const ChainMap& f, int n) {
  const HomologyDegree src(f.source, n);
  const HomologyDegree dst(f.target, n);
  const IntMatrix fn = f.at(n);
  const auto& reps = src.group().representatives;
  IntMatrix m(dst.group().generatorCount(), reps.size());
  for (std::size_t j = 0; j < reps.size(); ++j) {
    const IntVector cls = dst.classOf(fn * reps[j]);
    for (std::size_t i = 0; i < cls.size(); ++i) m(i, j) = cls[i];
  }
  return m;
}

namespace {

// Free coordinates of the classes of the given cycles, one column each.
IntMatrix freeCoordinates(const HomologyDegree& h, const std::vector<IntVector>& cycles) {
  const std::size_t offset = h.group().torsion.size();
  IntMatrix m(h.group().freeRank, cycles.size());
  for (std::size_t j = 0; j < cycles.size(); ++j) {
    const IntVector cls = h.classOf(cycles[j]);
    for (std::size_t i = 0; i < m.rows(); ++i) m(i, j) = cls[offset + i];
  }
  return m;
}

}  // namespace

IntMatrix inducedOnFreeHomology(const ChainMap& f, int n, const std::vector<IntVector>& srcBasis,
                                const std::vector<IntVector>& dstBasis) {
  const HomologyDegree src(f.source, n);
  const HomologyDegree dst(f.target, n);
  const IntMatrix bs = freeCoordinates(src, srcBasis);
  const IntMatrix bd = freeCoordinates(dst, dstBasis);
  if (bs.rows() != bs.cols() || abs(determinant(bs)) != 1)
    throw Error(ErrorKind::InvalidInput, "source cycles do not form a basis of the free part");
  if (bd.rows() != bd.cols() || abs(determinant(bd)) != 1)
    throw Error(ErrorKind::InvalidInput, "target cycles do not form a basis of the free part");
  std::vector<IntVector> images;
  const IntMatrix fn = f.at(n);
  for (const auto& z : srcBasis) images.push_back(fn * z);
  return inverseUnimodular(bd) * freeCoordinates(dst, images);
}

PushoutResult pushoutComplex(const ChainMap& i, const ChainMap& j) {
  const ChainComplex& x = i.target;
  const ChainComplex& y = j.target;
  const int top = std::max(x.top(), y.top());

  // Per degree: gX : X_n -> P_n, gY : Y_n -> P_n, and the complement basis.
  std::vector<IntMatrix> gx, gy, complement;
  ChainComplex p(top);
  for (int n = 0; n <= top; ++n) {
    const IntMatrix in = i.at(n);
    const std::size_t an = in.cols(), xn = in.rows(), yn = y.rank(n);
    const SnfResult s = snf(in);
    for (std::size_t t = 0; t < an; ++t)
      if (t >= xn || s.D(t, t) != 1)
        throw Error(ErrorKind::NotSplitInclusion,
                    "inclusion in degree " + std::to_string(n) + " is not split injective");
    const IntMatrix w = inverseUnimodular(s.U).columns(an, xn);
    complement.push_back(w);

    const IntMatrix head = j.at(n) * s.V * s.U.rowsRange(0, an);
    IntMatrix g(yn + xn - an, xn);
    for (std::size_t r = 0; r < yn; ++r)
      for (std::size_t c = 0; c < xn; ++c) g(r, c) = head(r, c);
    for (std::size_t r = an; r < xn; ++r)
      for (std::size_t c = 0; c < xn; ++c) g(yn + r - an, c) = s.U(r, c);
    gx.push_back(std::move(g));
    IntMatrix h(yn + xn - an, yn);
    for (std::size_t r = 0; r < yn; ++r) h(r, r) = 1;
    gy.push_back(std::move(h));

    auto& labels = p.labels[static_cast<std::size_t>(n)];
    if (n <= y.top()) labels = y.labels[static_cast<std::size_t>(n)];
    for (std::size_t c = 0; c < w.cols(); ++c) {
      std::string label;
      for (std::size_t r = 0; r < xn; ++r) {
        if (w(r, c) == 0) continue;
        if (!label.empty()) label += " + ";
        if (w(r, c) != 1) label += w(r, c).get_str() + "*";
        label += x.labels[static_cast<std::size_t>(n)][r];
      }
      labels.push_back(label);
    }
  }
  for (int n = 0; n <= top; ++n) {
    const auto un = static_cast<std::size_t>(n);
    const std::size_t yn = y.rank(n);
    IntMatrix b(p.rank(n - 1), p.rank(n));
    if (n > 0) {
      const IntMatrix fromY = gy[un - 1] * y.d(n);
      const IntMatrix fromC = gx[un - 1] * x.d(n) * complement[un];
      for (std::size_t r = 0; r < b.rows(); ++r) {
        for (std::size_t c = 0; c < yn; ++c) b(r, c) = fromY(r, c);
        for (std::size_t c = 0; c < fromC.cols(); ++c) b(r, yn + c) = fromC(r, c);
      }
    }
    p.boundary[un] = std::move(b);
  }
  try {
    p.validate();
  } catch (const Error& e) {
    throw Error(ErrorKind::Internal, std::string("pushout is not a complex: ") + e.what());
  }
  PushoutResult out{p, ChainMap{x, p, gx}, ChainMap{y, p, gy}};
  return out;
}

ChainComplex mappingConeOfDegreeMap(int n, const Int& m, const ChainComplex& target,
                                    const IntVector& cycle, const std::string& label) {
  if (cycle.size() != target.rank(n))
    throw Error(ErrorKind::DimensionMismatch, "cycle has the wrong length");
  if (!allZero(target.d(n) * cycle)) throw Error(ErrorKind::NotACycle, "attaching chain is not a cycle");
  ChainComplex cone = target;
  const std::size_t e = cone.addGenerator(n + 1, label);
  const IntVector image = scaledVector(cycle, m);
  IntMatrix& b = cone.boundary[static_cast<std::size_t>(n + 1)];
  for (std::size_t r = 0; r < image.size(); ++r) b(r, e) = image[r];
  return cone;
}

ChainComplex sphereComplex(int k) {
  ChainComplex c(k);
  c.addGenerator(0, "pt");
  c.addGenerator(k, "s" + std::to_string(k));
  return c;
}

}  // namespace wsp
