#include "wsp/ring.hpp"

#include <algorithm>
#include <bit>
#include <map>

namespace wsp {

int subsetSize(Subset s) { return std::popcount(s); }

int subsetDegree(Subset s, const Degrees& d) {
  int total = 0;
  for (int i = 0; i < 3; ++i)
    if (s & (1u << i)) total += d[i];
  return total;
}

std::string subsetDigits(Subset s) {
  std::string out;
  for (int i = 0; i < 3; ++i)
    if (s & (1u << i)) out.push_back(static_cast<char>('1' + i));
  return out;
}

Subset subsetFromDigits(const std::string& digits) {
  Subset s = 0;
  char last = '0';
  for (char ch : digits) {
    if (ch < '1' || ch > '3' || ch <= last)
      throw Error(ErrorKind::InvalidInput, "bad subset key \"" + digits + "\"");
    s |= 1u << (ch - '1');
    last = ch;
  }
  return s;
}

std::vector<Subset> subsetsByDegree(const Degrees& d) {
  std::vector<Subset> out{0, 1, 2, 3, 4, 5, 6, 7};
  std::stable_sort(out.begin(), out.end(), [&](Subset a, Subset b) {
    return subsetDegree(a, d) < subsetDegree(b, d);
  });
  return out;
}

int signOfProduct(Subset sigma, Subset tau, const Degrees& d) {
  if (sigma & tau)
    throw Error(ErrorKind::OverlappingSubsets,
                "{" + subsetDigits(sigma) + "} meets {" + subsetDigits(tau) + "}");
  int count = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if ((sigma & (1u << j)) && (tau & (1u << i)) && d[i] % 2 != 0 && d[j] % 2 != 0) ++count;
  return count % 2 ? -1 : 1;
}

CoefficientSequence::CoefficientSequence() { c_.fill(Int(1)); }

CoefficientSequence::CoefficientSequence(Int c12, Int c13, Int c23, Int c123) {
  c_.fill(Int(1));
  c_[0b011] = std::move(c12);
  c_[0b101] = std::move(c13);
  c_[0b110] = std::move(c23);
  c_[0b111] = std::move(c123);
  for (Subset s = 0; s < 8; ++s)
    if (c_[s] <= 0)
      throw Error(ErrorKind::InvalidCoefficientSequence,
                  "c" + subsetDigits(s) + " = " + c_[s].get_str() + " is not positive");
  for (Subset s = 0; s < 8; ++s)
    for (Subset t = 0; t < 8; ++t) {
      if (s & t) continue;
      Int prod = c_[s] * c_[t];
      if (!mpz_divisible_p(c_[s | t].get_mpz_t(), prod.get_mpz_t()))
        throw Error(ErrorKind::InvalidCoefficientSequence,
                    "c" + subsetDigits(s) + "*c" + subsetDigits(t) + " = " + prod.get_str() +
                        " does not divide c" + subsetDigits(s | t) + " = " +
                        c_[s | t].get_str());
    }
}

Int CoefficientSequence::pairLcm() const {
  Int l = c12();
  mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c13().get_mpz_t());
  mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c23().get_mpz_t());
  return l;
}

RatVector StructRing::basisVector(std::size_t i) const {
  RatVector v(size(), Rat(0));
  v[i] = 1;
  return v;
}

RatVector StructRing::multiply(const RatVector& a, const RatVector& b) const {
  if (a.size() != size() || b.size() != size())
    throw Error(ErrorKind::DimensionMismatch, "ring element has wrong length");
  RatVector out(size(), Rat(0));
  for (std::size_t i = 0; i < size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < size(); ++j) {
      if (b[j] == 0) continue;
      const Rat s = a[i] * b[j];
      const RatVector& p = mult[i][j];
      for (std::size_t k = 0; k < size(); ++k)
        if (p[k] != 0) out[k] += s * p[k];
    }
  }
  return out;
}

std::size_t weightedIndex(Subset sigma, const Degrees& d) {
  const auto order = subsetsByDegree(d);
  return static_cast<std::size_t>(std::find(order.begin(), order.end(), sigma) - order.begin());
}

StructRing buildWeightedRing(const CoefficientSequence& c, const Degrees& d) {
  const auto order = subsetsByDegree(d);
  StructRing ring;
  std::array<std::size_t, 8> pos{};
  for (std::size_t k = 0; k < order.size(); ++k) {
    pos[order[k]] = k;
    ring.labels.push_back(order[k] == 0 ? "1" : "a" + subsetDigits(order[k]));
    ring.degrees.push_back(subsetDegree(order[k], d));
  }
  ring.unit = pos[0];
  ring.mult.assign(8, std::vector<RatVector>(8, RatVector(8, Rat(0))));
  for (Subset s = 0; s < 8; ++s)
    for (Subset t = 0; t < 8; ++t) {
      if (s & t) continue;
      Rat coeff(c[s | t], c[s] * c[t]);
      coeff.canonicalize();
      ring.mult[pos[s]][pos[t]][pos[s | t]] = signOfProduct(s, t, d) * coeff;
    }
  return ring;
}

namespace {

std::string describe(const StructRing& r, std::size_t i) { return r.labels[i]; }

bool isHomogeneousOfDegree(const StructRing& r, const RatVector& v, int degree) {
  for (std::size_t k = 0; k < r.size(); ++k)
    if (v[k] != 0 && r.degrees[k] != degree) return false;
  return true;
}

RatVector scaled(const RatVector& v, int s) {
  RatVector out = v;
  for (auto& x : out) x *= s;
  return out;
}

}  // namespace

RingAxiomReport verifyRingAxioms(const StructRing& ring) {
  RingAxiomReport report;
  const std::size_t n = ring.size();
  if (ring.degrees.size() != n || ring.mult.size() != n) {
    report.violations.push_back("table shape does not match basis size");
    return report;
  }
  for (std::size_t i = 0; i < n; ++i)
    if (ring.mult[i].size() != n) {
      report.violations.push_back("table shape does not match basis size");
      return report;
    }
  if (ring.unit >= n || ring.degrees[ring.unit] != 0)
    report.violations.push_back("unit is not a degree-0 basis element");

  for (std::size_t i = 0; i < n; ++i) {
    const RatVector e = ring.basisVector(i);
    if (ring.unit < n) {
      if (ring.mult[ring.unit][i] != e)
        report.violations.push_back("unit: 1*" + describe(ring, i) + " != " + describe(ring, i));
      if (ring.mult[i][ring.unit] != e)
        report.violations.push_back("unit: " + describe(ring, i) + "*1 != " + describe(ring, i));
    }
    for (std::size_t j = 0; j < n; ++j) {
      const RatVector& p = ring.mult[i][j];
      if (!isHomogeneousOfDegree(ring, p, ring.degrees[i] + ring.degrees[j]))
        report.violations.push_back("degree: " + describe(ring, i) + "*" + describe(ring, j) +
                                    " leaves degree " +
                                    std::to_string(ring.degrees[i] + ring.degrees[j]));
      const int s = (ring.degrees[i] * ring.degrees[j]) % 2 ? -1 : 1;
      if (p != scaled(ring.mult[j][i], s))
        report.violations.push_back("graded commutativity: " + describe(ring, i) + "*" +
                                    describe(ring, j));
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const RatVector lhs = ring.multiply(ring.mult[i][j], ring.basisVector(k));
        const RatVector rhs = ring.multiply(ring.basisVector(i), ring.mult[j][k]);
        if (lhs != rhs)
          report.violations.push_back("associativity: (" + describe(ring, i) + "*" +
                                      describe(ring, j) + ")*" + describe(ring, k));
      }
  return report;
}

bool checkRingMap(const RingMapWitness& f, const StructRing& src, const StructRing& dst) {
  const RatMatrix& m = f.matrix;
  if (m.rows() != dst.size() || m.cols() != src.size())
    throw Error(ErrorKind::DimensionMismatch, "witness shape does not match the rings");
  if (m.column(src.unit) != dst.basisVector(dst.unit)) return false;
  for (std::size_t j = 0; j < src.size(); ++j)
    if (!isHomogeneousOfDegree(dst, m.column(j), src.degrees[j])) return false;
  for (std::size_t i = 0; i < src.size(); ++i)
    for (std::size_t j = 0; j < src.size(); ++j) {
      const RatVector lhs = m * src.mult[i][j];
      const RatVector rhs = dst.multiply(m.column(i), m.column(j));
      if (lhs != rhs) return false;
    }
  std::map<int, std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> blocks;
  for (std::size_t j = 0; j < src.size(); ++j) blocks[src.degrees[j]].first.push_back(j);
  for (std::size_t i = 0; i < dst.size(); ++i) blocks[dst.degrees[i]].second.push_back(i);
  for (const auto& [degree, idx] : blocks) {
    const auto& [cols, rows] = idx;
    if (cols.size() != rows.size()) return false;
    IntMatrix block(rows.size(), cols.size());
    for (std::size_t a = 0; a < rows.size(); ++a)
      for (std::size_t b = 0; b < cols.size(); ++b) {
        const Rat& x = m(rows[a], cols[b]);
        if (x.get_den() != 1) return false;
        block(a, b) = x.get_num();
      }
    if (abs(determinant(block)) != 1) return false;
  }
  return true;
}

}  // namespace wsp
