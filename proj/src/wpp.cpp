#include "wsp/wpp.hpp"

#include <algorithm>
#include <map>

namespace wsp {

namespace {

int sign(int exponent) { return exponent % 2 == 0 ? 1 : -1; }

void requireDegrees(const Degrees& d) {
  for (int i = 0; i < 3; ++i)
    if (d[i] < 2)
      throw Error(ErrorKind::DegreeTooSmall,
                  "d" + std::to_string(i + 1) + " = " + std::to_string(d[i]) + " < 2");
}

Subset ySupport(const Word& w) {
  Subset s = 0;
  for (int i = 0; i < 3; ++i)
    if (w[i] == 'y') s |= 1u << i;
  return s;
}

// prod over nonunit letters of c^face_i / c^support_i.
Int powerMultiplier(const Word& w, Subset face, const PowerSequence3& p) {
  const Subset support = ySupport(w);
  Int m = 1;
  for (int i = 0; i < 3; ++i) {
    if (w[i] == '1') continue;
    const Int& num = p.c[face][i];
    const Int& den = p.c[support][i];
    if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
      throw Error(ErrorKind::Internal, "power sequence is not monotone");
    m *= num / den;
  }
  return m;
}

Word makeWord(const std::string& s) { return {s[0], s[1], s[2]}; }

// Complex on the given words with Koszul differentials.
ChainComplex koszulComplex(const std::vector<Word>& words, const Degrees& d) {
  int top = 0;
  for (const auto& w : words) top = std::max(top, wordDegree(w, d));
  ChainComplex c(top);
  for (const auto& w : words) c.addGenerator(wordDegree(w, d), wordLabel(w));
  for (const auto& w : words) {
    const int n = wordDegree(w, d);
    const std::size_t col = c.indexOf(n, wordLabel(w));
    for (const auto& [term, coeff] : koszulBoundary(w, d))
      c.boundary[static_cast<std::size_t>(n)](c.indexOf(n - 1, wordLabel(term)), col) += coeff;
  }
  return c;
}

// Same cells as `reference`, with `src`'s boundaries, matched by label.
ChainComplex reorderLike(const ChainComplex& src, const ChainComplex& reference) {
  ChainComplex out = reference;
  for (int n = 0; n <= reference.top(); ++n) {
    if (src.rank(n) != reference.rank(n))
      throw Error(ErrorKind::Internal, "cell counts differ in degree " + std::to_string(n));
    IntMatrix b(reference.rank(n - 1), reference.rank(n));
    const IntMatrix sb = src.d(n);
    for (std::size_t r = 0; r < b.rows(); ++r)
      for (std::size_t col = 0; col < b.cols(); ++col)
        b(r, col) = sb(src.indexOf(n - 1, reference.labels[static_cast<std::size_t>(n - 1)][r]),
                       src.indexOf(n, reference.labels[static_cast<std::size_t>(n)][col]));
    out.boundary[static_cast<std::size_t>(n)] = std::move(b);
  }
  return out;
}

}  // namespace

Int PowerSequence3::phi(Subset face) const { return c[face][0] * c[face][1] * c[face][2]; }

PowerSequence3 powerSequenceFromCoefficients(const CoefficientSequence& cs) {
  PowerSequence3 p;
  for (auto& row : p.c) row = {Int(1), Int(1), Int(1)};
  p.c[0b011][0] = cs.c12();
  p.c[0b110][1] = cs.c23();
  p.c[0b101][2] = cs.c13();
  p.c[0b111] = {cs.c12(), cs.c23(), cs.c13()};
  for (Subset s = 0; s < 8; ++s)
    for (int i = 0; i < 3; ++i) {
      if (!(s & (1u << i)) && p.c[s][i] != 1)
        throw Error(ErrorKind::Internal, "power sequence entry off its face");
      for (Subset t = 0; t < 8; ++t)
        if ((t & s) == t && !mpz_divisible_p(p.c[s][i].get_mpz_t(), p.c[t][i].get_mpz_t()))
          throw Error(ErrorKind::Internal, "power sequence is not monotone");
    }
  return p;
}

int wordDegree(const Word& w, const Degrees& d) {
  int n = 0;
  for (int i = 0; i < 3; ++i) {
    if (w[i] == 'x') n += d[i] - 1;
    if (w[i] == 'y') n += d[i];
  }
  return n;
}

std::string wordLabel(const Word& w) {
  static const std::map<Word, std::string> edges = {
      {makeWord("yy1"), "z12"},    {makeWord("yyx"), "z12.x3"}, {makeWord("1yy"), "z23"},
      {makeWord("xyy"), "x1.z23"}, {makeWord("y1y"), "z13"},    {makeWord("yxy"), "z13~x2"},
  };
  if (auto it = edges.find(w); it != edges.end()) return it->second;
  std::string label;
  for (int i = 0; i < 3; ++i) {
    if (w[i] == '1') continue;
    if (!label.empty()) label += '.';
    label += w[i];
    label += static_cast<char>('1' + i);
  }
  return label.empty() ? "1" : label;
}

std::vector<std::pair<Word, int>> koszulBoundary(const Word& w, const Degrees& d) {
  std::vector<std::pair<Word, int>> out;
  int before = 0;
  for (int i = 0; i < 3; ++i) {
    if (w[i] == 'y') {
      Word t = w;
      t[i] = 'x';
      out.emplace_back(t, sign(before));
    }
    if (w[i] == 'x') before += d[i] - 1;
    if (w[i] == 'y') before += d[i];
  }
  return out;
}

std::vector<Word> vertexWords() {
  std::vector<Word> out;
  for (const char* s : {"111", "x11", "1x1", "11x", "xx1", "x1x", "1xx", "xxx",  //
                        "y11", "yx1", "y1x", "yxx",                              //
                        "1y1", "xy1", "1yx", "xyx",                              //
                        "11y", "x1y", "1xy", "xxy"})
    out.push_back(makeWord(s));
  return out;
}

std::vector<Word> edgeWords() {
  std::vector<Word> out;
  for (const char* s : {"yy1", "yyx", "1yy", "xyy", "y1y", "yxy"}) out.push_back(makeWord(s));
  return out;
}

ChainComplex buildVertexComplex(const Degrees& d) {
  requireDegrees(d);
  return koszulComplex(vertexWords(), d);
}

ChainComplex buildBoundaryComplex(const Degrees& d, const CoefficientSequence& c) {
  requireDegrees(d);
  const int d1 = d[0], d2 = d[1];
  ChainComplex cx(d[0] + d[1] + d[2] - 1);
  for (const auto& w : vertexWords()) cx.addGenerator(wordDegree(w, d), wordLabel(w));
  for (const auto& w : edgeWords()) cx.addGenerator(wordDegree(w, d), wordLabel(w));
  for (const auto& w : vertexWords()) {
    const int n = wordDegree(w, d);
    const std::size_t col = cx.indexOf(n, wordLabel(w));
    for (const auto& [term, coeff] : koszulBoundary(w, d))
      cx.boundary[static_cast<std::size_t>(n)](cx.indexOf(n - 1, wordLabel(term)), col) += coeff;
  }
  struct Term {
    const char* word;
    int sign;
  };
  struct EdgeCell {
    const char* word;
    Int weight;
    std::vector<Term> terms;
  };
  const std::vector<EdgeCell> cells = {
      {"yy1", c.c12(), {{"xy1", 1}, {"yx1", sign(d1)}}},
      {"yyx", c.c12(), {{"xyx", 1}, {"yxx", sign(d1)}}},
      {"1yy", c.c23(), {{"1xy", 1}, {"1yx", sign(d2)}}},
      {"xyy", c.c23(), {{"xxy", sign(d1 - 1)}, {"xyx", sign(d1 + d2 - 1)}}},
      {"y1y", c.c13(), {{"x1y", 1}, {"y1x", sign(d1)}}},
      {"yxy", c.c13(), {{"xxy", 1}, {"yxx", sign(d1 + d2 - 1)}}},
  };
  for (const auto& cell : cells) {
    const Word w = makeWord(cell.word);
    const int n = wordDegree(w, d);
    const std::size_t col = cx.indexOf(n, wordLabel(w));
    for (const auto& t : cell.terms)
      cx.boundary[static_cast<std::size_t>(n)](cx.indexOf(n - 1, wordLabel(makeWord(t.word))),
                                               col) += cell.weight * t.sign;
  }
  cx.validate();
  return cx;
}

std::pair<ChainMap, ChainMap> edgeSquare(Subset edge, const Degrees& d,
                                         const CoefficientSequence& c) {
  requireDegrees(d);
  if (subsetSize(edge) != 2) throw Error(ErrorKind::InvalidInput, "edge must have two vertices");
  int r = 0;
  while (edge & (1u << r)) ++r;
  std::vector<Word> cellWords, boundaryWords;
  for (char a : {'1', 'x', 'y'})
    for (char b : {'1', 'x', 'y'})
      for (char e : {'1', 'x', 'y'}) {
        const Word w{a, b, e};
        if (w[r] == 'y') continue;
        cellWords.push_back(w);
        if ((ySupport(w) & edge) != edge) boundaryWords.push_back(w);
      }
  const ChainComplex a = koszulComplex(boundaryWords, d);
  const ChainComplex x = koszulComplex(cellWords, d);
  const ChainComplex y = buildVertexComplex(d);
  const PowerSequence3 p = powerSequenceFromCoefficients(c);

  ChainMap i{a, x, {}}, j{a, y, {}};
  for (int n = 0; n <= a.top(); ++n) {
    i.f.emplace_back(x.rank(n), a.rank(n));
    j.f.emplace_back(y.rank(n), a.rank(n));
  }
  for (const auto& w : boundaryWords) {
    const int n = wordDegree(w, d);
    const auto un = static_cast<std::size_t>(n);
    const std::size_t col = a.indexOf(n, wordLabel(w));
    i.f[un](x.indexOf(n, wordLabel(w)), col) = 1;
    j.f[un](y.indexOf(n, wordLabel(w)), col) = powerMultiplier(w, edge, p);
  }
  i.validate();
  j.validate();
  return {std::move(i), std::move(j)};
}

ChainComplex buildBoundaryComplexByPushouts(const Degrees& d, const CoefficientSequence& c) {
  ChainComplex current = buildVertexComplex(d);
  ChainMap embed = identityMap(current);
  for (Subset edge : {Subset{0b011}, Subset{0b110}, Subset{0b101}}) {
    auto [i, j] = edgeSquare(edge, d, c);
    PushoutResult po = pushoutComplex(i, compose(embed, j));
    embed = compose(po.fromY, embed);
    current = std::move(po.complex);
  }
  return reorderLike(current, buildBoundaryComplex(d, c));
}

ChainMap buildEtaChainMap(const Degrees& d, const CoefficientSequence& c) {
  const ChainComplex src = buildBoundaryComplex(d, CoefficientSequence());
  const ChainComplex dst = buildBoundaryComplex(d, c);
  const PowerSequence3 p = powerSequenceFromCoefficients(c);
  ChainMap eta{src, dst, {}};
  for (int n = 0; n <= src.top(); ++n) eta.f.emplace_back(dst.rank(n), src.rank(n));
  std::vector<Word> words = vertexWords();
  const auto edges = edgeWords();
  words.insert(words.end(), edges.begin(), edges.end());
  for (const auto& w : words) {
    const int n = wordDegree(w, d);
    const std::string label = wordLabel(w);
    eta.f[static_cast<std::size_t>(n)](dst.indexOf(n, label), src.indexOf(n, label)) =
        powerMultiplier(w, kFullSet, p);
  }
  eta.validate();
  return eta;
}

TopGenerators topGenerators(const Degrees& d, const CoefficientSequence& c) {
  const ChainComplex src = buildBoundaryComplex(d, CoefficientSequence());
  const ChainComplex dst = buildBoundaryComplex(d, c);
  TopGenerators g;
  g.degree = d[0] + d[1] + d[2] - 1;
  const int n = g.degree;
  g.u.assign(src.rank(n), Int(0));
  g.v.assign(dst.rank(n), Int(0));
  const Int l = c.pairLcm();
  const int s12 = sign(d[0] + d[1]), s13 = sign(d[0]);
  g.u[src.indexOf(n, "z12.x3")] = s12;
  g.u[src.indexOf(n, "z13~x2")] = s13;
  g.u[src.indexOf(n, "x1.z23")] = 1;
  g.v[dst.indexOf(n, "z12.x3")] = s12 * (l / c.c12());
  g.v[dst.indexOf(n, "z13~x2")] = s13 * (l / c.c13());
  g.v[dst.indexOf(n, "x1.z23")] = l / c.c23();
  for (const auto& [cx, z] : {std::pair{&src, &g.u}, std::pair{&dst, &g.v}}) {
    const IntVector b = cx->d(n) * *z;
    if (!std::all_of(b.begin(), b.end(), [](const Int& e) { return e == 0; }))
      throw Error(ErrorKind::Internal, "top generator is not a cycle");
  }
  return g;
}

}  // namespace wsp
