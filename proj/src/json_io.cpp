#include "wsp/json_io.hpp"

#include <fstream>

namespace wsp {

namespace {

std::string str(const Int& x) { return x.get_str(); }
std::string str(const Rat& x) { return x.get_str(); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw Error(ErrorKind::InvalidInput, std::string("missing field \"") + key + "\"");
  return j.at(key);
}

template <class T, class Parse>
Matrix<T> matrixFromJson(const Json& j, Parse parse) {
  const Json& rows = field(j, "rows");
  const Json& cols = field(j, "cols");
  const Json& entries = field(j, "entries");
  if (!rows.is_number_unsigned() || !cols.is_number_unsigned() || !entries.is_array())
    throw Error(ErrorKind::InvalidInput, "malformed matrix");
  Matrix<T> m(rows.get<std::size_t>(), cols.get<std::size_t>());
  if (entries.size() != m.rows())
    throw Error(ErrorKind::InvalidInput, "matrix row count does not match \"rows\"");
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (!entries[i].is_array() || entries[i].size() != m.cols())
      throw Error(ErrorKind::InvalidInput, "matrix row length does not match \"cols\"");
    for (std::size_t k = 0; k < m.cols(); ++k) m(i, k) = parse(entries[i][k]);
  }
  return m;
}

template <class T>
Json matrixToJson(const Matrix<T>& m) {
  Json entries = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(str(m(i, k)));
    entries.push_back(std::move(row));
  }
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

Json kMonomialToJson(const KMonomial& m) {
  return Json{{"k_exponent", m.kExponent}, {"coefficient", str(m.coeff)}};
}

}  // namespace

Int parseInt(const Json& j) {
  if (j.is_number_integer()) return Int(std::to_string(j.get<long long>()));
  if (j.is_string()) {
    Int x;
    if (x.set_str(j.get<std::string>(), 10) == 0) return x;
  }
  throw Error(ErrorKind::InvalidInput, "not an integer: " + j.dump());
}

Rat parseRat(const Json& j) {
  if (j.is_number_integer()) return Rat(parseInt(j));
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    const auto slash = s.find('/');
    Int num, den(1);
    bool ok = num.set_str(s.substr(0, slash), 10) == 0;
    if (slash != std::string::npos) ok = ok && den.set_str(s.substr(slash + 1), 10) == 0;
    if (ok && den != 0) {
      Rat r(num, den);
      r.canonicalize();
      return r;
    }
  }
  throw Error(ErrorKind::InvalidInput, "not a rational: " + j.dump());
}

Json toJson(const IntMatrix& m) { return matrixToJson(m); }
Json toJson(const RatMatrix& m) { return matrixToJson(m); }
IntMatrix intMatrixFromJson(const Json& j) { return matrixFromJson<Int>(j, parseInt); }
RatMatrix ratMatrixFromJson(const Json& j) { return matrixFromJson<Rat>(j, parseRat); }

Json toJson(const IntVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(str(x));
  return out;
}

Json toJson(const RatVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(str(x));
  return out;
}

Json toJson(const CoefficientSequence& c) {
  return Json{{"c",
               {{"12", str(c.c12())}, {"13", str(c.c13())}, {"23", str(c.c23())},
                {"123", str(c.c123())}}}};
}

CoefficientSequence coefficientsFromJson(const Json& j) {
  const Json& c = field(j, "c");
  if (!c.is_object()) throw Error(ErrorKind::InvalidInput, "\"c\" must be an object");
  std::array<Int, 8> v;
  v.fill(Int(1));
  for (const auto& [key, value] : c.items()) {
    const Subset s = subsetFromDigits(key);
    v[s] = parseInt(value);
    if (subsetSize(s) <= 1 && v[s] != 1)
      throw Error(ErrorKind::InvalidCoefficientSequence, "c" + key + " must be 1");
  }
  return CoefficientSequence(v[0b011], v[0b101], v[0b110], v[0b111]);
}

Json toJson(const StructRing& ring) {
  Json basis = Json::array();
  for (std::size_t i = 0; i < ring.size(); ++i)
    basis.push_back({{"label", ring.labels[i]}, {"degree", ring.degrees[i]}});
  Json products = Json::array();
  for (std::size_t i = 0; i < ring.size(); ++i)
    for (std::size_t k = 0; k < ring.size(); ++k) {
      Json result = Json::object();
      for (std::size_t t = 0; t < ring.size(); ++t)
        if (ring.mult[i][k][t] != 0) result[ring.labels[t]] = str(ring.mult[i][k][t]);
      products.push_back({{"left", ring.labels[i]}, {"right", ring.labels[k]}, {"result", result}});
    }
  return Json{{"basis", basis}, {"unit", ring.labels[ring.unit]}, {"products", products}};
}

Json toJson(const ChainComplex& c) {
  Json degrees = Json::array();
  for (int n = 0; n <= c.top(); ++n)
    degrees.push_back({{"degree", n},
                       {"generators", c.labels[static_cast<std::size_t>(n)]},
                       {"boundary", toJson(c.d(n))}});
  return Json{{"top", c.top()}, {"degrees", degrees}};
}

Json toJson(const ChainMap& f) {
  Json maps = Json::array();
  for (int n = 0; n <= std::max(f.source.top(), f.target.top()); ++n)
    maps.push_back({{"degree", n}, {"matrix", toJson(f.at(n))}});
  return Json{{"maps", maps}};
}

Json chainToJson(const IntVector& v, const ChainComplex& c, int n) {
  Json out = Json::object();
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) out[c.labels[static_cast<std::size_t>(n)][i]] = str(v[i]);
  return out;
}

Json toJson(const HomologyResult& h, const ChainComplex& c) {
  Json out = Json::array();
  for (std::size_t n = 0; n < h.degrees.size(); ++n) {
    const HomologyGroup& g = h.degrees[n];
    Json reps = Json::array();
    for (const auto& r : g.representatives) reps.push_back(chainToJson(r, c, static_cast<int>(n)));
    out.push_back({{"degree", n},
                   {"free_rank", g.freeRank},
                   {"torsion", toJson(g.torsion)},
                   {"representatives", reps}});
  }
  return out;
}

OrderInput orderFromJson(const Json& j) {
  OrderInput in;
  const Json& degrees = field(j, "degrees");
  if (!degrees.is_array() || degrees.size() != 3)
    throw Error(ErrorKind::InvalidInput, "\"degrees\" must list three integers");
  for (std::size_t i = 0; i < 3; ++i) {
    if (!degrees[i].is_number_integer())
      throw Error(ErrorKind::InvalidInput, "\"degrees\" must list three integers");
    in.d[i] = degrees[i].get<int>();
  }
  if (j.contains("names")) {
    const Json& names = j.at("names");
    if (!names.is_array() || names.size() != 3)
      throw Error(ErrorKind::InvalidInput, "\"names\" must list three strings");
    for (std::size_t i = 0; i < 3; ++i) in.names[i] = names[i].get<std::string>();
  }
  const Json& gens = field(j, "generators");
  if (!gens.is_array()) throw Error(ErrorKind::InvalidInput, "\"generators\" must be an array");
  for (const auto& g : gens) {
    RatVector v(8, Rat(0));
    if (g.is_array()) {
      if (g.size() != 8) throw Error(ErrorKind::InvalidInput, "generator needs 8 coordinates");
      for (std::size_t s = 0; s < 8; ++s) v[s] = parseRat(g[s]);
    } else if (g.is_object()) {
      for (const auto& [key, value] : g.items())
        v[key == "0" ? 0 : subsetFromDigits(key)] = parseRat(value);
    } else {
      throw Error(ErrorKind::InvalidInput, "generator must be an array or an object");
    }
    in.gens.push_back(std::move(v));
  }
  return in;
}

Json toJson(const OrderInput& in) {
  Json gens = Json::array();
  for (const auto& g : in.gens) {
    Json obj = Json::object();
    for (Subset s = 0; s < g.size(); ++s)
      if (g[s] != 0) obj[subsetDigits(s)] = str(g[s]);
    gens.push_back(obj);
  }
  return Json{{"degrees", in.d}, {"names", in.names}, {"generators", gens}};
}

Json toJson(const ClassificationResult& r, const OrderInput& in) {
  Json out{{"outcome", std::string(toString(r.outcome))}, {"method", r.method}};
  if (r.c) out["coefficients"] = toJson(*r.c)["c"];
  Json basis = Json::array();
  for (const auto& y : r.basis) basis.push_back(formatElement(y, in.names));
  out["basis"] = basis;
  if (r.witness) out["witness"] = toJson(r.witness->matrix);

  const SearchReport& rep = r.report;
  Json families = Json::array();
  for (const auto& f : rep.families) {
    Json cands = Json::array();
    for (const auto& c : f.candidates) cands.push_back("+-" + formatElement(c, in.names));
    Json positions = Json::array();
    for (int p : f.positions) positions.push_back(p + 1);
    families.push_back({{"positions", positions},
                        {"degree", f.degree},
                        {"pinned", f.pinned},
                        {"candidates", cands}});
  }
  Json trials = Json::array();
  for (const auto& t : rep.trials) {
    Json b = Json::array();
    for (const auto& y : t.basis) b.push_back(formatElement(y, in.names));
    Json entry{{"basis", b}, {"reason", t.reason}};
    entry["failing_degree"] = t.failingDegree ? Json(*t.failingDegree) : Json(nullptr);
    trials.push_back(entry);
  }
  if (!rep.families.empty() || !rep.note.empty())
    out["report"] = {{"families", families},
                     {"trials", trials},
                     {"tested", rep.tested},
                     {"capped", rep.capped},
                     {"note", rep.note}};
  return out;
}

Json toJson(const LesReport& r) {
  return Json{{"top_degree", r.topDegree},
              {"proper_degrees", r.properDegrees},
              {"vanishing", r.vanishing},
              {"upper", kMonomialToJson(r.upper)},
              {"lower", kMonomialToJson(r.lower)},
              {"product_in_full_simplex", kMonomialToJson(r.productInProduct)},
              {"product_in_x_prime", kMonomialToJson(r.productInXPrime)},
              {"product_in_x", kMonomialToJson(r.productInX)},
              {"k_independent", r.kIndependent}};
}

Json toJson(const RealizedRing& r) {
  return Json{{"ring", toJson(r.ring)},
              {"provenance",
               {{"lcm", str(r.provenance.lcm)},
                {"eta_multiplier", str(r.provenance.etaMultiplier)},
                {"attaching_multiplier", str(r.provenance.attachingMultiplier)},
                {"top_constant", str(r.provenance.topConstant)}}},
              {"chase", toJson(r.chase)},
              {"identity_witness", r.witnessVerified}};
}

Json readJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidInput, "cannot read " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidInput, path + ": " + e.what());
  }
}

}  // namespace wsp
