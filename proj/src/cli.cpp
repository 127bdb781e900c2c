#include "wsp/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "wsp/alt2.hpp"
#include "wsp/json_io.hpp"
#include "wsp/realize.hpp"
#include "wsp/wpp.hpp"

namespace wsp {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Json degreesJson(const Degrees& d) { return Json::array({d[0], d[1], d[2]}); }

// A missing or unreadable path is a usage error; malformed content is a domain error.
Json loadJson(const std::string& path) {
  if (!std::ifstream(path)) throw UsageError("cannot read " + path);
  return readJsonFile(path);
}

Json runRealize(const std::string& degrees, const std::string& coeffs, bool verify) {
  const Degrees d = parseDegreeList(degrees);
  const CoefficientSequence c = coefficientsFromJson(loadJson(coeffs));
  const RealizedRing r = realizeRing(c, d);
  Json out{{"command", "realize"}, {"degrees", degreesJson(d)}, {"coefficients", toJson(c)["c"]}};
  const Json body = toJson(r);
  for (const auto& [k, v] : body.items()) out[k] = v;
  if (verify) {
    const RingAxiomReport axioms = verifyRingAxioms(r.ring);
    const bool iso = checkRingMap({RatMatrix::identity(r.ring.size())}, r.ring,
                                  buildWeightedRing(c, d));
    out["axiom_violations"] = axioms.violations;
    out["verified"] = axioms.ok() && iso;
  }
  return out;
}

Json runClassify(const std::string& input, int heightBound, int& exitCode) {
  const OrderInput in = orderFromJson(loadJson(input));
  const ClassificationResult r = classifyOrder(in, heightBound);
  Json out{{"command", "classify"}, {"degrees", degreesJson(in.d)}};
  const Json body = toJson(r, in);
  for (const auto& [k, v] : body.items()) out[k] = v;
  if (r.outcome == Outcome::Inconclusive) {
    out["error"] = std::string(toString(ErrorKind::UnsupportedDegreePattern));
    exitCode = kExitDomain;
  }
  return out;
}

Json runHomology(const std::string& degrees, const std::string& coeffs, const std::string& which) {
  const Degrees d = parseDegreeList(degrees);
  const CoefficientSequence c = coefficientsFromJson(loadJson(coeffs));
  const ChainComplex cx = buildBoundaryComplex(d, c);
  Json out{{"command", "homology"}, {"degrees", degreesJson(d)}, {"coefficients", toJson(c)["c"]}};
  out["homology"] = toJson(homology(cx), cx);
  if (which == "boundary") out["complex"] = toJson(cx);
  if (which == "eta" || which == "generators") {
    const ChainMap eta = buildEtaChainMap(d, c);
    const TopGenerators g = topGenerators(d, c);
    const int n = g.degree;
    if (which == "eta") {
      out["eta"] = toJson(eta);
      out["top_degree"] = n;
      out["induced_top"] = toJson(inducedOnHomology(eta, n));
      out["induced_on_u_v"] = toJson(inducedOnFreeHomology(eta, n, {g.u}, {g.v}));
      out["expected_multiplier"] = Int(c.c12() * c.c13() * c.c23() / c.pairLcm()).get_str();
    } else {
      const HomologyDegree src(eta.source, n), dst(eta.target, n);
      out["top_degree"] = n;
      out["u"] = chainToJson(g.u, eta.source, n);
      out["v"] = chainToJson(g.v, eta.target, n);
      out["u_class"] = toJson(src.classOf(g.u));
      out["v_class"] = toJson(dst.classOf(g.v));
    }
  }
  return out;
}

Json runVerify(const std::string& input, const std::string& degrees, const std::string& coeffs) {
  if (!input.empty() && (!degrees.empty() || !coeffs.empty()))
    throw UsageError("verify takes either --input or --degrees with --coeffs");
  if (!input.empty()) {
    const VerifiedOrder vo = verifyOrder(orderFromJson(loadJson(input)));
    return Json{{"command", "verify"}, {"ok", true}, {"structure", toJson(vo.ring)}};
  }
  if (degrees.empty() || coeffs.empty())
    throw UsageError("verify needs --input, or --degrees with --coeffs");
  const Degrees d = parseDegreeList(degrees);
  const CoefficientSequence c = coefficientsFromJson(loadJson(coeffs));
  const RingAxiomReport report = verifyRingAxioms(buildWeightedRing(c, d));
  return Json{{"command", "verify"}, {"ok", report.ok()}, {"violations", report.violations}};
}

Json runAlt2Section(const std::string& path) {
  Json j = loadJson(path);
  if (j.contains("matrix")) j = j.at("matrix");
  const IntMatrix m = intMatrixFromJson(j);
  const IntMatrix y = alt2Section(m);
  Json factors = Json::array();
  for (const auto& e : elementaryFactorization(m))
    factors.push_back({{"row", e.row + 1}, {"col", e.col + 1}, {"a", e.a.get_str()}});
  const IntMatrix check = alt2(y);
  return Json{{"command", "alt2-section"}, {"input", toJson(m)},
              {"factorization", factors},   {"Y", toJson(y)},
              {"alt2_of_Y", toJson(check)}, {"round_trip", check == m}};
}

Json runSelftestCommand(int& exitCode) {
  Json cases = Json::array();
  int failed = 0;
  for (const auto& c : runSelftest()) {
    if (!c.ok) ++failed;
    cases.push_back({{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
  }
  Json out{{"command", "selftest"},
           {"passed", static_cast<int>(cases.size()) - failed},
           {"failed", failed},
           {"cases", cases}};
  if (failed > 0) {
    out["error"] = "SelftestFailed";
    exitCode = kExitDomain;
  }
  return out;
}

}  // namespace

Degrees parseDegreeList(const std::string& text) {
  Degrees d{};
  std::stringstream ss(text);
  std::string item;
  std::size_t k = 0;
  while (std::getline(ss, item, ',')) {
    if (k == 3) throw Error(ErrorKind::InvalidInput, "expected three degrees: " + text);
    try {
      std::size_t used = 0;
      d[k] = std::stoi(item, &used);
      if (item.find_first_not_of(' ', used) != std::string::npos) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(ErrorKind::InvalidInput, "bad degree \"" + item + "\"");
    }
    ++k;
  }
  if (k != 3) throw Error(ErrorKind::InvalidInput, "expected three degrees: " + text);
  for (int x : d)
    if (x < 1) throw Error(ErrorKind::InvalidInput, "degrees must be positive");
  return d;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Weighted sphere-product rings: realization, homology and classification"};
  app.require_subcommand(1);
  std::string outputPath;
  app.add_option("--output", outputPath, "Write the JSON document to this file");

  std::string degrees, coeffs, input, matrix, which;
  bool verify = false;
  int heightBound = kDefaultHeightBound;

  auto* realize = app.add_subcommand("realize", "Ring of X(c, d) with its provenance");
  realize->add_option("--degrees", degrees, "d1,d2,d3")->required();
  realize->add_option("--coeffs", coeffs, "Coefficient sequence JSON")->required();
  realize->add_flag("--verify", verify, "Check against A(c, d)");

  auto* classify = app.add_subcommand("classify", "Classify an order in R");
  classify->add_option("--input", input, "Order JSON")->required();
  classify->add_option("--height-bound", heightBound, "Search height for odd blocks")
      ->check(CLI::PositiveNumber);

  auto* hom = app.add_subcommand("homology", "Homology of the weighted boundary model");
  hom->add_option("--degrees", degrees, "d1,d2,d3")->required();
  hom->add_option("--coeffs", coeffs, "Coefficient sequence JSON")->required();
  hom->add_option("--which", which, "Extra output")
      ->check(CLI::IsMember({"boundary", "eta", "generators"}));

  auto* ver = app.add_subcommand("verify", "Check ring axioms of A(c, d) or an order");
  ver->add_option("--input", input, "Order JSON");
  ver->add_option("--degrees", degrees, "d1,d2,d3");
  ver->add_option("--coeffs", coeffs, "Coefficient sequence JSON");

  auto* sect = app.add_subcommand("alt2-section", "Preimage of an SL(3,Z) matrix under Alt^2");
  sect->add_option("--matrix", matrix, "Matrix JSON")->required();

  auto* self = app.add_subcommand("selftest", "Run the built-in example suite");

  auto emit = [&](const Json& doc) {
    const std::string text = doc.dump(2) + "\n";
    if (outputPath.empty()) {
      out << text;
      return;
    }
    std::ofstream f(outputPath);
    if (!f) throw UsageError("cannot write " + outputPath);
    f << text;
  };

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    std::string message = e.what();
    if (message.empty()) message = e.get_name();
    out << Json{{"error", "UsageError"}, {"message", message}}.dump(2) << "\n";
    return kExitUsage;
  }

  int exitCode = kExitOk;
  try {
    Json doc;
    if (realize->parsed()) doc = runRealize(degrees, coeffs, verify);
    else if (classify->parsed()) doc = runClassify(input, heightBound, exitCode);
    else if (hom->parsed()) doc = runHomology(degrees, coeffs, which);
    else if (ver->parsed()) doc = runVerify(input, degrees, coeffs);
    else if (sect->parsed()) doc = runAlt2Section(matrix);
    else if (self->parsed()) doc = runSelftestCommand(exitCode);
    emit(doc);
  } catch (const UsageError& e) {
    out << Json{{"error", "UsageError"}, {"message", e.what()}}.dump(2) << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    out << Json{{"error", std::string(toString(e.kind()))}, {"message", e.what()}}.dump(2) << "\n";
    return kExitDomain;
  } catch (const std::exception& e) {
    err << "internal failure: " << e.what() << "\n";
    out << Json{{"error", "Internal"}, {"message", e.what()}}.dump(2) << "\n";
    return kExitDomain;
  }
  return exitCode;
}

}  // namespace wsp
