#pragma once

// JSON encodings. Integers and rationals are decimal strings ("-12", "3/4")
// so that arbitrary precision survives any parser.

#include <json.hpp>

#include <string>

#include "wsp/chain.hpp"
#include "wsp/classify.hpp"
#include "wsp/realize.hpp"
#include "wsp/ring.hpp"

namespace wsp {

using Json = nlohmann::ordered_json;

/// Accepts a decimal string or a JSON integer; throws InvalidInput.
Int parseInt(const Json& j);
/// Accepts "p", "p/q" or a JSON integer; throws InvalidInput.
Rat parseRat(const Json& j);

Json toJson(const IntMatrix& m);
Json toJson(const RatMatrix& m);
IntMatrix intMatrixFromJson(const Json& j);
RatMatrix ratMatrixFromJson(const Json& j);
Json toJson(const IntVector& v);
Json toJson(const RatVector& v);

/// {"c": {"12": ..., "13": ..., "23": ..., "123": ...}}; absent keys mean 1.
Json toJson(const CoefficientSequence& c);
CoefficientSequence coefficientsFromJson(const Json& j);

Json toJson(const StructRing& ring);
Json toJson(const ChainComplex& c);
Json toJson(const ChainMap& f);
Json toJson(const HomologyResult& h, const ChainComplex& c);
/// A chain as {label: coefficient} over its nonzero entries.
Json chainToJson(const IntVector& v, const ChainComplex& c, int n);

/// {"degrees": [d1,d2,d3], "names": [...]?, "generators": [...]} where each
/// generator is an array of 8 mask-indexed rationals or an object keyed by
/// subset digits ("" or "0" for the unit).
OrderInput orderFromJson(const Json& j);
Json toJson(const OrderInput& in);
Json toJson(const ClassificationResult& r, const OrderInput& in);
Json toJson(const RealizedRing& r);
Json toJson(const LesReport& r);

/// Throws InvalidInput when the file cannot be read or parsed.
Json readJsonFile(const std::string& path);

}  // namespace wsp
