#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "instanton/error.hpp"
#include "instanton/exactnum/cyclotomic.hpp"
#include "instanton/exactnum/rational.hpp"
#include "instanton/flatconn/flatconn.hpp"
#include "instanton/gsig/gsig.hpp"
#include "instanton/moduli/moduli.hpp"
#include "instanton/seifert/seifert.hpp"

namespace instanton {

/// Reports keep keys in insertion order so output is stable byte for byte.
using Json = nlohmann::ordered_json;

Json to_json(const Rational& q);
Json to_json(const CyclotomicElement& x);
Json to_json(const Triple& t);
/// {"a": [...], "b": [...], "p": level}, with "b0" added when b != 0.
Json to_json(const SeifertManifold& m);
Json to_json(const QuotientSpace& q);
Json to_json(const FlatConnection& c);
Json to_json(const IrreducibleCs& cs);
Json to_json(const SplittingChain& chain);
Json to_json(const FixedPointDatum& d);
Json to_json(const CongruenceReport& report);
Json to_json(const ProofStep& step);
Json to_json(const ProofTrace& trace);
Json to_json(const Error& e);

/// Inverse of to_json(const Rational&): accepts "num/den" strings and integers.
Rational rational_from_json(const Json& j);
CyclotomicElement cyclotomic_from_json(const Json& j);

/// Points file: a JSON array of {"a": int, "b": int, "lambda": "num/den"}
/// with lambda optional. Throws Error(InvalidArgument) on malformed input.
std::vector<FixedPointDatum> points_from_json(const Json& j);

}  // namespace instanton
