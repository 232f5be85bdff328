#include "instanton/cli/json_io.hpp"

namespace instanton {

Json to_json(const Rational& q) { return q.to_string(); }

Json to_json(const CyclotomicElement& x) {
  Json coeffs = Json::array();
  for (const auto& c : x.coeffs()) coeffs.push_back(to_json(c));
  return Json{{"order", x.order()}, {"coeffs", coeffs}};
}

Json to_json(const Triple& t) { return Json::array({t[0], t[1], t[2]}); }

Json to_json(const SeifertManifold& m) {
  Json j{{"a", to_json(m.a)}, {"b", to_json(m.b_pairs)}, {"p", m.level}};
  if (m.b != 0) j["b0"] = m.b;
  return j;
}

Json to_json(const QuotientSpace& q) {
  return Json{{"sphere", to_json(q.base)},
              {"p", q.p},
              {"pairs", Json::array({Json::array({q.base.a[0], q.pair_numerators()[0]}),
                                     Json::array({q.base.a[1], q.pair_numerators()[1]}),
                                     Json::array({q.base.a[2], q.pair_numerators()[2]})})},
              {"text", q.to_text()}};
}

Json to_json(const FlatConnection& c) {
  Json j{{"name", c.name},
         {"kind", std::string(to_string(c.kind))},
         {"labels", to_json(c.labels)},
         {"representative", to_json(c.representative)},
         {"holonomy", c.holonomy},
         {"central_sign", c.central_sign},
         {"cs", to_json(c.cs)},
         {"minus_cs", to_json(c.minus_cs())},
         {"h0", c.h0},
         {"h1", c.h1}};
  if (c.mu) j["mu"] = *c.mu;
  if (c.rho) j["rho"] = to_json(*c.rho);
  return j;
}

Json to_json(const IrreducibleCs& cs) {
  return Json{{"cs", to_json(cs.cs)},
              {"minus_cs", to_json(cs.minus_cs)},
              {"representative", to_json(cs.representative)},
              {"numerator", cs.numerator},
              {"convention", cs.convention}};
}

Json to_json(const SplittingChain& chain) {
  Json pieces = Json::array();
  for (const auto& piece : chain.pieces) {
    Json j{{"kind", piece.kind == PieceKind::End ? "end" : "cylinder"}};
    if (piece.kind == PieceKind::Cylinder) j["source"] = piece.source;
    j["target"] = piece.target;
    j["energy"] = to_json(piece.energy);
    j["dim"] = piece.dim;
    pieces.push_back(j);
  }
  Json energies = Json::array();
  for (const auto& e : chain.energies()) energies.push_back(to_json(e));
  return Json{{"label", chain.label},
              {"total_charge", to_json(chain.total_charge)},
              {"dims", chain.dims()},
              {"energies", energies},
              {"pieces", pieces}};
}

Json to_json(const FixedPointDatum& d) {
  Json j{{"a", d.a}, {"b", d.b}};
  if (d.lambda) j["lambda"] = to_json(*d.lambda);
  return j;
}

Json to_json(const CongruenceReport& report) {
  Json rows = Json::array();
  const std::array<const char*, 3> names{"sum 1/(ab)", "sum (a^2+b^2+1)/(ab)",
                                         "sum (a^4+b^4-5a^2b^2+3)/(ab)"};
  for (std::size_t i = 0; i < 3; ++i) {
    rows.push_back(Json{{"quantity", names[i]},
                        {"residue", report.residues[i].value()},
                        {"expected", report.expected[i].value()},
                        {"expected_exact", to_json(report.expected_exact[i])},
                        {"holds", report.verdicts[i]}});
  }
  Json j{{"p", report.p}, {"congruences", rows}};
  if (report.twisted) {
    j["twisted"] = Json{{"lhs", report.twisted->lhs.value()},
                        {"rhs", report.twisted->rhs.value()},
                        {"holds", report.twisted->verdict}};
  }
  j["all_hold"] = report.all_true();
  return j;
}

Json to_json(const ProofStep& step) {
  return Json{{"step", step.name},
              {"statement", step.statement},
              {"value", step.value},
              {"holds", step.holds}};
}

Json to_json(const ProofTrace& trace) {
  Json steps = Json::array();
  for (const auto& s : trace.steps) steps.push_back(to_json(s));
  return Json{{"p", trace.p},
              {"contradiction", trace.contradiction},
              {"requires_homological_triviality", trace.requires_homological_triviality},
              {"steps", steps}};
}

Json to_json(const Error& e) {
  return Json{{"code", std::string(to_string(e.code()))}, {"message", e.what()}, {"input", e.input()}};
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  throw Error(ErrorCode::InvalidArgument, "expected a rational string or integer", j.dump());
}

CyclotomicElement cyclotomic_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("order") || !j.contains("coeffs") ||
      !j["order"].is_number_integer() || !j["coeffs"].is_array()) {
    throw Error(ErrorCode::InvalidArgument, "expected {\"order\": n, \"coeffs\": [...]}", j.dump());
  }
  std::vector<Rational> coeffs;
  for (const auto& c : j["coeffs"]) coeffs.push_back(rational_from_json(c));
  return {j["order"].get<std::int64_t>(), std::move(coeffs)};
}

std::vector<FixedPointDatum> points_from_json(const Json& j) {
  if (!j.is_array()) {
    throw Error(ErrorCode::InvalidArgument, "points file must hold a JSON array", j.dump());
  }
  std::vector<FixedPointDatum> out;
  for (const auto& item : j) {
    if (!item.is_object() || !item.contains("a") || !item.contains("b") ||
        !item["a"].is_number_integer() || !item["b"].is_number_integer()) {
      throw Error(ErrorCode::InvalidArgument, "each point needs integer \"a\" and \"b\"",
                  item.dump());
    }
    FixedPointDatum d{item["a"].get<std::int64_t>(), item["b"].get<std::int64_t>(), std::nullopt};
    if (item.contains("lambda")) d.lambda = rational_from_json(item["lambda"]);
    out.push_back(d);
  }
  return out;
}

}  // namespace instanton
