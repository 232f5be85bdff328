#include "instanton/cli/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <functional>
#include <optional>
#include <set>
#include <sstream>
#include <thread>

#include "instanton/cli/json_io.hpp"
#include "instanton/rho/rho.hpp"

namespace instanton::cli {
namespace {

struct Report {
  explicit Report(std::string name) : command(std::move(name)) {}

  std::string command;
  Json input = Json::object();
  Json results;
  std::optional<bool> verdict;
  Json notes = Json::array();
  /// Replaces the generic text rendering of results when set.
  std::function<void(std::ostream&)> text;
};

Json envelope(const Report& r) {
  Json j{{"tool", kToolName}, {"version", kToolVersion}, {"command", r.command}, {"input", r.input}};
  j["results"] = r.results;
  if (r.verdict) j["verdict"] = *r.verdict;
  j["notes"] = r.notes;
  return j;
}

// Indented "key: value" rendering of a report for --format text.
void render_text(const Json& j, std::ostream& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  auto scalar = [](const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  auto flat_array = [&scalar](const Json& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + scalar(v[i]);
    return s + "]";
  };
  auto is_flat = [](const Json& v) {
    return v.is_array() && std::all_of(v.begin(), v.end(), [](const Json& x) {
             return x.is_primitive() || (x.is_array() && std::all_of(x.begin(), x.end(), [](const Json& y) {
                                           return y.is_primitive();
                                         }));
           });
  };
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (value.is_primitive()) {
        out << pad << key << ": " << scalar(value) << "\n";
      } else if (is_flat(value)) {
        std::string s = "[";
        for (std::size_t i = 0; i < value.size(); ++i) {
          s += (i ? ", " : "") + (value[i].is_array() ? flat_array(value[i]) : scalar(value[i]));
        }
        out << pad << key << ": " << s << "]\n";
      } else {
        out << pad << key << ":\n";
        render_text(value, out, indent + 2);
      }
    }
  } else if (j.is_array()) {
    for (const auto& item : j) {
      if (item.is_primitive()) {
        out << pad << "- " << scalar(item) << "\n";
      } else {
        out << pad << "-\n";
        render_text(item, out, indent + 2);
      }
    }
  } else {
    out << pad << scalar(j) << "\n";
  }
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) parts.push_back(item);
  return parts;
}

std::int64_t parse_int(const std::string& s) {
  std::size_t used = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) throw Error(ErrorCode::InvalidArgument, "expected an integer", s);
  return v;
}

Triple parse_triple(const std::string& s) {
  const auto parts = split(s, ',');
  if (parts.size() != 3) throw Error(ErrorCode::InvalidArgument, "expected three comma-separated integers", s);
  return {parse_int(parts[0]), parse_int(parts[1]), parse_int(parts[2])};
}

// "7" or "7..199"; a range keeps only primes.
std::vector<std::int64_t> parse_prime_range(const std::string& s) {
  const auto dots = s.find("..");
  if (dots == std::string::npos) return {parse_int(s)};
  const std::int64_t lo = parse_int(s.substr(0, dots));
  const std::int64_t hi = parse_int(s.substr(dots + 2));
  if (lo > hi) throw Error(ErrorCode::InvalidArgument, "empty prime range", s);
  std::vector<std::int64_t> out;
  for (std::int64_t p = lo; p <= hi; ++p) {
    if (is_prime(p)) out.push_back(p);
  }
  if (out.empty()) throw Error(ErrorCode::InvalidArgument, "no primes in range", s);
  return out;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open file", path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::InvalidArgument, std::string("malformed JSON: ") + e.what(), path);
  }
}

ExtensionData points_extension(std::int64_t p, const std::string& path) {
  ExtensionData ext;
  ext.p = p;
  ext.points = points_from_json(read_json_file(path));
  return ext;
}

// ---------------------------------------------------------------- seifert

Report seifert_normalize(const std::string& triple, std::int64_t p) {
  Report r("seifert normalize");
  r.input = Json{{"a", triple}, {"p", p}};
  const SeifertManifold m = normalize(parse_triple(triple), p);
  r.results = to_json(m);
  r.results["text"] = m.to_text();
  r.results["euler_sum"] = to_json(m.euler_sum());
  return r;
}

Report seifert_quotient(const std::string& triple, std::int64_t p) {
  Report r("seifert quotient");
  r.input = Json{{"a", triple}, {"p", p}};
  r.results = to_json(quotient(normalize(parse_triple(triple)), p));
  return r;
}

// ---------------------------------------------------------------- flat

Report flat_enumerate(const std::string& triple) {
  Report r("flat enumerate");
  r.input = Json{{"a", triple}};
  Json list = Json::array();
  for (const auto& c : enumerate_irreducible(normalize(parse_triple(triple)))) list.push_back(to_json(c));
  r.results = list;
  r.notes.push_back("irreducible SU(2) flat connections up to conjugacy with exact Chern-Simons values");
  return r;
}

Report flat_cs(const std::string& triple, const std::optional<std::string>& labels,
               std::optional<std::int64_t> p, std::optional<std::int64_t> reducible) {
  Report r("flat cs");
  r.input = Json{{"a", triple}};
  const SeifertManifold sigma = normalize(parse_triple(triple));
  if (reducible) {
    if (!p) throw Error(ErrorCode::InvalidArgument, "--reducible needs --p");
    r.input["p"] = *p;
    r.input["reducible"] = *reducible;
    const QuotientSpace q = quotient(sigma, *p);
    const FlatConnection c = reducible_connection(q, *reducible);
    r.results = Json{{"cs", to_json(c.cs)}, {"minus_cs", to_json(c.minus_cs())},
                     {"holonomy", c.holonomy}, {"h0", c.h0}};
    return r;
  }
  if (!labels) throw Error(ErrorCode::InvalidArgument, "flat cs needs --triple or --reducible");
  r.input["triple"] = *labels;
  if (p) r.input["p"] = *p;
  r.results = to_json(cs_irreducible(sigma, parse_triple(*labels), p.value_or(1)));
  return r;
}

// ---------------------------------------------------------------- moduli

Report moduli_splittings(const std::string& triple, const std::string& charge, std::int64_t dim) {
  Report r("moduli splittings");
  r.input = Json{{"sigma", triple}, {"charge", charge}, {"dim", dim}};
  const SeifertManifold sigma = normalize(parse_triple(triple));
  Json list = Json::array();
  for (const auto& chain : enumerate_splittings(sphere_connections(sigma), Rational::parse(charge), dim)) {
    list.push_back(to_json(chain));
  }
  r.results = list;
  r.text = [list](std::ostream& os) {
    for (const auto& chain : list) {
      std::string pieces, dims, energies;
      for (const auto& piece : chain["pieces"]) {
        if (!pieces.empty()) pieces += " x ";
        pieces += piece["kind"] == "end"
                      ? "X(" + piece["target"].get<std::string>()
                      : "M(" + piece["source"].get<std::string>() + "," + piece["target"].get<std::string>();
        pieces += "; " + piece["energy"].get<std::string>() + ")";
        dims += (dims.empty() ? "" : ", ") + piece["dim"].dump();
        energies += (energies.empty() ? "" : ", ") + piece["energy"].get<std::string>();
      }
      os << "  " << chain["label"].get<std::string>() << "  " << pieces << "  dims (" << dims
         << ")  energies (" << energies << ")\n";
    }
  };
  r.notes.push_back("energy splittings of the moduli space on the E8 manifold, rows labeled in sorted order");
  return r;
}

Report moduli_holonomy(std::int64_t e, std::int64_t p) {
  Report r("moduli holonomy");
  r.input = Json{{"e", e}, {"p", p}};
  Json classes = Json::array();
  for (auto c : holonomy_filter(e, p)) classes.push_back(c);
  r.results = Json{{"classes", classes}};
  return r;
}

Report moduli_obstruction(const std::string& triple, const std::string& energy, std::int64_t p) {
  Report r("moduli obstruction");
  r.input = Json{{"sigma", triple}, {"energy", energy}, {"p", p}};
  const ObstructionVerdict v =
      invariant_connection_obstruction(Rational::parse(energy), normalize(parse_triple(triple)), p);
  r.results = Json{{"obstructed", v.obstructed}, {"quotient_energy", to_json(v.quotient_energy)},
                   {"reason", v.reason}};
  r.verdict = v.obstructed;
  return r;
}

// ---------------------------------------------------------------- rho

Json rho_entry(const QuotientSpace& q, std::int64_t l, const std::string& mode, int bits, bool& agree) {
  Json j{{"l", l}};
  std::optional<Rational> exact;
  if (mode != "numeric") {
    exact = rho_reducible(q, l);
    j["exact"] = to_json(*exact);
  }
  if (mode != "exact") {
    const NumericRho n = rho_reducible_numeric(q, l, bits);
    j["numeric"] = Json{{"approximate", n.approximate},
                        {"reconstructed", to_json(n.reconstructed)},
                        {"precision_bits", n.precision_bits},
                        {"denominator_bound", n.denominator_bound.get_str()}};
    if (exact) {
      const bool same = n.reconstructed == *exact;
      j["agree"] = same;
      agree = agree && same;
    }
  }
  return j;
}

Report rho_reducible_cmd(const std::string& triple, std::int64_t p, std::optional<std::int64_t> l,
                         const std::string& mode, int jobs) {
  if (mode != "exact" && mode != "numeric" && mode != "both") {
    throw Error(ErrorCode::InvalidArgument, "mode must be exact, numeric or both", mode);
  }
  Report r("rho reducible");
  r.input = Json{{"sigma", triple}, {"p", p}, {"mode", mode}};
  if (l) r.input["l"] = *l;
  const QuotientSpace q = quotient(normalize(parse_triple(triple)), p);
  const int bits = mode == "exact" ? 0 : precision_bits_from_env();
  std::vector<std::int64_t> ls;
  if (l) {
    ls.push_back(*l);
  } else {
    for (std::int64_t k = 0; k < p; ++k) ls.push_back(k);
  }
  std::vector<Json> entries(ls.size());
  std::vector<char> agree(ls.size(), 1);
  std::vector<std::optional<Error>> failures(ls.size());
  auto work = [&](std::size_t job, std::size_t stride) {
    for (std::size_t i = job; i < ls.size(); i += stride) {
      try {
        bool ok = true;
        entries[i] = rho_entry(q, ls[i], mode, bits, ok);
        agree[i] = ok;
      } catch (const Error& e) {
        failures[i] = e;
      }
    }
  };
  const auto stride = static_cast<std::size_t>(std::max(1, jobs));
  if (stride == 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> threads;
    for (std::size_t j = 0; j < stride; ++j) threads.emplace_back(work, j, stride);
    for (auto& t : threads) t.join();
  }
  for (const auto& f : failures) {
    if (f) throw *f;
  }
  const RhoConventions conv = rho_conventions(q);
  r.results = Json{{"quotient", q.to_text()},
                   {"conventions", Json{{"inner_range", conv.inner_range},
                                        {"m1_zero_column", conv.m1_zero_column},
                                        {"seifert_numerators", conv.seifert_numerators},
                                        {"field_order", conv.field_order}}},
                   {"values", entries}};
  if (mode == "both") {
    const bool all = std::all_of(agree.begin(), agree.end(), [](char c) { return c != 0; });
    r.results["agree"] = all;
    r.verdict = all;
  }
  if (mode != "exact") r.notes.push_back("numeric values are approximate; exact values come from cyclotomic arithmetic");
  return r;
}

// ---------------------------------------------------------------- gsig

Report gsig_check(std::int64_t p, const std::string& path, bool all_generators) {
  Report r("gsig check");
  r.input = Json{{"p", p}, {"points", path}};
  const ExtensionData ext = points_extension(p, path);
  const bool ok = gsig_identity_check(ext, all_generators);
  Json pts = Json::array();
  for (const auto& d : ext.points) pts.push_back(to_json(d.canonical(p)));
  r.results = Json{{"canonical_points", pts},
                   {"lefschetz", to_json(lefschetz_number(ext))},
                   {"eta", to_json(eta_plumbing(p))},
                   {"signature", ext.signature},
                   {"identity", ok}};
  if (all_generators) r.results["all_generators"] = true;
  r.verdict = ok;
  r.notes.push_back("exact G-signature identity L(t) - eta(t) = signature in Q(zeta_p)");
  return r;
}

Report gsig_congruences(std::int64_t p, const std::string& path, const std::string& reference) {
  if (reference != "e8") throw Error(ErrorCode::InvalidArgument, "unknown reference extension", reference);
  Report r("gsig congruences");
  r.input = Json{{"p", p}, {"points", path}, {"reference", reference}};
  const ExtensionData ext = points_extension(p, path);
  const CongruenceReport rep = congruence_residues(ext, e8_plumbing(p));
  r.results = to_json(rep);
  r.verdict = rep.all_true();
  r.notes.push_back("expected values are derived from the E8 plumbing reference by series expansion");
  return r;
}

Report gsig_prove_b(const std::string& range) {
  Report r("gsig prove-b");
  r.input = Json{{"p", range}};
  Json traces = Json::array();
  bool all = true;
  for (std::int64_t p : parse_prime_range(range)) {
    const ProofTrace t = prove_theorem_b(p);
    all = all && t.contradiction;
    traces.push_back(to_json(t));
  }
  r.results = traces;
  r.verdict = all;
  r.notes.push_back("a complete contradiction means no admissible isolated fixed-point data exist");
  return r;
}

Report gsig_search(std::int64_t p, const std::string& filters, int num_points, int jobs, double budget) {
  Report r("gsig search");
  SearchOptions opt;
  opt.num_points = num_points;
  opt.jobs = jobs;
  opt.budget = budget;
  Json names = Json::array();
  for (const auto& f : split(filters, ',')) {
    if (f.empty()) continue;
    opt.filters.insert(parse_search_filter(f));
  }
  for (auto f : opt.filters) names.push_back(to_string(f));
  r.input = Json{{"p", p}, {"filters", names}, {"points", num_points}};
  const SearchResult res = search_extensions(p, opt);
  Json sols = Json::array();
  for (const auto& s : res.solutions) {
    Json pts = Json::array();
    for (const auto& d : s) pts.push_back(Json::array({d.a, d.b}));
    sols.push_back(pts);
  }
  r.results = Json{{"classes", res.classes},
                   {"multisets", static_cast<std::int64_t>(res.multisets)},
                   {"count", res.solutions.size()},
                   {"solutions", sols}};
  r.text = [res](std::ostream& os) {
    os << "  classes: " << res.classes << "\n  multisets: " << static_cast<std::int64_t>(res.multisets)
       << "\n  count: " << res.solutions.size() << "\n";
    for (const auto& s : res.solutions) {
      os << "  ";
      for (const auto& d : s) os << " (" << d.a << "," << d.b << ")";
      os << "\n";
    }
  };
  return r;
}

// ---------------------------------------------------------------- replay

Json replay_step(const std::string& name, const std::string& reproduces, Json expected, Json actual) {
  const bool pass = expected == actual;
  return Json{{"step", name}, {"reproduces", reproduces}, {"expected", std::move(expected)},
              {"actual", std::move(actual)}, {"pass", pass}};
}

Report replay() {
  Report r("replay");
  r.input = Json{{"paper_tables", true}};
  Json steps = Json::array();
  const SeifertManifold sigma = normalize({2, 3, 5});

  {
    Json actual = Json::array();
    for (const auto& c : enumerate_irreducible(sigma)) {
      actual.push_back(Json{{"labels", to_json(c.labels)}, {"minus_cs", to_json(c.minus_cs())}});
    }
    Json expected = Json::array({Json{{"labels", Json::array({1, 2, 2})}, {"minus_cs", "49/120"}},
                                 Json{{"labels", Json::array({1, 2, 4})}, {"minus_cs", "1/120"}}});
    steps.push_back(replay_step("flat_connections", "flat-connection table of Sigma(2,3,5)",
                                expected, actual));
  }
  {
    Json actual = Json::array();
    for (const auto& chain : enumerate_splittings(sphere_connections(sigma), Rational(1), 5)) {
      Json e = Json::array();
      for (const auto& x : chain.energies()) e.push_back(to_json(x));
      actual.push_back(Json{{"label", chain.label}, {"dims", chain.dims()}, {"energies", e}});
    }
    Json expected = Json::array(
        {Json{{"label", "A"}, {"dims", {0, 5}}, {"energies", {"71/120", "49/120"}}},
         Json{{"label", "B"}, {"dims", {0, 4, 1}}, {"energies", {"71/120", "2/5", "1/120"}}},
         Json{{"label", "C"}, {"dims", {4, 1}}, {"energies", {"119/120", "1/120"}}},
         Json{{"label", "D"}, {"dims", {0, 5}}, {"energies", {"0", "1"}}}});
    steps.push_back(replay_step("energy_splittings",
                                "energy-splitting table for charge 1 and dimension 5", expected,
                                actual));
  }
  {
    ExtensionData ex;
    ex.p = 7;
    for (auto [a, b] : std::vector<std::pair<int, int>>{
             {1, 1}, {1, 1}, {1, 1}, {1, -3}, {1, -1}, {1, -1}, {2, 2}, {2, 2}, {3, 3}}) {
      ex.points.push_back({a, b, std::nullopt});
    }
    const CongruenceReport rep = congruence_residues(ex);
    Json actual{{"identity", gsig_identity_check(ex)},
                {"residues", {rep.residues[0].value(), rep.residues[1].value(), rep.residues[2].value()}}};
    Json expected{{"identity", true}, {"residues", {4, 4, 4}}};
    steps.push_back(replay_step("example_identity",
                                "nine fixed points at p = 7 solving the G-signature identity",
                                expected, actual));
  }
  {
    Json actual = Json::array();
    Json expected = Json::array();
    for (std::int64_t p = 7; p <= 97; ++p) {
      if (!is_prime(p)) continue;
      const CongruenceReport rep = congruence_residues(ExtensionData{p, {}, {}, -8, 0}, e8_plumbing(p));
      actual.push_back(Json{{"p", p},
                            {"constants", {to_json(rep.expected_exact[0]), to_json(rep.expected_exact[1]),
                                           to_json(rep.expected_exact[2])}},
                            {"twisted_rhs", twisted_congruence_residue(e8_plumbing(p), e8_plumbing(p)).rhs.value()}});
      expected.push_back(Json{{"p", p},
                              {"constants", {"1/30", "-269/15", "1712/15"}},
                              {"twisted_rhs", residue_of_rational(Rational(1, 30), p).value()}});
    }
    steps.push_back(replay_step("congruence_constants",
                                "rotation-number congruence constants from the E8 plumbing",
                                expected, actual));
  }
  {
    Json actual = Json::array();
    Json expected = Json::array();
    for (std::int64_t p = 7; p <= 199; ++p) {
      if (!is_prime(p)) continue;
      actual.push_back(Json{{"p", p}, {"contradiction", prove_theorem_b(p).contradiction}});
      expected.push_back(Json{{"p", p}, {"contradiction", true}});
    }
    steps.push_back(replay_step("no_extension",
                                "contradiction for isolated fixed-point extensions, primes 7 to 199",
                                expected, actual));
  }
  bool all = true;
  for (const auto& s : steps) all = all && s["pass"].get<bool>();
  r.results = steps;
  r.verdict = all;
  return r;
}

void mark_fallthrough(CLI::App* app) {
  app->fallthrough();
  for (CLI::App* sub : app->get_subcommands({})) mark_fallthrough(sub);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact invariants of Brieskorn spheres and G-signature obstruction checks", kToolName};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolName) + " " + kToolVersion);
  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  int jobs = 1;
  app.add_option("--jobs", jobs, "Worker threads for search and batch modes")->check(CLI::PositiveNumber);

  std::function<Report()> action;

  // seifert
  auto* seifert = app.add_subcommand("seifert", "Seifert invariants");
  seifert->require_subcommand(1);
  std::string s_triple;
  std::int64_t s_p = 1;
  auto* s_norm = seifert->add_subcommand("normalize", "Canonical Seifert invariants at level p");
  s_norm->add_option("a", s_triple, "Multiplicities a1,a2,a3")->required();
  s_norm->add_option("--p", s_p, "Level");
  s_norm->callback([&] { action = [&] { return seifert_normalize(s_triple, s_p); }; });
  auto* s_quot = seifert->add_subcommand("quotient", "Quotient by a free Z/p action");
  s_quot->add_option("a", s_triple, "Multiplicities a1,a2,a3")->required();
  s_quot->add_option("--p", s_p, "Prime")->required();
  s_quot->callback([&] { action = [&] { return seifert_quotient(s_triple, s_p); }; });

  // flat
  auto* flat = app.add_subcommand("flat", "Flat connections and Chern-Simons invariants");
  flat->require_subcommand(1);
  std::string f_triple;
  std::optional<std::string> f_labels;
  std::optional<std::int64_t> f_p, f_red;
  auto* f_enum = flat->add_subcommand("enumerate", "Irreducible flat connections");
  f_enum->add_option("a", f_triple, "Multiplicities a1,a2,a3")->required();
  f_enum->callback([&] { action = [&] { return flat_enumerate(f_triple); }; });
  auto* f_cs = flat->add_subcommand("cs", "Chern-Simons invariant of one connection");
  f_cs->add_option("a", f_triple, "Multiplicities a1,a2,a3")->required();
  f_cs->add_option("--triple", f_labels, "Rotation labels l1,l2,l3");
  f_cs->add_option("--p", f_p, "Level or quotient prime");
  f_cs->add_option("--reducible", f_red, "Reducible connection index k on the quotient");
  f_cs->callback([&] { action = [&] { return flat_cs(f_triple, f_labels, f_p, f_red); }; });

  // moduli
  auto* moduli = app.add_subcommand("moduli", "Moduli space dimensions and splittings");
  moduli->require_subcommand(1);
  std::string m_sigma = "2,3,5", m_charge = "1", m_energy;
  std::int64_t m_dim = 5, m_e = 0, m_p = 7;
  auto* m_split = moduli->add_subcommand("splittings", "Energy splittings of a moduli space");
  m_split->add_option("--sigma", m_sigma, "Multiplicities a1,a2,a3");
  m_split->add_option("--charge", m_charge, "Total charge");
  m_split->add_option("--dim", m_dim, "Moduli space dimension");
  m_split->callback([&] { action = [&] { return moduli_splittings(m_sigma, m_charge, m_dim); }; });
  auto* m_hol = moduli->add_subcommand("holonomy", "Holonomy congruence classes of an energy numerator");
  m_hol->add_option("--e", m_e, "Energy numerator")->required();
  m_hol->add_option("--p", m_p, "Prime")->required();
  m_hol->callback([&] { action = [&] { return moduli_holonomy(m_e, m_p); }; });
  auto* m_obs = moduli->add_subcommand("obstruction", "Invariant-connection obstruction");
  m_obs->add_option("--sigma", m_sigma, "Multiplicities a1,a2,a3");
  m_obs->add_option("--energy", m_energy, "Energy")->required();
  m_obs->add_option("--p", m_p, "Prime")->required();
  m_obs->callback([&] { action = [&] { return moduli_obstruction(m_sigma, m_energy, m_p); }; });

  // rho
  auto* rho = app.add_subcommand("rho", "Rho invariants of quotient flat connections");
  rho->require_subcommand(1);
  std::string r_sigma = "2,3,5", r_mode = "exact";
  std::int64_t r_p = 7;
  std::optional<std::int64_t> r_l;
  auto* r_red = rho->add_subcommand("reducible", "Rho invariant of the reducible connection with holonomy l");
  r_red->add_option("--sigma", r_sigma, "Multiplicities a1,a2,a3");
  r_red->add_option("--p", r_p, "Prime")->required();
  r_red->add_option("--l", r_l, "Holonomy index; all of 0..p-1 when omitted");
  r_red->add_option("--mode", r_mode, "exact, numeric or both");
  r_red->callback([&] { action = [&] { return rho_reducible_cmd(r_sigma, r_p, r_l, r_mode, jobs); }; });

  // gsig
  auto* gsig = app.add_subcommand("gsig", "G-signature identities, congruences and search");
  gsig->require_subcommand(1);
  std::int64_t g_p = 7;
  std::string g_points, g_reference = "e8", g_range, g_filters = "identity";
  bool g_all = false;
  int g_count = 9;
  double g_budget = 2e8;
  auto* g_check = gsig->add_subcommand("check", "Exact G-signature identity for point data");
  g_check->add_option("--p", g_p, "Prime")->required();
  g_check->add_option("--points", g_points, "Points file")->required();
  g_check->add_flag("--all-generators", g_all, "Repeat the check at every conjugate generator");
  g_check->callback([&] { action = [&] { return gsig_check(g_p, g_points, g_all); }; });
  auto* g_cong = gsig->add_subcommand("congruences", "Rotation-number congruences");
  g_cong->add_option("--p", g_p, "Prime")->required();
  g_cong->add_option("--points", g_points, "Points file")->required();
  g_cong->add_option("--reference", g_reference, "Reference extension (e8)");
  g_cong->callback([&] { action = [&] { return gsig_congruences(g_p, g_points, g_reference); }; });
  auto* g_prove = gsig->add_subcommand("prove-b", "Contradiction trace for isolated fixed points");
  g_prove->add_option("--p", g_range, "Prime or range lo..hi")->required();
  g_prove->callback([&] { action = [&] { return gsig_prove_b(g_range); }; });
  auto* g_search = gsig->add_subcommand("search", "Exhaustive search over fixed-point multisets");
  g_search->add_option("--p", g_p, "Prime")->required();
  g_search->add_option("--filters", g_filters, "identity,congruences,theorem-a,twisted");
  g_search->add_option("--points", g_count, "Number of fixed points");
  g_search->add_option("--budget", g_budget, "Largest search space to enumerate");
  g_search->callback([&] { action = [&] { return gsig_search(g_p, g_filters, g_count, jobs, g_budget); }; });

  // replay
  auto* rep = app.add_subcommand("replay", "Rerun the full verification chain");
  bool paper_tables = false;
  rep->add_flag("--paper-tables", paper_tables, "Reproduce all tables and checks")->required();
  rep->callback([&] { action = [&] { return replay(); }; });

  mark_fallthrough(&app);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::CallForVersion& v) {
    out << v.what() << "\n";
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  }

  const bool json = format == "json";
  std::string command;
  for (const auto& a : args) {
    if (a.rfind("--", 0) == 0) break;
    command += (command.empty() ? "" : " ") + a;
  }
  try {
    const Report report = action();
    if (json) {
      out << envelope(report).dump(2) << "\n";
    } else {
      out << kToolName << " " << kToolVersion << ": " << report.command << "\n";
      if (report.text) {
        report.text(out);
      } else {
        render_text(report.results, out, 2);
      }
      if (report.verdict) out << "verdict: " << (*report.verdict ? "true" : "false") << "\n";
      for (const auto& n : report.notes) out << "note: " << n.get<std::string>() << "\n";
    }
    return report.verdict.value_or(true) ? kOk : kVerdictFalse;
  } catch (const Error& e) {
    const int code = e.code() == ErrorCode::Internal ? kInternal : kUsage;
    if (json) {
      Json j{{"tool", kToolName}, {"version", kToolVersion}, {"command", command}, {"error", to_json(e)}};
      out << j.dump(2) << "\n";
    } else {
      err << "error [" << to_string(e.code()) << "]: " << e.what();
      if (!e.input().empty()) err << " (input: " << e.input() << ")";
      err << "\n";
    }
    return code;
  }
}

}  // namespace instanton::cli
