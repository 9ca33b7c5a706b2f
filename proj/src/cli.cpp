#include "ghsurf/cli.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include "ghsurf/cyclotomic.hpp"
#include "ghsurf/errors.hpp"
#include "ghsurf/homology.hpp"
#include "ghsurf/moves.hpp"
#include "ghsurf/numtheory.hpp"
#include "ghsurf/oracle.hpp"
#include "ghsurf/surface.hpp"
#include "ghsurf/swindex.hpp"

namespace ghsurf::cli {

namespace {

using nlohmann::json;

constexpr long long kDefaultOrbitOrderCap = 64;

json rational_json(const Rational& q) {
  if (is_integer(q) && q.get_num().fits_slong_p()) return q.get_num().get_si();
  return to_string(q);
}

json surface_json(const GHirzebruchSurface& s) { return json::array({s.n, s.a, s.b, s.r}); }

json state_json(long long n, const CanonState& st) {
  return json{{"a", st.a}, {"b", st.b}, {"exact", st.exact}, {"r", st.r}, {"surface", surface_json(state_surface(n, st))}};
}

json signature_json(const Signature& sig) {
  json pairs = json::array();
  for (const auto& p : sig.pairs) pairs.push_back(json::array({p[0], p[1]}));
  json curves = json::array();
  for (const auto& c : sig.curves) {
    json e{{"isotropy", c.isotropy}, {"fixed", c.fixed}};
    if (c.fixed) e["self_intersection"] = c.self_intersection;
    curves.push_back(e);
  }
  return json{{"parity", sig.parity == 1 ? "odd" : "even"}, {"pairs", pairs}, {"curves", curves}};
}

json step_json(const MoveStep& step) {
  json j{{"kind", to_string(step.kind)}};
  if (step.parameter) j["r_target"] = *step.parameter;
  return j;
}

long long get_int(const json& req, const std::string& key) {
  if (!req.contains(key) || !req[key].is_number_integer())
    throw validation_error("missing integer parameter: " + key);
  return req[key].get<long long>();
}

long long get_int_or(const json& req, const std::string& key, long long fallback) {
  if (!req.contains(key)) return fallback;
  if (!req[key].is_number_integer()) throw validation_error("parameter must be an integer: " + key);
  return req[key].get<long long>();
}

GHirzebruchSurface get_surface(const json& req, const std::string& key, long long n) {
  if (!req.contains(key) || !req[key].is_array() || req[key].size() != 3)
    throw validation_error("parameter " + key + " must be a triple [a,b,r]");
  return make_surface(n, req[key][0].get<long long>(), req[key][1].get<long long>(),
                      req[key][2].get<long long>());
}

GHirzebruchSurface get_surface_flags(const json& req) {
  return make_surface(get_int(req, "n"), get_int(req, "a"), get_int(req, "b"), get_int(req, "r"));
}

homology::Manifold get_manifold(const json& req) {
  const std::string m = req.value("manifold", "");
  if (m == "odd") return homology::Manifold::odd;
  if (m == "even") return homology::Manifold::even;
  throw validation_error("manifold must be \"odd\" or \"even\"");
}

struct Command {
  json input;
  json result;
  json citations;
  std::string table;
};

Command cmd_surface(const json& req) {
  const GHirzebruchSurface s = get_surface_flags(req);
  const FixedPointData fp = fixed_point_data(s);
  Command c;
  c.input = {{"surface", surface_json(s)}};
  json points = json::array();
  for (const auto& pt : fp.points)
    points.push_back(json{{"label", pt.label}, {"transverse", pt.transverse}, {"fiber", pt.fiber}});
  json iso;
  const std::array<const char*, 4> names = {"E0", "E1", "F0", "F1"};
  for (int i = 0; i < 4; ++i) iso[names[static_cast<std::size_t>(i)]] = fp.curve_isotropy[static_cast<std::size_t>(i)];
  json fixed = json::array();
  for (CurveId id : fp.fixed_curves) fixed.push_back(to_string(id));
  c.result = {{"points", points},
              {"curve_isotropy", iso},
              {"fixed_curves", fixed},
              {"pseudo_free", fp.pseudo_free},
              {"manifold", is_odd_manifold(s) ? "odd" : "even"}};
  c.citations = {"fixed-point-weight-table"};
  std::ostringstream t;
  t << "F_" << s.r << "(" << s.a << "," << s.b << "), n=" << s.n << "\n";
  for (const auto& pt : fp.points)
    t << "  " << pt.label << ": (" << pt.transverse << ", " << pt.fiber << ")\n";
  t << "  isotropy E0=" << fp.curve_isotropy[0] << " E1=" << fp.curve_isotropy[1] << " F0="
    << fp.curve_isotropy[2] << " F1=" << fp.curve_isotropy[3] << "\n";
  t << "  fixed curves:";
  if (fp.fixed_curves.empty()) t << " none";
  for (CurveId id : fp.fixed_curves) t << " " << to_string(id);
  t << "\n  pseudo-free: " << (fp.pseudo_free ? "yes" : "no");
  c.table = t.str();
  return c;
}

Command cmd_signature(const json& req) {
  const GHirzebruchSurface s = get_surface_flags(req);
  const Signature sig = invariant_signature(s);
  Command c;
  c.input = {{"surface", surface_json(s)}};
  c.result = signature_json(sig);
  c.citations = {"rotation-pair-canonical-form"};
  std::ostringstream t;
  t << "signature pairs:";
  for (const auto& p : sig.pairs) t << " (" << p[0] << "," << p[1] << ")";
  t << "\nmanifold: " << (sig.parity == 1 ? "odd" : "even");
  c.table = t.str();
  return c;
}

Command cmd_seifert(const json& req) {
  const GHirzebruchSurface s = get_surface_flags(req);
  const SeifertData d = seifert_data(s);
  Command c;
  c.input = {{"surface", surface_json(s)}};
  c.result = {{"n", d.n}, {"beta0", d.beta0}, {"beta1", d.beta1}, {"euler_e", d.euler_e}};
  c.citations = {"orbifold-circle-bundle-invariants"};
  std::ostringstream t;
  t << "beta0=" << d.beta0 << " beta1=" << d.beta1 << " e=" << d.euler_e;
  c.table = t.str();
  return c;
}

Command cmd_equiv(const json& req) {
  const long long n = get_int(req, "n");
  const long long order_cap = get_int_or(req, "cap", kDefaultOrbitOrderCap);
  if (n > order_cap)
    throw validation_error("equiv: n exceeds the cap (raise it with --cap)");
  const GHirzebruchSurface s1 = get_surface(req, "s1", n);
  const GHirzebruchSurface s2 = get_surface(req, "s2", n);
  const EquivVerdict v = decide_equivalence(s1, s2);
  Command c;
  c.input = {{"n", n}, {"s1", surface_json(s1)}, {"s2", surface_json(s2)}};
  c.citations = {"canonical-moves-c1-c6", "orbit-reachability"};
  std::ostringstream t;
  if (v.equivalent) {
    json path = json::array();
    for (const auto& step : v.path) path.push_back(step_json(step));
    c.result = {{"status", "equivalent"}, {"path", path}};
    t << "equivalent via";
    if (v.path.empty()) t << " the identity";
    for (const auto& step : v.path) {
      t << " " << to_string(step.kind);
      if (step.parameter) t << "(r'=" << *step.parameter << ")";
    }
  } else if (v.witness == EquivVerdict::Witness::signature_mismatch) {
    c.result = {{"status", "inequivalent"},
                {"witness", "signature-mismatch"},
                {"signatures", json::array({signature_json(v.signatures->first),
                                            signature_json(v.signatures->second)})}};
    t << "inequivalent (signature-mismatch)";
  } else {
    c.result = {{"status", "inequivalent"},
                {"witness", "orbit-exhausted"},
                {"orbit_sizes", json::array({v.orbit_sizes->first, v.orbit_sizes->second})}};
    t << "inequivalent (orbit-exhausted; orbit sizes " << v.orbit_sizes->first << "/"
      << v.orbit_sizes->second << ")";
  }
  c.table = t.str();
  return c;
}

Command cmd_orbit(const json& req) {
  const GHirzebruchSurface s = get_surface_flags(req);
  const long long order_cap = get_int_or(req, "cap", kDefaultOrbitOrderCap);
  if (s.n > order_cap)
    throw validation_error("orbit: n exceeds the cap (raise it with --cap)");
  const Orbit orb = orbit(s);
  Command c;
  c.input = {{"surface", surface_json(s)}};
  json states = json::array();
  for (const auto& st : orb.states) states.push_back(state_json(s.n, st));
  json edges = json::array();
  for (const auto& e : orb.edges) {
    json ej{{"from", e.from}, {"to", e.to}, {"kind", to_string(e.kind)}};
    if (e.parameter) ej["r_target"] = *e.parameter;
    edges.push_back(ej);
  }
  c.result = {{"size", orb.states.size()}, {"states", states}, {"edges", edges}};
  c.citations = {"canonical-moves-c1-c6", "orbit-reachability"};
  std::ostringstream t;
  t << "orbit size " << orb.states.size() << " (" << orb.edges.size() << " edges)";
  c.table = t.str();
  return c;
}

Command cmd_normal_form(const json& req) {
  const GHirzebruchSurface s = get_surface_flags(req);
  const CanonState nf = normal_form(s);
  Command c;
  c.input = {{"surface", surface_json(s)}};
  c.result = {{"state", state_json(s.n, nf)}};
  c.citations = {"canonical-moves-c1-c6", "orbit-reachability"};
  std::ostringstream t;
  t << "normal form: (a=" << nf.a << ", b=" << nf.b << ", r=" << nf.r
    << (nf.exact ? " exact)" : " mod 2n)");
  c.table = t.str();
  return c;
}

Command cmd_index(const json& req) {
  const long long n = get_int(req, "n");
  Command c;
  if (req.value("scan", false)) {
    const long long a = get_int(req, "a");
    const auto scan = swindex::integrality_scan(n, a);
    c.input = {{"n", n}, {"a", a}, {"scan", true}};
    json rows = json::array();
    std::ostringstream t;
    for (const auto& asg : scan) {
      rows.push_back(json{{"rotations", json::array({json::array({asg.rotations[0][0], asg.rotations[0][1]}),
                                                     json::array({asg.rotations[1][0], asg.rotations[1][1]})})},
                          {"dimension", rational_json(asg.dimension)},
                          {"integral", asg.integral}});
      t << "(" << asg.rotations[0][0] << "," << asg.rotations[0][1] << "),(" << asg.rotations[1][0]
        << "," << asg.rotations[1][1] << "): d = " << to_string(asg.dimension)
        << (asg.integral ? "  [integral]" : "") << "\n";
    }
    c.result = {{"assignments", rows}};
    c.citations = {"cyclotomic-fixed-point-sum"};
    c.table = t.str();
    return c;
  }
  if (req.contains("points")) {
    swindex::LineBundleSpec spec;
    spec.c1_square = get_int_or(req, "c1_square", 0);
    spec.c1_dot_k = get_int_or(req, "c1_dot_k", 0);
    for (const auto& p : req["points"]) {
      if (!p.is_array() || p.size() != 3)
        throw validation_error("each point must be a triple [p,q,w]");
      spec.points.push_back({p[0].get<long long>(), p[1].get<long long>(), p[2].get<long long>()});
    }
    const Rational d = swindex::virtual_dimension(spec, n);
    c.input = {{"n", n}, {"c1_square", spec.c1_square}, {"c1_dot_k", spec.c1_dot_k}, {"points", req["points"]}};
    c.result = {{"value", rational_json(d)}};
    c.citations = {"cyclotomic-fixed-point-sum"};
    c.table = "d = " + to_string(d);
    return c;
  }
  const long long p = get_int(req, "p"), q = get_int(req, "q"), w = get_int(req, "w");
  const Rational value = cyclo::index_contribution(n, p, q, w);
  c.input = {{"n", n}, {"p", p}, {"q", q}, {"w", w}};
  c.result = {{"value", rational_json(value)}};
  c.citations = {"cyclotomic-fixed-point-sum"};
  c.table = "I = " + to_string(value);
  return c;
}

Command cmd_dimension(const json& req) {
  const long long n = get_int(req, "n");
  if (!req.contains("m") || !req["m"].is_array() || req["m"].size() != 4)
    throw validation_error("dimension requires m = [m11,m12,m21,m22]");
  const swindex::WeightPair m1 = {req["m"][0].get<long long>(), req["m"][1].get<long long>()};
  const swindex::WeightPair m2 = {req["m"][2].get<long long>(), req["m"][3].get<long long>()};
  Command c;
  Rational d;
  long long k_dot_c0 = 0, c0_square = 0;
  if (req.contains("k_dot_c0")) {
    k_dot_c0 = get_int(req, "k_dot_c0");
    c0_square = -k_dot_c0 - 2;
    d = swindex::moduli_dimension(n, k_dot_c0, m1, m2);
  } else {
    c0_square = get_int(req, "c0_square");
    k_dot_c0 = -c0_square - 2;
    d = swindex::moduli_dimension_from_square(n, c0_square, m1, m2);
  }
  c.input = {{"n", n}, {"m", req["m"]}, {"k_dot_c0", k_dot_c0}, {"c0_square", c0_square}};
  c.result = {{"value", rational_json(d)}};
  c.citations = {"orbifold-dimension-formula", "adjunction-identity"};
  c.table = "d = " + to_string(d);
  return c;
}

Command cmd_cases(const json& req) {
  const long long n = get_int(req, "n");
  const std::string variant = req.value("variant", "minus-one");
  swindex::SectionCaseTable table;
  long long c_square = 0;
  if (variant == "minus-one") {
    table = swindex::section_case_table(n, get_int(req, "a"));
    c_square = -1;
  } else if (variant == "minus-r") {
    table = swindex::section_case_table(n, get_int(req, "b"), get_int(req, "r"));
    c_square = -table.r_prime;
  } else {
    throw validation_error("variant must be \"minus-one\" or \"minus-r\"");
  }
  Command c;
  c.input = {{"n", n}, {"variant", variant}};
  if (table.variant == swindex::CaseVariant::minus_one_sphere) c.input["a"] = table.a;
  else { c.input["b"] = table.b; c.input["r_prime"] = table.r_prime; }

  json rows = json::array();
  std::ostringstream t;
  for (const auto& row : table.cases) {
    json rj{{"label", std::string(1, row.label)},
            {"m1", json::array({row.m1[0], row.m1[1]})},
            {"m2", json::array({row.m2[0], row.m2[1]})},
            {"contradiction", row.contradiction}};
    if (!row.contradiction) rj["c0_square"] = row.c0_square;
    if (row.congruence) rj["congruence_mod_2n"] = *row.congruence;
    rows.push_back(rj);
    t << "(" << row.label << ") m=(" << row.m1[0] << "," << row.m1[1] << "),(" << row.m2[0] << ","
      << row.m2[1] << "): "
      << (row.contradiction ? std::string("contradiction") : "C0^2 = " + std::to_string(row.c0_square))
      << "\n";
  }
  c.result = {{"degenerate", table.degenerate}, {"cases", rows}};
  if (n > 2 && n % 2 == 0) {
    const auto parity = mod(c_square, 2) == 1 ? homology::Manifold::odd : homology::Manifold::even;
    const auto filtered = swindex::congruence_filter(parity, c_square, table);
    json surv = json::array(), elim = json::array();
    for (char l : filtered.survivors) surv.push_back(std::string(1, l));
    for (char l : filtered.eliminated) elim.push_back(std::string(1, l));
    c.result["filter"] = {{"survivor_c0_square", filtered.survivor_c0_square},
                          {"survivors", surv},
                          {"eliminated", elim},
                          {"c_square", c_square}};
    t << "filter survivor: C0^2 = " << filtered.survivor_c0_square;
  }
  c.citations = {"section-case-table", "square-congruence-filter"};
  c.table = t.str();
  return c;
}

Command cmd_obstruction(const json& req) {
  const GHirzebruchSurface s = get_surface_flags(req);
  const auto v = swindex::minus_one_sphere_obstruction(s);
  Command c;
  c.input = {{"surface", surface_json(s)}};
  if (v.unobstructed) {
    c.result = {{"status", "unobstructed"}, {"u", v.unit}, {"a", v.alpha}};
    std::ostringstream t;
    t << "unobstructed (u=" << v.unit << ", a=" << v.alpha << ")";
    c.table = t.str();
  } else {
    c.result = {{"status", "obstructed"}};
    c.table = "obstructed";
  }
  c.citations = {"rotation-pattern-detector"};
  return c;
}

Command cmd_conic(const json& req) {
  const auto v = homology::conic_minimality({get_int(req, "g")});
  Command c;
  c.input = {{"g", v.genus}};
  c.result = {{"minimal", v.minimal},
              {"genus", v.genus},
              {"singular_fibers", v.singular_fibers},
              {"equation", v.equation},
              {"reason", v.reason},
              {"parity_note", v.parity_note}};
  c.citations = {"conic-bundle-intersection-form", "integer-minimality-obstruction"};
  c.table = v.minimal ? "minimal as topological G-manifold" : "not minimal";
  return c;
}

Command cmd_sum_oracle(const json& req) {
  const long long n = get_int(req, "n");
  const long long k = get_int(req, "k");
  const Rational exact = cyclo::eval_sum_reciprocal(n, k);
  const std::string approx = oracle::sum_reciprocal_decimal(n, k);
  Command c;
  c.input = {{"n", n}, {"k", k}};
  c.result = {{"exact", rational_json(exact)}, {"approximate", approx}, {"tag", "approximate"}};
  c.citations = {"cyclotomic-reciprocal-sum", "high-precision-oracle"};
  c.table = "exact = " + to_string(exact) + "\napproximate = " + approx;
  return c;
}

Command cmd_enumerate(const json& req) {
  const auto manifold = get_manifold(req);
  const long long square = get_int(req, "square");
  const long long bound = get_int_or(req, "bound", 50);
  const auto classes = homology::enumerate_square_classes(manifold, square, bound);
  Command c;
  c.input = {{"manifold", to_string(manifold)}, {"square", square}, {"bound", bound}};
  json arr = json::array();
  for (const auto& cl : classes) arr.push_back(json::array({cl.x, cl.y}));
  c.result = {{"classes", arr}, {"count", classes.size()}};
  c.citations = {"intersection-form-enumeration"};
  std::ostringstream t;
  t << classes.size() << " classes:";
  for (const auto& cl : classes) t << " (" << cl.x << "," << cl.y << ")";
  c.table = t.str();
  return c;
}

}  // namespace

Response run(const json& request) {
  Response resp;
  std::string command;
  try {
    if (!request.is_object() || !request.contains("command") || !request["command"].is_string())
      throw validation_error("request must be an object with a \"command\" string");
    command = request["command"].get<std::string>();
    Command c;
    if (command == "surface") c = cmd_surface(request);
    else if (command == "signature") c = cmd_signature(request);
    else if (command == "seifert") c = cmd_seifert(request);
    else if (command == "equiv") c = cmd_equiv(request);
    else if (command == "orbit") c = cmd_orbit(request);
    else if (command == "normal-form") c = cmd_normal_form(request);
    else if (command == "index") c = cmd_index(request);
    else if (command == "dimension") c = cmd_dimension(request);
    else if (command == "cases") c = cmd_cases(request);
    else if (command == "obstruction") c = cmd_obstruction(request);
    else if (command == "conic") c = cmd_conic(request);
    else if (command == "sum-oracle") c = cmd_sum_oracle(request);
    else if (command == "enumerate") c = cmd_enumerate(request);
    else throw validation_error("unknown command: " + command);
    resp.payload = json{{"command", command}, {"input", c.input}, {"result", c.result}, {"citations", c.citations}};
    resp.table = c.table;
    while (!resp.table.empty() && resp.table.back() == '\n') resp.table.pop_back();
    resp.exit_code = 0;
  } catch (const consistency_error& e) {
    resp.payload = json{{"command", command}, {"error", e.what()}, {"code", 2}};
    resp.table = std::string("internal consistency failure: ") + e.what();
    resp.exit_code = 2;
  } catch (const std::exception& e) {
    resp.payload = json{{"command", command}, {"error", e.what()}, {"code", 1}};
    resp.table = std::string("error: ") + e.what();
    resp.exit_code = 1;
  }
  return resp;
}

int run_batch(std::istream& in, std::ostream& out) {
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    json req = json::parse(line, nullptr, false);
    if (req.is_discarded()) {
      out << json{{"error", "malformed request line"}, {"code", 1}}.dump() << "\n";
      continue;
    }
    out << run(req).payload.dump() << "\n";
  }
  return 0;
}

std::string render(const Response& resp, bool json_mode) {
  if (json_mode) return resp.payload.dump(2);
  return resp.table;
}

}  // namespace ghsurf::cli
