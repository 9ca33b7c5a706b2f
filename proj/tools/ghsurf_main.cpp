#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "ghsurf/cli.hpp"

namespace {

using nlohmann::json;

// "a,b,r" -> [a,b,r]
json parse_triple(const std::string& text) {
  std::istringstream in(text);
  std::vector<long long> vals;
  std::string part;
  while (std::getline(in, part, ',')) vals.push_back(std::stoll(part));
  if (vals.size() != 3) throw CLI::ValidationError("surface", "expected a comma triple a,b,r");
  return json::array({vals[0], vals[1], vals[2]});
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact classifier for cyclic-group Hirzebruch surfaces"};
  app.require_subcommand(0, 1);
  app.fallthrough();

  bool json_mode = false;
  bool batch_mode = false;
  app.add_flag("--json", json_mode, "emit JSON instead of tables");
  app.add_flag("--batch", batch_mode, "read JSON-line requests from stdin");

  long long n = 0, a = 0, b = 0, r = 0, g = 0, k = 0, p = 0, q = 0, w = 0;
  long long square = 0, bound = 50, cap = 64, kdot = 0, c0sq = 0;
  std::string s1, s2, variant = "minus-one", manifold = "odd", mlist;
  bool scan = false, use_c0sq = false;

  auto add_surface_flags = [&](CLI::App* cmd) {
    cmd->add_option("-n", n, "group order")->required();
    cmd->add_option("-a", a, "weight a")->required();
    cmd->add_option("-b", b, "weight b")->required();
    cmd->add_option("-r", r, "Hirzebruch index r")->required();
  };

  CLI::App* c_surface = app.add_subcommand("surface", "fixed-point data of F_r(a,b)");
  add_surface_flags(c_surface);
  CLI::App* c_signature = app.add_subcommand("signature", "fixed-point set invariant");
  add_surface_flags(c_signature);
  CLI::App* c_seifert = app.add_subcommand("seifert", "Seifert invariants (a rescaled to 1)");
  add_surface_flags(c_seifert);
  CLI::App* c_obstruction = app.add_subcommand("obstruction", "invariant (-1)-sphere detector");
  add_surface_flags(c_obstruction);
  CLI::App* c_normal = app.add_subcommand("normal-form", "canonical orbit representative");
  add_surface_flags(c_normal);

  CLI::App* c_orbit = app.add_subcommand("orbit", "move orbit as a graph");
  add_surface_flags(c_orbit);
  c_orbit->add_option("--cap", cap, "largest admitted n (default 64)");

  CLI::App* c_equiv = app.add_subcommand("equiv", "decide equivariant diffeomorphism");
  c_equiv->add_option("-n", n, "group order")->required();
  c_equiv->add_option("--s1", s1, "first surface a,b,r")->required();
  c_equiv->add_option("--s2", s2, "second surface a,b,r")->required();
  c_equiv->add_option("--cap", cap, "largest admitted n (default 64)");

  CLI::App* c_index = app.add_subcommand("index", "fixed-point index contribution");
  c_index->add_option("-n", n, "group order")->required();
  c_index->add_option("-p", p, "tangent weight");
  c_index->add_option("-q", q, "normal weight");
  c_index->add_option("-w", w, "bundle weight");
  c_index->add_flag("--scan", scan, "run the four-assignment integrality scan");
  c_index->add_option("-a", a, "weight a for --scan");

  CLI::App* c_dimension = app.add_subcommand("dimension", "orbifold moduli dimension");
  c_dimension->add_option("-n", n, "group order")->required();
  c_dimension->add_option("--m", mlist, "weights m11,m12,m21,m22")->required();
  auto* kdot_opt = c_dimension->add_option("--kdot", kdot, "K . C0");
  c_dimension->add_option("--c0sq", c0sq, "C0^2 (adjunction route)")->excludes(kdot_opt);

  CLI::App* c_cases = app.add_subcommand("cases", "section case table and congruence filter");
  c_cases->add_option("-n", n, "group order")->required();
  c_cases->add_option("--variant", variant, "minus-one (weight a) or minus-r (weights b, r')");
  c_cases->add_option("-a", a, "weight a (minus-one)");
  c_cases->add_option("-b", b, "weight b (minus-r)");
  c_cases->add_option("-r", r, "r' (minus-r)");

  CLI::App* c_conic = app.add_subcommand("conic", "conic-bundle minimality obstruction");
  c_conic->add_option("-g", g, "genus of the fixed bisection")->required();

  CLI::App* c_sum = app.add_subcommand("sum-oracle", "reciprocal sum, exact and numeric");
  c_sum->add_option("-n", n, "group order")->required();
  c_sum->add_option("-k", k, "exponent weight")->required();

  CLI::App* c_enum = app.add_subcommand("enumerate", "classes of given self-intersection");
  c_enum->add_option("--manifold", manifold, "odd or even");
  c_enum->add_option("--square", square, "target self-intersection")->required();
  c_enum->add_option("--bound", bound, "coefficient bound (default 50)");

  CLI11_PARSE(app, argc, argv);

  if (batch_mode) return ghsurf::cli::run_batch(std::cin, std::cout);
  if (app.get_subcommands().empty()) {
    std::cerr << app.help();
    return 1;
  }

  json req;
  try {
    CLI::App* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();
    req["command"] = name;
    if (sub == c_surface || sub == c_signature || sub == c_seifert || sub == c_obstruction ||
        sub == c_normal || sub == c_orbit) {
      req["n"] = n; req["a"] = a; req["b"] = b; req["r"] = r;
      if (sub == c_orbit) req["cap"] = cap;
    } else if (sub == c_equiv) {
      req["n"] = n;
      req["s1"] = parse_triple(s1);
      req["s2"] = parse_triple(s2);
      req["cap"] = cap;
    } else if (sub == c_index) {
      req["n"] = n;
      if (scan) { req["scan"] = true; req["a"] = a; }
      else { req["p"] = p; req["q"] = q; req["w"] = w; }
    } else if (sub == c_dimension) {
      req["n"] = n;
      std::istringstream in(mlist);
      json m = json::array();
      std::string part;
      while (std::getline(in, part, ',')) m.push_back(std::stoll(part));
      req["m"] = m;
      if (kdot_opt->count() > 0) req["k_dot_c0"] = kdot; else req["c0_square"] = c0sq;
    } else if (sub == c_cases) {
      req["n"] = n; req["variant"] = variant;
      if (variant == "minus-one") req["a"] = a;
      else { req["b"] = b; req["r"] = r; }
    } else if (sub == c_conic) {
      req["g"] = g;
    } else if (sub == c_sum) {
      req["n"] = n; req["k"] = k;
    } else if (sub == c_enum) {
      req["manifold"] = manifold; req["square"] = square; req["bound"] = bound;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  const ghsurf::cli::Response resp = ghsurf::cli::run(req);
  std::cout << ghsurf::cli::render(resp, json_mode) << "\n";
  return resp.exit_code;
}
