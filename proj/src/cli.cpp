#include "chernob/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "chernob/errors.hpp"
#include "chernob/oracle.hpp"

namespace chernob::cli {

namespace {

const char* const golden_problem = R"(# cusp surface with two form pairs
ring x, y, z;
variety: y^2 - x^3;
dim 2;
normalization (t, s) -> (t^2, t^3, s);
collection k=1: (0, x^3, z^2), (z^3, 0, x^2);
collection k=1: (y^2, z^3, 0), (0, y^3, z^2);
)";

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string format_geometry(const GeometryReport& g) {
  std::ostringstream os;
  os << "geometry:\n";
  for (std::size_t i = 0; i < g.prefix_dims.size(); ++i) {
    os << "  prefix " << i + 1 << ": dim " << g.prefix_dims[i] << " (expected " << g.expected_dims[i] << ", raw "
       << g.raw_prefix_dims[i] << ", component in S(X): " << (g.singular_component[i] ? "yes" : "no") << ")\n";
  }
  os << "  singular locus dim: " << g.singular_locus_dim << "\n";
  os << "  isolated: " << (g.isolated ? "yes" : "no") << "\n";
  return os.str();
}

RingPtr ring_from_vars(const std::string& vars) {
  std::vector<std::string> names;
  std::stringstream ss(vars);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto b = item.find_first_not_of(" \t");
    auto e = item.find_last_not_of(" \t");
    names.push_back(b == std::string::npos ? std::string() : item.substr(b, e - b + 1));
  }
  return make_ring(names);
}

Ideal ideal_from_args(const RingPtr& ring, const std::vector<std::string>& polys) {
  std::vector<Polynomial> gens;
  for (const auto& p : polys) gens.push_back(parse_poly(p, ring));
  return Ideal(ring, std::move(gens));
}

struct SelftestCase {
  std::string name;
  bool pass;
  std::string detail;
};

int selftest(std::ostream& out, int cap, std::uint64_t seed) {
  std::vector<SelftestCase> cases;
  bool not_stabilized = false;

  ProblemSpec golden = parse_input_file(golden_problem);
  ChernOptions opts;
  opts.seed = seed;
  opts.route = Route::both;
  ChernReport rep = chern_surface(golden.variety, golden.collection, opts);
  cases.push_back({"golden cusp surface, route both", rep.final_value == 47, std::to_string(rep.final_value)});

  auto check_colength = [&](const std::string& name, const Ideal& ideal) {
    ExtendedCount main = colength(ideal, Locality::local);
    auto trunc = oracle::colength_truncation(ideal, cap);
    if (!trunc) {
      not_stabilized = true;
      cases.push_back({name, false, "truncation did not stabilize by degree " + std::to_string(cap)});
      return;
    }
    const bool ok = main.is_finite() && main.value() == trunc->value;
    cases.push_back({name, ok, main.to_string() + " vs truncation " + std::to_string(trunc->value)});
  };
  RingPtr r2 = make_ring({"x", "y"});
  RingPtr r3 = make_ring({"x", "y", "z"});
  check_colength("colength (x^2, y^2)", ideal_from_args(r2, {"x^2", "y^2"}));
  check_colength("colength (x, y, z)", ideal_from_args(r3, {"x", "y", "z"}));
  check_colength("colength (x^2 - x^3, y)", ideal_from_args(r2, {"x^2 - x^3", "y"}));
  check_colength("colength (3x^2, -2y)", ideal_from_args(r2, {"3x^2", "-2y"}));
  SeededRng rng(seed);
  for (int i = 0; i < 5;) {
    Ideal ideal(r2, {oracle::random_polynomial(r2, rng, 2, 4, 3, 5), oracle::random_polynomial(r2, rng, 2, 4, 3, 5)});
    ExtendedCount c = colength(ideal, Locality::local);
    if (!c.is_finite() || c.value() > 16) continue;
    check_colength("colength random instance " + std::to_string(i++), ideal);
  }

  auto check_imult = [&](const std::string& name, const Polynomial& f, const Polynomial& g) {
    ExtendedCount main = imult_plane(f, g);
    try {
      std::uint64_t res = oracle::imult_resultant(f, g, seed);
      cases.push_back({name, main.is_finite() && main.value() == res, main.to_string() + " vs resultant " + std::to_string(res)});
    } catch (const Error& e) {
      cases.push_back({name, false, e.what()});
    }
  };
  RingPtr tz = make_ring({"t", "z"});
  check_imult("imult golden pullback", parse_poly("z^2*(2t^5+3z^3)", tz), parse_poly("-3t^11+2z^5", tz));
  for (int i = 0; i < 5;) {
    Polynomial f = oracle::random_polynomial(tz, rng, 1, 4, 3, 5);
    Polynomial g = oracle::random_polynomial(tz, rng, 1, 4, 3, 5);
    if (!imult_plane(f, g).is_finite()) continue;
    try {
      (void)oracle::resultant_order(f, g, 7);
    } catch (const Error&) {
      continue;  // shares a component away from the origin
    }
    check_imult("imult random pair " + std::to_string(i++), f, g);
  }

  bool all = true;
  for (const auto& c : cases) {
    out << (c.pass ? "PASS " : "FAIL ") << c.name << ": " << c.detail << "\n";
    all = all && c.pass;
  }
  if (not_stabilized) return exit_cap;
  return all ? exit_ok : exit_disagreement;
}

}  // namespace

std::string format_report_text(const ChernReport& report) {
  std::ostringstream os;
  os << format_geometry(report.geometry);
  os << "method: " << to_string(report.method) << "\n";
  os << "terms:\n";
  for (const auto& t : report.terms) {
    os << "  " << t.label << " = " << t.value;
    if (t.seed) os << "  (seed " << *t.seed << ")";
    os << "\n";
  }
  os << "seeds:";
  for (auto s : report.seeds) os << " " << s;
  os << "\n";
  for (const auto& w : report.warnings) os << "warning: " << w << "\n";
  os << "final: " << report.final_value << "\n";
  return os.str();
}

std::string format_report_json(const ChernReport& report) {
  nlohmann::ordered_json j;
  j["method"] = to_string(report.method);
  j["terms"] = nlohmann::ordered_json::array();
  for (const auto& t : report.terms) {
    nlohmann::ordered_json term;
    term["label"] = t.label;
    term["value"] = t.value;
    term["seed"] = t.seed ? nlohmann::ordered_json(*t.seed) : nlohmann::ordered_json(nullptr);
    j["terms"].push_back(std::move(term));
  }
  j["geometry"]["prefix_dims"] = report.geometry.prefix_dims;
  j["geometry"]["expected_dims"] = report.geometry.expected_dims;
  j["geometry"]["isolated"] = report.geometry.isolated;
  j["final"] = report.final_value;
  j["seeds"] = report.seeds;
  j["warnings"] = report.warnings;
  return j.dump(2) + "\n";
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Local Chern obstructions of collections of 1-forms on singular germs"};
  app.name("chernob");
  app.require_subcommand(1);

  std::string file, vars, format = "text", route_name = "colength", method = "auto";
  std::uint64_t seed = 1;
  int trials = 3, bound = 10;
  std::optional<int> cap;
  bool global_mode = false, local_mode = false;
  std::vector<std::string> polys;

  auto add_chern_flags = [&](CLI::App* sub) {
    sub->add_option("--seed", seed, "base seed for generic forms");
    sub->add_option("--trials", trials, "number of generic trials")->check(CLI::PositiveNumber);
    sub->add_option("--bound", bound, "coefficient bound for generic forms")->check(CLI::PositiveNumber);
  };
  auto add_locality = [&](CLI::App* sub) {
    auto* g = sub->add_flag("--global", global_mode, "work in the polynomial ring");
    auto* l = sub->add_flag("--local", local_mode, "work at the origin (default)");
    g->excludes(l);
    sub->add_option("--cap", cap, "pair degree cap");
  };

  auto* compute = app.add_subcommand("compute", "Chern obstruction of an input file");
  compute->add_option("file", file)->required();
  add_chern_flags(compute);
  compute->add_option("--route", route_name, "surface route")->check(CLI::IsMember({"colength", "normalization", "both"}));
  compute->add_option("--method", method, "pipeline")->check(CLI::IsMember({"auto", "icis", "surface"}));
  compute->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* ind = app.add_subcommand("ind", "index ind_{X,0} of the collection");
  ind->add_option("file", file)->required();

  auto* check = app.add_subcommand("check", "dimension diagnostics of the special loci");
  check->add_option("file", file)->required();

  auto* imult = app.add_subcommand("imult", "intersection multiplicity of two plane curves at 0");
  imult->add_option("--vars", vars)->required();
  imult->add_option("polys", polys)->required()->expected(2);

  auto* colen = app.add_subcommand("colength", "colength of an ideal");
  colen->add_option("--vars", vars)->required();
  colen->add_option("polys", polys)->required();
  add_locality(colen);

  auto* dimension = app.add_subcommand("dim", "Krull dimension of the quotient");
  dimension->add_option("--vars", vars)->required();
  dimension->add_option("polys", polys);
  add_locality(dimension);

  auto* gb = app.add_subcommand("gb", "standard basis");
  gb->add_option("--vars", vars)->required();
  gb->add_option("polys", polys)->required();
  add_locality(gb);

  auto* self = app.add_subcommand("selftest", "cross-check the engine against the oracles");
  int trunc_cap = oracle::default_truncation_cap;
  self->add_option("--cap", trunc_cap, "truncation degree cap")->check(CLI::Range(2, 200));
  self->add_option("--seed", seed);

  // Every option is long except -h, so a single dash starts a polynomial
  // such as "-x^2 + y". The leading blank keeps CLI11 from reading a flag.
  std::vector<std::string> reversed;
  for (auto it = args.rbegin(); it != args.rend(); ++it) {
    const std::string& a = *it;
    const bool negative = a.size() > 1 && a[0] == '-' && a[1] != '-' && a != "-h";
    reversed.push_back(negative ? " " + a : a);
  }
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    const Locality mode = global_mode ? Locality::global : Locality::local;
    if (*compute || *ind || *check) {
      ProblemSpec spec = parse_input_file(read_file(file));
      if (*ind) {
        out << "ind = " << ind_point(spec.variety, spec.collection).to_string() << "\n";
        return exit_ok;
      }
      if (*check) {
        GeometryReport g = geometry_checks(spec.variety, spec.collection);
        out << format_geometry(g);
        return g.isolated ? exit_ok : exit_hypothesis;
      }
      ChernOptions opts;
      opts.seed = seed;
      opts.trials = trials;
      opts.bound = bound;
      opts.route = route_name == "both" ? Route::both
                   : route_name == "normalization" ? Route::normalization
                                                   : Route::colength;
      ChernReport report = method == "icis"      ? chern_icis(spec.variety, spec.collection, opts)
                           : method == "surface" ? chern_surface(spec.variety, spec.collection, opts)
                                                 : compute_chern(spec.variety, spec.collection, opts);
      if (format == "json") {
        out << format_report_json(report);
      } else {
        out << "input:\n" << format_problem(spec);
        out << format_report_text(report);
      }
      return exit_ok;
    }
    if (*imult) {
      RingPtr ring = ring_from_vars(vars);
      out << imult_plane(parse_poly(polys[0], ring), parse_poly(polys[1], ring)).to_string() << "\n";
      return exit_ok;
    }
    if (*colen || *dimension || *gb) {
      RingPtr ring = ring_from_vars(vars);
      Ideal ideal = ideal_from_args(ring, polys);
      StandardBasis sb = standard_basis(ideal, order_for(mode), BasisOptions{cap});
      if (*colen) out << colength(sb).to_string() << "\n";
      if (*dimension) out << krull_dimension(sb) << "\n";
      if (*gb)
        for (const auto& b : sb.basis) out << to_string(b) << "\n";
      return exit_ok;
    }
    if (*self) return selftest(out, trunc_cap, seed);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return exit_parse;
  } catch (const HypothesisViolation& e) {
    err << "hypothesis violation: " << e.what() << "\n";
    return exit_hypothesis;
  } catch (const CapExceeded& e) {
    err << "cap exceeded: " << e.what() << "\n";
    return exit_cap;
  } catch (const RouteDisagreement& e) {
    err << "route disagreement: " << e.what() << "\n";
    return exit_disagreement;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  }
  return exit_usage;
}

}  // namespace chernob::cli
