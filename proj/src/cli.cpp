#include "coxinv/cli.hpp"

#include "coxinv/arrangement.hpp"
#include "coxinv/errors.hpp"
#include "coxinv/forms.hpp"
#include "coxinv/group_spec.hpp"
#include "coxinv/io.hpp"
#include "coxinv/oracle.hpp"
#include "coxinv/separator.hpp"
#include "coxinv/transnormal.hpp"

#include "CLI11.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <limits>
#include <memory>
#include <numbers>
#include <ostream>
#include <sstream>

namespace coxinv::cli {

namespace {

constexpr double kUnset = std::numeric_limits<double>::quiet_NaN();
constexpr std::size_t kAuditPoints = 50;

struct Options {
  std::string group;
  std::string group_file;
  std::uint64_t seed = 0;
  std::string out;
  std::size_t pairs = 0;
  double tol = kUnset;
  int radius = 0;
  std::string point;
};

struct Outcome {
  Json report;
  bool pass = true;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

GroupSpec read_spec(const Options& o) {
  if (o.group.empty() == o.group_file.empty()) throw UsageError("exactly one of --group and --group-file is required");
  if (!o.group.empty()) return parse_group_spec(o.group);
  std::ifstream in(o.group_file);
  if (!in) throw UsageError("cannot read group file '" + o.group_file + "'");
  std::stringstream text;
  text << in.rdbuf();
  return parse_group_spec(text.str());
}

double tol_or(const Options& o, double fallback) { return std::isnan(o.tol) ? fallback : o.tol; }
std::size_t pairs_or(const Options& o, std::size_t fallback) { return o.pairs ? o.pairs : fallback; }

Json header(const GroupSpec& spec, const CoxeterGroup& g) {
  return {{"group", Json::parse(to_string(spec))}, {"dim", g.dim()}};
}

Json component_json(const CoxeterGroup& g, std::size_t c) {
  const auto& comp = g.components()[c];
  return {{"label", comp.root_system.label()},
          {"affine", comp.affine},
          {"offset", comp.offset},
          {"rank", comp.root_system.rank()}};
}

// ---------------------------------------------------------------------------

Outcome info(const Options& o) {
  const GroupSpec spec = read_spec(o);
  const CoxeterGroup g = to_group(spec);
  Outcome r{header(spec, g)};
  Json comps = Json::array();
  std::vector<int> degrees;
  bool orders_match = true;
  for (std::size_t c = 0; c < g.components().size(); ++c) {
    Json j = component_json(g, c);
    const auto& rs = g.components()[c].root_system;
    const std::size_t order = g.finite_group(c).order();
    j[g.components()[c].affine ? "linear_part_order" : "order"] = order;
    j["classified_order"] = rs.classified_order();
    j["degrees"] = rs.classified_degrees();
    orders_match = orders_match && order == rs.classified_order();
    for (int d : rs.classified_degrees()) degrees.push_back(d);
    comps.push_back(j);
  }
  r.report["components"] = comps;
  r.report["finite"] = g.is_finite();
  r.report["trivial_dims"] = g.trivial_dims();
  r.report["degrees"] = degrees;
  if (g.is_finite()) {
    const std::size_t order = g.finite_order();
    const std::size_t chambers = count_chambers(arrangement_of(g));
    r.report["order"] = order;
    r.report["chambers"] = chambers;
    r.pass = orders_match && chambers == order;
  } else {
    r.report["order"] = nullptr;
    r.report["chambers"] = nullptr;
    r.pass = orders_match;
  }
  r.report["pass"] = r.pass;
  return r;
}

Outcome invariants(const Options& o) {
  const GroupSpec spec = read_spec(o);
  const CoxeterGroup g = to_group(spec);
  const SeparatingMap f = build_separating_map(g);
  Outcome r{header(spec, g)};

  Json systems = Json::array();
  bool jacobian_ok = true;
  for (std::size_t c = 0; c < f.systems.size(); ++c) {
    const auto& s = f.systems[c];
    const bool ok = s.jacobian_rank == static_cast<std::size_t>(g.components()[c].root_system.rank()) &&
                    std::abs(s.jacobian_det) > 1e-8;
    jacobian_ok = jacobian_ok && ok;
    Json j = to_json(s);
    j["component"] = c;
    j["jacobian_pass"] = ok;
    systems.push_back(j);
  }
  r.report["systems"] = systems;

  // Largest imaginary part of the trigonometric outputs over the invariance samples.
  const std::size_t samples = pairs_or(o, 500);
  double max_imag = 0;
  bool symmetric = true;
  for (const auto& out : f.outputs) {
    if (out.is_polynomial()) continue;
    symmetric = symmetric && out.trig().conjugate_symmetric(1e-12);
    for (std::size_t s = 0; s < samples; ++s) {
      SampleRng rng(o.seed, 501, s);
      max_imag = std::max(max_imag, std::abs(out.trig().evaluate(to_point(g.random_point(rng, 2.0))).imag()));
    }
  }
  const bool real = symmetric && max_imag < 1e-12;
  r.report["realness"] = real;
  r.report["max_imaginary"] = max_imag;

  const InvarianceReport inv = check_invariance(f, g, samples, tol_or(o, 1e-10), o.seed);
  r.report["invariance"] = to_json(inv);
  r.report["jacobian"] = jacobian_ok;
  r.pass = real && inv.pass && jacobian_ok;
  r.report["pass"] = r.pass;
  return r;
}

Outcome separate(const Options& o) {
  const GroupSpec spec = read_spec(o);
  const CoxeterGroup g = to_group(spec);
  const SeparatingMap f = build_separating_map(g);
  const std::size_t pairs = pairs_or(o, 1000);
  const InvarianceReport inv = check_invariance(f, g, pairs, 1e-10, o.seed);
  const SeparationReport sep = check_separation(f, g, pairs, tol_or(o, 1e-6), o.seed);
  const AuditReport audit = oracle_separation_audit(f, g, kAuditPoints, o.radius ? o.radius : 3, o.seed);
  Outcome r{header(spec, g)};
  r.report["seed"] = o.seed;
  r.report["map"] = content_hash(f);
  r.report["invariance_max"] = inv.max_deviation;
  r.report["separation_min"] = sep.separation_min;
  r.report["matched_max"] = sep.matched_max;
  r.report["invariance"] = to_json(inv);
  r.report["separation"] = to_json(sep);
  r.report["audit"] = to_json(audit);
  r.pass = inv.pass && sep.pass && audit.pass;
  r.report["pass"] = r.pass;
  return r;
}

Outcome transnormal(const Options& o) {
  const GroupSpec spec = read_spec(o);
  const CoxeterGroup g = to_group(spec);
  const SeparatingMap f = build_separating_map(g);
  const double tol = tol_or(o, 1e-8);
  const TransnormalReport t = check_transnormal(f, g, pairs_or(o, 300), tol, tol, o.seed);
  Outcome r{header(spec, g)};
  r.report["map"] = content_hash(f);
  r.report.update(to_json(t));
  r.pass = t.gram.pass && t.bracket.pass;
  r.report["pass"] = r.pass;
  return r;
}

Isometry plane_rotation(std::size_t n, double degrees) {
  const double t = degrees * std::numbers::pi / 180;
  Matrix m = Matrix::identity(n);
  m(0, 0) = Scalar(std::cos(t));
  m(0, 1) = Scalar(-std::sin(t));
  m(1, 0) = Scalar(std::sin(t));
  m(1, 1) = Scalar(std::cos(t));
  return {m, zeros(n)};
}

Outcome forms_check(const Options& o) {
  const GroupSpec spec = read_spec(o);
  const CoxeterGroup g = to_group(spec);
  auto f = std::make_shared<const SeparatingMap>(build_separating_map(g));
  const std::size_t m = f->outputs.size();
  const std::size_t samples = pairs_or(o, 100);
  const double tol = tol_or(o, 1e-10);

  auto y = [&](std::size_t i) { return Polynomial::variable(m, i); };
  const Polynomial one = Polynomial::constant(m, 1);
  std::vector<InvariantForm> forms;
  if (m >= 1) {
    Polynomial lambda = y(0);
    for (std::size_t i = 0; i < m; ++i) lambda = lambda + y(i).pow(2);
    forms.push_back(build_form(f, 0, {{{}, lambda}}));
    std::vector<FormTerm> terms;
    for (std::size_t i = 0; i < m; ++i) terms.push_back({{i}, y((i + 1) % m)});
    forms.push_back(build_form(f, 1, terms));
  }
  if (m >= 2) forms.push_back(build_form(f, 2, {{{0, 1}, one + y(m - 1).pow(2)}}));
  if (m >= 1) forms.push_back(jacobian_form(f));

  Outcome r{header(spec, g)};
  r.report["seed"] = o.seed;
  r.report["map"] = content_hash(*f);
  r.report["tolerance"] = tol;
  Json reports = Json::array();
  for (std::size_t k = 0; k < forms.size(); ++k) {
    double dev = 0;
    for (const auto& gen : g.generators()) dev = std::max(dev, pullback_deviation(forms[k], gen, samples, o.seed));
    const bool ok = dev < tol;
    r.pass = r.pass && ok;
    Json j = {{"degree", forms[k].degree()},
              {"jacobian", k + 1 == forms.size()},
              {"form", to_json(forms[k])},
              {"max_deviation", dev},
              {"pass", ok}};
    reports.push_back(j);
  }
  r.report["forms"] = reports;
  if (m >= 2) {
    // Not a group element: the deviation is reported, not gated.
    r.report["control"] = {{"rotation_degrees", 10},
                           {"deviation", pullback_deviation(forms.back(), plane_rotation(g.dim(), 10), samples, o.seed)}};
  }
  r.report["pass"] = r.pass;
  return r;
}

Outcome orbit(const Options& o) {
  const GroupSpec spec = read_spec(o);
  const CoxeterGroup g = to_group(spec);
  if (o.point.empty()) throw UsageError("--point is required");
  Vector x;
  try {
    x = vector_from_json(Json::parse(o.point));
  } catch (const Json::exception& e) {
    throw UsageError(std::string("--point is not a JSON array of numbers: ") + e.what());
  }
  if (x.size() != g.dim())
    throw UsageError("--point has " + std::to_string(x.size()) + " coordinates, the group acts on R^" +
                     std::to_string(g.dim()));
  const int radius = o.radius ? o.radius : 1;
  Outcome r{header(spec, g)};
  r.report["point"] = to_json(x);
  Json comps = Json::array();
  for (std::size_t c = 0; c < g.components().size(); ++c) {
    Json j = component_json(g, c);
    const Vector b = g.block(x, c);
    Json points = Json::array();
    if (g.components()[c].affine) {
      const BoundedOrbit orb = bounded_affine_orbit(g.affine_group(c), b, radius);
      j["radius"] = radius;
      for (const auto& p : orb.points)
        points.push_back({{"point", to_json(p.point)}, {"linear_index", p.linear_index}, {"lattice", p.lattice}});
    } else {
      for (const auto& p : finite_orbit(g.finite_group(c), b)) points.push_back(to_json(p));
    }
    j["size"] = points.size();
    j["points"] = points;
    comps.push_back(j);
  }
  r.report["components"] = comps;
  r.report["pass"] = true;
  return r;
}

Outcome arrangement(const Options& o) {
  const GroupSpec spec = read_spec(o);
  const CoxeterGroup g = to_group(spec);
  const Arrangement a = arrangement_of(g);
  Outcome r{header(spec, g)};
  r.report["type"] = a.kind() == ArrangementKind::Finite ? "finite" : "periodic";
  r.report["hyperplanes"] = a.base().size();
  r.report["arrangement"] = to_json(a);
  if (a.kind() == ArrangementKind::Finite)
    r.report["chambers"] = count_chambers(a);
  else
    r.report["chambers"] = nullptr;
  std::vector<double> radii{1, 10};
  if (o.radius) radii.push_back(o.radius);
  Json checks = Json::array();
  for (double rad : radii) {
    bool ok = true;
    for (const auto& gen : g.generators()) ok = ok && is_invariant(a, gen, rad);
    r.pass = r.pass && ok;
    checks.push_back({{"probe_radius", rad}, {"invariant", ok}});
  }
  r.report["invariance"] = checks;
  r.report["pass"] = r.pass;
  return r;
}

void error_json(std::ostream& err, const std::string& message) { err << Json{{"error", message}}.dump() << '\n'; }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Coxeter group invariants: construction and verification reports", "coxinv"};
  app.require_subcommand(1);
  Options o;

  struct Command {
    const char* name;
    const char* help;
    std::function<Outcome(const Options&)> fn;
  };
  const std::vector<Command> commands{
      {"info", "group order, degrees and chamber count", info},
      {"invariants", "generator systems with realness, invariance and Jacobian checks", invariants},
      {"separate", "invariance, separation and orbit-oracle audit of the separating map", separate},
      {"transnormal", "Gram, bracket and Laplacian checks", transnormal},
      {"forms-check", "pullback invariance of forms in the generator basis", forms_check},
      {"orbit", "orbit of --point (bounded by --radius for affine factors)", orbit},
      {"arrangement", "reflection arrangement and its invariance", arrangement},
  };
  std::vector<CLI::App*> subs;
  for (const auto& c : commands) {
    CLI::App* s = app.add_subcommand(c.name, c.help);
    s->add_option("--group", o.group, "group descriptor as inline JSON");
    s->add_option("--group-file", o.group_file, "file holding the group descriptor");
    s->add_option("--seed", o.seed, "sampling seed")->capture_default_str();
    s->add_option("--out", o.out, "write the report here instead of stdout");
    s->add_option("--pairs", o.pairs, "sample or pair count")->check(CLI::PositiveNumber);
    s->add_option("--tol", o.tol, "pass tolerance")->check(CLI::PositiveNumber);
    s->add_option("--radius", o.radius, "lattice radius for affine orbits")->check(CLI::Range(1, 6));
    s->add_option("--point", o.point, "point as a JSON array");
    subs.push_back(s);
  }

  if (!args.empty() && !args.front().starts_with('-') && !app.get_subcommand_no_throw(args.front())) {
    error_json(err, "unknown subcommand '" + args.front() + "'");
    return 2;
  }
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    error_json(err, e.what());
    return 2;
  }

  try {
    for (std::size_t i = 0; i < subs.size(); ++i) {
      if (!subs[i]->parsed()) continue;
      const Outcome result = commands[i].fn(o);
      const std::string text = result.report.dump(2) + "\n";
      if (o.out.empty()) {
        out << text;
      } else {
        std::ofstream file(o.out, std::ios::binary);
        if (!(file << text)) {
          error_json(err, "cannot write '" + o.out + "'");
          return 2;
        }
      }
      return result.pass ? 0 : 1;
    }
  } catch (const std::exception& e) {
    error_json(err, e.what());
    return 2;
  }
  error_json(err, "no subcommand given");
  return 2;
}

}  // namespace coxinv::cli
