// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include "coxinv/arrangement.hpp"
#include "coxinv/cli.hpp"
#include "coxinv/errors.hpp"
#include "coxinv/forms.hpp"
#include "coxinv/oracle.hpp"
#include "coxinv/separator.hpp"
#include "coxinv/transnormal.hpp"

#include "test_support.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <map>
#include <numbers>
#include <sstream>

using namespace coxinv;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

std::string fmt(double v) {
  std::ostringstream s;
  s.precision(3);
  s << v;
  return s.str();
}

struct Spec {
  RootType type;
  int rank;
  int m = 0;
};

const std::vector<Spec> kFiniteGroups{
    {RootType::A, 1}, {RootType::A, 2}, {RootType::A, 3}, {RootType::A, 4}, {RootType::B, 2},     {RootType::B, 3},
    {RootType::C, 3}, {RootType::D, 4}, {RootType::G, 2}, {RootType::I2, 2, 2}, {RootType::I2, 2, 3},
    {RootType::I2, 2, 4}, {RootType::I2, 2, 5}, {RootType::I2, 2, 6}, {RootType::I2, 2, 7}, {RootType::I2, 2, 8}};

const std::vector<Spec> kAffineGroups{{RootType::A, 1}, {RootType::A, 2}, {RootType::B, 2}, {RootType::G, 2}};

RootSystem rs_of(const Spec& s) { return build_root_system(s.type, s.rank, s.m); }

// Orders from the classification tables, written out independently.
std::size_t expected_order(const Spec& s) {
  auto fact = [](int n) {
    std::size_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::size_t>(i);
    return f;
  };
  switch (s.type) {
    case RootType::A: return fact(s.rank + 1);
    case RootType::B:
    case RootType::C: return (std::size_t{1} << s.rank) * fact(s.rank);
    case RootType::D: return (std::size_t{1} << (s.rank - 1)) * fact(s.rank);
    case RootType::G: return 12;
    case RootType::I2: return static_cast<std::size_t>(2 * s.m);
    default: return 0;
  }
}

CoxeterGroup finite(const Spec& s) { return CoxeterGroup::finite(rs_of(s)); }
CoxeterGroup affine(const Spec& s) { return CoxeterGroup::affine(rs_of(s)); }

SeparatingMap corrupt(SeparatingMap f) {
  for (auto& o : f.outputs) {
    if (o.is_polynomial()) continue;
    TrigInvariant t = o.trig();
    t.erase_term(t.terms().begin()->first);
    o = Invariant(t);
    return f;
  }
  throw Error("no trigonometric output to corrupt");
}

// ---------------------------------------------------------------------------

bool group_orders(std::string& detail) {
  const auto start = Clock::now();
  bool ok = true;
  std::size_t checked = 0;
  for (const auto& s : kFiniteGroups) {
    const RootSystem rs = rs_of(s);
    const FiniteCoxeterGroup w(rs);
    const std::size_t closure = oracle::group_closure(oracle::doubles(rs.simple_roots())).size();
    const std::size_t want = expected_order(s);
    if (w.order() != want || closure != want || rs.classified_order() != want) {
      ok = false;
      detail += rs.label() + " enumerated " + std::to_string(w.order()) + " expected " + std::to_string(want) + "; ";
    }
    ++checked;
  }
  const double t = seconds_since(start);
  detail += std::to_string(checked) + " groups, " + fmt(t) + " s";
  return ok && t < 10;
}

bool decomposition(std::string& detail) {
  const std::vector<Spec> pool{{RootType::A, 1}, {RootType::A, 2}, {RootType::A, 3}, {RootType::B, 2},
                               {RootType::B, 3}, {RootType::C, 3}, {RootType::G, 2}, {RootType::D, 4}};
  bool ok = true;
  for (std::uint64_t trial = 0; trial < 5; ++trial) {
    SampleRng rng(2, 0, trial);
    const auto count = static_cast<std::size_t>(rng.integer(2, 3));
    std::vector<CoxeterGroup::Factor> factors;
    std::map<std::string, int> labels;
    std::size_t rank_sum = 0;
    for (std::size_t k = 0; k < count; ++k) {
      const Spec s = pool[static_cast<std::size_t>(rng.integer(0, static_cast<long long>(pool.size()) - 1))];
      factors.push_back({rs_of(s), false});
      std::string label = factors.back().root_system.label();
      if (label[0] == 'C') label[0] = 'B';
      ++labels[label];
      rank_sum += static_cast<std::size_t>(s.rank);
    }
    const auto trivial = static_cast<std::size_t>(rng.integer(0, 2));
    const CoxeterGroup g(factors, trivial);
    const std::size_t n = g.dim();

    // Scramble coordinates by a seeded permutation so the blocks are not contiguous.
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    for (std::size_t i = n - 1; i > 0; --i)
      std::swap(perm[i], perm[static_cast<std::size_t>(rng.integer(0, static_cast<long long>(i)))]);
    Matrix p(n, n);
    for (std::size_t i = 0; i < n; ++i) p(perm[i], i) = Scalar(1);
    std::vector<Isometry> gens;
    for (const auto& s : g.linear_generators()) gens.push_back({p * s.linear * p.transpose(), zeros(n)});

    const OrthogonalDecomposition d = decompose(gens, n);
    std::map<std::string, int> found;
    std::vector<Vector> all = d.fixed_basis;
    std::size_t factor_dims = 0, assigned = 0;
    for (const auto& f : d.factors) {
      ++found[f.label];
      factor_dims += f.basis.size();
      assigned += f.generators.size();
      all.insert(all.end(), f.basis.begin(), f.basis.end());
    }
    bool orthogonal = all.size() == n;
    for (std::size_t i = 0; i < all.size(); ++i)
      for (std::size_t j = i + 1; j < all.size(); ++j) orthogonal = orthogonal && dot(all[i], all[j]).is_zero();
    const Scalar residual = decomposition_residual(d, gens);
    const bool trial_ok = residual.exact() && residual.is_zero() && orthogonal && found == labels &&
                          factor_dims == rank_sum && assigned == gens.size();
    ok = ok && trial_ok;
    std::string names;
    for (const auto& f : factors) names += f.root_system.label();
    detail += names + "+" + std::to_string(trivial) + (trial_ok ? " ok; " : " BAD; ");
  }
  return ok;
}

bool chamber_counts(std::string& detail) {
  bool ok = true;
  for (const auto& [s, want] : std::vector<std::pair<Spec, std::size_t>>{
           {{RootType::A, 2}, 6}, {{RootType::B, 2}, 8}, {{RootType::G, 2}, 12}, {{RootType::A, 3}, 24}}) {
    const FiniteCoxeterGroup w(rs_of(s));
    const std::size_t got = count_chambers(arrangement_of(w));
    ok = ok && got == want && got == w.order();
    detail += w.root_system().label() + "=" + std::to_string(got) + " ";
  }
  return ok;
}

bool arrangement_invariance(std::string& detail) {
  bool ok = true;
  std::size_t checks = 0;
  for (const auto& s : kFiniteGroups) {
    const FiniteCoxeterGroup w(rs_of(s));
    const Arrangement a = arrangement_of(w);
    for (const auto& g : w.generators())
      for (double r : {1.0, 10.0}) {
        ok = ok && is_invariant(a, g, r);
        ++checks;
      }
  }
  for (const auto& s : kAffineGroups) {
    const AffineWeylGroup w(rs_of(s));
    const Arrangement a = arrangement_of(w);
    for (const auto& g : w.generators())
      for (double r : {1.0, 10.0}) {
        const bool inv = is_invariant(a, g, r);
        if (!inv) detail += "affine " + w.root_system().label() + " radius " + fmt(r) + " failed; ";
        ok = ok && inv;
        ++checks;
      }
  }
  detail += std::to_string(checks) + " generator/radius checks";
  return ok;
}

bool invariant_systems(std::string& detail) {
  bool ok = true;
  for (const auto& [s, want] : std::vector<std::pair<Spec, std::vector<int>>>{
           {{RootType::A, 2}, {2, 3}}, {{RootType::B, 2}, {2, 4}}, {{RootType::G, 2}, {2, 6}}}) {
    const CoxeterGroup g = finite(s);
    const GeneratorSystem sys = chevalley_generators(g.finite_group(0));
    const SeparatingMap f = build_separating_map(g);
    const InvarianceReport inv = check_invariance(f, g, 500, 1e-10, 0);
    const bool good = sys.degrees() == want && std::abs(sys.jacobian_det) > 1e-8 && inv.pass;
    ok = ok && good;
    detail += sys.label + " |det|=" + fmt(std::abs(sys.jacobian_det)) + " dev=" + fmt(inv.max_deviation) + "; ";
  }
  return ok;
}

bool affine_generators(std::string& detail) {
  bool ok = true;
  for (const auto& s : kAffineGroups) {
    const CoxeterGroup g = affine(s);
    const AffineWeylGroup& w = g.affine_group(0);
    const GeneratorSystem sys = real_generators(w);
    double max_imag = 0;
    bool symmetric = true;
    for (const auto& gen : sys.generators) {
      symmetric = symmetric && !gen.is_polynomial() && gen.trig().conjugate_symmetric(1e-12);
      for (std::uint64_t k = 0; k < 200; ++k) {
        SampleRng rng(6, 0, k);
        max_imag = std::max(max_imag, std::abs(gen.trig().evaluate(to_point(g.random_point(rng, 2.0))).imag()));
      }
    }
    const InvarianceReport inv = check_invariance(build_separating_map(g), g, 500, 1e-10, 0);
    const bool rank_ok = sys.jacobian_rank == static_cast<std::size_t>(s.rank) && std::abs(sys.jacobian_det) > 1e-8;
    bool shape = true;
    if (s.type == RootType::A && s.rank == 2) {
      std::vector<std::string> parts;
      for (const auto& i : sys.info) parts.push_back(i.part);
      shape = sys.involution == std::vector<int>{1, 0} && sys.p == 0 && sys.q == 1 &&
              parts == std::vector<std::string>{"re", "im"};
    } else if (s.type == RootType::B) {
      shape = sys.involution == std::vector<int>{0, 1} && sys.p == 2 && sys.q == 0;
    }
    const bool good = symmetric && max_imag < 1e-12 && inv.pass && rank_ok && shape;
    ok = ok && good;
    detail += "~" + sys.label + (good ? " ok" : " BAD") + " imag=" + fmt(max_imag) + "; ";
  }
  return ok;
}

bool separation(std::string& detail) {
  std::vector<CoxeterGroup> groups{finite({RootType::A, 2}), finite({RootType::B, 2}), finite({RootType::G, 2})};
  for (const auto& s : kAffineGroups) groups.push_back(affine(s));
  bool ok = true;
  double margin = std::numeric_limits<double>::infinity(), constancy = 0;
  for (const auto& g : groups) {
    const SeparatingMap f = build_separating_map(g);
    const SeparationReport sep = check_separation(f, g, 1000, 1e-6, 0);
    const AuditReport audit = oracle_separation_audit(f, g, 50, 3, 0);
    ok = ok && sep.pass && audit.pass && audit.constancy_max < 1e-9;
    margin = std::min(margin, sep.separation_min);
    constancy = std::max(constancy, audit.constancy_max);
  }
  const CoxeterGroup a2 = affine({RootType::A, 2});
  const bool control_fails = !oracle_separation_audit(corrupt(build_separating_map(a2)), a2, 50, 3, 0).pass;
  detail = "min margin " + fmt(margin) + ", audit constancy " + fmt(constancy) +
           (control_fails ? ", corrupted map rejected" : ", corrupted map NOT rejected");
  return ok && control_fails;
}

bool transnormality(std::string& detail) {
  std::vector<CoxeterGroup> groups{finite({RootType::A, 2}), finite({RootType::B, 2}), finite({RootType::G, 2}),
                                   affine({RootType::A, 1}), affine({RootType::A, 2})};
  bool ok = true;
  double gram = 0, bracket = 0, fd = 0;
  for (const auto& g : groups) {
    const SeparatingMap f = build_separating_map(g);
    const TransnormalReport t = check_transnormal(f, g, 300, 1e-8, 1e-8, 0);
    ok = ok && t.gram.pass && t.bracket.pass;
    gram = std::max(gram, t.gram.gram_deviation);
    bracket = std::max({bracket, t.bracket.max_residual, t.bracket.coefficient_deviation});
    for (std::uint64_t k = 0; k < 50; ++k) {
      SampleRng rng(8, 0, k);
      const Vector x = g.random_point(rng, 1.0);
      for (const auto& out : f.outputs) {
        const Point a = out.gradient(to_point(x));
        const auto num = oracle::fd_gradient(
            [&](const oracle::Vec& v) { return out.value(Eigen::Map<const Point>(v.data(), static_cast<Eigen::Index>(v.size()))); },
            oracle::doubles(x));
        double err = 0;
        for (std::size_t i = 0; i < num.size(); ++i) err = std::max(err, std::abs(a(static_cast<Eigen::Index>(i)) - num[i]));
        fd = std::max(fd, err / std::max(1.0, a.lpNorm<Eigen::Infinity>()));
      }
    }
  }
  ok = ok && fd < 1e-6;

  const RootSystem a1 = build_root_system(RootType::A, 1);
  const SeparatingMap f = build_separating_map(CoxeterGroup::affine(a1));
  const Vector gamma = fundamental_weights(a1)[0];
  const double four_pi2_g2 = 4 * std::numbers::pi * std::numbers::pi * dot(gamma, gamma).to_double();
  double closed = 0;
  for (std::uint64_t k = 0; k < 200; ++k) {
    SampleRng rng(8, 1, k);
    Point x(2);
    x << rng.uniform(-3, 3), rng.uniform(-3, 3);
    const double y = f.evaluate(x)(1);
    closed = std::max(closed, std::abs(gram_matrix(f, x)(1, 1) - four_pi2_g2 * (1 - y * y)));
  }
  ok = ok && closed < 1e-9;
  detail = "gram " + fmt(gram) + ", bracket " + fmt(bracket) + ", fd " + fmt(fd) + ", closed form " + fmt(closed);
  return ok;
}

bool forms(std::string& detail) {
  bool ok = true;
  double worst = 0, control = std::numeric_limits<double>::infinity();
  for (const auto& s : std::vector<Spec>{{RootType::A, 2}, {RootType::B, 2}}) {
    const CoxeterGroup g = finite(s);
    auto f = std::make_shared<const SeparatingMap>(build_separating_map(g));
    const std::size_t m = f->outputs.size();
    auto y = [&](std::size_t i) { return Polynomial::variable(m, i); };
    const std::vector<InvariantForm> ws{
        build_form(f, 0, {{{}, y(0) * y(1) + y(m - 1).pow(2)}}),
        build_form(f, 1, {{{0}, y(1)}, {{1}, y(0).pow(2)}, {{m - 1}, Polynomial::constant(m, 2)}}),
        build_form(f, 2, {{{0, 1}, Polynomial::constant(m, 1)}, {{0, m - 1}, y(0)}})};
    for (const auto& w : ws)
      for (const auto& gen : g.generators()) worst = std::max(worst, pullback_deviation(w, gen, 100, 0));

    const std::size_t n = g.dim();
    const double t = 10 * std::numbers::pi / 180;
    Matrix r = Matrix::identity(n);
    r(0, 0) = Scalar(std::cos(t));
    r(0, 1) = Scalar(-std::sin(t));
    r(1, 0) = Scalar(std::sin(t));
    r(1, 1) = Scalar(std::cos(t));
    control = std::min(control, pullback_deviation(ws[2], {r, zeros(n)}, 100, 0));
  }
  ok = worst < 1e-10 && control > 1e-3;
  detail = "max deviation " + fmt(worst) + ", 10-degree rotation " + fmt(control);
  return ok;
}

bool determinism(std::string& detail, Clock::time_point suite_start) {
  const std::string a2 = R"j({"type":"A","rank":2})j", b2 = R"j({"type":"B","rank":2,"affine":false})j",
                    affa2 = R"j({"type":"A","rank":2,"affine":true})j", affg2 = R"j({"type":"G","affine":true})j";
  const std::vector<std::vector<std::string>> commands{
      {"info", "--group", a2},
      {"invariants", "--group", affa2, "--seed", "5"},
      {"separate", "--group", b2, "--pairs", "1000", "--tol", "1e-6", "--seed", "42"},
      {"separate", "--group", affg2, "--pairs", "300", "--seed", "3"},
      {"transnormal", "--group", affa2, "--pairs", "300", "--seed", "7"},
      {"forms-check", "--group", b2, "--seed", "1"},
      {"orbit", "--group", affa2, "--point", "[0.1,0.25,-0.35]", "--radius", "2"},
      {"arrangement", "--group", affg2}};
  bool ok = true;
  for (const auto& c : commands) {
    std::ostringstream o1, o2, e1, e2;
    const int r1 = cli::run(c, o1, e1), r2 = cli::run(c, o2, e2);
    const bool same = r1 == r2 && r1 == 0 && o1.str() == o2.str() && !o1.str().empty();
    if (!same) detail += c[0] + " differs or failed; ";
    ok = ok && same;
  }
  const double t = seconds_since(suite_start);
  detail += std::to_string(commands.size()) + " reports reproduced, acceptance run " + fmt(t) + " s";
  return ok && t < 300;
}

}  // namespace

int main() {
  const auto start = Clock::now();
  const std::vector<std::pair<std::string, std::function<bool(std::string&)>>> criteria{
      {"group orders", group_orders},
      {"orthogonal decomposition", decomposition},
      {"chamber counts", chamber_counts},
      {"arrangement invariance", arrangement_invariance},
      {"polynomial invariant systems", invariant_systems},
      {"affine real generators", affine_generators},
      {"orbit separation", separation},
      {"transnormality", transnormality},
      {"invariant forms", forms},
      {"determinism", [&](std::string& d) { return determinism(d, start); }},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    std::string detail;
    bool pass = false;
    try {
      pass = criteria[i].second(detail);
    } catch (const std::exception& e) {
      detail += std::string("exception: ") + e.what();
    }
    failures += pass ? 0 : 1;
    std::cout << (pass ? "PASS" : "FAIL") << " " << (i + 1) << " " << criteria[i].first << ": " << detail << std::endl;
  }
  return failures ? 1 : 0;
}
