#include "coxinv/io.hpp"

#include "coxinv/errors.hpp"

#include <openssl/evp.h>

#include <cstdio>
#include <limits>

namespace coxinv {

namespace {

Json integer_json(const BigInt& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
    return static_cast<long long>(v);
  return v.str();
}

BigInt integer_from_json(const Json& j) {
  if (j.is_number_integer()) return BigInt(j.get<long long>());
  if (j.is_string()) return BigInt(j.get<std::string>());
  throw Error("expected an integer or integer string");
}

const char* lattice_kind(LatticeKind k) { return k == LatticeKind::Coroot ? "coroot" : "weight"; }

Json point_json(const Point& p) {
  Json j = Json::array();
  for (Eigen::Index i = 0; i < p.size(); ++i) j.push_back(p(i));
  return j;
}

}  // namespace

Json to_json(const Scalar& s) {
  if (!s.exact()) return s.to_double();
  return Json::array({integer_json(numerator(s.rational())), integer_json(denominator(s.rational()))});
}

Scalar scalar_from_json(const Json& j) {
  if (j.is_number_integer()) return Scalar(j.get<long long>());
  if (j.is_number_float()) return Scalar(j.get<double>());
  if (j.is_array() && j.size() == 2) {
    const BigInt den = integer_from_json(j[1]);
    if (den == 0) throw Error("zero denominator");
    return Scalar(Rational(integer_from_json(j[0]), den));
  }
  throw Error("expected a number or a [numerator, denominator] pair");
}

Json to_json(const Vector& v) {
  Json j = Json::array();
  for (const auto& s : v) j.push_back(to_json(s));
  return j;
}

Vector vector_from_json(const Json& j) {
  if (!j.is_array()) throw Error("expected an array of numbers");
  Vector v;
  for (const auto& e : j) v.push_back(scalar_from_json(e));
  return v;
}

Json to_json(const Matrix& m) {
  Json j = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) j.push_back(to_json(m.row(i)));
  return j;
}

Json to_json(const RootSystem& rs) {
  Json j;
  j["label"] = rs.label();
  j["type"] = to_string(rs.type());
  j["rank"] = rs.rank();
  if (rs.dihedral_order()) j["m"] = rs.dihedral_order();
  j["ambient_dim"] = rs.ambient_dim();
  j["crystallographic"] = rs.crystallographic();
  j["simple_roots"] = Json::array();
  for (const auto& a : rs.simple_roots()) j["simple_roots"].push_back(to_json(a));
  j["simple_coroots"] = Json::array();
  for (const auto& a : rs.simple_coroots()) j["simple_coroots"].push_back(to_json(a));
  j["cartan_matrix"] = to_json(rs.cartan_matrix());
  j["positive_roots"] = Json::array();
  for (const auto& a : rs.positive_roots()) j["positive_roots"].push_back(to_json(a));
  if (rs.crystallographic()) j["highest_root"] = to_json(rs.highest_root());
  return j;
}

RootSystem root_system_from_json(const Json& j) {
  try {
    std::vector<Vector> simple;
    for (const auto& a : j.at("simple_roots")) simple.push_back(vector_from_json(a));
    return root_system_from_simple_roots(parse_root_type(j.at("type").get<std::string>()), j.at("rank").get<int>(),
                                         j.value("m", 0), std::move(simple));
  } catch (const Json::exception& e) {
    throw InvalidClassification(std::string("malformed root system: ") + e.what());
  }
}

Json to_json(const Isometry& g) { return {{"linear", to_json(g.linear)}, {"translation", to_json(g.translation)}}; }

Isometry isometry_from_json(const Json& j) {
  std::vector<Vector> rows;
  for (const auto& r : j.at("linear")) rows.push_back(vector_from_json(r));
  return {Matrix::from_rows(rows), vector_from_json(j.at("translation"))};
}

Json to_json(const Lattice& l) {
  Json basis = Json::array();
  for (const auto& b : l.basis) basis.push_back(to_json(b));
  return {{"kind", lattice_kind(l.kind)}, {"basis", basis}};
}

Json to_json(const Hyperplane& h) { return {{"normal", to_json(h.normal)}, {"offset", to_json(h.offset)}}; }

Json to_json(const Arrangement& a) {
  Json j;
  j["kind"] = a.kind() == ArrangementKind::Finite ? "finite" : "periodic";
  j["dim"] = a.dim();
  j["families"] = Json::array();
  for (std::size_t i = 0; i < a.base().size(); ++i) {
    Json h = to_json(a.base()[i]);
    h["step"] = to_json(a.steps()[i]);
    j["families"].push_back(h);
  }
  if (a.period_lattice()) j["period_lattice"] = to_json(*a.period_lattice());
  return j;
}

Arrangement arrangement_from_json(const Json& j) {
  std::vector<Hyperplane> base;
  std::vector<Scalar> steps;
  for (const auto& h : j.at("families")) {
    base.push_back({vector_from_json(h.at("normal")), scalar_from_json(h.at("offset"))});
    steps.push_back(scalar_from_json(h.at("step")));
  }
  std::optional<Lattice> period;
  if (j.contains("period_lattice")) {
    Lattice l;
    l.kind = j["period_lattice"].at("kind") == "coroot" ? LatticeKind::Coroot : LatticeKind::Weight;
    for (const auto& b : j["period_lattice"].at("basis")) l.basis.push_back(vector_from_json(b));
    period = std::move(l);
  }
  return Arrangement(std::move(base), std::move(steps), std::move(period));
}

Json to_json(const Polynomial& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({{"exp", e}, {"coef", to_json(c)}});
  return {{"variables", p.variables()}, {"terms", terms}};
}

Polynomial polynomial_from_json(const Json& j, std::size_t variables) {
  Polynomial p(variables);
  for (const auto& t : j.at("terms")) {
    auto e = t.at("exp").get<std::vector<int>>();
    if (e.size() != variables) throw Error("exponent length does not match the variable count");
    for (int k : e)
      if (k < 0) throw Error("negative exponent");
    p.add_term(e, scalar_from_json(t.at("coef")));
  }
  return p;
}

Json to_json(const TrigInvariant& t) {
  Json basis = Json::array();
  for (const auto& b : t.weight_basis()) basis.push_back(to_json(b));
  Json terms = Json::array();
  for (const auto& [w, c] : t.terms()) terms.push_back({{"weight", w}, {"re", c.real()}, {"im", c.imag()}});
  return {{"real", t.real()}, {"weight_basis", basis}, {"fourier", terms}};
}

Json to_json(const Invariant& f) {
  if (f.is_polynomial()) {
    Json j = to_json(f.polynomial());
    j["kind"] = "polynomial";
    return j;
  }
  Json j = to_json(f.trig());
  j["kind"] = "trigonometric";
  return j;
}

Json to_json(const GeneratorSystem& s) {
  Json j;
  j["label"] = s.label;
  j["affine"] = s.affine;
  Json gens = Json::array();
  for (std::size_t i = 0; i < s.generators.size(); ++i) {
    Json g = to_json(s.generators[i]);
    const auto& info = s.info[i];
    if (s.affine) {
      g["weight_index"] = info.weight_index + 1;
      g["part"] = info.part;
    } else {
      g["degree"] = info.degree;
    }
    gens.push_back(g);
  }
  j["generators"] = gens;
  if (s.affine) {
    Json inv = Json::array();
    for (int i : s.involution) inv.push_back(i + 1);
    j["involution"] = inv;
    j["p"] = s.p;
    j["q"] = s.q;
  } else {
    j["degrees"] = s.degrees();
  }
  j["designated_point"] = point_json(s.designated_point);
  j["jacobian_rank"] = s.jacobian_rank;
  j["jacobian_det"] = s.jacobian_det;
  return j;
}

Json to_json(const SeparatingMap& f) {
  Json j;
  j["dim"] = f.dim;
  Json fixed = Json::array();
  for (const auto& b : f.decomposition.fixed_basis) fixed.push_back(to_json(b));
  j["fixed_basis"] = fixed;
  Json systems = Json::array();
  for (const auto& s : f.systems) systems.push_back(to_json(s));
  j["systems"] = systems;
  Json outputs = Json::array();
  for (std::size_t i = 0; i < f.outputs.size(); ++i) {
    Json o = to_json(f.outputs[i]);
    o["block"] = f.output_block[i];
    outputs.push_back(o);
  }
  j["outputs"] = outputs;
  return j;
}

std::string content_hash(const SeparatingMap& f) {
  const std::string text = to_json(f).dump();
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(text.data(), text.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    throw Error("SHA-256 digest failed");
  std::string hex;
  char buf[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", digest[i]);
    hex += buf;
  }
  return hex;
}

Json to_json(const InvariantForm& w) {
  Json terms = Json::array();
  for (const auto& t : w.terms()) terms.push_back({{"indices", t.indices}, {"coefficient", to_json(t.coefficient)}});
  return {{"degree", w.degree()}, {"map", content_hash(w.map())}, {"terms", terms}};
}

Json to_json(const InvarianceReport& r) {
  return {{"samples", r.samples},
          {"seed", r.seed},
          {"tolerance", r.tolerance},
          {"max_deviation", r.max_deviation},
          {"max_abs_deviation", r.max_abs_deviation},
          {"pass", r.pass}};
}

Json to_json(const SeparationReport& r) {
  return {{"pairs", r.pairs},
          {"seed", r.seed},
          {"tolerance", r.tolerance},
          {"separation_min", r.separation_min},
          {"matched_max", r.matched_max},
          {"matched_oracle", r.matched_oracle},
          {"pass", r.pass}};
}

Json to_json(const TransnormalReport& r) {
  Json gram = {{"pairs", r.gram.pairs},
               {"tolerance", r.gram.tolerance},
               {"gram_deviation", r.gram.gram_deviation},
               {"gram_deviation_abs", r.gram.gram_deviation_abs},
               {"level_deviation", r.gram.level_deviation},
               {"min_rank", r.gram.min_rank},
               {"max_rank", r.gram.max_rank},
               {"pass", r.gram.pass}};
  Json bracket = {{"regular_samples", r.bracket.regular_samples},
                  {"tolerance", r.bracket.tolerance},
                  {"max_residual", r.bracket.max_residual},
                  {"coefficient_deviation", r.bracket.coefficient_deviation},
                  {"pass", r.bracket.pass}};
  Json laplacian = {
      {"pairs", r.laplacian.pairs}, {"deviation", r.laplacian.deviation}, {"pass", r.laplacian.pass}};
  return {{"seed", r.seed}, {"gram", gram}, {"bracket", bracket}, {"laplacian", laplacian}};
}

Json to_json(const AuditReport& r) {
  return {{"base_points", r.base_points},   {"radius", r.radius},
          {"seed", r.seed},                 {"orbit_points", r.orbit_points},
          {"constancy_max", r.constancy_max}, {"distinct_pairs", r.distinct_pairs},
          {"distinct_min", r.distinct_min}, {"pass", r.pass}};
}

}  // namespace coxinv
