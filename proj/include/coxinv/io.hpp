#pragma once

// JSON encodings. Exact numbers are [numerator, denominator] pairs (as
// strings when they do not fit in 64 bits); inexact numbers are plain JSON
// numbers written with round-trip precision.

#include "coxinv/arrangement.hpp"
#include "coxinv/forms.hpp"
#include "coxinv/invariants.hpp"
#include "coxinv/oracle.hpp"
#include "coxinv/root_system.hpp"
#include "coxinv/separator.hpp"
#include "coxinv/transnormal.hpp"

#include "json.hpp"

#include <string>

namespace coxinv {

using Json = nlohmann::json;

Json to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j);
Json to_json(const Vector& v);
Vector vector_from_json(const Json& j);
Json to_json(const Matrix& m);

Json to_json(const RootSystem& rs);
/// Rebuilds from the stored simple roots; throws InvalidClassification.
RootSystem root_system_from_json(const Json& j);

Json to_json(const Isometry& g);
Isometry isometry_from_json(const Json& j);
Json to_json(const Lattice& l);

Json to_json(const Hyperplane& h);
Json to_json(const Arrangement& a);
Arrangement arrangement_from_json(const Json& j);

Json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const Json& j, std::size_t variables);
Json to_json(const TrigInvariant& t);
Json to_json(const Invariant& f);
Json to_json(const GeneratorSystem& s);

Json to_json(const SeparatingMap& f);
/// SHA-256 (hex) of the canonical serialisation of the map.
std::string content_hash(const SeparatingMap& f);
/// References the backing map by content hash.
Json to_json(const InvariantForm& w);

Json to_json(const InvarianceReport& r);
Json to_json(const SeparationReport& r);
Json to_json(const TransnormalReport& r);
Json to_json(const AuditReport& r);

}  // namespace coxinv
