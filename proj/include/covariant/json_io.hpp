#ifndef COVARIANT_JSON_IO_HPP
#define COVARIANT_JSON_IO_HPP

#include "covariant/generators.hpp"
#include "covariant/syzygies.hpp"

#include <json.hpp>

#include <string>

namespace covariant {

using Json = nlohmann::ordered_json;

Json scalar_json(const Scalar& c);
Json vector_json(const Vector& v);
Json matrix_json(const ScalarMatrix& m);
/// {"vars": count, "terms": [{"coeff": "p/q", "exps": [...]}]} in term order.
Json polynomial_json(const Polynomial& p);
Json weight_json(const Scenario& s, const Weight& w);
Json scenario_json(const Scenario& s);
Json generator_set_json(const GeneratorSet& gs);
Json flag_point_json(const FlagPoint& f);

/// Parses a scalar given as a JSON number or a "p/q" string.
Scalar scalar_from_json(const Json& j);
/// Parses [[..], ..] of scalars. Throws std::invalid_argument on ragged or
/// malformed input.
ScalarMatrix matrix_from_json(const Json& j);
FlagPoint flag_point_from_json(const Json& j);

}  // namespace covariant

#endif  // COVARIANT_JSON_IO_HPP
