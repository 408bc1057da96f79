#include "covariant/json_io.hpp"

#include "covariant/combinatorics.hpp"
#include "covariant/fundamental_weights.hpp"

#include <stdexcept>

namespace covariant {

Json scalar_json(const Scalar& c) { return to_string(c); }

Json vector_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& c : v) out.push_back(scalar_json(c));
  return out;
}

Json matrix_json(const ScalarMatrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(vector_json(m.row(i)));
  return out;
}

Json polynomial_json(const Polynomial& p) {
  Json terms = Json::array();
  for (const auto& [exps, coeff] : p.terms()) {
    Json e = Json::array();
    for (auto x : exps) e.push_back(static_cast<int>(x));
    terms.push_back({{"coeff", scalar_json(coeff)}, {"exps", e}});
  }
  return {{"vars", p.num_vars()}, {"terms", terms}};
}

Json weight_json(const Scenario& s, const Weight& w) {
  return {{"eps", vector_json(w.eps)}, {"phi", vector_json(to_phi(s, w.eps))}};
}

Json scenario_json(const Scenario& s) {
  return {{"group", to_string(s.group)}, {"n", s.n}, {"l", s.l}, {"m", s.m}};
}

Json generator_set_json(const GeneratorSet& gs) {
  const auto names = gs.scenario.variable_names();
  Json gens = Json::array();
  for (const auto& g : gs.gens) {
    gens.push_back({{"label", g.label},
                    {"degree", g.degree},
                    {"weight_phi", vector_json(to_phi(gs.scenario, g.weight.eps))},
                    {"weight_eps", vector_json(g.weight.eps)},
                    {"poly", polynomial_json(g.poly)},
                    {"display", format_polynomial(g.poly, names)}});
  }
  return {{"scenario", scenario_json(gs.scenario)}, {"count", gs.size()}, {"generators", gens}};
}

Json flag_point_json(const FlagPoint& f) {
  Json comps = Json::array();
  for (const auto& q : f.components) comps.push_back(vector_json(q));
  return {{"l", f.l}, {"p", f.components.size()}, {"components", comps}};
}

Scalar scalar_from_json(const Json& j) {
  if (j.is_number_integer()) return Scalar(j.get<long>());
  if (j.is_string()) return parse_scalar(j.get<std::string>());
  throw std::invalid_argument("expected an integer or a fraction string, got " + j.dump());
}

ScalarMatrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument("matrix must be a nonempty array of rows");
  std::vector<std::vector<Scalar>> rows;
  for (const auto& row : j) {
    if (!row.is_array()) throw std::invalid_argument("matrix row must be an array");
    std::vector<Scalar> r;
    for (const auto& c : row) r.push_back(scalar_from_json(c));
    rows.push_back(std::move(r));
  }
  return ScalarMatrix::from_rows(rows);
}

FlagPoint flag_point_from_json(const Json& j) {
  FlagPoint f;
  f.l = j.at("l").get<std::size_t>();
  std::size_t k = 0;
  for (const auto& comp : j.at("components")) {
    ++k;
    Vector q;
    for (const auto& c : comp) q.push_back(scalar_from_json(c));
    if (q.size() != combinations(f.l, k).size()) {
      throw std::invalid_argument("component " + std::to_string(k) + " has the wrong number of coordinates");
    }
    f.components.push_back(std::move(q));
  }
  if (j.contains("p") && j.at("p").get<std::size_t>() != f.components.size()) {
    throw std::invalid_argument("p does not match the number of components");
  }
  return f;
}

}  // namespace covariant
