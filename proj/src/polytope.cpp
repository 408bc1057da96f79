#include "covariant/polytope.hpp"

#include <algorithm>
#include <stdexcept>

namespace covariant {

namespace {

enum class Chamber { A, BC, D };

Chamber chamber_kind(const Scenario& s) {
  if (s.group == GroupKind::GL) return Chamber::A;
  if (s.group == GroupKind::O && s.n % 2 == 0) return Chamber::D;
  return Chamber::BC;
}

Vector partial_average(std::size_t q, std::size_t k, int sign) {
  Vector v(q, Scalar(0));
  for (std::size_t i = 0; i < k; ++i) v[i] = Scalar(sign, static_cast<long>(k));
  return v;
}

Vector row(std::size_t q, std::initializer_list<std::pair<std::size_t, int>> entries) {
  Vector v(q, Scalar(0));
  for (const auto& [i, c] : entries) v[i] = c;
  return v;
}

}  // namespace

std::string format_vector(const Vector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ", ";
    out += to_string(v[i]);
  }
  return out + ")";
}

PolytopeSpec build_polytopes(const Scenario& s) {
  if (s.group == GroupKind::O && s.n <= 2) throw std::invalid_argument("no polytope data for O with n <= 2");
  const auto q = static_cast<std::size_t>(s.rank());
  const Chamber kind = chamber_kind(s);
  PolytopeSpec spec;
  for (std::size_t i = 0; i < q; ++i) {
    spec.phi_vertices.push_back(row(q, {{i, 1}}));
    spec.phi_vertices.push_back(row(q, {{i, -1}}));
  }

  spec.delta_vertices.push_back(Vector(q, Scalar(0)));
  for (std::size_t k = 1; k <= q; ++k) spec.delta_vertices.push_back(partial_average(q, k, 1));
  if (kind == Chamber::A) {
    for (std::size_t k = 1; k <= q; ++k) {
      Vector v(q, Scalar(0));
      for (std::size_t i = q - k; i < q; ++i) v[i] = Scalar(-1, static_cast<long>(k));
      spec.delta_vertices.push_back(v);
    }
  } else if (kind == Chamber::D) {
    Vector v = partial_average(q, q, 1);
    v[q - 1] = -v[q - 1];
    spec.delta_vertices.push_back(v);
  }

  const std::size_t chain = kind == Chamber::D ? q - 1 : q;
  for (std::size_t i = 0; i + 1 < chain; ++i) spec.chamber.push_back(row(q, {{i, 1}, {i + 1, -1}}));
  if (kind == Chamber::BC) {
    spec.chamber.push_back(row(q, {{q - 1, 1}}));
  } else if (kind == Chamber::D) {
    spec.chamber.push_back(row(q, {{q - 2, 1}, {q - 1, -1}}));
    spec.chamber.push_back(row(q, {{q - 2, 1}, {q - 1, 1}}));
  }
  return spec;
}

bool in_chamber(const PolytopeSpec& spec, const Vector& x) {
  for (const auto& a : spec.chamber) {
    if (a.size() != x.size()) throw std::invalid_argument("point dimension mismatch");
    Scalar dot(0);
    for (std::size_t i = 0; i < x.size(); ++i) dot += a[i] * x[i];
    if (dot < 0) return false;
  }
  return true;
}

bool in_phi_cap_chamber(const PolytopeSpec& spec, const Vector& x) {
  return in_chamber(spec, x) && convex_membership(x, spec.phi_vertices);
}

Vector sample_phi_cap_chamber(const Scenario& s, const PolytopeSpec& spec, Rng& rng) {
  const std::size_t q = spec.phi_vertices.empty() ? 0 : spec.phi_vertices.front().size();
  const long denominator = rng.uniform(1, 20);
  std::vector<long> units(spec.phi_vertices.size(), 0);
  for (long u = 0; u < denominator; ++u) {
    ++units[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(units.size()) - 1))];
  }
  Vector x(q, Scalar(0));
  for (std::size_t v = 0; v < units.size(); ++v) {
    Scalar weight(units[v], denominator);
    weight.canonicalize();
    for (std::size_t i = 0; i < q; ++i) x[i] += weight * spec.phi_vertices[v][i];
  }

  const auto descending = [](const Scalar& a, const Scalar& b) { return a > b; };
  switch (chamber_kind(s)) {
    case Chamber::A:
      std::sort(x.begin(), x.end(), descending);
      break;
    case Chamber::BC:
      for (auto& c : x) c = abs(c);
      std::sort(x.begin(), x.end(), descending);
      break;
    case Chamber::D: {
      const auto negatives = std::count_if(x.begin(), x.end(), [](const Scalar& c) { return c < 0; });
      for (auto& c : x) c = abs(c);
      std::sort(x.begin(), x.end(), descending);
      if (negatives % 2 == 1) x[q - 1] = -x[q - 1];
      break;
    }
  }
  return x;
}

PolytopeInclusionReport polytope_inclusion_check(const Scenario& s, int samples, std::uint64_t seed) {
  const PolytopeSpec spec = build_polytopes(s);
  PolytopeInclusionReport report;
  Rng rng = Rng(seed).substream("polytope-inclusion");
  for (int i = 0; i < samples; ++i) {
    const Vector x = sample_phi_cap_chamber(s, spec, rng);
    ++report.samples;
    if (!in_phi_cap_chamber(spec, x) || !convex_membership(x, spec.delta_vertices)) {
      report.failures.push_back({"sample", format_vector(x)});
    }
  }
  for (const auto& v : spec.delta_vertices) {
    ++report.vertices;
    if (!in_phi_cap_chamber(spec, v)) report.failures.push_back({"vertex", format_vector(v)});
  }
  return report;
}

}  // namespace covariant
