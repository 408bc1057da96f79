#include "covariant/graded.hpp"

#include <cstdlib>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace covariant {

namespace {

constexpr long kEvaluationBound = 1L << 16;

std::vector<int> multidegree_of(const Exponents& e, const Scenario& s) {
  std::vector<int> md(s.num_copies(), 0);
  for (std::size_t v = 0; v < e.size(); ++v) {
    if (e[v] != 0) md[s.copy_of(v)] += e[v];
  }
  return md;
}

BlockKey zero_block(const Scenario& s) {
  return {std::vector<int>(s.num_copies(), 0),
          Weight{std::vector<Scalar>(static_cast<std::size_t>(s.rank()), Scalar(0))}};
}

}  // namespace

std::size_t monomial_cap_from_env() {
  const char* raw = std::getenv("COVARIANT_MONOMIAL_CAP");
  if (raw == nullptr || *raw == '\0') return kDefaultMonomialCap;
  char* end = nullptr;
  const unsigned long long value = std::strtoull(raw, &end, 10);
  if (*end != '\0' || value == 0) {
    throw std::invalid_argument(std::string("COVARIANT_MONOMIAL_CAP must be a positive integer, got ") + raw);
  }
  return static_cast<std::size_t>(value);
}

bool operator<(const BlockKey& a, const BlockKey& b) {
  if (a.multidegree != b.multidegree) return a.multidegree < b.multidegree;
  return a.weight < b.weight;
}

std::string to_string(const BlockKey& key) {
  std::ostringstream out;
  out << "deg(";
  for (std::size_t i = 0; i < key.multidegree.size(); ++i) out << (i ? "," : "") << key.multidegree[i];
  out << ") wt" << to_string(key.weight);
  return out.str();
}

BlockKey block_of(const Exponents& e, const Scenario& s) {
  return {multidegree_of(e, s), monomial_weight(e, s)};
}

int monomial_degree(const GeneratorSet& gs, const GenMonomial& mono) {
  int d = 0;
  for (std::size_t i = 0; i < mono.size(); ++i) d += mono[i] * gs.gens[i].degree;
  return d;
}

std::string monomial_label(const GeneratorSet& gs, const GenMonomial& mono) {
  std::string out;
  for (std::size_t i = 0; i < mono.size(); ++i) {
    if (mono[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += gs.gens[i].label;
    if (mono[i] > 1) out += "^" + std::to_string(mono[i]);
  }
  return out.empty() ? "1" : out;
}

BlockKey block_of(const GeneratorSet& gs, const GenMonomial& mono) {
  BlockKey key = zero_block(gs.scenario);
  for (std::size_t i = 0; i < mono.size(); ++i) {
    if (mono[i] == 0) continue;
    const auto md = multidegree_of(gs.gens[i].poly.terms().begin()->first, gs.scenario);
    for (std::size_t c = 0; c < md.size(); ++c) key.multidegree[c] += mono[i] * md[c];
    for (std::size_t c = 0; c < key.weight.eps.size(); ++c) key.weight.eps[c] += mono[i] * gs.gens[i].weight.eps[c];
  }
  return key;
}

std::vector<GenMonomial> generator_monomials(const GeneratorSet& gs, int d) {
  std::vector<GenMonomial> out;
  if (d < 0) return out;
  GenMonomial current(gs.size(), 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int remaining) {
    if (i == gs.size()) {
      if (remaining == 0) out.push_back(current);
      return;
    }
    const int deg = gs.gens[i].degree;
    for (int e = remaining / deg; e >= 0; --e) {
      current[i] = e;
      rec(i + 1, remaining - e * deg);
    }
    current[i] = 0;
  };
  rec(0, d);
  return out;
}

std::map<BlockKey, std::vector<GenMonomial>> generator_monomials_by_block(const GeneratorSet& gs, int d) {
  std::map<BlockKey, std::vector<GenMonomial>> out;
  for (auto& mono : generator_monomials(gs, d)) out[block_of(gs, mono)].push_back(std::move(mono));
  return out;
}

const Polynomial& MonomialExpander::power(std::size_t gen, int exponent) {
  const auto key = std::make_pair(gen, exponent);
  auto it = powers_.find(key);
  if (it != powers_.end()) return it->second;
  Polynomial p = exponent == 1 ? gs_.gens[gen].poly : power(gen, exponent - 1) * gs_.gens[gen].poly;
  return powers_.emplace(key, std::move(p)).first->second;
}

Polynomial MonomialExpander::expand(const GenMonomial& mono) {
  Polynomial out = Polynomial::constant(gs_.scenario.num_vars(), Scalar(1));
  for (std::size_t i = 0; i < mono.size(); ++i) {
    if (mono[i] > 0) out *= power(i, mono[i]);
  }
  return out;
}

GeneratorEvaluator::GeneratorEvaluator(const GeneratorSet& gs, std::uint64_t seed)
    : gs_(gs), rng_(Rng(seed).substream("evaluation")) {}

const std::vector<Scalar>& GeneratorEvaluator::values(std::size_t i) {
  while (values_.size() <= i) {
    std::vector<Scalar> point(gs_.scenario.num_vars());
    for (auto& c : point) c = rng_.uniform_scalar(-kEvaluationBound, kEvaluationBound);
    std::vector<Scalar> vals;
    vals.reserve(gs_.size());
    for (const auto& g : gs_.gens) vals.push_back(g.poly.evaluate(point));
    values_.push_back(std::move(vals));
  }
  return values_[i];
}

Scalar GeneratorEvaluator::monomial_value(std::size_t point, const GenMonomial& mono) {
  const auto& vals = values(point);
  Scalar out(1);
  for (std::size_t i = 0; i < mono.size(); ++i) {
    for (int e = 0; e < mono[i]; ++e) out *= vals[i];
  }
  return out;
}

ScalarMatrix GeneratorEvaluator::matrix(const std::vector<GenMonomial>& monos, std::size_t points) {
  ScalarMatrix m(points, monos.size(), Scalar(0));
  for (std::size_t p = 0; p < points; ++p) {
    for (std::size_t j = 0; j < monos.size(); ++j) m(p, j) = monomial_value(p, monos[j]);
  }
  return m;
}

std::size_t GeneratorEvaluator::rank(const std::vector<GenMonomial>& monos) {
  RowSpace space(monos.size());
  const std::size_t points = 2 * monos.size();
  for (std::size_t p = 0; p < points && !space.full(); ++p) {
    Vector row(monos.size());
    for (std::size_t j = 0; j < monos.size(); ++j) row[j] = monomial_value(p, monos[j]);
    space.add(std::move(row));
  }
  return space.rank();
}

CheckedRank::CheckedRank(const GeneratorSet& gs, std::uint64_t seed)
    : first_(gs, Rng(seed).substream("rank-first").engine()()),
      second_(gs, Rng(seed).substream("rank-second").engine()()) {}

std::size_t CheckedRank::rank(const std::vector<GenMonomial>& monos, const std::string& context) {
  const std::size_t a = first_.rank(monos);
  const std::size_t b = second_.rank(monos);
  if (a != b) {
    throw std::runtime_error("evaluation ranks disagree between seeds (" + std::to_string(a) + " vs " +
                             std::to_string(b) + ") in " + context);
  }
  return a;
}

std::map<BlockKey, std::size_t> block_dimensions_A(const GeneratorSet& gs, int t, std::uint64_t seed) {
  std::map<BlockKey, std::size_t> out;
  CheckedRank ranker(gs, seed);
  for (const auto& [key, monos] : generator_monomials_by_block(gs, t)) {
    const std::size_t r = ranker.rank(monos, "dim A_" + std::to_string(t) + " block " + to_string(key));
    if (r > 0) out.emplace(key, r);
  }
  return out;
}

std::size_t graded_dimension_A(const GeneratorSet& gs, int t, std::uint64_t seed) {
  std::size_t total = 0;
  for (const auto& [key, dim] : block_dimensions_A(gs, t, seed)) total += dim;
  return total;
}

std::vector<Exponents> variable_monomials(std::size_t num_vars, int t) {
  std::vector<Exponents> out;
  if (t < 0) return out;
  if (t > 255) throw std::overflow_error("degree exceeds exponent range");
  Exponents current(num_vars, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t v, int remaining) {
    if (v + 1 >= num_vars) {
      if (num_vars == 0) {
        if (remaining == 0) out.push_back(current);
        return;
      }
      current[v] = static_cast<std::uint8_t>(remaining);
      out.push_back(current);
      current[v] = 0;
      return;
    }
    for (int e = remaining; e >= 0; --e) {
      current[v] = static_cast<std::uint8_t>(e);
      rec(v + 1, remaining - e);
    }
    current[v] = 0;
  };
  rec(0, t);
  return out;
}

std::map<BlockKey, std::size_t> block_dimensions_U_inv(const Scenario& s, int t, const std::optional<Weight>& w,
                                                       std::size_t cap) {
  const std::size_t count = multiset_count(s.num_vars(), static_cast<std::size_t>(std::max(t, 0)));
  if (count > cap) {
    throw ResourceLimitError("degree-" + std::to_string(t) + " monomial count " + std::to_string(count) +
                             " exceeds cap " + std::to_string(cap) + " for " + s.describe());
  }
  std::map<BlockKey, std::vector<Exponents>> blocks;
  for (auto& e : variable_monomials(s.num_vars(), t)) {
    BlockKey key = block_of(e, s);
    if (w && !(key.weight == *w)) continue;
    blocks[std::move(key)].push_back(std::move(e));
  }
  const auto lie = nilradical_basis(s);
  std::map<BlockKey, std::size_t> out;
  for (const auto& [key, monos] : blocks) {
    std::map<Exponents, std::size_t> row_of;
    std::vector<std::vector<std::pair<std::size_t, Scalar>>> columns(monos.size());
    for (std::size_t k = 0; k < lie.size(); ++k) {
      for (std::size_t j = 0; j < monos.size(); ++j) {
        const Polynomial image = lie_act_on_polynomial(lie[k], Polynomial::term(monos[j], Scalar(1)), s);
        for (const auto& [e, c] : image.terms()) {
          Exponents tagged = e;
          tagged.push_back(static_cast<std::uint8_t>(k));
          const auto it = row_of.try_emplace(std::move(tagged), row_of.size()).first;
          columns[j].emplace_back(it->second, c);
        }
      }
    }
    ScalarMatrix m(row_of.size(), monos.size(), Scalar(0));
    for (std::size_t j = 0; j < monos.size(); ++j) {
      for (const auto& [row, c] : columns[j]) m(row, j) = c;
    }
    const std::size_t dim = monos.size() - (row_of.empty() ? 0 : rank(m));
    if (dim > 0) out.emplace(key, dim);
  }
  return out;
}

std::size_t graded_dimension_U_inv(const Scenario& s, int t, const std::optional<Weight>& w, std::size_t cap) {
  std::size_t total = 0;
  for (const auto& [key, dim] : block_dimensions_U_inv(s, t, w, cap)) total += dim;
  return total;
}

}  // namespace covariant
