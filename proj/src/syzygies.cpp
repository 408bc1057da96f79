#include "covariant/syzygies.hpp"

#include "covariant/combinatorics.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace covariant {

namespace {

std::size_t subset_index(const std::vector<IndexList>& subsets, const IndexList& s) {
  const auto it = std::lower_bound(subsets.begin(), subsets.end(), s);
  return static_cast<std::size_t>(it - subsets.begin());
}

IndexList concat(IndexList a, const IndexList& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

BlockKey add_blocks(BlockKey a, const BlockKey& b) {
  for (std::size_t i = 0; i < a.multidegree.size(); ++i) a.multidegree[i] += b.multidegree[i];
  a.weight += b.weight;
  return a;
}

// Scales to a primitive integer vector with positive leading entry.
void make_primitive(Vector& v) {
  mpz_class lcm_den = 1;
  for (const auto& c : v) {
    if (c != 0) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den_mpz_t());
  }
  mpz_class g = 0;
  for (auto& c : v) {
    c *= lcm_den;
    if (c != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
  }
  if (g == 0) return;
  const auto lead = std::find_if(v.begin(), v.end(), [](const Scalar& c) { return c != 0; });
  if (*lead < 0) g = -g;
  for (auto& c : v) c /= Scalar(g);
}

std::string low_label(const IndexList& cols) {
  return "lowMinor[" + std::to_string(cols.size()) + "; " + one_based(cols) + "]";
}

std::map<BlockKey, std::vector<GenMonomial>> filtered_monomials(const GeneratorSet& gs, int d,
                                                                const RelationOptions& options) {
  std::map<BlockKey, std::vector<GenMonomial>> out;
  for (auto& mono : generator_monomials(gs, d)) {
    if (options.generator_length && std::accumulate(mono.begin(), mono.end(), 0) != *options.generator_length) {
      continue;
    }
    bool ok = true;
    for (std::size_t i = 0; i < mono.size() && !options.allowed.empty(); ++i) {
      if (mono[i] > 0 && !options.allowed[i]) ok = false;
    }
    if (ok) out[block_of(gs, mono)].push_back(std::move(mono));
  }
  return out;
}

Vector row_at(GeneratorEvaluator& ev, std::size_t point, const std::vector<GenMonomial>& monos) {
  Vector row(monos.size());
  for (std::size_t j = 0; j < monos.size(); ++j) row[j] = ev.monomial_value(point, monos[j]);
  return row;
}

// Products of the seed relations with generator monomials, collected in the
// row space spanned over the monomials of one block.
class ProductSpan {
 public:
  ProductSpan(const GeneratorSet& gs, int d, const BlockKey& block)
      : gs_(gs), d_(d), block_(block), space_(0) {
    const auto by_block = generator_monomials_by_block(gs, d);
    const auto it = by_block.find(block);
    if (it != by_block.end()) monos_ = it->second;
    space_ = RowSpace(monos_.size());
    for (std::size_t j = 0; j < monos_.size(); ++j) index_[monos_[j]] = j;
  }

  void add(const std::vector<Relation>& seeds) {
    std::map<int, std::vector<GenMonomial>> cofactors;
    for (const auto& rel : seeds) {
      if (rel.degree > d_) continue;
      const int e = d_ - rel.degree;
      if (!cofactors.contains(e)) cofactors.emplace(e, generator_monomials(gs_, e));
      for (const auto& mu : cofactors[e]) {
        if (!(add_blocks(rel.block, block_of(gs_, mu)) == block_)) continue;
        space_.add(to_vector(rel, mu));
      }
    }
  }

  Vector to_vector(const Relation& rel, const GenMonomial& mu) const {
    Vector v(monos_.size(), Scalar(0));
    for (const auto& [mono, c] : rel.terms) {
      GenMonomial prod = mono;
      for (std::size_t i = 0; i < prod.size(); ++i) prod[i] += mu[i];
      v[index_.at(prod)] += c;
    }
    return v;
  }

  std::size_t rank() const { return space_.rank(); }
  bool contains(const Relation& rel) const { return space_.contains(to_vector(rel, GenMonomial(gs_.size(), 0))); }

 private:
  const GeneratorSet& gs_;
  int d_;
  BlockKey block_;
  std::vector<GenMonomial> monos_;
  std::map<GenMonomial, std::size_t> index_;
  RowSpace space_;
};

}  // namespace

Vector wedge(const Vector& q, std::size_t k, const Vector& x) {
  const std::size_t l = x.size();
  const auto from = combinations(l, k);
  const auto to = combinations(l, k + 1);
  if (q.size() != from.size()) throw std::invalid_argument("k-vector has wrong number of coordinates");
  Vector out(to.size(), Scalar(0));
  for (std::size_t a = 0; a < from.size(); ++a) {
    if (q[a] == 0) continue;
    for (std::size_t j = 0; j < l; ++j) {
      if (x[j] == 0 || std::binary_search(from[a].begin(), from[a].end(), j)) continue;
      // e_I ^ e_j: move e_j left past every element of I greater than j
      const auto greater = static_cast<std::size_t>(from[a].end() - std::upper_bound(from[a].begin(), from[a].end(), j));
      IndexList merged = from[a];
      merged.insert(std::upper_bound(merged.begin(), merged.end(), j), j);
      const Scalar term = q[a] * x[j];
      if (greater % 2 == 0) {
        out[subset_index(to, merged)] += term;
      } else {
        out[subset_index(to, merged)] -= term;
      }
    }
  }
  return out;
}

Vector wedge(const Vector& x, const Vector& q, std::size_t k) {
  // x ^ q = (-1)^k q ^ x
  Vector out = wedge(q, k, x);
  if (k % 2 == 1) {
    for (auto& c : out) c = -c;
  }
  return out;
}

ScalarMatrix compound_matrix(const ScalarMatrix& g, std::size_t k) {
  if (!g.is_square()) throw std::invalid_argument("compound of non-square matrix");
  const auto subsets = combinations(g.rows(), k);
  ScalarMatrix out(subsets.size(), subsets.size(), Scalar(0));
  for (std::size_t a = 0; a < subsets.size(); ++a) {
    for (std::size_t b = 0; b < subsets.size(); ++b) out(a, b) = minor(g, subsets[a], subsets[b]);
  }
  return out;
}

FlagPoint flag_map(const ScalarMatrix& point) {
  const std::size_t n = point.rows();
  const std::size_t l = point.cols();
  FlagPoint f;
  f.l = l;
  const std::size_t p = std::min(l, n);
  if (p == 0) return f;
  Vector q = point.row(n - 1);
  f.components.push_back(q);
  for (std::size_t k = 1; k < p; ++k) {
    q = wedge(point.row(n - 1 - k), q, k);
    f.components.push_back(q);
  }
  return f;
}

std::vector<Vector> annihilator(const Vector& q, std::size_t k, std::size_t l) {
  const auto rows = combinations(l, k + 1);
  ScalarMatrix m(rows.size(), l, Scalar(0));
  for (std::size_t j = 0; j < l; ++j) {
    Vector e(l, Scalar(0));
    e[j] = 1;
    const Vector image = k + 1 <= l ? wedge(q, k, e) : Vector{};
    for (std::size_t i = 0; i < image.size(); ++i) m(i, j) = image[i];
  }
  return kernel_basis(m);
}

bool is_decomposable(const Vector& q, std::size_t k, std::size_t l) {
  if (std::all_of(q.begin(), q.end(), [](const Scalar& c) { return c == 0; })) return true;
  return annihilator(q, k, l).size() == k;
}

bool incidence_holds(const FlagPoint& f) {
  std::vector<std::vector<Vector>> anns;
  for (std::size_t i = 0; i < f.components.size(); ++i) {
    if (!is_decomposable(f.components[i], i + 1, f.l)) {
      throw std::invalid_argument("component " + std::to_string(i + 1) + " is not decomposable");
    }
    anns.push_back(annihilator(f.components[i], i + 1, f.l));
  }
  for (std::size_t i = 1; i < anns.size(); ++i) {
    RowSpace span(f.l);
    for (const auto& v : anns[i]) span.add(v);
    for (const auto& v : anns[i - 1]) {
      if (!span.contains(v)) return false;
    }
  }
  return true;
}

std::string format_relation(const GeneratorSet& gs, const Relation& rel) {
  std::string out;
  for (const auto& [mono, c] : rel.terms) {
    const bool negative = c < 0;
    const Scalar magnitude = negative ? Scalar(-c) : c;
    if (out.empty()) {
      out += negative ? "-" : "";
    } else {
      out += negative ? " - " : " + ";
    }
    if (magnitude != 1) out += to_string(magnitude) + "*";
    out += monomial_label(gs, mono);
  }
  return (out.empty() ? "0" : out) + " = 0";
}

Polynomial expand_relation(const GeneratorSet& gs, const Relation& rel) {
  MonomialExpander expander(gs);
  Polynomial out(gs.scenario.num_vars());
  for (const auto& [mono, c] : rel.terms) out += expander.expand(mono) * c;
  return out;
}

bool RelationReport::verified() const {
  return std::all_of(basis.begin(), basis.end(), [](const Relation& r) { return r.verified; });
}

RelationReport relation_space(const GeneratorSet& gs, int d, std::uint64_t seed, const RelationOptions& options) {
  if (!options.allowed.empty() && options.allowed.size() != gs.size()) {
    throw std::invalid_argument("generator mask has wrong length");
  }
  const std::size_t total = generator_monomials(gs, d).size();
  if (total > options.cap) {
    throw ResourceLimitError("degree-" + std::to_string(d) + " generator monomial count " + std::to_string(total) +
                             " exceeds cap " + std::to_string(options.cap));
  }
  RelationReport report;
  report.degree = d;
  const auto blocks = filtered_monomials(gs, d, options);
  for (const auto& [key, monos] : blocks) report.ambient_dim += monos.size();

  GeneratorEvaluator first(gs, Rng(seed).substream("relations-first").engine()());
  GeneratorEvaluator second(gs, Rng(seed).substream("relations-second").engine()());
  MonomialExpander expander(gs);
  for (const auto& [key, monos] : blocks) {
    RowSpace space(monos.size());
    std::vector<Vector> kept;
    for (std::size_t p = 0; p < 2 * monos.size() && !space.full(); ++p) {
      Vector row = row_at(first, p, monos);
      if (space.add(row)) kept.push_back(std::move(row));
    }
    const std::size_t other = second.rank(monos);
    if (other != kept.size()) {
      throw std::runtime_error("evaluation ranks disagree between seeds in degree " + std::to_string(d) +
                               " block " + to_string(key));
    }
    if (kept.size() == monos.size()) continue;
    ScalarMatrix m(kept.size(), monos.size(), Scalar(0));
    for (std::size_t i = 0; i < kept.size(); ++i) {
      for (std::size_t j = 0; j < monos.size(); ++j) m(i, j) = kept[i][j];
    }
    for (auto& v : kernel_basis(m)) {
      make_primitive(v);
      Relation rel;
      rel.degree = d;
      rel.block = key;
      Polynomial check(gs.scenario.num_vars());
      for (std::size_t j = 0; j < monos.size(); ++j) {
        if (v[j] == 0) continue;
        rel.terms.emplace_back(monos[j], v[j]);
        check += expander.expand(monos[j]) * v[j];
      }
      rel.verified = check.is_zero();
      if (!rel.verified) {
        throw std::runtime_error("evaluation kernel vector is not a relation: " + format_relation(gs, rel));
      }
      report.basis.push_back(std::move(rel));
    }
  }
  report.relation_dim = report.basis.size();
  return report;
}

SpanComparison compare_with_products(const GeneratorSet& gs, int d, const std::vector<Relation>& seeds,
                                     const RelationReport& target) {
  SpanComparison cmp;
  cmp.target_dim = target.relation_dim;
  std::map<BlockKey, std::vector<const Relation*>> by_block;
  for (const auto& rel : target.basis) by_block[rel.block].push_back(&rel);
  bool contained = true;
  for (const auto& [key, rels] : by_block) {
    ProductSpan span(gs, d, key);
    span.add(seeds);
    cmp.span_dim += span.rank();
    for (const Relation* rel : rels) {
      if (!span.contains(*rel)) contained = false;
    }
  }
  cmp.equal = contained && cmp.span_dim == cmp.target_dim;
  return cmp;
}

bool in_product_span(const GeneratorSet& gs, const std::vector<Relation>& seeds, const Relation& rel) {
  ProductSpan span(gs, rel.degree, rel.block);
  span.add(seeds);
  return span.contains(rel);
}

Degree2Report degree2_generation_check(const GeneratorSet& gs, int d, std::uint64_t seed, std::size_t cap) {
  if (gs.scenario.group != GroupKind::GL || gs.scenario.m != 0) {
    throw std::invalid_argument("degree-2 generation applies to minors-only sets (GL with m = 0)");
  }
  if (d < 2) throw std::invalid_argument("degree must be at least 2");
  RelationOptions all;
  all.cap = cap;
  const RelationReport target = relation_space(gs, d, seed, all);
  std::vector<Relation> quadratic;
  RelationOptions pairs;
  pairs.cap = cap;
  pairs.generator_length = 2;
  for (int e = 2; e <= d; ++e) {
    auto rep = relation_space(gs, e, seed, pairs);
    for (auto& rel : rep.basis) quadratic.push_back(std::move(rel));
  }
  const SpanComparison cmp = compare_with_products(gs, d, quadratic, target);
  Degree2Report report;
  report.degree = d;
  report.relation_dim = target.relation_dim;
  report.quadratic_span_dim = cmp.span_dim;
  report.spans = cmp.equal;
  return report;
}

std::vector<BilinearSyzygy> bilinear_syzygies(const Scenario& s, int i, int j, std::uint64_t seed) {
  const int p = std::min(s.l, s.n);
  if (i < 1 || j < 1 || i + j > p) {
    throw std::invalid_argument("bilinear syzygies need 1 <= i, j and i + j <= min(l, n)");
  }
  Rng rng = Rng(seed).substream("bilinear");
  std::vector<std::vector<Scalar>> points(50, std::vector<Scalar>(s.num_vars()));
  for (auto& pt : points) {
    for (auto& c : pt) c = rng.uniform_scalar(-1000, 1000);
  }
  std::vector<BilinearSyzygy> out;
  const auto ui = static_cast<std::size_t>(i);
  for (const auto& cols : combinations(static_cast<std::size_t>(s.l), static_cast<std::size_t>(i + j))) {
    BilinearSyzygy syz;
    syz.columns = one_based(cols);
    Polynomial sum(s.num_vars());
    for (const auto& pick : combinations(cols.size(), ui)) {
      IndexList a, b;
      for (std::size_t t = 0; t < cols.size(); ++t) {
        if (std::binary_search(pick.begin(), pick.end(), t)) {
          a.push_back(cols[t]);
        } else {
          b.push_back(cols[t]);
        }
      }
      const int sign = permutation_sign(concat(a, b));
      syz.terms.push_back({sign, low_label(a), low_label(b)});
      sum += lower_minor(s, a) * lower_minor(s, b) * Scalar(sign);
    }
    syz.symbolic_zero = sum.is_zero();
    syz.numeric_zero =
        std::all_of(points.begin(), points.end(), [&](const auto& pt) { return sum.evaluate(pt) == 0; });
    out.push_back(std::move(syz));
  }
  return out;
}

MixedRelationResult mixed_relation_verify(int n, int l, int m) {
  if (l < 1 || m < 1 || l > n || m > n || l + m <= n) {
    throw std::invalid_argument("the mixed relation needs 1 <= l, m <= n and l + m > n");
  }
  const Scenario s = Scenario::make(GroupKind::GL, n, l, m);
  const std::size_t nv = s.num_vars();
  const int sdeg = l + m - n;
  const int r = n - l + 1;
  // 1-based accessors matching the tensor notation: a_i^j, b_k^j
  const auto a = [&](int i, int j) { return Polynomial::variable(nv, s.a_var(i - 1, j - 1)); };
  const auto b = [&](int k, int j) { return Polynomial::variable(nv, s.x_var(k - 1, j - 1)); };
  const auto c = [&](int i, int j) {
    Polynomial out(nv);
    for (int k = 1; k <= n; ++k) out += a(i, k) * b(k, j);
    return out;
  };

  const auto perms_m = permutations(static_cast<std::size_t>(m));
  const auto perms_l = permutations(static_cast<std::size_t>(l));
  MixedRelationResult res{s, Polynomial(nv), Polynomial(nv), false, {}};

  Polynomial left(nv), low(nv);
  for (const auto& sigma : perms_m) {
    Polynomial t = Polynomial::constant(nv, Scalar(permutation_sign(sigma)));
    for (int k = 1; k <= m; ++k) t *= a(static_cast<int>(sigma[static_cast<std::size_t>(k - 1)]) + 1, k);
    left += t;
  }
  for (const auto& tau : perms_l) {
    Polynomial t = Polynomial::constant(nv, Scalar(permutation_sign(tau)));
    for (int k = 1; k <= l; ++k) t *= b(r - 1 + k, static_cast<int>(tau[static_cast<std::size_t>(k - 1)]) + 1);
    low += t;
  }
  res.lhs = left * low;

  Scalar factorial(1);
  for (int i = 2; i <= sdeg; ++i) factorial *= i;
  for (const auto& sigma : perms_m) {
    const auto i_of = [&](int pos) { return static_cast<int>(sigma[static_cast<std::size_t>(pos - 1)]) + 1; };
    Polynomial a_part = Polynomial::constant(nv, Scalar(permutation_sign(sigma)));
    for (int k = 1; k <= r - 1; ++k) a_part *= a(i_of(k), k);
    for (const auto& tau : perms_l) {
      const auto j_of = [&](int pos) { return static_cast<int>(tau[static_cast<std::size_t>(pos - 1)]) + 1; };
      Polynomial t = a_part * Scalar(permutation_sign(tau));
      for (int k = 1; k <= l - sdeg; ++k) t *= b(m + k, j_of(sdeg + k));
      for (int u = 1; u <= sdeg; ++u) t *= c(i_of(r - 1 + u), j_of(u));
      res.rhs += t;
    }
  }
  res.rhs *= Scalar(1) / factorial;
  res.equal = res.lhs == res.rhs;

  // The same identity through generators: left * low minus the sum over
  // I (rows of C) and J (columns of C) of smaller minors times det C[I, J].
  const GeneratorSet gs = build_generators(s);
  const auto mu = static_cast<std::size_t>(m);
  const auto lu = static_cast<std::size_t>(l);
  const auto su = static_cast<std::size_t>(sdeg);
  const auto unit = [&](const std::string& label) {
    GenMonomial g(gs.size(), 0);
    g[gs.index_of(label)] = 1;
    return g;
  };
  const auto times = [](GenMonomial x, const GenMonomial& y) {
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += y[i];
    return x;
  };
  IndexList all_m(mu), all_l(lu);
  std::iota(all_m.begin(), all_m.end(), 0);
  std::iota(all_l.begin(), all_l.end(), 0);
  std::map<GenMonomial, Scalar> terms;
  terms[times(unit("leftMinor[" + std::to_string(m) + "; " + one_based(all_m) + "]"), unit(low_label(all_l)))] += 1;
  for (const auto& rows : combinations(mu, su)) {
    const IndexList rest_rows = complement(rows, mu);
    const int sign_rows = permutation_sign(concat(rest_rows, rows));
    for (const auto& cols : combinations(lu, su)) {
      const IndexList rest_cols = complement(cols, lu);
      const int sign_cols = permutation_sign(concat(cols, rest_cols));
      GenMonomial base(gs.size(), 0);
      if (!rest_rows.empty()) {
        base = times(base, unit("leftMinor[" + std::to_string(rest_rows.size()) + "; " + one_based(rest_rows) + "]"));
      }
      if (!rest_cols.empty()) base = times(base, unit(low_label(rest_cols)));
      for (const auto& pi : permutations(su)) {
        GenMonomial mono = base;
        for (std::size_t u = 0; u < su; ++u) {
          mono = times(mono, unit("C[" + std::to_string(rows[u] + 1) + "][" + std::to_string(cols[pi[u]] + 1) + "]"));
        }
        terms[mono] -= sign_rows * sign_cols * permutation_sign(pi);
      }
    }
  }
  Relation& rel = res.relation;
  rel.degree = l + m;
  for (const auto& [mono, coeff] : terms) {
    if (coeff != 0) rel.terms.emplace_back(mono, coeff);
  }
  rel.block = block_of(gs, rel.terms.front().first);
  rel.verified = expand_relation(gs, rel).is_zero();
  return res;
}

std::vector<SplitRelationReport> split_relations_check(const Scenario& s, int max_degree, std::uint64_t seed) {
  if (s.group != GroupKind::GL || s.l + s.m > s.n) {
    throw std::invalid_argument("the split-relations direction needs GL with l + m <= n");
  }
  const GeneratorSet gs = build_generators(s);
  RelationOptions lower, left;
  for (const auto& g : gs.gens) {
    lower.allowed.push_back(g.label.starts_with("lowMinor"));
    left.allowed.push_back(g.label.starts_with("leftMinor"));
  }
  std::vector<Relation> seeds;
  std::vector<SplitRelationReport> out;
  for (int d = 1; d <= max_degree; ++d) {
    for (const auto* opts : {&lower, &left}) {
      auto rep = relation_space(gs, d, seed, *opts);
      for (auto& rel : rep.basis) seeds.push_back(std::move(rel));
    }
    const RelationReport target = relation_space(gs, d, seed);
    const SpanComparison cmp = compare_with_products(gs, d, seeds, target);
    out.push_back({"if", s, d, cmp.target_dim, cmp.span_dim, cmp.equal});
  }
  return out;
}

SplitRelationReport mixed_relation_irreducibility(const Scenario& s, std::uint64_t seed) {
  if (s.group != GroupKind::GL || s.l + s.m <= s.n) {
    throw std::invalid_argument("the mixed relation check needs GL with l + m > n");
  }
  const MixedRelationResult z = mixed_relation_verify(s.n, s.l, s.m);
  const GeneratorSet gs = build_generators(s);
  const int d = s.l + s.m;
  std::vector<Relation> lower;
  for (int e = 1; e < d; ++e) {
    auto rep = relation_space(gs, e, seed);
    for (auto& rel : rep.basis) lower.push_back(std::move(rel));
  }
  const RelationReport target = relation_space(gs, d, seed);
  std::vector<Relation> target_seeds = target.basis;
  const bool present = z.relation.verified && in_product_span(gs, target_seeds, z.relation);
  const bool reducible = in_product_span(gs, lower, z.relation);

  SplitRelationReport report{"only if", s, d, target.relation_dim, 0, false};
  ProductSpan span(gs, d, z.relation.block);
  span.add(lower);
  report.span_dim = span.rank();
  report.ok = z.equal && present && !reducible;
  return report;
}

}  // namespace covariant
