#include "covariant/groups.hpp"

#include <stdexcept>

namespace covariant {

bool operator<(const Weight& a, const Weight& b) {
  const std::size_t n = std::min(a.eps.size(), b.eps.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a.eps[i] != b.eps[i]) return a.eps[i] < b.eps[i];
  }
  return a.eps.size() < b.eps.size();
}

Weight& Weight::operator+=(const Weight& other) {
  if (other.eps.size() != eps.size()) throw std::invalid_argument("weight length mismatch");
  for (std::size_t i = 0; i < eps.size(); ++i) eps[i] += other.eps[i];
  return *this;
}

std::string to_string(const Weight& w) {
  std::string out = "(";
  for (std::size_t i = 0; i < w.eps.size(); ++i) {
    if (i > 0) out += ", ";
    out += to_string(w.eps[i]);
  }
  return out + ")";
}

std::string format_matrix(const ScalarMatrix& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out += i == 0 ? "[" : ", [";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j > 0) out += ", ";
      out += to_string(m(i, j));
    }
    out += "]";
  }
  return out + "]";
}

ScalarMatrix form_matrix(const Scenario& s) {
  if (s.group == GroupKind::GL) throw std::invalid_argument("GL preserves no bilinear form");
  const auto n = static_cast<std::size_t>(s.n);
  ScalarMatrix q(n, n, Scalar(0));
  for (std::size_t i = 0; i < n; ++i) {
    const bool lower_half = 2 * i >= n;
    q(i, n - 1 - i) = (s.group == GroupKind::Sp && lower_half) ? -1 : 1;
  }
  return q;
}

namespace {

std::vector<Scalar> primitive_integer(std::vector<Scalar> v) {
  mpz_class lcm = 1;
  for (const auto& x : v) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den().get_mpz_t());
  for (auto& x : v) x *= lcm;
  mpz_class g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_num().get_mpz_t());
  if (g == 0) return v;
  for (const auto& x : v) {
    if (x != 0) {
      if (x < 0) g = -g;
      break;
    }
  }
  for (auto& x : v) x /= Scalar(g);
  return v;
}

// Linear image of each variable under a matrix acting by the substitution
// convention, as (variable, coefficient) lists.
using LinearImage = std::vector<std::pair<std::size_t, Scalar>>;

std::vector<LinearImage> variable_images(const ScalarMatrix& g, const ScalarMatrix& g_dual,
                                         const Scenario& s) {
  std::vector<LinearImage> images(s.num_vars());
  for (int j = 0; j < s.l; ++j) {
    for (int i = 0; i < s.n; ++i) {
      auto& img = images[s.x_var(i, j)];
      for (int k = 0; k < s.n; ++k) {
        const Scalar& c = g(static_cast<std::size_t>(i), static_cast<std::size_t>(k));
        if (c != 0) img.emplace_back(s.x_var(k, j), c);
      }
    }
  }
  for (int i = 0; i < s.m; ++i) {
    for (int j = 0; j < s.n; ++j) {
      auto& img = images[s.a_var(i, j)];
      for (int k = 0; k < s.n; ++k) {
        const Scalar& c = g_dual(static_cast<std::size_t>(k), static_cast<std::size_t>(j));
        if (c != 0) img.emplace_back(s.a_var(i, k), c);
      }
    }
  }
  return images;
}

void require_shape(const ScalarMatrix& m, const Scenario& s) {
  if (m.rows() != static_cast<std::size_t>(s.n) || m.cols() != static_cast<std::size_t>(s.n)) {
    throw std::invalid_argument("group/Lie element has wrong size for scenario");
  }
}

}  // namespace

std::vector<LieElement> nilradical_basis(const Scenario& s) {
  const auto n = static_cast<std::size_t>(s.n);
  std::vector<std::pair<std::size_t, std::size_t>> positions;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) positions.emplace_back(i, j);
  }
  std::vector<Vector> kernel;
  if (s.group == GroupKind::GL) {
    for (std::size_t p = 0; p < positions.size(); ++p) {
      Vector v(positions.size(), Scalar(0));
      v[p] = 1;
      kernel.push_back(std::move(v));
    }
  } else {
    // Rows: entries (a, b) of X^T Q + Q X; columns: unknown entries X[i][j].
    const ScalarMatrix q = form_matrix(s);
    ScalarMatrix system(n * n, positions.size(), Scalar(0));
    for (std::size_t p = 0; p < positions.size(); ++p) {
      const auto [i, j] = positions[p];
      for (std::size_t b = 0; b < n; ++b) system(j * n + b, p) += q(i, b);  // (X^T Q)_{jb}
      for (std::size_t a = 0; a < n; ++a) system(a * n + j, p) += q(a, i);  // (Q X)_{aj}
    }
    kernel = kernel_basis(system);
  }
  std::vector<LieElement> basis;
  for (auto& v : kernel) {
    v = primitive_integer(std::move(v));
    ScalarMatrix x(n, n, Scalar(0));
    for (std::size_t p = 0; p < positions.size(); ++p) x(positions[p].first, positions[p].second) = v[p];
    basis.push_back({std::move(x)});
  }
  return basis;
}

GroupElement exp_nilpotent(const LieElement& x) {
  const std::size_t n = x.matrix.rows();
  ScalarMatrix result = identity_matrix(n);
  ScalarMatrix power = identity_matrix(n);
  for (std::size_t k = 1; k <= n; ++k) {
    power = (Scalar(1) / Scalar(static_cast<long>(k))) * (power * x.matrix);
    if (is_zero(power)) break;
    result = result + power;
  }
  ScalarMatrix check = x.matrix;
  for (std::size_t k = 1; k < n; ++k) check = check * x.matrix;
  if (n > 0 && !is_zero(check)) throw std::invalid_argument("exp_nilpotent: matrix is not nilpotent");
  return {std::move(result)};
}

GroupElement sample_unipotent(const Scenario& s, Rng& rng) {
  const auto n = static_cast<std::size_t>(s.n);
  if (s.group == GroupKind::GL) {
    ScalarMatrix g = identity_matrix(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) g(i, j) = rng.uniform(-3, 3);
    }
    return {std::move(g)};
  }
  LieElement x{ScalarMatrix(n, n, Scalar(0))};
  for (const auto& e : nilradical_basis(s)) {
    x.matrix = x.matrix + Scalar(rng.uniform(-3, 3)) * e.matrix;
  }
  return exp_nilpotent(x);
}

bool preserves_form(const GroupElement& g, const Scenario& s) {
  if (s.group == GroupKind::GL) return true;
  const ScalarMatrix q = form_matrix(s);
  return g.matrix.transpose() * q * g.matrix == q;
}

Polynomial act_on_polynomial(const GroupElement& g, const Polynomial& p, const Scenario& s) {
  require_shape(g.matrix, s);
  if (p.num_vars() != s.num_vars()) throw std::invalid_argument("polynomial not over scenario universe");
  ScalarMatrix g_inv = identity_matrix(static_cast<std::size_t>(s.n));
  if (s.m > 0) {
    auto inv = inverse(g.matrix);
    if (!inv) throw std::invalid_argument("act_on_polynomial: singular group element");
    g_inv = std::move(*inv);
  }
  const auto images = variable_images(g.matrix, g_inv, s);
  std::vector<Polynomial> polys;
  polys.reserve(images.size());
  for (const auto& img : images) {
    Polynomial q(s.num_vars());
    for (const auto& [var, c] : img) q += Polynomial::variable(s.num_vars(), var) * c;
    polys.push_back(std::move(q));
  }
  return p.substitute(polys);
}

Polynomial lie_act_on_polynomial(const LieElement& x, const Polynomial& p, const Scenario& s) {
  require_shape(x.matrix, s);
  if (p.num_vars() != s.num_vars()) throw std::invalid_argument("polynomial not over scenario universe");
  const ScalarMatrix neg = Scalar(-1) * x.matrix;
  const auto images = variable_images(x.matrix, neg, s);
  Polynomial out(s.num_vars());
  for (const auto& [e, c] : p.terms()) {
    for (std::size_t v = 0; v < e.size(); ++v) {
      if (e[v] == 0) continue;
      for (const auto& [w, coeff] : images[v]) {
        Exponents f = e;
        --f[v];
        ++f[w];
        out.add_term(f, c * coeff * static_cast<unsigned long>(e[v]));
      }
    }
  }
  return out;
}

Weight restrict_weight(const Scenario& s, std::span<const Scalar> gl_eps) {
  if (gl_eps.size() != static_cast<std::size_t>(s.n)) throw std::invalid_argument("GL weight length mismatch");
  if (s.group == GroupKind::GL) return {std::vector<Scalar>(gl_eps.begin(), gl_eps.end())};
  const int r = s.rank();
  Weight w{std::vector<Scalar>(static_cast<std::size_t>(r), Scalar(0))};
  for (int a = 0; a < s.n; ++a) {
    const Scalar& c = gl_eps[static_cast<std::size_t>(a)];
    if (c == 0) continue;
    if (a < r) {
      w.eps[static_cast<std::size_t>(a)] += c;
    } else if (a >= s.n - r) {
      w.eps[static_cast<std::size_t>(s.n - 1 - a)] -= c;
    }
  }
  return w;
}

Weight monomial_weight(const Exponents& e, const Scenario& s) {
  std::vector<Scalar> gl(static_cast<std::size_t>(s.n), Scalar(0));
  for (std::size_t v = 0; v < e.size(); ++v) {
    if (e[v] == 0) continue;
    const auto k = static_cast<std::size_t>(v % static_cast<std::size_t>(s.n));
    if (s.is_x(v)) {
      gl[k] -= e[v];
    } else {
      gl[k] += e[v];
    }
  }
  return restrict_weight(s, gl);
}

Weight torus_weight(const Polynomial& p, const Scenario& s) {
  if (p.is_zero()) throw std::invalid_argument("torus_weight of the zero polynomial");
  if (p.num_vars() != s.num_vars()) throw std::invalid_argument("polynomial not over scenario universe");
  const Weight w = monomial_weight(p.terms().begin()->first, s);
  for (const auto& [e, c] : p.terms()) {
    if (!(monomial_weight(e, s) == w)) throw std::domain_error("not a weight vector");
  }
  return w;
}

}  // namespace covariant
