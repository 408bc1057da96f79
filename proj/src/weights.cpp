#include "covariant/weights.hpp"

#include "covariant/fundamental_weights.hpp"

#include <algorithm>
#include <cerrno>
#include <cstdlib>
#include <queue>
#include <set>
#include <tuple>
#include <sstream>
#include <stdexcept>

namespace covariant {

namespace {

void require_length(const Scenario& s, const PhiWeight& chi) {
  if (chi.size() != static_cast<std::size_t>(s.rank())) {
    throw std::invalid_argument("weight needs " + std::to_string(s.rank()) + " phi coefficients, got " +
                                std::to_string(chi.size()));
  }
}

void require_nonnegative(const PhiWeight& chi, std::size_t upto) {
  for (std::size_t i = 0; i < upto; ++i) {
    if (chi[i] < 0) throw std::domain_error("weight " + format_phi(chi) + " is not dominant");
  }
}

}  // namespace

std::string format_phi(const PhiWeight& chi) {
  std::string out;
  for (std::size_t i = 0; i < chi.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(chi[i]);
  }
  return out;
}

PhiWeight parse_phi(const std::string& text) {
  PhiWeight out;
  if (text.empty()) return out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    char* end = nullptr;
    errno = 0;
    const long v = std::strtol(item.c_str(), &end, 10);
    if (item.empty() || *end != '\0' || errno != 0) {
      throw std::invalid_argument("bad weight coefficient '" + item + "' in '" + text + "'");
    }
    out.push_back(v);
  }
  if (!text.empty() && text.back() == ',') throw std::invalid_argument("trailing comma in weight '" + text + "'");
  return out;
}

std::string to_string(const PresentationStep& step) {
  const char* name = step.kind == PresentationStep::Kind::Alpha ? "alpha" : "beta";
  return std::to_string(step.multiplicity) + "*" + name + "_" + std::to_string(step.index);
}

int step_degree(int n, PresentationStep::Kind kind, int index) {
  if (kind == PresentationStep::Kind::Alpha) return index;
  return index == n ? n : n - index;
}

Presentation gl_minimal_presentation(int n, const PhiWeight& chi) {
  if (n < 1 || chi.size() != static_cast<std::size_t>(n)) {
    throw std::invalid_argument("GL presentation needs n >= 1 and n phi coefficients");
  }
  require_nonnegative(chi, static_cast<std::size_t>(n - 1));
  const int r = n / 2;
  // alpha[i], beta[i] for i = 1..n
  std::vector<long> alpha(static_cast<std::size_t>(n + 1), 0);
  std::vector<long> beta(static_cast<std::size_t>(n + 1), 0);
  long top = 0;  // phi_n coordinate of the current combination
  for (int i = 1; i < n; ++i) {
    const long k = chi[static_cast<std::size_t>(i - 1)];
    if (i <= r) {
      alpha[static_cast<std::size_t>(i)] = k;
    } else {
      beta[static_cast<std::size_t>(i)] = k;
      top -= k;
    }
  }
  long t = top - chi[static_cast<std::size_t>(n - 1)];
  for (; t > 0; --t) {
    int best = 0;
    for (int i = n - 1; i >= 1; --i) {
      if (alpha[static_cast<std::size_t>(i)] > 0) {
        best = i;
        break;
      }
    }
    if (best > 0 && n - 2 * best < n) {
      --alpha[static_cast<std::size_t>(best)];
      ++beta[static_cast<std::size_t>(best)];
    } else {
      ++beta[static_cast<std::size_t>(n)];
    }
  }
  for (; t < 0; ++t) {
    int best = 0;
    for (int j = 1; j < n; ++j) {
      if (beta[static_cast<std::size_t>(j)] > 0) {
        best = j;
        break;
      }
    }
    if (best > 0 && 2 * best - n < n) {
      --beta[static_cast<std::size_t>(best)];
      ++alpha[static_cast<std::size_t>(best)];
    } else {
      ++alpha[static_cast<std::size_t>(n)];
    }
  }

  Presentation p;
  for (int i = 1; i <= n; ++i) {
    if (alpha[static_cast<std::size_t>(i)] == 0) continue;
    p.steps.push_back({PresentationStep::Kind::Alpha, i, alpha[static_cast<std::size_t>(i)]});
  }
  for (int j = 1; j <= n; ++j) {
    if (beta[static_cast<std::size_t>(j)] == 0) continue;
    p.steps.push_back({PresentationStep::Kind::Beta, j, beta[static_cast<std::size_t>(j)]});
  }
  for (const auto& step : p.steps) p.degree += step.multiplicity * step_degree(n, step.kind, step.index);
  return p;
}

long n_chi_formula(const Scenario& s, const PhiWeight& chi) {
  require_length(s, chi);
  if (s.l < s.n || (s.group == GroupKind::GL && s.m < s.n)) {
    throw std::domain_error("n(chi) formulas hold for l >= n (and m >= n for GL); use the oracle for " +
                            s.describe());
  }
  const int r = s.rank();
  const auto k = [&](int i) { return chi[static_cast<std::size_t>(i - 1)]; };
  switch (s.group) {
    case GroupKind::GL:
      return gl_minimal_presentation(s.n, chi).degree;
    case GroupKind::Sp: {
      require_nonnegative(chi, chi.size());
      long d = 0;
      for (int i = 1; i <= r; ++i) d += i * k(i);
      return d;
    }
    case GroupKind::O:
      break;
  }
  if (s.n <= 2) throw std::domain_error("no n(chi) formula for O with n <= 2");
  require_nonnegative(chi, chi.size());
  long d = 0;
  if (s.n % 2 == 1) {
    if (k(r) % 2 != 0) throw std::domain_error("k_r must be even for O with odd n, got " + format_phi(chi));
    for (int i = 1; i < r; ++i) d += i * k(i);
    return d + r * k(r) / 2;
  }
  if ((k(r - 1) + k(r)) % 2 != 0) {
    throw std::domain_error("k_{r-1} + k_r must be even for O with even n, got " + format_phi(chi));
  }
  for (int i = 1; i <= r - 2; ++i) d += i * k(i);
  return d + r * (k(r - 1) + k(r)) / 2 - std::min(k(r - 1), k(r));
}

long n_chi_search_bound(const Scenario& s, const PhiWeight& chi) {
  require_length(s, chi);
  long bound = 0;
  for (std::size_t i = 0; i < chi.size(); ++i) {
    const long weight = s.group == GroupKind::GL && i + 1 == chi.size() ? s.n : static_cast<long>(i + 1);
    bound += weight * std::labs(chi[i]);
  }
  return bound;
}

std::optional<long> n_chi_oracle(const GeneratorSet& gs, const PhiWeight& chi, long degree_cap) {
  const Scenario& s = gs.scenario;
  require_length(s, chi);
  const std::size_t q = chi.size();
  const PhiWeight zero(q, 0);
  if (chi == zero) return 0;

  std::map<PhiWeight, long> cheapest;
  for (const auto& g : gs.gens) {
    PhiWeight w = integral_phi(s, g.weight);
    if (w == zero) continue;
    auto [it, inserted] = cheapest.emplace(w, g.degree);
    if (!inserted) it->second = std::min<long>(it->second, g.degree);
  }
  if (cheapest.empty()) return std::nullopt;

  // Per coordinate: whether every step is >= 0 (or <= 0), and the largest
  // |w_i| / deg among steps, bounding how far the remaining budget can move it.
  std::vector<bool> never_down(q, true), never_up(q, true);
  std::vector<Scalar> rate(q, Scalar(0));
  for (const auto& [w, deg] : cheapest) {
    for (std::size_t i = 0; i < q; ++i) {
      if (w[i] < 0) never_down[i] = false;
      if (w[i] > 0) never_up[i] = false;
      Scalar step(std::labs(w[i]), deg);
      step.canonicalize();
      if (step > rate[i]) rate[i] = step;
    }
  }
  // Lower bound on the degree still needed from `state`, or -1 if chi is
  // unreachable from it. Each unit of degree moves coordinate i by at most
  // rate[i], so the bound is admissible and consistent (A* search).
  const auto remaining = [&](const PhiWeight& state) -> long {
    long h = 0;
    for (std::size_t i = 0; i < q; ++i) {
      const long diff = chi[i] - state[i];
      if (diff == 0) continue;
      if ((diff < 0 && never_down[i]) || (diff > 0 && never_up[i])) return -1;
      const Scalar steps = Scalar(std::labs(diff)) / rate[i];
      mpz_class up;
      mpz_cdiv_q(up.get_mpz_t(), steps.get_num_mpz_t(), steps.get_den_mpz_t());
      h = std::max(h, up.get_si());
    }
    return h;
  };

  using Entry = std::tuple<long, long, PhiWeight>;  // (estimate, degree, state)
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> frontier;
  std::map<PhiWeight, long> best;
  const long h0 = remaining(zero);
  if (h0 < 0 || h0 > degree_cap) return std::nullopt;
  frontier.emplace(h0, 0, zero);
  best[zero] = 0;
  while (!frontier.empty()) {
    auto [estimate, degree, state] = frontier.top();
    frontier.pop();
    if (best[state] < degree) continue;
    if (state == chi) return degree;
    for (const auto& [w, deg] : cheapest) {
      const long next_degree = degree + deg;
      PhiWeight next = state;
      for (std::size_t i = 0; i < q; ++i) next[i] += w[i];
      const long h = remaining(next);
      if (h < 0 || next_degree + h > degree_cap) continue;
      auto it = best.find(next);
      if (it != best.end() && it->second <= next_degree) continue;
      best[next] = next_degree;
      frontier.emplace(next_degree + h, next_degree, std::move(next));
    }
  }
  return std::nullopt;
}

std::map<Weight, std::size_t> u_invariant_weights(const Scenario& s, int t, std::size_t monomial_cap) {
  std::map<Weight, std::size_t> out;
  for (const auto& [key, dim] : block_dimensions_U_inv(s, t, std::nullopt, monomial_cap)) out[key.weight] += dim;
  return out;
}

std::optional<int> m_chi_oracle(const Scenario& s, const PhiWeight& chi, int degree_cap, std::size_t monomial_cap) {
  require_length(s, chi);
  const Weight w = weight_from_phi(s, chi);
  for (int t = 0; t <= degree_cap; ++t) {
    if (graded_dimension_U_inv(s, t, w, monomial_cap) > 0) return t;
  }
  return std::nullopt;
}

}  // namespace covariant
