#include "covariant/polynomial.hpp"

#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace covariant {

namespace {

Exponents add_exponents(const Exponents& a, const Exponents& b) {
  Exponents out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    const unsigned sum = unsigned{a[i]} + unsigned{b[i]};
    if (sum > std::numeric_limits<std::uint8_t>::max()) {
      throw std::overflow_error("polynomial exponent exceeds 255");
    }
    out[i] = static_cast<std::uint8_t>(sum);
  }
  return out;
}

int total_degree(const Exponents& e) {
  return std::accumulate(e.begin(), e.end(), 0, [](int s, std::uint8_t x) { return s + x; });
}

}  // namespace

Polynomial Polynomial::constant(std::size_t num_vars, const Scalar& c) {
  Polynomial p(num_vars);
  p.add_term(Exponents(num_vars, 0), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t num_vars, std::size_t index) {
  if (index >= num_vars) throw std::out_of_range("variable index out of range");
  Exponents e(num_vars, 0);
  e[index] = 1;
  Polynomial p(num_vars);
  p.add_term(e, Scalar(1));
  return p;
}

Polynomial Polynomial::term(Exponents exps, const Scalar& c) {
  Polynomial p(exps.size());
  p.add_term(exps, c);
  return p;
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
  return d;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int d = total_degree(terms_.begin()->first);
  for (const auto& [e, c] : terms_) {
    if (total_degree(e) != d) return false;
  }
  return true;
}

void Polynomial::require_same_universe(const Polynomial& other) const {
  if (num_vars_ != other.num_vars_) {
    throw std::invalid_argument("polynomials over different variable universes (" +
                                std::to_string(num_vars_) + " vs " +
                                std::to_string(other.num_vars_) + ")");
  }
}

void Polynomial::add_term(const Exponents& exps, const Scalar& c) {
  if (exps.size() != num_vars_) throw std::invalid_argument("exponent list length mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exps, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  require_same_universe(rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  require_same_universe(rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
  lhs.require_same_universe(rhs);
  Polynomial out(lhs.num_vars_);
  for (const auto& [ea, ca] : lhs.terms_) {
    for (const auto& [eb, cb] : rhs.terms_) {
      auto [it, inserted] = out.terms_.try_emplace(add_exponents(ea, eb), ca * cb);
      if (!inserted) it->second += ca * cb;
    }
  }
  std::erase_if(out.terms_, [](const auto& kv) { return kv.second == 0; });
  return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
  *this = *this * rhs;
  return *this;
}

Polynomial& Polynomial::operator*=(const Scalar& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coeff] : terms_) coeff *= c;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial out(*this);
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

Scalar Polynomial::evaluate(std::span<const Scalar> point) const {
  if (point.size() != num_vars_) {
    throw std::invalid_argument("evaluation point has " + std::to_string(point.size()) +
                                " coordinates, expected " + std::to_string(num_vars_));
  }
  Scalar total = 0;
  Scalar mono;
  for (const auto& [e, c] : terms_) {
    mono = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (unsigned k = 0; k < e[i]; ++k) mono *= point[i];
    }
    total += mono;
  }
  return total;
}

Polynomial Polynomial::substitute(std::span<const Polynomial> images) const {
  if (images.size() != num_vars_) throw std::invalid_argument("substitution arity mismatch");
  const std::size_t target_vars = images.empty() ? 0 : images.front().num_vars();
  for (const auto& img : images) {
    if (img.num_vars() != target_vars) {
      throw std::invalid_argument("substitution images over different universes");
    }
  }
  // powers[i][k] = images[i]^k, filled on demand
  std::vector<std::vector<Polynomial>> powers(num_vars_);
  auto power = [&](std::size_t i, unsigned k) -> const Polynomial& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(Polynomial::constant(target_vars, 1));
    while (cache.size() <= k) cache.push_back(cache.back() * images[i]);
    return cache[k];
  };
  Polynomial out(target_vars);
  for (const auto& [e, c] : terms_) {
    Polynomial prod = Polynomial::constant(target_vars, c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] != 0) prod = prod * power(i, e[i]);
    }
    out += prod;
  }
  return out;
}

Polynomial Polynomial::derivative(std::size_t var) const {
  if (var >= num_vars_) throw std::out_of_range("variable index out of range");
  Polynomial out(num_vars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponents d = e;
    --d[var];
    out.add_term(d, c * static_cast<unsigned long>(e[var]));
  }
  return out;
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial out = Polynomial::constant(num_vars_, 1);
  for (unsigned i = 0; i < exponent; ++i) out = out * *this;
  return out;
}

std::string format_polynomial(const Polynomial& p, std::span<const std::string> names) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    Scalar mag = abs(c);
    out += first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += i < names.size() ? names[i] : "v" + std::to_string(i);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      out += to_string(mag);
    } else if (mag == 1) {
      out += mono;
    } else {
      out += to_string(mag) + "*" + mono;
    }
  }
  return out;
}

}  // namespace covariant
