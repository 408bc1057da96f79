#include "covariant/fundamental_weights.hpp"

#include <stdexcept>

namespace covariant {

namespace {

enum class Family { A, B, C, D, D1, Trivial };

Family family(const Scenario& s) {
  switch (s.group) {
    case GroupKind::GL:
      return Family::A;
    case GroupKind::Sp:
      return Family::C;
    case GroupKind::O:
      if (s.n == 1) return Family::Trivial;
      if (s.n == 2) return Family::D1;
      return s.n % 2 == 1 ? Family::B : Family::D;
  }
  return Family::A;
}

std::size_t weight_length(const Scenario& s) { return static_cast<std::size_t>(s.rank()); }

}  // namespace

std::vector<Scalar> to_phi(const Scenario& s, std::span<const Scalar> c) {
  const std::size_t q = weight_length(s);
  if (c.size() != q) throw std::invalid_argument("weight length mismatch for scenario");
  std::vector<Scalar> k(q, Scalar(0));
  if (q == 0) return k;
  for (std::size_t i = 0; i + 1 < q; ++i) k[i] = c[i] - c[i + 1];
  switch (family(s)) {
    case Family::A:
    case Family::C:
    case Family::D1:
      k[q - 1] = c[q - 1];
      break;
    case Family::B:
      k[q - 1] = 2 * c[q - 1];
      break;
    case Family::D:
      k[q - 2] = c[q - 2] + c[q - 1];
      k[q - 1] = c[q - 2] - c[q - 1];
      break;
    case Family::Trivial:
      break;
  }
  return k;
}

std::vector<Scalar> to_eps(const Scenario& s, std::span<const Scalar> k) {
  const std::size_t q = weight_length(s);
  if (k.size() != q) throw std::invalid_argument("weight length mismatch for scenario");
  std::vector<Scalar> c(q, Scalar(0));
  if (q == 0) return c;
  const Family f = family(s);
  // Contribution of the phi_i that are plain partial sums eps_1 + .. + eps_i.
  const std::size_t plain = f == Family::D ? q - 2 : (f == Family::B ? q - 1 : q);
  for (std::size_t i = 0; i < plain; ++i) {
    for (std::size_t j = 0; j <= i; ++j) c[j] += k[i];
  }
  if (f == Family::B) {
    for (std::size_t j = 0; j < q; ++j) c[j] += k[q - 1] / 2;
  } else if (f == Family::D) {
    for (std::size_t j = 0; j + 1 < q; ++j) c[j] += (k[q - 2] + k[q - 1]) / 2;
    c[q - 1] += (k[q - 2] - k[q - 1]) / 2;
  }
  return c;
}

std::vector<long> integral_phi(const Scenario& s, const Weight& w) {
  const auto phi = to_phi(s, w.eps);
  std::vector<long> k;
  k.reserve(phi.size());
  for (const auto& x : phi) {
    if (!is_integer(x)) {
      throw std::domain_error("weight " + to_string(w) + " has non-integral phi coordinate " + to_string(x));
    }
    k.push_back(to_long(x));
  }
  return k;
}

Weight weight_from_phi(const Scenario& s, std::span<const long> k) {
  std::vector<Scalar> phi(k.begin(), k.end());
  return {to_eps(s, phi)};
}

}  // namespace covariant
