#include "covariant/scalar.hpp"

#include <stdexcept>

namespace covariant {

namespace {

bool valid_integer(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!valid_integer(num) || !valid_integer(den) || den.front() == '-' || den.front() == '+') {
    throw std::invalid_argument("malformed fraction '" + std::string(text) + "'");
  }
  auto strip_plus = [](std::string_view s) {
    return std::string(s.front() == '+' ? s.substr(1) : s);
  };
  mpz_class p(strip_plus(num), 10);
  mpz_class q(strip_plus(den), 10);
  if (q == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Scalar result(p, q);
  result.canonicalize();
  return result;
}

std::string to_string(const Scalar& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

bool is_integer(const Scalar& value) { return value.get_den() == 1; }

long to_long(const Scalar& value) {
  if (!is_integer(value) || !value.get_num().fits_slong_p()) {
    throw std::domain_error("scalar " + to_string(value) + " is not a machine integer");
  }
  return value.get_num().get_si();
}

}  // namespace covariant
