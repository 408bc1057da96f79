#ifndef COVARIANT_SCALAR_HPP
#define COVARIANT_SCALAR_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace covariant {

/// Exact rational number. GMP keeps every value in lowest terms with a
/// positive denominator after each arithmetic operation.
using Scalar = mpq_class;

/// Parses "p/q" or "p" (optional sign). Throws std::invalid_argument on
/// malformed input or a zero denominator.
Scalar parse_scalar(std::string_view text);

/// Canonical fraction string: "p/q", or "p" when the denominator is 1.
std::string to_string(const Scalar& value);

bool is_integer(const Scalar& value);

/// Converts an integral scalar to long. Throws std::domain_error otherwise.
long to_long(const Scalar& value);

}  // namespace covariant

#endif  // COVARIANT_SCALAR_HPP
