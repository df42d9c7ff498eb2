// Exact rational scalars and vectors.
//
// Every quantity in the library is an exact rational; GMP's mpq_class keeps
// values canonical (lowest terms, positive denominator) after each operation.

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace kstab {

using Rational = mpq_class;
using Integer = mpz_class;

/// A point of M_R or N_R with exact coordinates.
using Vec = std::vector<Rational>;

/// Integer lattice point; used by the enumeration kernels.
using IntVec = std::vector<std::int64_t>;

/// Thrown for malformed textual input (exit code 2 in the CLI).
class ParseError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Thrown when input describes invalid geometry (exit code 3 in the CLI).
class GeometryError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Thrown when an operation's precondition on numeric parameters fails.
class DomainError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

Integer floor(const Rational& q);
Integer ceil(const Rational& q);
Rational abs(const Rational& q);
Integer factorial(int n);
/// p/q in lowest terms (the two-argument mpq_class constructor does not reduce).
Rational frac(long p, long q);

/// Approximate value for display only.
double to_double(const Rational& q);

/// Dot product; throws GeometryError on dimension mismatch.
Rational dot(const Vec& a, const Vec& b);

Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator-(const Vec& a);
Vec operator*(const Rational& s, const Vec& a);

Vec zero_vec(int dim);
Vec unit_vec(int dim, int axis);
Vec to_vec(const IntVec& v);
Vec to_vec(std::initializer_list<long> coords);

bool is_zero(const Vec& v);
bool is_integral(const Vec& v);

/// Least common multiple of the denominators of the entries.
Integer common_denominator(const Vec& v);

/// Positive multiple of v that is a primitive integer vector. v must be nonzero.
Vec primitive_integer(const Vec& v);

/// Lexicographic comparison used for deterministic vertex ordering.
bool lex_less(const Vec& a, const Vec& b);

std::string to_string(const Vec& v);

}  // namespace kstab
