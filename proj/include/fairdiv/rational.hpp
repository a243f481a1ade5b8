#pragma once

#include <string>

#include <Eigen/Dense>
#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

namespace fairdiv {

/// Exact rational scalar. GMP keeps every value canonical (lowest terms,
/// positive denominator), so equality and ordering are exact everywhere.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

using Mat = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using Vec = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using Index = Eigen::Index;

/**
 * Parse a rational from its text forms: an optionally signed integer
 * ("7", "-3"), a decimal string ("0.625" -> 5/8), or an explicit
 * fraction "p/q" with q > 0.
 *
 * @throws std::invalid_argument on malformed text or non-positive
 *         denominator.
 */
Rational parse_rational(const std::string& text);

/// Canonical "p/q" rendering with an explicit denominator ("3/2", "0/1").
std::string to_pq_string(const Rational& r);

/// Decimal rendering for human-readable reports only; never fed back into
/// the exact core.
double to_double(const Rational& r);

/// Smallest integer >= r.
Integer ceil_rational(const Rational& r);

}  // namespace fairdiv
