#pragma once

#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "tautilt/field.hpp"

namespace tautilt::poly {

/// Dense univariate polynomial, coefficients from degree 0 upwards, with no
/// trailing zeros. The zero polynomial is the empty vector.
using Poly = std::vector<Scalar>;

int degree(const Poly& p);
Poly trim(Poly p);
Poly monic(const Field& f, const Poly& p);
Poly add(const Field& f, const Poly& a, const Poly& b);
Poly sub(const Field& f, const Poly& a, const Poly& b);
Poly mul(const Field& f, const Poly& a, const Poly& b);
std::pair<Poly, Poly> divmod(const Field& f, const Poly& a, const Poly& b);
Poly gcd(const Field& f, Poly a, Poly b);
Poly derivative(const Field& f, const Poly& p);
Poly power(const Field& f, const Poly& p, unsigned e);
/// base^e mod m, e given as a big integer.
Poly powmod(const Field& f, const Poly& base, const mpz_class& e, const Poly& m);
Scalar evaluate(const Field& f, const Poly& p, const Scalar& x);

/// Yun's algorithm: monic p = prod s_i^i with s_i squarefree and pairwise
/// coprime. Entry i-1 of the result is s_i (constant 1 when absent).
/// Assumes characteristic 0 or larger than deg p.
std::vector<Poly> squarefree_decomposition(const Field& f, const Poly& p);

/// Some root of p in the base field, if one is found. Over the rationals the
/// rational root test is used (trial division for divisors stops at
/// `divisor_cap`); over a prime field, Cantor-Zassenhaus on gcd(x^p - x, p).
std::optional<Scalar> find_root(const Field& f, const Poly& p, std::mt19937_64& rng,
                                long divisor_cap = 1000000L);

/// A nontrivial coprime factorization m = a * b, if one can be found.
std::optional<std::pair<Poly, Poly>> coprime_split(const Field& f, const Poly& m, std::mt19937_64& rng);

}  // namespace tautilt::poly
