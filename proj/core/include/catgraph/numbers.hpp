#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace catgraph {

// All arithmetic in this library is exact. Nat is an arbitrary-precision
// integer that is non-negative everywhere it appears in a public contract;
// Rational is always kept in lowest terms with a positive denominator.
using Nat = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Binomial coefficient over the extended domain: 0 whenever k < 0, n < 0 or
// k > n. Computed multiplicatively with an exact division per factor, so
// intermediates never exceed the result by more than one factor.
Nat binomial(const Nat& n, const Nat& k);

Nat factorial(const Nat& n);

// C_n = binom(2n, n) / (n + 1); 1, 1, 2, 5, 14, ...
Nat catalan(const Nat& n);

// C_{n,k} = binom(n(k+1), n) / (kn + 1). Requires k >= 1; C_{n,1} = C_n.
Nat fuss_catalan(const Nat& n, const Nat& k);

// Triangle entry C(n,k) = (n-k+1)/(n+1) * binom(n+k, k). Requires n >= k >= 0.
Nat catalan_triangle(const Nat& n, const Nat& k);

// cat(a,b) = binom(a+b, a) / (a+b), an exact rational that need not be an
// integer. Requires that a and b are not both zero.
Rational weak_cat(const Nat& a, const Nat& b);

// cat(a,b) restricted to coprime a, b, where the value is always integral.
// Throws NotCoprimeError otherwise.
Nat strict_cat(const Nat& a, const Nat& b);

// t(n) = 2 * binom(2n-3, n-4): triangles drawable inside an (n+2)-gon using
// none of its sides. Zero for n < 4.
Nat internal_triangles(const Nat& n);

// S(m,n) = (2m)! (2n)! / (m! n! (m+n)!), symmetric in m and n.
Nat super_catalan(const Nat& m, const Nat& n);

// "p" when q == 1, otherwise "p/q".
std::string to_string(const Rational& r);

// Parses "p" or "p/q"; q must be positive.
Rational parse_rational(const std::string& text);

}  // namespace catgraph
