#include <catgraph/numbers.hpp>

#include <catgraph/errors.hpp>

#include <stdexcept>

namespace catgraph {

Nat binomial(const Nat& n, const Nat& k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Nat kk = k;
  if (n - k < kk) kk = n - k;
  Nat result = 1;
  for (Nat i = 1; i <= kk; ++i) {
    result *= n - kk + i;
    result /= i;  // exact: result is binom(n-kk+i, i) after this step
  }
  return result;
}

Nat factorial(const Nat& n) {
  if (n < 0) throw std::invalid_argument("factorial of negative value");
  Nat result = 1;
  for (Nat i = 2; i <= n; ++i) result *= i;
  return result;
}

Nat catalan(const Nat& n) {
  if (n < 0) throw std::invalid_argument("catalan index must be >= 0");
  return binomial(2 * n, n) / (n + 1);
}

Nat fuss_catalan(const Nat& n, const Nat& k) {
  if (k < 1) throw std::invalid_argument("fuss_catalan requires k >= 1");
  if (n < 0) throw std::invalid_argument("fuss_catalan index must be >= 0");
  return binomial(n * (k + 1), n) / (k * n + 1);
}

Nat catalan_triangle(const Nat& n, const Nat& k) {
  if (k < 0 || n < k)
    throw std::invalid_argument("catalan_triangle requires n >= k >= 0");
  return binomial(n + k, k) * (n - k + 1) / (n + 1);
}

Rational weak_cat(const Nat& a, const Nat& b) {
  if (a < 0 || b < 0) throw std::invalid_argument("weak_cat arguments must be >= 0");
  if (a == 0 && b == 0)
    throw std::invalid_argument("weak_cat is undefined at (0, 0)");
  return Rational(binomial(a + b, a), a + b);
}

Nat strict_cat(const Nat& a, const Nat& b) {
  if (gcd(a, b) != 1) throw NotCoprimeError(a, b);
  const Rational value = weak_cat(a, b);
  if (denominator(value) != 1)
    throw std::logic_error("strict_cat produced a non-integer on coprime input");
  return numerator(value);
}

Nat internal_triangles(const Nat& n) {
  if (n < 4) return 0;
  return 2 * binomial(2 * n - 3, n - 4);
}

Nat super_catalan(const Nat& m, const Nat& n) {
  if (m < 0 || n < 0)
    throw std::invalid_argument("super_catalan arguments must be >= 0");
  return factorial(2 * m) * factorial(2 * n) /
         (factorial(m) * factorial(n) * factorial(m + n));
}

std::string to_string(const Rational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) s += "/" + denominator(r).str();
  return s;
}

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(Nat(text));
  const Nat num(text.substr(0, slash));
  const Nat den(text.substr(slash + 1));
  if (den <= 0) throw std::invalid_argument("rational denominator must be positive");
  return Rational(num, den);
}

}  // namespace catgraph
