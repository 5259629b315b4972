#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace lpa {

// Univariate polynomial with rational coefficients, stored lowest degree first
// with no trailing zeros.
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<mpq_class> coefficients);

  // Sparse text such as "1 - 3/2 x + x^3". Throws ParseError.
  static RationalPolynomial parse(std::string_view text);
  static RationalPolynomial constant(const mpq_class& c);
  static RationalPolynomial monomial(const mpq_class& c, std::size_t degree);

  bool is_zero() const noexcept { return c_.empty(); }
  // Degree of a nonzero polynomial; -1 for zero.
  long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
  const std::vector<mpq_class>& coefficients() const noexcept { return c_; }
  mpq_class coefficient(std::size_t i) const { return i < c_.size() ? c_[i] : mpq_class(0); }
  const mpq_class& leading() const;
  mpq_class evaluate(const mpq_class& x) const;

  RationalPolynomial monic() const;
  std::string to_string(char var = 'x') const;

  friend RationalPolynomial operator+(const RationalPolynomial&, const RationalPolynomial&);
  friend RationalPolynomial operator-(const RationalPolynomial&, const RationalPolynomial&);
  friend RationalPolynomial operator*(const RationalPolynomial&, const RationalPolynomial&);
  friend bool operator==(const RationalPolynomial& a, const RationalPolynomial& b) {
    return a.c_ == b.c_;
  }

 private:
  void trim();
  std::vector<mpq_class> c_;
};

struct DivisionResult {
  RationalPolynomial quotient;
  RationalPolynomial remainder;
};

// Throws InvalidInput on division by zero.
DivisionResult divide(const RationalPolynomial& a, const RationalPolynomial& b);
// Monic greatest common divisor; gcd(0, 0) = 0.
RationalPolynomial gcd(const RationalPolynomial& a, const RationalPolynomial& b);

enum class Irreducibility { Verified, Reducible, Unverified };

// Exact for degree at most 3 via the rational root test; Unverified above.
Irreducibility check_irreducible(const RationalPolynomial& f);
std::string to_string(Irreducibility irr);

}  // namespace lpa
