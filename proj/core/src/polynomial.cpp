#include "lpa/polynomial.hpp"

#include <cctype>
#include <set>

#include "lpa/error.hpp"

namespace lpa {

RationalPolynomial::RationalPolynomial(std::vector<mpq_class> coefficients)
    : c_(std::move(coefficients)) {
  for (auto& c : c_) c.canonicalize();
  trim();
}

void RationalPolynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

RationalPolynomial RationalPolynomial::constant(const mpq_class& c) {
  return RationalPolynomial(std::vector<mpq_class>{c});
}

RationalPolynomial RationalPolynomial::monomial(const mpq_class& c, std::size_t degree) {
  std::vector<mpq_class> v(degree + 1, 0);
  v[degree] = c;
  return RationalPolynomial(std::move(v));
}

const mpq_class& RationalPolynomial::leading() const {
  if (c_.empty()) throw InvalidInput("the zero polynomial has no leading coefficient");
  return c_.back();
}

mpq_class RationalPolynomial::evaluate(const mpq_class& x) const {
  mpq_class acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RationalPolynomial RationalPolynomial::monic() const {
  if (is_zero()) return *this;
  RationalPolynomial p = *this;
  const mpq_class lead = leading();
  for (auto& c : p.c_) c /= lead;
  return p;
}

std::string RationalPolynomial::to_string(char var) const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    const bool negative = c_[i] < 0;
    const mpq_class magnitude = abs(c_[i]);
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    if (i == 0) {
      out += magnitude.get_str();
      continue;
    }
    if (magnitude != 1) out += magnitude.get_str() + " ";
    out += var;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

RationalPolynomial operator+(const RationalPolynomial& a, const RationalPolynomial& b) {
  std::vector<mpq_class> c(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
  return RationalPolynomial(std::move(c));
}

RationalPolynomial operator-(const RationalPolynomial& a, const RationalPolynomial& b) {
  std::vector<mpq_class> c(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
  return RationalPolynomial(std::move(c));
}

RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpq_class> c(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return RationalPolynomial(std::move(c));
}

DivisionResult divide(const RationalPolynomial& a, const RationalPolynomial& b) {
  if (b.is_zero()) throw InvalidInput("polynomial division by zero");
  RationalPolynomial q;
  RationalPolynomial r = a;
  while (!r.is_zero() && r.degree() >= b.degree()) {
    const auto shift = static_cast<std::size_t>(r.degree() - b.degree());
    const RationalPolynomial t = RationalPolynomial::monomial(r.leading() / b.leading(), shift);
    q = q + t;
    r = r - t * b;
  }
  return {q, r};
}

RationalPolynomial gcd(const RationalPolynomial& a, const RationalPolynomial& b) {
  RationalPolynomial x = a;
  RationalPolynomial y = b;
  while (!y.is_zero()) {
    RationalPolynomial r = divide(x, y).remainder;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view s) : s_(s) {}

  RationalPolynomial run() {
    std::vector<mpq_class> coeffs;
    skip();
    if (pos_ == s_.size()) fail("empty polynomial");
    bool first = true;
    while (pos_ < s_.size()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      mpq_class c = 1;
      bool have_number = false;
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        c = number();
        have_number = true;
        skip();
        if (peek() == '*') {
          ++pos_;
          skip();
          if (peek() != 'x') fail("expected 'x' after '*'");
        }
      }
      std::size_t degree = 0;
      if (peek() == 'x') {
        ++pos_;
        degree = 1;
        skip();
        if (peek() == '^') {
          ++pos_;
          skip();
          if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent");
          degree = static_cast<std::size_t>(integer().get_ui());
          skip();
        }
      } else if (!have_number) {
        fail("expected a coefficient or 'x'");
      }
      if (coeffs.size() <= degree) coeffs.resize(degree + 1, 0);
      coeffs[degree] += sign * c;
    }
    return RationalPolynomial(std::move(coeffs));
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(1, pos_ + 1, what); }

  mpz_class integer() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (pos_ - start > 4096) fail("number too long");
    return mpz_class(std::string(s_.substr(start, pos_ - start)));
  }
  mpq_class number() {
    mpz_class num = integer();
    mpz_class den = 1;
    if (peek() == '/') {
      ++pos_;
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected denominator");
      den = integer();
      if (den == 0) fail("zero denominator");
    }
    mpq_class q(num, den);
    q.canonicalize();
    return q;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

void divisors(mpz_class n, std::set<mpz_class>& out) {
  n = abs(n);
  for (mpz_class d = 1; d * d <= n; ++d)
    if (n % d == 0) {
      out.insert(d);
      out.insert(n / d);
    }
}

}  // namespace

RationalPolynomial RationalPolynomial::parse(std::string_view text) { return PolyParser(text).run(); }

Irreducibility check_irreducible(const RationalPolynomial& f) {
  const long d = f.degree();
  if (d < 1) return Irreducibility::Reducible;
  if (d == 1) return Irreducibility::Verified;
  if (d > 3) return Irreducibility::Unverified;
  // Degree 2 or 3 is reducible exactly when it has a rational root.
  mpz_class lcm_den = 1;
  for (const auto& c : f.coefficients()) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<mpz_class> z;
  for (const auto& c : f.coefficients()) z.push_back(mpz_class(c * lcm_den));
  if (z.front() == 0) return Irreducibility::Reducible;
  const mpz_class bound = mpz_class(1) << 32;
  if (abs(z.front()) > bound || abs(z.back()) > bound) return Irreducibility::Unverified;
  std::set<mpz_class> ps, qs;
  divisors(z.front(), ps);
  divisors(z.back(), qs);
  for (const auto& p : ps)
    for (const auto& q : qs)
      for (int sign : {1, -1}) {
        mpq_class root(sign * p, q);
        root.canonicalize();
        if (f.evaluate(root) == 0) return Irreducibility::Reducible;
      }
  return Irreducibility::Verified;
}

std::string to_string(Irreducibility irr) {
  switch (irr) {
    case Irreducibility::Verified: return "verified";
    case Irreducibility::Reducible: return "reducible";
    case Irreducibility::Unverified: return "unverified";
  }
  return "unverified";
}

}  // namespace lpa
