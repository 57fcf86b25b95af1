#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace grhopf {

using Rational = boost::multiprecision::cpp_rational;

/// Element of Z[q,t] with nonnegative exponents.
///
/// Terms are kept sorted by (q exponent, t exponent) with no zero
/// coefficients, so equality is structural. Coefficients are 64-bit with
/// overflow checks; any overflow throws std::overflow_error rather than
/// wrapping.
class QTPolynomial {
 public:
  struct Term {
    std::uint32_t q = 0;
    std::uint32_t t = 0;
    std::int64_t coeff = 0;
    auto operator<=>(const Term&) const = default;
  };

  QTPolynomial() = default;
  static QTPolynomial monomial(std::uint32_t q, std::uint32_t t, std::int64_t c = 1);
  static QTPolynomial constant(std::int64_t c) { return monomial(0, 0, c); }
  static QTPolynomial one() { return constant(1); }
  static QTPolynomial zero() { return {}; }

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool has_q() const;
  bool has_t() const;

  QTPolynomial& operator+=(const QTPolynomial& o);
  QTPolynomial& operator-=(const QTPolynomial& o);
  QTPolynomial& operator*=(const QTPolynomial& o) { return *this = *this * o; }
  friend QTPolynomial operator+(QTPolynomial a, const QTPolynomial& b) { return a += b; }
  friend QTPolynomial operator-(QTPolynomial a, const QTPolynomial& b) { return a -= b; }
  friend QTPolynomial operator*(const QTPolynomial& a, const QTPolynomial& b);
  QTPolynomial operator-() const;

  /// q <-> t.
  QTPolynomial swap_qt() const;
  /// Substitutes q = 1 and/or t = 1.
  QTPolynomial specialize(bool q_to_one, bool t_to_one) const;
  Rational eval(const Rational& q, const Rational& t) const;

  /// Human-readable form such as `-q^10` or `1 + q^2*t`.
  std::string to_string() const;

  bool operator==(const QTPolynomial&) const = default;
  auto operator<=>(const QTPolynomial&) const = default;

 private:
  static QTPolynomial from_unsorted(std::vector<Term> terms);
  std::vector<Term> terms_;
};

enum class PolyOp { Add, Sub, Mul };

QTPolynomial poly_arith(const QTPolynomial& a, const QTPolynomial& b, PolyOp op);
QTPolynomial poly_monomial(std::uint32_t qexp, std::uint32_t texp, std::int64_t c);
Rational poly_eval(const QTPolynomial& p, const Rational& q, const Rational& t);

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

}  // namespace grhopf
