#include "grhopf/qt_polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace grhopf {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("Z[q,t] coefficient overflow in addition");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw std::overflow_error("Z[q,t] coefficient overflow in multiplication");
  }
  return r;
}

namespace {

bool exp_less(const QTPolynomial::Term& a, const QTPolynomial::Term& b) {
  return a.q != b.q ? a.q < b.q : a.t < b.t;
}

std::uint32_t checked_exp_add(std::uint32_t a, std::uint32_t b) {
  std::uint32_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("Z[q,t] exponent overflow");
  return r;
}

}  // namespace

QTPolynomial QTPolynomial::monomial(std::uint32_t q, std::uint32_t t, std::int64_t c) {
  QTPolynomial p;
  if (c != 0) p.terms_.push_back({q, t, c});
  return p;
}

QTPolynomial QTPolynomial::from_unsorted(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), exp_less);
  QTPolynomial p;
  for (const auto& term : terms) {
    if (!p.terms_.empty() && p.terms_.back().q == term.q && p.terms_.back().t == term.t) {
      p.terms_.back().coeff = checked_add(p.terms_.back().coeff, term.coeff);
    } else {
      p.terms_.push_back(term);
    }
  }
  std::erase_if(p.terms_, [](const Term& x) { return x.coeff == 0; });
  return p;
}

bool QTPolynomial::is_one() const {
  return terms_.size() == 1 && terms_[0].q == 0 && terms_[0].t == 0 && terms_[0].coeff == 1;
}

bool QTPolynomial::has_q() const {
  return std::any_of(terms_.begin(), terms_.end(), [](const Term& x) { return x.q > 0; });
}

bool QTPolynomial::has_t() const {
  return std::any_of(terms_.begin(), terms_.end(), [](const Term& x) { return x.t > 0; });
}

QTPolynomial& QTPolynomial::operator+=(const QTPolynomial& o) {
  if (o.is_zero()) return *this;
  std::vector<Term> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  auto i = terms_.begin();
  auto j = o.terms_.begin();
  while (i != terms_.end() || j != o.terms_.end()) {
    if (j == o.terms_.end() || (i != terms_.end() && exp_less(*i, *j))) {
      merged.push_back(*i++);
    } else if (i == terms_.end() || exp_less(*j, *i)) {
      merged.push_back(*j++);
    } else {
      std::int64_t c = checked_add(i->coeff, j->coeff);
      if (c != 0) merged.push_back({i->q, i->t, c});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

QTPolynomial& QTPolynomial::operator-=(const QTPolynomial& o) { return *this += -o; }

QTPolynomial QTPolynomial::operator-() const {
  QTPolynomial p = *this;
  for (auto& term : p.terms_) term.coeff = checked_mul(term.coeff, -1);
  return p;
}

QTPolynomial operator*(const QTPolynomial& a, const QTPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.is_one()) return b;
  if (b.is_one()) return a;
  std::vector<QTPolynomial::Term> out;
  out.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) {
      out.push_back({checked_exp_add(x.q, y.q), checked_exp_add(x.t, y.t), checked_mul(x.coeff, y.coeff)});
    }
  }
  return QTPolynomial::from_unsorted(std::move(out));
}

QTPolynomial QTPolynomial::swap_qt() const {
  std::vector<Term> out;
  for (const auto& x : terms_) out.push_back({x.t, x.q, x.coeff});
  return from_unsorted(std::move(out));
}

QTPolynomial QTPolynomial::specialize(bool q_to_one, bool t_to_one) const {
  std::vector<Term> out;
  for (const auto& x : terms_) out.push_back({q_to_one ? 0u : x.q, t_to_one ? 0u : x.t, x.coeff});
  return from_unsorted(std::move(out));
}

Rational QTPolynomial::eval(const Rational& q, const Rational& t) const {
  Rational acc = 0;
  for (const auto& x : terms_) {
    Rational term = x.coeff;
    for (std::uint32_t i = 0; i < x.q; ++i) term *= q;
    for (std::uint32_t i = 0; i < x.t; ++i) term *= t;
    acc += term;
  }
  return acc;
}

std::string QTPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& x : terms_) {
    std::int64_t c = x.coeff;
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    std::uint64_t mag = c < 0 ? 0ULL - static_cast<std::uint64_t>(c) : static_cast<std::uint64_t>(c);
    std::string mono;
    auto power = [](const char* var, std::uint32_t e) {
      return e == 1 ? std::string(var) : std::string(var) + "^" + std::to_string(e);
    };
    if (x.q) mono += power("q", x.q);
    if (x.t) mono += (mono.empty() ? "" : "*") + power("t", x.t);
    if (mono.empty()) {
      out += std::to_string(mag);
    } else if (mag == 1) {
      out += mono;
    } else {
      out += std::to_string(mag) + "*" + mono;
    }
  }
  return out;
}

QTPolynomial poly_arith(const QTPolynomial& a, const QTPolynomial& b, PolyOp op) {
  switch (op) {
    case PolyOp::Add:
      return a + b;
    case PolyOp::Sub:
      return a - b;
    case PolyOp::Mul:
      return a * b;
  }
  return {};
}

QTPolynomial poly_monomial(std::uint32_t qexp, std::uint32_t texp, std::int64_t c) {
  return QTPolynomial::monomial(qexp, texp, c);
}

Rational poly_eval(const QTPolynomial& p, const Rational& q, const Rational& t) { return p.eval(q, t); }

}  // namespace grhopf
