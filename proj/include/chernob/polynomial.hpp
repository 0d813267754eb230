#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "chernob/monomial_order.hpp"
#include "chernob/ring.hpp"

namespace chernob {

struct Term {
  Monomial monomial;
  Rational coefficient;
};

/// Exact polynomial over the rationals. Terms are kept in degrevlex
/// descending order with nonzero coefficients in lowest terms, so two equal
/// polynomials have identical term lists.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}
  /// Canonicalizes: sorts, merges duplicate monomials, drops zeros.
  Polynomial(RingPtr ring, std::vector<Term> terms);

  static Polynomial constant(RingPtr ring, const Rational& c);
  static Polynomial variable(RingPtr ring, std::size_t index);

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t num_terms() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  /// -1 for the zero polynomial.
  int total_degree() const noexcept;
  /// Coefficient of the constant monomial.
  Rational constant_term() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }

  Polynomial times_term(const Rational& c, const Monomial& m) const;

  bool operator==(const Polynomial& other) const;

 private:
  RingPtr ring_;
  std::vector<Term> terms_;
};

Polynomial pow(const Polynomial& p, unsigned k);

Polynomial partial_derivative(const Polynomial& p, std::size_t var);
Polynomial partial_derivative(const Polynomial& p, std::string_view var);

/// Ring map: variable i of `p`'s ring goes to `images[i]`, all in one target ring.
Polynomial substitute(const Polynomial& p, std::span<const Polynomial> images);

/// Minimum total degree of a term; infinite for zero.
ExtendedCount order_of_vanishing(const Polynomial& p);

/// Maximal term under `order`. Throws std::invalid_argument on zero.
Term leading_term(const Polynomial& p, const MonomialOrder& order);

/// Exact quotient a / b, or nullopt when b does not divide a.
std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b);

/// Re-expresses `p` in `target`, mapping variable i to target variable
/// `offset + i`.
Polynomial embed(const Polynomial& p, const RingPtr& target, std::size_t offset);

/// Inverse of embed: requires that every variable outside
/// [offset, offset + target->num_vars()) has exponent zero.
Polynomial restrict_to(const Polynomial& p, const RingPtr& target, std::size_t offset);

/// Parses the polynomial grammar: integers, '/', '+', '-', '*', '^',
/// parentheses, juxtaposition ("2xy"), unary minus. '^' binds tightest and
/// takes a non-negative integer literal. Division only by nonzero constants.
Polynomial parse_poly(std::string_view text, const RingPtr& ring);

/// Text form that parse_poly reads back to the same polynomial.
std::string to_string(const Polynomial& p);

}  // namespace chernob
