#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/container/small_vector.hpp>
#include <gmpxx.h>

namespace chernob {

using Rational = mpq_class;

std::string to_string(const Rational& q);

/// Ordered set of variable names over the rationals.
class PolyRing {
 public:
  explicit PolyRing(std::vector<std::string> variables);

  std::size_t num_vars() const noexcept { return vars_.size(); }
  const std::vector<std::string>& variables() const noexcept { return vars_; }
  const std::string& variable(std::size_t i) const { return vars_.at(i); }
  std::optional<std::size_t> index_of(std::string_view name) const;

  bool operator==(const PolyRing& other) const { return vars_ == other.vars_; }

 private:
  std::vector<std::string> vars_;
};

using RingPtr = std::shared_ptr<const PolyRing>;

RingPtr make_ring(std::vector<std::string> variables);

/// Two ring handles denote the same ring when they share variable lists.
bool same_ring(const RingPtr& a, const RingPtr& b);

class Monomial {
 public:
  using Exponents = boost::container::small_vector<std::int32_t, 6>;

  Monomial() = default;
  explicit Monomial(std::size_t num_vars) : exps_(num_vars, 0) {}
  explicit Monomial(Exponents exps);

  static Monomial variable(std::size_t num_vars, std::size_t index, int power = 1);

  std::size_t size() const noexcept { return exps_.size(); }
  std::int32_t operator[](std::size_t i) const { return exps_[i]; }
  const Exponents& exponents() const noexcept { return exps_; }
  int total_degree() const noexcept { return degree_; }
  bool is_one() const noexcept { return degree_ == 0; }

  void set(std::size_t i, std::int32_t e);

  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  /// Requires `divisor.divides(*this)`.
  Monomial operator/(const Monomial& divisor) const;

  bool operator==(const Monomial& other) const { return exps_ == other.exps_; }

 private:
  Exponents exps_;
  int degree_ = 0;
};

/// Non-negative integer or +infinity: colengths, orders of vanishing,
/// intersection multiplicities.
class ExtendedCount {
 public:
  ExtendedCount(std::uint64_t v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  static ExtendedCount infinite() { return ExtendedCount(); }

  bool is_finite() const noexcept { return value_.has_value(); }
  std::uint64_t value() const;

  bool operator==(const ExtendedCount& o) const { return value_ == o.value_; }
  std::string to_string() const;

 private:
  ExtendedCount() = default;
  std::optional<std::uint64_t> value_;
};

}  // namespace chernob
