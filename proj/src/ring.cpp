#include "chernob/ring.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "chernob/errors.hpp"

namespace chernob {

std::string to_string(const Rational& q) { return q.get_str(); }

namespace {

bool valid_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_'))
    return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

}  // namespace

PolyRing::PolyRing(std::vector<std::string> variables) : vars_(std::move(variables)) {
  if (vars_.empty()) throw std::invalid_argument("a ring needs at least one variable");
  std::set<std::string> seen;
  for (const auto& v : vars_) {
    if (!valid_identifier(v))
      throw std::invalid_argument("invalid variable name '" + v + "'");
    if (!seen.insert(v).second)
      throw std::invalid_argument("duplicate variable name '" + v + "'");
  }
}

std::optional<std::size_t> PolyRing::index_of(std::string_view name) const {
  auto it = std::find(vars_.begin(), vars_.end(), name);
  if (it == vars_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - vars_.begin());
}

RingPtr make_ring(std::vector<std::string> variables) {
  return std::make_shared<const PolyRing>(std::move(variables));
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
  return a == b || (a && b && *a == *b);
}

Monomial::Monomial(Exponents exps) : exps_(std::move(exps)) {
  for (auto e : exps_) {
    if (e < 0) throw std::invalid_argument("negative exponent");
    degree_ += e;
  }
}

Monomial Monomial::variable(std::size_t num_vars, std::size_t index, int power) {
  Monomial m(num_vars);
  m.set(index, power);
  return m;
}

void Monomial::set(std::size_t i, std::int32_t e) {
  if (e < 0) throw std::invalid_argument("negative exponent");
  degree_ += e - exps_[i];
  exps_[i] = e;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  return true;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (other.exps_[i] > r.exps_[i]) {
      r.degree_ += other.exps_[i] - r.exps_[i];
      r.exps_[i] = other.exps_[i];
    }
  }
  return r;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += other.exps_[i];
  r.degree_ += other.degree_;
  return r;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] -= divisor.exps_[i];
  r.degree_ -= divisor.degree_;
  return r;
}

std::uint64_t ExtendedCount::value() const {
  if (!value_) throw Error("value requested from an infinite count");
  return *value_;
}

std::string ExtendedCount::to_string() const {
  return value_ ? std::to_string(*value_) : std::string("inf");
}

}  // namespace chernob
