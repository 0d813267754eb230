#include "chernob/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <stdexcept>

#include "chernob/errors.hpp"

namespace chernob {

namespace {

bool term_greater(const Term& a, const Term& b) {
  return degrevlex_compare(a.monomial, b.monomial) > 0;
}

// Sorts descending and merges equal monomials, dropping zero sums.
void canonicalize(std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(), term_greater);
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().monomial == t.monomial) {
      out.back().coefficient += t.coefficient;
    } else {
      if (!out.empty() && out.back().coefficient == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coefficient == 0) out.pop_back();
  terms = std::move(out);
}

void require_same_ring(const RingPtr& a, const RingPtr& b) {
  if (!same_ring(a, b)) throw RingMismatch();
}

// Merge of two descending term lists: a + sign * b.
std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, int sign) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    int c;
    if (i == a.size())
      c = -1;
    else if (j == b.size())
      c = 1;
    else
      c = degrevlex_compare(a[i].monomial, b[j].monomial);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(b[j++]);
      if (sign < 0) out.back().coefficient = -out.back().coefficient;
    } else {
      Rational s = sign > 0 ? Rational(a[i].coefficient + b[j].coefficient)
                            : Rational(a[i].coefficient - b[j].coefficient);
      if (s != 0) out.push_back(Term{a[i].monomial, std::move(s)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Polynomial::Polynomial(RingPtr ring, std::vector<Term> terms)
    : ring_(std::move(ring)), terms_(std::move(terms)) {
  for (const auto& t : terms_) {
    if (t.monomial.size() != ring_->num_vars())
      throw std::invalid_argument("monomial length does not match ring");
  }
  for (auto& t : terms_) t.coefficient.canonicalize();
  canonicalize(terms_);
}

Polynomial Polynomial::constant(RingPtr ring, const Rational& c) {
  Polynomial p(ring);
  if (c != 0) p.terms_.push_back(Term{Monomial(ring->num_vars()), c});
  return p;
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  Polynomial p(ring);
  p.terms_.push_back(Term{Monomial::variable(ring->num_vars(), index), Rational(1)});
  return p;
}

bool Polynomial::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one());
}

int Polynomial::total_degree() const noexcept {
  return terms_.empty() ? -1 : terms_.front().monomial.total_degree();
}

Rational Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.back().monomial.is_one()) return terms_.back().coefficient;
  return Rational(0);
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (auto& t : r.terms_) t.coefficient = -t.coefficient;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  require_same_ring(ring_, other.ring_);
  terms_ = merge(terms_, other.terms_, 1);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  require_same_ring(ring_, other.ring_);
  terms_ = merge(terms_, other.terms_, -1);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a.ring_, b.ring_);
  std::vector<Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_)
      prod.push_back(Term{s.monomial * t.monomial, s.coefficient * t.coefficient});
  Polynomial r(a.ring_);
  canonicalize(prod);
  r.terms_ = std::move(prod);
  return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  *this = *this * other;
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coefficient *= c;
  return *this;
}

Polynomial Polynomial::times_term(const Rational& c, const Monomial& m) const {
  Polynomial r(ring_);
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back(Term{t.monomial * m, t.coefficient * c});
  return r;
}

bool Polynomial::operator==(const Polynomial& other) const {
  if (!same_ring(ring_, other.ring_) || terms_.size() != other.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (!(terms_[i].monomial == other.terms_[i].monomial) ||
        terms_[i].coefficient != other.terms_[i].coefficient)
      return false;
  }
  return true;
}

Polynomial pow(const Polynomial& p, unsigned k) {
  Polynomial result = Polynomial::constant(p.ring(), Rational(1));
  Polynomial base = p;
  while (k > 0) {
    if (k & 1U) result *= base;
    k >>= 1U;
    if (k > 0) base *= base;
  }
  return result;
}

Polynomial partial_derivative(const Polynomial& p, std::size_t var) {
  if (var >= p.ring()->num_vars()) throw std::invalid_argument("variable index out of range");
  std::vector<Term> out;
  for (const auto& t : p.terms()) {
    int e = t.monomial[var];
    if (e == 0) continue;
    Monomial m = t.monomial;
    m.set(var, e - 1);
    out.push_back(Term{std::move(m), t.coefficient * e});
  }
  return Polynomial(p.ring(), std::move(out));
}

Polynomial partial_derivative(const Polynomial& p, std::string_view var) {
  auto idx = p.ring()->index_of(var);
  if (!idx) throw std::invalid_argument("unknown variable '" + std::string(var) + "'");
  return partial_derivative(p, *idx);
}

Polynomial substitute(const Polynomial& p, std::span<const Polynomial> images) {
  const std::size_t n = p.ring()->num_vars();
  if (images.size() != n)
    throw std::invalid_argument("substitution needs one image per ring variable");
  const RingPtr& target = images[0].ring();
  for (const auto& img : images) require_same_ring(img.ring(), target);

  std::vector<std::vector<Polynomial>> powers(n);
  auto power_of = [&](std::size_t v, int e) -> const Polynomial& {
    auto& cache = powers[v];
    if (cache.empty()) cache.push_back(Polynomial::constant(target, Rational(1)));
    while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * images[v]);
    return cache[e];
  };

  Polynomial result(target);
  for (const auto& t : p.terms()) {
    Polynomial acc = Polynomial::constant(target, t.coefficient);
    for (std::size_t v = 0; v < n && !acc.is_zero(); ++v) {
      if (t.monomial[v] > 0) acc *= power_of(v, t.monomial[v]);
    }
    result += acc;
  }
  return result;
}

ExtendedCount order_of_vanishing(const Polynomial& p) {
  if (p.is_zero()) return ExtendedCount::infinite();
  int lo = p.terms().front().monomial.total_degree();
  for (const auto& t : p.terms()) lo = std::min(lo, t.monomial.total_degree());
  return ExtendedCount(static_cast<std::uint64_t>(lo));
}

Term leading_term(const Polynomial& p, const MonomialOrder& order) {
  if (p.is_zero()) throw std::invalid_argument("leading term of the zero polynomial");
  const Term* best = &p.terms().front();
  for (const auto& t : p.terms())
    if (order.compare(t.monomial, best->monomial) > 0) best = &t;
  return *best;
}

std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a.ring(), b.ring());
  if (b.is_zero()) throw std::invalid_argument("division by the zero polynomial");
  const Term& lb = b.terms().front();
  Polynomial quotient(a.ring());
  Polynomial rest = a;
  while (!rest.is_zero()) {
    const Term& lr = rest.terms().front();
    if (!lb.monomial.divides(lr.monomial)) return std::nullopt;
    Rational c = lr.coefficient / lb.coefficient;
    Monomial m = lr.monomial / lb.monomial;
    quotient += Polynomial(a.ring(), {Term{m, c}});
    rest -= b.times_term(c, m);
  }
  return quotient;
}

Polynomial embed(const Polynomial& p, const RingPtr& target, std::size_t offset) {
  const std::size_t n = p.ring()->num_vars();
  if (offset + n > target->num_vars()) throw std::invalid_argument("embedding out of range");
  std::vector<Term> out;
  out.reserve(p.num_terms());
  for (const auto& t : p.terms()) {
    Monomial m(target->num_vars());
    for (std::size_t i = 0; i < n; ++i) m.set(offset + i, t.monomial[i]);
    out.push_back(Term{std::move(m), t.coefficient});
  }
  return Polynomial(target, std::move(out));
}

Polynomial restrict_to(const Polynomial& p, const RingPtr& target, std::size_t offset) {
  const std::size_t n = target->num_vars();
  std::vector<Term> out;
  out.reserve(p.num_terms());
  for (const auto& t : p.terms()) {
    Monomial m(n);
    for (std::size_t i = 0; i < t.monomial.size(); ++i) {
      if (i >= offset && i < offset + n)
        m.set(i - offset, t.monomial[i]);
      else if (t.monomial[i] != 0)
        throw std::invalid_argument("polynomial involves a variable outside the target ring");
    }
    out.push_back(Term{std::move(m), t.coefficient});
  }
  return Polynomial(target, std::move(out));
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, const RingPtr& ring) : text_(text), ring_(ring) {}

  Polynomial parse() {
    skip_space();
    if (pos_ == text_.size()) fail("empty polynomial");
    Polynomial p = parse_sum();
    skip_space();
    if (pos_ != text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { fail_at(msg, pos_); }
  [[noreturn]] void fail_at(const std::string& msg, std::size_t at) const {
    throw ParseError(msg + " at position " + std::to_string(at), at);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  static bool ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  }
  static bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  }
  bool starts_factor(char c) {
    return std::isdigit(static_cast<unsigned char>(c)) || ident_start(c) || c == '(';
  }

  Polynomial parse_sum() {
    Polynomial acc = parse_product();
    for (;;) {
      char c = peek();
      if (c == '+') {
        ++pos_;
        acc += parse_product();
      } else if (c == '-') {
        ++pos_;
        acc -= parse_product();
      } else {
        return acc;
      }
    }
  }

  Polynomial parse_product() {
    Polynomial acc = parse_signed();
    for (;;) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        acc *= parse_signed();
      } else if (c == '/') {
        std::size_t at = pos_++;
        Polynomial d = parse_signed();
        if (!d.is_constant()) fail_at("division by a non-constant polynomial", at);
        if (d.is_zero()) fail_at("division by zero", at);
        acc *= Rational(1) / d.terms().front().coefficient;
      } else if (starts_factor(c)) {
        acc *= parse_power();
      } else {
        return acc;
      }
    }
  }

  Polynomial parse_signed() {
    char c = peek();
    if (c == '-') {
      ++pos_;
      return -parse_signed();
    }
    if (c == '+') {
      ++pos_;
      return parse_signed();
    }
    return parse_power();
  }

  Polynomial parse_power() {
    Polynomial base = parse_atom();
    if (peek() != '^') return base;
    ++pos_;
    std::size_t at = (skip_space(), pos_);
    unsigned long e = 0;
    if (peek() == '(') {
      ++pos_;
      Polynomial inner = parse_sum();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      if (!inner.is_constant()) fail_at("non-integer exponent", at);
      Rational q = inner.is_zero() ? Rational(0) : inner.terms().front().coefficient;
      if (q.get_den() != 1) fail_at("non-integer exponent", at);
      if (q < 0) fail_at("negative exponent", at);
      if (!q.get_num().fits_ulong_p()) fail_at("exponent too large", at);
      e = q.get_num().get_ui();
    } else if (std::isdigit(static_cast<unsigned char>(peek()))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ < text_.size() && text_[pos_] == '.') fail_at("non-integer exponent", at);
      std::string digits(text_.substr(start, pos_ - start));
      if (digits.size() > 6) fail_at("exponent too large", at);
      e = std::stoul(digits);
    } else if (peek() == '-') {
      fail_at("negative exponent", at);
    } else {
      fail_at("expected an integer exponent", at);
    }
    return pow(base, static_cast<unsigned>(e));
  }

  Polynomial parse_atom() {
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ < text_.size() && text_[pos_] == '.')
        fail("decimal numbers are not supported; use a fraction");
      mpz_class z(std::string(text_.substr(start, pos_ - start)));
      return Polynomial::constant(ring_, Rational(z));
    }
    if (ident_start(c)) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
      return split_identifier(text_.substr(start, pos_ - start), start);
    }
    if (c == '(') {
      ++pos_;
      Polynomial inner = parse_sum();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (c == '\0') fail("unexpected end of input");
    fail(std::string("unexpected '") + c + "'");
  }

  // An identifier is a variable name or a juxtaposed run of them ("xy").
  Polynomial split_identifier(std::string_view ident, std::size_t at) {
    std::vector<std::size_t> parts;
    std::function<bool(std::size_t)> split = [&](std::size_t from) -> bool {
      if (from == ident.size()) return true;
      std::vector<std::pair<std::size_t, std::size_t>> candidates;
      for (std::size_t v = 0; v < ring_->num_vars(); ++v) {
        const std::string& name = ring_->variable(v);
        if (ident.substr(from, name.size()) == name) candidates.emplace_back(name.size(), v);
      }
      std::sort(candidates.rbegin(), candidates.rend());
      for (auto [len, v] : candidates) {
        parts.push_back(v);
        if (split(from + len)) return true;
        parts.pop_back();
      }
      return false;
    };
    if (!split(0)) fail_at("unknown variable '" + std::string(ident) + "'", at);
    Monomial m(ring_->num_vars());
    for (auto v : parts) m.set(v, m[v] + 1);
    return Polynomial(ring_, {Term{m, Rational(1)}});
  }

  std::string_view text_;
  const RingPtr& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_poly(std::string_view text, const RingPtr& ring) {
  return PolyParser(text, ring).parse();
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto& vars = p.ring()->variables();
  bool first = true;
  for (const auto& t : p.terms()) {
    Rational c = t.coefficient;
    bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < t.monomial.size(); ++i) {
      int e = t.monomial[i];
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += vars[i];
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) {
      out += c.get_str();
    } else if (c == 1) {
      out += mono;
    } else {
      out += c.get_str() + "*" + mono;
    }
  }
  return out;
}

}  // namespace chernob
