#include "chernob/groebner.hpp"

#include <stdexcept>

#include "chernob/detail/engine.hpp"
#include "chernob/errors.hpp"

namespace chernob {

using detail::Engine;
using detail::Vec;
using detail::VTerm;

namespace {

Vec to_vec(const Polynomial& p) {
  Vec v;
  v.reserve(p.num_terms());
  for (const auto& t : p.terms()) v.push_back(VTerm{t.monomial, 0, t.coefficient});
  return v;
}

Polynomial from_vec(const Vec& v, const RingPtr& ring) {
  std::vector<Term> terms;
  terms.reserve(v.size());
  for (const auto& t : v) terms.push_back(Term{t.mono, t.coef});
  return Polynomial(ring, std::move(terms));
}

std::vector<Vec> basis_vecs(const StandardBasis& sb, const Engine& engine) {
  std::vector<Vec> out;
  out.reserve(sb.basis.size());
  for (const auto& b : sb.basis) {
    Vec v = to_vec(b);
    engine.sort(v);
    out.push_back(std::move(v));
  }
  return out;
}

// A fresh variable name not already used by `ring`.
std::string fresh_name(const PolyRing& ring, const std::string& stem) {
  std::string name = stem;
  while (ring.index_of(name)) name = "_" + name;
  return name;
}

}  // namespace

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators) : ring_(std::move(ring)) {
  for (auto& g : generators) {
    if (!same_ring(g.ring(), ring_)) throw RingMismatch();
    if (!g.is_zero()) gens_.push_back(std::move(g));
  }
}

Ideal Ideal::operator+(const Ideal& other) const {
  if (!same_ring(ring_, other.ring_)) throw RingMismatch();
  std::vector<Polynomial> gens = gens_;
  gens.insert(gens.end(), other.gens_.begin(), other.gens_.end());
  return Ideal(ring_, std::move(gens));
}

Ideal Ideal::with(const Polynomial& p) const {
  std::vector<Polynomial> gens = gens_;
  gens.push_back(p);
  return Ideal(ring_, std::move(gens));
}

std::string to_string(const Ideal& ideal) {
  std::string out = "(";
  for (std::size_t i = 0; i < ideal.generators().size(); ++i) {
    if (i) out += ", ";
    out += to_string(ideal.generators()[i]);
  }
  return out + ")";
}

std::vector<Monomial> StandardBasis::leading_monomials() const {
  std::vector<Monomial> out;
  out.reserve(basis.size());
  for (const auto& b : basis) out.push_back(leading_term(b, order).monomial);
  return out;
}

StandardBasis standard_basis(const Ideal& ideal, const MonomialOrder& order,
                             const BasisOptions& options) {
  Engine engine(order, ideal.ring()->num_vars(), options.pair_degree_cap);
  std::vector<Vec> gens;
  for (const auto& g : ideal.generators()) gens.push_back(to_vec(g));
  std::vector<Vec> result = engine.standard_basis(std::move(gens));
  std::vector<Polynomial> basis;
  basis.reserve(result.size());
  for (const auto& v : result) basis.push_back(from_vec(v, ideal.ring()));
  return StandardBasis{ideal, order, std::move(basis), order.is_local()};
}

Polynomial normal_form(const Polynomial& p, const StandardBasis& sb) {
  if (!same_ring(p.ring(), sb.ideal.ring())) throw RingMismatch();
  Engine engine(sb.order, p.ring()->num_vars());
  Vec f = to_vec(p);
  engine.sort(f);
  return from_vec(engine.normal_form(std::move(f), basis_vecs(sb, engine)), p.ring());
}

bool verify_standard_basis(const StandardBasis& sb) {
  Engine engine(sb.order, sb.ideal.ring()->num_vars());
  auto vecs = basis_vecs(sb, engine);
  if (!engine.is_standard(vecs)) return false;
  // Every original generator must reduce to zero as well.
  for (const auto& g : sb.ideal.generators()) {
    Vec f = to_vec(g);
    engine.sort(f);
    if (!engine.normal_form(std::move(f), vecs).empty()) return false;
  }
  return true;
}

ExtendedCount colength(const StandardBasis& sb) {
  return detail::count_standard_monomials(sb.leading_monomials(), sb.ideal.ring()->num_vars());
}

ExtendedCount colength(const Ideal& ideal, Locality mode) {
  return colength(standard_basis(ideal, order_for(mode)));
}

int krull_dimension(const StandardBasis& sb) {
  return detail::monomial_ideal_dimension(sb.leading_monomials(), sb.ideal.ring()->num_vars());
}

int krull_dimension(const Ideal& ideal, Locality mode) {
  return krull_dimension(standard_basis(ideal, order_for(mode)));
}

bool membership(const Polynomial& p, const StandardBasis& sb) {
  return normal_form(p, sb).is_zero();
}

bool membership(const Polynomial& p, const Ideal& ideal, Locality mode) {
  return membership(p, standard_basis(ideal, order_for(mode)));
}

bool contains(const Ideal& big, const Ideal& small, Locality mode) {
  if (!same_ring(big.ring(), small.ring())) throw RingMismatch();
  StandardBasis sb = standard_basis(big, order_for(mode));
  for (const auto& g : small.generators())
    if (!membership(g, sb)) return false;
  return true;
}

bool equal_ideals(const Ideal& a, const Ideal& b, Locality mode) {
  return contains(a, b, mode) && contains(b, a, mode);
}

bool is_unit_ideal(const Ideal& ideal, Locality mode) {
  return krull_dimension(ideal, mode) < 0;
}

Ideal eliminate_leading(const Ideal& ideal, std::size_t count, const RingPtr& target) {
  if (ideal.ring()->num_vars() != count + target->num_vars())
    throw std::invalid_argument("elimination target ring has the wrong size");
  StandardBasis sb = standard_basis(ideal, MonomialOrder::elimination(count));
  std::vector<Polynomial> kept;
  for (const auto& b : sb.basis) {
    bool free = true;
    for (const auto& t : b.terms())
      for (std::size_t i = 0; i < count && free; ++i)
        if (t.monomial[i] != 0) free = false;
    if (free) kept.push_back(restrict_to(b, target, count));
  }
  return Ideal(target, std::move(kept));
}

Ideal intersect(const Ideal& a, const Ideal& b) {
  if (!same_ring(a.ring(), b.ring())) throw RingMismatch();
  const RingPtr& ring = a.ring();
  if (a.is_zero() || b.is_zero()) return Ideal(ring, {});
  std::vector<std::string> names{fresh_name(*ring, "_t")};
  names.insert(names.end(), ring->variables().begin(), ring->variables().end());
  RingPtr ext = make_ring(std::move(names));
  Polynomial t = Polynomial::variable(ext, 0);
  Polynomial one_minus_t = Polynomial::constant(ext, Rational(1)) - t;
  std::vector<Polynomial> gens;
  for (const auto& g : a.generators()) gens.push_back(t * embed(g, ext, 1));
  for (const auto& g : b.generators()) gens.push_back(one_minus_t * embed(g, ext, 1));
  return eliminate_leading(Ideal(ext, std::move(gens)), 1, ring);
}

Ideal ideal_quotient(const Ideal& ideal, const Polynomial& g) {
  if (g.is_zero()) throw std::invalid_argument("ideal quotient by the zero polynomial");
  if (!same_ring(ideal.ring(), g.ring())) throw RingMismatch();
  Ideal meet = intersect(ideal, Ideal(ideal.ring(), {g}));
  std::vector<Polynomial> gens;
  for (const auto& h : meet.generators()) {
    auto q = divide_exact(h, g);
    if (!q) throw Error("internal: intersection generator not divisible by quotient element");
    gens.push_back(std::move(*q));
  }
  return Ideal(ideal.ring(), std::move(gens));
}

Ideal ideal_quotient(const Ideal& ideal, const Ideal& by) {
  if (by.is_zero()) throw std::invalid_argument("ideal quotient by the zero ideal");
  StandardBasis sb = standard_basis(ideal, MonomialOrder::global());
  std::optional<Ideal> result;
  for (const auto& g : by.generators()) {
    if (membership(g, sb)) continue;  // (I : g) is the unit ideal
    Ideal q = ideal_quotient(ideal, g);
    result = result ? intersect(*result, q) : q;
  }
  if (!result) return Ideal(ideal.ring(), {Polynomial::constant(ideal.ring(), Rational(1))});
  return *result;
}

Ideal saturate(const Ideal& ideal, const Ideal& by) {
  if (by.is_zero()) throw std::invalid_argument("saturation by the zero ideal");
  Ideal current = ideal;
  for (;;) {
    Ideal next = ideal_quotient(current, by);
    // current is always contained in next; stop once next adds nothing.
    if (contains(current, next, Locality::global)) return current;
    StandardBasis sb = standard_basis(next, MonomialOrder::global());
    current = Ideal(ideal.ring(), sb.basis);
  }
}

}  // namespace chernob
