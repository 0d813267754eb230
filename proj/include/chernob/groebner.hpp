#pragma once

#include <optional>
#include <vector>

#include "chernob/monomial_order.hpp"
#include "chernob/polynomial.hpp"

namespace chernob {

/// Whether a computation happens in the polynomial ring or in its
/// localization at the origin.
enum class Locality { local, global };

class Ideal {
 public:
  /// Zero generators are dropped; all generators must share `ring`.
  Ideal(RingPtr ring, std::vector<Polynomial> generators);

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Polynomial>& generators() const noexcept { return gens_; }
  bool is_zero() const noexcept { return gens_.empty(); }

  Ideal operator+(const Ideal& other) const;
  Ideal with(const Polynomial& p) const;

 private:
  RingPtr ring_;
  std::vector<Polynomial> gens_;
};

std::string to_string(const Ideal& ideal);

struct StandardBasis {
  Ideal ideal;
  MonomialOrder order;
  std::vector<Polynomial> basis;
  bool local_flag;

  std::vector<Monomial> leading_monomials() const;
};

struct BasisOptions {
  /// Fails with CapExceeded when an S-pair of higher lcm degree is reached.
  std::optional<int> pair_degree_cap;
};

StandardBasis standard_basis(const Ideal& ideal, const MonomialOrder& order,
                             const BasisOptions& options = {});

inline MonomialOrder order_for(Locality mode) {
  return mode == Locality::local ? MonomialOrder::local() : MonomialOrder::global();
}

Polynomial normal_form(const Polynomial& p, const StandardBasis& basis);

/// Exhaustive check that every S-polynomial reduces to zero.
bool verify_standard_basis(const StandardBasis& basis);

/// Number of standard monomials; infinite when the quotient is not finite
/// dimensional.
ExtendedCount colength(const Ideal& ideal, Locality mode);
ExtendedCount colength(const StandardBasis& basis);

/// Krull dimension of the quotient ring (of its localization at the origin
/// in local mode); -1 for the unit ideal.
int krull_dimension(const Ideal& ideal, Locality mode = Locality::global);
int krull_dimension(const StandardBasis& basis);

bool membership(const Polynomial& p, const Ideal& ideal, Locality mode);
bool membership(const Polynomial& p, const StandardBasis& basis);

/// small is contained in big.
bool contains(const Ideal& big, const Ideal& small, Locality mode);
bool equal_ideals(const Ideal& a, const Ideal& b, Locality mode);
bool is_unit_ideal(const Ideal& ideal, Locality mode);

Ideal intersect(const Ideal& a, const Ideal& b);
/// (I : g) = (I intersected with (g)) / g.
Ideal ideal_quotient(const Ideal& ideal, const Polynomial& g);
Ideal ideal_quotient(const Ideal& ideal, const Ideal& by);
/// (I : J^inf), iterating quotients until the ideal stops growing.
Ideal saturate(const Ideal& ideal, const Ideal& by);

/// Generators of the ideal in the ring of the trailing variables, after
/// eliminating the first `count` variables of `ideal`'s ring.
Ideal eliminate_leading(const Ideal& ideal, std::size_t count, const RingPtr& target);

}  // namespace chernob
