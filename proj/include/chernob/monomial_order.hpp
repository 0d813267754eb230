#pragma once

#include <cstddef>
#include <string>

#include "chernob/ring.hpp"

namespace chernob {

/// Degree reverse lexicographic comparison: -1, 0 or 1 as a <, =, > b.
/// This is also the fixed storage order of Polynomial terms.
int degrevlex_compare(const Monomial& a, const Monomial& b);

/// Term order on monomials, extended to free modules position-over-term:
/// the component index is the primary key and a lower index ranks higher.
class MonomialOrder {
 public:
  enum class Kind {
    global_degrevlex,
    local_negdegrevlex,
    block_elimination,
    homogenized_local,
  };

  static MonomialOrder global() { return MonomialOrder(Kind::global_degrevlex, 0); }
  static MonomialOrder local() { return MonomialOrder(Kind::local_negdegrevlex, 0); }
  /// Eliminates the first `block` variables: any monomial involving them is
  /// larger than every monomial free of them. Degrevlex inside each block.
  static MonomialOrder elimination(std::size_t block) {
    return MonomialOrder(Kind::block_elimination, block);
  }

  /// Global order on x_1..x_n, t with t the last variable: total degree,
  /// then the higher power of t, then degrevlex. On homogeneous elements it
  /// ranks terms as negdegrevlex ranks their dehomogenizations.
  static MonomialOrder homogenized_local() { return MonomialOrder(Kind::homogenized_local, 0); }

  Kind kind() const noexcept { return kind_; }
  std::size_t block() const noexcept { return block_; }
  bool is_local() const noexcept { return kind_ == Kind::local_negdegrevlex; }

  int compare(const Monomial& a, const Monomial& b) const;
  int compare(const Monomial& a, int comp_a, const Monomial& b, int comp_b) const {
    if (comp_a != comp_b) return comp_a < comp_b ? 1 : -1;
    return compare(a, b);
  }

  std::string name() const;

 private:
  MonomialOrder(Kind kind, std::size_t block) : kind_(kind), block_(block) {}
  Kind kind_;
  std::size_t block_;
};

}  // namespace chernob
