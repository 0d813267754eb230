#pragma once

// Standard-basis kernel shared by ideals and free-module submodules.
// Elements are vectors of polynomials stored as a single term list whose
// terms carry a component index (0 for ideals), kept sorted descending under
// the active module order.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "chernob/monomial_order.hpp"
#include "chernob/ring.hpp"

namespace chernob::detail {

struct VTerm {
  Monomial mono;
  int comp = 0;
  Rational coef;
};

using Vec = std::vector<VTerm>;

class Engine {
 public:
  Engine(MonomialOrder order, std::size_t num_vars, std::optional<int> pair_degree_cap = {})
      : order_(order), num_vars_(num_vars), cap_(pair_degree_cap) {}

  const MonomialOrder& order() const noexcept { return order_; }

  void sort(Vec& v) const;

  /// Buchberger (global order) or Mora (local order). The result is
  /// minimal (no leading monomial divides another), has unit leading
  /// coefficients, and in the global case is fully reduced.
  /// Local order only: `corner` is a degree N already known to satisfy
  /// m^N F inside the module, so terms of degree >= N are dropped at once.
  std::vector<Vec> standard_basis(std::vector<Vec> generators, std::optional<int> corner = {}) const;

  /// Global order: complete remainder. Local order: Mora's weak normal form,
  /// whose leading term is not divisible by any basis leading term and which
  /// is zero iff `f` lies in the ideal generated in the localization.
  Vec normal_form(Vec f, std::span<const Vec> basis) const;

  Vec s_vector(const Vec& a, const Vec& b) const;

  /// Global order: every S-vector of a same-component pair reduces to zero.
  /// Local order: the leads generate the leading module of the localization.
  bool is_standard(std::span<const Vec> basis) const;

 private:
  int compare(const VTerm& a, const VTerm& b) const {
    return order_.compare(a.mono, a.comp, b.mono, b.comp);
  }
  // h - c * m * g, with the sorted invariant kept by a single merge.
  Vec sub_multiple(const Vec& h, const Rational& c, const Monomial& m, const Vec& g) const;
  // Mora's weak normal form; terms of degree >= corner are dropped.
  Vec mora_reduce(Vec h, std::span<const Vec> basis, int corner) const;
  // Degree N with m^N F inside the module over the local ring, as certified
  // by the leads in `basis`; INT_MAX while the colength is not yet bounded.
  int corner_degree(std::span<const Vec> basis, std::span<const int> comps) const;
  // Pair loop. Stops early, reporting the better bound in found_corner,
  // as soon as the leads certify a smaller corner.
  std::vector<Vec> buchberger_mora(std::vector<Vec> generators, std::span<const int> comps, int corner,
                                   int& found_corner) const;
  // Local standard basis through a homogeneous Groebner basis.
  std::vector<Vec> lazard(std::vector<Vec> generators) const;
  Vec full_reduce(Vec h, std::span<const Vec> basis) const;

  MonomialOrder order_;
  std::size_t num_vars_;
  std::optional<int> cap_;
};

/// Number of monomials outside the monomial ideal generated by `leads`;
/// infinite unless every variable has a pure power among them.
ExtendedCount count_standard_monomials(std::span<const Monomial> leads, std::size_t num_vars);

/// Smallest N with every monomial of degree N divisible by one of `leads`,
/// namely sum(a_i - 1) + 1 over the pure powers x_i^a_i; nullopt when some
/// variable has no pure power.
std::optional<int> staircase_degree(std::span<const Monomial> leads, std::size_t num_vars);

/// Krull dimension of k[x]/(leads) via maximal independent variable sets;
/// -1 when the ideal contains 1.
int monomial_ideal_dimension(std::span<const Monomial> leads, std::size_t num_vars);

}  // namespace chernob::detail
