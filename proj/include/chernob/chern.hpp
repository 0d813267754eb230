#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chernob/groebner.hpp"
#include "chernob/matmod.hpp"

namespace chernob {

/// Finite map from a source ring onto the variety, one image per ambient
/// coordinate.
struct Normalization {
  RingPtr source;
  std::vector<Polynomial> images;
};

/// Germ (X, 0) in (C^n, 0) given by generators of I(X) and its dimension.
struct VarietyInput {
  RingPtr ring;
  std::vector<Polynomial> equations;  // empty means X = C^n
  int dim = 0;
  std::optional<Normalization> normalization;
  /// Replaces the Jacobian-criterion singular locus when set.
  std::optional<std::vector<Polynomial>> singular_override;

  std::size_t ambient_dim() const { return ring->num_vars(); }
  Ideal ideal() const { return Ideal(ring, equations); }
};

/// One sub-collection: d - k + 1 covectors.
struct SubCollection {
  int k = 1;
  std::vector<Covector> forms;
};

/// Collection of 1-forms with partition k = (k_1, ..., k_s), sum k_i = d.
struct FormCollection {
  std::vector<SubCollection> parts;

  std::vector<int> partition() const;
};

/// Throws std::invalid_argument when the collection does not fit the variety.
void validate(const VarietyInput& variety, const FormCollection& collection);

struct GeometryReport {
  /// Local dimension at 0 of each prefix special locus after removing
  /// components inside S(X); a locus that survives only inside S(X) counts
  /// as the point 0.
  std::vector<int> prefix_dims;
  /// Local dimension at 0 of the raw prefix loci, S(X) components included.
  std::vector<int> raw_prefix_dims;
  std::vector<int> expected_dims;
  /// Per prefix: the raw locus has a component contained in S(X).
  std::vector<bool> singular_component;
  bool isolated = false;
  int singular_locus_dim = -1;
};

enum class ChernMethod { icis, surface_colength, surface_normalization };
enum class Route { colength, normalization, both };

std::string to_string(ChernMethod method);
std::string to_string(Route route);

struct ChernTerm {
  std::string label;
  std::int64_t value;
  std::optional<std::uint64_t> seed;
};

struct ChernReport {
  ChernMethod method = ChernMethod::icis;
  std::vector<ChernTerm> terms;
  GeometryReport geometry;
  std::int64_t final_value = 0;
  std::vector<std::uint64_t> seeds;
  /// Whether all generic trials agreed, one flag per generic term family.
  std::vector<bool> trial_agreement;
  std::vector<std::string> warnings;
};

struct ChernOptions {
  std::uint64_t seed = 1;
  int trials = 3;
  int bound = 10;
  Route route = Route::colength;
};

/// Seed used by generic trial `t`: the base seed plus t.
inline std::uint64_t trial_seed(std::uint64_t base, int t) { return base + static_cast<std::uint64_t>(t); }

Ideal singular_locus_ideal(const VarietyInput& variety);

/// I(X) plus the rank-drop minors of the augmented Jacobian of every
/// sub-collection up to `prefix` (1-based).
Ideal special_locus_ideal(const VarietyInput& variety, const FormCollection& collection,
                          std::size_t prefix);

GeometryReport geometry_checks(const VarietyInput& variety, const FormCollection& collection);

/// Colength at 0 of the full special-locus ideal.
ExtendedCount ind_point(const VarietyInput& variety, const FormCollection& collection);

/// Constant covectors with integer entries uniform in [-bound, bound],
/// linearly independent within each sub-collection.
FormCollection generic_linear_collection(const RingPtr& ring, int dim, const std::vector<int>& partition,
                                         std::uint64_t seed, int bound);

/// ind(omega) minus the minimum over seeded generic collections of ind(l).
ChernReport chern_icis(const VarietyInput& variety, const FormCollection& collection,
                       const ChernOptions& options);

/// Polar curve of a two-form sub-collection on a surface in C^3: the
/// augmented determinant with the S(X) components saturated away.
Ideal polar_curve_ideal(const VarietyInput& variety, const SubCollection& pair);

/// Local intersection multiplicity at 0 of two plane curves.
ExtendedCount imult_plane(const Polynomial& f, const Polynomial& g);

/// Surface complete-intersection regime: Gamma(w1).Gamma(w2) minus the same
/// product for generic pairs.
ChernReport chern_surface(const VarietyInput& variety, const FormCollection& collection,
                          const ChernOptions& options);

/// True when the input is presented as an ICIS (n - d equations, isolated
/// singular locus), which selects the ICIS pipeline.
bool is_icis(const VarietyInput& variety);

/// Dispatches to chern_icis or chern_surface.
ChernReport compute_chern(const VarietyInput& variety, const FormCollection& collection,
                          const ChernOptions& options);

}  // namespace chernob
