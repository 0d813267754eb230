#include "chernob/chern.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "chernob/errors.hpp"
#include "chernob/random.hpp"

namespace chernob {

std::vector<int> FormCollection::partition() const {
  std::vector<int> k;
  k.reserve(parts.size());
  for (const auto& p : parts) k.push_back(p.k);
  return k;
}

std::string to_string(ChernMethod method) {
  switch (method) {
    case ChernMethod::icis:
      return "icis";
    case ChernMethod::surface_colength:
      return "surface-colength";
    case ChernMethod::surface_normalization:
      return "surface-normalization";
  }
  return "?";
}

std::string to_string(Route route) {
  switch (route) {
    case Route::colength:
      return "colength";
    case Route::normalization:
      return "normalization";
    case Route::both:
      return "both";
  }
  return "?";
}

void validate(const VarietyInput& variety, const FormCollection& collection) {
  const int n = static_cast<int>(variety.ambient_dim());
  const int d = variety.dim;
  if (d < 1 || d > n) throw std::invalid_argument("dimension must satisfy 1 <= d <= n");
  for (const auto& f : variety.equations)
    if (!same_ring(f.ring(), variety.ring)) throw RingMismatch();
  if (collection.parts.empty()) throw std::invalid_argument("empty form collection");
  int sum = 0;
  for (std::size_t i = 0; i < collection.parts.size(); ++i) {
    const auto& part = collection.parts[i];
    if (part.k < 1) throw std::invalid_argument("partition entries must be positive");
    sum += part.k;
    const int expected = d - part.k + 1;
    if (static_cast<int>(part.forms.size()) != expected)
      throw std::invalid_argument("sub-collection " + std::to_string(i + 1) + " has " +
                                  std::to_string(part.forms.size()) + " forms, expected d-k+1 = " +
                                  std::to_string(expected));
    for (const auto& form : part.forms) {
      if (static_cast<int>(form.size()) != n)
        throw std::invalid_argument("form length " + std::to_string(form.size()) + " does not match n = " +
                                    std::to_string(n));
      for (const auto& p : form)
        if (!same_ring(p.ring(), variety.ring)) throw RingMismatch();
    }
  }
  if (sum != d)
    throw std::invalid_argument("partition sums to " + std::to_string(sum) + " but d = " + std::to_string(d));
}

Ideal singular_locus_ideal(const VarietyInput& variety) {
  const RingPtr& ring = variety.ring;
  Ideal base = variety.ideal();
  if (variety.singular_override) return base + Ideal(ring, *variety.singular_override);
  const Polynomial one = Polynomial::constant(ring, Rational(1));
  const std::size_t codim = variety.ambient_dim() - static_cast<std::size_t>(variety.dim);
  if (variety.equations.empty() || codim == 0) return Ideal(ring, {one});
  PolyMatrix jac = jacobian_matrix(variety.equations);
  if (codim > std::min(jac.rows(), jac.cols())) return base;
  return base + minors_ideal(jac, codim);
}

namespace {

// The rank of the augmented matrix at a generic smooth point is
// (n - d) + (d - k + 1); the special locus is where it drops below that.
Ideal rank_drop_ideal(const VarietyInput& variety, const SubCollection& part) {
  const std::size_t n = variety.ambient_dim();
  std::vector<std::vector<Polynomial>> rows;
  if (!variety.equations.empty()) {
    PolyMatrix jac = jacobian_matrix(variety.equations);
    for (std::size_t r = 0; r < jac.rows(); ++r) rows.push_back(jac.row(r));
  }
  for (const auto& form : part.forms) rows.push_back(form);
  PolyMatrix m(variety.ring, std::move(rows));
  std::size_t size = n - static_cast<std::size_t>(part.k) + 1;
  size = std::min({size, m.rows(), m.cols()});
  return minors_ideal(m, size);
}

int local_dim(const Ideal& ideal) { return krull_dimension(ideal, Locality::local); }

}  // namespace

Ideal special_locus_ideal(const VarietyInput& variety, const FormCollection& collection,
                          std::size_t prefix) {
  if (prefix < 1 || prefix > collection.parts.size())
    throw std::invalid_argument("prefix out of range");
  Ideal acc = variety.ideal();
  for (std::size_t i = 0; i < prefix; ++i) acc = acc + rank_drop_ideal(variety, collection.parts[i]);
  return acc;
}

GeometryReport geometry_checks(const VarietyInput& variety, const FormCollection& collection) {
  validate(variety, collection);
  GeometryReport report;
  Ideal sing = singular_locus_ideal(variety);
  report.singular_locus_dim = local_dim(sing);
  int expected = variety.dim;
  for (std::size_t i = 1; i <= collection.parts.size(); ++i) {
    expected -= collection.parts[i - 1].k;
    Ideal locus = special_locus_ideal(variety, collection, i);
    const int raw = local_dim(locus);
    const int off = report.singular_locus_dim < 0 ? raw : local_dim(saturate(locus, sing));
    report.raw_prefix_dims.push_back(raw);
    report.prefix_dims.push_back(off >= 0 ? off : (raw >= 0 ? 0 : -1));
    report.expected_dims.push_back(expected);
    report.singular_component.push_back(raw > off);
  }
  report.isolated = report.prefix_dims.back() <= 0;
  return report;
}

ExtendedCount ind_point(const VarietyInput& variety, const FormCollection& collection) {
  validate(variety, collection);
  return colength(special_locus_ideal(variety, collection, collection.parts.size()), Locality::local);
}

namespace {

bool rows_independent(const std::vector<std::vector<std::int64_t>>& rows) {
  if (rows.empty()) return true;
  std::vector<std::vector<Rational>> m;
  for (const auto& r : rows) {
    std::vector<Rational> q;
    for (auto v : r) q.emplace_back(static_cast<long>(v));
    m.push_back(std::move(q));
  }
  const std::size_t cols = m[0].size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t p = rank;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t r = rank + 1; r < m.size(); ++r) {
      if (m[r][c] == 0) continue;
      Rational f = m[r][c] / m[rank][c];
      for (std::size_t j = c; j < cols; ++j) m[r][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return rank == m.size();
}

}  // namespace

FormCollection generic_linear_collection(const RingPtr& ring, int dim, const std::vector<int>& partition,
                                         std::uint64_t seed, int bound) {
  if (bound < 1) throw std::invalid_argument("coefficient bound must be at least 1");
  if (std::accumulate(partition.begin(), partition.end(), 0) != dim)
    throw std::invalid_argument("partition does not sum to the dimension " + std::to_string(dim));
  const std::size_t n = ring->num_vars();
  SeededRng rng(seed);
  FormCollection out;
  for (int k : partition) {
    if (k < 1) throw std::invalid_argument("partition entries must be positive");
    const int count = dim - k + 1;
    if (count < 1 || static_cast<std::size_t>(count) > n)
      throw std::invalid_argument("impossible shape: " + std::to_string(count) + " independent covectors in C^" +
                                  std::to_string(n));
    constexpr int max_attempts = 100;
    std::vector<std::vector<std::int64_t>> draw;
    int attempt = 0;
    for (; attempt < max_attempts; ++attempt) {
      draw.assign(static_cast<std::size_t>(count), std::vector<std::int64_t>(n));
      for (auto& row : draw)
        for (auto& v : row) v = rng.uniform(-bound, bound);
      if (rows_independent(draw)) break;
    }
    if (attempt == max_attempts) throw Error("generic form draw: retries exhausted");
    SubCollection part;
    part.k = k;
    for (const auto& row : draw) {
      Covector form;
      for (auto v : row) form.push_back(Polynomial::constant(ring, Rational(static_cast<long>(v))));
      part.forms.push_back(std::move(form));
    }
    out.parts.push_back(std::move(part));
  }
  return out;
}

namespace {

std::int64_t finite_or_throw(const ExtendedCount& c, const std::string& what) {
  if (!c.is_finite()) throw HypothesisViolation(what + " is infinite");
  return static_cast<std::int64_t>(c.value());
}

void require_isolated(const GeometryReport& g) {
  if (!g.isolated)
    throw HypothesisViolation("special locus is not isolated: dimension " + std::to_string(g.prefix_dims.back()) +
                              " at the origin");
}

}  // namespace

ChernReport chern_icis(const VarietyInput& variety, const FormCollection& collection,
                       const ChernOptions& options) {
  validate(variety, collection);
  const std::size_t codim = variety.ambient_dim() - static_cast<std::size_t>(variety.dim);
  if (variety.equations.size() != codim)
    throw HypothesisViolation("ICIS formula needs n - d = " + std::to_string(codim) + " equations, got " +
                              std::to_string(variety.equations.size()));
  if (options.trials < 1) throw std::invalid_argument("at least one generic trial is required");

  ChernReport report;
  report.method = ChernMethod::icis;
  report.geometry = geometry_checks(variety, collection);
  require_isolated(report.geometry);

  const std::int64_t ind_omega = finite_or_throw(ind_point(variety, collection), "ind(omega)");
  report.terms.push_back(ChernTerm{"ind(omega)", ind_omega, std::nullopt});

  std::vector<std::int64_t> generic;
  const auto shape = collection.partition();
  for (int t = 0; t < options.trials; ++t) {
    const std::uint64_t s = trial_seed(options.seed, t);
    FormCollection l = generic_linear_collection(variety.ring, variety.dim, shape, s, options.bound);
    const std::int64_t v = finite_or_throw(ind_point(variety, l), "ind(l)");
    report.terms.push_back(ChernTerm{"ind(l) trial " + std::to_string(t), v, s});
    report.seeds.push_back(s);
    generic.push_back(v);
  }
  const auto [lo, hi] = std::minmax_element(generic.begin(), generic.end());
  report.trial_agreement.push_back(*lo == *hi);
  if (*lo != *hi) report.warnings.push_back("generic trials disagree; using the minimum");
  report.final_value = ind_omega - *lo;
  return report;
}

namespace {

void require_surface_shape(const VarietyInput& variety) {
  if (variety.ambient_dim() != 3 || variety.dim != 2 || variety.equations.size() != 1)
    throw HypothesisViolation("surface pipeline needs a hypersurface surface in C^3");
}

// Square-factor test on polar generators: a variable dividing a generator
// to power >= 2 marks a non-reduced component.
std::optional<std::string> square_factor(const Ideal& polar, const VarietyInput& variety) {
  for (const auto& g : polar.generators()) {
    if (std::find(variety.equations.begin(), variety.equations.end(), g) != variety.equations.end()) continue;
    for (std::size_t v = 0; v < g.ring()->num_vars(); ++v) {
      int lo = INT32_MAX;
      for (const auto& t : g.terms()) lo = std::min(lo, static_cast<int>(t.monomial[v]));
      if (lo >= 2)
        return g.ring()->variable(v) + "^" + std::to_string(lo) + " divides " + to_string(g);
    }
  }
  return std::nullopt;
}

struct PolarPair {
  Ideal a;
  Ideal b;
  bool a_empty;
  bool b_empty;
};

PolarPair polar_pair(const VarietyInput& variety, const SubCollection& first, const SubCollection& second) {
  Ideal a = polar_curve_ideal(variety, first);
  Ideal b = polar_curve_ideal(variety, second);
  const bool ae = is_unit_ideal(a, Locality::local);
  const bool be = is_unit_ideal(b, Locality::local);
  return PolarPair{std::move(a), std::move(b), ae, be};
}

std::int64_t colength_term(const PolarPair& p) {
  if (p.a_empty || p.b_empty) return 0;
  return finite_or_throw(colength(p.a + p.b, Locality::local), "polar intersection");
}

Ideal pull_back(const Ideal& ideal, const Normalization& map) {
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(substitute(g, map.images));
  return Ideal(map.source, std::move(gens));
}

std::int64_t normalization_term(const PolarPair& p, const Normalization& map) {
  if (p.a_empty || p.b_empty) return 0;
  return finite_or_throw(colength(pull_back(p.a, map) + pull_back(p.b, map), Locality::local),
                         "pulled-back polar intersection");
}

void check_normalization(const VarietyInput& variety) {
  if (!variety.normalization) throw HypothesisViolation("route normalization needs a normalization map");
  const Normalization& map = *variety.normalization;
  if (map.images.size() != variety.ambient_dim())
    throw std::invalid_argument("normalization needs one image per ambient coordinate");
  for (const auto& img : map.images) {
    if (!same_ring(img.ring(), map.source)) throw RingMismatch();
    if (img.constant_term() != 0) throw std::invalid_argument("normalization must send 0 to 0");
  }
  for (const auto& f : variety.equations)
    if (!substitute(f, map.images).is_zero())
      throw std::invalid_argument("normalization map does not land in X: " + to_string(f) + " pulls back nonzero");
}

}  // namespace

Ideal polar_curve_ideal(const VarietyInput& variety, const SubCollection& pair) {
  require_surface_shape(variety);
  if (pair.forms.size() != 2) throw std::invalid_argument("a polar pair has exactly two forms");
  PolyMatrix m = augment(jacobian_matrix(variety.equations), pair.forms);
  Polynomial det = determinant(m);
  if (membership(det, variety.ideal(), Locality::global))
    throw HypothesisViolation("degenerate pair: augmented determinant vanishes on X");
  Ideal raw = variety.ideal().with(det);
  Ideal sing = singular_locus_ideal(variety);
  if (is_unit_ideal(sing, Locality::global)) return raw;
  Ideal sat = saturate(raw, sing);
  return Ideal(variety.ring, standard_basis(sat, MonomialOrder::global()).basis);
}

ExtendedCount imult_plane(const Polynomial& f, const Polynomial& g) {
  if (f.ring()->num_vars() != 2) throw std::invalid_argument("plane curves need a two-variable ring");
  if (f.is_zero() || g.is_zero()) return ExtendedCount::infinite();
  return colength(Ideal(f.ring(), {f, g}), Locality::local);
}

ChernReport chern_surface(const VarietyInput& variety, const FormCollection& collection,
                          const ChernOptions& options) {
  validate(variety, collection);
  require_surface_shape(variety);
  if (collection.parts.size() != 2 || collection.parts[0].k != 1 || collection.parts[1].k != 1)
    throw HypothesisViolation("surface pipeline needs k = (1, 1)");
  if (options.trials < 1) throw std::invalid_argument("at least one generic trial is required");
  const bool use_colength = options.route != Route::normalization;
  const bool use_normalization = options.route != Route::colength;
  if (use_normalization) check_normalization(variety);

  ChernReport report;
  report.method = use_normalization ? ChernMethod::surface_normalization : ChernMethod::surface_colength;
  report.geometry = geometry_checks(variety, collection);
  require_isolated(report.geometry);

  PolarPair main = polar_pair(variety, collection.parts[0], collection.parts[1]);
  for (const auto* polar : {&main.a, &main.b})
    if (auto sq = square_factor(*polar, variety))
      report.warnings.push_back("non-reduced polar component: " + *sq);

  std::optional<std::int64_t> main_col, main_norm;
  if (use_colength) {
    main_col = colength_term(main);
    report.terms.push_back(ChernTerm{"polar(w1).polar(w2) [colength]", *main_col, std::nullopt});
  }
  if (use_normalization) {
    main_norm = normalization_term(main, *variety.normalization);
    report.terms.push_back(ChernTerm{"polar(w1).polar(w2) [normalization]", *main_norm, std::nullopt});
  }

  std::vector<std::int64_t> generic_col, generic_norm;
  for (int t = 0; t < options.trials; ++t) {
    const std::uint64_t s = trial_seed(options.seed, t);
    FormCollection l = generic_linear_collection(variety.ring, 2, {1, 1}, s, options.bound);
    PolarPair g = polar_pair(variety, l.parts[0], l.parts[1]);
    if (use_colength) {
      generic_col.push_back(colength_term(g));
      report.terms.push_back(ChernTerm{"polar(l1).polar(l2) [colength] trial " + std::to_string(t),
                                       generic_col.back(), s});
    }
    if (use_normalization) {
      generic_norm.push_back(normalization_term(g, *variety.normalization));
      report.terms.push_back(ChernTerm{"polar(l1).polar(l2) [normalization] trial " + std::to_string(t),
                                       generic_norm.back(), s});
    }
    report.seeds.push_back(s);
  }

  auto combine = [&](std::int64_t main_value, const std::vector<std::int64_t>& generic) {
    const auto [lo, hi] = std::minmax_element(generic.begin(), generic.end());
    report.trial_agreement.push_back(*lo == *hi);
    if (*lo != *hi) report.warnings.push_back("generic trials disagree; using the minimum");
    return main_value - *lo;
  };
  std::optional<std::int64_t> by_col, by_norm;
  if (use_colength) by_col = combine(*main_col, generic_col);
  if (use_normalization) by_norm = combine(*main_norm, generic_norm);
  if (by_col && by_norm && *by_col != *by_norm)
    throw RouteDisagreement("route colength gives " + std::to_string(*by_col) + ", route normalization gives " +
                            std::to_string(*by_norm));
  report.final_value = by_norm ? *by_norm : *by_col;
  return report;
}

bool is_icis(const VarietyInput& variety) {
  const std::size_t codim = variety.ambient_dim() - static_cast<std::size_t>(variety.dim);
  if (variety.equations.size() != codim) return false;
  return local_dim(singular_locus_ideal(variety)) <= 0;
}

ChernReport compute_chern(const VarietyInput& variety, const FormCollection& collection,
                          const ChernOptions& options) {
  if (is_icis(variety)) return chern_icis(variety, collection, options);
  if (variety.ambient_dim() == 3 && variety.dim == 2 && variety.equations.size() == 1)
    return chern_surface(variety, collection, options);
  throw HypothesisViolation("input is neither an ICIS nor a surface hypersurface in C^3");
}

}  // namespace chernob
