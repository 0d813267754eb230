#include "chernob/oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include "chernob/errors.hpp"
#include "chernob/random.hpp"

namespace chernob::oracle {

namespace {

// ---------------------------------------------------------------- truncation

struct SparseEntry {
  int col;
  Rational value;
};
using SparseRow = std::vector<SparseEntry>;

struct Generator {
  struct Entry {
    Monomial mono;
    int comp;
    Rational coef;
  };
  std::vector<Entry> entries;
  int order = 0;  // lowest total degree
};

void all_monomials_below(std::size_t n, int bound, std::vector<Monomial>& out) {
  // Degree-ascending enumeration of monomials of degree < bound.
  Monomial cur(n);
  std::function<void(std::size_t, int)> rec = [&](std::size_t var, int remaining) {
    if (var + 1 == n) {
      cur.set(var, remaining);
      out.push_back(cur);
      cur.set(var, 0);
      return;
    }
    for (int e = remaining; e >= 0; --e) {
      cur.set(var, e);
      rec(var + 1, remaining - e);
    }
    cur.set(var, 0);
  };
  for (int d = 0; d < bound; ++d) rec(0, d);
}

std::uint64_t key_of(const Monomial& m) {
  std::uint64_t k = 1469598103934665603ULL;
  for (std::size_t i = 0; i < m.size(); ++i) k = (k ^ static_cast<std::uint64_t>(m[i])) * 1099511628211ULL;
  return k;
}

// dim of F^rank / (M + m^N F^rank) by sparse Gaussian elimination.
std::uint64_t truncated_dimension(const std::vector<Generator>& gens, std::size_t n,
                                  std::size_t rank, int degree_bound) {
  std::vector<Monomial> monos;
  all_monomials_below(n, degree_bound, monos);
  std::multimap<std::uint64_t, std::size_t> index;
  for (std::size_t i = 0; i < monos.size(); ++i) index.emplace(key_of(monos[i]), i);
  auto column = [&](const Monomial& m, int comp) -> int {
    auto [lo, hi] = index.equal_range(key_of(m));
    for (auto it = lo; it != hi; ++it)
      if (monos[it->second] == m) return static_cast<int>(it->second * rank + comp);
    throw std::logic_error("monomial outside truncation range");
  };
  const std::size_t total_columns = monos.size() * rank;

  std::vector<SparseRow> pivots(total_columns);
  std::size_t rank_found = 0;

  auto reduce_and_insert = [&](SparseRow row) {
    while (!row.empty()) {
      const int lead = row.front().col;
      SparseRow& pivot = pivots[lead];
      if (pivot.empty()) {
        Rational inv = Rational(1) / row.front().value;
        for (auto& e : row) e.value *= inv;
        pivot = std::move(row);
        ++rank_found;
        return;
      }
      const Rational factor = row.front().value;
      SparseRow merged;
      merged.reserve(row.size() + pivot.size());
      std::size_t i = 0, j = 0;
      while (i < row.size() || j < pivot.size()) {
        if (j == pivot.size() || (i < row.size() && row[i].col < pivot[j].col)) {
          merged.push_back(std::move(row[i++]));
        } else if (i == row.size() || pivot[j].col < row[i].col) {
          merged.push_back(SparseEntry{pivot[j].col, -factor * pivot[j].value});
          ++j;
        } else {
          Rational v = row[i].value - factor * pivot[j].value;
          if (v != 0) merged.push_back(SparseEntry{row[i].col, std::move(v)});
          ++i;
          ++j;
        }
      }
      row = std::move(merged);
    }
  };

  for (const auto& g : gens) {
    for (const auto& m : monos) {
      if (m.total_degree() + g.order >= degree_bound) continue;
      SparseRow row;
      for (const auto& e : g.entries) {
        Monomial prod = e.mono * m;
        if (prod.total_degree() >= degree_bound) continue;
        row.push_back(SparseEntry{column(prod, e.comp), e.coef});
      }
      std::sort(row.begin(), row.end(), [](const SparseEntry& a, const SparseEntry& b) { return a.col < b.col; });
      if (!row.empty()) reduce_and_insert(std::move(row));
    }
  }
  return total_columns - rank_found;
}

std::optional<TruncationResult> stabilize(const std::vector<Generator>& gens, std::size_t n,
                                          std::size_t rank, int cap) {
  if (cap < 2) throw std::invalid_argument("truncation cap must be at least 2");
  std::uint64_t previous = truncated_dimension(gens, n, rank, 2);
  for (int N = 3; N <= cap; ++N) {
    std::uint64_t current = truncated_dimension(gens, n, rank, N);
    if (current == previous) return TruncationResult{current, N - 1, cap};
    previous = current;
  }
  return std::nullopt;
}

Generator make_generator(std::vector<Generator::Entry> entries) {
  Generator g;
  g.order = entries.empty() ? 0 : entries.front().mono.total_degree();
  for (const auto& e : entries) g.order = std::min(g.order, e.mono.total_degree());
  g.entries = std::move(entries);
  return g;
}

// ----------------------------------------------------------------- resultant

// Dense univariate polynomial over Q, coefficient i of x^i.
struct UPoly {
  std::vector<Rational> c;

  bool is_zero() const { return c.empty(); }
  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
};

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  UPoly r;
  r.c.assign(a.c.size() + b.c.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c.size(); ++i)
    for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
  r.trim();
  return r;
}

UPoly operator-(const UPoly& a, const UPoly& b) {
  UPoly r;
  r.c.assign(std::max(a.c.size(), b.c.size()), Rational(0));
  for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] -= b.c[i];
  r.trim();
  return r;
}

UPoly exact_divide(UPoly a, const UPoly& b) {
  if (b.is_zero()) throw std::logic_error("division by zero polynomial");
  if (a.is_zero()) return {};
  if (a.c.size() < b.c.size()) throw std::logic_error("inexact polynomial division");
  UPoly q;
  q.c.assign(a.c.size() - b.c.size() + 1, Rational(0));
  const Rational& lead = b.c.back();
  for (std::size_t k = q.c.size(); k-- > 0;) {
    Rational coef = a.c[k + b.c.size() - 1] / lead;
    q.c[k] = coef;
    if (coef == 0) continue;
    for (std::size_t j = 0; j < b.c.size(); ++j) a.c[k + j] -= coef * b.c[j];
  }
  a.trim();
  if (!a.is_zero()) throw std::logic_error("inexact polynomial division");
  q.trim();
  return q;
}

UPoly bareiss_determinant(std::vector<std::vector<UPoly>> m) {
  const std::size_t n = m.size();
  if (n == 0) return UPoly{{Rational(1)}};
  UPoly previous{{Rational(1)}};
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k].is_zero()) ++swap_row;
      if (swap_row == n) return {};
      std::swap(m[k], m[swap_row]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = exact_divide(m[i][j] * m[k][k] - m[i][k] * m[k][j], previous);
      m[i][k] = {};
    }
    previous = m[k][k];
  }
  UPoly det = m[n - 1][n - 1];
  if (negate)
    for (auto& c : det.c) c = -c;
  return det;
}

// Coefficients in the second variable: result[j] is the Q[x] coefficient of y^j.
std::vector<UPoly> coefficients_in_y(const Polynomial& p) {
  std::vector<UPoly> out;
  for (const auto& t : p.terms()) {
    std::size_t j = static_cast<std::size_t>(t.monomial[1]);
    std::size_t i = static_cast<std::size_t>(t.monomial[0]);
    if (out.size() <= j) out.resize(j + 1);
    if (out[j].c.size() <= i) out[j].c.resize(i + 1, Rational(0));
    out[j].c[i] += t.coefficient;
  }
  for (auto& u : out) u.trim();
  return out;
}

}  // namespace

std::optional<TruncationResult> colength_truncation(const Ideal& ideal, int cap) {
  std::vector<Generator> gens;
  for (const auto& p : ideal.generators()) {
    std::vector<Generator::Entry> entries;
    for (const auto& t : p.terms()) entries.push_back({t.monomial, 0, t.coefficient});
    gens.push_back(make_generator(std::move(entries)));
  }
  return stabilize(gens, ideal.ring()->num_vars(), 1, cap);
}

std::optional<TruncationResult> colength_truncation(const ModulePresentation& presentation, int cap) {
  std::vector<Generator> gens;
  for (std::size_t c = 0; c < presentation.matrix.cols(); ++c) {
    std::vector<Generator::Entry> entries;
    for (std::size_t r = 0; r < presentation.rank; ++r)
      for (const auto& t : presentation.matrix.at(r, c).terms())
        entries.push_back({t.monomial, static_cast<int>(r), t.coefficient});
    if (!entries.empty()) gens.push_back(make_generator(std::move(entries)));
  }
  return stabilize(gens, presentation.ring->num_vars(), presentation.rank, cap);
}

std::uint64_t resultant_order(const Polynomial& f, const Polynomial& g, std::int64_t shear) {
  const RingPtr& ring = f.ring();
  if (ring->num_vars() != 2) throw std::invalid_argument("plane curves need a two-variable ring");
  if (!same_ring(ring, g.ring())) throw RingMismatch();
  Polynomial x = Polynomial::variable(ring, 0), y = Polynomial::variable(ring, 1);
  std::vector<Polynomial> images{x + Rational(shear) * y, y};
  auto fc = coefficients_in_y(substitute(f, images));
  auto gc = coefficients_in_y(substitute(g, images));
  for (const auto* coeffs : {&fc, &gc}) {
    if (coeffs->empty()) throw Error("zero polynomial has no finite intersection multiplicity");
    if (coeffs->back().c.size() != 1)
      throw SeedDisagreement("leading coefficient in y is not constant after the shear");
  }
  const std::size_t m = fc.size() - 1, l = gc.size() - 1;
  const std::size_t size = m + l;
  std::vector<std::vector<UPoly>> sylvester(size, std::vector<UPoly>(size));
  for (std::size_t r = 0; r < l; ++r)
    for (std::size_t k = 0; k <= m; ++k) sylvester[r][r + k] = fc[m - k];
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t k = 0; k <= l; ++k) sylvester[l + r][r + k] = gc[l - k];
  UPoly res = bareiss_determinant(std::move(sylvester));
  if (res.is_zero()) throw Error("curves share a component: resultant vanishes identically");
  std::uint64_t order = 0;
  while (res.c[order] == 0) ++order;
  return order;
}

std::uint64_t imult_resultant(const Polynomial& f, const Polynomial& g, std::uint64_t seed) {
  auto run = [&](std::uint64_t s) {
    SeededRng rng(s);
    for (int attempt = 0; attempt < 64; ++attempt) {
      std::int64_t shear = rng.uniform(-50, 50);
      if (shear == 0) continue;
      try {
        return resultant_order(f, g, shear);
      } catch (const SeedDisagreement&) {
        // degenerate shear; draw again
      }
    }
    throw SeedDisagreement("no admissible shear found");
  };
  std::uint64_t first = run(seed);
  std::uint64_t second = run(seed ^ 0x9e3779b97f4a7c15ULL);
  if (first != second)
    throw SeedDisagreement("resultant orders " + std::to_string(first) + " and " +
                           std::to_string(second) + " disagree");
  return first;
}

Polynomial random_polynomial(const RingPtr& ring, SeededRng& rng, int min_degree, int max_degree,
                             int terms, int coef_bound) {
  const std::size_t n = ring->num_vars();
  std::vector<Term> out;
  // distinct monomials keep every coefficient within the bound; a few
  // redraws suffice, and a rare leftover duplicate is simply dropped
  for (int t = 0, redraws = 0; t < terms; ++t) {
    const int degree = static_cast<int>(rng.uniform(min_degree, max_degree));
    Monomial m(n);
    for (int e = 0; e < degree; ++e) {
      const auto v = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(n) - 1));
      m.set(v, m[v] + 1);
    }
    const bool repeated = std::any_of(out.begin(), out.end(), [&](const Term& x) { return x.monomial == m; });
    if (repeated) {
      if (++redraws < 20) --t;
      continue;
    }
    std::int64_t c = 0;
    while (c == 0) c = rng.uniform(-coef_bound, coef_bound);
    out.push_back(Term{std::move(m), Rational(static_cast<long>(c))});
  }
  return Polynomial(ring, std::move(out));
}

}  // namespace chernob::oracle
