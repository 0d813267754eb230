#pragma once

#include <string>
#include <vector>

#include "chernob/chern.hpp"
#include "chernob/cli.hpp"
#include "chernob/oracle.hpp"

namespace testing {

using namespace chernob;

inline Polynomial P(const RingPtr& ring, const std::string& text) { return parse_poly(text, ring); }

inline Ideal I(const RingPtr& ring, const std::vector<std::string>& gens) {
  std::vector<Polynomial> ps;
  for (const auto& g : gens) ps.push_back(parse_poly(g, ring));
  return Ideal(ring, std::move(ps));
}

inline Covector form(const RingPtr& ring, const std::vector<std::string>& entries) {
  Covector c;
  for (const auto& e : entries) c.push_back(parse_poly(e, ring));
  return c;
}

inline const char* cusp_problem_text() {
  return "ring x, y, z;\n"
         "variety: y^2 - x^3;\n"
         "dim 2;\n"
         "normalization (t, s) -> (t^2, t^3, s);\n"
         "collection k=1: (0, x^3, z^2), (z^3, 0, x^2);\n"
         "collection k=1: (y^2, z^3, 0), (0, y^3, z^2);\n";
}

inline cli::ProblemSpec cusp_problem() { return cli::parse_input_file(cusp_problem_text()); }

/// Ideal with `gens` random generators of order >= 1, redrawn until its local
/// colength is finite and at most `max_colength`.
inline Ideal random_finite_ideal(const RingPtr& ring, SeededRng& rng, std::size_t gens, int max_degree,
                                 std::uint64_t max_colength) {
  for (;;) {
    std::vector<Polynomial> ps;
    for (std::size_t i = 0; i < gens; ++i)
      ps.push_back(oracle::random_polynomial(ring, rng, 1, max_degree, 3, 6));
    Ideal ideal(ring, ps);
    ExtendedCount c = colength(ideal, Locality::local);
    if (c.is_finite() && c.value() > 0 && c.value() <= max_colength) return ideal;
  }
}

/// Integer matrix times polynomial matrix.
inline PolyMatrix mix_rows(const std::vector<std::vector<int>>& u, const PolyMatrix& m) {
  PolyMatrix out(m.ring(), u.size(), m.cols());
  for (std::size_t r = 0; r < u.size(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      Polynomial acc(m.ring());
      for (std::size_t k = 0; k < m.rows(); ++k) acc += m.at(k, c) * Rational(u[r][k]);
      out.set(r, c, acc);
    }
  return out;
}

/// Unimodular integer matrix: a product of random elementary row operations.
inline std::vector<std::vector<int>> random_unimodular(std::size_t n, SeededRng& rng) {
  std::vector<std::vector<int>> u(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) u[i][i] = 1;
  for (int step = 0; step < 6; ++step) {
    auto i = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(n) - 1));
    auto j = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(n) - 1));
    if (i == j) {
      std::swap(u[i], u[(i + 1) % n]);
      continue;
    }
    const int c = static_cast<int>(rng.uniform(-3, 3));
    for (std::size_t k = 0; k < n; ++k) u[i][k] += c * u[j][k];
  }
  return u;
}

}  // namespace testing
