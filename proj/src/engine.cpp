#include "chernob/detail/engine.hpp"

#include <algorithm>
#include <functional>
#include <limits>

#include "chernob/errors.hpp"

namespace chernob::detail {

namespace {

// Append a last variable t making every term of g of its top degree.
void homogenize(Vec& g) {
  int top = 0;
  for (const auto& t : g) top = std::max(top, t.mono.total_degree());
  for (auto& t : g) {
    Monomial::Exponents e = t.mono.exponents();
    e.push_back(top - t.mono.total_degree());
    t.mono = Monomial(std::move(e));
  }
}

void dehomogenize(Vec& g) {
  for (auto& t : g) {
    Monomial::Exponents e = t.mono.exponents();
    e.pop_back();
    t.mono = Monomial(std::move(e));
  }
}

// Number of monomials of the given degree in n variables.
double monomial_count(std::size_t n, long degree) {
  double count = 1;
  for (std::size_t i = 1; i < n; ++i) count = count * static_cast<double>(degree + static_cast<long>(i)) / static_cast<double>(i);
  return count;
}

int max_degree(const Vec& v) {
  int d = 0;
  for (const auto& t : v) d = std::max(d, t.mono.total_degree());
  return d;
}

int ecart(const Vec& v) { return max_degree(v) - v.front().mono.total_degree(); }

void make_monic(Vec& v) {
  if (v.empty() || v.front().coef == 1) return;
  Rational inv = Rational(1) / v.front().coef;
  for (auto& t : v) t.coef *= inv;
}

bool lead_divides(const Vec& g, const Vec& h) {
  return g.front().comp == h.front().comp && g.front().mono.divides(h.front().mono);
}

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;  // multiplier for corner products
  int comp;
  bool corner;  // product of basis[i] with a monomial reaching the corner degree
};

constexpr int no_corner = std::numeric_limits<int>::max();

void truncate(Vec& v, int corner) {
  if (corner == no_corner) return;
  std::erase_if(v, [corner](const VTerm& t) { return t.mono.total_degree() >= corner; });
}

// Calls f on every monomial of total degree `degree` in n variables.
void for_each_monomial(std::size_t n, int degree, const std::function<void(const Monomial&)>& f) {
  Monomial m(n);
  std::function<void(std::size_t, int)> rec = [&](std::size_t var, int left) {
    if (var + 1 == n) {
      m.set(var, left);
      f(m);
      m.set(var, 0);
      return;
    }
    for (int e = left; e >= 0; --e) {
      m.set(var, e);
      rec(var + 1, left - e);
    }
    m.set(var, 0);
  };
  if (n > 0) rec(0, degree);
}


}  // namespace

void Engine::sort(Vec& v) const {
  std::sort(v.begin(), v.end(), [this](const VTerm& a, const VTerm& b) { return compare(a, b) > 0; });
  Vec out;
  out.reserve(v.size());
  for (auto& t : v) {
    if (!out.empty() && out.back().comp == t.comp && out.back().mono == t.mono) {
      out.back().coef += t.coef;
    } else {
      if (!out.empty() && out.back().coef == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coef == 0) out.pop_back();
  v = std::move(out);
}

Vec Engine::sub_multiple(const Vec& h, const Rational& c, const Monomial& m, const Vec& g) const {
  Vec out;
  out.reserve(h.size() + g.size());
  std::size_t i = 0, j = 0;
  VTerm scaled;
  auto load = [&](std::size_t k) {
    scaled.mono = g[k].mono * m;
    scaled.comp = g[k].comp;
    scaled.coef = c * g[k].coef;
  };
  if (j < g.size()) load(j);
  while (i < h.size() || j < g.size()) {
    int cmp;
    if (i == h.size())
      cmp = -1;
    else if (j == g.size())
      cmp = 1;
    else
      cmp = compare(h[i], scaled);
    if (cmp > 0) {
      out.push_back(h[i++]);
    } else if (cmp < 0) {
      scaled.coef = -scaled.coef;
      out.push_back(std::move(scaled));
      if (++j < g.size()) load(j);
    } else {
      Rational s = h[i].coef - scaled.coef;
      if (s != 0) out.push_back(VTerm{h[i].mono, h[i].comp, std::move(s)});
      ++i;
      if (++j < g.size()) load(j);
    }
  }
  return out;
}

Vec Engine::s_vector(const Vec& a, const Vec& b) const {
  const Monomial l = a.front().mono.lcm(b.front().mono);
  const Monomial ma = l / a.front().mono;
  const Monomial mb = l / b.front().mono;
  Vec lhs;
  lhs.reserve(a.size());
  Rational inv = Rational(1) / a.front().coef;
  for (const auto& t : a) lhs.push_back(VTerm{t.mono * ma, t.comp, t.coef * inv});
  return sub_multiple(lhs, Rational(1) / b.front().coef, mb, b);
}

Vec Engine::mora_reduce(Vec h, std::span<const Vec> basis, int corner) const {
  // T starts as the basis; reducers with larger ecart than h push h into T.
  std::vector<const Vec*> reducers;
  reducers.reserve(basis.size());
  for (const auto& g : basis) reducers.push_back(&g);
  std::vector<std::unique_ptr<Vec>> owned;
  std::vector<int> ecarts;
  ecarts.reserve(basis.size());
  for (const auto& g : basis) ecarts.push_back(ecart(g));

  while (!h.empty()) {
    int best = -1;
    for (std::size_t k = 0; k < reducers.size(); ++k) {
      if (lead_divides(*reducers[k], h) && (best < 0 || ecarts[k] < ecarts[best]))
        best = static_cast<int>(k);
    }
    if (best < 0) break;
    const Vec* g = reducers[best];
    int eh = ecart(h);
    if (ecarts[best] > eh) {
      owned.push_back(std::make_unique<Vec>(h));
      reducers.push_back(owned.back().get());
      ecarts.push_back(eh);
      g = reducers[best];
    }
    Rational c = h.front().coef / g->front().coef;
    Monomial m = h.front().mono / g->front().mono;
    h = sub_multiple(h, c, m, *g);
    truncate(h, corner);
  }
  return h;
}

Vec Engine::full_reduce(Vec h, std::span<const Vec> basis) const {
  Vec remainder;
  while (!h.empty()) {
    const Vec* reducer = nullptr;
    for (const auto& g : basis) {
      if (lead_divides(g, h)) {
        reducer = &g;
        break;
      }
    }
    if (!reducer) {
      remainder.push_back(std::move(h.front()));
      h.erase(h.begin());
      continue;
    }
    Rational c = h.front().coef / reducer->front().coef;
    Monomial m = h.front().mono / reducer->front().mono;
    h = sub_multiple(h, c, m, *reducer);
  }
  return remainder;
}

Vec Engine::normal_form(Vec f, std::span<const Vec> basis) const {
  if (order_.is_local()) return mora_reduce(std::move(f), basis, no_corner);
  return full_reduce(std::move(f), basis);
}


int Engine::corner_degree(std::span<const Vec> basis, std::span<const int> comps) const {
  // Under POT the quotient is filtered by components with factors O/J_c,
  // where J_c is the ideal of comp-c coefficients of elements led in comp c.
  // If the leads of J_c contain x_i^a_i for every i then m^s_c lies in J_c
  // with s_c = sum(a_i - 1) + 1, so m^N kills the quotient for N = sum s_c.
  long total = 0;
  for (int c : comps) {
    std::vector<Monomial> leads;
    for (const auto& g : basis)
      if (g.front().comp == c) leads.push_back(g.front().mono);
    std::optional<int> s = staircase_degree(leads, num_vars_);
    if (!s) return no_corner;
    total += *s;
  }
  // Corner products enumerate monomials of degree up to N; refuse bounds
  // that would make that enumeration unreasonably large.
  if (monomial_count(num_vars_, total) > 2e4) return no_corner;
  return static_cast<int>(total);
}

std::vector<Vec> Engine::buchberger_mora(std::vector<Vec> generators, std::span<const int> comps, int corner,
                                         int& found_corner) const {
  const bool local = order_.is_local();
  const bool single_component = comps.size() <= 1;
  found_corner = corner;

  std::vector<Vec> basis;
  std::vector<bool> alive;  // cleared once another element proves it redundant
  std::vector<Pair> pairs;

  auto top_reduce = [&](Vec h) {
    if (local) return mora_reduce(std::move(h), basis, corner);
    // Global: reduce only the leading term; tails are cleaned up at the end.
    while (!h.empty()) {
      const Vec* reducer = nullptr;
      for (const auto& g : basis)
        if (lead_divides(g, h)) {
          reducer = &g;
          break;
        }
      if (!reducer) break;
      Rational c = h.front().coef / reducer->front().coef;
      Monomial m = h.front().mono / reducer->front().mono;
      h = sub_multiple(h, c, m, *reducer);
    }
    return h;
  };

  auto add = [&](Vec h) {
    make_monic(h);
    const Monomial& lm = h.front().mono;
    const int comp = h.front().comp;
    // Gebauer-Moeller B criterion on queued pairs.
    std::erase_if(pairs, [&](const Pair& p) {
      if (p.corner || p.comp != comp || !lm.divides(p.lcm)) return false;
      const Monomial li = basis[p.i].front().mono.lcm(lm);
      const Monomial lj = basis[p.j].front().mono.lcm(lm);
      return !(li == p.lcm) && !(lj == p.lcm);
    });
    const std::size_t idx = basis.size();
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (!alive[i] || basis[i].front().comp != comp) continue;
      const Monomial& li = basis[i].front().mono;
      if (single_component && li.coprime(lm)) continue;
      Monomial l = li.lcm(lm);
      if (l.total_degree() >= corner) continue;  // both multiples truncate to corner products
      pairs.push_back(Pair{i, idx, std::move(l), comp, false});
    }
    // Past the corner only tail terms of lower degree than the lead, which
    // POT allows in later components, survive in a multiple of h.
    const int lead_degree = lm.total_degree();
    const bool low_tail = std::any_of(h.begin(), h.end(), [&](const VTerm& t) { return t.mono.total_degree() < lead_degree; });
    if (corner != no_corner && low_tail)
      for_each_monomial(num_vars_, corner - lead_degree,
                        [&](const Monomial& mu) { pairs.push_back(Pair{idx, idx, mu, comp, true}); });
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (alive[i] && basis[i].front().comp == comp && lm.divides(basis[i].front().mono))
        alive[i] = local ? alive[i] : false;
    basis.push_back(std::move(h));
    alive.push_back(true);
    if (local) found_corner = std::min(found_corner, corner_degree(basis, comps));
  };

  for (std::size_t k = 0; k < generators.size(); ++k) {
    Vec g = std::move(generators[k]);
    truncate(g, corner);
    if (g.empty()) continue;
    Vec h = top_reduce(std::move(g));
    if (!h.empty()) add(std::move(h));
    if (found_corner < corner) {
      // the restart still needs the generators not yet seen
      for (std::size_t rest = k + 1; rest < generators.size(); ++rest) basis.push_back(std::move(generators[rest]));
      return basis;
    }
  }

  auto key = [&](const Pair& p) { return p.corner ? corner : p.lcm.total_degree(); };
  while (!pairs.empty()) {
    auto it = std::min_element(pairs.begin(), pairs.end(), [&](const Pair& a, const Pair& b) {
      if (key(a) != key(b)) return key(a) < key(b);
      if (a.comp != b.comp) return a.comp < b.comp;
      if (a.j != b.j) return a.j < b.j;
      return a.i < b.i;
    });
    Pair p = *it;
    pairs.erase(it);
    if (cap_ && key(p) > *cap_) throw CapExceeded("pair degree cap " + std::to_string(*cap_) + " exceeded");
    Vec s;
    if (p.corner) {
      for (const auto& t : basis[p.i]) s.push_back(VTerm{t.mono * p.lcm, t.comp, t.coef});
      truncate(s, corner);
    } else {
      s = s_vector(basis[p.i], basis[p.j]);
    }
    Vec h = top_reduce(std::move(s));
    if (!h.empty()) add(std::move(h));
    if (found_corner < corner) return basis;
  }
  return basis;
}

// Lazard: homogenize with a new last variable t, compute a Groebner basis
// under the homogenized order, set t = 1. Leading terms survive the
// dehomogenization, and the result is a standard basis of the local module.
// Plain Mora reduction can crawl through long power-series expansions on
// positive-dimensional input; the homogeneous computation is finite.
std::vector<Vec> Engine::lazard(std::vector<Vec> generators) const {
  Engine homogeneous(MonomialOrder::homogenized_local(), num_vars_ + 1, cap_);
  for (auto& g : generators) {
    homogenize(g);
    homogeneous.sort(g);
  }
  std::vector<Vec> basis = homogeneous.standard_basis(std::move(generators));
  for (auto& g : basis) {
    dehomogenize(g);
    sort(g);
  }
  return basis;
}

std::vector<Vec> Engine::standard_basis(std::vector<Vec> generators, std::optional<int> corner_hint) const {
  std::vector<int> comps;
  for (auto& g : generators) {
    sort(g);
    for (const auto& t : g) comps.push_back(t.comp);
  }
  std::sort(comps.begin(), comps.end());
  comps.erase(std::unique(comps.begin(), comps.end()), comps.end());

  // Local case: once the leads bound the colength, m^N F lies in the module
  // and every term of degree >= N can be dropped. Each time the bound
  // improves the computation restarts from the basis found so far.
  auto run = [&](std::vector<Vec> gens, int corner) {
    std::vector<Vec> basis;
    for (;;) {
      int found = corner;
      basis = buchberger_mora(std::move(gens), comps, corner, found);
      if (found >= corner) break;
      corner = found;
      gens = std::move(basis);
    }
    if (corner != no_corner) {
      // The monomials of degree N belong to the module; keep those not
      // already covered so the leading module is complete.
      for (int c : comps)
        for_each_monomial(num_vars_, corner, [&](const Monomial& m) {
          for (const auto& g : basis)
            if (g.front().comp == c && g.front().mono.divides(m)) return;
          basis.push_back(Vec{VTerm{m, c, Rational(1)}});
        });
    }
    return basis;
  };

  std::vector<Vec> basis;
  if (!order_.is_local())
    basis = run(std::move(generators), no_corner);
  else if (corner_hint)
    basis = run(std::move(generators), *corner_hint);
  else
    basis = lazard(std::move(generators));
  const bool local = order_.is_local();

  // Minimalize: keep the first element of each class of equal leading
  // monomials and drop any element whose lead is divisible by another's.
  std::vector<Vec> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j || basis[j].front().comp != basis[i].front().comp) continue;
      const Monomial& mj = basis[j].front().mono;
      const Monomial& mi = basis[i].front().mono;
      if (mj.divides(mi) && (!(mj == mi) || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(basis[i]);
  }

  if (!local) {
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      Vec head{minimal[i].front()};
      Vec tail(minimal[i].begin() + 1, minimal[i].end());
      std::vector<Vec> others;
      for (std::size_t j = 0; j < minimal.size(); ++j)
        if (j != i) others.push_back(minimal[j]);
      Vec reduced = full_reduce(std::move(tail), others);
      head.insert(head.end(), reduced.begin(), reduced.end());
      minimal[i] = std::move(head);
    }
  }
  for (auto& v : minimal) make_monic(v);
  std::sort(minimal.begin(), minimal.end(),
            [this](const Vec& a, const Vec& b) { return compare(a.front(), b.front()) < 0; });
  return minimal;
}

bool Engine::is_standard(std::span<const Vec> basis) const {
  if (order_.is_local()) {
    // The leading module of the local module is generated by the leads of
    // its Lazard basis; the input is standard iff its leads cover those.
    for (const auto& f : lazard(std::vector<Vec>(basis.begin(), basis.end()))) {
      const bool covered = std::any_of(basis.begin(), basis.end(), [&](const Vec& g) { return lead_divides(g, f); });
      if (!covered) return false;
    }
    return true;
  }
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      if (basis[i].front().comp != basis[j].front().comp) continue;
      if (!normal_form(s_vector(basis[i], basis[j]), basis).empty()) return false;
    }
  return true;
}

ExtendedCount count_standard_monomials(std::span<const Monomial> leads, std::size_t num_vars) {
  std::vector<int> bound(num_vars, -1);
  for (const auto& m : leads) {
    if (m.is_one()) return ExtendedCount(0);
    int support = -1, count = 0;
    for (std::size_t i = 0; i < num_vars; ++i)
      if (m[i] > 0) {
        support = static_cast<int>(i);
        ++count;
      }
    if (count == 1 && (bound[support] < 0 || m[support] < bound[support])) bound[support] = m[support];
  }
  for (int b : bound)
    if (b < 0) return ExtendedCount::infinite();

  auto divisible = [&](const Monomial& m) {
    return std::any_of(leads.begin(), leads.end(), [&](const Monomial& l) { return l.divides(m); });
  };
  std::uint64_t total = 0;
  Monomial cur(num_vars);
  // Divisibility is monotone in every exponent, so each loop stops at the
  // first divisible monomial.
  std::function<void(std::size_t)> walk = [&](std::size_t var) {
    for (int e = 0; e < bound[var]; ++e) {
      cur.set(var, e);
      if (divisible(cur)) break;
      if (var + 1 == num_vars)
        ++total;
      else
        walk(var + 1);
    }
    cur.set(var, 0);
  };
  walk(0);
  return ExtendedCount(total);
}

std::optional<int> staircase_degree(std::span<const Monomial> leads, std::size_t num_vars) {
  int total = 1;
  for (std::size_t i = 0; i < num_vars; ++i) {
    int best = 0;
    for (const auto& m : leads) {
      if (m.is_one()) return 0;
      if (m[i] > 0 && m.total_degree() == m[i] && (best == 0 || m[i] < best)) best = m[i];
    }
    if (best == 0) return std::nullopt;
    total += best - 1;
  }
  return total;
}

int monomial_ideal_dimension(std::span<const Monomial> leads, std::size_t num_vars) {
  for (const auto& m : leads)
    if (m.is_one()) return -1;
  int best = 0;
  const std::uint64_t subsets = std::uint64_t{1} << num_vars;
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    int size = __builtin_popcountll(mask);
    if (size <= best) continue;
    bool independent = std::none_of(leads.begin(), leads.end(), [&](const Monomial& m) {
      for (std::size_t i = 0; i < num_vars; ++i)
        if (m[i] > 0 && !(mask >> i & 1U)) return false;
      return true;
    });
    if (independent) best = size;
  }
  return best;
}

}  // namespace chernob::detail
