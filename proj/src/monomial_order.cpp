#include "chernob/monomial_order.hpp"

namespace chernob {

namespace {

// Reverse-lex tie break on the index range [lo, hi): the monomial with the
// smaller exponent in the last differing variable is larger.
int revlex_tail(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
  for (std::size_t i = hi; i-- > lo;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

int block_degrevlex(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
  int da = 0, db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da > db ? 1 : -1;
  return revlex_tail(a, b, lo, hi);
}

}  // namespace

int degrevlex_compare(const Monomial& a, const Monomial& b) {
  if (a.total_degree() != b.total_degree())
    return a.total_degree() > b.total_degree() ? 1 : -1;
  return revlex_tail(a, b, 0, a.size());
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  switch (kind_) {
    case Kind::global_degrevlex:
      return degrevlex_compare(a, b);
    case Kind::local_negdegrevlex:
      if (a.total_degree() != b.total_degree())
        return a.total_degree() < b.total_degree() ? 1 : -1;
      return revlex_tail(a, b, 0, a.size());
    case Kind::block_elimination: {
      if (int c = block_degrevlex(a, b, 0, block_); c != 0) return c;
      return block_degrevlex(a, b, block_, a.size());
    }
    case Kind::homogenized_local: {
      if (a.total_degree() != b.total_degree())
        return a.total_degree() > b.total_degree() ? 1 : -1;
      const std::size_t t = a.size() - 1;
      if (a[t] != b[t]) return a[t] > b[t] ? 1 : -1;
      return revlex_tail(a, b, 0, t);
    }
  }
  return 0;
}

std::string MonomialOrder::name() const {
  switch (kind_) {
    case Kind::global_degrevlex:
      return "degrevlex";
    case Kind::local_negdegrevlex:
      return "negdegrevlex";
    case Kind::block_elimination:
      return "elimination(" + std::to_string(block_) + ")";
    case Kind::homogenized_local:
      return "homogenized-negdegrevlex";
  }
  return "?";
}

}  // namespace chernob
