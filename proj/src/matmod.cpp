#include "chernob/matmod.hpp"

#include <algorithm>
#include <stdexcept>
#include <functional>
#include <unordered_map>

#include "chernob/detail/engine.hpp"
#include "chernob/errors.hpp"

namespace chernob {

PolyMatrix::PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols) {
  if (rows == 0 || cols == 0) throw std::invalid_argument("matrix dimensions must be positive");
  entries_.assign(rows * cols, Polynomial(ring_));
}

PolyMatrix::PolyMatrix(RingPtr ring, std::vector<std::vector<Polynomial>> rows)
    : ring_(std::move(ring)), rows_(rows.size()), cols_(rows.empty() ? 0 : rows[0].size()) {
  if (rows_ == 0 || cols_ == 0) throw std::invalid_argument("matrix dimensions must be positive");
  entries_.reserve(rows_ * cols_);
  for (auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix rows");
    for (auto& p : r) {
      if (!same_ring(p.ring(), ring_)) throw RingMismatch();
      entries_.push_back(std::move(p));
    }
  }
}

void PolyMatrix::set(std::size_t r, std::size_t c, Polynomial p) {
  if (!same_ring(p.ring(), ring_)) throw RingMismatch();
  entries_.at(r * cols_ + c) = std::move(p);
}

std::vector<Polynomial> PolyMatrix::row(std::size_t r) const {
  return {entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
          entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix t(ring_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.set(c, r, at(r, c));
  return t;
}

bool PolyMatrix::operator==(const PolyMatrix& other) const {
  return rows_ == other.rows_ && cols_ == other.cols_ && entries_ == other.entries_;
}

PolyMatrix jacobian_matrix(std::span<const Polynomial> equations) {
  if (equations.empty()) throw std::invalid_argument("jacobian of an empty system");
  const RingPtr& ring = equations[0].ring();
  const std::size_t n = ring->num_vars();
  PolyMatrix j(ring, equations.size(), n);
  for (std::size_t i = 0; i < equations.size(); ++i) {
    if (!same_ring(equations[i].ring(), ring)) throw RingMismatch();
    for (std::size_t v = 0; v < n; ++v) j.set(i, v, partial_derivative(equations[i], v));
  }
  return j;
}

PolyMatrix augment(const PolyMatrix& jacobian, std::span<const Covector> forms) {
  std::vector<std::vector<Polynomial>> rows;
  for (std::size_t r = 0; r < jacobian.rows(); ++r) rows.push_back(jacobian.row(r));
  for (const auto& form : forms) {
    if (form.size() != jacobian.cols())
      throw std::invalid_argument("form has " + std::to_string(form.size()) +
                                  " entries, expected " + std::to_string(jacobian.cols()));
    rows.push_back(form);
  }
  return PolyMatrix(jacobian.ring(), std::move(rows));
}

namespace {

// All size-k minors on a fixed row set, by Laplace expansion along the rows
// in order with sub-determinants memoized on the column mask.
class MinorExpander {
 public:
  MinorExpander(const PolyMatrix& m, std::vector<std::size_t> rows)
      : m_(m), rows_(std::move(rows)) {}

  const Polynomial& det(std::uint64_t cols) {
    auto it = memo_.find(cols);
    if (it != memo_.end()) return it->second;
    const std::size_t depth = rows_.size() - static_cast<std::size_t>(__builtin_popcountll(cols));
    Polynomial acc(m_.ring());
    if (cols == 0) {
      acc = Polynomial::constant(m_.ring(), Rational(1));
    } else {
      int position = 0;
      for (std::size_t c = 0; c < m_.cols(); ++c) {
        if (!(cols >> c & 1U)) continue;
        const Polynomial& entry = m_.at(rows_[depth], c);
        if (!entry.is_zero()) {
          Polynomial term = entry * det(cols & ~(std::uint64_t{1} << c));
          if (position % 2 == 0)
            acc += term;
          else
            acc -= term;
        }
        ++position;
      }
    }
    return memo_.emplace(cols, std::move(acc)).first->second;
  }

 private:
  const PolyMatrix& m_;
  std::vector<std::size_t> rows_;
  std::unordered_map<std::uint64_t, Polynomial> memo_;
};

void for_each_subset(std::size_t n, std::size_t k, const std::function<void(std::uint64_t)>& fn) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    std::uint64_t mask = 0;
    for (auto i : idx) mask |= std::uint64_t{1} << i;
    fn(mask);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

Polynomial determinant(const PolyMatrix& square) {
  if (square.rows() != square.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  if (square.cols() > 63) throw std::invalid_argument("matrix too large for minor expansion");
  std::vector<std::size_t> rows(square.rows());
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = i;
  MinorExpander ex(square, rows);
  return ex.det((std::uint64_t{1} << square.cols()) - 1);
}

Ideal minors_ideal(const PolyMatrix& matrix, std::size_t size) {
  if (size == 0 || size > std::min(matrix.rows(), matrix.cols()))
    throw std::invalid_argument("minor size out of range");
  if (matrix.cols() > 63 || matrix.rows() > 63)
    throw std::invalid_argument("matrix too large for minor expansion");
  std::vector<Polynomial> gens;
  auto push_unique = [&](Polynomial p) {
    if (p.is_zero()) return;
    if (std::find(gens.begin(), gens.end(), p) == gens.end()) gens.push_back(std::move(p));
  };
  for_each_subset(matrix.rows(), size, [&](std::uint64_t row_mask) {
    std::vector<std::size_t> rows;
    for (std::size_t r = 0; r < matrix.rows(); ++r)
      if (row_mask >> r & 1U) rows.push_back(r);
    MinorExpander ex(matrix, rows);
    for_each_subset(matrix.cols(), size, [&](std::uint64_t col_mask) { push_unique(ex.det(col_mask)); });
  });
  return Ideal(matrix.ring(), std::move(gens));
}

Ideal maximal_minors(const PolyMatrix& matrix) {
  return minors_ideal(matrix, std::min(matrix.rows(), matrix.cols()));
}

ModulePresentation::ModulePresentation(RingPtr r, std::size_t p, PolyMatrix m)
    : ring(std::move(r)), rank(p), matrix(std::move(m)) {
  if (matrix.rows() != rank) throw std::invalid_argument("presentation matrix row count must equal rank");
  if (!same_ring(ring, matrix.ring())) throw RingMismatch();
}

ModulePresentation tensor_presentation(const ModulePresentation& a, const ModulePresentation& b) {
  if (!same_ring(a.ring, b.ring)) throw RingMismatch();
  const std::size_t pa = a.rank, pb = b.rank;
  const std::size_t qa = a.matrix.cols(), qb = b.matrix.cols();
  PolyMatrix m(a.ring, pa * pb, qa * pb + pa * qb);
  std::size_t col = 0;
  for (std::size_t ca = 0; ca < qa; ++ca)
    for (std::size_t k = 0; k < pb; ++k, ++col)
      for (std::size_t i = 0; i < pa; ++i) m.set(i * pb + k, col, a.matrix.at(i, ca));
  for (std::size_t i = 0; i < pa; ++i)
    for (std::size_t cb = 0; cb < qb; ++cb, ++col)
      for (std::size_t k = 0; k < pb; ++k) m.set(i * pb + k, col, b.matrix.at(k, cb));
  return ModulePresentation(a.ring, pa * pb, std::move(m));
}

ExtendedCount module_colength(const ModulePresentation& presentation) {
  using detail::Vec;
  using detail::VTerm;
  const std::size_t n = presentation.ring->num_vars();
  // Fitting's lemma: the r x r minors annihilate the cokernel. If they are
  // m-primary their staircase degree K gives m^K F inside the submodule,
  // which bounds every degree the module computation needs to see.
  if (presentation.matrix.cols() < presentation.rank) return ExtendedCount::infinite();
  StandardBasis fitting = standard_basis(minors_ideal(presentation.matrix, presentation.rank), MonomialOrder::local());
  if (!colength(fitting).is_finite()) return ExtendedCount::infinite();
  const std::vector<Monomial> fitting_leads = fitting.leading_monomials();
  const std::optional<int> corner = detail::staircase_degree(fitting_leads, n);

  detail::Engine engine(MonomialOrder::local(), n);
  std::vector<Vec> gens;
  for (std::size_t c = 0; c < presentation.matrix.cols(); ++c) {
    Vec v;
    for (std::size_t r = 0; r < presentation.rank; ++r)
      for (const auto& t : presentation.matrix.at(r, c).terms())
        v.push_back(VTerm{t.monomial, static_cast<int>(r), t.coefficient});
    if (!v.empty()) gens.push_back(std::move(v));
  }
  std::vector<Vec> basis = engine.standard_basis(std::move(gens), corner);
  std::uint64_t total = 0;
  for (std::size_t r = 0; r < presentation.rank; ++r) {
    std::vector<Monomial> leads;
    for (const auto& b : basis)
      if (b.front().comp == static_cast<int>(r)) leads.push_back(b.front().mono);
    ExtendedCount part = detail::count_standard_monomials(leads, n);
    if (!part.is_finite()) return ExtendedCount::infinite();
    total += part.value();
  }
  return ExtendedCount(total);
}

}  // namespace chernob
