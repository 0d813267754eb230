#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "chernob/groebner.hpp"
#include "chernob/polynomial.hpp"

namespace chernob {

/// A 1-form written in coordinates: one polynomial per ring variable.
using Covector = std::vector<Polynomial>;

class PolyMatrix {
 public:
  /// Zero matrix; both dimensions must be positive.
  PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols);
  /// From rows, each of equal positive length.
  PolyMatrix(RingPtr ring, std::vector<std::vector<Polynomial>> rows);

  const RingPtr& ring() const noexcept { return ring_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  const Polynomial& at(std::size_t r, std::size_t c) const { return entries_.at(r * cols_ + c); }
  void set(std::size_t r, std::size_t c, Polynomial p);
  std::vector<Polynomial> row(std::size_t r) const;

  PolyMatrix transpose() const;
  bool operator==(const PolyMatrix& other) const;

 private:
  RingPtr ring_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Polynomial> entries_;
};

/// Entry (i, j) is the partial derivative of F_i by variable j.
PolyMatrix jacobian_matrix(std::span<const Polynomial> equations);

/// Rows of `jacobian` followed by one row per form.
PolyMatrix augment(const PolyMatrix& jacobian, std::span<const Covector> forms);

Polynomial determinant(const PolyMatrix& square);

/// Ideal of all nonzero size-`size` minors.
Ideal minors_ideal(const PolyMatrix& matrix, std::size_t size);
Ideal maximal_minors(const PolyMatrix& matrix);

/// Cokernel of `matrix`: the free module of rank matrix.rows() modulo the
/// submodule generated by the columns.
struct ModulePresentation {
  ModulePresentation(RingPtr ring, std::size_t rank, PolyMatrix matrix);

  RingPtr ring;
  std::size_t rank;
  PolyMatrix matrix;
};

/// Presentation of coker(A) tensor coker(B): ambient rank p_A p_B and
/// matrix [A (x) I | I (x) B].
ModulePresentation tensor_presentation(const ModulePresentation& a, const ModulePresentation& b);

/// Length of the cokernel over the local ring at the origin, from a Mora
/// standard basis of the column module under position-over-term.
ExtendedCount module_colength(const ModulePresentation& presentation);

}  // namespace chernob
