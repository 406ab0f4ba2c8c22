#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "leflab/rational.hpp"

namespace leflab {

using Vec = std::vector<Rational>;

/// Dense exact rational matrix, row-major. No floating point anywhere.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}

  static RationalMatrix identity(std::size_t n);
  /// Columns are the given vectors; every vector must have length `ambient`.
  static RationalMatrix from_columns(std::size_t ambient, const std::vector<Vec>& columns);
  static RationalMatrix from_rows(std::size_t width, const std::vector<Vec>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  Vec column(std::size_t j) const;
  Vec row(std::size_t i) const;
  void swap_rows(std::size_t a, std::size_t b);

  RationalMatrix transposed() const;
  RationalMatrix operator*(const RationalMatrix& rhs) const;
  Vec apply(const Vec& v) const;
  bool is_zero() const;
  bool operator==(const RationalMatrix& rhs) const = default;

  /// Glue two matrices side by side (same row count).
  static RationalMatrix hconcat(const RationalMatrix& a, const RationalMatrix& b);
  /// Stack two matrices (same column count).
  static RationalMatrix vconcat(const RationalMatrix& a, const RationalMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

/// Ordered list of linearly independent coordinate vectors in a fixed ambient space.
struct SubspaceBasis {
  std::size_t ambient_dim = 0;
  std::vector<Vec> vectors;

  std::size_t dim() const { return vectors.size(); }

  static SubspaceBasis empty(std::size_t ambient) { return SubspaceBasis{ambient, {}}; }
  /// Standard basis of the full ambient space.
  static SubspaceBasis full(std::size_t ambient);
  /// Takes the vectors as-is; throws std::invalid_argument if dependent.
  static SubspaceBasis of(std::size_t ambient, std::vector<Vec> independent);
  /// Greedy left-to-right reduction of a spanning set to an independent subset.
  static SubspaceBasis from_spanning(std::size_t ambient, const std::vector<Vec>& spanning);

  RationalMatrix as_columns() const { return RationalMatrix::from_columns(ambient_dim, vectors); }
};

struct RankKernelImage {
  std::size_t rank = 0;
  SubspaceBasis kernel;
  SubspaceBasis image;
};

/// Row echelon data produced by fraction-free elimination.
struct Echelon {
  RationalMatrix mat;
  std::vector<std::size_t> pivot_cols;
  std::size_t rank() const { return pivot_cols.size(); }
};

/// Fraction-free (Bareiss-style) elimination to row echelon form.
/// Pivot choice: smallest |num|*|den| in the column, which keeps
/// intermediate coefficients short in exact arithmetic.
Echelon echelon_form(RationalMatrix m);

/// Plain rational Gaussian elimination rank. Reference route used to
/// cross-check the fraction-free path.
std::size_t rank_naive(RationalMatrix m);

std::size_t rank(const RationalMatrix& m);

/// Rank, kernel basis and image basis of m in one pass. The image basis is the
/// set of pivot columns of m itself, so it is reproducible and made of actual
/// image vectors.
RankKernelImage rank_kernel_image(const RationalMatrix& m);

/// One exact solution of a*x = b, free variables set to zero. nullopt if inconsistent.
std::optional<Vec> solve(const RationalMatrix& a, const Vec& b);

/// Coordinates of v in the given basis, or nullopt if v is outside the span.
std::optional<Vec> coordinates_in(const SubspaceBasis& basis, const Vec& v);

bool in_span(const SubspaceBasis& basis, const Vec& v);

/// Vectors extending `subspace` to a basis of `space`. Throws NotASubspace if
/// some subspace vector is not inside span(space).
SubspaceBasis quotient_representatives(const SubspaceBasis& space, const SubspaceBasis& subspace);

/// Matrix of a linear map in the given bases: column j holds the
/// codomain-basis coordinates of apply(domain.vectors[j]).
/// Throws NotInCodomain if an image leaves the codomain span.
RationalMatrix matrix_of_map(const SubspaceBasis& domain, const SubspaceBasis& codomain,
                             const std::function<Vec(const Vec&)>& apply);

SubspaceBasis intersect(const SubspaceBasis& a, const SubspaceBasis& b);
SubspaceBasis subspace_sum(const SubspaceBasis& a, const SubspaceBasis& b);

std::optional<RationalMatrix> inverse(const RationalMatrix& m);

/// Quotient of a numerator space by a contained denominator space, with
/// deterministic representatives and exact class coordinates.
struct QuotientSpace {
  SubspaceBasis cocycles;
  SubspaceBasis boundaries;
  SubspaceBasis reps;

  std::size_t dim() const { return reps.dim(); }

  /// Coordinates of [z] in the representative basis. Throws NotASubspace if z
  /// is not in span(cocycles).
  Vec class_coords(const Vec& cocycle) const;

  static QuotientSpace of(SubspaceBasis cocycles, SubspaceBasis boundaries);
};

}  // namespace leflab
