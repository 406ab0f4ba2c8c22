#include "leflab/linalg.hpp"

#include <algorithm>
#include <stdexcept>

#include "leflab/errors.hpp"

namespace leflab {

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::from_columns(std::size_t ambient, const std::vector<Vec>& columns) {
  RationalMatrix m(ambient, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != ambient) throw DimensionMismatch("column length != ambient dim");
    for (std::size_t i = 0; i < ambient; ++i) m.at(i, j) = columns[j][i];
  }
  return m;
}

RationalMatrix RationalMatrix::from_rows(std::size_t width, const std::vector<Vec>& rows) {
  RationalMatrix m(rows.size(), width);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != width) throw DimensionMismatch("row length != width");
    for (std::size_t j = 0; j < width; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

Vec RationalMatrix::column(std::size_t j) const {
  Vec v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
  return v;
}

Vec RationalMatrix::row(std::size_t i) const {
  Vec v(cols_);
  for (std::size_t j = 0; j < cols_; ++j) v[j] = at(i, j);
  return v;
}

void RationalMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
}

RationalMatrix RationalMatrix::transposed() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw DimensionMismatch("matrix product shape mismatch");
  RationalMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = at(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        out.at(i, j) += a * rhs.at(k, j);
      }
    }
  }
  return out;
}

Vec RationalMatrix::apply(const Vec& v) const {
  if (v.size() != cols_) throw DimensionMismatch("matrix apply shape mismatch");
  Vec out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    Rational acc = 0;
    for (std::size_t j = 0; j < cols_; ++j) acc += at(i, j) * v[j];
    out[i] = acc;
  }
  return out;
}

bool RationalMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Rational& r) { return r == 0; });
}

RationalMatrix RationalMatrix::hconcat(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows() != b.rows()) throw DimensionMismatch("hconcat row mismatch");
  RationalMatrix out(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) out.at(i, a.cols() + j) = b.at(i, j);
  }
  return out;
}

RationalMatrix RationalMatrix::vconcat(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.cols()) throw DimensionMismatch("vconcat col mismatch");
  RationalMatrix out(a.rows() + b.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) out.at(a.rows() + i, j) = b.at(i, j);
  return out;
}

SubspaceBasis SubspaceBasis::full(std::size_t ambient) {
  SubspaceBasis b{ambient, {}};
  b.vectors.reserve(ambient);
  for (std::size_t i = 0; i < ambient; ++i) {
    Vec v(ambient);
    v[i] = 1;
    b.vectors.push_back(std::move(v));
  }
  return b;
}

SubspaceBasis SubspaceBasis::of(std::size_t ambient, std::vector<Vec> independent) {
  SubspaceBasis b{ambient, std::move(independent)};
  for (const Vec& v : b.vectors) {
    if (v.size() != ambient) throw DimensionMismatch("basis vector length != ambient dim");
  }
  if (rank(b.as_columns()) != b.dim()) {
    throw std::invalid_argument("SubspaceBasis::of: vectors are linearly dependent");
  }
  return b;
}

SubspaceBasis SubspaceBasis::from_spanning(std::size_t ambient, const std::vector<Vec>& spanning) {
  SubspaceBasis b = empty(ambient);
  std::size_t current_rank = 0;
  for (const Vec& v : spanning) {
    if (v.size() != ambient) throw DimensionMismatch("spanning vector length != ambient dim");
    b.vectors.push_back(v);
    std::size_t r = rank(b.as_columns());
    if (r == current_rank) {
      b.vectors.pop_back();
    } else {
      current_rank = r;
    }
  }
  return b;
}

Echelon echelon_form(RationalMatrix m) {
  Echelon e;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t lead = 0;
  Rational prev_pivot = 1;
  for (std::size_t col = 0; col < cols && lead < rows; ++col) {
    // cheapest nonzero pivot in this column
    std::size_t best = rows;
    Integer best_weight = 0;
    for (std::size_t i = lead; i < rows; ++i) {
      if (m.at(i, col) == 0) continue;
      Integer w = pivot_weight(m.at(i, col));
      if (best == rows || w < best_weight) {
        best = i;
        best_weight = w;
      }
    }
    if (best == rows) continue;
    m.swap_rows(lead, best);
    const Rational pivot = m.at(lead, col);
    for (std::size_t i = lead + 1; i < rows; ++i) {
      const Rational head = m.at(i, col);
      for (std::size_t j = col + 1; j < cols; ++j) {
        m.at(i, j) = (m.at(i, j) * pivot - head * m.at(lead, j)) / prev_pivot;
      }
      m.at(i, col) = 0;
    }
    prev_pivot = pivot;
    e.pivot_cols.push_back(col);
    ++lead;
  }
  e.mat = std::move(m);
  return e;
}

std::size_t rank_naive(RationalMatrix m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t lead = 0;
  for (std::size_t col = 0; col < cols && lead < rows; ++col) {
    std::size_t pivot_row = rows;
    for (std::size_t i = lead; i < rows; ++i) {
      if (m.at(i, col) != 0) {
        pivot_row = i;
        break;
      }
    }
    if (pivot_row == rows) continue;
    m.swap_rows(lead, pivot_row);
    const Rational inv = Rational(1) / m.at(lead, col);
    for (std::size_t j = col; j < cols; ++j) m.at(lead, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == lead || m.at(i, col) == 0) continue;
      const Rational f = m.at(i, col);
      for (std::size_t j = col; j < cols; ++j) m.at(i, j) -= f * m.at(lead, j);
    }
    ++lead;
  }
  return lead;
}

std::size_t rank(const RationalMatrix& m) { return echelon_form(m).rank(); }

namespace {

/// Back-substitution on an echelon form: solve E*x = rhs restricted to the
/// first `cols` variables, free variables pinned to zero.
/// Returns nullopt if inconsistent.
std::optional<Vec> back_substitute(const Echelon& e, std::size_t cols) {
  const RationalMatrix& m = e.mat;
  // any pivot in the rhs column means inconsistency
  for (std::size_t pc : e.pivot_cols) {
    if (pc >= cols) return std::nullopt;
  }
  Vec x(cols, Rational(0));
  for (std::size_t r = e.pivot_cols.size(); r-- > 0;) {
    const std::size_t pc = e.pivot_cols[r];
    Rational acc = m.at(r, cols);  // rhs entry
    for (std::size_t j = pc + 1; j < cols; ++j) {
      if (m.at(r, j) != 0) acc -= m.at(r, j) * x[j];
    }
    x[pc] = acc / m.at(r, pc);
  }
  // rows below the pivots must have zero rhs
  for (std::size_t r = e.pivot_cols.size(); r < m.rows(); ++r) {
    if (m.at(r, cols) != 0) return std::nullopt;
  }
  return x;
}

}  // namespace

RankKernelImage rank_kernel_image(const RationalMatrix& m) {
  Echelon e = echelon_form(m);
  RankKernelImage out;
  out.rank = e.rank();

  out.image = SubspaceBasis::empty(m.rows());
  for (std::size_t pc : e.pivot_cols) out.image.vectors.push_back(m.column(pc));

  // kernel: one vector per free column, solved against the echelon form
  out.kernel = SubspaceBasis::empty(m.cols());
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t pc : e.pivot_cols) is_pivot[pc] = true;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec v(m.cols(), Rational(0));
    v[f] = 1;
    for (std::size_t r = e.pivot_cols.size(); r-- > 0;) {
      const std::size_t pc = e.pivot_cols[r];
      if (pc > f) continue;
      Rational acc = 0;
      for (std::size_t j = pc + 1; j < m.cols(); ++j) {
        if (e.mat.at(r, j) != 0 && v[j] != 0) acc += e.mat.at(r, j) * v[j];
      }
      v[pc] = -acc / e.mat.at(r, pc);
    }
    out.kernel.vectors.push_back(std::move(v));
  }
  return out;
}

std::optional<Vec> solve(const RationalMatrix& a, const Vec& b) {
  if (b.size() != a.rows()) throw DimensionMismatch("solve rhs length mismatch");
  RationalMatrix rhs = RationalMatrix::from_columns(b.size(), {b});
  Echelon e = echelon_form(RationalMatrix::hconcat(a, rhs));
  return back_substitute(e, a.cols());
}

std::optional<Vec> coordinates_in(const SubspaceBasis& basis, const Vec& v) {
  if (v.size() != basis.ambient_dim) throw DimensionMismatch("vector/ambient mismatch");
  return solve(basis.as_columns(), v);
}

bool in_span(const SubspaceBasis& basis, const Vec& v) {
  return coordinates_in(basis, v).has_value();
}

SubspaceBasis quotient_representatives(const SubspaceBasis& space, const SubspaceBasis& subspace) {
  if (space.ambient_dim != subspace.ambient_dim) {
    throw DimensionMismatch("quotient ambient mismatch");
  }
  for (const Vec& v : subspace.vectors) {
    if (!in_span(space, v)) throw NotASubspace("subspace vector outside span(space)");
  }
  SubspaceBasis reps = SubspaceBasis::empty(space.ambient_dim);
  std::vector<Vec> accumulated = subspace.vectors;
  std::size_t current_rank = subspace.dim();
  for (const Vec& v : space.vectors) {
    accumulated.push_back(v);
    if (rank(RationalMatrix::from_columns(space.ambient_dim, accumulated)) == current_rank) {
      accumulated.pop_back();
    } else {
      ++current_rank;
      reps.vectors.push_back(v);
    }
  }
  return reps;
}

RationalMatrix matrix_of_map(const SubspaceBasis& domain, const SubspaceBasis& codomain,
                             const std::function<Vec(const Vec&)>& apply) {
  RationalMatrix m(codomain.dim(), domain.dim());
  for (std::size_t j = 0; j < domain.dim(); ++j) {
    Vec image = apply(domain.vectors[j]);
    auto coords = coordinates_in(codomain, image);
    if (!coords) throw NotInCodomain("image vector outside span(codomain)");
    for (std::size_t i = 0; i < codomain.dim(); ++i) m.at(i, j) = (*coords)[i];
  }
  return m;
}

SubspaceBasis intersect(const SubspaceBasis& a, const SubspaceBasis& b) {
  if (a.ambient_dim != b.ambient_dim) throw DimensionMismatch("intersect ambient mismatch");
  if (a.dim() == 0 || b.dim() == 0) return SubspaceBasis::empty(a.ambient_dim);
  RationalMatrix stacked = RationalMatrix::hconcat(a.as_columns(), b.as_columns());
  SubspaceBasis ker = rank_kernel_image(stacked).kernel;
  std::vector<Vec> cut;
  for (const Vec& k : ker.vectors) {
    Vec v(a.ambient_dim, Rational(0));
    for (std::size_t j = 0; j < a.dim(); ++j) {
      if (k[j] == 0) continue;
      for (std::size_t i = 0; i < a.ambient_dim; ++i) v[i] += k[j] * a.vectors[j][i];
    }
    cut.push_back(std::move(v));
  }
  return SubspaceBasis::from_spanning(a.ambient_dim, cut);
}

SubspaceBasis subspace_sum(const SubspaceBasis& a, const SubspaceBasis& b) {
  if (a.ambient_dim != b.ambient_dim) throw DimensionMismatch("sum ambient mismatch");
  std::vector<Vec> all = a.vectors;
  all.insert(all.end(), b.vectors.begin(), b.vectors.end());
  return SubspaceBasis::from_spanning(a.ambient_dim, all);
}

std::optional<RationalMatrix> inverse(const RationalMatrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const std::size_t n = m.rows();
  RationalMatrix out(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    Vec e(n, Rational(0));
    e[j] = 1;
    auto x = solve(m, e);
    if (!x) return std::nullopt;
    for (std::size_t i = 0; i < n; ++i) out.at(i, j) = (*x)[i];
  }
  return out;
}

Vec QuotientSpace::class_coords(const Vec& cocycle) const {
  RationalMatrix lhs =
      RationalMatrix::hconcat(reps.as_columns(), boundaries.as_columns());
  auto x = solve(lhs, cocycle);
  if (!x) throw NotASubspace("vector is not a cocycle of this quotient");
  return Vec(x->begin(), x->begin() + static_cast<std::ptrdiff_t>(reps.dim()));
}

QuotientSpace QuotientSpace::of(SubspaceBasis cocycles, SubspaceBasis boundaries) {
  QuotientSpace q;
  q.reps = quotient_representatives(cocycles, boundaries);
  q.cocycles = std::move(cocycles);
  q.boundaries = std::move(boundaries);
  return q;
}

}  // namespace leflab
