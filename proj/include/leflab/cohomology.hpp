#pragma once

#include <string>
#include <vector>

#include "leflab/sl2.hpp"

namespace leflab {

/// One graded piece of a cohomology theory. Numerator, denominator and
/// representatives all live in the lexicographic monomial coordinates of the
/// ambient form space.
struct CohomologySpace {
  int degree = 0;          // complex degree, or form degree for Omega-graded theories
  int form_degree = 0;     // degree of the underlying forms
  std::string ambient;     // human-readable description
  QuotientSpace space;

  std::size_t dimension() const { return space.dim(); }
  Form rep_form(int n, std::size_t i) const;
  /// Class coordinates of a cocycle given as a form.
  Vec class_coords(const Form& cocycle) const;
};

struct VerdictRow {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerdictTable {
  std::vector<VerdictRow> rows;
  bool all_pass() const;
  void add(std::string name, bool pass, std::string detail = "");
};

/// The p-filtered complex: spaces F_p^k for k = 0..2n+2p+1 and the
/// differentials between them, as exact matrices in the chosen space bases.
struct FilteredComplex {
  int n = 0;
  int p = 0;
  std::vector<SubspaceBasis> spaces;          // index k, ambient = C(2n, fdeg(k))
  std::vector<RationalMatrix> differentials;  // d_k in space coordinates, k = 0..2n+2p

  int length() const { return static_cast<int>(spaces.size()); }
  int fdeg(int k) const { return k <= n + p ? k : 2 * n + 2 * p + 1 - k; }
};

/// Builds spaces and differentials and verifies d_{k+1} d_k = 0 plus the
/// reflection symmetry of the space dimensions. Throws
/// ComplexPropertyViolation / NotFiltered when the operator conventions fail
/// to close, which would be a release-blocking bug.
FilteredComplex build_filtered_complex(const Sl2Ops& ops, int p);

/// Applies the complex-degree-k differential of the p-filtered complex to a
/// form (used for chain-level tests; the complex stores the same maps as
/// matrices).
Form filtered_differential(const Sl2Ops& ops, int p, int k, const Form& a);

std::vector<CohomologySpace> complex_cohomology(const Sl2Ops& ops, const FilteredComplex& c);

/// Filtered cohomology with its complex kept around for chain-level work.
struct FilteredCohomology {
  FilteredComplex complex;
  std::vector<CohomologySpace> spaces;
  std::vector<std::size_t> dims() const;
};

FilteredCohomology filtered_cohomology(const Sl2Ops& ops, int p);

/// d^Lambda := d Lambda - Lambda d. Lowers degree by one, squares to zero.
Form d_lambda(const Sl2Ops& ops, const Form& a);

/// Matrices of d, d^Lambda and d d^Lambda on monomial bases.
RationalMatrix d_lambda_matrix(const Sl2Ops& ops, int k);
RationalMatrix dd_lambda_matrix(const Sl2Ops& ops, int k);

std::vector<CohomologySpace> h_d_plus_dlambda(const Sl2Ops& ops);
std::vector<CohomologySpace> h_ddlambda(const Sl2Ops& ops);

struct PrimitiveCohomologies {
  std::vector<CohomologySpace> d_plus_dlambda;  // k = 0..n
  std::vector<CohomologySpace> ddlambda;        // k = 0..n
};

PrimitiveCohomologies primitive_cohomologies(const Sl2Ops& ops);

/// The (d+dL)- and ddL-theories with their primitive variants.
struct SymplecticCohomologies {
  std::vector<CohomologySpace> d_plus_dlambda;
  std::vector<CohomologySpace> ddlambda;
  PrimitiveCohomologies primitive;
};

SymplecticCohomologies symplectic_cohomologies(const Sl2Ops& ops);

/// Dimension identity dim H^k = sum_r dim PH^{k-2r} for both theories, plus
/// bijectivity of the assembled map (+)_r L^r between the quotients.
VerdictTable lefschetz_decomp_check(const Sl2Ops& ops);
VerdictTable lefschetz_decomp_check(const Sl2Ops& ops, const SymplecticCohomologies& sc);

/// Matrix of the induced map L^j: H^k -> H^{k+2j} on de Rham cohomology.
RationalMatrix lefschetz_map_on_derham(const Sl2Ops& ops, const DeRhamSummary& dr, int j, int k);

struct StrongLefschetzResult {
  bool holds = true;
  int failing_degree = -1;
  Form witness{0};  // nonzero class in ker(L^{n-k}) when failing
};

StrongLefschetzResult strong_lefschetz(const Sl2Ops& ops, const DeRhamSummary& dr);

/// Both short exact sequences resolving L^{p+1} through the filtered
/// cohomology, verified as matrix statements for every k, plus the dimension
/// identity they imply.
VerdictTable resolution_check(const Sl2Ops& ops, int p);
VerdictTable resolution_check(const Sl2Ops& ops, const DeRhamSummary& dr,
                              const FilteredCohomology& fc, int p);

}  // namespace leflab
