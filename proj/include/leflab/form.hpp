#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "leflab/linalg.hpp"
#include "leflab/rational.hpp"

namespace leflab {

/// Bit i-1 set means index i is in the monomial, indices 1..2n.
using MonomialMask = std::uint32_t;

/// Element of the exterior algebra over a fixed 2n-dimensional space: a finite
/// rational combination of strictly increasing exterior monomials. Zero
/// coefficients are never stored.
class Form {
 public:
  explicit Form(int n) : half_dim_(n) {}
  static Form zero(int n) { return Form(n); }
  static Form scalar(int n, const Rational& c);
  static Form monomial(int n, MonomialMask mask, const Rational& c = Rational(1));
  /// e^index, 1-based.
  static Form basis_one_form(int n, int index);

  int n() const { return half_dim_; }
  int dim() const { return 2 * half_dim_; }
  bool is_zero() const { return terms_.empty(); }

  const std::map<MonomialMask, Rational>& terms() const { return terms_; }
  Rational coefficient(MonomialMask mask) const;

  /// Degree-k part.
  Form component(int k) const;
  bool is_homogeneous() const;
  /// Degree of a homogeneous form (0 for the zero form); nullopt when mixed.
  std::optional<int> homogeneous_degree() const;
  std::vector<int> degrees_present() const;

  void add_term(MonomialMask mask, const Rational& c);

  Form& operator+=(const Form& rhs);
  Form& operator-=(const Form& rhs);
  Form operator+(const Form& rhs) const;
  Form operator-(const Form& rhs) const;
  Form operator-() const;
  Form operator*(const Rational& c) const;
  bool operator==(const Form& rhs) const = default;

  std::string to_string() const;

 private:
  int half_dim_;
  std::map<MonomialMask, Rational> terms_;
};

/// Sign of e^I wedge e^J as +-1, or 0 when the index sets overlap.
int wedge_sign(MonomialMask lhs, MonomialMask rhs);

Form wedge(const Form& a, const Form& b);

/// Interior product with the basis vector e_index (1-based): removes the index
/// with the usual Koszul sign.
Form interior(int index, const Form& a);

/// Antisymmetric rational bivector pi^{ij}; for a symplectic model this is the
/// exact inverse of the matrix of omega.
struct Bivector {
  int n = 0;
  RationalMatrix coeffs;  // 2n x 2n
};

/// Lambda a := (1/2) sum_{i,j} pi^{ij} i_{e_i} i_{e_j} a. Lowers degree by 2.
Form contract(const Bivector& pi, const Form& a);

/// Coefficient of e^{1...2n} (unit covolume). Throws WrongDegree if the form
/// has a nonzero component below top degree.
Rational integrate(const Form& a);

/// Lexicographically ordered monomial basis of degree-k forms.
const std::vector<MonomialMask>& degree_basis(int n, int k);

std::size_t degree_dim(int n, int k);

/// Coordinates of a homogeneous degree-k form in the lexicographic basis.
Vec form_to_coords(const Form& a, int k);

Form coords_to_form(int n, int k, const Vec& coords);

std::string mask_to_string(MonomialMask mask);

}  // namespace leflab
