#pragma once

#include <map>
#include <utility>
#include <vector>

#include "leflab/form.hpp"
#include "leflab/model.hpp"

namespace leflab {

/// Lefschetz decomposition of a homogeneous degree-k form:
/// A_k = sum_l L^l B_{k-2l} with every B primitive. Zero components omitted.
struct LefschetzComponents {
  int degree = 0;
  std::map<int, Form> components;  // l -> B_{k-2l}
};

enum class Sl2Which { L, Lambda, H };

/// Operator calculus of a symplectic model: L, Lambda, H, the Lefschetz
/// decomposition, primitivity tests, the reflection *_r, L^{-p}, Pi^p and the
/// primitive derivative pair. Primitive subspace bases and the per-degree
/// decomposition inverses are built once at construction; afterwards the
/// object is immutable and safe to share.
class Sl2Ops {
 public:
  explicit Sl2Ops(const SymplecticModel& model);
  /// Same machinery with an explicitly supplied bivector standing in for the
  /// inverse of omega. The decomposition caches still assume the sl2 relations
  /// hold; a broken convention fails loudly in the constructor.
  Sl2Ops(const SymplecticModel& model, Bivector pi);

  const SymplecticModel& model() const { return model_; }
  const Bivector& pi() const { return pi_; }
  int n() const { return model_.n; }

  Form L(const Form& a) const;
  Form lambda(const Form& a) const;
  Form H(const Form& a) const;
  Form apply(Sl2Which which, const Form& a) const;
  Form d(const Form& a) const;
  /// L^j for j >= 0.
  Form L_pow(const Form& a, int j) const;

  /// Basis of P^s = ker(Lambda) within Omega^s, s = 0..n.
  const SubspaceBasis& primitive_basis(int s) const;

  LefschetzComponents lefschetz_decompose(const Form& a) const;
  Form reconstruct(const LefschetzComponents& lc) const;

  /// Condition (i) Lambda B = 0; (ii) L^{n-k+1} B = 0 is evaluated
  /// independently and must agree. Throws DegreeOutOfRange for k > n.
  bool is_primitive(const Form& a) const;
  /// Same with Lambda^{p+1} and L^{n-k+1+p}; k <= n+p required.
  bool is_p_filtered(const Form& a, int p) const;

  /// Reflection: L^r B_s -> L^{n-r-s} B_s on Lefschetz components;
  /// mixed-degree input handled componentwise.
  Form star_r(const Form& a) const;
  /// Strips p powers of L; components with l < p are dropped.
  Form l_inverse(const Form& a, int p) const;
  /// Truncates the decomposition to components with l <= p.
  Form pi_p(const Form& a, int p) const;

  /// d B = plus + L * minus for primitive B, with plus and minus primitive.
  /// Components of dB with l >= 2 vanishing is an internal consistency check.
  std::pair<Form, Form> del_plus_minus(const Form& primitive_b) const;

  /// Deterministic basis of the p-filtered subspace of Omega^k, as coordinate
  /// vectors: the vectors L^l B over l <= p and B running through the
  /// primitive bases.
  SubspaceBasis filtered_basis(int k, int p) const;

 private:
  struct DegreeCache {
    std::vector<std::pair<int, int>> slots;  // (l, index within P^{k-2l})
    RationalMatrix inverse;                  // of the assembled sum-of-L^l map
  };

  void build_caches();
  const DegreeCache& degree_cache(int k) const;

  SymplecticModel model_;
  Bivector pi_;
  std::vector<SubspaceBasis> primitive_;  // index s = 0..n
  std::vector<DegreeCache> by_degree_;    // index k = 0..2n
};

}  // namespace leflab
