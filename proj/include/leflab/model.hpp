#pragma once

#include <map>
#include <string>
#include <vector>

#include "leflab/form.hpp"
#include "leflab/linalg.hpp"

namespace leflab {

/// A Lie-algebra model with an invariant symplectic form: structure constants
/// give the differential on generators, omega is a closed nondegenerate
/// 2-form. All computations happen in the finite-dimensional complex of
/// invariant forms.
struct SymplecticModel {
  std::string name;
  int n = 0;  // half-dimension; ambient dimension is 2n
  std::map<int, Form> structure;  // i -> d e^i, only nonzero entries, 1-based
  Form omega{0};

  int dim() const { return 2 * n; }
};

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string witness;  // empty when passing
};

struct ValidationReport {
  std::vector<CheckResult> checks;
  bool all_pass() const;
};

/// Parses the model file format (JSON). The result is not yet validated.
SymplecticModel parse_model(const std::string& text);

/// Checks d^2 = 0 on generators, d omega = 0, omega^n != 0, and the sl2
/// calibration [Lambda,L] = H, [H,L] = -2L, [H,Lambda] = 2Lambda on the full
/// monomial basis. Failures are verdicts, not exceptions.
ValidationReport validate(const SymplecticModel& m);

/// The unique degree +1 anti-derivation with d e^i = structure[i].
Form ce_differential(const SymplecticModel& m, const Form& a);

/// Exact inverse of the matrix of omega. Throws Error if omega is degenerate.
Bivector poisson_bivector(const SymplecticModel& m);

/// sl2 calibration on the full monomial basis with an explicitly supplied
/// bivector; validate() calls this with the true inverse. Exposed so mutated
/// conventions can be shown to fail.
CheckResult check_sl2_calibration(const SymplecticModel& m, const Bivector& pi);

/// Validated catalog model by name. Throws UnknownModel.
SymplecticModel builtin(const std::string& name);
std::vector<std::string> builtin_names();

/// De Rham data of the model: exact Betti numbers plus representative bases.
struct DeRhamSummary {
  std::vector<std::size_t> betti;      // degree 0..2n
  std::vector<QuotientSpace> spaces;   // per degree, ambient = monomial coords
};

DeRhamSummary derham(const SymplecticModel& m);

/// Matrix of d: Omega^k -> Omega^{k+1} in the lexicographic monomial bases.
RationalMatrix d_matrix(const SymplecticModel& m, int k);

}  // namespace leflab
