#pragma once

#include <cstdint>
#include <random>

#include "leflab/duality.hpp"

namespace leflab {

/// Seeded generators for random exact-rational test data.
class FormGen {
 public:
  explicit FormGen(std::uint64_t seed) : rng_(seed) {}

  Rational rational();
  Form homogeneous(int n, int k);
  Form mixed(int n);
  Form primitive(const Sl2Ops& ops, int s);
  Form filtered(const Sl2Ops& ops, int k, int p);
  RationalMatrix matrix(std::size_t rows, std::size_t cols);

  std::mt19937_64& rng() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

/// Randomized property suites. Each verdict carries a witness on failure.
VerdictTable linalg_law_suite(FormGen& gen, int trials);
VerdictTable exterior_law_suite(const Sl2Ops& ops, FormGen& gen, int trials);
VerdictTable sl2_relation_suite(const Sl2Ops& ops, FormGen& gen, int trials);
VerdictTable operator_law_suite(const Sl2Ops& ops, FormGen& gen, int trials);
VerdictTable model_law_suite(const SymplecticModel& model, FormGen& gen, int trials);
VerdictTable complex_law_suite(const Sl2Ops& ops, FormGen& gen, int trials);
VerdictTable stokes_suite(const Sl2Ops& ops, FormGen& gen, int trials);

/// Everything above plus the support law and duality checks, with suite-name
/// prefixes. This is what the fuzz command runs.
VerdictTable run_all_laws(const Sl2Ops& ops, std::uint64_t seed, int trials);

}  // namespace leflab
