#include <catch2/catch_amalgamated.hpp>

#include "leflab/errors.hpp"
#include "leflab/laws.hpp"

using namespace leflab;

namespace {

Form e(int n, std::initializer_list<int> idx) {
  MonomialMask mask = 0;
  for (int i : idx) mask |= MonomialMask(1) << (i - 1);
  return Form::monomial(n, mask);
}

}  // namespace

TEST_CASE("theta on constants") {
  Sl2Ops ops(builtin("t4"));
  CHECK(theta(ops, 0, Form::scalar(2, 1)) == 2);  // integral of omega^2
  CHECK(theta(ops, 1, Form::scalar(2, Rational(1, 2))) == 1);
  CHECK(theta(ops, 0, Form(2)) == 0);
  CHECK_THROWS_AS(theta(ops, 0, e(2, {1})), WrongDegree);
}

TEST_CASE("theta kills the image of the last differential") {
  for (const std::string& name : builtin_names()) {
    Sl2Ops ops(builtin(name));
    FormGen gen(29);
    VerdictTable t = stokes_suite(ops, gen, 50);
    for (const VerdictRow& row : t.rows) {
      INFO(name << ": " << row.name << " " << row.detail);
      CHECK(row.pass);
    }
  }
}

TEST_CASE("g pairing on t4 at p=0") {
  Sl2Ops ops(builtin("t4"));
  FilteredCohomology fc = filtered_cohomology(ops, 0);
  PairingReport g0 = g_pairing(ops, fc, 0);
  REQUIRE(g0.matrix.rows() == 1);
  REQUIRE(g0.matrix.cols() == 1);
  CHECK(g0.matrix.at(0, 0) != 0);
  CHECK(g0.nondegenerate);

  std::vector<std::size_t> sizes;
  for (int k = 0; k <= 2; ++k) {
    PairingReport g = g_pairing(ops, fc, k);
    sizes.push_back(g.matrix.rows());
    CHECK(g.nondegenerate);
    CHECK(g.matrix.rows() == g.matrix.cols());
  }
  CHECK(sizes == std::vector<std::size_t>{1, 4, 5});
}

TEST_CASE("phi duality on catalog models across p") {
  for (std::string name : {"t4", "t6", "kodaira_thurston", "nil6b"}) {
    SymplecticModel m = builtin(name);
    Sl2Ops ops(m);
    for (int p = 0; p <= m.n; ++p) {
      FilteredCohomology fc = filtered_cohomology(ops, p);
      VerdictTable t = phi_duality_check(ops, fc, 101, 12);
      for (const VerdictRow& row : t.rows) {
        INFO(name << " p=" << p << ": " << row.name << " " << row.detail);
        CHECK(row.pass);
      }
    }
  }
}

TEST_CASE("product support law, hand case on t4") {
  Sl2Ops ops(builtin("t4"));
  // allowed support: s = s' = 1, r = 0, r' = 1 = n - r - s
  Form product = wedge(e(2, {1}), ops.L_pow(e(2, {2}), 1));
  CHECK(integrate(product) != 0);
  // forbidden support: s = 0, s' = 2 forces the product to vanish
  for (const Vec& v : ops.primitive_basis(2).vectors) {
    Form b2 = coords_to_form(2, 2, v);
    CHECK(ops.L(b2).is_zero());  // L^1 B_2 = 0 for primitive 2-forms at n = 2
  }
}

TEST_CASE("product support law, random and exhaustive") {
  for (const std::string& name : builtin_names()) {
    Sl2Ops ops(builtin(name));
    VerdictTable t = product_support_test(ops, 777, 200);
    for (const VerdictRow& row : t.rows) {
      INFO(name << ": " << row.name << " " << row.detail);
      CHECK(row.pass);
    }
  }
  Sl2Ops t4(builtin("t4"));
  VerdictTable ex = product_support_exhaustive(t4);
  for (const VerdictRow& row : ex.rows) {
    INFO(row.name << " " << row.detail);
    CHECK(row.pass);
  }
}

TEST_CASE("D pairing is the de Rham pairing on the torus and full rank on KT") {
  Sl2Ops t4(builtin("t4"));
  SymplecticCohomologies sc = symplectic_cohomologies(t4);
  for (int k = 0; k <= 4; ++k) {
    PairingReport d = dd_pairing(t4, sc, k);
    INFO("k=" << k);
    CHECK(d.nondegenerate);
    PairingReport s = dd_pairing_swapped(t4, sc, k);
    CHECK(s.nondegenerate);
  }

  Sl2Ops kt(builtin("kodaira_thurston"));
  SymplecticCohomologies ks = symplectic_cohomologies(kt);
  for (int k = 0; k <= 4; ++k) {
    INFO("KT k=" << k);
    CHECK(dd_pairing(kt, ks, k).nondegenerate);
    CHECK(dd_pairing_swapped(kt, ks, k).nondegenerate);
    VerdictTable wd = dd_pairing_well_defined(kt, ks, k);
    for (const VerdictRow& row : wd.rows) {
      INFO(row.name);
      CHECK(row.pass);
    }
  }
}

TEST_CASE("block decomposition of D on t4 at k=2") {
  Sl2Ops ops(builtin("t4"));
  SymplecticCohomologies sc = symplectic_cohomologies(ops);
  BlockDecomposition bd = d_block_decomposition(ops, sc, 2);
  CHECK(bd.cross_blocks_zero);
  CHECK(bd.all_blocks_nondegenerate);
  REQUIRE(bd.blocks.size() == 2);
  CHECK(bd.blocks[0].block.matrix.rows() == 5);  // r = 0
  CHECK(bd.blocks[1].block.matrix.rows() == 1);  // r = 1

  BlockDecomposition b0 = d_block_decomposition(ops, sc, 0);
  REQUIRE(b0.blocks.size() == 1);
  CHECK(b0.blocks[0].r == 0);
}

TEST_CASE("block decomposition and diagram on every catalog model") {
  for (const std::string& name : builtin_names()) {
    SymplecticModel m = builtin(name);
    Sl2Ops ops(m);
    SymplecticCohomologies sc = symplectic_cohomologies(ops);
    for (int k = 0; k <= 2 * m.n; ++k) {
      BlockDecomposition bd = d_block_decomposition(ops, sc, k);
      INFO(name << " k=" << k);
      CHECK(bd.cross_blocks_zero);
      CHECK(bd.all_blocks_nondegenerate);
      for (int r = std::max(0, k - m.n); 2 * r <= k; ++r) {
        const int p_prime = m.n - k + 2 * r;
        if (p_prime < 0 || p_prime > m.n) continue;
        VerdictTable t = diagram_check(ops, sc, k, r);
        for (const VerdictRow& row : t.rows) {
          INFO(name << " k=" << k << " r=" << r << ": " << row.name << " " << row.detail);
          CHECK(row.pass);
        }
      }
    }
  }
}

TEST_CASE("Frobenius sign report") {
  Sl2Ops ops(builtin("t4"));
  FilteredCohomology fc = filtered_cohomology(ops, 0);
  FrobeniusReport fr = frobenius_report(ops, fc);
  REQUIRE(fr.rows.size() == 3);
  CHECK(fr.all_consistent());
  CHECK(fr.rows[0].sign == 1);  // both 1x1 matrices equal the integral of omega^2

  Sl2Ops kt(builtin("kodaira_thurston"));
  for (int p = 0; p <= 2; ++p) {
    FilteredCohomology kfc = filtered_cohomology(kt, p);
    FrobeniusReport kfr = frobenius_report(kt, kfc);
    INFO("p=" << p);
    CHECK(kfr.all_consistent());
  }
}
