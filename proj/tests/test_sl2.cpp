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

TEST_CASE("H eigenvalues and the commutator on constants") {
  Sl2Ops ops(builtin("t4"));
  CHECK(ops.H(ops.model().omega).is_zero());  // (n-2) omega with n = 2
  Form one = Form::scalar(2, 1);
  CHECK(ops.lambda(ops.L(one)) - ops.L(ops.lambda(one)) == ops.H(one));
  CHECK(ops.H(one) == Form::scalar(2, 2));
}

TEST_CASE("L on a one-form of the standard model") {
  Sl2Ops ops(builtin("t4"));
  CHECK(ops.L(e(2, {1})) == e(2, {1, 3, 4}));
}

TEST_CASE("Lefschetz decomposition of omega and of e12 on t4") {
  Sl2Ops ops(builtin("t4"));
  LefschetzComponents lc = ops.lefschetz_decompose(ops.model().omega);
  REQUIRE(lc.components.count(1) == 1);
  CHECK(lc.components.at(1) == Form::scalar(2, 1));
  CHECK(lc.components.count(0) == 0);  // B_2 = 0

  LefschetzComponents ld = ops.lefschetz_decompose(e(2, {1, 2}));
  REQUIRE(ld.components.count(0) == 1);
  REQUIRE(ld.components.count(1) == 1);
  CHECK(ld.components.at(1) == Form::scalar(2, Rational(1, 2)));
  CHECK(ld.components.at(0) == (e(2, {1, 2}) - e(2, {3, 4})) * Rational(1, 2));

  Form primitive = e(2, {1, 2}) - e(2, {3, 4});
  LefschetzComponents le = ops.lefschetz_decompose(primitive);
  REQUIRE(le.components.size() == 1);
  CHECK(le.components.at(0) == primitive);
}

TEST_CASE("primitivity and filtered tests") {
  Sl2Ops ops(builtin("t4"));
  CHECK(ops.is_primitive(e(2, {1})));
  CHECK(!ops.is_primitive(ops.model().omega));
  CHECK(ops.is_p_filtered(ops.model().omega, 1));
  CHECK(ops.is_primitive(e(2, {1, 2}) - e(2, {3, 4})));
  CHECK_THROWS_AS(ops.is_primitive(e(2, {1, 2, 3})), DegreeOutOfRange);
  CHECK_THROWS_AS(ops.is_p_filtered(e(2, {1, 2, 3, 4}), 1), DegreeOutOfRange);
}

TEST_CASE("reflection operator") {
  Sl2Ops ops(builtin("t4"));
  CHECK(ops.star_r(Form::scalar(2, 1)) == e(2, {1, 2, 3, 4}) * Rational(2));  // omega^2
  Form primitive = e(2, {1, 2}) - e(2, {3, 4});
  CHECK(ops.star_r(primitive) == primitive);  // L^{n-s} B = L^0 B at s = n
  CHECK(ops.star_r(e(2, {1})) == ops.L(e(2, {1})));
  FormGen gen(23);
  for (int t = 0; t < 50; ++t) {
    Form a = gen.mixed(2);
    CHECK(ops.star_r(ops.star_r(a)) == a);
  }
}

TEST_CASE("l_inverse and pi_p against the frozen decomposition of e12") {
  Sl2Ops ops(builtin("t4"));
  CHECK(ops.l_inverse(e(2, {1, 2}), 1) == Form::scalar(2, Rational(1, 2)));
  CHECK(ops.pi_p(e(2, {1, 2}), 0) == (e(2, {1, 2}) - e(2, {3, 4})) * Rational(1, 2));
  Form primitive = e(2, {1}) * Rational(3);
  CHECK(ops.l_inverse(primitive, 1).is_zero());
  CHECK(ops.pi_p(ops.model().omega, 1) == ops.model().omega);
}

TEST_CASE("projection identity, star as L power, and round-trips on random forms") {
  for (std::string name : {"t4", "kodaira_thurston", "t6", "nil6b"}) {
    Sl2Ops ops(builtin(name));
    FormGen gen(31);
    VerdictTable t = operator_law_suite(ops, gen, 40);
    for (const VerdictRow& row : t.rows) {
      INFO(name << ": " << row.name << " " << row.detail);
      CHECK(row.pass);
    }
  }
}

TEST_CASE("sl2 commutation relations on every catalog model") {
  for (const std::string& name : builtin_names()) {
    Sl2Ops ops(builtin(name));
    FormGen gen(37);
    VerdictTable t = sl2_relation_suite(ops, gen, 30);
    for (const VerdictRow& row : t.rows) {
      INFO(name << ": " << row.name);
      CHECK(row.pass);
    }
  }
}

TEST_CASE("del_plus_minus on the torus and on KT") {
  Sl2Ops torus(builtin("t4"));
  auto [plus0, minus0] = torus.del_plus_minus(e(2, {1}));
  CHECK(plus0.is_zero());
  CHECK(minus0.is_zero());

  Sl2Ops kt(builtin("kodaira_thurston"));
  // d e4 = e12, which is primitive for omega = e14 + e23
  auto [plus, minus] = kt.del_plus_minus(e(2, {4}));
  CHECK(plus == e(2, {1, 2}));
  CHECK(minus.is_zero());

  CHECK_THROWS_AS(kt.del_plus_minus(kt.model().omega), NotPrimitive);

  // reconstruction d b = plus + L minus for random primitives in every model
  for (const std::string& name : builtin_names()) {
    Sl2Ops ops(builtin(name));
    FormGen gen(41);
    for (int t = 0; t < 15; ++t) {
      for (int s = 0; s <= ops.n(); ++s) {
        Form b = gen.primitive(ops, s);
        auto [p, m] = ops.del_plus_minus(b);
        CHECK(ops.d(b) == p + ops.L(m));
        CHECK(ops.is_primitive(p));
        CHECK(ops.is_primitive(m));
      }
    }
  }
}

TEST_CASE("operator dispatch by name") {
  Sl2Ops ops(builtin("t4"));
  Form a = e(2, {1, 3}) - e(2, {2, 4}) * Rational(3);
  CHECK(ops.apply(Sl2Which::L, a) == ops.L(a));
  CHECK(ops.apply(Sl2Which::Lambda, a) == ops.lambda(a));
  CHECK(ops.apply(Sl2Which::H, a) == ops.H(a));
}

TEST_CASE("decomposition components are primitive and reconstruct exactly") {
  for (const std::string& name : builtin_names()) {
    Sl2Ops ops(builtin(name));
    FormGen gen(43);
    for (int t = 0; t < 10; ++t) {
      for (int k = 0; k <= 2 * ops.n(); ++k) {
        Form a = gen.homogeneous(ops.n(), k);
        LefschetzComponents lc = ops.lefschetz_decompose(a);
        Form rebuilt(ops.n());
        for (const auto& [l, b] : lc.components) {
          CHECK(ops.is_primitive(b));
          CHECK(!b.is_zero());
          rebuilt += ops.L_pow(b, l);
        }
        CHECK(rebuilt == a);
      }
    }
  }
}

TEST_CASE("primitive subspace dimensions") {
  Sl2Ops t4(builtin("t4"));
  CHECK(t4.primitive_basis(0).dim() == 1);
  CHECK(t4.primitive_basis(1).dim() == 4);
  CHECK(t4.primitive_basis(2).dim() == 5);
  Sl2Ops t6(builtin("t6"));
  CHECK(t6.primitive_basis(2).dim() == 14);
  CHECK(t6.primitive_basis(3).dim() == 14);
}

TEST_CASE("filtered bases have the expected dimensions on t4") {
  Sl2Ops ops(builtin("t4"));
  // p = 1: F^1 Omega^k dims 1,4,6,4 for k = 0..3
  CHECK(ops.filtered_basis(0, 1).dim() == 1);
  CHECK(ops.filtered_basis(1, 1).dim() == 4);
  CHECK(ops.filtered_basis(2, 1).dim() == 6);
  CHECK(ops.filtered_basis(3, 1).dim() == 4);
  // p = 0: primitive subspaces
  CHECK(ops.filtered_basis(2, 0).dim() == 5);
}

TEST_CASE("mutated conventions break the calibration laws") {
  SymplecticModel t4 = builtin("t4");
  Bivector pi = poisson_bivector(t4);

  Bivector flipped = pi;
  for (std::size_t i = 0; i < flipped.coeffs.rows(); ++i)
    for (std::size_t j = 0; j < flipped.coeffs.cols(); ++j)
      flipped.coeffs.at(i, j) = -flipped.coeffs.at(i, j);
  CHECK(!check_sl2_calibration(t4, flipped).pass);

  Bivector doubled = pi;  // dropping the 1/2 normalization scales Lambda by 2
  for (std::size_t i = 0; i < doubled.coeffs.rows(); ++i)
    for (std::size_t j = 0; j < doubled.coeffs.cols(); ++j)
      doubled.coeffs.at(i, j) = doubled.coeffs.at(i, j) * 2;
  CHECK(!check_sl2_calibration(t4, doubled).pass);

  CHECK(check_sl2_calibration(t4, pi).pass);
}
