// Acceptance suite: one line per criterion, zero tolerance everywhere
// (exact rational arithmetic; a criterion passes only with exact equality).

#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

#include "leflab/errors.hpp"
#include "leflab/laws.hpp"
#include "leflab/report.hpp"
#include "leflab/tables.hpp"
#include "oracle.hpp"

using namespace leflab;

namespace {

struct Criterion {
  explicit Criterion(std::string title) : title(std::move(title)) {}
  std::string title;
  bool pass = true;
  std::string detail;
};

std::vector<std::string> catalog() {
  return {"t2", "t4", "t6", "kodaira_thurston", "nil6a", "nil6b"};
}

void note_failure(Criterion& c, const std::string& what) {
  c.pass = false;
  if (c.detail.empty()) c.detail = what;
}

void absorb(Criterion& c, const std::string& model, const VerdictTable& t) {
  for (const VerdictRow& row : t.rows) {
    if (!row.pass) note_failure(c, model + ": " + row.name + " " + row.detail);
  }
}

Criterion criterion_1_operator_laws() {
  Criterion c{"operator-law suite (sl2 relations, projection identity, *_r laws, round-trip)"};
  for (const std::string& name : catalog()) {
    Sl2Ops ops(builtin(name));
    FormGen gen(1001);
    absorb(c, name, sl2_relation_suite(ops, gen, 200));
    absorb(c, name, operator_law_suite(ops, gen, 200));
  }
  return c;
}

Criterion criterion_2_complexes() {
  Criterion c{"filtered complexes: d_{k+1} d_k = 0 and dim reflection, all p"};
  for (const std::string& name : catalog()) {
    SymplecticModel m = builtin(name);
    Sl2Ops ops(m);
    for (int p = 0; p <= m.n; ++p) {
      try {
        FilteredComplex fx = build_filtered_complex(ops, p);
        for (int k = 0; k + 2 < fx.length(); ++k) {
          if (!(fx.differentials[k + 1] * fx.differentials[k]).is_zero()) {
            note_failure(c, name + " p=" + std::to_string(p) + " d d != 0 at k=" +
                                std::to_string(k));
          }
        }
        for (int k = 0; k < fx.length(); ++k) {
          if (fx.spaces[k].dim() != fx.spaces[fx.length() - 1 - k].dim()) {
            note_failure(c, name + " p=" + std::to_string(p) + " reflection at k=" +
                                std::to_string(k));
          }
        }
      } catch (const Error& e) {
        note_failure(c, name + " p=" + std::to_string(p) + ": " + e.what());
      }
    }
  }
  return c;
}

Criterion criterion_3_duality() {
  Criterion c{"filtered duality: palindromic F^pH dims and nondegenerate g_p, all p"};
  for (const std::string& name : catalog()) {
    SymplecticModel m = builtin(name);
    Sl2Ops ops(m);
    for (int p = 0; p <= m.n; ++p) {
      FilteredCohomology fc = filtered_cohomology(ops, p);
      const int top = 2 * m.n + 2 * p + 1;
      for (int k = 0; k <= top; ++k) {
        if (fc.spaces[k].dimension() != fc.spaces[top - k].dimension()) {
          note_failure(c, name + " p=" + std::to_string(p) + " dims k=" + std::to_string(k));
        }
      }
      for (int k = 0; k <= m.n + p; ++k) {
        PairingReport g = g_pairing(ops, fc, k);
        if (!g.nondegenerate) {
          note_failure(c, name + " p=" + std::to_string(p) + " g_p degenerate at k=" +
                              std::to_string(k));
        }
      }
      if (name == "t4" && p == 0) {
        if (fc.dims() != std::vector<std::size_t>{1, 4, 5, 5, 4, 1}) {
          note_failure(c, "t4 p=0 dims differ from the frozen fixture");
        }
      }
    }
  }
  return c;
}

Criterion criterion_4_stokes() {
  Criterion c{"theta_p(d_{2n+2p} x) = 0, 100 random x per (model, p)"};
  for (const std::string& name : catalog()) {
    Sl2Ops ops(builtin(name));
    FormGen gen(1004);
    absorb(c, name, stokes_suite(ops, gen, 100));
  }
  return c;
}

Criterion criterion_5_resolution() {
  Criterion c{"resolution of L^{p+1}: both sequences exact, dims, all models/p/k"};
  for (const std::string& name : catalog()) {
    SymplecticModel m = builtin(name);
    Sl2Ops ops(m);
    DeRhamSummary dr = derham(m);
    for (int p = 0; p <= m.n; ++p) {
      FilteredCohomology fc = filtered_cohomology(ops, p);
      absorb(c, name + " p=" + std::to_string(p), resolution_check(ops, dr, fc, p));
    }
  }
  return c;
}

Criterion criterion_6_support() {
  Criterion c{"product support law: 500 seeded trials per model + exhaustive t4"};
  for (const std::string& name : catalog()) {
    Sl2Ops ops(builtin(name));
    absorb(c, name, product_support_test(ops, 1006, 500));
  }
  absorb(c, "t4", product_support_exhaustive(Sl2Ops(builtin("t4"))));
  return c;
}

Criterion criterion_7_section6() {
  Criterion c{"symplectic-theory suite: Lefschetz decomposition, D and swap, blocks, diagram"};
  for (const std::string& name : catalog()) {
    SymplecticModel m = builtin(name);
    Sl2Ops ops(m);
    SymplecticCohomologies sc = symplectic_cohomologies(ops);
    absorb(c, name, lefschetz_decomp_check(ops, sc));
    for (int k = 0; k <= 2 * m.n; ++k) {
      if (!dd_pairing(ops, sc, k).nondegenerate) {
        note_failure(c, name + " D degenerate at k=" + std::to_string(k));
      }
      if (!dd_pairing_swapped(ops, sc, k).nondegenerate) {
        note_failure(c, name + " swapped D degenerate at k=" + std::to_string(k));
      }
      absorb(c, name, dd_pairing_well_defined(ops, sc, k));
      BlockDecomposition bd = d_block_decomposition(ops, sc, k);
      if (!bd.cross_blocks_zero) {
        note_failure(c, name + " cross block nonzero at k=" + std::to_string(k));
      }
      if (!bd.all_blocks_nondegenerate) {
        note_failure(c, name + " D_r degenerate at k=" + std::to_string(k));
      }
      for (int r = std::max(0, k - m.n); 2 * r <= k; ++r) {
        const int p_prime = m.n - k + 2 * r;
        if (p_prime < 0 || p_prime > m.n) continue;
        absorb(c, name + " k=" + std::to_string(k) + " r=" + std::to_string(r),
               diagram_check(ops, sc, k, r));
      }
    }
  }
  return c;
}

Criterion criterion_8_derham_anchors() {
  Criterion c{"de Rham anchors: t4 and KT Betti, strong Lefschetz witnesses"};
  if (derham(builtin("t4")).betti != std::vector<std::size_t>{1, 4, 6, 4, 1}) {
    note_failure(c, "t4 betti");
  }
  if (derham(builtin("kodaira_thurston")).betti != std::vector<std::size_t>{1, 3, 4, 3, 1}) {
    note_failure(c, "kodaira_thurston betti");
  }
  for (std::string name : {"t2", "t4", "t6"}) {
    Sl2Ops ops(builtin(name));
    if (!strong_lefschetz(ops, derham(ops.model())).holds) {
      note_failure(c, name + " should satisfy strong Lefschetz");
    }
  }
  Sl2Ops kt(builtin("kodaira_thurston"));
  DeRhamSummary dr = derham(kt.model());
  StrongLefschetzResult res = strong_lefschetz(kt, dr);
  if (res.holds || res.failing_degree != 1) {
    note_failure(c, "KT strong Lefschetz should fail at k=1");
  } else {
    // the witness class [e1]: nonzero in H^1 and killed by L
    Vec cls = dr.spaces[1].class_coords(form_to_coords(Form::basis_one_form(2, 1), 1));
    bool nonzero = false;
    for (const Rational& x : cls) nonzero = nonzero || x != 0;
    Vec image = lefschetz_map_on_derham(kt, dr, 1, 1).apply(cls);
    bool killed = true;
    for (const Rational& x : image) killed = killed && x == 0;
    if (!nonzero || !killed) note_failure(c, "[e1] is not a kernel witness");
  }
  return c;
}

Criterion criterion_9_fixture_regression() {
  Criterion c{"oracle-frozen dimension fixtures byte-match recomputation"};
  const std::string dir = std::string(LEFLAB_FIXTURE_DIR) + "/tables/";
  for (std::string name : {"kodaira_thurston", "nil6a", "nil6b"}) {
    std::ifstream in(dir + name + ".json");
    if (!in) {
      note_failure(c, "missing fixture " + name + ".json");
      continue;
    }
    std::stringstream buf;
    buf << in.rdbuf();
    SymplecticModel m = builtin(name);
    if (dump_tables(dimension_tables(m)) != buf.str()) {
      note_failure(c, name + " tables differ from the frozen fixture");
    }
    // live cross-check of the dimension entries against the oracle route
    nlohmann::json main_tables = dimension_tables(m);
    nlohmann::json oracle_tables = oracle::tables(m);
    for (const char* key : {"betti", "filtered", "h_d_plus_dlambda", "h_ddlambda",
                            "ph_d_plus_dlambda", "ph_ddlambda"}) {
      if (main_tables[key] != oracle_tables[key]) {
        note_failure(c, name + " oracle disagrees on " + key);
      }
    }
  }
  return c;
}

Criterion criterion_10_mutation() {
  Criterion c{"mutation sanity: sign-flipped or unnormalized Lambda fails suite 1"};
  for (const std::string& name : catalog()) {
    SymplecticModel m = builtin(name);
    Bivector pi = poisson_bivector(m);

    Bivector flipped = pi;
    for (std::size_t i = 0; i < flipped.coeffs.rows(); ++i)
      for (std::size_t j = 0; j < flipped.coeffs.cols(); ++j)
        flipped.coeffs.at(i, j) = -flipped.coeffs.at(i, j);

    Bivector doubled = pi;
    for (std::size_t i = 0; i < doubled.coeffs.rows(); ++i)
      for (std::size_t j = 0; j < doubled.coeffs.cols(); ++j)
        doubled.coeffs.at(i, j) = doubled.coeffs.at(i, j) * 2;

    for (const Bivector* mutant : {&flipped, &doubled}) {
      if (check_sl2_calibration(m, *mutant).pass) {
        note_failure(c, name + ": calibration accepted a mutated Lambda");
      }
      bool detected = false;
      try {
        Sl2Ops mutated(m, *mutant);
        FormGen gen(1010);
        detected = !sl2_relation_suite(mutated, gen, 10).all_pass();
      } catch (const std::exception&) {
        detected = true;  // the decomposition caches may refuse to build
      }
      if (!detected) note_failure(c, name + ": law suite passed under mutation");
    }
    if (!check_sl2_calibration(m, pi).pass) {
      note_failure(c, name + ": true bivector failed calibration");
    }
  }
  return c;
}

}  // namespace

int main() {
  std::vector<Criterion> results;
  results.push_back(criterion_1_operator_laws());
  results.push_back(criterion_2_complexes());
  results.push_back(criterion_3_duality());
  results.push_back(criterion_4_stokes());
  results.push_back(criterion_5_resolution());
  results.push_back(criterion_6_support());
  results.push_back(criterion_7_section6());
  results.push_back(criterion_8_derham_anchors());
  results.push_back(criterion_9_fixture_regression());
  results.push_back(criterion_10_mutation());

  bool all = true;
  for (std::size_t i = 0; i < results.size(); ++i) {
    const Criterion& c = results[i];
    std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << (i + 1) << ". " << c.title;
    if (!c.pass) std::cout << "  <- " << c.detail;
    std::cout << "\n";
    all = all && c.pass;
  }
  std::cout << (all ? "acceptance: all criteria pass\n" : "acceptance: FAILURES above\n");
  return all ? 0 : 1;
}
