#include "leflab/laws.hpp"

#include "leflab/errors.hpp"

namespace leflab {

Rational FormGen::rational() {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 3);
  return Rational(num(rng_)) / Rational(den(rng_));
}

Form FormGen::homogeneous(int n, int k) {
  std::uniform_int_distribution<int> keep(0, 2);
  Form out(n);
  for (MonomialMask mask : degree_basis(n, k)) {
    if (keep(rng_) == 0) continue;
    out.add_term(mask, rational());
  }
  return out;
}

Form FormGen::mixed(int n) {
  std::uniform_int_distribution<int> keep(0, 1);
  Form out(n);
  for (int k = 0; k <= 2 * n; ++k) {
    if (keep(rng_) == 0) continue;
    out += homogeneous(n, k);
  }
  return out;
}

Form FormGen::primitive(const Sl2Ops& ops, int s) {
  const SubspaceBasis& basis = ops.primitive_basis(s);
  Vec v(basis.ambient_dim, Rational(0));
  std::uniform_int_distribution<int> coef(-9, 9);
  for (const Vec& b : basis.vectors) {
    int c = coef(rng_);
    if (c == 0) continue;
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += Rational(c) * b[i];
  }
  return coords_to_form(ops.n(), s, v);
}

Form FormGen::filtered(const Sl2Ops& ops, int k, int p) {
  SubspaceBasis basis = ops.filtered_basis(k, p);
  Vec v(basis.ambient_dim, Rational(0));
  std::uniform_int_distribution<int> coef(-9, 9);
  for (const Vec& b : basis.vectors) {
    int c = coef(rng_);
    if (c == 0) continue;
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += Rational(c) * b[i];
  }
  return coords_to_form(ops.n(), k, v);
}

RationalMatrix FormGen::matrix(std::size_t rows, std::size_t cols) {
  RationalMatrix m(rows, cols);
  std::uniform_int_distribution<int> entry(-9, 9);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = entry(rng_);
  return m;
}

VerdictTable linalg_law_suite(FormGen& gen, int trials) {
  VerdictTable table;
  bool transpose_ok = true, nullity_ok = true, agree_ok = true, quotient_ok = true;
  std::string witness;
  for (int t = 0; t < trials; ++t) {
    RationalMatrix m = gen.matrix(8, 8);
    std::size_t r = rank(m);
    if (r != rank(m.transposed())) transpose_ok = false;
    RankKernelImage rki = rank_kernel_image(m);
    if (rki.kernel.dim() + rki.rank != m.cols()) nullity_ok = false;
    if (r != rank_naive(m)) {
      agree_ok = false;
      witness = "fraction-free vs naive disagree";
    }
    // quotient then re-span
    SubspaceBasis space = SubspaceBasis::from_spanning(8, {m.column(0), m.column(1), m.column(2)});
    SubspaceBasis sub = SubspaceBasis::from_spanning(8, {m.column(0)});
    SubspaceBasis reps = quotient_representatives(space, sub);
    SubspaceBasis rejoined = subspace_sum(sub, SubspaceBasis{8, reps.vectors});
    if (rejoined.dim() != space.dim()) quotient_ok = false;
  }
  table.add("rank(m) = rank(m^T)", transpose_ok);
  table.add("dim kernel + rank = cols", nullity_ok);
  table.add("fraction-free and naive elimination agree", agree_ok, witness);
  table.add("quotient re-span recovers the space", quotient_ok);
  return table;
}

VerdictTable exterior_law_suite(const Sl2Ops& ops, FormGen& gen, int trials) {
  VerdictTable table;
  const int n = ops.n();
  bool assoc_ok = true, antider_ok = true, graded_ok = true, contract_ok = true;
  std::string witness;
  std::uniform_int_distribution<int> deg(0, 2 * n);
  std::uniform_int_distribution<int> idx(1, 2 * n);
  for (int t = 0; t < trials; ++t) {
    Form a = gen.mixed(n);
    Form b = gen.mixed(n);
    Form c = gen.mixed(n);
    if (wedge(wedge(a, b), c) != wedge(a, wedge(b, c))) {
      assoc_ok = false;
      witness = "assoc: " + a.to_string();
    }
    int ka = deg(gen.rng()), kb = deg(gen.rng());
    Form ha = gen.homogeneous(n, ka);
    Form hb = gen.homogeneous(n, kb);
    Form lhs = wedge(ha, hb);
    Form rhs = wedge(hb, ha) * Rational((ka * kb) % 2 == 0 ? 1 : -1);
    if (lhs != rhs) graded_ok = false;
    int v = idx(gen.rng());
    Form left = interior(v, wedge(ha, hb));
    Form right = wedge(interior(v, ha), hb) +
                 wedge(ha, interior(v, hb)) * Rational(ka % 2 == 0 ? 1 : -1);
    if (left != right) antider_ok = false;
    Form la = contract(ops.pi(), ha);
    if (!la.is_zero()) {
      auto d = la.homogeneous_degree();
      if (!d || *d != ka - 2) contract_ok = false;
    }
    Form sum = contract(ops.pi(), ha + hb * Rational(3));
    if (sum != contract(ops.pi(), ha) + contract(ops.pi(), hb) * Rational(3)) contract_ok = false;
  }
  table.add("wedge associativity", assoc_ok, witness);
  table.add("graded commutativity", graded_ok);
  table.add("interior product anti-derivation", antider_ok);
  table.add("contraction lowers degree by 2 and is linear", contract_ok);
  return table;
}

VerdictTable sl2_relation_suite(const Sl2Ops& ops, FormGen& gen, int trials) {
  VerdictTable table;
  const int n = ops.n();
  bool rel1 = true, rel2 = true, rel3 = true, eigen = true;
  std::string witness;
  for (int t = 0; t < trials; ++t) {
    Form a = gen.mixed(n);
    if (ops.H(ops.lambda(a)) - ops.lambda(ops.H(a)) != ops.lambda(a) * Rational(2)) {
      rel1 = false;
      witness = a.to_string();
    }
    if (ops.H(ops.L(a)) - ops.L(ops.H(a)) != ops.L(a) * Rational(-2)) rel2 = false;
    if (ops.lambda(ops.L(a)) - ops.L(ops.lambda(a)) != ops.H(a)) rel3 = false;
    for (int k = 0; k <= 2 * n; ++k) {
      Form h = gen.homogeneous(n, k);
      if (ops.H(h) != h * Rational(n - k)) eigen = false;
    }
  }
  table.add("[H,Lambda] = 2 Lambda", rel1, witness);
  table.add("[H,L] = -2 L", rel2);
  table.add("[Lambda,L] = H", rel3);
  table.add("H(A_k) = (n-k) A_k", eigen);
  return table;
}

VerdictTable operator_law_suite(const Sl2Ops& ops, FormGen& gen, int trials) {
  VerdictTable table;
  const int n = ops.n();
  bool eq1 = true, star_sq = true, star_lpow = true, roundtrip = true, criteria = true;
  std::string witness;
  std::uniform_int_distribution<int> deg(0, 2 * n);
  for (int t = 0; t < trials; ++t) {
    int k = deg(gen.rng());
    Form a = gen.homogeneous(n, k);
    for (int p = 0; p <= n; ++p) {
      if (ops.pi_p(a, p) + ops.L_pow(ops.l_inverse(a, p + 1), p + 1) != a) {
        eq1 = false;
        witness = "p=" + std::to_string(p) + " on " + a.to_string();
      }
    }
    if (ops.star_r(ops.star_r(a)) != a) star_sq = false;
    Form expect = (n >= k) ? ops.L_pow(a, n - k) : ops.l_inverse(a, k - n);
    if (ops.star_r(a) != expect) star_lpow = false;
    if (ops.reconstruct(ops.lefschetz_decompose(a)) != a) roundtrip = false;
    // criterion equivalence is enforced inside is_p_filtered; run it on
    // degrees within range for a sample of p
    for (int p = 0; p <= n; ++p) {
      if (k <= n + p) ops.is_p_filtered(a, p);
      Form f = gen.filtered(ops, std::min(k, n + p), p);
      if (!f.is_zero() && !ops.is_p_filtered(f, p)) criteria = false;
    }
  }
  table.add("Pi^p + L^{p+1} L^{-p-1} = 1 for all p", eq1, witness);
  table.add("*_r *_r = 1", star_sq);
  table.add("*_r = L^{n-k} on Omega^k", star_lpow);
  table.add("Lefschetz decomposition round-trip", roundtrip);
  table.add("filtered criteria (i) <=> (ii) and filtered bases test filtered", criteria);
  return table;
}

VerdictTable model_law_suite(const SymplecticModel& model, FormGen& gen, int trials) {
  VerdictTable table;
  const int n = model.n;
  bool leibniz = true, dd = true;
  for (int t = 0; t < trials; ++t) {
    std::uniform_int_distribution<int> deg(0, 2 * n);
    int ka = deg(gen.rng());
    Form a = gen.homogeneous(n, ka);
    Form b = gen.mixed(n);
    Form lhs = ce_differential(model, wedge(a, b));
    Form rhs = wedge(ce_differential(model, a), b) +
               wedge(a, ce_differential(model, b)) * Rational(ka % 2 == 0 ? 1 : -1);
    if (lhs != rhs) leibniz = false;
    if (!ce_differential(model, ce_differential(model, b)).is_zero()) dd = false;
  }
  table.add("d is an anti-derivation", leibniz);
  table.add("d d = 0 on random forms", dd);

  DeRhamSummary dr = derham(model);
  bool palindrome = true;
  for (int k = 0; k <= 2 * n; ++k) {
    if (dr.betti[k] != dr.betti[2 * n - k]) palindrome = false;
  }
  table.add("Poincare duality of Betti numbers", palindrome);
  table.add("betti[0] = 1", dr.betti[0] == 1);
  return table;
}

VerdictTable complex_law_suite(const Sl2Ops& ops, FormGen& gen, int trials) {
  VerdictTable table;
  const int n = ops.n();

  for (int p = 0; p <= n; ++p) {
    bool built = true;
    std::string witness;
    try {
      FilteredComplex c = build_filtered_complex(ops, p);
      (void)c;
    } catch (const Error& e) {
      built = false;
      witness = e.what();
    }
    table.add("filtered complex closes at p=" + std::to_string(p), built, witness);
  }

  bool dl_squared = true, kernel_split = true, ddl_into_im_d = true;
  std::uniform_int_distribution<int> deg(0, 2 * n);
  for (int t = 0; t < trials; ++t) {
    Form a = gen.mixed(n);
    if (!d_lambda(ops, d_lambda(ops, a)).is_zero()) dl_squared = false;

    // homogeneous splitting of ker(d + d^Lambda)
    int k = deg(gen.rng());
    RationalMatrix stacked =
        RationalMatrix::vconcat(d_matrix(ops.model(), k), d_lambda_matrix(ops, k));
    SubspaceBasis ker = rank_kernel_image(stacked).kernel;
    if (ker.dim() > 0) {
      std::uniform_int_distribution<std::size_t> pick(0, ker.dim() - 1);
      Form z = coords_to_form(n, k, ker.vectors[pick(gen.rng())]);
      if (!ops.d(z).is_zero() || !d_lambda(ops, z).is_zero()) kernel_split = false;
    }

    // dd^Lambda of an exact form stays exact (well-definedness of the quotients)
    Form da = ops.d(gen.homogeneous(n, std::max(0, k - 1)));
    Form w = ops.d(d_lambda(ops, da));
    if (!w.is_zero()) {
      auto wk = w.homogeneous_degree();
      SubspaceBasis im_d = rank_kernel_image(d_matrix(ops.model(), *wk - 1)).image;
      if (!in_span(im_d, form_to_coords(w, *wk))) ddl_into_im_d = false;
    }
  }
  table.add("(d^Lambda)^2 = 0", dl_squared);
  table.add("(d+d^Lambda) kernel splits degreewise", kernel_split);
  table.add("d d^Lambda preserves exactness", ddl_into_im_d);

  // torus shortcut: with d = 0 every quotient equals its cochain space and
  // the filtered dimension counts match a direct ker(Lambda^{p+1}) enumeration
  if (ops.model().structure.empty()) {
    bool counts_ok = true;
    for (int p = 0; p <= n && counts_ok; ++p) {
      for (int k = 0; k <= n + p; ++k) {
        RationalMatrix lam_power(degree_dim(n, k - 2 * (p + 1)), degree_dim(n, k));
        const auto& dom = degree_basis(n, k);
        for (std::size_t j = 0; j < dom.size(); ++j) {
          Form x = Form::monomial(n, dom[j]);
          for (int i = 0; i <= p; ++i) x = ops.lambda(x);
          Vec coords = form_to_coords(x, k - 2 * (p + 1));
          for (std::size_t i = 0; i < coords.size(); ++i) lam_power.at(i, j) = coords[i];
        }
        std::size_t nullity = dom.size() - rank(lam_power);
        if (nullity != ops.filtered_basis(k, p).dim()) counts_ok = false;
      }
    }
    table.add("abelian model: filtered counts match ker Lambda^{p+1}", counts_ok);
  }
  return table;
}

VerdictTable stokes_suite(const Sl2Ops& ops, FormGen& gen, int trials) {
  VerdictTable table;
  const int n = ops.n();
  for (int p = 0; p <= n; ++p) {
    bool ok = true;
    std::string witness;
    const int k = 2 * n + 2 * p;  // next-to-top complex degree, form degree 1
    for (int t = 0; t < trials && ok; ++t) {
      Form x = gen.filtered(ops, 1, p);
      Rational value = theta(ops, p, filtered_differential(ops, p, k, x));
      if (value != 0) {
        ok = false;
        witness = "theta(d x) = " + to_string(value) + " for x = " + x.to_string();
      }
    }
    table.add("theta_p(d_{2n+2p} x) = 0 at p=" + std::to_string(p), ok, witness);
  }
  return table;
}

VerdictTable run_all_laws(const Sl2Ops& ops, std::uint64_t seed, int trials) {
  VerdictTable all;
  FormGen gen(seed);
  auto merge = [&all](const std::string& prefix, const VerdictTable& t) {
    for (const VerdictRow& row : t.rows) {
      all.rows.push_back({prefix + ": " + row.name, row.pass, row.detail});
    }
  };
  merge("exactlinalg", linalg_law_suite(gen, std::max(1, trials / 10)));
  merge("exterior", exterior_law_suite(ops, gen, trials));
  merge("sl2ops", sl2_relation_suite(ops, gen, trials));
  merge("sl2ops", operator_law_suite(ops, gen, trials));
  merge("model", model_law_suite(ops.model(), gen, trials));
  merge("cohomology", complex_law_suite(ops, gen, std::max(1, trials / 4)));
  merge("duality", stokes_suite(ops, gen, std::max(1, trials / 2)));
  merge("duality", product_support_test(ops, seed + 1, trials));
  for (int p = 0; p <= ops.n(); ++p) {
    FilteredCohomology fc = filtered_cohomology(ops, p);
    merge("duality p=" + std::to_string(p),
          phi_duality_check(ops, fc, seed + 2 + p, std::max(1, trials / 10)));
  }
  {
    SymplecticCohomologies sc = symplectic_cohomologies(ops);
    VerdictTable blocks;
    for (int k = 0; k <= 2 * ops.n(); ++k) {
      BlockDecomposition bd = d_block_decomposition(ops, sc, k);
      blocks.add("D block-diagonal at k=" + std::to_string(k), bd.cross_blocks_zero);
      blocks.add("D_r blocks full rank at k=" + std::to_string(k),
                 bd.all_blocks_nondegenerate);
    }
    merge("duality", blocks);
  }
  return all;
}

}  // namespace leflab
