#include "leflab/sl2.hpp"

#include <stdexcept>

#include "leflab/errors.hpp"

namespace leflab {

Sl2Ops::Sl2Ops(const SymplecticModel& model) : Sl2Ops(model, poisson_bivector(model)) {}

Sl2Ops::Sl2Ops(const SymplecticModel& model, Bivector pi) : model_(model), pi_(std::move(pi)) {
  if (pi_.n != model_.n) throw DimensionMismatch("bivector/model dim mismatch");
  build_caches();
}

Form Sl2Ops::L(const Form& a) const { return wedge(model_.omega, a); }

Form Sl2Ops::lambda(const Form& a) const { return contract(pi_, a); }

Form Sl2Ops::H(const Form& a) const {
  Form out(model_.n);
  for (int k : a.degrees_present()) {
    out += a.component(k) * Rational(model_.n - k);
  }
  return out;
}

Form Sl2Ops::apply(Sl2Which which, const Form& a) const {
  switch (which) {
    case Sl2Which::L: return L(a);
    case Sl2Which::Lambda: return lambda(a);
    case Sl2Which::H: return H(a);
  }
  throw std::logic_error("unreachable");
}

Form Sl2Ops::d(const Form& a) const { return ce_differential(model_, a); }

Form Sl2Ops::L_pow(const Form& a, int j) const {
  Form out = a;
  for (int i = 0; i < j; ++i) out = L(out);
  return out;
}

void Sl2Ops::build_caches() {
  const int n = model_.n;
  primitive_.clear();
  for (int s = 0; s <= n; ++s) {
    if (s < 2) {
      primitive_.push_back(SubspaceBasis::full(degree_dim(n, s)));
      continue;
    }
    // kernel of Lambda: Omega^s -> Omega^{s-2}
    const auto& dom = degree_basis(n, s);
    RationalMatrix lam(degree_dim(n, s - 2), dom.size());
    for (std::size_t j = 0; j < dom.size(); ++j) {
      Vec coords = form_to_coords(lambda(Form::monomial(n, dom[j])), s - 2);
      for (std::size_t i = 0; i < coords.size(); ++i) lam.at(i, j) = coords[i];
    }
    primitive_.push_back(rank_kernel_image(lam).kernel);
  }

  by_degree_.clear();
  for (int k = 0; k <= 2 * n; ++k) {
    DegreeCache cache;
    std::vector<Vec> columns;
    const int l_min = std::max(0, k - n);
    for (int l = l_min; 2 * l <= k; ++l) {
      const int s = k - 2 * l;
      const SubspaceBasis& prim = primitive_[s];
      for (std::size_t idx = 0; idx < prim.dim(); ++idx) {
        Form b = coords_to_form(n, s, prim.vectors[idx]);
        columns.push_back(form_to_coords(L_pow(b, l), k));
        cache.slots.emplace_back(l, static_cast<int>(idx));
      }
    }
    RationalMatrix assembled = RationalMatrix::from_columns(degree_dim(n, k), columns);
    if (assembled.rows() != assembled.cols()) {
      throw std::logic_error("Lefschetz assembly is not square in degree " + std::to_string(k));
    }
    auto inv = inverse(assembled);
    if (!inv) {
      throw std::logic_error("Lefschetz assembly is singular in degree " + std::to_string(k));
    }
    cache.inverse = std::move(*inv);
    by_degree_.push_back(std::move(cache));
  }
}

const SubspaceBasis& Sl2Ops::primitive_basis(int s) const {
  if (s < 0 || s > model_.n) throw DegreeOutOfRange("primitive basis degree outside 0..n");
  return primitive_[s];
}

const Sl2Ops::DegreeCache& Sl2Ops::degree_cache(int k) const { return by_degree_.at(k); }

LefschetzComponents Sl2Ops::lefschetz_decompose(const Form& a) const {
  auto deg = a.homogeneous_degree();
  if (!deg) throw WrongDegree("lefschetz_decompose needs a homogeneous form");
  LefschetzComponents out;
  out.degree = *deg;
  if (a.is_zero()) return out;
  const DegreeCache& cache = degree_cache(*deg);
  Vec solution = cache.inverse.apply(form_to_coords(a, *deg));
  for (std::size_t col = 0; col < solution.size(); ++col) {
    if (solution[col] == 0) continue;
    auto [l, idx] = cache.slots[col];
    const int s = *deg - 2 * l;
    Form b = coords_to_form(model_.n, s, primitive_[s].vectors[idx]) * solution[col];
    auto it = out.components.find(l);
    if (it == out.components.end()) {
      out.components.emplace(l, b);
    } else {
      it->second += b;
    }
  }
  for (auto it = out.components.begin(); it != out.components.end();) {
    it = it->second.is_zero() ? out.components.erase(it) : std::next(it);
  }
  return out;
}

Form Sl2Ops::reconstruct(const LefschetzComponents& lc) const {
  Form out(model_.n);
  for (const auto& [l, b] : lc.components) out += L_pow(b, l);
  return out;
}

bool Sl2Ops::is_primitive(const Form& a) const { return is_p_filtered(a, 0); }

bool Sl2Ops::is_p_filtered(const Form& a, int p) const {
  if (p < 0) throw DegreeOutOfRange("p must be nonnegative");
  if (a.is_zero()) return true;
  auto deg = a.homogeneous_degree();
  if (!deg) throw WrongDegree("filtered test needs a homogeneous form");
  const int k = *deg;
  const int n = model_.n;
  if (k > n + p) throw DegreeOutOfRange("degree above n+p");
  Form lam = a;
  for (int i = 0; i <= p; ++i) lam = lambda(lam);
  const bool via_lambda = lam.is_zero();
  const bool via_l = L_pow(a, n - k + 1 + p).is_zero();
  if (via_lambda != via_l) {
    throw std::logic_error("filtered criteria (i) and (ii) disagree on " + a.to_string());
  }
  return via_lambda;
}

Form Sl2Ops::star_r(const Form& a) const {
  Form out(model_.n);
  for (int k : a.degrees_present()) {
    LefschetzComponents lc = lefschetz_decompose(a.component(k));
    for (const auto& [l, b] : lc.components) {
      const int s = k - 2 * l;
      out += L_pow(b, model_.n - l - s);
    }
  }
  return out;
}

Form Sl2Ops::l_inverse(const Form& a, int p) const {
  if (p < 0) throw DegreeOutOfRange("l_inverse exponent must be nonnegative");
  Form out(model_.n);
  for (int k : a.degrees_present()) {
    LefschetzComponents lc = lefschetz_decompose(a.component(k));
    for (const auto& [l, b] : lc.components) {
      if (l >= p) out += L_pow(b, l - p);
    }
  }
  return out;
}

Form Sl2Ops::pi_p(const Form& a, int p) const {
  if (p < 0) throw DegreeOutOfRange("pi_p level must be nonnegative");
  Form out(model_.n);
  for (int k : a.degrees_present()) {
    LefschetzComponents lc = lefschetz_decompose(a.component(k));
    for (const auto& [l, b] : lc.components) {
      if (l <= p) out += L_pow(b, l);
    }
  }
  return out;
}

std::pair<Form, Form> Sl2Ops::del_plus_minus(const Form& primitive_b) const {
  if (!is_primitive(primitive_b)) throw NotPrimitive("del_plus_minus input is not primitive");
  Form db = d(primitive_b);
  Form plus(model_.n);
  Form minus(model_.n);
  if (db.is_zero()) return {plus, minus};
  LefschetzComponents lc = lefschetz_decompose(db);
  for (const auto& [l, b] : lc.components) {
    if (l == 0) {
      plus = b;
    } else if (l == 1) {
      minus = b;
    } else {
      throw std::logic_error("dB has a Lefschetz component with l >= 2");
    }
  }
  return {plus, minus};
}

SubspaceBasis Sl2Ops::filtered_basis(int k, int p) const {
  const int n = model_.n;
  if (k < 0 || k > 2 * n) throw DegreeOutOfRange("filtered basis degree outside 0..2n");
  SubspaceBasis out = SubspaceBasis::empty(degree_dim(n, k));
  const int l_min = std::max(0, k - n);
  for (int l = l_min; 2 * l <= k && l <= p; ++l) {
    const int s = k - 2 * l;
    const SubspaceBasis& prim = primitive_[s];
    for (const Vec& coords : prim.vectors) {
      Form b = coords_to_form(n, s, coords);
      out.vectors.push_back(form_to_coords(L_pow(b, l), k));
    }
  }
  return out;
}

}  // namespace leflab
