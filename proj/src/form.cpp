#include "leflab/form.hpp"

#include <algorithm>
#include <bit>
#include <mutex>
#include <sstream>

#include "leflab/errors.hpp"

namespace leflab {

Form Form::scalar(int n, const Rational& c) {
  Form f(n);
  f.add_term(0, c);
  return f;
}

Form Form::monomial(int n, MonomialMask mask, const Rational& c) {
  if (mask >= (MonomialMask(1) << (2 * n))) throw IndexOutOfRange("monomial index above 2n");
  Form f(n);
  f.add_term(mask, c);
  return f;
}

Form Form::basis_one_form(int n, int index) {
  if (index < 1 || index > 2 * n) throw IndexOutOfRange("basis index outside 1..2n");
  return monomial(n, MonomialMask(1) << (index - 1));
}

Rational Form::coefficient(MonomialMask mask) const {
  auto it = terms_.find(mask);
  return it == terms_.end() ? Rational(0) : it->second;
}

Form Form::component(int k) const {
  Form out(half_dim_);
  for (const auto& [mask, c] : terms_) {
    if (std::popcount(mask) == k) out.terms_.emplace(mask, c);
  }
  return out;
}

bool Form::is_homogeneous() const { return homogeneous_degree().has_value(); }

std::optional<int> Form::homogeneous_degree() const {
  if (terms_.empty()) return 0;
  int deg = std::popcount(terms_.begin()->first);
  for (const auto& [mask, c] : terms_) {
    if (std::popcount(mask) != deg) return std::nullopt;
  }
  return deg;
}

std::vector<int> Form::degrees_present() const {
  std::vector<int> degs;
  for (const auto& [mask, c] : terms_) {
    int d = std::popcount(mask);
    if (degs.empty() || degs.back() != d) {
      if (std::find(degs.begin(), degs.end(), d) == degs.end()) degs.push_back(d);
    }
  }
  std::sort(degs.begin(), degs.end());
  return degs;
}

void Form::add_term(MonomialMask mask, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(mask, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Form& Form::operator+=(const Form& rhs) {
  if (half_dim_ != rhs.half_dim_) throw DimensionMismatch("form addition dim mismatch");
  for (const auto& [mask, c] : rhs.terms_) add_term(mask, c);
  return *this;
}

Form& Form::operator-=(const Form& rhs) {
  if (half_dim_ != rhs.half_dim_) throw DimensionMismatch("form subtraction dim mismatch");
  for (const auto& [mask, c] : rhs.terms_) add_term(mask, -c);
  return *this;
}

Form Form::operator+(const Form& rhs) const {
  Form out = *this;
  out += rhs;
  return out;
}

Form Form::operator-(const Form& rhs) const {
  Form out = *this;
  out -= rhs;
  return out;
}

Form Form::operator-() const {
  Form out(half_dim_);
  for (const auto& [mask, c] : terms_) out.terms_.emplace(mask, -c);
  return out;
}

Form Form::operator*(const Rational& c) const {
  Form out(half_dim_);
  if (c == 0) return out;
  for (const auto& [mask, coef] : terms_) out.terms_.emplace(mask, coef * c);
  return out;
}

std::string Form::to_string() const {
  if (terms_.empty()) return "0";
  // display sorted by (degree, lexicographic index set)
  std::vector<MonomialMask> masks;
  for (const auto& [mask, c] : terms_) masks.push_back(mask);
  std::sort(masks.begin(), masks.end(), [](MonomialMask a, MonomialMask b) {
    int da = std::popcount(a), db = std::popcount(b);
    if (da != db) return da < db;
    return mask_to_string(a) < mask_to_string(b);
  });
  std::ostringstream os;
  bool first = true;
  for (MonomialMask mask : masks) {
    Rational c = coefficient(mask);
    if (first) {
      if (c < 0) {
        os << "-";
        c = -c;
      }
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    if (mask == 0) {
      os << leflab::to_string(c);
    } else {
      if (c != 1) os << leflab::to_string(c) << "*";
      os << "e" << mask_to_string(mask);
    }
  }
  return os.str();
}

int wedge_sign(MonomialMask lhs, MonomialMask rhs) {
  if (lhs & rhs) return 0;
  // count transpositions: pairs (i in lhs, j in rhs) with j < i
  int swaps = 0;
  MonomialMask r = rhs;
  while (r) {
    MonomialMask low = r & (~r + 1);
    // indices of lhs strictly above this rhs index
    swaps += std::popcount(lhs & ~(low | (low - 1)));
    r &= r - 1;
  }
  return (swaps % 2 == 0) ? 1 : -1;
}

Form wedge(const Form& a, const Form& b) {
  if (a.n() != b.n()) throw DimensionMismatch("wedge dim mismatch");
  Form out(a.n());
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      int s = wedge_sign(ma, mb);
      if (s == 0) continue;
      out.add_term(ma | mb, ca * cb * s);
    }
  }
  return out;
}

Form interior(int index, const Form& a) {
  if (index < 1 || index > a.dim()) throw IndexOutOfRange("interior index outside 1..2n");
  const MonomialMask bit = MonomialMask(1) << (index - 1);
  Form out(a.n());
  for (const auto& [mask, c] : a.terms()) {
    if (!(mask & bit)) continue;
    int position = std::popcount(mask & (bit - 1));
    out.add_term(mask & ~bit, (position % 2 == 0) ? c : -c);
  }
  return out;
}

Form contract(const Bivector& pi, const Form& a) {
  if (pi.n != a.n()) throw DimensionMismatch("contract dim mismatch");
  const int d = a.dim();
  Form out(a.n());
  for (int i = 1; i <= d; ++i) {
    for (int j = 1; j <= d; ++j) {
      const Rational& p = pi.coeffs.at(i - 1, j - 1);
      if (p == 0) continue;
      out += interior(i, interior(j, a)) * (p / 2);
    }
  }
  return out;
}

Rational integrate(const Form& a) {
  const MonomialMask top = (MonomialMask(1) << (2 * a.n())) - 1;
  for (const auto& [mask, c] : a.terms()) {
    if (mask != top) throw WrongDegree("integrand has a component below top degree");
  }
  return a.coefficient(top);
}

namespace {

std::vector<MonomialMask> enumerate_degree_basis(int n, int k) {
  std::vector<MonomialMask> out;
  const int d = 2 * n;
  if (k < 0 || k > d) return out;
  // lexicographic k-subsets of {1..2n}
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i + 1;
  while (true) {
    MonomialMask m = 0;
    for (int v : idx) m |= MonomialMask(1) << (v - 1);
    out.push_back(m);
    if (k == 0) break;
    int pos = k - 1;
    while (pos >= 0 && idx[pos] == d - (k - 1 - pos)) --pos;
    if (pos < 0) break;
    ++idx[pos];
    for (int i = pos + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
  }
  return out;
}

std::map<std::pair<int, int>, std::vector<MonomialMask>> g_basis_cache;
std::mutex g_basis_mutex;

}  // namespace

const std::vector<MonomialMask>& degree_basis(int n, int k) {
  std::lock_guard<std::mutex> lock(g_basis_mutex);
  auto key = std::make_pair(n, k);
  auto it = g_basis_cache.find(key);
  if (it == g_basis_cache.end()) {
    it = g_basis_cache.emplace(key, enumerate_degree_basis(n, k)).first;
  }
  return it->second;
}

std::size_t degree_dim(int n, int k) { return degree_basis(n, k).size(); }

Vec form_to_coords(const Form& a, int k) {
  const auto& basis = degree_basis(a.n(), k);
  for (const auto& [mask, c] : a.terms()) {
    if (std::popcount(mask) != k) throw WrongDegree("form_to_coords: component of wrong degree");
  }
  Vec out(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) out[i] = a.coefficient(basis[i]);
  return out;
}

Form coords_to_form(int n, int k, const Vec& coords) {
  const auto& basis = degree_basis(n, k);
  if (coords.size() != basis.size()) throw DimensionMismatch("coords length != C(2n,k)");
  Form out(n);
  for (std::size_t i = 0; i < basis.size(); ++i) out.add_term(basis[i], coords[i]);
  return out;
}

std::string mask_to_string(MonomialMask mask) {
  std::string s;
  for (int i = 0; i < 32; ++i) {
    if (mask & (MonomialMask(1) << i)) s += std::to_string(i + 1);
  }
  return s;
}

}  // namespace leflab
