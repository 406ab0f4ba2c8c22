#include "leflab/model.hpp"

#include <bit>
#include <sstream>

#include <json.hpp>

#include "leflab/errors.hpp"
#include "leflab/models_data.hpp"

namespace leflab {

using nlohmann::json;

bool ValidationReport::all_pass() const {
  for (const auto& c : checks) {
    if (!c.pass) return false;
  }
  return true;
}

namespace {

std::pair<int, int> line_col_of(const std::string& text, std::size_t byte) {
  int line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

Rational rational_from_json(const json& v, const std::string& where) {
  if (v.is_number_integer()) return Rational(v.get<long long>());
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const SyntaxError& e) {
      throw SyntaxError(where + ": " + e.what());
    }
  }
  throw SyntaxError(where + ": rational must be an integer or a \"p/q\" string");
}

void check_index(int idx, int two_n, const std::string& where) {
  if (idx < 1 || idx > two_n) {
    throw IndexOutOfRange(where + ": index " + std::to_string(idx) + " outside 1.." +
                          std::to_string(two_n));
  }
}

/// A pair list like [[1,2,1],[3,4,"1/2"]] into a degree-2 form.
Form pairs_to_form(const json& arr, int n, const std::string& where) {
  Form out(n);
  if (!arr.is_array()) throw SyntaxError(where + ": expected an array of [i,j,c] triples");
  for (const auto& entry : arr) {
    if (!entry.is_array() || entry.size() != 3) {
      throw SyntaxError(where + ": expected [i,j,c] triple");
    }
    if (!entry[0].is_number_integer() || !entry[1].is_number_integer()) {
      throw SyntaxError(where + ": indices must be integers");
    }
    int i = entry[0].get<int>();
    int j = entry[1].get<int>();
    check_index(i, 2 * n, where);
    check_index(j, 2 * n, where);
    if (i >= j) throw SyntaxError(where + ": index pair must be strictly increasing");
    Rational c = rational_from_json(entry[2], where);
    MonomialMask mask = (MonomialMask(1) << (i - 1)) | (MonomialMask(1) << (j - 1));
    out.add_term(mask, c);
  }
  return out;
}

/// Salamon-style shorthand: "12" means e^1^e^2, sums like "14+23" and leading
/// signs are accepted.
Form monomial_string_to_form(const std::string& s, int n, const std::string& where) {
  Form out(n);
  Rational sign = 1;
  std::string token;
  auto flush = [&]() {
    if (token.empty()) throw SyntaxError(where + ": empty monomial token in '" + s + "'");
    if (token.size() != 2) {
      throw SyntaxError(where + ": monomial token '" + token + "' must name two indices");
    }
    int i = token[0] - '0';
    int j = token[1] - '0';
    check_index(i, 2 * n, where);
    check_index(j, 2 * n, where);
    if (i >= j) throw SyntaxError(where + ": indices in '" + token + "' must increase");
    MonomialMask mask = (MonomialMask(1) << (i - 1)) | (MonomialMask(1) << (j - 1));
    out.add_term(mask, sign);
    token.clear();
  };
  for (char c : s) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == '+' || c == '-') {
      if (!token.empty()) flush();
      sign = (c == '-') ? -1 : 1;
    } else if (c >= '0' && c <= '9') {
      token += c;
    } else {
      throw SyntaxError(where + ": unexpected character '" + std::string(1, c) + "'");
    }
  }
  if (s == "0" || s == "") return Form(n);
  flush();
  return out;
}

}  // namespace

SymplecticModel parse_model(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    auto [line, col] = line_col_of(text, e.byte > 0 ? e.byte - 1 : 0);
    throw SyntaxError(line, col, "malformed JSON");
  }
  if (!doc.is_object()) throw SyntaxError("model file must be a JSON object");
  if (!doc.contains("n") || !doc["n"].is_number_integer() || doc["n"].get<int>() < 1) {
    throw SyntaxError("field 'n' must be a positive integer");
  }
  SymplecticModel m;
  m.n = doc["n"].get<int>();
  m.name = doc.value("name", std::string("unnamed"));
  m.omega = Form(m.n);

  if (doc.contains("differential")) {
    const json& diff = doc["differential"];
    if (!diff.is_object()) throw SyntaxError("'differential' must be an object");
    for (const auto& [key, value] : diff.items()) {
      int gen = 0;
      try {
        gen = std::stoi(key);
      } catch (...) {
        throw SyntaxError("differential key '" + key + "' is not a generator index");
      }
      check_index(gen, 2 * m.n, "differential");
      std::string where = "differential[" + key + "]";
      Form d_gen(m.n);
      if (value.is_string()) {
        d_gen = monomial_string_to_form(value.get<std::string>(), m.n, where);
      } else {
        d_gen = pairs_to_form(value, m.n, where);
      }
      if (!d_gen.is_zero()) m.structure.emplace(gen, d_gen);
    }
  }

  if (!doc.contains("omega")) throw SyntaxError("missing 'omega'");
  m.omega = pairs_to_form(doc["omega"], m.n, "omega");
  return m;
}

Form ce_differential(const SymplecticModel& m, const Form& a) {
  Form out(m.n);
  for (const auto& [mask, c] : a.terms()) {
    // d(e^{i1..ik}) = sum_t (-1)^(t-1) e^{i1..} ^ d(e^{it}) ^ {..ik}
    int position = 0;
    for (int idx = 1; idx <= 2 * m.n; ++idx) {
      MonomialMask bit = MonomialMask(1) << (idx - 1);
      if (!(mask & bit)) continue;
      auto it = m.structure.find(idx);
      if (it != m.structure.end()) {
        MonomialMask prefix = mask & (bit - 1);
        MonomialMask suffix = mask & ~(bit | (bit - 1));
        Form term = wedge(wedge(Form::monomial(m.n, prefix), it->second),
                          Form::monomial(m.n, suffix));
        out += term * (position % 2 == 0 ? c : -c);
      }
      ++position;
    }
  }
  return out;
}

Bivector poisson_bivector(const SymplecticModel& m) {
  const int d = 2 * m.n;
  RationalMatrix omega_mat(d, d);
  for (const auto& [mask, c] : m.omega.terms()) {
    if (std::popcount(mask) != 2) throw WrongDegree("omega must be a 2-form");
    int i = std::countr_zero(mask);
    int j = std::countr_zero(mask & (mask - 1));
    omega_mat.at(i, j) = c;
    omega_mat.at(j, i) = -c;
  }
  auto inv = inverse(omega_mat);
  if (!inv) throw Error("omega is degenerate: no Poisson bivector");
  return Bivector{m.n, *inv};
}

CheckResult check_sl2_calibration(const SymplecticModel& m, const Bivector& pi) {
  CheckResult out{"sl2_calibration", true, ""};
  auto H = [&](const Form& a) {
    Form h(m.n);
    for (int k = 0; k <= 2 * m.n; ++k) {
      h += a.component(k) * Rational(m.n - k);
    }
    return h;
  };
  auto L = [&](const Form& a) { return wedge(m.omega, a); };
  auto Lm = [&](const Form& a) { return contract(pi, a); };
  for (int k = 0; k <= 2 * m.n; ++k) {
    for (MonomialMask mask : degree_basis(m.n, k)) {
      Form x = Form::monomial(m.n, mask);
      Form lhs1 = Lm(L(x)) - L(Lm(x));
      if (lhs1 != H(x)) {
        out.pass = false;
        out.witness = "[Lambda,L] != H on e" + mask_to_string(mask);
        return out;
      }
      Form lhs2 = H(L(x)) - L(H(x));
      if (lhs2 != L(x) * Rational(-2)) {
        out.pass = false;
        out.witness = "[H,L] != -2L on e" + mask_to_string(mask);
        return out;
      }
      Form lhs3 = H(Lm(x)) - Lm(H(x));
      if (lhs3 != Lm(x) * Rational(2)) {
        out.pass = false;
        out.witness = "[H,Lambda] != 2Lambda on e" + mask_to_string(mask);
        return out;
      }
    }
  }
  return out;
}

ValidationReport validate(const SymplecticModel& m) {
  ValidationReport report;

  CheckResult d_squared{"d_squared_zero", true, ""};
  for (const auto& [gen, dgen] : m.structure) {
    Form dd = ce_differential(m, dgen);
    if (!dd.is_zero()) {
      d_squared.pass = false;
      d_squared.witness = "d(d e" + std::to_string(gen) + ") = " + dd.to_string();
      break;
    }
  }
  report.checks.push_back(d_squared);

  Form domega = ce_differential(m, m.omega);
  report.checks.push_back(
      {"omega_closed", domega.is_zero(), domega.is_zero() ? "" : "d omega = " + domega.to_string()});

  Form power = Form::scalar(m.n, 1);
  for (int i = 0; i < m.n; ++i) power = wedge(power, m.omega);
  report.checks.push_back({"omega_nondegenerate", !power.is_zero(),
                           power.is_zero() ? "omega^n = 0" : ""});

  if (power.is_zero()) {
    report.checks.push_back({"sl2_calibration", false, "skipped: omega degenerate"});
    return report;
  }
  Bivector pi = poisson_bivector(m);
  report.checks.push_back(check_sl2_calibration(m, pi));
  return report;
}

SymplecticModel builtin(const std::string& name) {
  for (const auto& [catalog_name, text] : kBuiltinModels) {
    if (name == catalog_name) {
      SymplecticModel m = parse_model(text);
      ValidationReport r = validate(m);
      if (!r.all_pass()) throw Error("catalog model '" + name + "' failed validation");
      return m;
    }
  }
  throw UnknownModel("unknown model '" + name + "'");
}

std::vector<std::string> builtin_names() {
  std::vector<std::string> names;
  for (const auto& [catalog_name, text] : kBuiltinModels) names.emplace_back(catalog_name);
  return names;
}

RationalMatrix d_matrix(const SymplecticModel& m, int k) {
  const auto& dom = degree_basis(m.n, k);
  const std::size_t target = degree_dim(m.n, k + 1);
  RationalMatrix out(target, dom.size());
  for (std::size_t j = 0; j < dom.size(); ++j) {
    Form image = ce_differential(m, Form::monomial(m.n, dom[j]));
    Vec coords = form_to_coords(image, k + 1);
    for (std::size_t i = 0; i < target; ++i) out.at(i, j) = coords[i];
  }
  return out;
}

DeRhamSummary derham(const SymplecticModel& m) {
  DeRhamSummary out;
  const int top = 2 * m.n;
  SubspaceBasis previous_image = SubspaceBasis::empty(1);
  for (int k = 0; k <= top; ++k) {
    RationalMatrix dk = d_matrix(m, k);
    RankKernelImage rki = rank_kernel_image(dk);
    SubspaceBasis boundaries =
        (k == 0) ? SubspaceBasis::empty(degree_dim(m.n, 0)) : previous_image;
    QuotientSpace q = QuotientSpace::of(rki.kernel, boundaries);
    out.betti.push_back(q.dim());
    out.spaces.push_back(std::move(q));
    previous_image = rki.image;
  }
  return out;
}

}  // namespace leflab
