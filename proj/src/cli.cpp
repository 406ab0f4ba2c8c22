#include "leflab/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <future>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "leflab/errors.hpp"
#include "leflab/laws.hpp"
#include "leflab/report.hpp"
#include "leflab/tables.hpp"

namespace leflab::cli {

namespace {

using nlohmann::json;

constexpr int kExitPass = 0;
constexpr int kExitVerdictFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitModel = 3;

int thread_cap() {
  if (const char* env = std::getenv("LEFLAB_THREADS")) {
    int v = std::atoi(env);
    if (v >= 1) return v;
  }
  unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(hc);
}

/// Runs f(p) for p = 0..p_max with at most thread_cap() workers; results are
/// collected in order of p.
std::vector<json> map_over_p(int p_max, const std::function<json(int)>& f) {
  std::vector<json> out(p_max + 1);
  const int cap = thread_cap();
  int next = 0;
  while (next <= p_max) {
    std::vector<std::pair<int, std::future<json>>> batch;
    for (int i = 0; i < cap && next <= p_max; ++i, ++next) {
      batch.emplace_back(next, std::async(std::launch::async, f, next));
    }
    for (auto& [p, fut] : batch) out[p] = fut.get();
  }
  return out;
}

SymplecticModel load_model_unchecked(const std::string& spec) {
  try {
    return builtin(spec);
  } catch (const UnknownModel&) {
    // fall through to treating it as a path
  }
  std::ifstream in(spec);
  if (!in) throw UnknownModel("'" + spec + "' is neither a catalog model nor a readable file");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_model(buf.str());
}

SymplecticModel load_model(const std::string& spec) {
  SymplecticModel m = load_model_unchecked(spec);
  ValidationReport report = validate(m);
  if (!report.all_pass()) {
    std::string detail;
    for (const CheckResult& c : report.checks) {
      if (!c.pass) detail += c.name + " (" + c.witness + ") ";
    }
    throw Error("model validation failed: " + detail);
  }
  return m;
}

void emit(const ReportBuilder& rb, bool as_json, std::ostream& out) {
  if (as_json) {
    out << rb.as_json().dump(2) << "\n";
  } else {
    out << rb.text();
  }
}

VerdictTable validation_verdicts(const SymplecticModel& m) {
  VerdictTable t;
  for (const CheckResult& c : validate(m).checks) t.add(c.name, c.pass, c.witness);
  return t;
}

json betti_table(const SymplecticModel& m) {
  DeRhamSummary dr = derham(m);
  return json{{"betti", dr.betti}};
}

void filtered_section(const Sl2Ops& ops, int p, ReportBuilder& rb) {
  FilteredCohomology fc = filtered_cohomology(ops, p);
  std::vector<std::size_t> space_dims;
  for (const auto& s : fc.complex.spaces) space_dims.push_back(s.dim());
  rb.add_table("F_" + std::to_string(p) + " space dims", space_dims);
  rb.add_table("F^" + std::to_string(p) + "H dims", fc.dims());
  rb.add_verdicts(phi_duality_check(ops, fc));
}

void duality_section(const Sl2Ops& ops, int p, ReportBuilder& rb) {
  FilteredCohomology fc = filtered_cohomology(ops, p);
  json pairings = json::array();
  for (int k = 0; k <= ops.n() + p; ++k) {
    pairings.push_back(pairing_to_json(g_pairing(ops, fc, k)));
  }
  rb.add_table("g_" + std::to_string(p) + " pairings", pairings);
  rb.add_verdicts(phi_duality_check(ops, fc));
  FrobeniusReport fr = frobenius_report(ops, fc);
  json signs = json::array();
  VerdictTable consistency;
  for (const FrobeniusDegreeRow& row : fr.rows) {
    signs.push_back({{"k", row.k}, {"k_bar", row.k_bar}, {"sign", row.sign}});
    consistency.add("frobenius sign consistent at k=" + std::to_string(row.k), row.consistent);
  }
  rb.add_table("frobenius signs p=" + std::to_string(p), signs);
  rb.add_verdicts(consistency);
}

void ddl_section(const Sl2Ops& ops, ReportBuilder& rb) {
  SymplecticCohomologies sc = symplectic_cohomologies(ops);
  auto dims_of = [](const std::vector<CohomologySpace>& spaces) {
    std::vector<std::size_t> d;
    for (const auto& s : spaces) d.push_back(s.dimension());
    return d;
  };
  rb.add_table("H_{d+dL} dims", dims_of(sc.d_plus_dlambda));
  rb.add_table("H_{ddL} dims", dims_of(sc.ddlambda));
  rb.add_table("PH_{d+dL} dims", dims_of(sc.primitive.d_plus_dlambda));
  rb.add_table("PH_{ddL} dims", dims_of(sc.primitive.ddlambda));
  rb.add_verdicts(lefschetz_decomp_check(ops, sc));
  VerdictTable pairings;
  for (int k = 0; k <= 2 * ops.n(); ++k) {
    PairingReport d = dd_pairing(ops, sc, k);
    pairings.add("D nondegenerate at k=" + std::to_string(k), d.nondegenerate,
                 d.nondegenerate ? "" : "rank " + std::to_string(d.rank));
    PairingReport s = dd_pairing_swapped(ops, sc, k);
    pairings.add("swapped D nondegenerate at k=" + std::to_string(k), s.nondegenerate);
    for (const VerdictRow& row : dd_pairing_well_defined(ops, sc, k).rows) {
      pairings.rows.push_back(row);
    }
  }
  rb.add_verdicts(pairings);
}

void diagram_section(const Sl2Ops& ops, ReportBuilder& rb) {
  SymplecticCohomologies sc = symplectic_cohomologies(ops);
  const int n = ops.n();
  VerdictTable table;
  for (int k = 0; k <= 2 * n; ++k) {
    BlockDecomposition bd = d_block_decomposition(ops, sc, k);
    table.add("D block-diagonal at k=" + std::to_string(k), bd.cross_blocks_zero);
    table.add("D_r blocks full rank at k=" + std::to_string(k), bd.all_blocks_nondegenerate);
    for (int r = std::max(0, k - n); 2 * r <= k; ++r) {
      const int p_prime = n - k + 2 * r;
      if (p_prime < 0 || p_prime > n) continue;
      for (const VerdictRow& row : diagram_check(ops, sc, k, r).rows) table.rows.push_back(row);
    }
  }
  rb.add_verdicts(table);
}

void resolution_section(const Sl2Ops& ops, int p, ReportBuilder& rb) {
  rb.add_verdicts(resolution_check(ops, p));
}

int finish(const ReportBuilder& rb, bool as_json, std::ostream& out) {
  emit(rb, as_json, out);
  return rb.all_pass() ? kExitPass : kExitVerdictFail;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"leflab — exact symplectic operator calculus and filtered cohomology workbench"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "emit the report as JSON");

  std::string model_arg;
  int p_arg = 0;
  std::uint64_t seed = 1;
  int trials = 200;

  auto* cmd_check = app.add_subcommand("check", "parse and validate a model");
  cmd_check->add_option("model", model_arg)->required();
  auto* cmd_betti = app.add_subcommand("betti", "de Rham Betti numbers");
  cmd_betti->add_option("model", model_arg)->required();
  auto* cmd_filtered = app.add_subcommand("filtered", "filtered complex and cohomology at p");
  cmd_filtered->add_option("model", model_arg)->required();
  cmd_filtered->add_option("-p", p_arg, "filtration level")->required();
  auto* cmd_ddl = app.add_subcommand("ddl", "(d+dL)- and ddL-cohomologies with checks");
  cmd_ddl->add_option("model", model_arg)->required();
  auto* cmd_duality = app.add_subcommand("duality", "g_p pairings and duality verdicts at p");
  cmd_duality->add_option("model", model_arg)->required();
  cmd_duality->add_option("-p", p_arg, "filtration level")->required();
  auto* cmd_resolution = app.add_subcommand("resolution", "Lefschetz resolution sequences at p");
  cmd_resolution->add_option("model", model_arg)->required();
  cmd_resolution->add_option("-p", p_arg, "filtration level")->required();
  auto* cmd_diagram = app.add_subcommand("diagram", "pairing blocks and the closing diagram");
  cmd_diagram->add_option("model", model_arg)->required();
  auto* cmd_fuzz = app.add_subcommand("fuzz", "seeded randomized law suites");
  cmd_fuzz->add_option("model", model_arg)->required();
  cmd_fuzz->add_option("--seed", seed, "deterministic seed");
  cmd_fuzz->add_option("--trials", trials, "trials per law");
  auto* cmd_report = app.add_subcommand("report", "every computation and verdict");
  cmd_report->add_option("model", model_arg)->required();

  for (CLI::App* sub : app.get_subcommands(nullptr)) sub->fallthrough();

  std::vector<const char*> argv;
  argv.push_back("leflab");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  SymplecticModel model;
  try {
    // `check` reports validation verdicts itself, so it loads without the gate
    model = cmd_check->parsed() ? load_model_unchecked(model_arg) : load_model(model_arg);
  } catch (const Error& e) {
    err << "model error: " << e.what() << "\n";
    return kExitModel;
  }

  const bool needs_p = cmd_filtered->parsed() || cmd_duality->parsed() || cmd_resolution->parsed();
  if (needs_p && (p_arg < 0 || p_arg > model.n)) {
    err << "usage error: p must be in 0.." << model.n << "\n";
    return kExitUsage;
  }

  try {
    if (cmd_check->parsed()) {
      ReportBuilder rb(model, "check");
      rb.add_verdicts(validation_verdicts(model));
      emit(rb, as_json, out);
      return rb.all_pass() ? kExitPass : kExitModel;
    }

    Sl2Ops ops(model);
    if (cmd_betti->parsed()) {
      ReportBuilder rb(model, "betti");
      rb.add_table("betti", betti_table(model)["betti"]);
      DeRhamSummary dr = derham(model);
      StrongLefschetzResult sl = strong_lefschetz(ops, dr);
      nlohmann::json info{{"holds", sl.holds}};
      if (!sl.holds) {
        info["failing_degree"] = sl.failing_degree;
        info["witness"] = form_to_json(sl.witness);
      }
      rb.add_table("strong_lefschetz", info);
      return finish(rb, as_json, out);
    }
    if (cmd_filtered->parsed()) {
      ReportBuilder rb(model, "filtered");
      rb.add_params({{"p", p_arg}});
      filtered_section(ops, p_arg, rb);
      return finish(rb, as_json, out);
    }
    if (cmd_duality->parsed()) {
      ReportBuilder rb(model, "duality");
      rb.add_params({{"p", p_arg}});
      duality_section(ops, p_arg, rb);
      return finish(rb, as_json, out);
    }
    if (cmd_resolution->parsed()) {
      ReportBuilder rb(model, "resolution");
      rb.add_params({{"p", p_arg}});
      resolution_section(ops, p_arg, rb);
      return finish(rb, as_json, out);
    }
    if (cmd_ddl->parsed()) {
      ReportBuilder rb(model, "ddl");
      ddl_section(ops, rb);
      return finish(rb, as_json, out);
    }
    if (cmd_diagram->parsed()) {
      ReportBuilder rb(model, "diagram");
      diagram_section(ops, rb);
      return finish(rb, as_json, out);
    }
    if (cmd_fuzz->parsed()) {
      ReportBuilder rb(model, "fuzz");
      rb.add_params({{"seed", seed}, {"trials", trials}});
      rb.add_verdicts(run_all_laws(ops, seed, trials));
      return finish(rb, as_json, out);
    }
    if (cmd_report->parsed()) {
      ReportBuilder rb(model, "report");
      rb.add_verdicts(validation_verdicts(model));
      rb.add_table("betti", betti_table(model)["betti"]);
      rb.add_table("dimension_tables", dimension_tables(model));

      // independent (p, k) work dispatched concurrently, assembled in order
      std::vector<nlohmann::json> sections =
          map_over_p(model.n, [&](int p) -> nlohmann::json {
            ReportBuilder section(model, "report");
            filtered_section(ops, p, section);
            duality_section(ops, p, section);
            resolution_section(ops, p, section);
            return section.as_json();
          });
      VerdictTable merged;
      for (int p = 0; p <= model.n; ++p) {
        for (const auto& v : sections[p]["verdicts"]) {
          merged.add("p=" + std::to_string(p) + " " + v["name"].get<std::string>(),
                     v["pass"].get<bool>(), v.value("witness", ""));
        }
      }
      rb.add_verdicts(merged);
      ddl_section(ops, rb);
      diagram_section(ops, rb);
      return finish(rb, as_json, out);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitVerdictFail;
  }
  err << "usage error: no command\n";
  return kExitUsage;
}

}  // namespace leflab::cli
