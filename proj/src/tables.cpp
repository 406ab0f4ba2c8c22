#include "leflab/tables.hpp"

#include "leflab/duality.hpp"
#include "leflab/report.hpp"

namespace leflab {

using nlohmann::json;

json dimension_tables(const SymplecticModel& m) {
  Sl2Ops ops(m);
  json out;
  out["schema"] = kTablesSchema;
  out["model"] = m.name;
  out["n"] = m.n;

  DeRhamSummary dr = derham(m);
  out["betti"] = dr.betti;

  json filtered = json::array();
  json signs = json::array();
  for (int p = 0; p <= m.n; ++p) {
    FilteredCohomology fc = filtered_cohomology(ops, p);
    filtered.push_back(fc.dims());
    FrobeniusReport fr = frobenius_report(ops, fc);
    json row = json::array();
    for (const FrobeniusDegreeRow& r : fr.rows) row.push_back(r.sign);
    signs.push_back(row);
  }
  out["filtered"] = filtered;

  SymplecticCohomologies sc = symplectic_cohomologies(ops);
  auto dims_of = [](const std::vector<CohomologySpace>& spaces) {
    std::vector<std::size_t> d;
    for (const auto& s : spaces) d.push_back(s.dimension());
    return d;
  };
  out["h_d_plus_dlambda"] = dims_of(sc.d_plus_dlambda);
  out["h_ddlambda"] = dims_of(sc.ddlambda);
  out["ph_d_plus_dlambda"] = dims_of(sc.primitive.d_plus_dlambda);
  out["ph_ddlambda"] = dims_of(sc.primitive.ddlambda);
  out["frobenius_signs"] = signs;
  return out;
}

std::string dump_tables(const json& tables) { return tables.dump(2) + "\n"; }

}  // namespace leflab
