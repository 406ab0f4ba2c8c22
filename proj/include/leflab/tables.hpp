#pragma once

#include <json.hpp>

#include "leflab/model.hpp"

namespace leflab {

/// Canonical dimension tables of a model: Betti numbers, filtered cohomology
/// dimensions for every p, the (d+dL)- and ddL-theories, their primitive
/// variants, and the observed Frobenius pairing signs. Serialized with stable
/// key order so runs are byte-comparable.
nlohmann::json dimension_tables(const SymplecticModel& m);

std::string dump_tables(const nlohmann::json& tables);

}  // namespace leflab
