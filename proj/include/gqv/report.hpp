#pragma once

#include <string>

#include "gqv/coset_geometry.hpp"
#include "gqv/verdict.hpp"

namespace gqv {

inline constexpr const char* kToolVersion = "1.0.0";

/// Stable JSON: fixed field order, orders as decimal strings, no
/// timestamps; byte-identical across runs for identical inputs.
std::string report_json(const RunResult& run);

/// Text mirror of the case structure, one block per case in order.
std::string report_text(const RunResult& run);

std::string enumeration_json(const std::vector<GroupFacts>& groups);
std::string enumeration_text(const std::vector<GroupFacts>& groups);

std::string group_info_json(const GroupFacts& facts);
std::string group_info_text(const GroupFacts& facts);

std::string hs_witnesses_json(const std::vector<HSWitness>& ws);
std::string hc_witnesses_json(const std::vector<HCWitness>& ws);

std::string geometry_json(const geom::IncidenceGeometry& g);
std::string stabiliser_json(const geom::StabiliserReport& rep);
std::string grid_json(const geom::GridResult& res);
std::string double_cosets_json(const geom::DoubleCosetProfile& prof);

}  // namespace gqv
