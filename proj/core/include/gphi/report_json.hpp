#pragma once

#include <nlohmann/json.hpp>

#include "gphi/analysis.hpp"
#include "gphi/group_table.hpp"
#include "gphi/lattice.hpp"

namespace gphi {

void to_json(nlohmann::json& j, const SubgroupSet& h);
void to_json(nlohmann::json& j, const OrderSpectrum& s);
void to_json(nlohmann::json& j, const PhiReport& r);
void to_json(nlohmann::json& j, const Condition2Witness& w);
void to_json(nlohmann::json& j, const VerdictReport& v);
void to_json(nlohmann::json& j, const SchmidtReport& s);
void to_json(nlohmann::json& j, const Lemma21Check& c);
void to_json(nlohmann::json& j, const Lemma22Probe& p);

/// {"subgroups": [[ids]...], "edges": [[lo, hi]...], "order": [...],
///  "exponent": [...], "phi": [...]}
nlohmann::json lattice_to_json(const Lattice& l, std::span<const PhiReport> annotations);

/// "2:Q8,3:cyclic"
std::string format_shapes(const std::vector<std::pair<std::uint64_t, SylowShape>>& shapes);

}  // namespace gphi
