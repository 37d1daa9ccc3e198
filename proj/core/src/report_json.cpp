#include "gphi/report_json.hpp"

#include <string>

namespace gphi {

using nlohmann::json;

void to_json(json& j, const SubgroupSet& h) {
  j = json::array();
  for (ElementId a : h.members()) j.push_back(a);
}

void to_json(json& j, const OrderSpectrum& s) {
  j = json::object();
  for (const auto& [d, c] : s.counts) j[std::to_string(d)] = c;
}

void to_json(json& j, const PhiReport& r) {
  j = json{{"exponent", r.exponent}, {"phi", r.phi}, {"spectrum", r.spectrum}};
}

void to_json(json& j, const Condition2Witness& w) {
  j = json{{"H", w.smaller}, {"K", w.larger}, {"phi_H", w.phi_smaller}, {"phi_K", w.phi_larger}};
}

void to_json(json& j, const VerdictReport& v) {
  json shapes = json::object();
  for (const auto& [p, s] : v.sylow_shapes) shapes[std::to_string(p)] = std::string(to_string(s));
  j = json{{"cond1", v.cond1},
           {"cond1_witness", v.cond1_witness ? json(*v.cond1_witness) : json(nullptr)},
           {"cond2", v.cond2},
           {"cond2_witness", v.cond2_witness ? json(*v.cond2_witness) : json(nullptr)},
           {"nilpotent", v.nilpotent},
           {"sylow_shapes", shapes},
           {"classified", v.classified},
           {"agrees", v.agrees}};
}

void to_json(json& j, const SchmidtReport& s) {
  j = json{{"is_schmidt", s.is_schmidt},
           {"p", s.p},
           {"q", s.q},
           {"m", s.m},
           {"n", s.n},
           {"r", s.r},
           {"y", s.y},
           {"P_shape", std::string(to_string(s.p_shape))},
           {"yq_central", s.yq_central},
           {"center_eq_frattini", s.center_eq_frattini},
           {"center_eq_phiP_times_yq", s.center_eq_phiP_times_yq},
           {"derived_eq_P", s.derived_eq_P},
           {"P_derived_eq_frattini_P", s.P_derived_eq_frattini_P},
           {"index_formula", s.index_formula},
           {"abelian_case", s.abelian_case},
           {"nonabelian_case", s.nonabelian_case},
           {"quotient_schmidt", s.quotient_schmidt},
           {"no_cyclic_pq", s.no_cyclic_pq},
           {"all_clauses", s.all_clauses()}};
}

void to_json(json& j, const Lemma21Check& c) {
  j = json{{"cond2", c.cond2}, {"shape", std::string(to_string(c.shape))}, {"holds", c.holds}};
}

void to_json(json& j, const Lemma22Probe& p) {
  j = json{{"case", std::string(1, p.case_tag)},
           {"phi", p.phi},
           {"phi_zero", p.phi_zero},
           {"quotient_pq_element", p.quotient_pq_element ? json(*p.quotient_pq_element) : json(nullptr)},
           {"contradiction_found", p.contradiction_found}};
}

json lattice_to_json(const Lattice& l, std::span<const PhiReport> annotations) {
  json j;
  j["subgroups"] = json::array();
  j["order"] = json::array();
  j["exponent"] = json::array();
  j["phi"] = json::array();
  for (std::size_t i = 0; i < l.size(); ++i) {
    j["subgroups"].push_back(l[i]);
    j["order"].push_back(l[i].size());
    j["exponent"].push_back(annotations[i].exponent);
    j["phi"].push_back(annotations[i].phi);
  }
  j["edges"] = json::array();
  for (auto [lo, hi] : l.covers()) j["edges"].push_back({lo, hi});
  return j;
}

std::string format_shapes(const std::vector<std::pair<std::uint64_t, SylowShape>>& shapes) {
  std::string out;
  for (const auto& [p, s] : shapes) {
    if (!out.empty()) out += ',';
    out += std::to_string(p) + ':' + std::string(to_string(s));
  }
  return out.empty() ? "-" : out;
}

}  // namespace gphi
