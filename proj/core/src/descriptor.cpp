#include "gphi/descriptor.hpp"

#include <cstdint>
#include <fstream>

#include "gphi/errors.hpp"
#include "gphi/number_theory.hpp"

namespace gphi {

namespace {

using nlohmann::json;

struct KindInfo {
  GroupKind kind;
  std::string_view name;
  std::vector<std::string_view> required;
};

const std::vector<KindInfo>& kinds() {
  static const std::vector<KindInfo> table = {
      {GroupKind::cyclic, "cyclic", {"n"}},
      {GroupKind::elementary_abelian, "elementary_abelian", {"p", "k"}},
      {GroupKind::dihedral, "dihedral", {"order"}},
      {GroupKind::generalized_quaternion, "generalized_quaternion", {"order"}},
      {GroupKind::modular_M_p3, "modular_M_p3", {"p"}},
      {GroupKind::extraspecial_E_p3, "extraspecial_E_p3", {"p"}},
      {GroupKind::symmetric, "symmetric", {"n"}},
      {GroupKind::alternating, "alternating", {"n"}},
      {GroupKind::direct_product, "direct_product", {}},
      {GroupKind::semidirect_product, "semidirect_product", {}},
      {GroupKind::schmidt, "schmidt", {"p", "q"}},
      {GroupKind::cayley_file, "cayley_file", {}},
  };
  return table;
}

[[noreturn]] void parse_error(const std::string& msg) { throw GroupError(ErrorKind::ParseError, msg); }

std::uint64_t read_uint(const json& j, std::string_view key) {
  const auto it = j.find(std::string(key));
  if (it == j.end()) parse_error("descriptor is missing key '" + std::string(key) + "'");
  if (!it->is_number_integer() || (it->is_number_integer() && it->get<std::int64_t>() < 0)) {
    parse_error("descriptor key '" + std::string(key) + "' must be a non-negative integer");
  }
  return it->get<std::uint64_t>();
}

void check_budget(std::uint64_t order, std::size_t max_order, GroupKind kind) {
  if (order > max_order) {
    throw GroupError(ErrorKind::SizeBudgetExceeded, std::string(to_string(kind)) + " of order " +
                                                        std::to_string(order) + " exceeds the size budget " +
                                                        std::to_string(max_order));
  }
}

std::uint64_t cube_order(std::uint64_t p) {
  return p > (1U << 20) ? UINT64_MAX : p * p * p;
}

unsigned small(std::uint64_t v, const char* what) {
  if (v > 64) throw GroupError(ErrorKind::InvalidParameter, std::string(what) + " is too large");
  return static_cast<unsigned>(v);
}

}  // namespace

std::string_view to_string(GroupKind kind) {
  for (const auto& k : kinds()) {
    if (k.kind == kind) return k.name;
  }
  return "unknown";
}

GroupDescriptor GroupDescriptor::from_json(const json& j) {
  if (!j.is_object()) parse_error("descriptor must be a JSON object");
  const auto kind_it = j.find("kind");
  if (kind_it == j.end() || !kind_it->is_string()) parse_error("descriptor needs a string 'kind'");
  const auto kind_name = kind_it->get<std::string>();
  const KindInfo* info = nullptr;
  for (const auto& k : kinds()) {
    if (k.name == kind_name) info = &k;
  }
  if (info == nullptr) parse_error("unknown descriptor kind '" + kind_name + "'");

  GroupDescriptor d;
  d.kind = info->kind;
  for (auto key : info->required) d.params[std::string(key)] = read_uint(j, key);

  switch (d.kind) {
    case GroupKind::schmidt:
      d.params["q_exp"] = j.contains("q_exp") ? read_uint(j, "q_exp") : 1;
      break;
    case GroupKind::direct_product: {
      const auto it = j.find("factors");
      if (it == j.end() || !it->is_array() || it->empty()) {
        parse_error("direct_product needs a non-empty 'factors' array");
      }
      for (const auto& f : *it) d.children.push_back(from_json(f));
      break;
    }
    case GroupKind::semidirect_product: {
      if (!j.contains("normal") || !j.contains("acting")) parse_error("semidirect_product needs 'normal' and 'acting'");
      d.children.push_back(from_json(j.at("normal")));
      d.children.push_back(from_json(j.at("acting")));
      const auto it = j.find("action");
      if (it == j.end() || !it->is_array()) parse_error("semidirect_product needs an 'action' array of permutations");
      for (const auto& row : *it) {
        if (!row.is_array()) parse_error("each action entry must be an array of element ids");
        std::vector<ElementId> perm;
        for (const auto& x : row) {
          if (!x.is_number_integer() || x.get<std::int64_t>() < 0) parse_error("action entries must be element ids");
          perm.push_back(x.get<ElementId>());
        }
        d.action.images.push_back(std::move(perm));
      }
      break;
    }
    case GroupKind::cayley_file: {
      const auto it = j.find("path");
      if (it == j.end() || !it->is_string()) parse_error("cayley_file needs a string 'path'");
      d.path = it->get<std::string>();
      break;
    }
    default:
      break;
  }
  return d;
}

json GroupDescriptor::to_json() const {
  json j;
  j["kind"] = std::string(to_string(kind));
  for (const auto& [k, v] : params) j[k] = v;
  if (kind == GroupKind::direct_product) {
    j["factors"] = json::array();
    for (const auto& c : children) j["factors"].push_back(c.to_json());
  } else if (kind == GroupKind::semidirect_product) {
    j["normal"] = children.at(0).to_json();
    j["acting"] = children.at(1).to_json();
    j["action"] = action.images;
  } else if (kind == GroupKind::cayley_file) {
    j["path"] = path;
  }
  return j;
}

GroupTable load_cayley_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) parse_error("cannot open Cayley table file '" + path.string() + "'");
  return read_cayley(in);
}

GroupTable build_group(const GroupDescriptor& d, const BuildOptions& options) {
  const std::size_t budget = options.max_order;
  auto param = [&](const char* key) { return d.params.at(key); };
  switch (d.kind) {
    case GroupKind::cyclic:
      return cyclic(param("n"), budget);
    case GroupKind::elementary_abelian:
      return elementary_abelian(param("p"), small(param("k"), "k"), budget);
    case GroupKind::dihedral:
      return dihedral(param("order"), budget);
    case GroupKind::generalized_quaternion:
      return generalized_quaternion(param("order"), budget);
    case GroupKind::modular_M_p3:
      check_budget(cube_order(param("p")), budget, d.kind);
      return modular_p3(param("p"));
    case GroupKind::extraspecial_E_p3:
      check_budget(cube_order(param("p")), budget, d.kind);
      return extraspecial_p3(param("p"));
    case GroupKind::symmetric:
      return symmetric(small(param("n"), "n"), budget);
    case GroupKind::alternating:
      return alternating(small(param("n"), "n"), budget);
    case GroupKind::direct_product: {
      GroupTable acc = build_group(d.children.front(), options);
      for (std::size_t i = 1; i < d.children.size(); ++i) {
        acc = direct_product(acc, build_group(d.children[i], options), budget);
      }
      return acc;
    }
    case GroupKind::semidirect_product:
      return semidirect_product(build_group(d.children.at(0), options), build_group(d.children.at(1), options),
                                d.action, budget);
    case GroupKind::schmidt:
      return schmidt_group(param("p"), param("q"), small(param("q_exp"), "q_exp"), budget);
    case GroupKind::cayley_file: {
      std::filesystem::path p = d.path;
      if (p.is_relative()) p = options.base_dir / p;
      auto g = load_cayley_file(p);
      check_budget(g.order(), budget, d.kind);
      return g;
    }
  }
  parse_error("unhandled descriptor kind");
}

}  // namespace gphi
