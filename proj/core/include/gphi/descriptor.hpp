#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "gphi/constructors.hpp"
#include "gphi/group_table.hpp"

namespace gphi {

enum class GroupKind {
  cyclic,
  elementary_abelian,
  dihedral,
  generalized_quaternion,
  modular_M_p3,
  extraspecial_E_p3,
  symmetric,
  alternating,
  direct_product,
  semidirect_product,
  schmidt,
  cayley_file,
};

std::string_view to_string(GroupKind kind);

/// Declarative recipe for one group, as read from descriptor JSON:
///
///   {"kind":"cyclic","n":12}
///   {"kind":"elementary_abelian","p":3,"k":2}
///   {"kind":"dihedral","order":8}
///   {"kind":"generalized_quaternion","order":16}
///   {"kind":"modular_M_p3","p":3}  {"kind":"extraspecial_E_p3","p":3}
///   {"kind":"symmetric","n":4}  {"kind":"alternating","n":4}
///   {"kind":"direct_product","factors":[{...},{...}]}
///   {"kind":"semidirect_product","normal":{...},"acting":{...},"action":[[...],...]}
///   {"kind":"schmidt","p":2,"q":3,"q_exp":1}
///   {"kind":"cayley_file","path":"g.tbl"}
struct GroupDescriptor {
  GroupKind kind = GroupKind::cyclic;
  std::map<std::string, std::uint64_t> params;
  /// direct_product: the factors; semidirect_product: {normal, acting}.
  std::vector<GroupDescriptor> children;
  ActionTable action;
  std::string path;

  /// Throws ParseError on unknown kinds, missing keys or wrong types.
  static GroupDescriptor from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;
};

struct BuildOptions {
  std::size_t max_order = kDefaultMaxOrder;
  /// Relative cayley_file paths are resolved against this directory.
  std::filesystem::path base_dir = ".";
};

GroupTable build_group(const GroupDescriptor& d, const BuildOptions& options = {});

GroupTable load_cayley_file(const std::filesystem::path& path);

}  // namespace gphi
