#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include "etagap/construction.hpp"
#include "etagap/group.hpp"

namespace etagap {

struct RunConfig {
  /// classes | product | verify | reproduce | spectrum | inspect
  std::string command;
  std::optional<std::string> group_path;
  bool corpus = false;
  std::optional<std::int64_t> p;
  std::optional<std::uint64_t> max_order;
  std::uint64_t cap = Limits{}.order_cap;
  std::optional<std::string> a;
  std::optional<std::string> b;
  /// a | b | size2
  std::optional<std::string> theorem;
  std::optional<std::string> out_path;
  /// jsonl | csv
  std::string format = "jsonl";
  unsigned jobs = 1;
  bool timing = false;
};

struct LoadedGroup {
  Group group;
  std::optional<ConstructionSpec> spec;
  std::string label;
};

/// Loads a construction spec (.json, .spec or any file starting with '{'),
/// a Cayley table (.tbl, .cayley) or a permutation group (.perm). Files
/// with other extensions are sniffed: a table has exactly n rows after the
/// header, anything else is read as generators.
LoadedGroup load_group(const std::string& path, const Limits& limits = {});

/// Word or "@role" selector for a named element of a construction.
Element select_element(const LoadedGroup& loaded, const std::string& selector);

/// Exit status: 0 consistent, 1 usage or input error, 2 a constraint was
/// violated. Reports go to `out` unless config.out_path is set.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace etagap
