#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "harmonium/solver.hpp"

namespace harmonium {

enum class Scope { all, regular33, cycle_families, greedy, reduction };

std::string_view to_string(Scope s) noexcept;
std::optional<Scope> parse_scope(std::string_view s);

enum class RowStatus { pass, fail, skipped };

std::string_view to_string(RowStatus s) noexcept;

/// One published value against the value computed here.
struct ReproduceRow {
  Scope scope = Scope::all;
  std::string graph_id;
  std::string quantity;
  /// "=" or "<=": computed must equal / not exceed expected.
  std::string relation = "=";
  int expected = 0;
  /// Absent when the run was skipped.
  std::optional<int> computed;
  RowStatus status = RowStatus::skipped;
  Seconds elapsed{0};
};

struct ReproduceOptions {
  /// Per-entry solver budget; an entry that runs out is SKIPPED.
  Seconds entry_budget{600.0};
  bool parallel_roots = false;
};

std::vector<ReproduceRow> reproduce(Scope scope, const ReproduceOptions &opt = {});

/// True when no row failed (skipped rows do not count as failures).
bool all_passed(const std::vector<ReproduceRow> &rows);

/// Fixed-width table, one row per line, with a header.
std::string format_table(const std::vector<ReproduceRow> &rows);

nlohmann::json to_json(const ReproduceRow &row);

}  // namespace harmonium
