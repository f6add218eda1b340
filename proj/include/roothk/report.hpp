#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "roothk/hk_analysis.hpp"

namespace roothk {

inline constexpr const char* kToolVersion = "0.1.0";

enum class CheckStatus { Pass, Fail, Skipped };
const char* to_string(CheckStatus s);

/// Exact values only: integers, rationals, flags and text.
using Value = std::variant<Integer, Rational, bool, std::string>;

struct CheckRecord {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  std::vector<std::pair<std::string, Value>> values;
  std::string paper_ref;

  CheckRecord& add(std::string key, Value v) {
    values.emplace_back(std::move(key), std::move(v));
    return *this;
  }
};

struct ReportDocument {
  std::string command;
  std::vector<std::pair<std::string, std::string>> spec_echo;
  std::vector<CheckRecord> checks;
  /// Wall time; only rendered when set, so default output stays reproducible.
  std::optional<std::string> timing_ms;

  std::size_t count(CheckStatus s) const;
  /// 0 when nothing failed, 1 otherwise.
  int exit_code() const;
};

std::string render_json(const ReportDocument& doc);
std::string render_tsv(const ReportDocument& doc);

std::string matrix_string(const IntMatrix& m);
std::string matrix_string(const RatMatrix& m);

ReportDocument cmd_analyze(const RootSystemSpec& spec, const LatticeSelector& selector,
                           const GroupCap& cap);
ReportDocument cmd_lemma_check(int max_rank);
ReportDocument cmd_sublattices(const RootSystemSpec& spec);
/// Known suites: "default". Throws InvalidSpec for anything else.
ReportDocument cmd_report(const std::string& suite, const GroupCap& cap);

/// The (family, rank) table exercised by the default suite:
/// A1-A8, B2-B7, C2-C7, D3-D8, E6-E8, F4, G2.
std::vector<RootSystemSpec> default_suite_specs();

}  // namespace roothk
