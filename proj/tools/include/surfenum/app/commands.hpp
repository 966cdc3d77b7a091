#pragma once

// The surfenum command line: enumerate, classify, realize, verify, report.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "surfenum/app/catalog.hpp"
#include "surfenum/realizer.hpp"

namespace surfenum::app {

enum ExitCode : int { kOk = 0, kFailure = 1, kUsage = 2 };

/// Parses `args` (without the program name) and runs one subcommand.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "S2:2 RP2:1 total:3": types in display order, zero counts omitted.
std::string type_summary(const std::vector<SurfaceRecord>& records);

/// Counts by n and type, totals and first appearance of every type.
nlohmann::json build_report(const Catalog& catalog);
void print_report_table(std::ostream& out, const nlohmann::json& report);

struct CampaignSelection {
  std::optional<int> n;
  std::optional<std::string> type;  // TopologicalType::name()
  bool include_realized = false;
};

struct CampaignOptions {
  RealizationConfig config;
  bool shrink = false;
  int perturb_attempts = 4;  // per pool entry in the recycling pass
};

struct CampaignSummary {
  std::size_t targets = 0;
  std::size_t fresh = 0;
  std::size_t recycled = 0;
  std::size_t perturbed = 0;
  std::size_t unrealized = 0;
};

/// Realizes the selected orientable entries in place and writes their
/// coordinate and OFF files; the caller saves the catalog.
CampaignSummary run_realize_campaign(Catalog& catalog, const CampaignSelection& selection,
                                     const CampaignOptions& options, std::ostream& log);

}  // namespace surfenum::app
