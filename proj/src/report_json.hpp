#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "jslope/pipeline.hpp"

namespace jslope::detail {

struct ReportEntry {
  KnotParams params;
  const Report* report = nullptr;  // null on a fault
  std::string error_kind;
  std::string error;
};

nlohmann::json params_json(const KnotParams& k);
nlohmann::json report_json(const Report& report);
nlohmann::json edgepath_json(const KnotParams& params, const EdgepathReport& rep);

std::string grid_json(const GridSpec& grid, const VerifyOptions& options, const GridSummary& summary,
                      const std::vector<ReportEntry>& entries);
std::string grid_csv(const std::vector<ReportEntry>& entries);

}  // namespace jslope::detail
