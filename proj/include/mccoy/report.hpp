#ifndef MCCOY_REPORT_HPP
#define MCCOY_REPORT_HPP

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "mccoy/checker.hpp"

namespace mccoy {

/// Builds the machine-readable check report; the layout is pinned by
/// report.schema.json. elapsed_ms is excluded from determinism guarantees.
nlohmann::ordered_json make_report(const std::string& ring_expr,
                                   const RingPtr& ring, const Verdict& verdict,
                                   std::int64_t elapsed_ms,
                                   const std::optional<std::string>& suite_item =
                                       std::nullopt);

std::string verdict_tag(const Verdict& verdict);

}  // namespace mccoy

#endif
