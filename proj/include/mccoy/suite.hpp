#ifndef MCCOY_SUITE_HPP
#define MCCOY_SUITE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "mccoy/checker.hpp"

namespace mccoy {
namespace suite {

struct ZooEntry {
    std::string name;
    RingPtr ring;
};

/// The standing collection of rings the invariant suites run over.
const std::vector<ZooEntry>& zoo();

struct CheckLine {
    std::string description;
    bool pass;
};

struct ItemResult {
    std::string key;
    unsigned bound;
    bool passed;
    std::vector<CheckLine> checks;
    std::int64_t elapsed_ms;
};

std::vector<std::string> item_keys();

/// Runs one manifest item. D is the default degree bound; refutation checks
/// that only need degree 1 stay pinned at 1.
ItemResult run_item(const std::string& key, unsigned D, unsigned threads);

std::vector<ItemResult> run_all(unsigned D, unsigned threads);

nlohmann::ordered_json items_to_json(const std::vector<ItemResult>& items);

}  // namespace suite
}  // namespace mccoy

#endif
