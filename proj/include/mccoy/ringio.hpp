#ifndef MCCOY_RINGIO_HPP
#define MCCOY_RINGIO_HPP

#include <string>

#include <json.hpp>

#include "mccoy/ring.hpp"

namespace mccoy {

/// { "size": n, "zero": i, "one": i|null, "add": [[...]], "mul": [[...]],
///   "label": s }; neg is derived on load, and import re-validates axioms.
nlohmann::ordered_json ring_to_json(const FiniteRing& ring);
RingPtr ring_from_json(const nlohmann::json& doc);

void export_ring(const FiniteRing& ring, const std::string& path);
RingPtr import_ring(const std::string& path);

}  // namespace mccoy

#endif
