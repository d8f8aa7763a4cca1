#include "mccoy/ringio.hpp"

#include <fstream>

namespace mccoy {

using Index = FiniteRing::Index;

nlohmann::ordered_json ring_to_json(const FiniteRing& ring) {
    if (!ring.is_table())
        throw UnsupportedOperation("cannot export a structural ring: " +
                                   ring.label());
    const auto n = static_cast<Index>(ring.size());
    nlohmann::ordered_json doc;
    doc["size"] = n;
    doc["zero"] = ring.zero();
    if (ring.unital())
        doc["one"] = *ring.one();
    else
        doc["one"] = nullptr;
    auto table = [&](const std::vector<Index>& flat) {
        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        for (Index a = 0; a < n; ++a) {
            nlohmann::ordered_json row = nlohmann::ordered_json::array();
            for (Index b = 0; b < n; ++b) row.push_back(flat[a * n + b]);
            rows.push_back(std::move(row));
        }
        return rows;
    };
    doc["add"] = table(ring.add_table());
    doc["mul"] = table(ring.mul_table());
    doc["label"] = ring.label();
    return doc;
}

RingPtr ring_from_json(const nlohmann::json& doc) {
    const auto size = doc.at("size").get<std::size_t>();
    const auto zero = doc.at("zero").get<Index>();
    std::optional<Index> one;
    if (!doc.at("one").is_null()) one = doc.at("one").get<Index>();
    auto read_table = [&](const char* key) {
        const auto& rows = doc.at(key);
        if (!rows.is_array() || rows.size() != size)
            throw RingError(std::string(key) + " table has wrong shape");
        std::vector<Index> flat;
        flat.reserve(size * size);
        for (const auto& row : rows) {
            if (!row.is_array() || row.size() != size)
                throw RingError(std::string(key) + " table has wrong shape");
            for (const auto& v : row) flat.push_back(v.get<Index>());
        }
        return flat;
    };
    auto ring = FiniteRing::from_tables(doc.value("label", std::string("imported")),
                                        size, read_table("add"), read_table("mul"),
                                        zero, one);
    auto violations = verify_axioms(*ring);
    if (!violations.empty())
        throw RingError("imported tables violate ring axioms: " +
                        violations.front().str());
    auto mut = std::const_pointer_cast<FiniteRing>(ring);
    mut->set_construction({RingKind::Imported, {}, {}});
    return ring;
}

void export_ring(const FiniteRing& ring, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw RingError("cannot write " + path);
    out << ring_to_json(ring).dump(2) << "\n";
}

RingPtr import_ring(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw RingError("cannot read " + path);
    nlohmann::json doc;
    in >> doc;
    return ring_from_json(doc);
}

}  // namespace mccoy
