#include "mccoy/report.hpp"

#include "mccoy/poly.hpp"

namespace mccoy {

namespace {

bool degree_free(Property p) {
    switch (p) {
        case Property::Reversible:
        case Property::Semicommutative:
        case Property::Reduced:
        case Property::Abelian:
            return true;
        default:
            return false;
    }
}

}  // namespace

std::string verdict_tag(const Verdict& v) {
    if (degree_free(v.property)) return v.refuted ? "fails" : "holds";
    return v.refuted ? "refuted" : "verified_up_to";
}

nlohmann::ordered_json make_report(const std::string& ring_expr,
                                   const RingPtr& ring, const Verdict& v,
                                   std::int64_t elapsed_ms,
                                   const std::optional<std::string>& suite_item) {
    nlohmann::ordered_json doc;
    doc["ring"] = ring_expr;
    doc["property"] = property_name(v.property);
    if (v.bound)
        doc["bound"] = *v.bound;
    else
        doc["bound"] = nullptr;
    doc["verdict"] = verdict_tag(v);
    if (v.witness) {
        const auto& w = *v.witness;
        nlohmann::ordered_json jw;
        if (!w.elems.empty()) {
            std::string elems;
            for (std::size_t i = 0; i < w.elems.size(); ++i)
                elems += (i ? ", " : "") + ring->format(w.elems[i]);
            jw["f"] = elems;
            jw["g"] = w.note;
            jw["side"] = w.side == Side::Right ? "right" : "left";
            jw["coeff_vectors"] = nlohmann::ordered_json::array({w.elems});
        } else {
            jw["f"] = render_poly(*ring, w.f);
            jw["g"] = render_poly(*ring, w.g);
            jw["side"] = w.side == Side::Right ? "right" : "left";
            jw["coeff_vectors"] = nlohmann::ordered_json::array({w.f, w.g});
            if (w.cross)
                jw["cross"] = nlohmann::ordered_json::array(
                    {w.cross->first, w.cross->second});
        }
        doc["witness"] = std::move(jw);
    }
    doc["elapsed_ms"] = elapsed_ms;
    if (suite_item) doc["suite_item"] = *suite_item;
    return doc;
}

}  // namespace mccoy
