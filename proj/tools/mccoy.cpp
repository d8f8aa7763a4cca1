#include <chrono>
#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "mccoy/checker.hpp"
#include "mccoy/constructions.hpp"
#include "mccoy/dsl.hpp"
#include "mccoy/report.hpp"
#include "mccoy/ringio.hpp"
#include "mccoy/suite.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitEval = 2;
constexpr int kExitRefuted = 3;

const std::map<std::string, mccoy::Property> kProperties{
    {"right-mccoy", mccoy::Property::RightMcCoy},
    {"left-mccoy", mccoy::Property::LeftMcCoy},
    {"armendariz", mccoy::Property::Armendariz},
    {"reversible", mccoy::Property::Reversible},
    {"semicommutative", mccoy::Property::Semicommutative},
    {"reduced", mccoy::Property::Reduced},
    {"abelian", mccoy::Property::Abelian},
};

std::int64_t ms_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start)
        .count();
}

int cmd_check(const std::string& ring_expr, const std::string& property,
              unsigned degree, const std::string& format, unsigned threads) {
    auto it = kProperties.find(property);
    if (it == kProperties.end()) {
        std::cerr << "error: unknown property '" << property << "'\n";
        return kExitUsage;
    }
    auto start = std::chrono::steady_clock::now();
    auto ring = mccoy::dsl::eval(ring_expr).ring;
    auto verdict = mccoy::check_property(ring, it->second, degree, threads);
    auto report = mccoy::make_report(ring_expr, ring, verdict, ms_since(start));

    if (format == "json") {
        std::cout << report.dump(2) << "\n";
    } else {
        std::cout << ring_expr << " : " << property << " : "
                  << mccoy::verdict_tag(verdict);
        if (verdict.bound) std::cout << "(" << *verdict.bound << ")";
        std::cout << "\n";
        if (verdict.witness) {
            std::cout << "  f = " << report["witness"]["f"].get<std::string>()
                      << "\n";
            std::cout << "  g = " << report["witness"]["g"].get<std::string>()
                      << "\n";
            std::cout << "  side = "
                      << report["witness"]["side"].get<std::string>() << "\n";
        }
    }
    return verdict.refuted ? kExitRefuted : kExitOk;
}

int cmd_info(const std::string& ring_expr, const std::string& format) {
    auto result = mccoy::dsl::eval(ring_expr);
    const auto& ring = *result.ring;
    nlohmann::ordered_json doc;
    doc["ring"] = ring_expr;
    doc["label"] = ring.label();
    doc["size"] = ring.size();
    doc["unital"] = ring.unital();
    doc["backend"] = ring.is_table() ? "table" : "structural";
    if (ring.is_table()) {
        auto idem = mccoy::idempotents(ring);
        doc["idempotents"] = idem.size();
        if (ring.unital()) doc["units"] = mccoy::units(ring).size();
        doc["ideals"] = mccoy::ideals(result.ring).size();
    }
    if (format == "json") {
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << "ring:     " << ring_expr << "\n";
        std::cout << "label:    " << ring.label() << "\n";
        std::cout << "size:     " << ring.size() << "\n";
        std::cout << "unital:   " << (ring.unital() ? "yes" : "no") << "\n";
        std::cout << "backend:  " << doc["backend"].get<std::string>() << "\n";
        if (doc.contains("idempotents"))
            std::cout << "idempotents: " << doc["idempotents"].get<std::size_t>()
                      << "\n";
        if (doc.contains("units"))
            std::cout << "units:    " << doc["units"].get<std::size_t>() << "\n";
        if (doc.contains("ideals"))
            std::cout << "ideals:   " << doc["ideals"].get<std::size_t>() << "\n";
    }
    return kExitOk;
}

int cmd_verify(const std::optional<std::string>& item, unsigned degree,
               const std::string& format, unsigned threads) {
    std::vector<mccoy::suite::ItemResult> results;
    if (item)
        results.push_back(mccoy::suite::run_item(*item, degree, threads));
    else
        results = mccoy::suite::run_all(degree, threads);

    bool all_pass = true;
    if (format == "json") {
        std::cout << mccoy::suite::items_to_json(results).dump(2) << "\n";
        for (const auto& r : results) all_pass = all_pass && r.passed;
    } else {
        for (const auto& r : results) {
            std::cout << (r.passed ? "PASS" : "FAIL") << "  " << r.key << "  ("
                      << r.elapsed_ms << " ms)\n";
            for (const auto& c : r.checks)
                std::cout << "    " << (c.pass ? "ok  " : "FAIL") << " "
                          << c.description << "\n";
            all_pass = all_pass && r.passed;
        }
        std::cout << (all_pass ? "all items passed" : "some items FAILED")
                  << "\n";
    }
    return all_pass ? kExitOk : kExitRefuted;
}

int cmd_export(const std::string& ring_expr, const std::string& path) {
    auto ring = mccoy::dsl::eval(ring_expr).ring;
    mccoy::export_ring(*ring, path);
    std::cout << "wrote " << path << " (" << ring->size() << " elements)\n";
    return kExitOk;
}

int cmd_import(const std::string& path, const std::string& format) {
    auto ring = mccoy::import_ring(path);
    nlohmann::ordered_json doc;
    doc["label"] = ring->label();
    doc["size"] = ring->size();
    doc["unital"] = ring->unital();
    doc["axioms"] = "verified";
    if (format == "json")
        std::cout << doc.dump(2) << "\n";
    else
        std::cout << "imported " << ring->label() << ": " << ring->size()
                  << " elements, axioms verified\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Exact laboratory for McCoy-type properties of finite rings.\n"
        "Ring expressions: Z(n), prod(e,...), M(n,e), T(n,e), Rn(n,e), V(e),\n"
        "trunc(e,n), skewquot(e,endo,n) with endo in id|swap|diagcollapse|\n"
        "table(\"file\"), corner(e,[v1,...,vk]) with the idempotent given as\n"
        "its entry vector in the base ring's codec order, quot(e,k) with k the\n"
        "index into the (size, members)-sorted ideal list, op(e)."};
    app.require_subcommand(1);

    std::string ring_expr, property, format = "text", path;
    unsigned degree = 2, threads = 0;
    std::optional<std::string> item;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "Output format")
            ->check(CLI::IsMember({"text", "json"}));
    };

    auto* check = app.add_subcommand("check", "Decide a property up to a bound");
    check->add_option("--ring", ring_expr, "Ring expression")->required();
    check->add_option("--property", property,
                      "right-mccoy | left-mccoy | armendariz | reversible | "
                      "semicommutative | reduced | abelian")
        ->required();
    check->add_option("--degree", degree, "Degree bound D (default 2)");
    check->add_option("--threads", threads, "Worker threads (0 = hardware)");
    add_format(check);

    auto* info = app.add_subcommand("info", "Describe a ring");
    info->add_option("--ring", ring_expr, "Ring expression")->required();
    add_format(info);

    auto* verify = app.add_subcommand("verify-paper",
                                      "Run the reproduction manifest");
    bool all_items = false;
    auto* item_opt =
        verify->add_option("--item", item, "Single manifest item key");
    verify->add_flag("--all", all_items, "Run every manifest item")
        ->excludes(item_opt);
    verify->add_option("--degree", degree, "Degree bound for verifications");
    verify->add_option("--threads", threads, "Worker threads (0 = hardware)");
    add_format(verify);

    auto* exp = app.add_subcommand("export", "Write a ring's tables as JSON");
    exp->add_option("--ring", ring_expr, "Ring expression")->required();
    exp->add_option("--out", path, "Output file")->required();

    auto* imp = app.add_subcommand("import", "Load and validate ring tables");
    imp->add_option("--file", path, "Input file")->required();
    add_format(imp);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (check->parsed())
            return cmd_check(ring_expr, property, degree, format, threads);
        if (info->parsed()) return cmd_info(ring_expr, format);
        if (verify->parsed()) return cmd_verify(item, degree, format, threads);
        if (exp->parsed()) return cmd_export(ring_expr, path);
        if (imp->parsed()) return cmd_import(path, format);
    } catch (const mccoy::dsl::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitEval;
    } catch (const mccoy::dsl::EvalError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitEval;
    } catch (const mccoy::UnsupportedOperation& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitEval;
    } catch (const mccoy::RingError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitEval;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitEval;
    }
    return kExitUsage;
}
