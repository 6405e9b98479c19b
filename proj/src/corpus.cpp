#include "nilring/corpus.hpp"

#include <fstream>
#include <sstream>

#include "nilring/errors.hpp"

namespace nilring {

Corpus default_corpus() {
    Corpus out;
    for (int n = 2; n <= 36; ++n) out.entries.push_back({RingSpec::cyclic(n), Caps{}});
    const std::vector<std::vector<int>> product_shapes = {
        {2, 2}, {2, 4}, {3, 3}, {2, 2, 2}, {4, 4}, {6, 6}, {2, 8}, {8, 8}};
    for (const auto& shape : product_shapes) {
        std::vector<RingSpec> factors;
        for (int n : shape) factors.push_back(RingSpec::cyclic(n));
        out.entries.push_back({RingSpec::product(std::move(factors)), Caps{}});
    }
    out.entries.push_back({RingSpec::ut3(2), Caps{}});
    Caps wide;  // ut3 over Z/3 has order 81; let module-hom targets span it
    wide.hom_target_cap = 96;
    out.entries.push_back({RingSpec::ut3(3), wide});
    return out;
}

nlohmann::json ring_spec_to_json(const RingSpec& spec) {
    nlohmann::json j;
    switch (spec.kind) {
        case RingSpec::Kind::cyclic:
            j["kind"] = "cyclic";
            j["n"] = spec.n;
            break;
        case RingSpec::Kind::ut3:
            j["kind"] = "ut3";
            j["m"] = spec.n;
            break;
        case RingSpec::Kind::product: {
            j["kind"] = "product";
            nlohmann::json fs = nlohmann::json::array();
            for (const RingSpec& f : spec.factors) fs.push_back(ring_spec_to_json(f));
            j["factors"] = std::move(fs);
            break;
        }
        case RingSpec::Kind::quotient:
            j["kind"] = "quotient";
            j["base"] = ring_spec_to_json(*spec.base);
            j["generators"] = spec.quotient_gens;
            break;
        case RingSpec::Kind::tables:
            j["kind"] = "tables";
            j["path"] = spec.path;
            break;
    }
    return j;
}

RingSpec ring_spec_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
        throw CorpusParseError("ring spec must be an object with a \"kind\" string");
    const std::string kind = j["kind"].get<std::string>();
    RingSpec spec;
    if (kind == "cyclic") {
        if (!j.contains("n") || !j["n"].is_number_integer())
            throw CorpusParseError("cyclic spec needs an integer \"n\"");
        spec = RingSpec::cyclic(j["n"].get<int>());
    } else if (kind == "ut3") {
        if (!j.contains("m") || !j["m"].is_number_integer())
            throw CorpusParseError("ut3 spec needs an integer \"m\"");
        spec = RingSpec::ut3(j["m"].get<int>());
    } else if (kind == "product") {
        if (!j.contains("factors") || !j["factors"].is_array())
            throw CorpusParseError("product spec needs a \"factors\" array");
        std::vector<RingSpec> factors;
        for (const auto& f : j["factors"]) factors.push_back(ring_spec_from_json(f));
        spec.kind = RingSpec::Kind::product;
        spec.factors = std::move(factors);
    } else if (kind == "quotient") {
        if (!j.contains("base"))
            throw CorpusParseError("quotient spec needs a \"base\" ring spec");
        if (!j.contains("generators") || !j["generators"].is_array())
            throw CorpusParseError("quotient spec needs a \"generators\" array");
        spec.kind = RingSpec::Kind::quotient;
        spec.base = std::make_shared<RingSpec>(ring_spec_from_json(j["base"]));
        for (const auto& g : j["generators"]) {
            if (!g.is_number_integer())
                throw CorpusParseError("quotient generators must be integers");
            spec.quotient_gens.push_back(g.get<int>());
        }
    } else if (kind == "tables") {
        if (!j.contains("path") || !j["path"].is_string())
            throw CorpusParseError("tables spec needs a \"path\" string");
        spec.kind = RingSpec::Kind::tables;
        spec.path = j["path"].get<std::string>();
    } else {
        throw CorpusParseError("unknown ring spec kind: " + kind);
    }
    try {
        spec.validate();
    } catch (const InvalidParameter& e) {
        throw CorpusParseError(e.what());
    }
    return spec;
}

nlohmann::json caps_to_json(const Caps& caps) {
    return nlohmann::json{{"max_order", caps.max_order},
                          {"endo_cap", caps.endo_cap},
                          {"hom_rank_cap", caps.hom_rank_cap},
                          {"hom_target_cap", caps.hom_target_cap},
                          {"hunt_budget", caps.hunt_budget}};
}

Caps caps_from_json(const nlohmann::json& j, Caps base) {
    if (!j.is_object()) throw CorpusParseError("caps must be an object");
    auto take = [&](const char* key, auto& slot) {
        if (!j.contains(key)) return;
        if (!j[key].is_number_integer())
            throw CorpusParseError(std::string("caps field \"") + key + "\" must be an integer");
        slot = j[key].get<std::remove_reference_t<decltype(slot)>>();
    };
    take("max_order", base.max_order);
    take("endo_cap", base.endo_cap);
    take("hom_rank_cap", base.hom_rank_cap);
    take("hom_target_cap", base.hom_target_cap);
    take("hunt_budget", base.hunt_budget);
    return base;
}

Corpus parse_corpus_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw CorpusParseError(std::string("corpus is not valid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("rings") || !j["rings"].is_array())
        throw CorpusParseError("corpus must be an object with a \"rings\" array");
    Corpus out;
    Caps file_caps;
    if (j.contains("caps")) file_caps = caps_from_json(j["caps"], Caps{});
    if (j.contains("selection")) {
        if (!j["selection"].is_array())
            throw CorpusParseError("corpus \"selection\" must be an array of check ids");
        for (const auto& s : j["selection"]) {
            if (!s.is_string())
                throw CorpusParseError("corpus \"selection\" must be an array of check ids");
            out.selection.push_back(s.get<std::string>());
        }
    }
    for (const auto& r : j["rings"]) {
        CorpusEntry entry{ring_spec_from_json(r), file_caps};
        if (r.is_object() && r.contains("caps")) entry.caps = caps_from_json(r["caps"], file_caps);
        out.entries.push_back(std::move(entry));
    }
    return out;
}

Corpus load_corpus_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CorpusParseError("cannot open corpus file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_corpus_json(buf.str());
}

std::string corpus_to_json(const Corpus& corpus) {
    nlohmann::json j;
    j["caps"] = caps_to_json(Caps{});
    if (!corpus.selection.empty()) j["selection"] = corpus.selection;
    nlohmann::json rings = nlohmann::json::array();
    const Caps file_caps;
    for (const CorpusEntry& e : corpus.entries) {
        nlohmann::json r = ring_spec_to_json(e.spec);
        nlohmann::json patch;
        if (e.caps.max_order != file_caps.max_order) patch["max_order"] = e.caps.max_order;
        if (e.caps.endo_cap != file_caps.endo_cap) patch["endo_cap"] = e.caps.endo_cap;
        if (e.caps.hom_rank_cap != file_caps.hom_rank_cap)
            patch["hom_rank_cap"] = e.caps.hom_rank_cap;
        if (e.caps.hom_target_cap != file_caps.hom_target_cap)
            patch["hom_target_cap"] = e.caps.hom_target_cap;
        if (e.caps.hunt_budget != file_caps.hunt_budget) patch["hunt_budget"] = e.caps.hunt_budget;
        if (!patch.empty()) r["caps"] = std::move(patch);
        rings.push_back(std::move(r));
    }
    j["rings"] = std::move(rings);
    return j.dump(2) + "\n";
}

}  // namespace nilring
