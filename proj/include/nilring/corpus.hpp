#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "nilring/ring.hpp"

namespace nilring {

/// One corpus row: a ring to build plus the caps its checks may use.
struct CorpusEntry {
    RingSpec spec;
    Caps caps;
};

struct Corpus {
    std::vector<CorpusEntry> entries;
    /// Optional fixed check selection; empty means the whole registry.
    std::vector<std::string> selection;
};

/// Built-in roster: Z/2..Z/36, products of cyclic rings up to order 64, and
/// the constant-diagonal upper-triangular rings over Z/2 and Z/3 (the latter
/// with a widened module-hom target cap so its hom scans cover the whole
/// ring).
Corpus default_corpus();

// RingSpec <-> JSON: {"kind":"cyclic","n":12}, {"kind":"ut3","m":2},
// {"kind":"product","factors":[...]}, {"kind":"tables","path":"ring.tbl"},
// {"kind":"quotient","base":{...},"generators":[...]}.
nlohmann::json ring_spec_to_json(const RingSpec& spec);
RingSpec ring_spec_from_json(const nlohmann::json& j);

nlohmann::json caps_to_json(const Caps& caps);
Caps caps_from_json(const nlohmann::json& j, Caps base);

/// Corpus file: {"caps": {...}?, "selection": [...]?, "rings": [spec...]};
/// each ring may carry its own "caps" patch on top of the file-level caps.
Corpus parse_corpus_json(const std::string& text);
Corpus load_corpus_file(const std::string& path);
std::string corpus_to_json(const Corpus& corpus);

}  // namespace nilring
