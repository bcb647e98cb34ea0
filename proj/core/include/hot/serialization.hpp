#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "hot/hypergraph.hpp"

namespace hot {

/// Canonical HoT interchange document (UTF-8 JSON):
///
///   { "hyperedges": { id: { "label": str, "members": [node ids, sorted] } },
///     "nodes":      { id: { "text": str } } }
///
/// Keys are sorted and the output is indented by two spaces with a trailing
/// newline, so equal graphs serialize to identical bytes.
std::string serialize(const Hypergraph& hot);

/// Throws ParseError (with line/column or JSON path) on malformed input and
/// ValidationError listing offenders when a member id is not a node.
Hypergraph deserialize(std::string_view bytes);

void save_hypergraph(const Hypergraph& hot, const std::filesystem::path& path);
Hypergraph load_hypergraph(const std::filesystem::path& path);

}  // namespace hot
