// This file is part of ktdraw, exact drawings and book embeddings of k-trees.
// SPDX-License-Identifier: MIT
#pragma once

#include <string>

#include "json.hpp"
#include "ktdraw/book.hpp"
#include "ktdraw/draw.hpp"
#include "ktdraw/graph.hpp"
#include "ktdraw/oracle.hpp"
#include "ktdraw/verify.hpp"

namespace ktdraw {

// Exact decimal-free rational strings: "3" or "-5/7", always in lowest terms
// with a positive denominator. rat_from_string accepts either form and
// throws std::invalid_argument on anything else (including "1.5").
std::string rat_to_string(const Rat& q);
Rat rat_from_string(const std::string& s);

// Graph files: {"n": int, "edges": [[u,v], ...]} with u < v, ascending.
nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

// Build files carry the graph fields plus {"k", "base", "additions":
// [{"v", "clique"}, ...]}; the graph fields are redundant (realize
// reconstructs them) and are validated against the build when present.
nlohmann::json build_to_json(const KTreeBuild& b);
KTreeBuild build_from_json(const nlohmann::json& j);

// {"order": [...], "pages": {"u-v": p, ...}, "page_count": p}
nlohmann::json book_to_json(const BookEmbedding& e);
BookEmbedding book_from_json(const nlohmann::json& j);

// {"positions": {"v": ["x", "y"], ...}, "colours": {"u-v": c, ...},
//  "colour_count": c} with exact rational coordinate strings
nlohmann::json drawing_to_json(const Drawing& d);
Drawing drawing_from_json(const nlohmann::json& j);

// Bare edge-colouring object {"u-v": c, ...}, as used inside the other
// artifacts and as a standalone file for the refuters.
nlohmann::json colouring_to_json(const EdgeColouring& c);
EdgeColouring colouring_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const Report& r);
nlohmann::json witness_to_json(const MonoWitness& w);
nlohmann::json oracle_to_json(const OracleResult& r);

// Read or write one JSON document; IO or parse failures surface as
// std::invalid_argument naming the path.
nlohmann::json load_json(const std::string& path);
void save_json(const std::string& path, const nlohmann::json& j);

}  // namespace ktdraw
