#pragma once

#include <string>
#include <string_view>

#include "k2ham/embedding.hpp"
#include "k2ham/graph.hpp"

namespace k2ham {

// graph6 / sparse6 follow the nauty "formats.txt" description bit for bit.
// Only the one-byte (n <= 62) and four-byte (63 <= n <= 258047) size headers
// exist here; anything above kMaxVertices is rejected with CapacityError.
// A trailing LF or CRLF is accepted; a leading ">>graph6<<" / ">>sparse6<<"
// header is skipped.

Graph decode_graph6(std::string_view line);
std::string encode_graph6(const Graph& g);

Graph decode_sparse6(std::string_view line);
std::string encode_sparse6(const Graph& g);

/// Dispatches on the first byte: ':' means sparse6, anything else graph6.
Graph decode_graph_line(std::string_view line);

/// Edge-list text: "n m", then m lines "u v" (0-based).  Lines starting with
/// '#' and blank lines are ignored.
Graph decode_edge_list(std::string_view text);
std::string encode_edge_list(const Graph& g);

/// Embedding text: one line "v: w1 w2 ... wd" per vertex, neighbours in
/// clockwise order.  The vertex count is the number of such lines.
Embedding decode_embedding(std::string_view text);
std::string encode_embedding(const Embedding& emb);

}  // namespace k2ham
