#pragma once

#include <functional>
#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "spexlab/graph.hpp"

namespace spexlab {

class Graph6Error : public std::runtime_error {
public:
    explicit Graph6Error(const std::string& what) : std::runtime_error(what) {}
};

/// Standard graph6 encoding (no trailing newline).
std::string graph6_encode(const Graph& g);

/// Decodes one graph6 line. A trailing '\n' or '\r\n' is tolerated.
Graph graph6_decode(std::string_view line);

/// Reads graph6 lines in order, calling `sink` for each decoded graph.
/// Blank lines and a leading ">>graph6<<" header are skipped. A malformed
/// line aborts the stream with a Graph6Error naming its 1-based line number.
/// Returns the number of graphs delivered.
std::size_t stream_graph6(std::istream& in, const std::function<void(Graph&&)>& sink);

} // namespace spexlab
