#pragma once

#include <cstddef>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "kprod/graph.hpp"

namespace kprod {

/// Malformed graph6 or edge-list input. `position` is a byte offset for
/// graph6 and a 1-based line number for edge lists.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what), position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// graph6: a size prefix, then the upper triangle column by column
/// (j = 1..n-1, i = 0..j-1) packed six bits per byte, each byte offset by 63.
/// Sizes up to 62 use one byte; larger sizes use '~' plus 3 (or "~~" plus 6) bytes.
Graph parse_graph6(std::string_view line);
std::string write_graph6(const Graph& g);

/// "p <n>" header, then "<u> <v>" lines with 0-based endpoints.
/// Blank lines and '#' comments are skipped.
Graph parse_edge_list(std::string_view text);
std::string write_edge_list(const Graph& g);

enum class GraphFormat { automatic, graph6, edge_list };

/// Reads every graph in a stream: one graph6 record per line, or a single
/// edge list. `automatic` picks edge-list when the first content line starts with 'p'.
std::vector<Graph> read_graphs(std::istream& in, GraphFormat format = GraphFormat::automatic);

}  // namespace kprod
