#pragma once

#include <cstddef>
#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "walkper/graph.hpp"

namespace walkper {

/// Malformed graph6 record. offset() is the byte position in the record.
class Graph6Error : public std::runtime_error {
public:
    Graph6Error(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " at offset " + std::to_string(offset)), offset_(offset) {}
    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

/// Decodes one graph6 record (no trailing newline). Disconnected graphs are
/// accepted; analysis entry points reject them later.
Graph parse_graph6(std::string_view text);

std::string emit_graph6(const Graph& g);

/// One record from a graph6 stream, with its 1-based line number.
struct Graph6Line {
    std::size_t line_number;
    std::string text;
};

/// Reads the next non-empty, non-comment ('>>') line. Strips '\r'.
bool next_graph6_line(std::istream& in, Graph6Line& out, std::size_t& line_counter);

}  // namespace walkper
