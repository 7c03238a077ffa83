#include "walkper/graph6.hpp"

#include <utility>
#include <vector>

namespace walkper {
namespace {

constexpr int kBias = 63;

int sextet(std::string_view text, std::size_t pos) {
    if (pos >= text.size()) throw Graph6Error("truncated record", pos);
    auto c = static_cast<unsigned char>(text[pos]);
    if (c < 63 || c > 126) throw Graph6Error("character out of range", pos);
    return c - kBias;
}

void append_size(std::string& out, std::size_t n) {
    if (n <= 62) {
        out.push_back(char(n + kBias));
    } else if (n <= 258047) {
        out.push_back('~');
        for (int shift = 12; shift >= 0; shift -= 6) out.push_back(char(((n >> shift) & 0x3f) + kBias));
    } else {
        out += "~~";
        for (int shift = 30; shift >= 0; shift -= 6) out.push_back(char(((n >> shift) & 0x3f) + kBias));
    }
}

}  // namespace

Graph parse_graph6(std::string_view text) {
    if (text.starts_with(">>graph6<<")) text.remove_prefix(10);

    std::size_t pos = 0;
    std::size_t n = 0;
    int first = sextet(text, pos++);
    if (first < 63) {
        n = std::size_t(first);
    } else {
        int width = 3;
        if (sextet(text, pos) == 63) {
            ++pos;
            width = 6;
        }
        for (int i = 0; i < width; ++i) n = (n << 6) | std::size_t(sextet(text, pos++));
    }
    if (n == 0) throw Graph6Error("graph has no vertices", 0);

    const std::size_t bit_count = n * (n - 1) / 2;
    const std::size_t body = (bit_count + 5) / 6;
    std::vector<std::pair<Vertex, Vertex>> edges;
    std::size_t bit = 0;
    int word = 0;
    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = 0; i < j; ++i, ++bit) {
            if (bit % 6 == 0) word = sextet(text, pos + bit / 6);
            if (word & (0x20 >> (bit % 6))) edges.emplace_back(Vertex(i), Vertex(j));
        }
    }
    if (bit % 6 != 0 && (word & ((1 << (6 - bit % 6)) - 1)) != 0)
        throw Graph6Error("nonzero padding bits", pos + body - 1);
    pos += body;
    if (pos != text.size()) throw Graph6Error("trailing characters", pos);
    return Graph::from_edges(n, edges);
}

std::string emit_graph6(const Graph& g) {
    const std::size_t n = g.vertex_count();
    std::string out;
    append_size(out, n);
    int word = 0;
    std::size_t bit = 0;
    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = 0; i < j; ++i, ++bit) {
            if (g.adjacent(Vertex(i), Vertex(j))) word |= 0x20 >> (bit % 6);
            if (bit % 6 == 5) {
                out.push_back(char(word + kBias));
                word = 0;
            }
        }
    }
    if (bit % 6 != 0) out.push_back(char(word + kBias));
    return out;
}

bool next_graph6_line(std::istream& in, Graph6Line& out, std::size_t& line_counter) {
    std::string line;
    while (std::getline(in, line)) {
        ++line_counter;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        // The optional ">>graph6<<" header may prefix the first record.
        if (line.starts_with(">>graph6<<")) line.erase(0, 10);
        else if (line.starts_with(">>")) continue;
        if (line.empty()) continue;
        out.line_number = line_counter;
        out.text = std::move(line);
        return true;
    }
    return false;
}

}  // namespace walkper
