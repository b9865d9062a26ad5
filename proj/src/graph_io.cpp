#include "resolvedim/graph_io.hpp"

#include <cctype>
#include <sstream>
#include <string>

#include "resolvedim/errors.hpp"

namespace resolvedim {

namespace {

constexpr std::string_view kGraph6Prefix = ">>graph6<<";

} // namespace

Graph parse_graph6(std::string_view text) {
    if (text.substr(0, kGraph6Prefix.size()) == kGraph6Prefix)
        text.remove_prefix(kGraph6Prefix.size());
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
        text.remove_suffix(1);
    if (text.empty())
        throw MalformedHeaderError("empty graph6 string");

    const unsigned char header = static_cast<unsigned char>(text[0]);
    if (header == 126)
        throw TooLargeError("multi-byte graph6 size header unsupported (n > 62)");
    if (header < 63 || header > 125)
        throw MalformedHeaderError("invalid graph6 size byte " + std::to_string(header));
    const int n = header - 63;
    if (n == 0)
        throw MalformedHeaderError("graph6 string encodes an empty graph");

    const int bit_count = n * (n - 1) / 2;
    const int byte_count = (bit_count + 5) / 6;
    if (static_cast<int>(text.size()) < 1 + byte_count)
        throw TruncatedBitstreamError("graph6 body has " + std::to_string(text.size() - 1) +
                                      " bytes, expected " + std::to_string(byte_count));
    if (static_cast<int>(text.size()) > 1 + byte_count)
        throw MalformedHeaderError("trailing data after graph6 body");

    std::vector<std::pair<int, int>> edges;
    int bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            const unsigned char c = static_cast<unsigned char>(text[1 + bit / 6]);
            if (c < 63 || c > 126)
                throw MalformedHeaderError("invalid graph6 data byte " + std::to_string(c));
            if ((c - 63) >> (5 - bit % 6) & 1)
                edges.emplace_back(i, j);
        }
    }
    // Padding bits must be zero in canonical encodings.
    for (; bit < byte_count * 6; ++bit) {
        const unsigned char c = static_cast<unsigned char>(text[1 + bit / 6]);
        if ((c - 63) >> (5 - bit % 6) & 1)
            throw MalformedHeaderError("nonzero padding bits in graph6 body");
    }
    return Graph::from_edge_list(n, edges);
}

std::string to_graph6(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 62)
        throw TooLargeError("graph6 single-byte header caps n at 62, got " + std::to_string(n));
    std::string out;
    out.push_back(static_cast<char>(n + 63));
    const int bit_count = n * (n - 1) / 2;
    const int byte_count = (bit_count + 5) / 6;
    std::string body(byte_count, static_cast<char>(63));
    int bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            if (g.has_edge(i, j))
                body[bit / 6] += static_cast<char>(1 << (5 - bit % 6));
        }
    }
    out += body;
    return out;
}

Graph parse_edge_list_text(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int n = -1;
    std::vector<std::pair<int, int>> edges;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        size_t pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos || line[pos] == '#')
            continue;
        std::istringstream fields(line);
        if (n < 0) {
            if (!(fields >> n) || n < 1)
                throw MalformedHeaderError("edge-list line 1 must be a positive vertex count");
            std::string rest;
            if (fields >> rest)
                throw MalformedHeaderError("unexpected tokens after vertex count");
            continue;
        }
        int u, v;
        if (!(fields >> u >> v))
            throw MalformedHeaderError("malformed edge on line " + std::to_string(line_no));
        std::string rest;
        if (fields >> rest)
            throw MalformedHeaderError("unexpected tokens on line " + std::to_string(line_no));
        edges.emplace_back(u, v);
    }
    if (n < 0)
        throw MalformedHeaderError("edge-list input has no vertex count line");
    return Graph::from_edge_list(n, edges);
}

std::string to_edge_list_text(const Graph& g) {
    std::string out = std::to_string(g.vertex_count());
    out.push_back('\n');
    for (auto [u, v] : g.edges()) {
        out += std::to_string(u);
        out.push_back(' ');
        out += std::to_string(v);
        out.push_back('\n');
    }
    return out;
}

} // namespace resolvedim
