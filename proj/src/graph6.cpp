#include "mtf/graph6.hpp"

#include <istream>
#include <ostream>

namespace mtf {

namespace {

constexpr int kBias = 63;
constexpr std::string_view kHeader = ">>graph6<<";

}  // namespace

std::string graph6_encode(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kBias));
    } else {
        out.push_back(static_cast<char>(126));
        out.push_back(static_cast<char>(((n >> 12) & 0x3f) + kBias));
        out.push_back(static_cast<char>(((n >> 6) & 0x3f) + kBias));
        out.push_back(static_cast<char>((n & 0x3f) + kBias));
    }
    int group = 0;
    int filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            group = (group << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(group + kBias));
                group = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((group << (6 - filled)) + kBias));
    return out;
}

Graph graph6_decode(std::string_view text) {
    auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
    while (!text.empty() && is_space(text.front())) text.remove_prefix(1);
    while (!text.empty() && is_space(text.back())) text.remove_suffix(1);
    if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
    if (text.empty()) throw InputError("empty graph6 string");
    for (char c : text) {
        if (c < kBias || c > 126) throw InputError("graph6 byte out of range: " + std::string(text));
    }

    std::size_t pos = 0;
    int n;
    if (text[0] != 126) {
        n = text[0] - kBias;
        pos = 1;
    } else {
        if (text.size() >= 2 && text[1] == 126) throw RangeError("graph6 order exceeds 64");
        if (text.size() < 4) throw InputError("truncated graph6 size field");
        n = ((text[1] - kBias) << 12) | ((text[2] - kBias) << 6) | (text[3] - kBias);
        pos = 4;
    }
    if (n < 1 || n > kMaxVertices) throw RangeError("graph6 order " + std::to_string(n) + " outside [1, 64]");

    const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
    const std::size_t bytes = (bits + 5) / 6;
    if (text.size() - pos != bytes) {
        throw InputError("graph6 body has " + std::to_string(text.size() - pos) + " bytes, expected " +
                         std::to_string(bytes));
    }
    std::vector<Edge> edges;
    std::size_t k = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            int byte = text[pos + k / 6] - kBias;
            if ((byte >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
        }
    }
    if (bits % 6 != 0) {
        int last = text.back() - kBias;
        if (last & ((1 << (6 - bits % 6)) - 1)) throw InputError("graph6 padding bits are not zero");
    }
    return Graph::from_edges(n, edges);
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
    std::vector<Graph> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        out.push_back(graph6_decode(line));
    }
    return out;
}

void write_graph6_stream(std::ostream& out, const std::vector<Graph>& graphs) {
    for (const Graph& g : graphs) out << graph6_encode(g) << '\n';
}

}  // namespace mtf
