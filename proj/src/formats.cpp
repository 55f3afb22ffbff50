#include <algorithm>
#include <cctype>
#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include "brush/cleaning.hpp"
#include "brush/error.hpp"
#include "brush/graph.hpp"

namespace brush {

namespace {

struct Line {
    std::size_t number;
    std::vector<std::string_view> tokens;
};

// Splits into non-empty lines with '#' comments removed.
std::vector<Line> tokenize(std::string_view text) {
    std::vector<Line> lines;
    std::size_t number = 0;
    while (!text.empty()) {
        ++number;
        auto eol = text.find('\n');
        std::string_view line = text.substr(0, eol);
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
        if (auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        Line out{number, {}};
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) {
                ++i;
            }
            std::size_t j = i;
            while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) {
                ++j;
            }
            if (j > i) {
                out.tokens.push_back(line.substr(i, j - i));
            }
            i = j;
        }
        if (!out.tokens.empty()) {
            lines.push_back(std::move(out));
        }
    }
    return lines;
}

int to_int(std::string_view tok, std::size_t line) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
        throw ParseError(line, "expected an integer, got '" + std::string(tok) + "'");
    }
    return value;
}

// Reads "<tag> <count>" and returns the count.
int read_header(const std::vector<Line>& lines, std::string_view tag) {
    if (lines.empty()) {
        throw ParseError(1, "missing '" + std::string(tag) + " <vertex_count>' header");
    }
    const Line& head = lines.front();
    if (head.tokens.size() != 2 || head.tokens[0] != tag) {
        throw ParseError(head.number,
                         "expected '" + std::string(tag) + " <vertex_count>' header");
    }
    const int n = to_int(head.tokens[1], head.number);
    if (n < 0) {
        throw ParseError(head.number, "negative vertex count");
    }
    return n;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
    const auto lines = tokenize(text);
    const int n = read_header(lines, "p");
    std::vector<Edge> edges;
    std::vector<std::vector<Vertex>> seen(n);
    for (std::size_t k = 1; k < lines.size(); ++k) {
        const Line& line = lines[k];
        if (line.tokens.size() != 2) {
            throw ParseError(line.number, "expected 'u v'");
        }
        const int u = to_int(line.tokens[0], line.number);
        const int v = to_int(line.tokens[1], line.number);
        if (u < 0 || v < 0 || u >= n || v >= n) {
            throw ParseError(line.number, "vertex id out of range [0, " + std::to_string(n) + ")");
        }
        if (u == v) {
            throw ParseError(line.number, "self-loop at vertex " + std::to_string(u));
        }
        auto& nb = seen[std::min(u, v)];
        if (std::find(nb.begin(), nb.end(), std::max(u, v)) != nb.end()) {
            throw ParseError(line.number, "duplicate edge " + std::to_string(u) + " " +
                                              std::to_string(v));
        }
        nb.push_back(std::max(u, v));
        edges.emplace_back(u, v);
    }
    return Graph::from_edges(n, edges);
}

std::string serialize_edge_list(const Graph& g) {
    std::string out = "p " + std::to_string(g.vertex_count());
    for (auto [u, v] : g.edges()) {
        out += '\n';
        out += std::to_string(u) + ' ' + std::to_string(v);
    }
    return out;
}

BrushConfig parse_config(std::string_view text) {
    const auto lines = tokenize(text);
    const int n = read_header(lines, "b");
    std::vector<int> counts(n, 0);
    std::vector<char> given(n, 0);
    for (std::size_t k = 1; k < lines.size(); ++k) {
        const Line& line = lines[k];
        if (line.tokens.size() != 2) {
            throw ParseError(line.number, "expected 'v count'");
        }
        const int v = to_int(line.tokens[0], line.number);
        const int c = to_int(line.tokens[1], line.number);
        if (v < 0 || v >= n) {
            throw ParseError(line.number, "vertex id out of range [0, " + std::to_string(n) + ")");
        }
        if (c < 0) {
            throw ParseError(line.number, "negative brush count");
        }
        if (given[v]) {
            throw ParseError(line.number, "vertex " + std::to_string(v) + " listed twice");
        }
        given[v] = 1;
        counts[v] = c;
    }
    return BrushConfig(std::move(counts));
}

std::string serialize_config(const BrushConfig& w0) {
    std::string out = "b " + std::to_string(w0.vertex_count());
    for (Vertex v = 0; v < w0.vertex_count(); ++v) {
        if (w0[v] != 0) {
            out += '\n';
            out += std::to_string(v) + ' ' + std::to_string(w0[v]);
        }
    }
    return out;
}

CleaningSequence parse_sequence(std::string_view text) {
    const auto lines = tokenize(text);
    const int n = read_header(lines, "s");
    std::vector<Vertex> order;
    std::vector<char> seen(n, 0);
    for (std::size_t k = 1; k < lines.size(); ++k) {
        for (auto tok : lines[k].tokens) {
            const int v = to_int(tok, lines[k].number);
            if (v < 0 || v >= n) {
                throw ParseError(lines[k].number,
                                 "vertex id out of range [0, " + std::to_string(n) + ")");
            }
            if (seen[v]) {
                throw ParseError(lines[k].number, "vertex " + std::to_string(v) + " repeated");
            }
            seen[v] = 1;
            order.push_back(v);
        }
    }
    return CleaningSequence(n, std::move(order));
}

std::string serialize_sequence(const CleaningSequence& seq) {
    std::string out = "s " + std::to_string(seq.vertex_count());
    if (seq.size() > 0) {
        out += '\n';
        for (std::size_t i = 0; i < seq.size(); ++i) {
            if (i > 0) {
                out += ' ';
            }
            out += std::to_string(seq[i]);
        }
    }
    return out;
}

}  // namespace brush
