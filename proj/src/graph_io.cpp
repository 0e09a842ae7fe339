#include "kprod/graph_io.hpp"

#include <charconv>
#include <sstream>

namespace kprod {

namespace {

constexpr int kBias = 63;
constexpr int kMaxByte = 126;
constexpr std::size_t kMaxGraph6Vertices = 1 << 16;

int sextet(std::string_view line, std::size_t offset) {
    if (offset >= line.size()) {
        throw ParseError("graph6 record truncated at byte " + std::to_string(offset), offset);
    }
    const int b = static_cast<unsigned char>(line[offset]);
    if (b < kBias || b > kMaxByte) {
        throw ParseError("graph6 byte " + std::to_string(b) + " at offset " + std::to_string(offset) +
                             " outside 63..126",
                         offset);
    }
    return b - kBias;
}

void append_size(std::string& out, std::size_t n) {
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kBias));
    } else if (n <= 258047) {
        out.push_back(static_cast<char>(kMaxByte));
        for (int shift = 12; shift >= 0; shift -= 6) {
            out.push_back(static_cast<char>(((n >> shift) & 0x3F) + kBias));
        }
    } else {
        out.append(2, static_cast<char>(kMaxByte));
        for (int shift = 30; shift >= 0; shift -= 6) {
            out.push_back(static_cast<char>(((n >> shift) & 0x3F) + kBias));
        }
    }
}

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

}  // namespace

Graph parse_graph6(std::string_view line) {
    std::size_t offset = 0;
    std::size_t n = 0;
    const int first = sextet(line, 0);
    if (first + kBias != kMaxByte) {
        n = static_cast<std::size_t>(first);
        offset = 1;
    } else if (line.size() > 1 && static_cast<unsigned char>(line[1]) == kMaxByte) {
        for (offset = 2; offset < 8; ++offset) n = (n << 6) | static_cast<std::size_t>(sextet(line, offset));
    } else {
        for (offset = 1; offset < 4; ++offset) n = (n << 6) | static_cast<std::size_t>(sextet(line, offset));
    }
    if (n > kMaxGraph6Vertices) {
        throw ParseError("graph6 vertex count " + std::to_string(n) + " exceeds supported maximum", 0);
    }

    const std::size_t bits = n * (n > 0 ? n - 1 : 0) / 2;
    const std::size_t body_bytes = (bits + 5) / 6;
    const std::size_t body_end = offset + body_bytes;
    if (line.size() > body_end) {
        throw ParseError("graph6 record has " + std::to_string(line.size() - body_end) +
                             " unexpected trailing byte(s) at offset " + std::to_string(body_end),
                         body_end);
    }

    std::vector<Edge> edges;
    std::size_t bit = 0;
    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = 0; i < j; ++i, ++bit) {
            const std::size_t at = offset + bit / 6;
            if ((sextet(line, at) >> (5 - bit % 6)) & 1) {
                edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
            }
        }
    }
    if (bits % 6 != 0) {
        const std::size_t at = body_end - 1;
        const int padding_mask = (1 << (6 - bits % 6)) - 1;
        if (sextet(line, at) & padding_mask) {
            throw ParseError("graph6 padding bits nonzero in byte at offset " + std::to_string(at), at);
        }
    }
    return Graph::build(static_cast<int>(n), edges);
}

std::string write_graph6(const Graph& g) {
    const auto n = static_cast<std::size_t>(g.vertex_count());
    std::string out;
    append_size(out, n);
    int acc = 0;
    int filled = 0;
    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(static_cast<Vertex>(i), static_cast<Vertex>(j)) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + kBias));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
    return out;
}

Graph parse_edge_list(std::string_view text) {
    int vertex_count = -1;
    std::vector<Edge> edges;
    std::size_t line_no = 0;

    auto parse_int = [&](std::string_view token, const char* what) {
        int value = 0;
        const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc{} || ptr != token.data() + token.size()) {
            throw ParseError("line " + std::to_string(line_no) + ": bad " + what + " '" +
                                 std::string(token) + "'",
                             line_no);
        }
        return value;
    };

    std::size_t start = 0;
    while (start <= text.size()) {
        const auto end = std::min(text.find('\n', start), text.size());
        std::string_view line = text.substr(start, end - start);
        start = end + 1;
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        std::vector<std::string_view> tokens;
        for (std::size_t pos = 0; pos < line.size();) {
            const auto b = line.find_first_not_of(" \t", pos);
            if (b == std::string_view::npos) break;
            const auto e = std::min(line.find_first_of(" \t", b), line.size());
            tokens.push_back(line.substr(b, e - b));
            pos = e;
        }

        if (vertex_count < 0) {
            if (tokens.size() != 2 || tokens[0] != "p") {
                throw ParseError("line " + std::to_string(line_no) + ": expected header 'p <n>'", line_no);
            }
            vertex_count = parse_int(tokens[1], "vertex count");
            if (vertex_count < 0) {
                throw ParseError("line " + std::to_string(line_no) + ": negative vertex count", line_no);
            }
            continue;
        }
        if (tokens.size() != 2) {
            throw ParseError("line " + std::to_string(line_no) + ": expected '<u> <v>'", line_no);
        }
        const Edge e{parse_int(tokens[0], "endpoint"), parse_int(tokens[1], "endpoint")};
        if (e.u == e.v) {
            throw ParseError("line " + std::to_string(line_no) + ": loop at vertex " + std::to_string(e.u),
                             line_no);
        }
        if (e.u < 0 || e.v < 0 || e.u >= vertex_count || e.v >= vertex_count) {
            throw ParseError("line " + std::to_string(line_no) + ": endpoint outside 0.." +
                                 std::to_string(vertex_count - 1),
                             line_no);
        }
        edges.push_back(e);
    }
    if (vertex_count < 0) throw ParseError("edge list has no 'p <n>' header", line_no);
    return Graph::build(vertex_count, edges);
}

std::string write_edge_list(const Graph& g) {
    std::ostringstream out;
    out << "p " << g.vertex_count() << '\n';
    for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
    return out.str();
}

std::vector<Graph> read_graphs(std::istream& in, GraphFormat format) {
    const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    if (format == GraphFormat::automatic) {
        format = GraphFormat::graph6;
        std::istringstream probe(text);
        for (std::string line; std::getline(probe, line);) {
            const auto t = trim(line);
            if (t.empty() || t.front() == '#') continue;
            if (t.front() == 'p' && (t.size() == 1 || t[1] == ' ' || t[1] == '\t')) {
                format = GraphFormat::edge_list;
            }
            break;
        }
    }
    if (format == GraphFormat::edge_list) return {parse_edge_list(text)};

    std::vector<Graph> out;
    std::istringstream lines(text);
    std::size_t line_no = 0;
    for (std::string line; std::getline(lines, line);) {
        ++line_no;
        std::string_view t = trim(line);
        constexpr std::string_view header = ">>graph6<<";
        if (t.starts_with(header)) t.remove_prefix(header.size());
        if (t.empty()) continue;
        try {
            out.push_back(parse_graph6(t));
        } catch (const ParseError& e) {
            throw ParseError("line " + std::to_string(line_no) + ": " + e.what(), e.position());
        }
    }
    return out;
}

}  // namespace kprod
