#include "supersat/io.hpp"

#include <cctype>
#include <string>
#include <vector>

namespace supersat {

namespace {

long long parse_int(const std::string& tok, int line) {
    if (tok.empty()) throw ParseError("line " + std::to_string(line) + ": empty field");
    std::size_t pos = 0;
    long long v;
    try {
        v = std::stoll(tok, &pos);
    } catch (const std::exception&) {
        throw ParseError("line " + std::to_string(line) + ": not an integer: '" + tok + "'");
    }
    if (pos != tok.size())
        throw ParseError("line " + std::to_string(line) + ": trailing junk in '" + tok + "'");
    return v;
}

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
        std::size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
        if (j > i) out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

Graph read_edge_list(const std::string& bytes) {
    std::vector<std::string> lines;
    std::size_t start = 0;
    while (start <= bytes.size()) {
        std::size_t nl = bytes.find('\n', start);
        if (nl == std::string::npos) {
            if (start < bytes.size()) lines.push_back(bytes.substr(start));
            break;
        }
        std::string line = bytes.substr(start, nl - start);
        if (!line.empty() && line.back() == '\r') line.pop_back();
        lines.push_back(line);
        start = nl + 1;
    }
    while (!lines.empty() && lines.back().empty()) lines.pop_back();
    if (lines.empty()) throw ParseError("line 1: empty input");

    auto head = split_ws(lines[0]);
    if (head.size() != 2) throw ParseError("line 1: expected 'n m'");
    long long n = parse_int(head[0], 1);
    long long m = parse_int(head[1], 1);
    if (n < 0 || m < 0) throw ParseError("line 1: negative counts");
    if ((long long)lines.size() - 1 != m)
        throw ParseError("line " + std::to_string(lines.size()) + ": expected " + std::to_string(m) +
                         " edge lines, found " + std::to_string(lines.size() - 1));

    Graph g((int)n);
    std::pair<long long, long long> prev{-1, -1};
    for (std::size_t i = 1; i < lines.size(); ++i) {
        int lineno = (int)i + 1;
        auto tok = split_ws(lines[i]);
        if (tok.size() != 2) throw ParseError("line " + std::to_string(lineno) + ": expected 'u v'");
        long long u = parse_int(tok[0], lineno);
        long long v = parse_int(tok[1], lineno);
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw ParseError("line " + std::to_string(lineno) + ": endpoint out of range");
        if (u >= v)
            throw ParseError("line " + std::to_string(lineno) + ": edges must satisfy u < v");
        if (std::pair{u, v} <= prev)
            throw ParseError("line " + std::to_string(lineno) + ": edges out of order");
        prev = {u, v};
        g.add_edge((int)u, (int)v);
    }
    return g;
}

std::string write_edge_list(const Graph& g) {
    auto es = g.edges();
    std::string out = std::to_string(g.n()) + " " + std::to_string(es.size()) + "\n";
    for (auto [u, v] : es) out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

// graph6 size field: 1 byte below 63, '~' + 3 bytes below 2^18, '~~' + 6 bytes
// up to 2^36.
std::size_t read_g6_size(const std::string& s, long long& n) {
    if (s.empty()) throw ParseError("byte 0: empty graph6 input");
    auto val = [&](std::size_t i) {
        unsigned char c = s[i];
        if (c < 63 || c > 126)
            throw ParseError("byte " + std::to_string(i) + ": invalid graph6 character");
        return (long long)(c - 63);
    };
    if (s[0] == '~') {
        if (s.size() >= 2 && s[1] == '~') {
            if (s.size() < 8) throw ParseError("byte 2: truncated graph6 size");
            n = 0;
            for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | val(i);
            return 8;
        }
        if (s.size() < 4) throw ParseError("byte 1: truncated graph6 size");
        n = 0;
        for (std::size_t i = 1; i < 4; ++i) n = (n << 6) | val(i);
        return 4;
    }
    n = val(0);
    return 1;
}

Graph read_graph6(const std::string& bytes) {
    std::string s = bytes;
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
    if (s.rfind(">>graph6<<", 0) == 0)
        throw UnsupportedHeader("graph6 header prefix not supported, strip '>>graph6<<'");
    long long n;
    std::size_t off = read_g6_size(s, n);
    if (n > 100000) throw ParseError("byte 0: graph6 vertex count too large");
    long long nbits = n * (n - 1) / 2;
    std::size_t need = off + (std::size_t)((nbits + 5) / 6);
    if (s.size() < need)
        throw ParseError("byte " + std::to_string(s.size()) + ": truncated graph6 body");
    if (s.size() > need)
        throw ParseError("byte " + std::to_string(need) + ": trailing bytes after graph6 body");

    Graph g((int)n);
    long long bit = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u, ++bit) {
            unsigned char c = s[off + bit / 6];
            if (c < 63 || c > 126)
                throw ParseError("byte " + std::to_string(off + bit / 6) + ": invalid graph6 character");
            int x = (c - 63) >> (5 - bit % 6) & 1;
            if (x) g.add_edge(u, v);
        }
    }
    // padding bits must be zero
    for (long long b = nbits; b < (long long)(need - off) * 6; ++b) {
        unsigned char c = s[off + b / 6];
        if ((c - 63) >> (5 - b % 6) & 1)
            throw ParseError("byte " + std::to_string(off + b / 6) + ": nonzero graph6 padding");
    }
    return g;
}

std::string write_graph6(const Graph& g) {
    long long n = g.n();
    std::string out;
    if (n < 63) {
        out.push_back((char)(n + 63));
    } else if (n < (1ll << 18)) {
        out.push_back('~');
        for (int sh = 12; sh >= 0; sh -= 6) out.push_back((char)(((n >> sh) & 63) + 63));
    } else {
        out.push_back('~');
        out.push_back('~');
        for (int sh = 30; sh >= 0; sh -= 6) out.push_back((char)(((n >> sh) & 63) + 63));
    }
    long long nbits = n * (n - 1) / 2;
    std::size_t body = out.size();
    out.resize(body + (std::size_t)((nbits + 5) / 6), (char)63);
    long long bit = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++bit)
            if (g.has_edge(u, v)) out[body + bit / 6] += (char)(1 << (5 - bit % 6));
    return out;
}

}  // namespace

Graph read_graph(const std::string& bytes, GraphFormat format) {
    return format == GraphFormat::edge_list ? read_edge_list(bytes) : read_graph6(bytes);
}

std::string write_graph(const Graph& g, GraphFormat format) {
    return format == GraphFormat::edge_list ? write_edge_list(g) : write_graph6(g);
}

Graph read_graph_any(const std::string& bytes) {
    // An edge-list first line is "n m"; anything else is treated as graph6.
    std::size_t nl = bytes.find('\n');
    std::string first = nl == std::string::npos ? bytes : bytes.substr(0, nl);
    auto tok = split_ws(first);
    if (tok.size() == 2 && !tok[0].empty() && (std::isdigit((unsigned char)tok[0][0])) &&
        !tok[1].empty() && std::isdigit((unsigned char)tok[1][0]))
        return read_edge_list(bytes);
    return read_graph6(bytes);
}

}  // namespace supersat
