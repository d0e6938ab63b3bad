#include "vtc/graph_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace vtc {

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";

void append_bits(std::string& out, unsigned long long value, int sextets) {
    for (int s = sextets - 1; s >= 0; --s)
        out += static_cast<char>(((value >> (6 * s)) & 63) + 63);
}

}  // namespace

std::string to_graph6(const Graph& g) {
    const long long n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out += static_cast<char>(n + 63);
    } else if (n <= 258047) {
        out += '~';
        append_bits(out, static_cast<unsigned long long>(n), 3);
    } else {
        out += "~~";
        append_bits(out, static_cast<unsigned long long>(n), 6);
    }
    int acc = 0, nbits = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out += static_cast<char>(acc + 63);
                acc = 0;
                nbits = 0;
            }
        }
    if (nbits > 0) out += static_cast<char>((acc << (6 - nbits)) + 63);
    return out;
}

Graph from_graph6(std::string_view s) {
    if (s.substr(0, kGraph6Header.size()) == kGraph6Header)
        s.remove_prefix(kGraph6Header.size());
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    if (s.empty()) throw InputError("empty graph6 string");
    for (char c : s)
        if (c < 63 || c > 126)
            throw InputError("invalid graph6 character");

    std::size_t pos = 0;
    long long n;
    auto sextet = [&](std::size_t i) { return static_cast<long long>(s[i] - 63); };
    if (s[0] != '~') {
        n = sextet(0);
        pos = 1;
    } else if (s.size() >= 4 && s[1] != '~') {
        n = (sextet(1) << 12) | (sextet(2) << 6) | sextet(3);
        pos = 4;
    } else if (s.size() >= 8) {
        n = 0;
        for (int i = 2; i < 8; ++i) n = (n << 6) | sextet(i);
        pos = 8;
    } else {
        throw InputError("truncated graph6 size");
    }
    if (n > 100000) throw InputError("graph6 size too large");

    const long long nbits = n * (n - 1) / 2;
    const std::size_t need = static_cast<std::size_t>((nbits + 5) / 6);
    if (s.size() - pos != need)
        throw InputError("graph6 length does not match vertex count");

    std::vector<std::pair<int, int>> es;
    long long bit = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit) {
            int c = s[pos + static_cast<std::size_t>(bit / 6)] - 63;
            if ((c >> (5 - bit % 6)) & 1) es.emplace_back(i, j);
        }
    // padding bits must be zero
    for (long long b = nbits; b < static_cast<long long>(need) * 6; ++b) {
        int c = s[pos + static_cast<std::size_t>(b / 6)] - 63;
        if ((c >> (5 - b % 6)) & 1) throw InputError("nonzero graph6 padding");
    }
    return Graph(static_cast<int>(n), es);
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    out << "n " << g.vertex_count() << "\n";
    for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
    return out.str();
}

Graph from_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string tok;
    if (!(in >> tok) || tok != "n")
        throw InputError("edge list must start with an \"n <count>\" header");
    long long n;
    if (!(in >> n) || n < 0) throw InputError("bad vertex count in edge list");
    if (n > 100000) throw InputError("edge list vertex count too large");
    std::vector<std::pair<int, int>> es;
    long long u, v;
    while (in >> u) {
        if (!(in >> v)) throw InputError("odd number of endpoints in edge list");
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw InputError("edge list endpoint out of range");
        if (u == v) throw InputError("edge list contains a self-loop");
        es.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    if (!in.eof()) throw InputError("unexpected token in edge list");
    return Graph(static_cast<int>(n), es);
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Graph read_graph_file(const std::string& path) {
    std::string text = read_text_file(path);
    std::size_t i = 0;
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
        ++i;
    if (i < text.size() && text[i] == 'n' &&
        (i + 1 == text.size() ||
         std::isspace(static_cast<unsigned char>(text[i + 1]))))
        return from_edge_list(text);
    std::size_t end = text.find('\n', i);
    return from_graph6(std::string_view(text).substr(
        i, end == std::string::npos ? std::string::npos : end - i));
}

}  // namespace vtc
