#include "spexlab/graph6.hpp"

#include <cstdint>
#include <vector>

namespace spexlab {

namespace {

constexpr std::uint64_t kMaxGraph6Order = 68719476735ULL;

void put_size(std::string& out, std::uint64_t n) {
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        for (int shift = 12; shift >= 0; shift -= 6) {
            out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
        }
    } else {
        out.push_back(126);
        out.push_back(126);
        for (int shift = 30; shift >= 0; shift -= 6) {
            out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
        }
    }
}

std::uint64_t pair_index(std::uint64_t i, std::uint64_t j) { return j * (j - 1) / 2 + i; }

} // namespace

std::string graph6_encode(const Graph& g) {
    const auto n = static_cast<std::uint64_t>(g.order());
    if (n > kMaxGraph6Order) throw Graph6Error("graph too large for graph6");
    std::string out;
    put_size(out, n);
    const std::uint64_t bits = n * (n > 0 ? n - 1 : 0) / 2;
    std::vector<std::uint8_t> groups((bits + 5) / 6, 0);
    for (auto [u, v] : g.edges()) {
        // edges() yields u < v
        std::uint64_t k = pair_index(static_cast<std::uint64_t>(u), static_cast<std::uint64_t>(v));
        groups[k / 6] |= static_cast<std::uint8_t>(1U << (5 - k % 6));
    }
    out.reserve(out.size() + groups.size());
    for (auto b : groups) out.push_back(static_cast<char>(b + 63));
    return out;
}

Graph graph6_decode(std::string_view line) {
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
    if (line.empty()) throw Graph6Error("empty graph6 line");
    for (char c : line) {
        auto u = static_cast<unsigned char>(c);
        if (u < 63 || u > 126) throw Graph6Error("illegal character in graph6 line");
    }
    auto val = [&](std::size_t i) { return static_cast<std::uint64_t>(line[i]) - 63; };
    std::uint64_t n = 0;
    std::size_t pos = 0;
    if (val(0) < 63) {
        n = val(0);
        pos = 1;
    } else if (line.size() >= 2 && val(1) == 63) {
        if (line.size() < 8) throw Graph6Error("truncated graph6 size field");
        for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | val(i);
        pos = 8;
        if (n <= 258047) throw Graph6Error("non-canonical graph6 size field");
    } else {
        if (line.size() < 4) throw Graph6Error("truncated graph6 size field");
        for (std::size_t i = 1; i < 4; ++i) n = (n << 6) | val(i);
        pos = 4;
        if (n <= 62) throw Graph6Error("non-canonical graph6 size field");
    }
    if (n > static_cast<std::uint64_t>(kMaxOrder)) throw Graph6Error("graph6 order exceeds supported maximum");
    const std::uint64_t bits = n * (n > 0 ? n - 1 : 0) / 2;
    const std::uint64_t groups = (bits + 5) / 6;
    if (line.size() - pos != groups) {
        throw Graph6Error("graph6 body has " + std::to_string(line.size() - pos) +
                          " characters, expected " + std::to_string(groups));
    }
    if (groups > 0 && bits % 6 != 0) {
        std::uint64_t pad = 6 - bits % 6;
        if (val(pos + groups - 1) & ((1U << pad) - 1)) throw Graph6Error("nonzero graph6 padding bits");
    }
    std::vector<Edge> es;
    std::uint64_t k = 0;
    for (std::uint64_t j = 1; j < n; ++j) {
        for (std::uint64_t i = 0; i < j; ++i, ++k) {
            if ((val(pos + k / 6) >> (5 - k % 6)) & 1U) {
                es.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
            }
        }
    }
    return Graph::from_edges(static_cast<int>(n), es);
}

std::size_t stream_graph6(std::istream& in, const std::function<void(Graph&&)>& sink) {
    std::string line;
    std::size_t lineno = 0;
    std::size_t count = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::string_view body = line;
        if (lineno == 1 && body.starts_with(">>graph6<<")) {
            body.remove_prefix(10);
            if (body.empty()) continue;
        }
        Graph g;
        try {
            g = graph6_decode(body);
        } catch (const Graph6Error& e) {
            throw Graph6Error("line " + std::to_string(lineno) + ": " + e.what());
        }
        sink(std::move(g));
        ++count;
    }
    if (in.bad()) throw Graph6Error("I/O failure after line " + std::to_string(lineno));
    return count;
}

} // namespace spexlab
