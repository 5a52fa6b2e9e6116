#include "anosov/graph6.hpp"

#include <string>

namespace anosov {

namespace {

void put_group(std::string& out, int bits6) { out.push_back(static_cast<char>(bits6 + 63)); }

[[noreturn]] void fail(const std::string& what, std::size_t offset) {
    throw input_error("graph6: " + what + " at byte " + std::to_string(offset));
}

} // namespace

std::string to_graph6(const SimpleGraph& g) {
    std::string out;
    if (g.n <= 62) {
        put_group(out, g.n);
    } else {
        // Three-byte size form, 18 bits big-endian.
        out.push_back(static_cast<char>(126));
        put_group(out, (g.n >> 12) & 63);
        put_group(out, (g.n >> 6) & 63);
        put_group(out, g.n & 63);
    }
    int acc = 0;
    int filled = 0;
    for (int j = 1; j < g.n; j++) {
        for (int i = 0; i < j; i++) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++filled == 6) {
                put_group(out, acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) put_group(out, acc << (6 - filled));
    return out;
}

SimpleGraph from_graph6(const std::string& text) {
    std::size_t pos = 0;
    static const std::string header = ">>graph6<<";
    if (text.compare(0, header.size(), header) == 0) pos = header.size();

    std::size_t end = text.size();
    while (end > pos && (text[end - 1] == '\n' || text[end - 1] == '\r')) end--;

    if (pos >= end) fail("empty input", pos);

    auto group = [&](std::size_t at) -> int {
        unsigned char c = static_cast<unsigned char>(text[at]);
        if (c < 63 || c > 126) fail("byte outside the printable graph6 range", at);
        return c - 63;
    };

    long long n;
    if (static_cast<unsigned char>(text[pos]) == 126) {
        if (end - pos < 4) fail("truncated size field", end);
        if (static_cast<unsigned char>(text[pos + 1]) == 126)
            fail("size form beyond 18 bits not supported", pos + 1);
        n = (static_cast<long long>(group(pos + 1)) << 12) |
            (static_cast<long long>(group(pos + 2)) << 6) | group(pos + 3);
        pos += 4;
    } else {
        n = group(pos);
        pos += 1;
    }
    if (n > SimpleGraph::max_vertices)
        throw input_error("graph6: vertex count " + std::to_string(n) + " exceeds the cap of " +
                          std::to_string(SimpleGraph::max_vertices));

    long long pair_bits = n * (n - 1) / 2;
    std::size_t body = static_cast<std::size_t>((pair_bits + 5) / 6);
    if (end - pos < body) fail("body shorter than the vertex count requires", end);
    if (end - pos > body) fail("unexpected trailing data", pos + body);

    SimpleGraph g(static_cast<int>(n));
    long long bit = 0;
    for (std::size_t b = 0; b < body; b++) {
        int bits6 = group(pos + b);
        for (int s = 5; s >= 0; s--, bit++) {
            int value = (bits6 >> s) & 1;
            if (bit >= pair_bits) {
                if (value) fail("nonzero padding bit", pos + b);
                continue;
            }
            if (value) {
                // Column-major upper triangle: recover (i, j) from the index.
                long long idx = bit;
                int j = 1;
                while (idx >= j) {
                    idx -= j;
                    j++;
                }
                g.add_edge(static_cast<int>(idx), j);
            }
        }
    }
    return g;
}

} // namespace anosov
