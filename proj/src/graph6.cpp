#include "ecix/graph6.hpp"

#include <cstdint>
#include <stdexcept>

namespace ecix {

namespace {

constexpr std::int64_t kSmallMax = 62;
constexpr std::int64_t kMediumMax = 258047;          // 2^18 - 1
constexpr std::int64_t kLargeMax = 68719476735;      // 2^36 - 1

std::int64_t body_chars(std::int64_t n) {
    const std::int64_t bits = n * (n - 1) / 2;
    return (bits + 5) / 6;
}

}  // namespace

std::string encode_graph6(const Graph& g) {
    const std::int64_t n = g.order();
    std::string out;
    if (n <= kSmallMax) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= kMediumMax) {
        out.push_back('~');
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    } else if (n <= kLargeMax) {
        out.push_back('~');
        out.push_back('~');
        for (int shift = 30; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    } else {
        throw std::invalid_argument("graph6 cannot encode order above 68719476735");
    }
    int group = 0;
    int filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            group = group << 1 | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(group + 63));
                group = 0;
                filled = 0;
            }
        }
    }
    if (filled != 0) out.push_back(static_cast<char>((group << (6 - filled)) + 63));
    return out;
}

Graph decode_graph6(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("graph6: empty string");
    for (char c : s)
        if (c < 63 || c > 126)
            throw std::invalid_argument("graph6: character out of printable range 63..126");

    std::size_t pos = 0;
    std::int64_t n = 0;
    if (s[0] != '~') {
        n = s[0] - 63;
        pos = 1;
    } else if (s.size() >= 2 && s[1] != '~') {
        if (s.size() < 4) throw std::invalid_argument("graph6: truncated order header");
        for (int i = 1; i <= 3; ++i) n = n << 6 | (s[i] - 63);
        pos = 4;
    } else {
        if (s.size() < 8) throw std::invalid_argument("graph6: truncated order header");
        for (int i = 2; i <= 7; ++i) n = n << 6 | (s[i] - 63);
        pos = 8;
    }
    if (n < 1) throw std::invalid_argument("graph6: order must be at least 1");
    if (n > kMaxOrder)
        throw std::invalid_argument("graph6: order exceeds supported maximum " + std::to_string(kMaxOrder));

    const std::int64_t want = body_chars(n);
    const std::int64_t have = static_cast<std::int64_t>(s.size() - pos);
    if (have != want)
        throw std::invalid_argument("graph6: body length mismatch, expected " + std::to_string(want) +
                                    " characters, got " + std::to_string(have));

    std::vector<std::pair<int, int>> edges;
    std::int64_t bit_index = 0;
    const std::int64_t nbits = n * (n - 1) / 2;
    int i = 0, j = 1;
    for (std::size_t c = pos; c < s.size(); ++c) {
        const int group = s[c] - 63;
        for (int b = 5; b >= 0; --b, ++bit_index) {
            const bool set = (group >> b) & 1;
            if (bit_index >= nbits) {
                if (set) throw std::invalid_argument("graph6: nonzero trailing padding bits");
                continue;
            }
            if (set) edges.emplace_back(i, j);
            if (++i == j) {
                i = 0;
                ++j;
            }
        }
    }
    return Graph::from_edges(static_cast<int>(n), edges);
}

}  // namespace ecix
