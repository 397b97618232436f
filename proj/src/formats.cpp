#include "paintkit/formats.hpp"

#include "paintkit/errors.hpp"

#include <charconv>
#include <cstdint>
#include <set>

namespace paintkit {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";
constexpr std::uint64_t kMaxOrder = 68719476735ULL;

using PE = ParseError::Kind;

} // namespace

std::string encode_graph6(const Graph& g, bool header) {
    std::string out;
    if (header)
        out += kHeader;
    const std::uint64_t n = static_cast<std::uint64_t>(g.vertex_count());
    if (n <= 62) {
        out += static_cast<char>(63 + n);
    } else if (n <= 258047) {
        out += '~';
        for (int shift = 12; shift >= 0; shift -= 6)
            out += static_cast<char>(63 + (n >> shift & 63));
    } else {
        out += "~~";
        for (int shift = 30; shift >= 0; shift -= 6)
            out += static_cast<char>(63 + (n >> shift & 63));
    }
    int acc = 0, bits = 0;
    const int vn = g.vertex_count();
    for (int j = 1; j < vn; ++j) {
        const auto& row = g.neighbors(j);
        auto it = row.begin();
        for (int i = 0; i < j; ++i) {
            while (it != row.end() && *it < i)
                ++it;
            acc = acc << 1 | (it != row.end() && *it == i ? 1 : 0);
            if (++bits == 6) {
                out += static_cast<char>(63 + acc);
                acc = bits = 0;
            }
        }
    }
    if (bits > 0)
        out += static_cast<char>(63 + (acc << (6 - bits)));
    return out;
}

namespace {

Graph decode_at(std::string_view text, std::size_t base) {
    std::size_t pos = 0;
    if (text.substr(0, kHeader.size()) == kHeader)
        pos = kHeader.size();
    for (std::size_t i = pos; i < text.size(); ++i) {
        auto c = static_cast<unsigned char>(text[i]);
        if (c < 63 || c > 126)
            throw ParseError(PE::NonPrintableByte, base + i, "byte value " + std::to_string(c));
    }
    if (pos >= text.size())
        throw ParseError(PE::MalformedHeader, base + pos, "missing size prefix");

    auto value = [&](std::size_t at) { return static_cast<std::uint64_t>(text[at] - 63); };
    std::uint64_t n = 0;
    if (text[pos] != '~') {
        n = value(pos);
        pos += 1;
    } else if (pos + 1 < text.size() && text[pos + 1] == '~') {
        if (pos + 8 > text.size())
            throw ParseError(PE::MalformedHeader, base + pos, "8-byte size prefix is cut short");
        for (std::size_t i = pos + 2; i < pos + 8; ++i)
            n = n << 6 | value(i);
        if (n <= 258047)
            throw ParseError(PE::MalformedHeader, base + pos, "size prefix is not minimal");
        if (n > kMaxOrder)
            throw ParseError(PE::MalformedHeader, base + pos, "order too large");
        pos += 8;
    } else {
        if (pos + 4 > text.size())
            throw ParseError(PE::MalformedHeader, base + pos, "4-byte size prefix is cut short");
        for (std::size_t i = pos + 1; i < pos + 4; ++i)
            n = n << 6 | value(i);
        if (n <= 62)
            throw ParseError(PE::MalformedHeader, base + pos, "size prefix is not minimal");
        pos += 4;
    }

    const unsigned __int128 bit_count = static_cast<unsigned __int128>(n) * (n == 0 ? 0 : n - 1) / 2;
    const unsigned __int128 byte_count = (bit_count + 5) / 6;
    const std::size_t available = text.size() - pos;
    if (byte_count > available)
        throw ParseError(PE::TruncatedBitVector, base + text.size(),
                         "expected " + std::to_string(static_cast<unsigned long long>(std::min<unsigned __int128>(
                                           byte_count, UINT64_MAX))) +
                             " data bytes, found " + std::to_string(available));
    if (byte_count < available)
        throw ParseError(PE::TrailingBytes, base + pos + static_cast<std::size_t>(byte_count), "extra data after bit vector");

    const int vn = static_cast<int>(n);
    std::vector<Edge> es;
    std::uint64_t k = 0;
    for (int j = 1; j < vn; ++j)
        for (int i = 0; i < j; ++i, ++k) {
            std::size_t byte = pos + k / 6;
            if (value(byte) >> (5 - k % 6) & 1)
                es.emplace_back(i, j);
        }
    if (byte_count > 0) {
        const int used = static_cast<int>(bit_count % 6);
        if (used != 0) {
            std::size_t last = pos + static_cast<std::size_t>(byte_count) - 1;
            if (value(last) & ((1u << (6 - used)) - 1))
                throw ParseError(PE::NonzeroPadding, base + last, "padding bits must be zero");
        }
    }
    return Graph(vn, es);
}

} // namespace

Graph decode_graph6(std::string_view text) { return decode_at(text, 0); }

std::vector<Graph> decode_graph6_lines(std::string_view text) {
    std::vector<Graph> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos)
            end = text.size();
        std::string_view line = text.substr(start, end - start);
        if (!line.empty() && line.back() == '\r')
            line.remove_suffix(1);
        if (!line.empty())
            out.push_back(decode_at(line, start));
        start = end + 1;
    }
    return out;
}

std::string encode_edge_list(const Graph& g) {
    if (g.vertex_count() == 0)
        return "";
    std::string out = std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()) + "\n";
    for (const auto& e : g.edges())
        out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
    return out;
}

namespace {

struct PairLine {
    long long a, b;
    std::size_t line;
};

PairLine parse_pair(std::string_view s, std::size_t line) {
    long long vals[2];
    std::size_t i = 0;
    for (int k = 0; k < 2; ++k) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t'))
            ++i;
        auto [p, ec] = std::from_chars(s.data() + i, s.data() + s.size(), vals[k]);
        if (ec != std::errc() || vals[k] < 0)
            throw ParseError(PE::Syntax, line, "expected two nonnegative integers");
        i = static_cast<std::size_t>(p - s.data());
    }
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r'))
        ++i;
    if (i != s.size())
        throw ParseError(PE::Syntax, line, "unexpected text after two integers");
    if (vals[0] > INT32_MAX - 1 || vals[1] > INT32_MAX - 1)
        throw ParseError(PE::Syntax, line, "vertex id too large");
    return {vals[0], vals[1], line};
}

} // namespace

Graph decode_edge_list(std::string_view text) {
    std::vector<PairLine> rows;
    std::size_t start = 0, line = 0;
    while (start < text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos)
            end = text.size();
        ++line;
        std::string_view s = text.substr(start, end - start);
        start = end + 1;
        std::size_t first = s.find_first_not_of(" \t\r");
        if (first == std::string_view::npos || s[first] == '#')
            continue;
        rows.push_back(parse_pair(s, line));
    }

    std::size_t begin = 0;
    long long n = -1;
    if (!rows.empty() && rows[0].a > 0 && static_cast<long long>(rows.size()) - 1 == rows[0].b) {
        bool fits = true;
        for (std::size_t i = 1; i < rows.size(); ++i)
            fits = fits && rows[i].a < rows[0].a && rows[i].b < rows[0].a;
        if (fits) {
            n = rows[0].a;
            begin = 1;
        }
    }
    std::set<Edge> seen;
    std::vector<Edge> es;
    long long max_id = -1;
    for (std::size_t i = begin; i < rows.size(); ++i) {
        const auto& r = rows[i];
        if (r.a == r.b)
            throw ParseError(PE::SelfLoop, r.line, "vertex " + std::to_string(r.a));
        Edge e(static_cast<int>(r.a), static_cast<int>(r.b));
        if (!seen.insert(e).second)
            throw ParseError(PE::DuplicateEdge, r.line, std::to_string(e.u) + " " + std::to_string(e.v));
        es.push_back(e);
        max_id = std::max({max_id, r.a, r.b});
    }
    if (n < 0)
        n = max_id + 1;
    return Graph(static_cast<int>(n), es);
}

} // namespace paintkit
