#pragma once

// graph6 / sparse6 / digraph6 codecs (the nauty formats.txt byte layouts)
// and the JSON edge-list format. External vertex numbers are 1-based.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "immanant/errors.hpp"
#include "immanant/graph.hpp"

namespace immanant {

using AnyGraph = std::variant<Graph, Digraph>;

namespace detail {

inline constexpr int kBias = 63;

class SixBitReader {
public:
    SixBitReader(std::string_view s, std::size_t pos) : s_(s), pos_(pos) {}

    bool exhausted() const { return left_ == 0 && pos_ >= s_.size(); }
    std::size_t offset() const { return pos_; }

    /// Next bit, or -1 when the input is exhausted.
    int bit() {
        if (left_ == 0) {
            if (pos_ >= s_.size())
                return -1;
            cur_ = byte_value(pos_++);
            left_ = 6;
        }
        --left_;
        return (cur_ >> left_) & 1;
    }

    /// Remaining bits of the current byte (the padding once payload is read).
    int pending_bits() const { return left_; }
    int pending_value() const { return cur_ & ((1 << left_) - 1); }

    int byte_value(std::size_t at) const {
        const unsigned char c = static_cast<unsigned char>(s_[at]);
        if (c < 63 || c > 126)
            throw ParseError("byte outside printable graph6 range", at);
        return c - kBias;
    }

private:
    std::string_view s_;
    std::size_t pos_;
    int cur_ = 0;
    int left_ = 0;
};

class SixBitWriter {
public:
    void bit(int b) {
        cur_ = (cur_ << 1) | (b & 1);
        if (++used_ == 6)
            flush();
    }
    void bits(std::uint64_t v, int count) {
        for (int i = count - 1; i >= 0; --i)
            bit(static_cast<int>((v >> i) & 1));
    }
    int used() const { return used_; }
    /// Pads the final byte with `fill` bits.
    std::string finish(int fill = 0) {
        while (used_ != 0)
            bit(fill);
        return std::move(out_);
    }
    std::string& out() { return out_; }

private:
    void flush() {
        out_.push_back(static_cast<char>(cur_ + kBias));
        cur_ = 0;
        used_ = 0;
    }
    std::string out_;
    int cur_ = 0;
    int used_ = 0;
};

/// Decodes N(n) starting at `pos`; advances pos.
inline std::size_t decode_order(std::string_view s, std::size_t& pos) {
    auto value = [&](std::size_t at) {
        if (at >= s.size())
            throw ParseError("truncated vertex-count prefix", at);
        const unsigned char c = static_cast<unsigned char>(s[at]);
        if (c < 63 || c > 126)
            throw ParseError("byte outside printable graph6 range", at);
        return static_cast<std::uint64_t>(c - kBias);
    };
    std::uint64_t first = value(pos);
    if (first < 63) {
        ++pos;
        return static_cast<std::size_t>(first);
    }
    std::size_t width = 3;
    std::size_t start = pos + 1;
    if (value(pos + 1) == 63) {
        width = 6;
        start = pos + 2;
    }
    std::uint64_t n = 0;
    for (std::size_t i = 0; i < width; ++i) {
        n = (n << 6) | value(start + i);
    }
    pos = start + width;
    return static_cast<std::size_t>(n);
}

inline std::string encode_order(std::size_t n) {
    std::string out;
    auto put = [&](std::uint64_t v, int groups) {
        for (int g = groups - 1; g >= 0; --g)
            out.push_back(static_cast<char>(((v >> (6 * g)) & 63) + kBias));
    };
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kBias));
    } else if (n <= 258047) {
        out.push_back('~');
        put(n, 3);
    } else {
        out += "~~";
        put(n, 6);
    }
    return out;
}

inline std::string_view trim_line(std::string_view s) {
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ' || s.back() == '\t'))
        s.remove_suffix(1);
    return s;
}

inline std::string_view strip_header(std::string_view s, std::string_view header) {
    if (s.substr(0, header.size()) == header)
        s.remove_prefix(header.size());
    return s;
}

inline void expect_end(const SixBitReader& r, std::string_view s) {
    if (r.pending_value() != 0)
        throw ParseError("non-zero padding bits", r.offset() - 1);
    if (r.offset() != s.size())
        throw ParseError("trailing bytes after payload", r.offset());
}

}  // namespace detail

inline Graph parse_graph6(std::string_view text) {
    std::string_view s = detail::strip_header(detail::trim_line(text), ">>graph6<<");
    std::size_t pos = 0;
    const std::size_t n = detail::decode_order(s, pos);
    detail::SixBitReader r(s, pos);
    std::vector<VertexPair> edges;
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = 0; i < j; ++i) {
            int b = r.bit();
            if (b < 0)
                throw ParseError("graph6 payload too short", s.size());
            if (b)
                edges.emplace_back(i, j);
        }
    detail::expect_end(r, s);
    return Graph(n, edges);
}

inline std::string to_graph6(const Graph& g) {
    std::string out = detail::encode_order(g.order());
    detail::SixBitWriter w;
    for (std::size_t j = 1; j < g.order(); ++j)
        for (std::size_t i = 0; i < j; ++i)
            w.bit(g.has_edge(i, j) ? 1 : 0);
    return out + w.finish();
}

inline Digraph parse_digraph6(std::string_view text) {
    std::string_view s = detail::strip_header(detail::trim_line(text), ">>digraph6<<");
    if (s.empty() || s[0] != '&')
        throw ParseError("digraph6 must start with '&'", 0);
    std::size_t pos = 1;
    const std::size_t n = detail::decode_order(s, pos);
    detail::SixBitReader r(s, pos);
    std::vector<VertexPair> arcs;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            int b = r.bit();
            if (b < 0)
                throw ParseError("digraph6 payload too short", s.size());
            if (b)
                arcs.emplace_back(i, j);
        }
    detail::expect_end(r, s);
    return Digraph(n, arcs);
}

inline std::string to_digraph6(const Digraph& d) {
    std::string out = "&" + detail::encode_order(d.order());
    detail::SixBitWriter w;
    for (std::size_t i = 0; i < d.order(); ++i)
        for (std::size_t j = 0; j < d.order(); ++j)
            w.bit(d.has_arc(i, j) ? 1 : 0);
    return out + w.finish();
}

namespace detail {
inline int sparse6_width(std::size_t n) {
    int k = 0;
    for (std::size_t v = n > 0 ? n - 1 : 0; v > 0; v >>= 1)
        ++k;
    return k;
}
}  // namespace detail

inline Graph parse_sparse6(std::string_view text) {
    std::string_view s = detail::strip_header(detail::trim_line(text), ">>sparse6<<");
    if (s.empty() || s[0] != ':')
        throw ParseError("sparse6 must start with ':'", 0);
    std::size_t pos = 1;
    const std::size_t n = detail::decode_order(s, pos);
    const int k = detail::sparse6_width(n);
    detail::SixBitReader r(s, pos);
    std::vector<VertexPair> edges;
    std::size_t v = 0;
    for (;;) {
        int b = r.bit();
        if (b < 0)
            break;
        std::size_t x = 0;
        bool complete = true;
        for (int i = 0; i < k; ++i) {
            int xb = r.bit();
            if (xb < 0) {
                complete = false;
                break;
            }
            x = (x << 1) | static_cast<std::size_t>(xb);
        }
        if (!complete)
            break;
        if (b)
            ++v;
        if (v >= n)
            break;
        if (x > v)
            v = x;
        else
            edges.emplace_back(x, v);
    }
    return Graph(n, edges);
}

inline std::string to_sparse6(const Graph& g) {
    const std::size_t n = g.order();
    const int k = detail::sparse6_width(n);
    std::string out = ":" + detail::encode_order(n);
    detail::SixBitWriter w;
    // Edges sorted by larger endpoint, then smaller.
    std::vector<VertexPair> byv(g.edges());
    std::sort(byv.begin(), byv.end(), [](const VertexPair& a, const VertexPair& b) {
        return a.second != b.second ? a.second < b.second : a.first < b.first;
    });
    std::size_t last = 0;
    for (const auto& [i, j] : byv) {
        if (j == last) {
            w.bit(0);
        } else {
            w.bit(1);
            if (j > last + 1) {
                w.bits(j, k);
                w.bit(0);
            }
            last = j;
        }
        w.bits(i, k);
    }
    if (w.used() != 0) {
        const int pad = 6 - w.used();
        if (k < 6 && n == (std::size_t{1} << k) && last == n - 2 && pad >= k + 1)
            w.bit(0);
    }
    return out + w.finish(1);
}

/// Dispatches on the leading byte: '&' digraph6, ':' sparse6, else graph6.
inline AnyGraph parse_graph_line(std::string_view line) {
    std::string_view s = detail::trim_line(line);
    if (s.starts_with(">>digraph6<<") || s.starts_with("&"))
        return parse_digraph6(s);
    if (s.starts_with(">>sparse6<<") || s.starts_with(":"))
        return parse_sparse6(s);
    return parse_graph6(s);
}

/// {"n": int, "directed": bool, "edges": [[u, v], ...]} with 1-based endpoints.
inline AnyGraph parse_edge_list_json(const nlohmann::json& doc) {
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("edges"))
        throw ValidationError("edge-list JSON needs object with \"n\" and \"edges\"");
    if (!doc["n"].is_number_integer() || doc["n"].get<long long>() < 0)
        throw ValidationError("\"n\" must be a non-negative integer");
    const auto n = static_cast<std::size_t>(doc["n"].get<long long>());
    const bool directed = doc.value("directed", false);
    if (!doc["edges"].is_array())
        throw ValidationError("\"edges\" must be an array");
    std::vector<VertexPair> pairs;
    for (const auto& e : doc["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
            throw ValidationError("edge must be a pair of integers: " + e.dump());
        const long long u = e[0].get<long long>();
        const long long v = e[1].get<long long>();
        if (u < 1 || v < 1 || static_cast<std::size_t>(u) > n || static_cast<std::size_t>(v) > n)
            throw ValidationError("edge endpoint out of range [" + std::to_string(u) + "," + std::to_string(v) + "]");
        pairs.emplace_back(static_cast<std::size_t>(u - 1), static_cast<std::size_t>(v - 1));
    }
    if (directed)
        return Digraph(n, pairs);
    return Graph(n, pairs);
}

inline AnyGraph parse_edge_list_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
    }
    return parse_edge_list_json(doc);
}

inline nlohmann::json to_edge_list_json(const AnyGraph& g) {
    nlohmann::json edges = nlohmann::json::array();
    std::size_t n = 0;
    bool directed = false;
    std::visit(
        [&](const auto& h) {
            n = h.order();
            using T = std::decay_t<decltype(h)>;
            directed = std::is_same_v<T, Digraph>;
            if constexpr (std::is_same_v<T, Digraph>) {
                for (const auto& [u, v] : h.arcs())
                    edges.push_back({u + 1, v + 1});
            } else {
                for (const auto& [u, v] : h.edges())
                    edges.push_back({u + 1, v + 1});
            }
        },
        g);
    return {{"n", n}, {"directed", directed}, {"edges", edges}};
}

}  // namespace immanant
