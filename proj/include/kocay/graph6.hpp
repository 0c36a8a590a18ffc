#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "colored_graph.hpp"
#include "graph.hpp"

namespace kocay {

/// Strict graph6 decoder: header byte chr(n+63), then the upper triangle
/// column-wise in offset-63 sextets.  No optional ">>graph6<<" header, no
/// multi-byte orders (n > 10 is out of range here anyway).
inline Graph parse_graph6(std::string_view s) {
  if (s.empty()) throw parse_error("empty graph6 string", 0);
  const unsigned c0 = static_cast<unsigned char>(s[0]);
  if (c0 == 126) throw parse_error("multi-byte graph order not supported", 0);
  if (c0 < 63 || c0 > 126) throw parse_error("byte outside graph6 range", 0);
  const int n = static_cast<int>(c0) - 63;
  if (n < 1 || n > kMaxVertices) throw parse_error("graph order must be between 1 and 10", 0);
  const int m = detail::pair_count(n);
  const std::size_t groups = (m + 5) / 6;
  if (s.size() < 1 + groups) throw parse_error("graph6 string too short", s.size());
  if (s.size() > 1 + groups) throw parse_error("trailing bytes after graph6 payload", 1 + groups);
  std::uint64_t bits = 0;
  for (std::size_t gi = 0; gi < groups; ++gi) {
    const unsigned c = static_cast<unsigned char>(s[1 + gi]);
    if (c < 63 || c > 126) throw parse_error("byte outside graph6 range", 1 + gi);
    const unsigned val = c - 63;
    for (int t = 0; t < 6; ++t) {
      const bool bit = val >> (5 - t) & 1;
      const std::size_t k = gi * 6 + static_cast<std::size_t>(t);
      if (k < static_cast<std::size_t>(m)) {
        if (bit) bits |= std::uint64_t{1} << k;
      } else if (bit) {
        throw parse_error("nonzero padding bits", 1 + gi);
      }
    }
  }
  return Graph::from_bits(n, bits);
}

inline std::string serialize_graph6(const Graph& g) {
  const int m = detail::pair_count(g.order());
  std::string out(1 + (m + 5) / 6, '?');  // '?' encodes an all-zero sextet
  out[0] = static_cast<char>(63 + g.order());
  detail::for_each_bit(g.edge_bits(), [&](int k) {
    out[1 + static_cast<std::size_t>(k) / 6] += static_cast<char>(1 << (5 - k % 6));
  });
  return out;
}

namespace detail {

struct RecordCursor {
  std::string_view s;
  std::size_t pos = 0;
  std::size_t mark = 0;  // start of the last integer read

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  bool done() {
    skip_ws();
    return pos >= s.size();
  }

  bool peek_is(char c) {
    skip_ws();
    return pos < s.size() && s[pos] == c;
  }

  void expect(char c) {
    skip_ws();
    if (pos >= s.size() || s[pos] != c)
      throw parse_error(std::string("expected '") + c + "'", pos);
    ++pos;
  }

  int integer() {
    skip_ws();
    mark = pos;
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
      throw parse_error("expected an integer", pos);
    long v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      v = v * 10 + (s[pos] - '0');
      if (v > kMaxVertices * 10) throw parse_error("integer out of range", mark);
      ++pos;
    }
    return static_cast<int>(v);
  }
};

}  // namespace detail

/// Colored record: "n=<int>; R=<u-v,...>; B=<u-v,...>".  Whitespace is
/// ignored everywhere; either list may be empty.
inline ColoredGraph parse_colored_record(std::string_view s) {
  detail::RecordCursor c{s};
  c.expect('n');
  c.expect('=');
  const int n = c.integer();
  if (n < 1 || n > kMaxVertices)
    throw parse_error("graph order must be between 1 and 10", c.mark);
  c.expect(';');
  ColoredGraph g(n);
  auto read_list = [&](char label, EdgeColor color, bool last) {
    c.expect(label);
    c.expect('=');
    if (!(last ? c.done() : c.peek_is(';'))) {
      for (;;) {
        const int a = c.integer();
        const std::size_t at = c.mark;
        c.expect('-');
        const int b = c.integer();
        if (a >= n || b >= n) throw parse_error("endpoint out of range", at);
        try {
          g.add_edge(a, b, color);
        } catch (const input_error& e) {
          throw parse_error(e.what(), at);
        }
        if (last ? c.done() : c.peek_is(';')) break;
        c.expect(',');
      }
    }
    if (!last) c.expect(';');
  };
  read_list('R', EdgeColor::red, false);
  read_list('B', EdgeColor::blue, true);
  if (!c.done()) throw parse_error("trailing characters", c.pos);
  return g;
}

inline std::string serialize_colored_record(const ColoredGraph& g) {
  auto list = [](const std::vector<std::pair<int, int>>& pairs) {
    std::string out;
    for (auto [a, b] : pairs) {
      if (!out.empty()) out += ',';
      out += std::to_string(a);
      out += '-';
      out += std::to_string(b);
    }
    return out;
  };
  return "n=" + std::to_string(g.order()) + "; R=" + list(g.red_edges()) +
         "; B=" + list(g.blue_edges());
}

}  // namespace kocay
