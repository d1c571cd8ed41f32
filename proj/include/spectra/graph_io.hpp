#pragma once

#include <cctype>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "spectra/error.hpp"
#include "spectra/graph.hpp"

namespace spectra {

// graph6 short form (printable ASCII, n <= 62).  The header byte is n + 63;
// the body packs the upper triangle column-major — x(0,1), x(0,2), x(1,2),
// x(0,3), ... — into 6-bit groups, most significant bit first, each group
// offset by 63.  Unused padding bits in the last group must be zero.

inline std::string serialize_graph6(const Graph& g) {
  int n = g.vertex_count();
  std::string out;
  out.push_back(static_cast<char>(n + 63));
  int bit_count = n * (n - 1) / 2;
  int group = 0;
  int bits_in_group = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      group = (group << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++bits_in_group == 6) {
        out.push_back(static_cast<char>(group + 63));
        group = 0;
        bits_in_group = 0;
      }
    }
  }
  if (bit_count % 6 != 0) {
    group <<= 6 - bit_count % 6;
    out.push_back(static_cast<char>(group + 63));
  }
  return out;
}

// Accepts an optional ">>graph6<<" prefix and trailing whitespace/newline.
// Edge indices follow the format's bit order, so parse/serialize round-trips
// are byte-identical and edge order is reproducible from the string alone.
inline Graph parse_graph6(std::string_view text) {
  constexpr std::string_view kPrefix = ">>graph6<<";
  if (text.substr(0, kPrefix.size()) == kPrefix) text.remove_prefix(kPrefix.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' ||
                           text.back() == ' ' || text.back() == '\t'))
    text.remove_suffix(1);
  if (text.empty()) fail(errc::malformed_header, "empty graph6 record");
  unsigned char header = static_cast<unsigned char>(text[0]);
  if (header == 126)
    fail(errc::malformed_header, "long-form graph6 not supported (n > 62)");
  if (header < 63 || header > 125)
    fail(errc::malformed_header, "header byte " + std::to_string(header) +
                                     " outside printable range");
  int n = header - 63;
  int bit_count = n * (n - 1) / 2;
  int body_len = (bit_count + 5) / 6;
  if (static_cast<int>(text.size()) - 1 != body_len)
    fail(errc::truncated_bits, "expected " + std::to_string(body_len) +
                                   " body bytes, got " +
                                   std::to_string(text.size() - 1));
  std::vector<std::pair<Vertex, Vertex>> edge_pairs;
  int bit_pos = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++bit_pos) {
      unsigned char byte = static_cast<unsigned char>(text[1 + static_cast<size_t>(bit_pos / 6)]);
      if (byte < 63 || byte > 126)
        fail(errc::truncated_bits, "body byte outside printable range");
      int group = byte - 63;
      if ((group >> (5 - bit_pos % 6)) & 1) edge_pairs.emplace_back(i, j);
    }
  }
  if (body_len > 0) {
    unsigned char last = static_cast<unsigned char>(text.back());
    if (last < 63 || last > 126)
      fail(errc::truncated_bits, "body byte outside printable range");
    int pad = body_len * 6 - bit_count;
    if (((last - 63) & ((1 << pad) - 1)) != 0)
      fail(errc::truncated_bits, "nonzero padding bits");
  }
  return Graph(n, std::move(edge_pairs));
}

// Edge-list text: one "u v" pair per line; '#' starts a comment; blank lines
// are ignored.  Host semantics: at least one edge, vertex count inferred.
inline Graph parse_edge_list_text(std::string_view text) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  size_t line_no = 0;
  std::istringstream stream{std::string(text)};
  std::string line;
  while (std::getline(stream, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream fields(line);
    long long a = 0, b = 0;
    std::string trailing;
    if (!(fields >> a >> b) || (fields >> trailing))
      fail(errc::malformed_edge_list,
           "line " + std::to_string(line_no) + ": expected exactly two vertex indices");
    if (a < 0 || b < 0 || a > kMaxVertices || b > kMaxVertices)
      fail(errc::malformed_edge_list,
           "line " + std::to_string(line_no) + ": vertex index out of range");
    pairs.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
  }
  return Graph::from_edge_list(pairs);
}

inline std::string serialize_edge_list_text(const Graph& g) {
  std::string out;
  for (const Edge& e : g.edges())
    out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

}  // namespace spectra
