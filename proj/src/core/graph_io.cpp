// Copyright 2026 The cubic2ec Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cctype>
#include <charconv>
#include <string>

#include "core/errors.hpp"
#include "core/graph.hpp"

namespace cubic2ec {

namespace {

constexpr int kBias = 63;
constexpr std::string_view kGraph6Header = ">>graph6<<";

std::string_view trim_line_end(std::string_view s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

int sextet(std::string_view text, std::size_t pos) {
  const int c = static_cast<unsigned char>(text[pos]);
  if (c < kBias || c > kBias + 63) {
    throw ParseError(pos, "byte outside the graph6 range 63..126");
  }
  return c - kBias;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  text = trim_line_end(text);
  std::size_t pos = 0;
  if (text.substr(0, kGraph6Header.size()) == kGraph6Header) pos = kGraph6Header.size();
  if (pos >= text.size()) throw ParseError(pos, "empty graph6 string");

  long n = 0;
  if (text[pos] != '~') {
    n = sextet(text, pos);
    pos += 1;
  } else {
    if (pos + 1 < text.size() && text[pos + 1] == '~') {
      throw ParseError(pos, "8-byte graph6 headers exceed the supported order");
    }
    if (pos + 4 > text.size()) throw ParseError(pos, "truncated graph6 size header");
    for (std::size_t k = 1; k <= 3; ++k) n = (n << 6) | sextet(text, pos + k);
    pos += 4;
  }
  if (n > kMaxParseOrder) {
    throw Error(ErrorCode::kSizeLimit,
                "graph has " + std::to_string(n) + " vertices; limit is " +
                    std::to_string(kMaxParseOrder));
  }

  const long bit_count = n * (n - 1) / 2;
  const std::size_t byte_count = static_cast<std::size_t>((bit_count + 5) / 6);
  if (text.size() - pos != byte_count) {
    throw ParseError(std::min(text.size(), pos + byte_count),
                     "expected " + std::to_string(byte_count) + " body bytes, found " +
                         std::to_string(text.size() - pos));
  }

  std::vector<Edge> edges;
  long bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      const int value = sextet(text, pos + bit / 6);
      if ((value >> (5 - bit % 6)) & 1) edges.push_back({i, j});
    }
  }
  if (bit % 6 != 0) {
    const int value = sextet(text, pos + bit / 6);
    if ((value & ((1 << (6 - bit % 6)) - 1)) != 0) {
      throw ParseError(pos + bit / 6, "nonzero padding bits");
    }
  }
  return Graph(static_cast<int>(n), std::move(edges));
}

std::string to_graph6(const Graph& g) {
  const long n = g.order();
  if (n < 1) fail(ErrorCode::kPrecondition, "graph6 needs at least one vertex");
  if (n > 258047) fail(ErrorCode::kSizeLimit, "graph too large for graph6");
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
    }
  }
  const long bit_count = n * (n - 1) / 2;
  std::vector<unsigned char> bits(static_cast<std::size_t>(bit_count), 0);
  for (const Edge& e : g.edges()) {
    bits[static_cast<std::size_t>(e.v) * (e.v - 1) / 2 + e.u] = 1;
  }
  for (long start = 0; start < bit_count; start += 6) {
    int value = 0;
    for (int k = 0; k < 6; ++k) {
      value <<= 1;
      if (start + k < bit_count) value |= bits[start + k];
    }
    out.push_back(static_cast<char>(value + kBias));
  }
  return out;
}

namespace {

class Tokenizer {
 public:
  explicit Tokenizer(std::string_view text) : text_(text) {}

  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }

  long next_int(const char* what) {
    skip_space();
    if (pos_ >= text_.size()) throw ParseError(pos_, std::string("missing ") + what);
    long value = 0;
    const char* begin = text_.data() + pos_;
    const char* end = text_.data() + text_.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || (ptr != end && !std::isspace(static_cast<unsigned char>(*ptr)))) {
      throw ParseError(pos_, std::string("expected an integer for ") + what);
    }
    pos_ += static_cast<std::size_t>(ptr - begin);
    return value;
  }

  std::size_t pos() const { return pos_; }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Graph parse_edge_list(std::string_view text) {
  Tokenizer tok(text);
  const long n = tok.next_int("vertex count");
  const std::size_t m_pos = tok.pos();
  const long m = tok.next_int("edge count");
  if (n < 0) throw ParseError(0, "negative vertex count");
  if (m < 0) throw ParseError(m_pos, "negative edge count");
  if (n > kMaxParseOrder) {
    fail(ErrorCode::kSizeLimit, "graph has " + std::to_string(n) + " vertices; limit is " +
                                    std::to_string(kMaxParseOrder));
  }
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long i = 0; i < m; ++i) {
    const std::size_t at = tok.pos();
    const long u = tok.next_int("edge endpoint");
    const long v = tok.next_int("edge endpoint");
    if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError(at, "edge endpoint out of range");
    edges.push_back({static_cast<VertexId>(u), static_cast<VertexId>(v)});
  }
  if (!tok.at_end()) throw ParseError(tok.pos(), "trailing data after the edge list");
  return Graph(static_cast<int>(n), std::move(edges));
}

std::string to_edge_list(const Graph& g) {
  std::string out = std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
  for (const Edge& e : g.edges()) {
    out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  }
  return out;
}

}  // namespace cubic2ec
