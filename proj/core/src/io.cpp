#include "orbitscope/io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "orbitscope/errors.hpp"

namespace orbitscope::io {
namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

struct Line {
  std::size_t number;  // 1-based
  std::vector<Token> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      const std::size_t start = i;
      while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      if (i > start) line.tokens.push_back({raw.substr(start, i - start), start + 1});
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    if (end == text.size()) break;
    pos = end + 1;
  }
  return lines;
}

std::uint64_t to_uint(const Token& token, std::size_t line, const char* what) {
  std::uint64_t value = 0;
  const char* first = token.text.data();
  const char* last = first + token.text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw ParseError(std::string("expected ") + what + ", got '" + std::string(token.text) + "'",
                     line, token.column);
  }
  return value;
}

void expect_count(const Line& line, std::size_t count, const char* what) {
  if (line.tokens.size() != count) {
    throw ParseError(std::string(what) + ": expected " + std::to_string(count) + " fields, got " +
                         std::to_string(line.tokens.size()),
                     line.number, 0);
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

const char* to_string(Format f) {
  switch (f) {
    case Format::kGraph6: return "graph6";
    case Format::kDimacs: return "dimacs";
    case Format::kCdg: return "cdg";
    case Format::kWindowSet: return "ws";
  }
  return "?";
}

std::optional<Format> parse_format(std::string_view name) {
  if (name == "graph6") return Format::kGraph6;
  if (name == "dimacs") return Format::kDimacs;
  if (name == "cdg") return Format::kCdg;
  if (name == "ws") return Format::kWindowSet;
  return std::nullopt;
}

Format sniff_format(std::string_view text) {
  for (const auto& line : tokenize(text)) {
    const auto head = line.tokens.front().text;
    if (head == "cdg") return Format::kCdg;
    if (head == "ws") return Format::kWindowSet;
    if (head == "p" || head == "c" || head == "e") return Format::kDimacs;
    return Format::kGraph6;
  }
  return Format::kGraph6;
}

Graph parse_graph6(std::string_view text) {
  std::string_view s = trim(text);
  constexpr std::string_view kHeader = ">>graph6<<";
  if (s.starts_with(kHeader)) s = trim(s.substr(kHeader.size()));
  if (const auto nl = s.find('\n'); nl != std::string_view::npos) s = trim(s.substr(0, nl));
  if (s.empty()) throw ParseError("empty graph6 input", 1, 0);
  if (s.front() == ':' || s.front() == '&' || s.front() == ';') {
    throw ParseError("sparse6/digraph6 are not supported", 1, 1);
  }
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 63 || s[i] > 126) {
      throw ParseError("invalid graph6 character", 1, i + 1);
    }
  }
  auto byte = [&](std::size_t i) -> std::uint64_t {
    if (i >= s.size()) throw ParseError("graph6 input truncated", 1, s.size());
    return static_cast<std::uint64_t>(s[i] - 63);
  };
  std::size_t n = 0;
  std::size_t pos = 0;
  if (s[0] != '~') {
    n = byte(0);
    pos = 1;
  } else if (s.size() > 1 && s[1] == '~') {
    for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | byte(i);
    pos = 8;
  } else {
    for (std::size_t i = 1; i < 4; ++i) n = (n << 6) | byte(i);
    pos = 4;
  }
  const std::size_t bits = n * (n > 0 ? n - 1 : 0) / 2;
  const std::size_t expected = (bits + 5) / 6;
  if (s.size() - pos != expected) {
    throw ParseError("graph6 body has " + std::to_string(s.size() - pos) + " bytes, expected " +
                         std::to_string(expected) + " for n = " + std::to_string(n),
                     1, pos + 1);
  }
  std::vector<std::pair<VertexId, VertexId>> edges;
  std::size_t k = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++k) {
      if ((byte(pos + k / 6) >> (5 - k % 6)) & 1u) {
        edges.emplace_back(static_cast<VertexId>(i), static_cast<VertexId>(j));
      }
    }
  }
  return from_edges(n, edges);
}

Graph parse_dimacs(std::string_view text) {
  std::optional<std::size_t> n;
  std::size_t declared_edges = 0;
  std::size_t edge_lines = 0;
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (const auto& line : tokenize(text)) {
    const auto head = line.tokens.front().text;
    if (head == "c") continue;
    if (head == "p") {
      if (n) throw ParseError("duplicate problem line", line.number, 1);
      expect_count(line, 4, "problem line");
      if (line.tokens[1].text != "edge" && line.tokens[1].text != "col") {
        throw ParseError("unsupported DIMACS problem type '" + std::string(line.tokens[1].text) + "'",
                         line.number, line.tokens[1].column);
      }
      n = to_uint(line.tokens[2], line.number, "vertex count");
      declared_edges = to_uint(line.tokens[3], line.number, "edge count");
      continue;
    }
    if (head == "e") {
      if (!n) throw ParseError("edge before problem line", line.number, 1);
      expect_count(line, 3, "edge line");
      const auto u = to_uint(line.tokens[1], line.number, "vertex");
      const auto v = to_uint(line.tokens[2], line.number, "vertex");
      for (std::size_t t = 1; t <= 2; ++t) {
        const auto x = t == 1 ? u : v;
        if (x < 1 || x > *n) {
          throw ParseError("vertex " + std::to_string(x) + " out of range [1, " +
                               std::to_string(*n) + "]",
                           line.number, line.tokens[t].column);
        }
      }
      if (u == v) throw ParseError("self-loop", line.number, line.tokens[1].column);
      ++edge_lines;
      edges.emplace_back(static_cast<VertexId>(u - 1), static_cast<VertexId>(v - 1));
      continue;
    }
    throw ParseError("unknown DIMACS line type '" + std::string(head) + "'", line.number, 1);
  }
  if (!n) throw ParseError("missing problem line", 1, 0);
  if (edge_lines != declared_edges) {
    throw ParseError("header declares " + std::to_string(declared_edges) + " edges, found " +
                         std::to_string(edge_lines),
                     1, 0);
  }
  return from_edges(*n, edges);
}

Graph parse_cdg(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.empty()) throw ParseError("empty CDG input", 1, 0);
  const auto& header = lines.front();
  if (header.tokens.front().text != "cdg") throw ParseError("missing 'cdg' header", header.number, 1);
  expect_count(header, 3, "CDG header");
  const std::size_t n = to_uint(header.tokens[1], header.number, "vertex count");
  const std::size_t c = to_uint(header.tokens[2], header.number, "color count");
  if (lines.size() - 1 != n) {
    throw ParseError("header declares " + std::to_string(n) + " rows, found " +
                         std::to_string(lines.size() - 1),
                     header.number, 0);
  }
  std::vector<std::uint64_t> labels;
  labels.reserve(n * n);
  std::vector<bool> used(c, false);
  for (std::size_t r = 0; r < n; ++r) {
    const auto& line = lines[r + 1];
    expect_count(line, n, "CDG row");
    for (const auto& token : line.tokens) {
      const auto value = to_uint(token, line.number, "color id");
      if (value >= c) {
        throw ParseError("color " + std::to_string(value) + " out of range [0, " +
                             std::to_string(c) + ")",
                         line.number, token.column);
      }
      used[value] = true;
      labels.push_back(value);
    }
  }
  for (std::size_t i = 0; i < c; ++i) {
    if (!used[i]) {
      throw ParseError("header declares " + std::to_string(c) + " colors but color " +
                           std::to_string(i) + " never occurs",
                       header.number, header.tokens[2].column);
    }
  }
  return Graph::from_labels(n, labels);
}

Graph parse_graph(std::string_view text, std::optional<Format> format) {
  switch (format.value_or(sniff_format(text))) {
    case Format::kGraph6: return parse_graph6(text);
    case Format::kDimacs: return parse_dimacs(text);
    case Format::kCdg: return parse_cdg(text);
    case Format::kWindowSet: break;
  }
  throw ParseError("window-set input is not a graph", 1, 1);
}

WindowSet parse_window_set(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.empty()) throw ParseError("empty window-set input", 1, 0);
  const auto& header = lines.front();
  if (header.tokens.front().text != "ws") throw ParseError("missing 'ws' header", header.number, 1);
  expect_count(header, 3, "window-set header");
  const std::size_t k = to_uint(header.tokens[1], header.number, "window width");
  const std::size_t m = to_uint(header.tokens[2], header.number, "window count");
  if (k == 0) throw ParseError("window width must be positive", header.number, header.tokens[1].column);
  if (lines.size() - 1 != m) {
    throw ParseError("header declares " + std::to_string(m) + " windows, found " +
                         std::to_string(lines.size() - 1),
                     header.number, 0);
  }
  std::vector<Window> windows;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& line = lines[i];
    expect_count(line, 2 * k, "window");
    Window w;
    for (std::size_t t = 0; t < 2 * k; ++t) {
      const auto value = static_cast<VertexId>(to_uint(line.tokens[t], line.number, "vertex id"));
      (t < k ? w.top : w.bottom).push_back(value);
    }
    try {
      WindowSet single(k, {w});
    } catch (const InvariantViolation& e) {
      throw ParseError(e.what(), line.number, 0);
    }
    windows.push_back(std::move(w));
  }
  return WindowSet(k, std::move(windows));
}

std::string write_cdg(const Graph& g) {
  std::ostringstream out;
  const std::size_t n = g.order();
  out << "cdg " << n << ' ' << g.color_count() << '\n';
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      if (v) out << ' ';
      out << g.at(static_cast<VertexId>(u), static_cast<VertexId>(v));
    }
    out << '\n';
  }
  return out.str();
}

std::string encode_graph6(const Graph& g) {
  const std::size_t n = g.order();
  auto label = [&](std::size_t u, std::size_t v) {
    return g.palette()[g.at(static_cast<VertexId>(u), static_cast<VertexId>(v))];
  };
  for (std::size_t u = 0; u < n; ++u) {
    if (label(u, u) != 0) throw InvariantViolation("graph6 needs uniform vertex color 0");
    for (std::size_t v = 0; v < n; ++v) {
      if (u != v && (label(u, v) != label(v, u) || (label(u, v) != 1 && label(u, v) != 2))) {
        throw InvariantViolation("graph6 needs a simple undirected graph");
      }
    }
  }
  std::string out;
  if (n < 63) {
    out.push_back(static_cast<char>(63 + n));
  } else if (n < (1u << 18)) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  } else {
    out += "~~";
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  }
  unsigned acc = 0;
  int filled = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      acc = (acc << 1) | (label(i, j) == 1 ? 1u : 0u);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace orbitscope::io
