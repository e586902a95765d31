#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "orbitscope/assembly.hpp"
#include "orbitscope/graph.hpp"

namespace orbitscope::io {

enum class Format { kGraph6, kDimacs, kCdg, kWindowSet };

const char* to_string(Format f);
std::optional<Format> parse_format(std::string_view name);

// Guesses the format from the first non-blank, non-comment line:
// "cdg" -> CDG, "ws" -> window set, "p" or "c" -> DIMACS, otherwise graph6.
Format sniff_format(std::string_view text);

// graph6 (one graph, optional ">>graph6<<" header), simple undirected.
Graph parse_graph6(std::string_view text);
// DIMACS edge format, 1-based vertices. Duplicate edges are ignored,
// self-loops rejected, and the edge-line count must match the header.
Graph parse_dimacs(std::string_view text);
// Native colored digraph: "cdg n c" then n rows of n colors in [0, c).
// Every color in [0, c) must occur.
Graph parse_cdg(std::string_view text);

// Dispatches on `format`, sniffing when absent. Window sets are not
// graphs and are rejected here with a ParseError.
Graph parse_graph(std::string_view text, std::optional<Format> format = std::nullopt);

// "ws k m", then m lines of 2k integers: top row, then bottom row.
WindowSet parse_window_set(std::string_view text);

// Canonical CDG text: single spaces, one row per line, trailing newline.
// Uses compact color ids.
std::string write_cdg(const Graph& g);

std::string encode_graph6(const Graph& g);

// Reads a whole file; throws Error if it cannot be opened.
std::string read_file(const std::string& path);

}  // namespace orbitscope::io
