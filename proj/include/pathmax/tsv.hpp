#pragma once

#include <iosfwd>
#include <string>

#include "pathmax/graph.hpp"

namespace pathmax {

// Tab-separated graph format, one edge per line:
//
//   src<TAB>tgt<TAB>label
//
// Labels are "p" or "p/q". Blank lines are skipped. Lines starting
// with '#' are comments, two of which are directives:
//
//   # mode: nat|rat      label domain (inferred when absent: nat iff
//                        every label is an integer)
//   # vertex: <id>       declares a vertex, used for isolated ones
//
// The writer always emits the mode directive, a vertex directive per
// isolated vertex, and edges in canonical order, so write-then-read
// reproduces the graph exactly.

Graph read_graph(std::istream& in, const std::string& source = "<input>");
Graph read_graph_file(const std::string& path);
Graph read_graph_string(const std::string& text);

void write_graph(const Graph& g, std::ostream& out);
void write_graph_file(const Graph& g, const std::string& path);
std::string write_graph_string(const Graph& g);

}  // namespace pathmax
