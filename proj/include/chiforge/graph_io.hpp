#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "chiforge/graph.hpp"

namespace chiforge {

// graph6: one graph per line; standard upper-triangle, column-major, 6-bit
// chunks biased by 63. An optional ">>graph6<<" header is tolerated and
// stripped on read. write(read(s)) == s on valid input.
Graph read_graph6(std::string_view line);
std::string write_graph6(const Graph& g);

// DIMACS .col: "p edge n m" header then "e u v" lines, 1-indexed.
// "c" comment lines are skipped.
Graph read_dimacs(std::istream& in);
Graph read_dimacs_file(const std::string& path);

}  // namespace chiforge
