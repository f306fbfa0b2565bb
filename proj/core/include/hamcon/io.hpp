#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "hamcon/bipartite.hpp"
#include "hamcon/set_family.hpp"

namespace hamcon {

// Input errors carry the 1-based line number of the offending line.
struct ParseError : std::runtime_error {
  ParseError(int line, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line) + ": " + msg), line(line) {}
  int line;
};

// Family text format: first line "n r", then one member per line as sorted
// space-separated vertices.
SetFamily read_family(std::istream& in);
void write_family(std::ostream& out, const SetFamily& fam);

// Cycle/path format: one line of space-separated vertices.
std::vector<int> read_sequence(std::istream& in);
void write_sequence(std::ostream& out, const std::vector<int>& seq);

// Bipartite graph format: header "bipartite n", then one line per A-vertex
// listing its B-neighbors (0-based), blank for none.
BipartiteGraph read_bipartite(std::istream& in);
void write_bipartite(std::ostream& out, const BipartiteGraph& g);

SetFamily read_family_file(const std::string& path);
BipartiteGraph read_bipartite_file(const std::string& path);

}  // namespace hamcon
