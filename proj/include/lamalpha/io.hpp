#pragma once

#include <iosfwd>
#include <string>

#include "lamalpha/hypergraph.hpp"

namespace lam {

struct hg_parse_error : std::runtime_error {
  int line;
  hg_parse_error(int line_, const std::string& what)
      : std::runtime_error("line " + std::to_string(line_) + ": " + what),
        line(line_) {}
};

/// Strict ".hg" reader: `r n m` header, then m lines of r single-space
/// separated 0-based indices, each line strictly increasing, lines in strict
/// lexicographic order. Violations are rejected, never normalized.
Hypergraph read_hg(std::istream& in);
Hypergraph read_hg_file(const std::string& path);

std::string to_hg_string(const Hypergraph& g);
void write_hg_file(const Hypergraph& g, const std::string& path);

/// Single-line witness identifier: the .hg serialization with newlines
/// replaced by ';'.
std::string hg_identifier(const Hypergraph& g);

/// Named construction dispatcher: complete(r,k), fano, turan(n,parts),
/// bipartition_3graph(a,b).
Hypergraph standard_construction(const std::string& name,
                                 const std::vector<int>& params);

/// Accepts either a .hg file path or a shorthand like "complete:3:5",
/// "fano", "turan:6:3", "bipartition:4:4".
Hypergraph load_graph(const std::string& spec);

}  // namespace lam
