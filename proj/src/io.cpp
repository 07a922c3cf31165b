#include "lamalpha/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace lam {
namespace {

// single-space separated decimal fields, no leading/trailing blanks
std::vector<long> parse_fields(const std::string& line, int lineno) {
  if (line.empty()) throw hg_parse_error(lineno, "empty line");
  if (line.front() == ' ' || line.back() == ' ')
    throw hg_parse_error(lineno, "leading or trailing whitespace");
  std::vector<long> out;
  size_t pos = 0;
  while (pos < line.size()) {
    size_t end = line.find(' ', pos);
    if (end == std::string::npos) end = line.size();
    if (end == pos) throw hg_parse_error(lineno, "repeated separator");
    long value = 0;
    auto [ptr, ec] =
        std::from_chars(line.data() + pos, line.data() + end, value);
    if (ec != std::errc() || ptr != line.data() + end)
      throw hg_parse_error(lineno, "malformed integer field");
    out.push_back(value);
    pos = end + 1;
  }
  return out;
}

}  // namespace

Hypergraph read_hg(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw hg_parse_error(1, "missing header");
  auto header = parse_fields(line, 1);
  if (header.size() != 3)
    throw hg_parse_error(1, "header must be `r n m`");
  long r = header[0], n = header[1], m = header[2];
  if (r < 2) throw hg_parse_error(1, "uniformity must be >= 2");
  if (n < 0) throw hg_parse_error(1, "negative vertex count");
  if (m < 0 || m > binomial(static_cast<int>(n), static_cast<int>(r)))
    throw hg_parse_error(1, "edge count out of range");

  std::vector<Edge> edges;
  Edge prev;
  for (long i = 0; i < m; ++i) {
    int lineno = static_cast<int>(i) + 2;
    if (!std::getline(in, line))
      throw hg_parse_error(lineno, "unexpected end of file");
    auto fields = parse_fields(line, lineno);
    if (static_cast<long>(fields.size()) != r)
      throw hg_parse_error(lineno, "edge must have exactly r vertices");
    Edge e;
    for (long v : fields) {
      if (v < 0 || v >= n)
        throw hg_parse_error(lineno, "vertex index out of range");
      if (!e.empty() && v <= e.back())
        throw hg_parse_error(lineno, "vertices must be strictly increasing");
      e.push_back(static_cast<int>(v));
    }
    if (!prev.empty() && !(prev < e))
      throw hg_parse_error(lineno, "edges must be in strict lexicographic order");
    prev = e;
    edges.push_back(std::move(e));
  }
  if (std::getline(in, line) && !line.empty())
    throw hg_parse_error(static_cast<int>(m) + 2, "trailing content");
  return Hypergraph::create(static_cast<int>(r), static_cast<int>(n),
                            std::move(edges));
}

Hypergraph read_hg_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_hg(in);
}

std::string to_hg_string(const Hypergraph& g) {
  std::ostringstream out;
  out << g.r << ' ' << g.n << ' ' << g.num_edges() << '\n';
  for (const auto& e : g.edges) {
    for (size_t i = 0; i < e.size(); ++i)
      out << (i ? " " : "") << e[i];
    out << '\n';
  }
  return out.str();
}

void write_hg_file(const Hypergraph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << to_hg_string(g);
}

std::string hg_identifier(const Hypergraph& g) {
  std::string s = to_hg_string(g);
  while (!s.empty() && s.back() == '\n') s.pop_back();
  for (char& c : s)
    if (c == '\n') c = ';';
  return s;
}

Hypergraph standard_construction(const std::string& name,
                                 const std::vector<int>& params) {
  auto want = [&](size_t k) {
    if (params.size() != k)
      throw std::invalid_argument("construction " + name + ": expected " +
                                  std::to_string(k) + " parameters");
  };
  if (name == "complete") {
    want(2);
    return complete_graph(params[0], params[1]);
  }
  if (name == "fano") {
    want(0);
    return fano_plane();
  }
  if (name == "turan") {
    want(2);
    return turan_graph(params[0], params[1]);
  }
  if (name == "bipartition" || name == "bipartition_3graph") {
    want(2);
    return bipartition_3graph(params[0], params[1]);
  }
  throw std::invalid_argument("unknown construction: " + name);
}

Hypergraph load_graph(const std::string& spec) {
  if (spec.find(':') == std::string::npos && spec != "fano")
    return read_hg_file(spec);
  std::vector<int> params;
  size_t pos = spec.find(':');
  std::string name = spec.substr(0, pos);
  while (pos != std::string::npos) {
    size_t end = spec.find(':', pos + 1);
    std::string tok = spec.substr(pos + 1, end == std::string::npos
                                               ? std::string::npos
                                               : end - pos - 1);
    params.push_back(std::stoi(tok));
    pos = end;
  }
  return standard_construction(name, params);
}

}  // namespace lam
