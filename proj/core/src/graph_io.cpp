#include "cdg/graph_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "cdg/errors.hpp"

namespace cdg {

Graph read_edge_list(std::istream& in) {
  GraphBuilder b;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream fields(line);
    std::string u, v, extra;
    if (!(fields >> u)) continue;
    if (u.front() == '#') continue;
    if (!(fields >> v)) {
      b.add_vertex(u);
      continue;
    }
    if (fields >> extra) throw ParseError("expected at most two labels per line", line_no);
    if (u == v) throw ParseError("loop at vertex '" + u + "'", line_no);
    b.add_edge(u, v);
  }
  return b.build();
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_edge_list(in);
}

Graph load_edge_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  // Each vertex is introduced on its own line or through its first edge to
  // an earlier vertex, so reading the text back keeps the vertex order.
  std::set<Edge> written;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const auto& nbrs = g.neighbors(v);
    if (!nbrs.empty() && nbrs.front() < v) {
      out << g.label(nbrs.front()) << ' ' << g.label(v) << '\n';
      written.insert({nbrs.front(), v});
    } else {
      out << g.label(v) << '\n';
    }
  }
  for (const auto& e : g.edges()) {
    if (!written.count(e)) out << g.label(e.first) << ' ' << g.label(e.second) << '\n';
  }
}

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out + "\"";
}

}  // namespace

std::string to_dot(const Graph& g, const std::optional<Orientation>& orientation, std::string_view name) {
  if (orientation) require_covers(g, *orientation);
  std::ostringstream os;
  os << (orientation ? "digraph " : "graph ") << quoted(std::string(name)) << " {\n";
  for (const auto& l : g.labels()) os << "  " << quoted(l) << ";\n";
  if (orientation) {
    for (auto [u, v] : orientation->arcs()) os << "  " << quoted(g.label(u)) << " -> " << quoted(g.label(v)) << ";\n";
  } else {
    for (auto [u, v] : g.edges()) os << "  " << quoted(g.label(u)) << " -- " << quoted(g.label(v)) << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace cdg
