#include "pathmax/tsv.hpp"

#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

#include "pathmax/errors.hpp"

namespace pathmax {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t");
  return s.substr(a, b - a + 1);
}

[[noreturn]] void fail(const std::string& source, std::size_t line,
                       const std::string& what) {
  throw ParseError(source + ":" + std::to_string(line) + ": " + what);
}

Vertex parse_vertex(const std::string& source, std::size_t line,
                    const std::string& text) {
  if (text.empty()) fail(source, line, "empty vertex id");
  for (char c : text)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      fail(source, line, "bad vertex id '" + text + "'");
  try {
    return std::stoull(text);
  } catch (const std::exception&) {
    fail(source, line, "vertex id '" + text + "' out of range");
  }
}

}  // namespace

Graph read_graph(std::istream& in, const std::string& source) {
  std::vector<Vertex> declared;
  std::vector<Edge> edges;
  std::optional<Mode> mode;
  bool all_integer = true;

  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    std::string line = trim(raw);
    if (line.empty()) continue;

    if (line[0] == '#') {
      std::string body = trim(line.substr(1));
      if (body.rfind("mode:", 0) == 0) {
        std::string value = trim(body.substr(5));
        Mode m;
        if (value == "nat")
          m = Mode::Nat;
        else if (value == "rat")
          m = Mode::Rat;
        else
          fail(source, lineno, "bad mode '" + value + "' (want nat or rat)");
        if (mode && *mode != m)
          fail(source, lineno, "conflicting mode directives");
        mode = m;
      } else if (body.rfind("vertex:", 0) == 0) {
        declared.push_back(parse_vertex(source, lineno, trim(body.substr(7))));
      }
      continue;
    }

    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
      std::size_t tab = raw.find('\t', start);
      if (tab == std::string::npos) {
        fields.push_back(raw.substr(start));
        break;
      }
      fields.push_back(raw.substr(start, tab - start));
      start = tab + 1;
    }
    if (fields.size() != 3)
      fail(source, lineno,
           "expected 3 tab-separated fields, got " +
               std::to_string(fields.size()));

    Edge e;
    e.src = parse_vertex(source, lineno, trim(fields[0]));
    e.tgt = parse_vertex(source, lineno, trim(fields[1]));
    std::string label_text = trim(fields[2]);
    try {
      e.label = Label::parse(label_text);
    } catch (const Error& err) {
      fail(source, lineno, err.what());
    }
    if (e.label.is_zero()) fail(source, lineno, "edge label must be nonzero");
    if (!e.label.is_integer()) all_integer = false;
    edges.push_back(std::move(e));
  }

  Mode m = mode.value_or(all_integer ? Mode::Nat : Mode::Rat);
  std::vector<Vertex> vertices = std::move(declared);
  for (const Edge& e : edges) {
    vertices.push_back(e.src);
    vertices.push_back(e.tgt);
  }
  try {
    return Graph::make(std::move(vertices), std::move(edges), m);
  } catch (const HypothesisError& err) {
    throw ParseError(source + ": " + err.what());
  }
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  return read_graph(in, path);
}

Graph read_graph_string(const std::string& text) {
  std::istringstream in(text);
  return read_graph(in, "<string>");
}

void write_graph(const Graph& g, std::ostream& out) {
  out << "# mode: " << (g.mode() == Mode::Nat ? "nat" : "rat") << "\n";
  for (std::size_t vi = 0; vi < g.vertex_count(); ++vi)
    if (g.out_edges()[vi].empty() && g.in_edges()[vi].empty())
      out << "# vertex: " << g.vertices()[vi] << "\n";
  for (const Edge& e : g.edges())
    out << e.src << '\t' << e.tgt << '\t' << e.label.str() << "\n";
}

void write_graph_file(const Graph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError(path + ": cannot open file for writing");
  write_graph(g, out);
  out.close();
  if (!out) throw ParseError(path + ": write failed");
}

std::string write_graph_string(const Graph& g) {
  std::ostringstream out;
  write_graph(g, out);
  return out.str();
}

}  // namespace pathmax
