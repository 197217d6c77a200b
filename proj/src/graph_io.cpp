#include "lpa/graph_io.hpp"

#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

namespace lpa {

namespace {

struct TokenAt {
  std::string text;
  int column;  // 1-based
};

// Strips the comment (a '#' at line start or after whitespace) and splits on
// whitespace.
std::vector<TokenAt> tokenize_line(std::string_view line) {
  std::size_t end = line.size();
  for (std::size_t i = 0; i < line.size(); ++i) {
    if (line[i] == '#' &&
        (i == 0 || std::isspace(static_cast<unsigned char>(line[i - 1])))) {
      end = i;
      break;
    }
  }
  std::vector<TokenAt> out;
  std::size_t i = 0;
  while (i < end) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < end && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    out.push_back({std::string(line.substr(i, j - i)), static_cast<int>(i) + 1});
    i = j;
  }
  return out;
}

std::vector<std::string> split_commas(const std::string& text, int line,
                                      int column) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    std::string part = comma == std::string::npos
                           ? text.substr(start)
                           : text.substr(start, comma - start);
    if (part.empty()) {
      throw ParseError("empty bundle target", line, column);
    }
    out.push_back(std::move(part));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

GraphPtr load_graph(std::string_view text) {
  std::vector<std::string> vertices;
  std::vector<EdgeRecord> edges;
  std::vector<BundleRecord> bundles;

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line = eol == std::string_view::npos
                                ? text.substr(pos)
                                : text.substr(pos, eol - pos);
    ++line_no;
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;

    std::vector<TokenAt> tok = tokenize_line(line);
    if (tok.empty()) continue;
    const std::string& kw = tok[0].text;
    if (kw == "vertex") {
      if (tok.size() != 2) {
        throw ParseError("expected: vertex <id>", line_no, tok[0].column);
      }
      vertices.push_back(tok[1].text);
    } else if (kw == "edge") {
      if (tok.size() != 4) {
        throw ParseError("expected: edge <id> <src> <dst>", line_no,
                         tok[0].column);
      }
      edges.push_back(EdgeRecord{tok[1].text, tok[2].text, tok[3].text});
    } else if (kw == "bundle") {
      if (tok.size() != 3) {
        throw ParseError("expected: bundle <src> <dst>[,<dst>...]", line_no,
                         tok[0].column);
      }
      bundles.push_back(BundleRecord{
          tok[1].text, split_commas(tok[2].text, line_no, tok[2].column)});
    } else {
      throw ParseError("unknown directive: " + kw, line_no, tok[0].column);
    }
  }
  return make_graph(std::move(vertices), std::move(edges), std::move(bundles));
}

GraphPtr load_valid_graph(std::string_view text) {
  GraphPtr g = load_graph(text);
  if (!g->is_valid()) {
    std::string msg = "invalid graph:";
    for (const std::string& v : g->violations()) msg += "\n  " + v;
    throw std::domain_error(msg);
  }
  return g;
}

std::string save_graph(const Graph& g) {
  std::string out;
  for (const std::string& v : g.vertices()) out += "vertex " + v + "\n";
  for (const EdgeRecord& e : g.edges()) {
    out += "edge " + e.id + " " + e.src + " " + e.dst + "\n";
  }
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (!g.has_bundle(v)) continue;
    out += "bundle " + g.vertex_name(v) + " ";
    const std::vector<int>& ts = g.bundle_targets(v);
    for (std::size_t i = 0; i < ts.size(); ++i) {
      if (i) out += ",";
      out += g.vertex_name(ts[i]);
    }
    out += "\n";
  }
  return out;
}

std::string graph_to_dot(const Graph& g) {
  std::string out = "digraph E {\n";
  for (const std::string& v : g.vertices()) {
    out += "  \"" + v + "\";\n";
  }
  for (const EdgeRecord& e : g.edges()) {
    out += "  \"" + e.src + "\" -> \"" + e.dst + "\" [label=\"" + e.id +
           "\"];\n";
  }
  for (int v = 0; v < g.vertex_count(); ++v) {
    for (int t : g.bundle_targets(v)) {
      out += "  \"" + g.vertex_name(v) + "\" -> \"" + g.vertex_name(t) +
             "\" [label=\"∞\", style=bold];\n";
    }
  }
  out += "}\n";
  return out;
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open file: " + path);
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace lpa
