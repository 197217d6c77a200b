#ifndef LPA_GRAPH_IO_HPP
#define LPA_GRAPH_IO_HPP

#include <stdexcept>
#include <string>
#include <string_view>

#include "lpa/graph.hpp"

namespace lpa {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, int line, int column)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) +
                           ": " + message),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// Line-oriented graph format:
///   vertex <id>
///   edge <id> <src> <dst>
///   bundle <src> <dst>[,<dst>...]
/// '#' starts a comment at line start or after whitespace (identifiers may
/// contain '#'). Throws ParseError on malformed input; the returned graph
/// may still carry validation violations.
GraphPtr load_graph(std::string_view text);

/// load_graph + a std::domain_error when the graph has violations.
GraphPtr load_valid_graph(std::string_view text);

/// Canonical text; save_graph(load_graph(t)) is a fixed point of itself.
std::string save_graph(const Graph& g);

/// DOT rendering; bundles are bold edges labeled with the infinity sign.
std::string graph_to_dot(const Graph& g);

/// Reads a file, or stdin when path is "-".
std::string read_input(const std::string& path);

}  // namespace lpa

#endif
