#ifndef LPA_EXPR_HPP
#define LPA_EXPR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

#include "lpa/element.hpp"

namespace lpa {

/// Lexical or syntax error with a 1-based column into the source text.
class ExprError : public std::runtime_error {
 public:
  ExprError(std::string message, int column)
      : std::runtime_error(std::move(message)), column_(column) {}
  int column() const { return column_; }

 private:
  int column_;
};

/// Parses the element expression language over a graph:
///   - vertex and edge identifiers denote the generators;
///   - a trailing apostrophe makes a ghost edge (b');
///   - '*' multiplies, '+'/'-' add, parentheses group;
///   - scalars are integer or p/q literals; a term needs at least one
///     generator (the algebra has no global unit).
/// Products of non-composable generators are the zero element, not an error.
/// The result is normalized.
Element parse_element(GraphPtr g, FieldId field, std::string_view src);

}  // namespace lpa

#endif
