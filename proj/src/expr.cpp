#include "lpa/expr.hpp"

#include <cctype>
#include <optional>
#include <utility>
#include <vector>

namespace lpa {

namespace {

enum class TokKind { Ident, Number, Star, Plus, Minus, LParen, RParen, End };

struct Token {
  TokKind kind;
  std::string text;
  int column;  // 1-based
};

bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '#' ||
         c == '\'';
}

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < src.size()) {
    char c = src[i];
    int col = static_cast<int>(i) + 1;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == '*') {
      out.push_back({TokKind::Star, "*", col});
      ++i;
    } else if (c == '+') {
      out.push_back({TokKind::Plus, "+", col});
      ++i;
    } else if (c == '-') {
      out.push_back({TokKind::Minus, "-", col});
      ++i;
    } else if (c == '(') {
      out.push_back({TokKind::LParen, "(", col});
      ++i;
    } else if (c == ')') {
      out.push_back({TokKind::RParen, ")", col});
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j])))
        ++j;
      if (j < src.size() && src[j] == '/') {
        std::size_t k = j + 1;
        while (k < src.size() &&
               std::isdigit(static_cast<unsigned char>(src[k])))
          ++k;
        if (k == j + 1) throw ExprError("expected digits after '/'", col);
        j = k;
      }
      out.push_back({TokKind::Number, std::string(src.substr(i, j - i)), col});
      i = j;
    } else if (ident_char(c) && !std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && ident_char(src[j])) ++j;
      out.push_back({TokKind::Ident, std::string(src.substr(i, j - i)), col});
      i = j;
    } else {
      throw ExprError(std::string("unexpected character '") + c + "'", col);
    }
  }
  out.push_back({TokKind::End, "", static_cast<int>(src.size()) + 1});
  return out;
}

// A factor is either a scalar or an element; scalars commute into the
// coefficient of the enclosing term.
struct Factor {
  std::optional<FieldElement> scalar;
  std::optional<Element> element;
};

class Parser {
 public:
  Parser(GraphPtr g, FieldId field, std::string_view src)
      : graph_(std::move(g)), field_(field), tokens_(lex(src)) {}

  Element parse() {
    Element x = expr();
    if (peek().kind != TokKind::End) {
      throw ExprError("unexpected trailing input", peek().column);
    }
    return x.normal_form();
  }

 private:
  GraphPtr graph_;
  FieldId field_;
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;

  const Token& peek() const { return tokens_[pos_]; }
  Token next() { return tokens_[pos_++]; }

  Element expr() {
    bool negate = false;
    if (peek().kind == TokKind::Minus) {
      next();
      negate = true;
    }
    Element acc = term();
    if (negate) acc = -acc;
    while (peek().kind == TokKind::Plus || peek().kind == TokKind::Minus) {
      bool minus = next().kind == TokKind::Minus;
      Element t = term();
      acc = minus ? acc - t : acc + t;
    }
    return acc;
  }

  Element term() {
    FieldElement coeff = FieldElement::one(field_);
    std::optional<Element> prod;
    int first_col = peek().column;
    while (true) {
      Factor f = factor();
      if (f.scalar) {
        coeff *= *f.scalar;
      } else {
        prod = prod ? multiply_raw(*prod, *f.element) : *f.element;
      }
      if (peek().kind != TokKind::Star) break;
      next();
    }
    if (!prod) {
      throw ExprError("term has no vertex or edge generator", first_col);
    }
    return prod->scaled(coeff);
  }

  Factor factor() {
    const Token& t = peek();
    switch (t.kind) {
      case TokKind::Number: {
        Token tok = next();
        try {
          return Factor{FieldElement::parse(field_, tok.text), std::nullopt};
        } catch (const std::exception& e) {
          throw ExprError(e.what(), tok.column);
        }
      }
      case TokKind::LParen: {
        next();
        Element x = expr();
        if (peek().kind != TokKind::RParen) {
          throw ExprError("expected ')'", peek().column);
        }
        next();
        return Factor{std::nullopt, x};
      }
      case TokKind::Ident: {
        Token tok = next();
        return Factor{std::nullopt, resolve(tok)};
      }
      default:
        throw ExprError("expected a scalar, identifier or '('", t.column);
    }
  }

  // Longest-match resolution: a known vertex or edge id wins (ids produced by
  // the graph transforms may themselves end in an apostrophe); otherwise a
  // trailing apostrophe marks the ghost of a known edge.
  Element resolve(const Token& tok) {
    const Graph& g = *graph_;
    if (int v = g.vertex_index(tok.text); v >= 0) {
      return Element::vertex(graph_, field_, v);
    }
    if (int e = g.edge_index(tok.text); e >= 0) {
      return Element::real_edge(graph_, field_, e);
    }
    if (!tok.text.empty() && tok.text.back() == '\'') {
      std::string base = tok.text.substr(0, tok.text.size() - 1);
      if (int e = g.edge_index(base); e >= 0) {
        return Element::ghost_edge(graph_, field_, e);
      }
    }
    throw ExprError("unknown identifier: " + tok.text, tok.column);
  }
};

}  // namespace

Element parse_element(GraphPtr g, FieldId field, std::string_view src) {
  return Parser(std::move(g), field, src).parse();
}

}  // namespace lpa
