#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "ireal/common.hpp"

namespace ireal {

/// Source position of a token, 1-based.
struct SourcePos {
  std::size_t line = 1;
  std::size_t column = 1;
};

class ParseError : public Error {
 public:
  ParseError(const SourcePos& pos, const std::string& what);
  const SourcePos& pos() const { return pos_; }

 private:
  SourcePos pos_;
};

/// A parsed S-expression: either an atom or a list of children.
struct SExpr {
  bool is_atom = true;
  std::string atom;
  std::vector<SExpr> items;
  SourcePos pos;

  static SExpr make_atom(std::string text, SourcePos pos = {});
  static SExpr make_list(std::vector<SExpr> items, SourcePos pos = {});

  bool is_list() const { return !is_atom; }
  /// True if this is a list whose first element is the atom `tag`.
  bool tagged(std::string_view tag) const;
  std::size_t size() const { return items.size(); }
  const SExpr& operator[](std::size_t i) const { return items.at(i); }
};

/// Reads every top-level S-expression in `text`. `;` starts a line comment.
std::vector<SExpr> read_sexprs(std::string_view text);

/// Reads exactly one S-expression.
SExpr read_sexpr(std::string_view text);

/// Single-line rendering with one space between list items.
std::string to_string(const SExpr& e);

}  // namespace ireal
