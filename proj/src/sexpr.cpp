#include "ireal/sexpr.hpp"

#include <cctype>
#include <sstream>

namespace ireal {

namespace {

std::string located(const SourcePos& pos, const std::string& what) {
  std::ostringstream out;
  out << pos.line << ":" << pos.column << ": " << what;
  return out.str();
}

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  bool at_end() {
    skip_space();
    return i_ >= text_.size();
  }

  SExpr read() {
    skip_space();
    if (i_ >= text_.size()) throw ParseError(pos_, "unexpected end of input");
    SourcePos start = pos_;
    char c = text_[i_];
    if (c == ')') throw ParseError(pos_, "unexpected ')'");
    if (c == '(') {
      advance();
      std::vector<SExpr> items;
      while (true) {
        skip_space();
        if (i_ >= text_.size()) throw ParseError(start, "unclosed '('");
        if (text_[i_] == ')') {
          advance();
          break;
        }
        items.push_back(read());
      }
      return SExpr::make_list(std::move(items), start);
    }
    std::string atom;
    while (i_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[i_])) &&
           text_[i_] != '(' && text_[i_] != ')' && text_[i_] != ';') {
      atom.push_back(text_[i_]);
      advance();
    }
    return SExpr::make_atom(std::move(atom), start);
  }

 private:
  void advance() {
    if (text_[i_] == '\n') {
      ++pos_.line;
      pos_.column = 1;
    } else {
      ++pos_.column;
    }
    ++i_;
  }

  void skip_space() {
    while (i_ < text_.size()) {
      char c = text_[i_];
      if (c == ';') {
        while (i_ < text_.size() && text_[i_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  std::string_view text_;
  std::size_t i_ = 0;
  SourcePos pos_;
};

void render(const SExpr& e, std::string& out) {
  if (e.is_atom) {
    out += e.atom;
    return;
  }
  out.push_back('(');
  for (std::size_t i = 0; i < e.items.size(); ++i) {
    if (i) out.push_back(' ');
    render(e.items[i], out);
  }
  out.push_back(')');
}

}  // namespace

ParseError::ParseError(const SourcePos& pos, const std::string& what)
    : Error(located(pos, what)), pos_(pos) {}

SExpr SExpr::make_atom(std::string text, SourcePos pos) {
  SExpr e;
  e.is_atom = true;
  e.atom = std::move(text);
  e.pos = pos;
  return e;
}

SExpr SExpr::make_list(std::vector<SExpr> items, SourcePos pos) {
  SExpr e;
  e.is_atom = false;
  e.items = std::move(items);
  e.pos = pos;
  return e;
}

bool SExpr::tagged(std::string_view tag) const {
  return !is_atom && !items.empty() && items[0].is_atom && items[0].atom == tag;
}

std::vector<SExpr> read_sexprs(std::string_view text) {
  Reader reader(text);
  std::vector<SExpr> out;
  while (!reader.at_end()) out.push_back(reader.read());
  return out;
}

SExpr read_sexpr(std::string_view text) {
  Reader reader(text);
  if (reader.at_end()) throw ParseError({}, "empty input");
  SExpr e = reader.read();
  if (!reader.at_end()) throw ParseError({}, "trailing input after expression");
  return e;
}

std::string to_string(const SExpr& e) {
  std::string out;
  render(e, out);
  return out;
}

}  // namespace ireal
