#include "ireal/type.hpp"

namespace ireal {

Type Type::unit() {
  static const Type t(std::make_shared<const Node>(Node{Kind::Unit, {}, {}}));
  return t;
}

Type Type::nat() {
  static const Type t(std::make_shared<const Node>(Node{Kind::Nat, {}, {}}));
  return t;
}

Type Type::base(std::string name) {
  if (name == "State") {
    static const Type s(std::make_shared<const Node>(Node{Kind::Base, "State", {}}));
    return s;
  }
  if (name == "Ex") {
    static const Type e(std::make_shared<const Node>(Node{Kind::Base, "Ex", {}}));
    return e;
  }
  return Type(std::make_shared<const Node>(Node{Kind::Base, std::move(name), {}}));
}

Type Type::arrow(Type dom, Type cod) {
  return Type(std::make_shared<const Node>(Node{Kind::Arrow, {}, {std::move(dom), std::move(cod)}}));
}

Type Type::arrows(const std::vector<Type>& doms, Type cod) {
  Type t = std::move(cod);
  for (auto it = doms.rbegin(); it != doms.rend(); ++it) t = arrow(*it, std::move(t));
  return t;
}

Type Type::product(Type left, Type right) {
  return Type(
      std::make_shared<const Node>(Node{Kind::Product, {}, {std::move(left), std::move(right)}}));
}

Type Type::sum(Type left, Type right) {
  return Type(std::make_shared<const Node>(Node{Kind::Sum, {}, {std::move(left), std::move(right)}}));
}

std::size_t Type::size() const {
  std::size_t n = 1;
  for (const auto& c : node_->children) n += c.size();
  return n;
}

namespace {

int compare(const Type& a, const Type& b) {
  if (a.kind() != b.kind()) return a.kind() < b.kind() ? -1 : 1;
  switch (a.kind()) {
    case Type::Kind::Unit:
    case Type::Kind::Nat:
      return 0;
    case Type::Kind::Base:
      return a.name().compare(b.name());
    default:
      if (int c = compare(a.left(), b.left())) return c;
      return compare(a.right(), b.right());
  }
}

void render(const Type& t, std::string& out) {
  switch (t.kind()) {
    case Type::Kind::Unit:
      out += "Unit";
      return;
    case Type::Kind::Nat:
      out += "Nat";
      return;
    case Type::Kind::Base:
      out += t.name();
      return;
    case Type::Kind::Arrow: {
      out += "(->";
      const Type* cur = &t;
      while (cur->is(Type::Kind::Arrow)) {
        out += ' ';
        render(cur->dom(), out);
        cur = &cur->cod();
      }
      out += ' ';
      render(*cur, out);
      out += ')';
      return;
    }
    case Type::Kind::Product:
    case Type::Kind::Sum:
      out += t.is(Type::Kind::Product) ? "(* " : "(+ ";
      render(t.left(), out);
      out += ' ';
      render(t.right(), out);
      out += ')';
      return;
  }
}

}  // namespace

bool operator==(const Type& a, const Type& b) { return a.node_ == b.node_ || compare(a, b) == 0; }

bool operator<(const Type& a, const Type& b) { return compare(a, b) < 0; }

std::string to_string(const Type& t) {
  std::string out;
  render(t, out);
  return out;
}

}  // namespace ireal
