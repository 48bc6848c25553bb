#pragma once

#include <memory>
#include <string>
#include <vector>

#include "ireal/common.hpp"

namespace ireal {

/// Simple types of the term calculus: Unit, Nat, named base types, arrows,
/// products and sums.
class Type {
 public:
  enum class Kind : std::uint8_t { Unit, Nat, Base, Arrow, Product, Sum };

  static Type unit();
  static Type nat();
  static Type base(std::string name);
  static Type state() { return base("State"); }
  static Type ex() { return base("Ex"); }
  static Type arrow(Type dom, Type cod);
  /// doms[0] -> doms[1] -> ... -> cod
  static Type arrows(const std::vector<Type>& doms, Type cod);
  static Type product(Type left, Type right);
  static Type sum(Type left, Type right);

  Kind kind() const { return node_->kind; }
  bool is(Kind k) const { return node_->kind == k; }
  bool is_base(const std::string& name) const { return is(Kind::Base) && node_->name == name; }
  const std::string& name() const { return node_->name; }
  const Type& dom() const { return node_->children[0]; }
  const Type& cod() const { return node_->children[1]; }
  const Type& left() const { return node_->children[0]; }
  const Type& right() const { return node_->children[1]; }

  std::size_t size() const;

  friend bool operator==(const Type& a, const Type& b);
  friend bool operator!=(const Type& a, const Type& b) { return !(a == b); }
  friend bool operator<(const Type& a, const Type& b);

 private:
  struct Node {
    Kind kind;
    std::string name;
    std::vector<Type> children;
  };
  explicit Type(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

/// S-expression rendering: Unit, Nat, State, (-> A B), (* A B), (+ A B).
/// Right-nested arrows print flattened as (-> A B C).
std::string to_string(const Type& t);

}  // namespace ireal
