#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>

namespace infothermo {

/// Opaque atom identifier. The core imposes no meaning on the value; models
/// decide what an id denotes.
struct AtomId {
  std::uint64_t value = 0;

  friend constexpr auto operator<=>(AtomId, AtomId) = default;
};

/// Immutable binary tree of atoms. `a + b` is the ordered pair (a, b) and
/// nothing more: pairs are neither commutative nor associative.
class StateExpr {
 public:
  static StateExpr atom(AtomId id);
  static StateExpr pair(StateExpr left, StateExpr right);

  bool is_atom() const noexcept;
  bool is_pair() const noexcept { return !is_atom(); }

  /// Precondition: is_atom().
  AtomId atom_id() const;
  /// Precondition: is_pair().
  const StateExpr& left() const;
  const StateExpr& right() const;

  std::size_t leaf_count() const noexcept;
  std::size_t depth() const noexcept;
  std::size_t hash() const noexcept;

  /// Visits every leaf from left to right.
  void for_each_leaf(const std::function<void(AtomId)>& visit) const;

  /// Canonical total order: atoms before pairs, atoms by id, pairs
  /// lexicographically by (left, right).
  friend std::strong_ordering operator<=>(const StateExpr& a, const StateExpr& b);
  friend bool operator==(const StateExpr& a, const StateExpr& b);

 private:
  struct Node;
  explicit StateExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

/// `a + b`.
inline StateExpr operator+(const StateExpr& a, const StateExpr& b) {
  return StateExpr::pair(a, b);
}

/// Right-nested n-fold combination a + (a + (... + a)). Throws DomainError for n = 0.
StateExpr n_copies(const StateExpr& a, std::size_t n);

/// Renders `(x + y)` with atoms named by `name_of`.
std::string to_string(const StateExpr& e,
                      const std::function<std::string(AtomId)>& name_of);

}  // namespace infothermo

template <>
struct std::hash<infothermo::StateExpr> {
  std::size_t operator()(const infothermo::StateExpr& e) const noexcept { return e.hash(); }
};
