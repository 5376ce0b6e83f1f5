#include "infothermo/core/state_expr.hpp"

#include <algorithm>
#include <variant>
#include <vector>

#include "infothermo/core/errors.hpp"

namespace infothermo {

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

struct StateExpr::Node {
  std::variant<AtomId, std::pair<StateExpr, StateExpr>> content;
  std::size_t leaves = 1;
  std::size_t depth = 0;
  std::size_t hash = 0;
};

StateExpr StateExpr::atom(AtomId id) {
  auto node = std::make_shared<Node>();
  node->content = id;
  node->hash = mix(0x51ed270b, std::hash<std::uint64_t>{}(id.value));
  return StateExpr(std::move(node));
}

StateExpr StateExpr::pair(StateExpr left, StateExpr right) {
  auto node = std::make_shared<Node>();
  node->leaves = left.leaf_count() + right.leaf_count();
  node->depth = 1 + std::max(left.depth(), right.depth());
  node->hash = mix(mix(0x2545f491, left.hash()), right.hash());
  node->content = std::pair<StateExpr, StateExpr>(std::move(left), std::move(right));
  return StateExpr(std::move(node));
}

bool StateExpr::is_atom() const noexcept {
  return std::holds_alternative<AtomId>(node_->content);
}

AtomId StateExpr::atom_id() const {
  if (!is_atom()) throw DomainError("atom_id() called on a pair");
  return std::get<AtomId>(node_->content);
}

const StateExpr& StateExpr::left() const {
  if (is_atom()) throw DomainError("left() called on an atom");
  return std::get<1>(node_->content).first;
}

const StateExpr& StateExpr::right() const {
  if (is_atom()) throw DomainError("right() called on an atom");
  return std::get<1>(node_->content).second;
}

std::size_t StateExpr::leaf_count() const noexcept { return node_->leaves; }
std::size_t StateExpr::depth() const noexcept { return node_->depth; }
std::size_t StateExpr::hash() const noexcept { return node_->hash; }

void StateExpr::for_each_leaf(const std::function<void(AtomId)>& visit) const {
  // Iterative so that long n-fold chains do not exhaust the stack.
  std::vector<const StateExpr*> stack{this};
  while (!stack.empty()) {
    const StateExpr* e = stack.back();
    stack.pop_back();
    if (e->is_atom()) {
      visit(e->atom_id());
    } else {
      stack.push_back(&e->right());
      stack.push_back(&e->left());
    }
  }
}

std::strong_ordering operator<=>(const StateExpr& a, const StateExpr& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  const bool aa = a.is_atom();
  const bool ba = b.is_atom();
  if (aa != ba) return aa ? std::strong_ordering::less : std::strong_ordering::greater;
  if (aa) return a.atom_id() <=> b.atom_id();
  if (auto c = a.left() <=> b.left(); c != 0) return c;
  return a.right() <=> b.right();
}

bool operator==(const StateExpr& a, const StateExpr& b) {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash() || a.leaf_count() != b.leaf_count()) return false;
  return (a <=> b) == 0;
}

StateExpr n_copies(const StateExpr& a, std::size_t n) {
  if (n == 0) throw DomainError("n_copies requires n >= 1");
  StateExpr result = a;
  for (std::size_t k = 1; k < n; ++k) result = StateExpr::pair(a, result);
  return result;
}

std::string to_string(const StateExpr& e, const std::function<std::string(AtomId)>& name_of) {
  if (e.is_atom()) return name_of(e.atom_id());
  return "(" + to_string(e.left(), name_of) + " + " + to_string(e.right(), name_of) + ")";
}

}  // namespace infothermo
