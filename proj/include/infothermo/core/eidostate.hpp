#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "infothermo/core/state_expr.hpp"

namespace infothermo {

/// Default cap on how many elements an eidostate may be expanded into.
inline constexpr std::size_t kMaterializeCap = std::size_t{1} << 20;
/// Default cap on |E| for subset enumeration (2^|E| - 1 subsets).
inline constexpr std::size_t kSubsetEnumerationCap = 20;

/// A finite nonempty set of states.
///
/// Stored in canonical form: a set that is a Cartesian product X x Y of pair
/// states is kept as the product node (X, Y), anything else as a sorted
/// vector of distinct elements. Because the split of a product of pairs is
/// unique, two eidostates are equal as sets exactly when their canonical forms
/// are structurally equal. Products are never expanded unless asked, so n-fold
/// combinations of large sets stay cheap.
class Eidostate {
 public:
  /// Throws DomainError if `elements` is empty. Duplicates are dropped.
  static Eidostate of(std::vector<StateExpr> elements);
  static Eidostate singleton(const StateExpr& e);
  /// The Cartesian product {a + b : a in A, b in B}.
  static Eidostate combine(const Eidostate& a, const Eidostate& b);

  /// True when the set splits at top level as X x Y.
  bool is_product() const noexcept;
  /// Precondition: is_product().
  const Eidostate& left_factor() const;
  const Eidostate& right_factor() const;
  /// Elements of a prime node. Precondition: !is_product().
  std::span<const StateExpr> prime_elements() const;

  /// Cardinality. Throws ResourceError if it does not fit in 64 bits.
  std::uint64_t size() const;
  bool size_exceeds(std::uint64_t limit) const noexcept;
  bool is_singleton() const noexcept;

  /// The only element of a singleton. Throws DomainError otherwise.
  StateExpr as_state() const;

  bool contains(const StateExpr& e) const;

  /// All elements in canonical order. Throws ResourceError above `cap`.
  std::vector<StateExpr> elements(std::size_t cap = kMaterializeCap) const;

  std::size_t hash() const noexcept;

  friend std::strong_ordering operator<=>(const Eidostate& a, const Eidostate& b);
  friend bool operator==(const Eidostate& a, const Eidostate& b);

 private:
  struct Node;
  explicit Eidostate(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Eidostate make_prime(std::vector<StateExpr> sorted_unique);

  std::shared_ptr<const Node> node_;
};

inline Eidostate operator+(const Eidostate& a, const Eidostate& b) {
  return Eidostate::combine(a, b);
}

/// A + (A + (... + A)), n >= 1. Throws DomainError for n = 0.
Eidostate n_copies(const Eidostate& a, std::size_t n);

/// How prime factors recombine into the original set.
class FactorShape {
 public:
  static FactorShape leaf(std::size_t factor_index);
  static FactorShape node(FactorShape left, FactorShape right);

  bool is_leaf() const noexcept { return !children_; }
  std::size_t factor_index() const noexcept { return index_; }
  const FactorShape& left() const { return children_->first; }
  const FactorShape& right() const { return children_->second; }

 private:
  std::size_t index_ = 0;
  std::shared_ptr<const std::pair<FactorShape, FactorShape>> children_;
};

struct PrimeFactorization {
  /// Prime factors in left-to-right order of the recombination tree.
  std::vector<Eidostate> factors;
  FactorShape shape;
};

PrimeFactorization prime_factorize(const Eidostate& e);
Eidostate recombine(std::span<const Eidostate> factors, const FactorShape& shape);

/// Prime factors only, sorted canonically (the multiset used by similarity).
std::vector<Eidostate> prime_factor_multiset(const Eidostate& e);

/// Same prime-factor multiset.
bool similar(const Eidostate& a, const Eidostate& b);

/// All 2^|E| - 1 nonempty subsets. Throws ResourceError if |E| > cap.
std::vector<Eidostate> subsets_of(const Eidostate& e, std::size_t cap = kSubsetEnumerationCap);
void for_each_subset(const Eidostate& e, const std::function<void(const Eidostate&)>& visit,
                     std::size_t cap = kSubsetEnumerationCap);

/// Parts pairwise disjoint with union exactly E.
bool disjoint_partition_check(const Eidostate& e, std::span<const Eidostate> parts);

bool is_subset(const Eidostate& sub, const Eidostate& super);
bool is_proper_subset(const Eidostate& sub, const Eidostate& super);
bool are_disjoint(const Eidostate& a, const Eidostate& b);
Eidostate set_union(const Eidostate& a, const Eidostate& b);
/// Empty intersection yields nullopt.
std::optional<Eidostate> set_intersection(const Eidostate& a, const Eidostate& b);
std::optional<Eidostate> set_intersection(const Eidostate& a, std::span<const StateExpr> b);

/// `{x, y}` for prime parts, `(A + B)` for products.
std::string to_string(const Eidostate& e, const std::function<std::string(AtomId)>& name_of);

}  // namespace infothermo

template <>
struct std::hash<infothermo::Eidostate> {
  std::size_t operator()(const infothermo::Eidostate& e) const noexcept { return e.hash(); }
};
