#include "infothermo/core/eidostate.hpp"

#include <algorithm>
#include <limits>
#include <variant>

#include "infothermo/core/errors.hpp"

namespace infothermo {

namespace {

constexpr std::uint64_t kSizeOverflow = std::numeric_limits<std::uint64_t>::max();

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

void sort_unique(std::vector<StateExpr>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

struct Eidostate::Node {
  std::variant<std::vector<StateExpr>, std::pair<Eidostate, Eidostate>> content;
  std::uint64_t size = 0;  // kSizeOverflow when the true size does not fit
  std::size_t hash = 0;
};

Eidostate Eidostate::make_prime(std::vector<StateExpr> sorted_unique) {
  auto node = std::make_shared<Node>();
  node->size = sorted_unique.size();
  std::size_t h = 0x6a09e667;
  for (const auto& e : sorted_unique) h = mix(h, e.hash());
  node->hash = h;
  node->content = std::move(sorted_unique);
  return Eidostate(std::move(node));
}

Eidostate Eidostate::of(std::vector<StateExpr> elements) {
  if (elements.empty()) throw DomainError("an eidostate must be nonempty");
  sort_unique(elements);

  const bool all_pairs =
      std::all_of(elements.begin(), elements.end(), [](const StateExpr& e) { return e.is_pair(); });
  if (all_pairs) {
    std::vector<StateExpr> lefts;
    std::vector<StateExpr> rights;
    lefts.reserve(elements.size());
    rights.reserve(elements.size());
    for (const auto& e : elements) {
      lefts.push_back(e.left());
      rights.push_back(e.right());
    }
    sort_unique(lefts);
    sort_unique(rights);
    // E is always a subset of lefts x rights, so equal cardinality means equality.
    if (lefts.size() * rights.size() == elements.size()) {
      return combine(of(std::move(lefts)), of(std::move(rights)));
    }
  }
  return make_prime(std::move(elements));
}

Eidostate Eidostate::singleton(const StateExpr& e) { return of({e}); }

Eidostate Eidostate::combine(const Eidostate& a, const Eidostate& b) {
  auto node = std::make_shared<Node>();
  std::uint64_t size = 0;
  if (a.node_->size == kSizeOverflow || b.node_->size == kSizeOverflow ||
      __builtin_mul_overflow(a.node_->size, b.node_->size, &size)) {
    size = kSizeOverflow;
  }
  node->size = size;
  node->hash = mix(mix(0xbb67ae85, a.hash()), b.hash());
  node->content = std::pair<Eidostate, Eidostate>(a, b);
  return Eidostate(std::move(node));
}

bool Eidostate::is_product() const noexcept {
  return std::holds_alternative<std::pair<Eidostate, Eidostate>>(node_->content);
}

const Eidostate& Eidostate::left_factor() const {
  if (!is_product()) throw DomainError("left_factor() on a prime eidostate");
  return std::get<1>(node_->content).first;
}

const Eidostate& Eidostate::right_factor() const {
  if (!is_product()) throw DomainError("right_factor() on a prime eidostate");
  return std::get<1>(node_->content).second;
}

std::span<const StateExpr> Eidostate::prime_elements() const {
  if (is_product()) throw DomainError("prime_elements() on a product eidostate");
  return std::get<0>(node_->content);
}

std::uint64_t Eidostate::size() const {
  if (node_->size == kSizeOverflow) throw ResourceError("eidostate cardinality exceeds 2^64");
  return node_->size;
}

bool Eidostate::size_exceeds(std::uint64_t limit) const noexcept { return node_->size > limit; }

bool Eidostate::is_singleton() const noexcept { return node_->size == 1; }

StateExpr Eidostate::as_state() const {
  if (!is_singleton()) throw DomainError("as_state() on a non-singleton eidostate");
  if (is_product()) return StateExpr::pair(left_factor().as_state(), right_factor().as_state());
  return prime_elements().front();
}

bool Eidostate::contains(const StateExpr& e) const {
  if (is_product()) {
    return e.is_pair() && left_factor().contains(e.left()) && right_factor().contains(e.right());
  }
  auto elems = prime_elements();
  return std::binary_search(elems.begin(), elems.end(), e);
}

std::vector<StateExpr> Eidostate::elements(std::size_t cap) const {
  if (size_exceeds(cap)) {
    throw ResourceError("eidostate too large to enumerate (cap " + std::to_string(cap) + ")");
  }
  if (!is_product()) {
    auto elems = prime_elements();
    return {elems.begin(), elems.end()};
  }
  const auto lefts = left_factor().elements(cap);
  const auto rights = right_factor().elements(cap);
  std::vector<StateExpr> out;
  out.reserve(lefts.size() * rights.size());
  // Both factors are sorted, so the nested loop emits canonical order.
  for (const auto& l : lefts)
    for (const auto& r : rights) out.push_back(StateExpr::pair(l, r));
  return out;
}

std::size_t Eidostate::hash() const noexcept { return node_->hash; }

std::strong_ordering operator<=>(const Eidostate& a, const Eidostate& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  const bool ap = a.is_product();
  const bool bp = b.is_product();
  if (ap != bp) return ap ? std::strong_ordering::greater : std::strong_ordering::less;
  if (ap) {
    if (auto c = a.left_factor() <=> b.left_factor(); c != 0) return c;
    return a.right_factor() <=> b.right_factor();
  }
  auto ea = a.prime_elements();
  auto eb = b.prime_elements();
  return std::lexicographical_compare_three_way(ea.begin(), ea.end(), eb.begin(), eb.end());
}

bool operator==(const Eidostate& a, const Eidostate& b) {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash() || a.node_->size != b.node_->size) return false;
  return (a <=> b) == 0;
}

Eidostate n_copies(const Eidostate& a, std::size_t n) {
  if (n == 0) throw DomainError("n_copies requires n >= 1");
  Eidostate result = a;
  for (std::size_t k = 1; k < n; ++k) result = Eidostate::combine(a, result);
  return result;
}

FactorShape FactorShape::leaf(std::size_t factor_index) {
  FactorShape s;
  s.index_ = factor_index;
  return s;
}

FactorShape FactorShape::node(FactorShape left, FactorShape right) {
  FactorShape s;
  s.children_ = std::make_shared<const std::pair<FactorShape, FactorShape>>(std::move(left),
                                                                           std::move(right));
  return s;
}

namespace {

FactorShape factorize_into(const Eidostate& e, std::vector<Eidostate>& factors) {
  if (!e.is_product()) {
    factors.push_back(e);
    return FactorShape::leaf(factors.size() - 1);
  }
  FactorShape l = factorize_into(e.left_factor(), factors);
  FactorShape r = factorize_into(e.right_factor(), factors);
  return FactorShape::node(std::move(l), std::move(r));
}

void collect_factors(const Eidostate& e, std::vector<Eidostate>& factors) {
  if (!e.is_product()) {
    factors.push_back(e);
    return;
  }
  collect_factors(e.left_factor(), factors);
  collect_factors(e.right_factor(), factors);
}

}  // namespace

PrimeFactorization prime_factorize(const Eidostate& e) {
  PrimeFactorization out;
  out.shape = factorize_into(e, out.factors);
  return out;
}

Eidostate recombine(std::span<const Eidostate> factors, const FactorShape& shape) {
  if (shape.is_leaf()) {
    if (shape.factor_index() >= factors.size()) throw DomainError("factor index out of range");
    return factors[shape.factor_index()];
  }
  return Eidostate::combine(recombine(factors, shape.left()), recombine(factors, shape.right()));
}

std::vector<Eidostate> prime_factor_multiset(const Eidostate& e) {
  std::vector<Eidostate> factors;
  collect_factors(e, factors);
  std::sort(factors.begin(), factors.end());
  return factors;
}

bool similar(const Eidostate& a, const Eidostate& b) {
  if (a.size_exceeds(kSizeOverflow - 1) != b.size_exceeds(kSizeOverflow - 1)) return false;
  if (!a.size_exceeds(kSizeOverflow - 1) && a.size() != b.size()) return false;
  return prime_factor_multiset(a) == prime_factor_multiset(b);
}

void for_each_subset(const Eidostate& e, const std::function<void(const Eidostate&)>& visit,
                     std::size_t cap) {
  if (e.size_exceeds(cap)) {
    throw ResourceError("subset enumeration capped at |E| <= " + std::to_string(cap));
  }
  const auto elems = e.elements();
  const std::uint64_t n = elems.size();
  std::vector<StateExpr> pick;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    pick.clear();
    for (std::uint64_t i = 0; i < n; ++i)
      if (mask & (std::uint64_t{1} << i)) pick.push_back(elems[i]);
    visit(Eidostate::of(pick));
  }
}

std::vector<Eidostate> subsets_of(const Eidostate& e, std::size_t cap) {
  std::vector<Eidostate> out;
  for_each_subset(e, [&](const Eidostate& s) { out.push_back(s); }, cap);
  return out;
}

bool disjoint_partition_check(const Eidostate& e, std::span<const Eidostate> parts) {
  if (parts.empty()) return false;
  std::vector<StateExpr> all;
  for (const auto& p : parts) {
    auto elems = p.elements();
    all.insert(all.end(), elems.begin(), elems.end());
  }
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end()) return false;
  return all == e.elements();
}

bool is_subset(const Eidostate& sub, const Eidostate& super) {
  if (sub.size_exceeds(kMaterializeCap)) {
    if (sub.is_product() && super.is_product()) {
      return is_subset(sub.left_factor(), super.left_factor()) &&
             is_subset(sub.right_factor(), super.right_factor());
    }
  }
  for (const auto& e : sub.elements())
    if (!super.contains(e)) return false;
  return true;
}

bool is_proper_subset(const Eidostate& sub, const Eidostate& super) {
  return sub != super && is_subset(sub, super);
}

bool are_disjoint(const Eidostate& a, const Eidostate& b) { return !set_intersection(a, b); }

Eidostate set_union(const Eidostate& a, const Eidostate& b) {
  auto ea = a.elements();
  auto eb = b.elements();
  ea.insert(ea.end(), eb.begin(), eb.end());
  return Eidostate::of(std::move(ea));
}

std::optional<Eidostate> set_intersection(const Eidostate& a, std::span<const StateExpr> b) {
  std::vector<StateExpr> common;
  for (const auto& e : b)
    if (a.contains(e)) common.push_back(e);
  if (common.empty()) return std::nullopt;
  return Eidostate::of(std::move(common));
}

std::optional<Eidostate> set_intersection(const Eidostate& a, const Eidostate& b) {
  const auto eb = b.elements();
  return set_intersection(a, eb);
}

std::string to_string(const Eidostate& e, const std::function<std::string(AtomId)>& name_of) {
  if (e.is_singleton()) return to_string(e.as_state(), name_of);
  if (e.is_product()) {
    return "(" + to_string(e.left_factor(), name_of) + " + " + to_string(e.right_factor(), name_of) +
           ")";
  }
  std::string out = "{";
  bool first = true;
  for (const auto& x : e.prime_elements()) {
    if (!first) out += ", ";
    first = false;
    out += to_string(x, name_of);
  }
  return out + "}";
}

}  // namespace infothermo
