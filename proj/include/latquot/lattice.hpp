#ifndef LATQUOT_LATTICE_HPP
#define LATQUOT_LATTICE_HPP

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace latquot {

/// Dense position of an element in its lattice's element list.
using Index = std::size_t;

using CoverPair = std::pair<std::string, std::string>;

/**
 * A finite lattice: an ordered list of distinct element identifiers together
 * with a partial order and the meet/join tables it induces.
 *
 * Instances are only produced by the validating factories, so every Lattice
 * value satisfies the lattice axioms. The order relation and both operation
 * tables are dense n x n arrays computed once at construction.
 */
class Lattice {
 public:
  /// Builds the lattice whose order is the reflexive-transitive closure of
  /// `covers` (each pair reads "first is covered by second").
  static Lattice from_covers(std::vector<std::string> elements,
                             std::span<const CoverPair> covers);

  /// `leq[i * n + j]` is true iff element i is below element j.
  static Lattice from_order(std::vector<std::string> elements,
                            std::vector<bool> const& leq);

  std::size_t size() const noexcept { return ids_.size(); }
  const std::vector<std::string>& elements() const noexcept { return ids_; }
  const std::string& id(Index i) const { return ids_.at(i); }

  /// Throws UnknownElement.
  Index index(std::string_view id) const;
  std::optional<Index> find(std::string_view id) const;

  bool leq(Index x, Index y) const { return leq_[x * size() + y] != 0; }
  Index meet(Index x, Index y) const { return meet_[x * size() + y]; }
  Index join(Index x, Index y) const { return join_[x * size() + y]; }

  bool leq(std::string_view x, std::string_view y) const {
    return leq(index(x), index(y));
  }
  const std::string& meet(std::string_view x, std::string_view y) const {
    return id(meet(index(x), index(y)));
  }
  const std::string& join(std::string_view x, std::string_view y) const {
    return id(join(index(x), index(y)));
  }

  Index bottom() const noexcept { return bottom_; }
  Index top() const noexcept { return top_; }

  /// Covering pairs (lower, upper), sorted by lower then upper index.
  std::vector<std::pair<Index, Index>> covers() const;
  std::vector<Index> lower_covers(Index x) const;
  std::vector<Index> upper_covers(Index x) const;

  /// Same identifiers in the same order with the same partial order.
  friend bool operator==(const Lattice& a, const Lattice& b) {
    return a.ids_ == b.ids_ && a.leq_ == b.leq_;
  }

 private:
  Lattice() = default;

  std::vector<std::string> ids_;
  std::unordered_map<std::string, Index> index_of_;
  std::vector<char> leq_;
  std::vector<Index> meet_;
  std::vector<Index> join_;
  Index bottom_ = 0;
  Index top_ = 0;
};

/// A subset of a lattice's indices in ascending order, without repeats.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::vector<Index> members);
  ElementSet(std::initializer_list<Index> members)
      : ElementSet(std::vector<Index>(members)) {}

  std::span<const Index> members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  bool contains(Index i) const;

  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }

  friend bool operator==(const ElementSet&, const ElementSet&) = default;

 private:
  std::vector<Index> members_;
};

/// Cartesian product with componentwise order. The element for (p, q) has
/// identifier "(p,q)" and index `p * L2.size() + q`.
Lattice product(const Lattice& left, const Lattice& right);

/// Product index of the pair (p, q).
inline Index product_index(const Lattice& right, Index p, Index q) {
  return p * right.size() + q;
}

bool is_distributive(const Lattice& lattice);
bool is_modular(const Lattice& lattice);

/// Least superset of `generators` closed under meet and join.
ElementSet sublattice_closure(const Lattice& lattice,
                              const ElementSet& generators);

/// The lattice induced on a meet/join-closed subset, keeping identifiers and
/// their relative order. Throws InvalidArgument if the subset is not closed.
Lattice induced_sublattice(const Lattice& lattice, const ElementSet& subset);

/// The interval [low, high] = { z : low <= z <= high }.
ElementSet interval(const Lattice& lattice, Index low, Index high);

inline constexpr std::size_t kDefaultIsomorphismLimit = 64;

/// An order isomorphism as a map from indices of `a` to indices of `b`, or
/// nullopt. Throws SizeLimitExceeded when either lattice exceeds `limit`.
std::optional<std::vector<Index>> find_isomorphism(
    const Lattice& a, const Lattice& b,
    std::size_t limit = kDefaultIsomorphismLimit);

bool is_isomorphic(const Lattice& a, const Lattice& b,
                   std::size_t limit = kDefaultIsomorphismLimit);

}  // namespace latquot

#endif  // LATQUOT_LATTICE_HPP
