#ifndef LATQUOT_CONGRUENCE_HPP
#define LATQUOT_CONGRUENCE_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "latquot/error.hpp"
#include "latquot/lattice.hpp"

namespace latquot {

/**
 * An equivalence relation on the indices 0..n-1, stored as a block label per
 * index. Labels are canonical: each block is labelled by its smallest member,
 * so two partitions are equal iff their label vectors are equal.
 */
class Partition {
 public:
  /// The all-singletons partition of n indices.
  explicit Partition(std::size_t n);

  /// Blocks must cover 0..n-1 exactly once. Throws MalformedPartition.
  static Partition from_blocks(std::size_t n,
                               const std::vector<std::vector<Index>>& blocks);

  /// Any labelling where equal labels mean the same block; canonicalized.
  static Partition from_labels(std::vector<Index> labels);

  std::size_t size() const noexcept { return block_of_.size(); }
  Index block_of(Index x) const { return block_of_.at(x); }
  const std::vector<Index>& labels() const noexcept { return block_of_; }
  bool same_block(Index x, Index y) const { return block_of_[x] == block_of_[y]; }

  /// Blocks ordered by smallest member, members ascending.
  std::vector<std::vector<Index>> blocks() const;
  std::size_t block_count() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  Partition() = default;
  std::vector<Index> block_of_;
};

enum class LatticeOp { Meet, Join };

std::string_view to_string(LatticeOp op);

/// x and y share a block but x∘c and y∘c do not.
struct CompatibilityWitness {
  Index x;
  Index y;
  Index c;
  LatticeOp op;
};

class NotACongruenceError : public Error {
 public:
  NotACongruenceError(const Lattice& lattice, CompatibilityWitness witness);

  const CompatibilityWitness& witness() const noexcept { return witness_; }

 private:
  CompatibilityWitness witness_;
};

/// The first pair breaking compatibility with meet or join, if any.
std::optional<CompatibilityWitness> find_compatibility_violation(
    const Lattice& lattice, const Partition& partition);

bool is_congruence(const Lattice& lattice, const Partition& partition);

/**
 * A partition of a lattice's carrier that is compatible with meet and join.
 *
 * The only public way to obtain one is through a function that checks
 * compatibility, so a Congruence value is always valid for a lattice of
 * `lattice_size()` elements.
 */
class Congruence {
 public:
  /// Throws MalformedPartition on a size mismatch and NotACongruence (see
  /// NotACongruenceError) when compatibility fails.
  static Congruence from_partition(const Lattice& lattice, Partition partition);

  std::size_t lattice_size() const noexcept { return partition_.size(); }
  const Partition& partition() const noexcept { return partition_; }
  Index block_of(Index x) const { return partition_.block_of(x); }
  bool related(Index x, Index y) const { return partition_.same_block(x, y); }
  std::vector<std::vector<Index>> blocks() const { return partition_.blocks(); }
  std::size_t block_count() const { return partition_.block_count(); }

  friend bool operator==(const Congruence&, const Congruence&) = default;
  friend auto operator<=>(const Congruence&, const Congruence&) = default;

 private:
  explicit Congruence(Partition p) : partition_(std::move(p)) {}
  Partition partition_;
};

Congruence identity_congruence(const Lattice& lattice);
Congruence full_congruence(const Lattice& lattice);

/// Least congruence relating a and b.
Congruence principal_congruence(const Lattice& lattice, Index a, Index b);
Congruence principal_congruence(const Lattice& lattice, std::string_view a,
                                std::string_view b);

/// Least congruence relating every listed pair (the join of their principal
/// congruences). An empty list gives the identity.
Congruence generated_congruence(const Lattice& lattice,
                                const std::vector<std::pair<Index, Index>>& pairs);

/// Common refinement. Throws LatticeMismatch for different carrier sizes.
Congruence cong_meet(const Lattice& lattice, const Congruence& a, const Congruence& b);
/// Transitive closure of the union, re-checked for compatibility.
Congruence cong_join(const Lattice& lattice, const Congruence& a, const Congruence& b);

/// True iff `a` refines `b`.
bool leq_congruence(const Congruence& a, const Congruence& b);

inline constexpr std::size_t kDefaultEnumerationCap = 12;

/// Every congruence of the lattice, ordered by block count descending and then
/// by canonical labelling. Throws SizeLimitExceeded above `cap` elements.
std::vector<Congruence> all_congruences(const Lattice& lattice,
                                        std::size_t cap = kDefaultEnumerationCap);

/// The canonical surjection of a lattice onto its quotient by a congruence.
struct QuotientMap {
  Lattice source;
  Congruence kernel;
  /// Elements are "[" + id of the block's smallest member + "]", in order of
  /// that member.
  Lattice target;
  /// Source index -> target index.
  std::vector<Index> image;
};

QuotientMap quotient(const Lattice& lattice, const Congruence& congruence);

/// The congruence phi/theta on the quotient target, where theta is the map's
/// kernel. Throws NotAboveKernel if theta does not refine phi.
Congruence push_congruence(const QuotientMap& map, const Congruence& phi);

/// The congruence on `product(left, right)` relating (p,q) and (p',q') iff
/// p ~ p' under `first` and q ~ q' under `second`.
Congruence product_congruence(const Lattice& left, const Lattice& right,
                              const Congruence& first, const Congruence& second);

/// Splits a congruence of `product(left, right)` into its two coordinate
/// congruences, read off along the bottom row and column. Returns nullopt if
/// the congruence is not the product of those two.
std::optional<std::pair<Congruence, Congruence>> factor_congruence(
    const Lattice& left, const Lattice& right, const Congruence& congruence);

/// A pair (high, low) with low <= high whose principal congruence equals
/// `congruence`, or nullopt if it is not principal. Block extremes are tried
/// first, largest block first; the identity yields (bottom, bottom).
std::optional<std::pair<Index, Index>> principal_generator(const Lattice& lattice,
                                                           const Congruence& congruence);

/// Blocks as "{a,b}{c}", blocks ordered by smallest member.
std::string format_congruence(const Lattice& lattice, const Congruence& congruence);
std::string format_partition(const Lattice& lattice, const Partition& partition);

/// Inverse of format_partition. Members may be separated by whitespace;
/// identifiers containing brackets are read as balanced groups. Throws
/// SyntaxError, UnknownElement or MalformedPartition.
Partition parse_partition(const Lattice& lattice, std::string_view text);

/// parse_partition followed by the compatibility check.
Congruence parse_congruence(const Lattice& lattice, std::string_view text);

}  // namespace latquot

#endif  // LATQUOT_CONGRUENCE_HPP
