#include "latquot/congruence.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>

namespace latquot {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), Index{0});
  }

  Index find(Index x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  /// False if already joined.
  bool unite(Index x, Index y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    if (y < x) std::swap(x, y);
    parent_[y] = x;
    return true;
  }

  Partition to_partition() {
    std::vector<Index> labels(parent_.size());
    for (Index i = 0; i < labels.size(); ++i) labels[i] = find(i);
    return Partition::from_labels(std::move(labels));
  }

 private:
  std::vector<Index> parent_;
};

void require_same_carrier(std::size_t a, std::size_t b) {
  if (a != b) {
    throw Error(ErrorKind::LatticeMismatch,
                "congruences belong to lattices of sizes " + std::to_string(a) +
                    " and " + std::to_string(b));
  }
}

void require_index(const Lattice& l, Index x) {
  if (x >= l.size()) {
    throw Error(ErrorKind::UnknownElement,
                "element index " + std::to_string(x) + " is out of range");
  }
}

/// Checked construction for results that must be congruences by theory; a
/// failure here is a bug in this library, not bad input.
Congruence must_be_congruence(const Lattice& l, Partition p, const char* what) {
  try {
    return Congruence::from_partition(l, std::move(p));
  } catch (const NotACongruenceError& e) {
    throw std::logic_error(std::string(what) + " produced a non-congruence: " + e.what());
  }
}

}  // namespace

Partition::Partition(std::size_t n) : block_of_(n) {
  std::iota(block_of_.begin(), block_of_.end(), Index{0});
}

Partition Partition::from_blocks(std::size_t n,
                                 const std::vector<std::vector<Index>>& blocks) {
  constexpr Index kUnset = static_cast<Index>(-1);
  std::vector<Index> labels(n, kUnset);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) {
      throw Error(ErrorKind::MalformedPartition, "partition has an empty block");
    }
    for (Index x : blocks[b]) {
      if (x >= n) {
        throw Error(ErrorKind::MalformedPartition,
                    "partition mentions index " + std::to_string(x) + " out of range");
      }
      if (labels[x] != kUnset) {
        throw Error(ErrorKind::MalformedPartition,
                    "index " + std::to_string(x) + " appears in two blocks");
      }
      labels[x] = b;
    }
  }
  for (Index x = 0; x < n; ++x)
    if (labels[x] == kUnset)
      throw Error(ErrorKind::MalformedPartition,
                  "index " + std::to_string(x) + " is missing from the partition");
  return from_labels(std::move(labels));
}

Partition Partition::from_labels(std::vector<Index> labels) {
  Partition p;
  p.block_of_.resize(labels.size());
  std::vector<std::pair<Index, Index>> first_seen;  // label -> smallest member
  for (Index x = 0; x < labels.size(); ++x) {
    auto it = std::find_if(first_seen.begin(), first_seen.end(),
                           [&](const auto& e) { return e.first == labels[x]; });
    if (it == first_seen.end()) {
      first_seen.emplace_back(labels[x], x);
      p.block_of_[x] = x;
    } else {
      p.block_of_[x] = it->second;
    }
  }
  return p;
}

std::vector<std::vector<Index>> Partition::blocks() const {
  std::vector<std::vector<Index>> out;
  std::vector<Index> slot(size(), 0);
  for (Index x = 0; x < size(); ++x) {
    if (block_of_[x] == x) {
      slot[x] = out.size();
      out.push_back({x});
    } else {
      out[slot[block_of_[x]]].push_back(x);
    }
  }
  return out;
}

std::size_t Partition::block_count() const {
  std::size_t count = 0;
  for (Index x = 0; x < size(); ++x) count += block_of_[x] == x;
  return count;
}

std::string_view to_string(LatticeOp op) {
  return op == LatticeOp::Meet ? "meet" : "join";
}

NotACongruenceError::NotACongruenceError(const Lattice& l, CompatibilityWitness w)
    : Error(ErrorKind::NotACongruence,
            "not a congruence: " + l.id(w.x) + " ~ " + l.id(w.y) + " but their " +
                std::string(to_string(w.op)) + "s with " + l.id(w.c) +
                " fall in different blocks"),
      witness_(w) {}

std::optional<CompatibilityWitness> find_compatibility_violation(
    const Lattice& l, const Partition& p) {
  if (p.size() != l.size()) {
    throw Error(ErrorKind::MalformedPartition,
                "partition has " + std::to_string(p.size()) +
                    " elements but the lattice has " + std::to_string(l.size()));
  }
  // Comparing every element with its block representative under each unary
  // translation covers all related pairs by transitivity.
  for (Index x = 0; x < l.size(); ++x) {
    const Index rep = p.block_of(x);
    if (rep == x) continue;
    for (Index c = 0; c < l.size(); ++c) {
      if (!p.same_block(l.meet(rep, c), l.meet(x, c)))
        return CompatibilityWitness{rep, x, c, LatticeOp::Meet};
      if (!p.same_block(l.join(rep, c), l.join(x, c)))
        return CompatibilityWitness{rep, x, c, LatticeOp::Join};
    }
  }
  return std::nullopt;
}

bool is_congruence(const Lattice& l, const Partition& p) {
  return !find_compatibility_violation(l, p).has_value();
}

Congruence Congruence::from_partition(const Lattice& l, Partition p) {
  if (auto w = find_compatibility_violation(l, p)) throw NotACongruenceError(l, *w);
  return Congruence(std::move(p));
}

Congruence identity_congruence(const Lattice& l) {
  return Congruence::from_partition(l, Partition(l.size()));
}

Congruence full_congruence(const Lattice& l) {
  return Congruence::from_partition(l, Partition::from_labels(std::vector<Index>(l.size(), 0)));
}

Congruence generated_congruence(const Lattice& l,
                                const std::vector<std::pair<Index, Index>>& pairs) {
  DisjointSets sets(l.size());
  std::deque<std::pair<Index, Index>> work;
  auto merge = [&](Index x, Index y) {
    if (sets.unite(x, y)) work.emplace_back(x, y);
  };
  for (const auto& [a, b] : pairs) {
    require_index(l, a);
    require_index(l, b);
    merge(a, b);
  }
  while (!work.empty()) {
    const auto [x, y] = work.front();
    work.pop_front();
    for (Index c = 0; c < l.size(); ++c) {
      merge(l.meet(x, c), l.meet(y, c));
      merge(l.join(x, c), l.join(y, c));
    }
  }
  return must_be_congruence(l, sets.to_partition(), "congruence generation");
}

Congruence principal_congruence(const Lattice& l, Index a, Index b) {
  return generated_congruence(l, {{a, b}});
}

Congruence principal_congruence(const Lattice& l, std::string_view a, std::string_view b) {
  return principal_congruence(l, l.index(a), l.index(b));
}

Congruence cong_meet(const Lattice& l, const Congruence& a, const Congruence& b) {
  require_same_carrier(a.lattice_size(), b.lattice_size());
  require_same_carrier(a.lattice_size(), l.size());
  std::vector<Index> labels(l.size());
  // Pairs of block labels are unique per intersected block.
  for (Index x = 0; x < l.size(); ++x) labels[x] = a.block_of(x) * l.size() + b.block_of(x);
  return must_be_congruence(l, Partition::from_labels(std::move(labels)), "congruence meet");
}

Congruence cong_join(const Lattice& l, const Congruence& a, const Congruence& b) {
  require_same_carrier(a.lattice_size(), b.lattice_size());
  require_same_carrier(a.lattice_size(), l.size());
  DisjointSets sets(l.size());
  for (Index x = 0; x < l.size(); ++x) {
    sets.unite(x, a.block_of(x));
    sets.unite(x, b.block_of(x));
  }
  return must_be_congruence(l, sets.to_partition(), "congruence join");
}

bool leq_congruence(const Congruence& a, const Congruence& b) {
  require_same_carrier(a.lattice_size(), b.lattice_size());
  for (Index x = 0; x < a.lattice_size(); ++x)
    if (!b.related(x, a.block_of(x))) return false;
  return true;
}

std::vector<Congruence> all_congruences(const Lattice& l, std::size_t cap) {
  if (l.size() > cap) {
    throw Error(ErrorKind::SizeLimitExceeded,
                "congruence enumeration is capped at " + std::to_string(cap) +
                    " elements; lattice has " + std::to_string(l.size()));
  }
  std::vector<Congruence> generators;
  for (const auto& [lo, hi] : l.covers()) {
    auto theta = principal_congruence(l, lo, hi);
    if (std::find(generators.begin(), generators.end(), theta) == generators.end())
      generators.push_back(std::move(theta));
  }
  std::set<Congruence> seen{identity_congruence(l)};
  std::deque<Congruence> work{identity_congruence(l)};
  while (!work.empty()) {
    const Congruence current = work.front();
    work.pop_front();
    for (const auto& g : generators) {
      auto joined = cong_join(l, current, g);
      if (seen.insert(joined).second) work.push_back(std::move(joined));
    }
  }
  std::vector<Congruence> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), [](const Congruence& a, const Congruence& b) {
    const auto ca = a.block_count(), cb = b.block_count();
    if (ca != cb) return ca > cb;
    return a.partition().labels() < b.partition().labels();
  });
  return out;
}

QuotientMap quotient(const Lattice& l, const Congruence& theta) {
  require_same_carrier(theta.lattice_size(), l.size());
  std::vector<Index> reps;
  std::vector<Index> image(l.size());
  for (Index x = 0; x < l.size(); ++x) {
    if (theta.block_of(x) == x) reps.push_back(x);
  }
  for (Index x = 0; x < l.size(); ++x) {
    image[x] = static_cast<Index>(
        std::lower_bound(reps.begin(), reps.end(), theta.block_of(x)) - reps.begin());
  }
  const std::size_t m = reps.size();
  std::vector<std::string> ids;
  for (Index r : reps) ids.push_back("[" + l.id(r) + "]");
  // [x] <= [y] iff [x v y] = [y].
  std::vector<bool> leq(m * m);
  for (Index i = 0; i < m; ++i)
    for (Index j = 0; j < m; ++j) leq[i * m + j] = image[l.join(reps[i], reps[j])] == j;
  Lattice target = Lattice::from_order(std::move(ids), leq);

  for (Index x = 0; x < l.size(); ++x)
    for (Index y = 0; y < l.size(); ++y)
      if (image[l.meet(x, y)] != target.meet(image[x], image[y]) ||
          image[l.join(x, y)] != target.join(image[x], image[y]))
        throw std::logic_error("quotient operations are not well defined");

  return QuotientMap{l, theta, std::move(target), std::move(image)};
}

Congruence push_congruence(const QuotientMap& map, const Congruence& phi) {
  require_same_carrier(phi.lattice_size(), map.source.size());
  if (!leq_congruence(map.kernel, phi)) {
    throw Error(ErrorKind::NotAboveKernel,
                "congruence does not contain the kernel of the quotient map");
  }
  std::vector<Index> labels(map.target.size());
  for (Index x = 0; x < map.source.size(); ++x) labels[map.image[x]] = phi.block_of(x);
  return Congruence::from_partition(map.target, Partition::from_labels(std::move(labels)));
}

Congruence product_congruence(const Lattice& left, const Lattice& right,
                              const Congruence& first, const Congruence& second) {
  require_same_carrier(first.lattice_size(), left.size());
  require_same_carrier(second.lattice_size(), right.size());
  const std::size_t n2 = right.size();
  std::vector<Index> labels(left.size() * n2);
  for (Index p = 0; p < left.size(); ++p)
    for (Index q = 0; q < n2; ++q)
      labels[product_index(right, p, q)] = product_index(right, first.block_of(p), second.block_of(q));
  return Congruence::from_partition(product(left, right), Partition::from_labels(std::move(labels)));
}

std::optional<std::pair<Congruence, Congruence>> factor_congruence(
    const Lattice& left, const Lattice& right, const Congruence& theta) {
  require_same_carrier(theta.lattice_size(), left.size() * right.size());
  std::vector<Index> first(left.size()), second(right.size());
  for (Index p = 0; p < left.size(); ++p)
    first[p] = theta.block_of(product_index(right, p, right.bottom()));
  for (Index q = 0; q < right.size(); ++q)
    second[q] = theta.block_of(product_index(right, left.bottom(), q));
  auto a = Congruence::from_partition(left, Partition::from_labels(std::move(first)));
  auto b = Congruence::from_partition(right, Partition::from_labels(std::move(second)));
  if (product_congruence(left, right, a, b) != theta) return std::nullopt;
  return std::make_pair(std::move(a), std::move(b));
}

std::optional<std::pair<Index, Index>> principal_generator(const Lattice& l,
                                                           const Congruence& theta) {
  require_same_carrier(theta.lattice_size(), l.size());
  if (theta.block_count() == l.size()) return std::make_pair(l.bottom(), l.bottom());
  auto blocks = theta.blocks();
  std::stable_sort(blocks.begin(), blocks.end(),
                   [](const auto& a, const auto& b) { return a.size() > b.size(); });
  for (const auto& block : blocks) {
    if (block.size() < 2) break;
    Index low = block.front(), high = block.front();
    for (Index x : block) {
      low = l.meet(low, x);
      high = l.join(high, x);
    }
    if (principal_congruence(l, low, high) == theta) return std::make_pair(high, low);
  }
  // theta(a, b) = theta(a /\ b, a \/ b), so comparable pairs are enough.
  for (const auto& block : blocks)
    for (Index low : block)
      for (Index high : block)
        if (low != high && l.leq(low, high) && principal_congruence(l, low, high) == theta)
          return std::make_pair(high, low);
  return std::nullopt;
}

std::string format_partition(const Lattice& l, const Partition& p) {
  std::string out;
  for (const auto& block : p.blocks()) {
    out += '{';
    for (std::size_t k = 0; k < block.size(); ++k) {
      if (k) out += ',';
      out += l.id(block[k]);
    }
    out += '}';
  }
  return out;
}

std::string format_congruence(const Lattice& l, const Congruence& c) {
  return format_partition(l, c.partition());
}

Partition parse_partition(const Lattice& l, std::string_view text) {
  std::vector<std::vector<Index>> blocks;
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto closing = [](char c) -> char {
    switch (c) {
      case '(': return ')';
      case '[': return ']';
      case '{': return '}';
      default: return 0;
    }
  };

  skip_space();
  while (pos < text.size()) {
    if (text[pos] != '{') throw SyntaxError(pos, "expected '{' to open a block");
    ++pos;
    std::vector<Index> block;
    std::string token;
    std::size_t token_start = pos;
    std::vector<char> nesting;
    auto flush = [&] {
      if (token.empty()) throw SyntaxError(token_start, "empty element identifier");
      block.push_back(l.index(token));
      token.clear();
    };
    bool closed = false;
    while (pos < text.size()) {
      const char c = text[pos];
      if (nesting.empty()) {
        if (c == '}') {
          if (!token.empty() || !block.empty()) flush();
          ++pos;
          closed = true;
          break;
        }
        if (c == ',') {
          flush();
          ++pos;
          token_start = pos;
          continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
          ++pos;
          continue;
        }
      }
      if (closing(c)) {
        nesting.push_back(closing(c));
      } else if (!nesting.empty() && c == nesting.back()) {
        nesting.pop_back();
      } else if (c == ')' || c == ']' || c == '}') {
        throw SyntaxError(pos, "unbalanced bracket in element identifier");
      }
      if (token.empty()) token_start = pos;
      token += c;
      ++pos;
    }
    if (!closed) throw SyntaxError(pos, "unterminated block");
    if (block.empty()) throw SyntaxError(pos - 1, "empty block");
    blocks.push_back(std::move(block));
    skip_space();
  }
  return Partition::from_blocks(l.size(), blocks);
}

Congruence parse_congruence(const Lattice& l, std::string_view text) {
  return Congruence::from_partition(l, parse_partition(l, text));
}

}  // namespace latquot
