#include "latquot/lattice.hpp"

#include <algorithm>
#include <tuple>

#include "latquot/error.hpp"

namespace latquot {

namespace {

Error unknown_element(std::string_view id) {
  return Error(ErrorKind::UnknownElement,
               "unknown element '" + std::string(id) + "'");
}

}  // namespace

Lattice Lattice::from_covers(std::vector<std::string> elements,
                             std::span<const CoverPair> covers) {
  const std::size_t n = elements.size();
  std::unordered_map<std::string, Index> index_of;
  for (Index i = 0; i < n; ++i) {
    if (!index_of.emplace(elements[i], i).second) {
      throw Error(ErrorKind::DuplicateElement,
                  "duplicate element '" + elements[i] + "'");
    }
  }
  std::vector<bool> leq(n * n, false);
  for (Index i = 0; i < n; ++i) leq[i * n + i] = true;
  for (const auto& [lo, hi] : covers) {
    auto a = index_of.find(lo);
    if (a == index_of.end()) throw unknown_element(lo);
    auto b = index_of.find(hi);
    if (b == index_of.end()) throw unknown_element(hi);
    if (a->second == b->second) {
      throw Error(ErrorKind::CycleDetected,
                  "element '" + lo + "' is listed as covered by itself");
    }
    leq[a->second * n + b->second] = true;
  }
  // Warshall closure.
  for (Index k = 0; k < n; ++k)
    for (Index i = 0; i < n; ++i)
      if (leq[i * n + k])
        for (Index j = 0; j < n; ++j)
          if (leq[k * n + j]) leq[i * n + j] = true;
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j)
      if (leq[i * n + j] && leq[j * n + i])
        throw Error(ErrorKind::CycleDetected, "cover relation has a cycle through '" +
                                                  elements[i] + "' and '" +
                                                  elements[j] + "'");
  return from_order(std::move(elements), leq);
}

Lattice Lattice::from_order(std::vector<std::string> elements,
                            std::vector<bool> const& leq) {
  const std::size_t n = elements.size();
  if (n == 0) throw Error(ErrorKind::EmptyLattice, "a lattice needs at least one element");
  if (leq.size() != n * n) {
    throw Error(ErrorKind::InvalidArgument, "order relation has the wrong size");
  }

  Lattice l;
  for (Index i = 0; i < n; ++i) {
    if (!l.index_of_.emplace(elements[i], i).second) {
      throw Error(ErrorKind::DuplicateElement,
                  "duplicate element '" + elements[i] + "'");
    }
  }
  auto le = [&](Index i, Index j) { return static_cast<bool>(leq[i * n + j]); };

  for (Index i = 0; i < n; ++i) {
    if (!le(i, i)) {
      throw Error(ErrorKind::InvalidArgument,
                  "order is not reflexive at '" + elements[i] + "'");
    }
    for (Index j = i + 1; j < n; ++j)
      if (le(i, j) && le(j, i))
        throw Error(ErrorKind::CycleDetected, "order is not antisymmetric on '" +
                                                  elements[i] + "' and '" +
                                                  elements[j] + "'");
  }
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      if (le(i, j))
        for (Index k = 0; k < n; ++k)
          if (le(j, k) && !le(i, k))
            throw Error(ErrorKind::InvalidArgument,
                        "order is not transitive on '" + elements[i] + "', '" +
                            elements[j] + "', '" + elements[k] + "'");

  std::vector<std::size_t> below(n, 0), above(n, 0);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      if (le(i, j)) {
        ++below[j];
        ++above[i];
      }

  // The glb, if it exists, is the lower bound with the largest down-set; it
  // still has to dominate every other lower bound.
  auto bound = [&](Index x, Index y, bool lower) -> std::optional<Index> {
    auto is_bound = [&](Index z) {
      return lower ? le(z, x) && le(z, y) : le(x, z) && le(y, z);
    };
    std::optional<Index> best;
    for (Index z = 0; z < n; ++z) {
      if (!is_bound(z)) continue;
      const auto& rank = lower ? below : above;
      if (!best || rank[z] > rank[*best]) best = z;
    }
    if (!best) return std::nullopt;
    for (Index z = 0; z < n; ++z)
      if (is_bound(z) && !(lower ? le(z, *best) : le(*best, z)))
        return std::nullopt;
    return best;
  };

  l.meet_.assign(n * n, 0);
  l.join_.assign(n * n, 0);
  for (Index j = 0; j < n; ++j) {
    for (Index i = 0; i <= j; ++i) {
      auto up = bound(i, j, false);
      if (!up) throw NotALatticeError(elements[i], elements[j], "join");
      auto down = bound(i, j, true);
      if (!down) throw NotALatticeError(elements[i], elements[j], "meet");
      l.meet_[i * n + j] = l.meet_[j * n + i] = *down;
      l.join_[i * n + j] = l.join_[j * n + i] = *up;
    }
  }

  l.leq_.resize(n * n);
  for (std::size_t k = 0; k < n * n; ++k) l.leq_[k] = leq[k] ? 1 : 0;
  l.bottom_ = static_cast<Index>(std::find(above.begin(), above.end(), n) - above.begin());
  l.top_ = static_cast<Index>(std::find(below.begin(), below.end(), n) - below.begin());
  l.ids_ = std::move(elements);
  return l;
}

Index Lattice::index(std::string_view id) const {
  if (auto i = find(id)) return *i;
  throw unknown_element(id);
}

std::optional<Index> Lattice::find(std::string_view id) const {
  auto it = index_of_.find(std::string(id));
  if (it == index_of_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::pair<Index, Index>> Lattice::covers() const {
  std::vector<std::pair<Index, Index>> out;
  for (Index x = 0; x < size(); ++x)
    for (Index y : upper_covers(x)) out.emplace_back(x, y);
  return out;
}

std::vector<Index> Lattice::upper_covers(Index x) const {
  std::vector<Index> out;
  for (Index y = 0; y < size(); ++y) {
    if (y == x || !leq(x, y)) continue;
    bool cover = true;
    for (Index z = 0; z < size() && cover; ++z)
      if (z != x && z != y && leq(x, z) && leq(z, y)) cover = false;
    if (cover) out.push_back(y);
  }
  return out;
}

std::vector<Index> Lattice::lower_covers(Index x) const {
  std::vector<Index> out;
  for (Index y = 0; y < size(); ++y) {
    if (y == x || !leq(y, x)) continue;
    bool cover = true;
    for (Index z = 0; z < size() && cover; ++z)
      if (z != x && z != y && leq(y, z) && leq(z, x)) cover = false;
    if (cover) out.push_back(y);
  }
  return out;
}

ElementSet::ElementSet(std::vector<Index> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool ElementSet::contains(Index i) const {
  return std::binary_search(members_.begin(), members_.end(), i);
}

Lattice product(const Lattice& left, const Lattice& right) {
  const std::size_t n1 = left.size(), n2 = right.size(), n = n1 * n2;
  std::vector<std::string> ids;
  ids.reserve(n);
  for (Index p = 0; p < n1; ++p)
    for (Index q = 0; q < n2; ++q)
      ids.push_back("(" + left.id(p) + "," + right.id(q) + ")");
  std::vector<bool> leq(n * n);
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b)
      leq[a * n + b] = left.leq(a / n2, b / n2) && right.leq(a % n2, b % n2);
  return Lattice::from_order(std::move(ids), leq);
}

bool is_distributive(const Lattice& l) {
  const std::size_t n = l.size();
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b)
      for (Index c = 0; c < n; ++c)
        if (l.meet(a, l.join(b, c)) != l.join(l.meet(a, b), l.meet(a, c)))
          return false;
  return true;
}

bool is_modular(const Lattice& l) {
  const std::size_t n = l.size();
  for (Index a = 0; a < n; ++a)
    for (Index c = 0; c < n; ++c) {
      if (!l.leq(a, c)) continue;
      for (Index b = 0; b < n; ++b)
        if (l.join(a, l.meet(b, c)) != l.meet(l.join(a, b), c)) return false;
    }
  return true;
}

ElementSet sublattice_closure(const Lattice& l, const ElementSet& generators) {
  if (generators.empty()) {
    throw Error(ErrorKind::EmptyGeneratorSet, "sublattice closure needs a generator");
  }
  std::vector<char> in(l.size(), 0);
  std::vector<Index> members;
  for (Index g : generators) {
    if (g >= l.size()) {
      throw Error(ErrorKind::UnknownElement,
                  "element index " + std::to_string(g) + " is out of range");
    }
    in[g] = 1;
    members.push_back(g);
  }
  // Every new member is combined with every member present at that time;
  // later members combine with it when they are processed.
  for (std::size_t next = 0; next < members.size(); ++next) {
    const Index x = members[next];
    for (std::size_t k = 0; k <= next; ++k) {
      for (Index z : {l.meet(x, members[k]), l.join(x, members[k])}) {
        if (!in[z]) {
          in[z] = 1;
          members.push_back(z);
        }
      }
    }
  }
  return ElementSet(std::move(members));
}

Lattice induced_sublattice(const Lattice& l, const ElementSet& subset) {
  for (Index x : subset) {
    if (x >= l.size()) throw Error(ErrorKind::UnknownElement, "element index out of range");
    for (Index y : subset)
      if (!subset.contains(l.meet(x, y)) || !subset.contains(l.join(x, y)))
        throw Error(ErrorKind::InvalidArgument,
                    "subset is not closed under meet and join");
  }
  const auto members = subset.members();
  const std::size_t m = members.size();
  std::vector<std::string> ids;
  for (Index x : members) ids.push_back(l.id(x));
  std::vector<bool> leq(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) leq[i * m + j] = l.leq(members[i], members[j]);
  return Lattice::from_order(std::move(ids), leq);
}

ElementSet interval(const Lattice& l, Index low, Index high) {
  std::vector<Index> out;
  for (Index z = 0; z < l.size(); ++z)
    if (l.leq(low, z) && l.leq(z, high)) out.push_back(z);
  return ElementSet(std::move(out));
}

namespace {

using Signature = std::tuple<std::size_t, std::size_t, std::size_t, std::size_t>;

std::vector<Signature> signatures(const Lattice& l) {
  std::vector<Signature> out(l.size());
  for (Index x = 0; x < l.size(); ++x) {
    std::size_t down = 0, up = 0;
    for (Index y = 0; y < l.size(); ++y) {
      down += l.leq(y, x);
      up += l.leq(x, y);
    }
    out[x] = {down, up, l.lower_covers(x).size(), l.upper_covers(x).size()};
  }
  return out;
}

class IsomorphismSearch {
 public:
  IsomorphismSearch(const Lattice& a, const Lattice& b)
      : a_(a), b_(b), sig_a_(signatures(a)), sig_b_(signatures(b)) {
    order_.resize(a.size());
    for (Index i = 0; i < a.size(); ++i) order_[i] = i;
    // Down-set size gives a linear extension, so each element is placed after
    // everything below it.
    std::stable_sort(order_.begin(), order_.end(), [&](Index x, Index y) {
      return std::get<0>(sig_a_[x]) < std::get<0>(sig_a_[y]);
    });
    map_.assign(a.size(), a.size());
    used_.assign(b.size(), 0);
  }

  std::optional<std::vector<Index>> run() {
    if (a_.size() != b_.size()) return std::nullopt;
    auto sa = sig_a_, sb = sig_b_;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
    if (extend(0)) return map_;
    return std::nullopt;
  }

 private:
  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const Index x = order_[depth];
    for (Index y = 0; y < b_.size(); ++y) {
      if (used_[y] || sig_a_[x] != sig_b_[y]) continue;
      bool ok = true;
      for (std::size_t k = 0; k < depth && ok; ++k) {
        const Index w = order_[k];
        ok = a_.leq(w, x) == b_.leq(map_[w], y) && a_.leq(x, w) == b_.leq(y, map_[w]);
      }
      if (!ok) continue;
      map_[x] = y;
      used_[y] = 1;
      if (extend(depth + 1)) return true;
      used_[y] = 0;
    }
    map_[x] = a_.size();
    return false;
  }

  const Lattice& a_;
  const Lattice& b_;
  std::vector<Signature> sig_a_, sig_b_;
  std::vector<Index> order_;
  std::vector<Index> map_;
  std::vector<char> used_;
};

}  // namespace

std::optional<std::vector<Index>> find_isomorphism(const Lattice& a, const Lattice& b,
                                                   std::size_t limit) {
  if (a.size() > limit || b.size() > limit) {
    throw Error(ErrorKind::SizeLimitExceeded,
                "isomorphism search is limited to " + std::to_string(limit) +
                    " elements");
  }
  return IsomorphismSearch(a, b).run();
}

bool is_isomorphic(const Lattice& a, const Lattice& b, std::size_t limit) {
  return find_isomorphism(a, b, limit).has_value();
}

}  // namespace latquot
