#include "latquot/catalog.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <stdexcept>

#include "latquot/error.hpp"
#include "latquot/term.hpp"

namespace latquot {

namespace {

const char* const kGeneratorNames[] = {"x", "y", "z"};

Lattice from_cover_list(std::vector<std::string> elements,
                        std::initializer_list<CoverPair> covers) {
  std::vector<CoverPair> list(covers);
  return Lattice::from_covers(std::move(elements), list);
}

std::string subset_name(unsigned set) {
  std::string out = "{";
  for (unsigned v = 0; v < 3; ++v) {
    if (!(set >> v & 1)) continue;
    if (out.size() > 1) out += ',';
    out += kGeneratorNames[v];
  }
  return out + "}";
}

}  // namespace

Index NamedLattice::at(std::string_view label) const {
  auto it = distinguished.find(label);
  if (it == distinguished.end()) {
    throw Error(ErrorKind::UnknownElement,
                name + " has no distinguished element '" + std::string(label) + "'");
  }
  return it->second;
}

NamedLattice chain(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "chain needs at least one element");
  std::vector<std::string> ids;
  std::vector<CoverPair> covers;
  for (std::size_t i = 0; i < n; ++i) {
    ids.push_back(std::to_string(i));
    if (i) covers.emplace_back(ids[i - 1], ids[i]);
  }
  return {"chain-" + std::to_string(n), Lattice::from_covers(ids, covers), {}};
}

NamedLattice boolean(std::size_t n) {
  if (n > 6) throw Error(ErrorKind::InvalidArgument, "boolean lattice is limited to 6 atoms");
  const std::size_t size = std::size_t{1} << n;
  std::vector<std::string> ids;
  for (std::size_t s = 0; s < size; ++s) {
    std::string bits;
    for (std::size_t i = 0; i < n; ++i) bits += (s >> i & 1) ? '1' : '0';
    ids.push_back(n == 0 ? "0" : bits);
  }
  std::vector<bool> leq(size * size);
  for (std::size_t a = 0; a < size; ++a)
    for (std::size_t b = 0; b < size; ++b) leq[a * size + b] = (a & b) == a;
  NamedLattice out{"boolean-" + std::to_string(n), Lattice::from_order(ids, leq), {}};
  for (std::size_t i = 0; i < n; ++i)
    out.distinguished["atom" + std::to_string(i + 1)] = std::size_t{1} << i;
  return out;
}

NamedLattice m3() {
  NamedLattice out{"m3",
                   from_cover_list({"0", "p", "q", "r", "1"},
                                   {{"0", "p"}, {"0", "q"}, {"0", "r"}, {"p", "1"},
                                    {"q", "1"}, {"r", "1"}}),
                   {}};
  for (const char* atom : {"p", "q", "r"}) out.distinguished[atom] = out.lattice.index(atom);
  return out;
}

NamedLattice n5() {
  NamedLattice out{"n5",
                   from_cover_list({"0", "a", "b", "c", "1"},
                                   {{"0", "b"}, {"b", "a"}, {"a", "1"}, {"0", "c"}, {"c", "1"}}),
                   {}};
  for (const char* e : {"a", "b", "c"}) out.distinguished[e] = out.lattice.index(e);
  return out;
}

NamedLattice free_distributive(std::size_t n) {
  if (n < 1 || n > 3) {
    throw Error(ErrorKind::UnsupportedRank,
                "free distributive lattice is only built for 1 to 3 generators");
  }
  // A function is a truth table over the 2^n input sets; bit s is its value
  // on the set s of true variables.
  const unsigned inputs = 1u << n;
  const unsigned all_true = (1u << inputs) - 1;
  auto monotone = [&](unsigned f) {
    for (unsigned s = 0; s < inputs; ++s)
      for (unsigned t = 0; t < inputs; ++t)
        if ((s & t) == s && (f >> s & 1) && !(f >> t & 1)) return false;
    return true;
  };
  std::vector<unsigned> functions;
  for (unsigned f = 1; f < all_true; ++f)
    if (monotone(f)) functions.push_back(f);
  std::stable_sort(functions.begin(), functions.end(), [](unsigned a, unsigned b) {
    return std::popcount(a) != std::popcount(b) ? std::popcount(a) < std::popcount(b) : a < b;
  });

  std::vector<std::string> ids;
  for (unsigned f : functions) {
    std::string id;
    for (unsigned s = 0; s < inputs; ++s) {
      if (!(f >> s & 1)) continue;
      bool minimal = true;
      for (unsigned t = 0; t < inputs && minimal; ++t)
        if (t != s && (t & s) == t && (f >> t & 1)) minimal = false;
      if (minimal) id += subset_name(s);
    }
    ids.push_back(id);
  }
  const std::size_t m = functions.size();
  std::vector<bool> leq(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      leq[i * m + j] = (functions[i] & functions[j]) == functions[i];

  NamedLattice out{"fd-" + std::to_string(n), Lattice::from_order(ids, leq), {}};
  for (unsigned v = 0; v < n; ++v) {
    unsigned projection = 0;
    for (unsigned s = 0; s < inputs; ++s)
      if (s >> v & 1) projection |= 1u << s;
    const auto pos = std::find(functions.begin(), functions.end(), projection) - functions.begin();
    out.distinguished[kGeneratorNames[v]] = static_cast<Index>(pos);
  }
  return out;
}

NamedLattice free_modular_3() {
  const NamedLattice fd = free_distributive(3);
  const NamedLattice diamond = m3();
  const Lattice big = product(fd.lattice, diamond.lattice);

  const char* atoms[] = {"p", "q", "r"};
  std::vector<Index> generators;
  for (int v = 0; v < 3; ++v)
    generators.push_back(
        product_index(diamond.lattice, fd.at(kGeneratorNames[v]), diamond.at(atoms[v])));
  const ElementSet closure = sublattice_closure(big, ElementSet(generators));
  Lattice fm = induced_sublattice(big, closure);

  if (fm.size() != 28 || !is_modular(fm)) {
    throw std::logic_error("free modular lattice construction did not yield a modular "
                           "28-element lattice (got " + std::to_string(fm.size()) + ")");
  }

  NamedLattice out{"fm-3", std::move(fm), {}};
  Assignment gens;
  for (int v = 0; v < 3; ++v) {
    const Index g = out.lattice.index(big.id(generators[v]));
    out.distinguished[kGeneratorNames[v]] = g;
    gens[kGeneratorNames[v]] = g;
  }
  out.distinguished["u"] =
      eval_term(out.lattice, parse_term("(y \\/ z) /\\ (z \\/ x) /\\ (x \\/ y)"), gens);
  out.distinguished["v"] =
      eval_term(out.lattice, parse_term("(y /\\ z) \\/ (z /\\ x) \\/ (x /\\ y)"), gens);
  return out;
}

NamedLattice free_lattice_small(std::size_t n) {
  if (n == 1) {
    NamedLattice out{"f-1", from_cover_list({"x"}, {}), {}};
    out.distinguished["x"] = 0;
    return out;
  }
  if (n == 2) {
    NamedLattice out{"f-2",
                     from_cover_list({"x/\\y", "x", "y", "x\\/y"},
                                     {{"x/\\y", "x"}, {"x/\\y", "y"}, {"x", "x\\/y"}, {"y", "x\\/y"}}),
                     {}};
    out.distinguished["x"] = out.lattice.index("x");
    out.distinguished["y"] = out.lattice.index("y");
    return out;
  }
  throw Error(ErrorKind::UnsupportedRank,
              "the free lattice on " + std::to_string(n) +
                  " generators is infinite for n >= 3; only n = 1, 2 are built");
}

NamedLattice catalog_lookup(std::string_view name) {
  auto suffix = [&](std::string_view prefix) -> std::optional<std::size_t> {
    if (!name.starts_with(prefix)) return std::nullopt;
    const auto digits = name.substr(prefix.size());
    std::size_t value = 0;
    const auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (digits.empty() || ec != std::errc{} || end != digits.data() + digits.size())
      return std::nullopt;
    return value;
  };
  if (name == "m3") return m3();
  if (name == "n5") return n5();
  if (name == "fm-3") return free_modular_3();
  if (auto k = suffix("chain-")) return chain(*k);
  if (auto k = suffix("boolean-")) return boolean(*k);
  if (auto k = suffix("fd-")) return free_distributive(*k);
  if (auto k = suffix("f-")) return free_lattice_small(*k);
  throw Error(ErrorKind::InvalidArgument, "unknown catalog lattice '" + std::string(name) + "'");
}

std::vector<std::string> catalog_names() {
  return {"chain-1", "chain-2", "chain-3", "chain-4", "chain-5", "boolean-0", "boolean-1",
          "boolean-2", "boolean-3", "m3", "n5", "fd-1", "fd-2", "fd-3", "fm-3", "f-1", "f-2"};
}

}  // namespace latquot
