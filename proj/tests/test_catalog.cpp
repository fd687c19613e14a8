#include <doctest.h>

#include <map>

#include "latquot/catalog.hpp"
#include "latquot/error.hpp"
#include "latquot/variety.hpp"
#include "oracles.hpp"

using namespace latquot;

TEST_CASE("chains and boolean lattices") {
  CHECK(chain(1).lattice.size() == 1);
  CHECK(chain(5).lattice.covers().size() == 4);
  CHECK_THROWS_AS(chain(0), Error);

  const Lattice b2 = boolean(2).lattice;
  CHECK(b2.size() == 4);
  CHECK(is_distributive(b2));
  CHECK(boolean(0).lattice.size() == 1);
  CHECK(boolean(3).lattice.size() == 8);
  CHECK(boolean(3).lattice.elements().front() == "000");
  CHECK(delta(chain(5).lattice) == identity_congruence(chain(5).lattice));
}

TEST_CASE("M3 and N5") {
  const NamedLattice diamond = m3();
  CHECK(diamond.lattice.size() == 5);
  CHECK(is_modular(diamond.lattice));
  CHECK_FALSE(is_distributive(diamond.lattice));
  CHECK(diamond.lattice.id(diamond.at("q")) == "q");

  const NamedLattice pentagon = n5();
  CHECK(pentagon.lattice.size() == 5);
  CHECK_FALSE(is_modular(pentagon.lattice));
  CHECK(pentagon.lattice.leq("b", "a"));
  CHECK_FALSE(pentagon.lattice.leq("c", "a"));
  CHECK_FALSE(pentagon.lattice.leq("a", "c"));
  CHECK_FALSE(pentagon.lattice.leq("c", "b"));
  CHECK_FALSE(pentagon.lattice.leq("b", "c"));
  CHECK_THROWS_AS(pentagon.at("u"), Error);
}

TEST_CASE("free distributive lattices") {
  CHECK(oracle::count_nonconstant_monotone(1) == 1);
  CHECK(oracle::count_nonconstant_monotone(2) == 4);
  CHECK(oracle::count_nonconstant_monotone(3) == 18);

  for (unsigned n = 1; n <= 3; ++n) {
    const NamedLattice fd = free_distributive(n);
    CHECK(fd.lattice.size() == oracle::count_nonconstant_monotone(n));
    CHECK(is_distributive(fd.lattice));
    std::vector<Index> gens;
    for (const auto& [label, index] : fd.distinguished) gens.push_back(index);
    CHECK(gens.size() == n);
    CHECK(sublattice_closure(fd.lattice, ElementSet(gens)).size() == fd.lattice.size());
  }
  const NamedLattice fd3 = free_distributive(3);
  CHECK(fd3.lattice.id(fd3.at("x")) == "{x}");
  CHECK(fd3.lattice.id(fd3.lattice.bottom()) == "{x,y,z}");
  CHECK(fd3.lattice.id(fd3.lattice.top()) == "{x}{y}{z}");
  CHECK(fd3.lattice.find("{x,y}{z}").has_value());
  CHECK_THROWS_AS(free_distributive(4), Error);
  CHECK_THROWS_AS(free_distributive(0), Error);
}

TEST_CASE("free modular lattice on three generators") {
  const NamedLattice fm = free_modular_3();
  const Lattice& l = fm.lattice;
  CHECK(l.size() == 28);
  CHECK(is_modular(l));
  CHECK_FALSE(is_distributive(l));
  CHECK(satisfies(l, ClassSpec::modular()));
  CHECK_FALSE(satisfies(l, ClassSpec::distributive()));

  SUBCASE("size agrees with an independent closure in FD(3) x M3") {
    const NamedLattice fd = free_distributive(3), diamond = m3();
    const Lattice host = product(fd.lattice, diamond.lattice);
    const std::set<Index> gens{product_index(diamond.lattice, fd.at("x"), diamond.at("p")),
                               product_index(diamond.lattice, fd.at("y"), diamond.at("q")),
                               product_index(diamond.lattice, fd.at("z"), diamond.at("r"))};
    CHECK(oracle::naive_closure(host, gens).size() == 28);
  }

  const Index u = fm.at("u"), v = fm.at("v");
  CHECK(l.leq(v, u));
  CHECK(u != v);
  const ElementSet diamond_interval = interval(l, v, u);
  CHECK(diamond_interval.size() == 5);
  CHECK(is_isomorphic(induced_sublattice(l, diamond_interval), m3().lattice));

  std::vector<Index> gens{fm.at("x"), fm.at("y"), fm.at("z")};
  CHECK(sublattice_closure(l, ElementSet(gens)).size() == 28);
}

TEST_CASE("delta of the free modular lattice") {
  const NamedLattice fm = free_modular_3();
  const Lattice& l = fm.lattice;
  const Congruence d = delta(l);
  CHECK(d == principal_congruence(l, fm.at("u"), fm.at("v")));

  std::map<std::size_t, std::size_t> profile;
  for (const auto& block : d.blocks()) ++profile[block.size()];
  CHECK(profile == std::map<std::size_t, std::size_t>{{1, 11}, {2, 6}, {5, 1}});

  const ElementSet five = interval(l, fm.at("v"), fm.at("u"));
  for (const auto& block : d.blocks())
    if (block.size() == 5) CHECK(ElementSet(block) == five);

  const auto q = quotient(l, d);
  CHECK(q.target.size() == 18);
  CHECK(is_distributive(q.target));
  const NamedLattice fd = free_distributive(3);
  CHECK(is_isomorphic(q.target, fd.lattice));

  // Each element of FM(3) is its first coordinate in FD(3) x M3; that
  // projection is the homomorphism respecting generators.
  for (Index x = 0; x < l.size(); ++x)
    for (Index y = 0; y < l.size(); ++y) {
      const std::string& a = l.id(x);
      const std::string& b = l.id(y);
      const auto first = [](const std::string& id) {
        return id.substr(1, id.rfind(',') - 1);
      };
      CHECK(d.related(x, y) == (first(a) == first(b)));
    }
}

TEST_CASE("small free lattices") {
  CHECK(free_lattice_small(1).lattice.size() == 1);
  const NamedLattice f2 = free_lattice_small(2);
  CHECK(f2.lattice.size() == 4);
  CHECK(delta(f2.lattice) == identity_congruence(f2.lattice));
  const NamedLattice fd2 = free_distributive(2);
  auto iso = find_isomorphism(f2.lattice, fd2.lattice);
  REQUIRE(iso);
  // The isomorphism can be chosen to respect generators.
  bool respects = (*iso)[f2.at("x")] == fd2.at("x") && (*iso)[f2.at("y")] == fd2.at("y");
  bool swapped = (*iso)[f2.at("x")] == fd2.at("y") && (*iso)[f2.at("y")] == fd2.at("x");
  CHECK((respects || swapped));
  try {
    free_lattice_small(3);
    FAIL("expected UnsupportedRank");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnsupportedRank);
  }
}

TEST_CASE("catalog lookup") {
  for (const auto& name : catalog_names()) CHECK(catalog_lookup(name).name == name);
  CHECK(catalog_lookup("chain-7").lattice.size() == 7);
  CHECK_THROWS_AS(catalog_lookup("chain-"), Error);
  CHECK_THROWS_AS(catalog_lookup("chain-x"), Error);
  CHECK_THROWS_AS(catalog_lookup("octagon"), Error);
}
