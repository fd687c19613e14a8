// One line per acceptance criterion; exits nonzero if any fails.

#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "latquot/catalog.hpp"
#include "latquot/cli.hpp"
#include "latquot/congruence.hpp"
#include "latquot/variety.hpp"
#include "oracles.hpp"

using namespace latquot;

namespace {

const ClassSpec kDist = ClassSpec::distributive();
const ClassSpec kMod = ClassSpec::modular();

std::vector<NamedLattice> catalog_up_to(std::size_t n) {
  std::vector<NamedLattice> out;
  for (const auto& name : catalog_names()) {
    auto named = catalog_lookup(name);
    if (named.lattice.size() <= n) out.push_back(std::move(named));
  }
  return out;
}

struct Failure {
  std::string what;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw Failure{what};
}

std::string example0() {
  for (const Lattice& l : {chain(5).lattice, boolean(3).lattice, free_distributive(3).lattice})
    require(delta(l) == identity_congruence(l), "delta is not the identity");
  return "delta is the identity on chain(5), boolean(3), FD(3)";
}

std::string example1() {
  const Lattice l = m3().lattice;
  require(delta(l) == full_congruence(l), "delta(M3) is not full");
  require(all_congruences(l).size() == 2, "M3 is not simple");
  return "delta(M3) is full, |Con(M3)| = 2";
}

std::string example2() {
  const NamedLattice n = n5();
  const Lattice& l = n.lattice;
  const Congruence d = delta(l);
  require(d == principal_congruence(l, "a", "b"), "delta(N5) != theta(a,b)");
  std::vector<std::vector<Index>> nontrivial;
  for (const auto& block : d.blocks())
    if (block.size() > 1) nontrivial.push_back(block);
  require(nontrivial.size() == 1 &&
              nontrivial[0] == std::vector<Index>{n.at("a"), n.at("b")},
          "nontrivial blocks are not just {a,b}");
  const auto q = quotient(l, d);
  require(q.target.size() == 4 && is_distributive(q.target), "quotient is not a 4-element distributive lattice");
  return "delta(N5) = theta(a,b) = " + format_congruence(l, d) + ", quotient has 4 elements";
}

std::string example3() {
  const NamedLattice fm = free_modular_3();
  const Lattice& l = fm.lattice;
  const NamedLattice fd = free_distributive(3), diamond = m3();
  const Lattice host = product(fd.lattice, diamond.lattice);
  const auto closure = oracle::naive_closure(
      host, {product_index(diamond.lattice, fd.at("x"), diamond.at("p")),
             product_index(diamond.lattice, fd.at("y"), diamond.at("q")),
             product_index(diamond.lattice, fd.at("z"), diamond.at("r"))});
  require(l.size() == 28 && closure.size() == 28, "FM(3) does not have 28 elements");

  const Congruence d = delta(l);
  require(d == principal_congruence(l, fm.at("u"), fm.at("v")), "delta(FM(3)) != theta(u,v)");
  std::map<std::size_t, std::size_t> profile;
  std::vector<Index> five;
  for (const auto& block : d.blocks()) {
    ++profile[block.size()];
    if (block.size() == 5) five = block;
  }
  require(profile == std::map<std::size_t, std::size_t>{{1, 11}, {2, 6}, {5, 1}},
          "block profile is not 11 + 6 + 1");
  const ElementSet vu = interval(l, fm.at("v"), fm.at("u"));
  require(ElementSet(five) == vu, "5-block is not [v,u]");
  require(is_isomorphic(induced_sublattice(l, vu), diamond.lattice), "[v,u] is not M3");
  const auto q = quotient(l, d);
  require(q.target.size() == 18 && is_distributive(q.target), "quotient is not 18-element distributive");
  require(is_isomorphic(q.target, fd.lattice), "quotient is not FD(3)");
  return "|FM(3)| = 28, delta = theta(u,v), blocks 11x1 + 6x2 + 1x5, [v,u] = M3, quotient = FD(3)";
}

std::string theorem1() {
  std::vector<Lattice> lattices;
  for (const auto& named : catalog_up_to(8)) lattices.push_back(named.lattice);
  lattices.push_back(boolean(3).lattice);
  std::size_t runs = 0;
  for (const Lattice& l : lattices)
    for (const ClassSpec* spec : {&kDist, &kMod}) {
      const auto r = verify_theorem1(l, *spec);
      require(r.passed, "theorem 1 failed: " + (r.violations.empty() ? "" : r.violations[0]));
      ++runs;
    }
  return std::to_string(runs) + " runs over " + std::to_string(lattices.size()) + " lattices";
}

std::string theorem2() {
  const std::vector<Lattice> lattices{m3().lattice, n5().lattice, boolean(2).lattice,
                                      chain(4).lattice, product(m3().lattice, chain(2).lattice)};
  std::size_t runs = 0;
  for (const Lattice& l : lattices)
    for (const auto& theta : all_congruences(l))
      for (const ClassSpec* spec : {&kDist, &kMod}) {
        const auto r = verify_theorem2(l, theta, *spec);
        require(r.passed, "theorem 2 failed on theta = " + format_congruence(l, theta));
        ++runs;
      }
  return std::to_string(runs) + " (lattice, theta, class) runs";
}

std::string theorem3() {
  const std::vector<std::pair<Lattice, Lattice>> pairs{{m3().lattice, n5().lattice},
                                                       {n5().lattice, chain(3).lattice},
                                                       {m3().lattice, m3().lattice}};
  for (const auto& [a, b] : pairs) {
    const auto r = verify_theorem3(a, b, kDist, 25);
    require(r.passed, "theorem 3 failed");
    require(!r.notes.empty() && r.notes.front().find("checked") != std::string::npos &&
                r.notes.front().find("skipped") == std::string::npos,
            "factorization premise was not checked");
  }
  return "(M3,N5), (N5,chain(3)), (M3,M3) with the factorization premise checked";
}

std::string oracle_equivalence() {
  std::size_t lattices = 0, partitions = 0;
  for (const auto& named : catalog_up_to(8)) {
    const Lattice& l = named.lattice;
    for (const ClassSpec* spec : {&kDist, &kMod})
      require(kappa(l, *spec) == kappa_oracle(l, *spec), "kappa != oracle on " + named.name);
    ++lattices;
    if (l.size() <= 6) {
      std::set<Partition> fast;
      for (const auto& c : all_congruences(l)) fast.insert(c.partition());
      require(fast == oracle::brute_force_congruences(l), "Con mismatch on " + named.name);
      ++partitions;
    }
  }
  return "kappa = oracle on " + std::to_string(lattices) + " lattices, Con brute-forced on " +
         std::to_string(partitions);
}

std::string kappa_remarks() {
  const Lattice pentagon = n5().lattice, diamond = m3().lattice;
  const auto oracle = kappa_oracle(pentagon, kMod);
  require(kappa(pentagon, kMod) == oracle && oracle == principal_congruence(pentagon, "a", "b"),
          "kappa(N5, modular) != theta(a,b)");
  require(kappa(diamond, kMod) == identity_congruence(diamond), "kappa(M3, modular) != identity");

  const auto path = std::filesystem::temp_directory_path() / "latquot_acceptance_xy.txt";
  std::ofstream(path) << "x = y\n";
  const ClassSpec trivial = [&] {
    std::ifstream file(path);
    std::stringstream ss;
    ss << file.rdbuf();
    return ClassSpec::parse(ss.str(), path.string());
  }();
  for (const auto& name : catalog_names()) {
    const Lattice l = catalog_lookup(name).lattice;
    require(quotient(l, kappa(l, trivial)).target.size() == 1, "x = y did not collapse " + name);
  }
  std::istringstream in;
  std::ostringstream out, err;
  const int code = cli::run({"kappa", "catalog:n5", "--identities", path.string()}, in, out, err);
  std::filesystem::remove(path);
  require(code == cli::kSuccess && out.str().find("quotient-size: 1\n") != std::string::npos,
          "CLI did not collapse N5 under x = y");
  return "kappa(N5, modular) = theta(a,b), kappa(M3, modular) = 0, x = y collapses everything";
}

std::string idempotence() {
  std::size_t n = 0;
  for (const auto& name : catalog_names()) {
    const Lattice l = catalog_lookup(name).lattice;
    const Lattice q = quotient(l, delta(l)).target;
    require(delta(q) == identity_congruence(q), "delta of quotient not identity on " + name);
    ++n;
  }
  return std::to_string(n) + " catalog lattices";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<std::string()>>> criteria{
      {"delta of distributive lattices", example0},
      {"M3 is simple and fully collapsed", example1},
      {"pentagon", example2},
      {"free modular lattice on three generators", example3},
      {"class congruences form a principal filter", theorem1},
      {"kappa commutes with quotients", theorem2},
      {"kappa of a product", theorem3},
      {"oracle equivalence", oracle_equivalence},
      {"other classes of lattices", kappa_remarks},
      {"idempotence", idempotence},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto& [title, check] = criteria[i];
    std::string detail;
    bool ok = false;
    try {
      detail = check();
      ok = true;
    } catch (const Failure& f) {
      detail = f.what;
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << title << " (" << detail
              << ")\n";
    if (!ok) ++failed;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
