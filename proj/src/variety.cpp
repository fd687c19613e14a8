#include "latquot/variety.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "latquot/error.hpp"

namespace latquot {

namespace {

/// A term flattened to postfix form over variable slots, so that scanning all
/// assignments does no map lookups.
class CompiledTerm {
 public:
  CompiledTerm(const Term& t, const std::vector<std::string>& vars) { emit(t, vars); }

  Index eval(const Lattice& l, const std::vector<Index>& values,
             std::vector<Index>& stack) const {
    stack.clear();
    for (const auto& op : code_) {
      switch (op.kind) {
        case Term::Kind::Variable:
          stack.push_back(values[op.slot]);
          break;
        case Term::Kind::Meet:
        case Term::Kind::Join: {
          const Index b = stack.back();
          stack.pop_back();
          const Index a = stack.back();
          stack.back() = op.kind == Term::Kind::Meet ? l.meet(a, b) : l.join(a, b);
          break;
        }
      }
    }
    return stack.back();
  }

 private:
  struct Op {
    Term::Kind kind;
    std::size_t slot;
  };

  void emit(const Term& t, const std::vector<std::string>& vars) {
    if (t.kind() == Term::Kind::Variable) {
      const auto it = std::find(vars.begin(), vars.end(), t.name());
      code_.push_back({t.kind(), static_cast<std::size_t>(it - vars.begin())});
      return;
    }
    emit(t.left(), vars);
    emit(t.right(), vars);
    code_.push_back({t.kind(), 0});
  }

  std::vector<Op> code_;
};

/// Calls `visit(values, lhs, rhs)` for every assignment of the identity's
/// variables; stops early when `visit` returns false.
template <typename Visit>
bool for_each_instance(const Lattice& l, const Identity& identity, Visit visit) {
  const auto vars = identity.variables();
  const CompiledTerm lhs(identity.lhs, vars), rhs(identity.rhs, vars);
  std::vector<Index> values(vars.size(), 0), stack;
  while (true) {
    if (!visit(values, lhs.eval(l, values, stack), rhs.eval(l, values, stack))) return false;
    std::size_t k = 0;
    while (k < values.size() && ++values[k] == l.size()) values[k++] = 0;
    if (k == values.size()) return true;
  }
}

std::vector<Congruence> filter_by_class(const Lattice& l, const std::vector<Congruence>& all,
                                        const ClassSpec& spec) {
  std::vector<Congruence> out;
  for (const auto& theta : all)
    if (satisfies(quotient(l, theta).target, spec)) out.push_back(theta);
  return out;
}

Congruence meet_all(const Lattice& l, const std::vector<Congruence>& thetas) {
  Congruence acc = full_congruence(l);
  for (const auto& theta : thetas) acc = cong_meet(l, acc, theta);
  return acc;
}

}  // namespace

std::vector<std::string> Identity::variables() const {
  auto vars = lhs.variables();
  for (auto& v : rhs.variables())
    if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(std::move(v));
  return vars;
}

std::string Identity::to_string() const { return lhs.to_string() + " = " + rhs.to_string(); }

Identity parse_identity(std::string_view text) {
  const auto eq = text.find('=');
  if (eq == std::string_view::npos) throw SyntaxError(text.size(), "expected '='");
  if (text.find('=', eq + 1) != std::string_view::npos) {
    throw SyntaxError(text.find('=', eq + 1), "more than one '='");
  }
  Term lhs = parse_term(text.substr(0, eq));
  try {
    return Identity{std::move(lhs), parse_term(text.substr(eq + 1)), {}};
  } catch (const SyntaxError& e) {
    throw SyntaxError(eq + 1 + e.position(), e.what());
  }
}

ClassSpec ClassSpec::distributive() {
  return ClassSpec("distributive",
                   {Identity{parse_term("a /\\ (b \\/ c)"),
                             parse_term("(a /\\ b) \\/ (a /\\ c)"), "distributive law"}});
}

ClassSpec ClassSpec::dual_distributive() {
  return ClassSpec("dual-distributive",
                   {Identity{parse_term("a \\/ (b /\\ c)"),
                             parse_term("(a \\/ b) /\\ (a \\/ c)"), "dual distributive law"}});
}

ClassSpec ClassSpec::modular() {
  return ClassSpec("modular", {Identity{parse_term("(a /\\ c) \\/ (b /\\ c)"),
                                        parse_term("((a /\\ c) \\/ b) /\\ c"), "modular law"}});
}

ClassSpec ClassSpec::by_name(std::string_view name) {
  if (name == "distributive") return distributive();
  if (name == "modular") return modular();
  throw Error(ErrorKind::InvalidArgument, "unknown class '" + std::string(name) +
                                              "' (expected distributive or modular)");
}

ClassSpec ClassSpec::parse(std::string_view text, std::string name) {
  std::vector<Identity> identities;
  std::size_t line_start = 0;
  while (line_start <= text.size()) {
    auto line_end = text.find('\n', line_start);
    if (line_end == std::string_view::npos) line_end = text.size();
    std::string_view line = text.substr(line_start, line_end - line_start);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (line.find_first_not_of(" \t\r") != std::string_view::npos) {
      try {
        identities.push_back(parse_identity(line));
      } catch (const SyntaxError& e) {
        throw SyntaxError(line_start + e.position(), e.what());
      }
    }
    line_start = line_end + 1;
  }
  return ClassSpec(std::move(name), std::move(identities));
}

std::optional<IdentityViolation> find_identity_violation(const Lattice& l, const ClassSpec& spec) {
  for (std::size_t i = 0; i < spec.identities().size(); ++i) {
    const auto& identity = spec.identities()[i];
    std::optional<IdentityViolation> found;
    for_each_instance(l, identity, [&](const std::vector<Index>& values, Index lhs, Index rhs) {
      if (lhs == rhs) return true;
      const auto vars = identity.variables();
      Assignment assignment;
      for (std::size_t k = 0; k < vars.size(); ++k) assignment[vars[k]] = values[k];
      found = IdentityViolation{i, std::move(assignment), lhs, rhs};
      return false;
    });
    if (found) return found;
  }
  return std::nullopt;
}

bool satisfies(const Lattice& l, const ClassSpec& spec) {
  return !find_identity_violation(l, spec).has_value();
}

Congruence kappa(const Lattice& l, const ClassSpec& spec) {
  std::set<std::pair<Index, Index>> pairs;
  for (const auto& identity : spec.identities()) {
    for_each_instance(l, identity, [&](const std::vector<Index>&, Index lhs, Index rhs) {
      if (lhs != rhs) pairs.emplace(std::min(lhs, rhs), std::max(lhs, rhs));
      return true;
    });
  }
  auto result = generated_congruence(l, {pairs.begin(), pairs.end()});
  if (!satisfies(quotient(l, result).target, spec)) {
    throw std::logic_error("kappa: quotient does not satisfy the class identities");
  }
  return result;
}

Congruence delta(const Lattice& l) { return kappa(l, ClassSpec::distributive()); }

std::vector<Congruence> class_filter(const Lattice& l, const ClassSpec& spec, std::size_t cap) {
  const auto all = all_congruences(l, cap);
  auto filtered = filter_by_class(l, all, spec);
  const auto generator = kappa(l, spec);
  std::vector<Congruence> above;
  for (const auto& theta : all)
    if (leq_congruence(generator, theta)) above.push_back(theta);
  if (above != filtered) {
    throw std::logic_error("class filter differs from the up-set of kappa");
  }
  return filtered;
}

Congruence kappa_oracle(const Lattice& l, const ClassSpec& spec, std::size_t cap) {
  const auto filtered = filter_by_class(l, all_congruences(l, cap), spec);
  auto result = meet_all(l, filtered);
  if (std::find(filtered.begin(), filtered.end(), result) == filtered.end()) {
    throw std::logic_error("meet of the class filter is not in the filter");
  }
  return result;
}

CheckReport verify_theorem1(const Lattice& l, const ClassSpec& spec, std::size_t cap) {
  CheckReport report;
  report.name = "theorem1/" + spec.name();
  const auto all = all_congruences(l, cap);
  const auto filtered = filter_by_class(l, all, spec);
  auto in_filter = [&](const Congruence& theta) {
    return std::find(filtered.begin(), filtered.end(), theta) != filtered.end();
  };

  for (const auto& low : filtered)
    for (const auto& high : all)
      if (leq_congruence(low, high))
        report.expect(in_filter(high), "up-set: " + format_congruence(l, high) +
                                           " lies above " + format_congruence(l, low) +
                                           " but is not in the filter");

  const std::size_t k = filtered.size();
  if (k <= 12) {
    // Empty subset meets to the full congruence, which is always in the filter.
    for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
      Congruence acc = full_congruence(l);
      for (std::size_t i = 0; i < k; ++i)
        if (mask >> i & 1) acc = cong_meet(l, acc, filtered[i]);
      report.expect(in_filter(acc), "intersection " + format_congruence(l, acc) +
                                        " of a filter subset is not in the filter");
    }
  } else {
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j) {
        auto m = cong_meet(l, filtered[i], filtered[j]);
        report.expect(in_filter(m), "intersection " + format_congruence(l, m) +
                                        " of two filter members is not in the filter");
      }
    auto m = meet_all(l, filtered);
    report.expect(in_filter(m), "intersection of the whole filter is not in the filter");
    report.notes.push_back("filter has " + std::to_string(k) +
                           " members; checked pairs and the full intersection");
  }
  report.notes.push_back("|Con|=" + std::to_string(all.size()) +
                         " |filter|=" + std::to_string(k));
  return report;
}

CheckReport verify_theorem2(const Lattice& l, const Congruence& theta, const ClassSpec& spec) {
  CheckReport report;
  report.name = "theorem2/" + spec.name();
  const auto map = quotient(l, theta);
  const auto lhs = kappa(map.target, spec);
  const auto joined = cong_join(l, kappa(l, spec), theta);
  const auto rhs = push_congruence(map, joined);
  report.expect(lhs == rhs, "theta=" + format_congruence(l, theta) + ": kappa(L/theta)=" +
                                format_congruence(map.target, lhs) + " but (kappa v theta)/theta=" +
                                format_congruence(map.target, rhs));
  if (map.target.size() <= kDefaultIsomorphismLimit) {
    report.expect(is_isomorphic(quotient(map.target, rhs).target, quotient(l, joined).target),
                  "theta=" + format_congruence(l, theta) +
                      ": (L/theta)/((kappa v theta)/theta) is not isomorphic to L/(kappa v theta)");
  }
  return report;
}

CheckReport verify_theorem3(const Lattice& left, const Lattice& right, const ClassSpec& spec,
                            std::size_t premise_cap) {
  CheckReport report;
  report.name = "theorem3/" + spec.name();
  const Lattice prod = product(left, right);
  const auto direct = kappa(prod, spec);
  const auto factored = product_congruence(left, right, kappa(left, spec), kappa(right, spec));
  report.expect(direct == factored, "kappa(L1 x L2)=" + format_congruence(prod, direct) +
                                        " but kappa(L1) x kappa(L2)=" +
                                        format_congruence(prod, factored));
  if (prod.size() <= premise_cap) {
    const auto all = all_congruences(prod, premise_cap);
    for (const auto& theta : all)
      report.expect(factor_congruence(left, right, theta).has_value(),
                    "congruence " + format_congruence(prod, theta) +
                        " of the product is not a product congruence");
    report.notes.push_back("factorization premise checked on " + std::to_string(all.size()) +
                           " congruences");
  } else {
    report.notes.push_back("factorization premise skipped: product has " +
                           std::to_string(prod.size()) + " elements (cap " +
                           std::to_string(premise_cap) + ")");
  }
  return report;
}

}  // namespace latquot
