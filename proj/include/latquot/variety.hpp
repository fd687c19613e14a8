#ifndef LATQUOT_VARIETY_HPP
#define LATQUOT_VARIETY_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "latquot/congruence.hpp"
#include "latquot/lattice.hpp"
#include "latquot/term.hpp"

namespace latquot {

/// An equation lhs = rhs that every member of a class must satisfy for all
/// values of its variables.
struct Identity {
  Term lhs;
  Term rhs;
  std::string name;

  /// Variables of both sides, lhs first.
  std::vector<std::string> variables() const;
  std::string to_string() const;
};

/// Parses "lhs = rhs".
Identity parse_identity(std::string_view text);

/// An equational class of lattices, given by a list of identities.
class ClassSpec {
 public:
  ClassSpec(std::string name, std::vector<Identity> identities)
      : name_(std::move(name)), identities_(std::move(identities)) {}

  /// a /\ (b \/ c) = (a /\ b) \/ (a /\ c)
  static ClassSpec distributive();
  /// a \/ (b /\ c) = (a \/ b) /\ (a \/ c)
  static ClassSpec dual_distributive();
  /// (a /\ c) \/ (b /\ c) = ((a /\ c) \/ b) /\ c, the modular law with the
  /// side condition a <= c substituted away.
  static ClassSpec modular();

  /// "distributive" or "modular". Throws InvalidArgument otherwise.
  static ClassSpec by_name(std::string_view name);

  /// One identity per line; '#' starts a comment. Throws SyntaxError with the
  /// offset into `text`.
  static ClassSpec parse(std::string_view text, std::string name = "custom");

  const std::string& name() const noexcept { return name_; }
  const std::vector<Identity>& identities() const noexcept { return identities_; }

 private:
  std::string name_;
  std::vector<Identity> identities_;
};

struct IdentityViolation {
  std::size_t identity;  ///< position in the spec's identity list
  Assignment assignment;
  Index lhs;
  Index rhs;
};

std::optional<IdentityViolation> find_identity_violation(const Lattice& lattice,
                                                         const ClassSpec& spec);
bool satisfies(const Lattice& lattice, const ClassSpec& spec);

/**
 * Least congruence whose quotient lies in the class.
 *
 * Computed as the congruence generated by all pairs (t1(s), t2(s)) over every
 * identity t1 = t2 of the spec and every assignment s of its variables. The
 * quotient by the result is checked against the spec before returning.
 */
Congruence kappa(const Lattice& lattice, const ClassSpec& spec);

/// kappa for the distributive class.
Congruence delta(const Lattice& lattice);

/// Congruences whose quotient lies in the class, in all_congruences order.
/// Checked against the up-set of kappa.
std::vector<Congruence> class_filter(const Lattice& lattice, const ClassSpec& spec,
                                     std::size_t cap = kDefaultEnumerationCap);

/// Meet of class_filter, computed by enumerating the congruence lattice.
/// Independent of kappa; intended for cross-checking it on small lattices.
Congruence kappa_oracle(const Lattice& lattice, const ClassSpec& spec,
                        std::size_t cap = kDefaultEnumerationCap);

struct CheckReport {
  std::string name;
  bool passed = true;
  std::size_t checks = 0;
  std::vector<std::string> violations;
  std::vector<std::string> notes;

  void expect(bool ok, const std::string& violation) {
    ++checks;
    if (!ok) {
      passed = false;
      violations.push_back(violation);
    }
  }
};

/// The class filter in the congruence lattice is an up-set closed under
/// intersections. Subsets are checked exhaustively when the filter has at most
/// 12 members, otherwise all pairs plus the meet of the whole filter.
CheckReport verify_theorem1(const Lattice& lattice, const ClassSpec& spec,
                            std::size_t cap = kDefaultEnumerationCap);

/// kappa(L/theta) equals (kappa(L) v theta)/theta.
CheckReport verify_theorem2(const Lattice& lattice, const Congruence& theta,
                            const ClassSpec& spec);

/// kappa(L1 x L2) equals kappa(L1) x kappa(L2). When the product has at most
/// `premise_cap` elements, also checks that every congruence of the product
/// factors as a product of congruences; otherwise that part is skipped and
/// noted in the report.
CheckReport verify_theorem3(const Lattice& left, const Lattice& right,
                            const ClassSpec& spec,
                            std::size_t premise_cap = kDefaultEnumerationCap);

}  // namespace latquot

#endif  // LATQUOT_VARIETY_HPP
