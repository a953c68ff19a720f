#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mra/enumerate.hpp"
#include "mra/finite_algebra.hpp"
#include "mra/term.hpp"

namespace mra {

/// Where a law is interpreted: over finite multirelations, or over the
/// builtin counterexample algebra (for laws that fail only abstractly).
enum class Model { Multirelations, Algebra };

/// A stored counterexample: universe labels (comma separated) and one
/// multirelation literal per variable, e.g. {"x", "{(a,{a}),(a,{b})}"}.
/// For algebra-model laws the bindings name carrier elements instead.
struct StoredWitness {
  std::string universe;
  std::vector<std::pair<std::string, std::string>> bindings;
};

struct Law {
  std::string name;
  std::string group;
  std::string anchor;
  std::vector<std::string> hypotheses;
  std::string conclusion;
  bool expect_valid = true;
  Model model = Model::Multirelations;
  std::optional<StoredWitness> witness;

  // Parsed forms, filled when the catalog is built.
  std::vector<Cond> hyps;
  Cond concl;
  std::map<std::string, Sort> vars;
};

using Assignment = std::vector<std::pair<std::string, Mrel>>;
using AlgAssignment = std::vector<std::pair<std::string, int>>;

struct Verdict {
  enum class Status { Holds, Refuted, Inconclusive };
  Status status = Status::Inconclusive;
  std::string space;
  std::optional<Assignment> witness;
  std::optional<AlgAssignment> alg_witness;
};

struct CheckMode {
  enum class Kind { Exhaustive, Sampled };
  Kind kind = Kind::Exhaustive;
  std::uint64_t samples = 100000;
  std::uint64_t seed = 42;

  static CheckMode exhaustive() { return {Kind::Exhaustive, 0, 0}; }
  static CheckMode sampled(std::uint64_t k, std::uint64_t s = 42) {
    return {Kind::Sampled, k, s};
  }
};

/// Upper bound on exhaustive search spaces (number of sorted assignments).
inline constexpr std::uint64_t kMaxExhaustiveSpace = 1ull << 26;

/// Above this size, run_suite falls back to sampling for valid laws and
/// hunt_law scans small multirelations before the full enumeration.
inline constexpr std::uint64_t kAutoExhaustiveSpace = 1ull << 20;

/// Checks one multirelation-model law over the given universe. Exhaustive
/// mode enumerates sorted assignments in canonical order (variables in name
/// order, first variable most significant) and reports the first violation;
/// it throws std::invalid_argument when the space exceeds
/// kMaxExhaustiveSpace. Sampled mode draws seeded random assignments and can
/// only answer Refuted or Inconclusive.
Verdict check_law(const Law& law, const UniversePtr& u, const CheckMode& mode);

/// Checks an algebra-model law over all carrier assignments.
Verdict check_law_algebra(const Law& law, const FiniteAlgebra& alg);

/// Counterexample search: universes of size 1..max_n, exhaustively where the
/// space allows, otherwise first over assignments of small multirelations
/// (few pairs) in canonical order, then seeded random sampling. For
/// algebra-model laws the builtin algebra is searched instead. Deterministic
/// for fixed arguments.
Verdict hunt_law(const Law& law, int max_n = 3, std::uint64_t samples = 100000,
                 std::uint64_t seed = 42);

/// Re-evaluates a stored witness: hypotheses must hold and the conclusion
/// must be violated. Returns false (with a note on `why`) otherwise.
bool replay_witness(const Law& law, std::string* why = nullptr);

struct SuiteEntry {
  const Law* law;
  Verdict verdict;
  bool as_expected;
};

struct SuiteReport {
  std::vector<SuiteEntry> entries;
  int mismatches = 0;
};

/// Runs every law: valid laws are checked at universe size n (falling back
/// to sampling when the space is too large), refuted laws are hunted. One
/// line per law is written to `log` when given:
/// LAW <name> <HOLDS|REFUTED|INCONCLUSIVE> [witness-json]
SuiteReport run_suite(const std::vector<Law>& laws, int n, const CheckMode& mode,
                      std::ostream* log = nullptr);

std::string witness_to_string(const Assignment& a);

}  // namespace mra
