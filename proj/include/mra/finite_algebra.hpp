#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mra/term.hpp"

namespace mra {

/// A small algebra given by explicit operation tables: carrier element
/// names, tables for . (sequential), || (parallel), + (join) and & (meet),
/// constant assignments, and the derived domain table d(x) = (x . 1p) || 1s.
struct FiniteAlgebra {
  std::vector<std::string> carrier;
  std::vector<std::vector<int>> seq_t, par_t, join_t, meet_t;
  int zero = 0;
  int one_sigma = 0;
  int one_pi = 0;
  std::vector<int> dom_t;

  int size() const { return static_cast<int>(carrier.size()); }
  int index_of(const std::string& name) const;
  bool leq(int x, int y) const { return join_t[x][y] == y; }

  /// Recomputes d from the tables; validates table shapes.
  void derive_domain();
};

/// The 4-element chain 0 < 1p < 1s < a with the composition tables that
/// satisfy every c-trioid axiom while refuting the stronger distributivity
/// and diamond laws. The derived domain table is asserted against its known
/// column (0, 1s, 1s, 1s).
const FiniteAlgebra& builtin_counterexample_algebra();

enum class AxiomSet { CMonoid, CTrioid };

struct AlgebraCheckItem {
  std::string axiom;
  bool holds = true;
  std::vector<std::pair<std::string, std::string>> witness;  // variable -> element
};

struct AlgebraReport {
  std::vector<AlgebraCheckItem> items;
  bool all_hold() const {
    for (const auto& it : items)
      if (!it.holds) return false;
    return true;
  }
};

/// Evaluates each axiom of the set over all carrier tuples.
AlgebraReport check_algebra(const FiniteAlgebra& alg, AxiomSet set);

using AlgEnv = std::map<std::string, int>;

/// Evaluates a term over a finite algebra. Only ., ||, +, &, d, dia and the
/// constants 0, 1s, 1p are available; anything else throws.
int eval_term_alg(const TermPtr& t, const FiniteAlgebra& alg, const AlgEnv& env);

bool eval_cond_alg(const Cond& c, const FiniteAlgebra& alg, const AlgEnv& env);

}  // namespace mra
