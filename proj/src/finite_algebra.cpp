#include "mra/finite_algebra.hpp"

#include <stdexcept>

namespace mra {

int FiniteAlgebra::index_of(const std::string& name) const {
  for (int i = 0; i < size(); ++i)
    if (carrier[static_cast<std::size_t>(i)] == name) return i;
  throw std::invalid_argument("unknown carrier element: " + name);
}

void FiniteAlgebra::derive_domain() {
  const int n = size();
  auto check_table = [n](const std::vector<std::vector<int>>& t, const char* what) {
    if (static_cast<int>(t.size()) != n) throw std::invalid_argument(std::string("malformed table: ") + what);
    for (const auto& row : t) {
      if (static_cast<int>(row.size()) != n) throw std::invalid_argument(std::string("malformed table: ") + what);
      for (int v : row)
        if (v < 0 || v >= n) throw std::invalid_argument(std::string("table entry out of range: ") + what);
    }
  };
  check_table(seq_t, ".");
  check_table(par_t, "||");
  check_table(join_t, "+");
  check_table(meet_t, "&");
  dom_t.resize(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) {
    dom_t[static_cast<std::size_t>(x)] = par_t[static_cast<std::size_t>(seq_t[static_cast<std::size_t>(x)][static_cast<std::size_t>(one_pi)])][static_cast<std::size_t>(one_sigma)];
  }
}

const FiniteAlgebra& builtin_counterexample_algebra() {
  static const FiniteAlgebra alg = [] {
    FiniteAlgebra a;
    a.carrier = {"0", "1p", "1s", "a"};
    a.zero = 0;
    a.one_pi = 1;
    a.one_sigma = 2;
    // Linear order 0 < 1p < 1s < a: join is max, meet is min.
    a.join_t.assign(4, std::vector<int>(4));
    a.meet_t.assign(4, std::vector<int>(4));
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        a.join_t[i][j] = i > j ? i : j;
        a.meet_t[i][j] = i < j ? i : j;
      }
    a.par_t = {
        {0, 0, 0, 0},
        {0, 1, 2, 3},
        {0, 2, 2, 3},
        {0, 3, 3, 3},
    };
    a.seq_t = {
        {0, 0, 0, 0},
        {0, 1, 1, 1},
        {0, 1, 2, 3},
        {1, 1, 3, 3},
    };
    a.derive_domain();
    const std::vector<int> expected_dom = {0, 2, 2, 2};  // 0, 1s, 1s, 1s
    if (a.dom_t != expected_dom) {
      throw std::logic_error("builtin algebra: derived domain table does not match its known column");
    }
    return a;
  }();
  return alg;
}

int eval_term_alg(const TermPtr& t, const FiniteAlgebra& alg, const AlgEnv& env) {
  switch (t->op) {
    case Term::Op::Var: {
      auto it = env.find(t->var);
      if (it == env.end()) throw std::invalid_argument("unbound variable: " + t->var);
      return it->second;
    }
    case Term::Op::Const:
      switch (t->k) {
        case ConstKind::Zero: return alg.zero;
        case ConstKind::OneSigma: return alg.one_sigma;
        case ConstKind::OnePi: return alg.one_pi;
        default:
          throw std::invalid_argument("constant not available on finite algebras");
      }
    case Term::Op::Union:
      return alg.join_t[static_cast<std::size_t>(eval_term_alg(t->a, alg, env))]
                       [static_cast<std::size_t>(eval_term_alg(t->b, alg, env))];
    case Term::Op::Meet:
      return alg.meet_t[static_cast<std::size_t>(eval_term_alg(t->a, alg, env))]
                       [static_cast<std::size_t>(eval_term_alg(t->b, alg, env))];
    case Term::Op::Seq:
      return alg.seq_t[static_cast<std::size_t>(eval_term_alg(t->a, alg, env))]
                      [static_cast<std::size_t>(eval_term_alg(t->b, alg, env))];
    case Term::Op::Par:
      return alg.par_t[static_cast<std::size_t>(eval_term_alg(t->a, alg, env))]
                      [static_cast<std::size_t>(eval_term_alg(t->b, alg, env))];
    case Term::Op::Dom:
      return alg.dom_t[static_cast<std::size_t>(eval_term_alg(t->a, alg, env))];
    case Term::Op::Diamond: {
      const int x = eval_term_alg(t->a, alg, env);
      const int p = eval_term_alg(t->b, alg, env);
      return alg.dom_t[static_cast<std::size_t>(alg.seq_t[static_cast<std::size_t>(x)][static_cast<std::size_t>(p)])];
    }
    default:
      throw std::invalid_argument("operation not available on finite algebras");
  }
}

bool eval_cond_alg(const Cond& c, const FiniteAlgebra& alg, const AlgEnv& env) {
  const int lhs = eval_term_alg(c.lhs, alg, env);
  const int rhs = eval_term_alg(c.rhs, alg, env);
  switch (c.rel) {
    case Rel::Eq: return lhs == rhs;
    case Rel::Leq: return alg.leq(lhs, rhs);
    case Rel::Neq: return lhs != rhs;
  }
  return false;
}

namespace {

struct Axiom {
  const char* name;
  const char* text;
};

const std::vector<Axiom>& cmonoid_axioms() {
  static const std::vector<Axiom> axioms = {
      {"seq-unit-left", "1s . x = x"},
      {"seq-unit-right", "x . 1s = x"},
      {"par-assoc", "x || (y || z) = (x || y) || z"},
      {"par-comm", "x || y = y || x"},
      {"par-unit", "1p || x = x"},
      {"c1", "(x . 1p) || x = x"},
      {"c2", "((x . 1p) || 1s) . y = (x . 1p) || y"},
      {"c3", "(x || y) . 1p = (x . 1p) || (y . 1p)"},
      {"c4", "(x . y) . 1p = x . (y . 1p)"},
      {"c5", "1s || 1s = 1s"},
  };
  return axioms;
}

const std::vector<Axiom>& ctrioid_extra_axioms() {
  static const std::vector<Axiom> axioms = {
      {"join-assoc", "x + (y + z) = (x + y) + z"},
      {"join-comm", "x + y = y + x"},
      {"join-idem", "x + x = x"},
      {"join-unit", "x + 0 = x"},
      {"seq-subdist-left", "x . y + x . z <= x . (y + z)"},
      {"seq-dist-right", "(x + y) . z = x . z + y . z"},
      {"seq-zero-left", "0 . x = 0"},
      {"par-dist", "x || (y + z) = x || y + x || z"},
      {"par-zero", "0 || x = 0"},
      {"c6", "x . 1p <= 1p"},
  };
  return axioms;
}

}  // namespace

AlgebraReport check_algebra(const FiniteAlgebra& alg, AxiomSet set) {
  std::vector<Axiom> axioms = cmonoid_axioms();
  if (set == AxiomSet::CTrioid) {
    const auto& extra = ctrioid_extra_axioms();
    axioms.insert(axioms.end(), extra.begin(), extra.end());
  }

  AlgebraReport report;
  for (const auto& ax : axioms) {
    const Cond cond = parse_cond(ax.text);
    std::vector<std::string> vars;
    for (const auto& [v, s] : cond_vars(cond)) vars.push_back(v);

    AlgebraCheckItem item;
    item.axiom = std::string(ax.name) + ": " + ax.text;

    const int n = alg.size();
    std::vector<int> idx(vars.size(), 0);
    for (;;) {
      AlgEnv env;
      for (std::size_t i = 0; i < vars.size(); ++i) env[vars[i]] = idx[i];
      if (!eval_cond_alg(cond, alg, env)) {
        item.holds = false;
        for (std::size_t i = 0; i < vars.size(); ++i)
          item.witness.emplace_back(vars[i], alg.carrier[static_cast<std::size_t>(idx[i])]);
        break;
      }
      // odometer, last variable fastest
      std::size_t k = vars.size();
      while (k > 0) {
        if (++idx[k - 1] < n) break;
        idx[k - 1] = 0;
        --k;
      }
      if (k == 0) break;
    }
    report.items.push_back(std::move(item));
  }
  return report;
}

}  // namespace mra
