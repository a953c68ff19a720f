#include "mra/law.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "mra/json_io.hpp"

namespace mra {

namespace {

std::vector<std::pair<std::string, Sort>> sorted_vars(const Law& law) {
  return {law.vars.begin(), law.vars.end()};  // std::map iterates in name order
}

bool refutes(const Law& law, const UniversePtr& u, const Env& env) {
  for (const auto& h : law.hyps)
    if (!eval_cond(h, u, env)) return false;
  return !eval_cond(law.concl, u, env);
}

Assignment snapshot(const std::vector<std::pair<std::string, Sort>>& vars,
                    const std::vector<Mrel>& vals) {
  Assignment a;
  for (std::size_t i = 0; i < vars.size(); ++i) a.emplace_back(vars[i].first, vals[i]);
  return a;
}

/// Enumerates assignments in canonical order (first variable most
/// significant). `candidates[i]`, when present, restricts variable i to the
/// listed class indices. Returns the first refuting assignment.
std::optional<Assignment> scan(const Law& law, const UniversePtr& u,
                               const std::vector<std::pair<std::string, Sort>>& vars,
                               const std::vector<std::optional<std::vector<std::uint64_t>>>& candidates) {
  const std::size_t v = vars.size();
  std::vector<std::uint64_t> counts(v);
  for (std::size_t i = 0; i < v; ++i) {
    counts[i] = candidates[i] ? candidates[i]->size() : class_count(u, vars[i].second);
    if (counts[i] == 0) return std::nullopt;
  }

  std::vector<std::uint64_t> idx(v, 0);
  std::vector<Mrel> vals;
  vals.reserve(v);
  for (std::size_t i = 0; i < v; ++i)
    vals.push_back(class_member(u, vars[i].second, candidates[i] ? (*candidates[i])[0] : 0));

  Env env;
  for (;;) {
    env.clear();
    for (std::size_t i = 0; i < v; ++i) env.emplace(vars[i].first, vals[i]);
    if (refutes(law, u, env)) return snapshot(vars, vals);
    if (v == 0) return std::nullopt;
    // odometer, last variable fastest
    std::size_t k = v;
    while (k > 0) {
      if (++idx[k - 1] < counts[k - 1]) {
        vals[k - 1] = class_member(
            u, vars[k - 1].second,
            candidates[k - 1] ? (*candidates[k - 1])[idx[k - 1]] : idx[k - 1]);
        break;
      }
      idx[k - 1] = 0;
      vals[k - 1] = class_member(u, vars[k - 1].second,
                                 candidates[k - 1] ? (*candidates[k - 1])[0] : 0);
      --k;
    }
    if (k == 0) return std::nullopt;
  }
}

std::optional<std::uint64_t> space_of(const Law& law, const UniversePtr& u) {
  std::uint64_t space = 1;
  try {
    for (const auto& [name, sort] : law.vars) {
      const std::uint64_t c = class_count(u, sort);
      if (c != 0 && space > UINT64_MAX / c) return std::nullopt;
      space *= c;
    }
  } catch (const std::exception&) {
    return std::nullopt;
  }
  return space;
}

std::optional<Assignment> sample_scan(const Law& law, const UniversePtr& u,
                                      const std::vector<std::pair<std::string, Sort>>& vars,
                                      std::uint64_t samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Mrel> vals;
  Env env;
  for (std::uint64_t s = 0; s < samples; ++s) {
    vals.clear();
    env.clear();
    for (const auto& [name, sort] : vars) {
      vals.push_back(random_class_member(u, sort, rng));
      env.emplace(name, vals.back());
    }
    if (refutes(law, u, env)) return snapshot(vars, vals);
  }
  return std::nullopt;
}

/// Pair masks over `slots` bit positions with at most `max_pairs` bits set,
/// ascending. Used to search small multirelations first.
std::vector<std::uint64_t> small_masks(int slots, int max_pairs) {
  std::vector<std::uint64_t> out{0};
  std::vector<std::uint64_t> current{0};
  for (int round = 0; round < max_pairs; ++round) {
    std::vector<std::uint64_t> next;
    for (std::uint64_t m : current) {
      const int lowest = m == 0 ? slots : std::countr_zero(m);
      for (int b = 0; b < lowest; ++b) next.push_back(m | (1ull << b));
    }
    out.insert(out.end(), next.begin(), next.end());
    current = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

Verdict check_law(const Law& law, const UniversePtr& u, const CheckMode& mode) {
  if (law.model != Model::Multirelations) {
    throw std::invalid_argument("law " + law.name + " is interpreted over the builtin algebra");
  }
  const auto vars = sorted_vars(law);
  std::ostringstream space_desc;

  if (mode.kind == CheckMode::Kind::Exhaustive) {
    const auto space = space_of(law, u);
    if (!space || *space > kMaxExhaustiveSpace) {
      throw std::invalid_argument("search space overflow in exhaustive mode for " + law.name);
    }
    std::vector<std::optional<std::vector<std::uint64_t>>> no_filter(vars.size());
    auto witness = scan(law, u, vars, no_filter);
    space_desc << "exhaustive n=" << u->size() << " (" << *space << " assignments)";
    if (witness) return {Verdict::Status::Refuted, space_desc.str(), std::move(witness), std::nullopt};
    return {Verdict::Status::Holds, space_desc.str(), std::nullopt, std::nullopt};
  }

  auto witness = sample_scan(law, u, vars, mode.samples, mode.seed);
  space_desc << "sampled n=" << u->size() << " (" << mode.samples << " samples, seed "
             << mode.seed << ")";
  if (witness) return {Verdict::Status::Refuted, space_desc.str(), std::move(witness), std::nullopt};
  return {Verdict::Status::Inconclusive, space_desc.str(), std::nullopt, std::nullopt};
}

Verdict check_law_algebra(const Law& law, const FiniteAlgebra& alg) {
  const auto vars = sorted_vars(law);
  const int n = alg.size();
  std::vector<int> idx(vars.size(), 0);
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < vars.size(); ++i) total *= static_cast<std::uint64_t>(n);

  for (;;) {
    AlgEnv env;
    for (std::size_t i = 0; i < vars.size(); ++i) env[vars[i].first] = idx[i];
    bool hyps_ok = true;
    for (const auto& h : law.hyps)
      if (!eval_cond_alg(h, alg, env)) {
        hyps_ok = false;
        break;
      }
    if (hyps_ok && !eval_cond_alg(law.concl, alg, env)) {
      AlgAssignment w;
      for (std::size_t i = 0; i < vars.size(); ++i) w.emplace_back(vars[i].first, idx[i]);
      std::ostringstream d;
      d << "builtin algebra (" << total << " assignments)";
      return {Verdict::Status::Refuted, d.str(), std::nullopt, std::move(w)};
    }
    std::size_t k = vars.size();
    while (k > 0) {
      if (++idx[k - 1] < n) break;
      idx[k - 1] = 0;
      --k;
    }
    if (k == 0) break;
  }
  std::ostringstream d;
  d << "builtin algebra (" << total << " assignments)";
  return {Verdict::Status::Holds, d.str(), std::nullopt, std::nullopt};
}

Verdict hunt_law(const Law& law, int max_n, std::uint64_t samples, std::uint64_t seed) {
  if (law.model == Model::Algebra) {
    return check_law_algebra(law, builtin_counterexample_algebra());
  }
  const auto vars = sorted_vars(law);

  // Scans assignments of multirelations with at most `pc` pairs each, in
  // canonical order. Witnesses tend to be tiny, so this runs before any
  // large enumeration.
  auto small_scan = [&](const UniversePtr& u, int n) -> std::optional<Verdict> {
    const int slots = static_cast<int>(pair_slots(n));
    for (int pc = 3; pc >= 1; --pc) {
      std::vector<std::optional<std::vector<std::uint64_t>>> candidates(vars.size());
      std::uint64_t total = 1;
      bool fits = true;
      for (std::size_t i = 0; i < vars.size(); ++i) {
        std::uint64_t c;
        if (vars[i].second == ClassTag::General) {
          candidates[i] = small_masks(slots, pc);
          c = candidates[i]->size();
        } else {
          c = class_count(u, vars[i].second);
        }
        if (c == 0 || total > kMaxExhaustiveSpace / c) {
          fits = false;
          break;
        }
        total *= c;
      }
      if (!fits) continue;
      if (auto witness = scan(law, u, vars, candidates)) {
        std::ostringstream d;
        d << "small-support scan n=" << n << " (<= " << pc << " pairs per variable)";
        return Verdict{Verdict::Status::Refuted, d.str(), std::move(witness), std::nullopt};
      }
      return std::nullopt;  // largest feasible budget found nothing
    }
    return std::nullopt;
  };

  for (int n = 1; n <= max_n; ++n) {
    const auto u = make_universe(n);
    const auto space = space_of(law, u);

    if (space && *space <= kMaxExhaustiveSpace) {
      if (*space > kAutoExhaustiveSpace) {
        if (auto v = small_scan(u, n)) return *v;
      }
      Verdict v = check_law(law, u, CheckMode::exhaustive());
      if (v.status == Verdict::Status::Refuted) return v;
      continue;
    }

    if (auto v = small_scan(u, n)) return *v;
    if (auto witness = sample_scan(law, u, vars, samples, seed)) {
      std::ostringstream d;
      d << "sampled n=" << n << " (" << samples << " samples, seed " << seed << ")";
      return {Verdict::Status::Refuted, d.str(), std::move(witness), std::nullopt};
    }
  }
  std::ostringstream d;
  d << "no witness found up to n=" << max_n;
  return {Verdict::Status::Inconclusive, d.str(), std::nullopt, std::nullopt};
}

bool replay_witness(const Law& law, std::string* why) {
  auto note = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (!law.witness) return note("no stored witness");

  if (law.model == Model::Algebra) {
    const auto& alg = builtin_counterexample_algebra();
    AlgEnv env;
    for (const auto& [var, elem] : law.witness->bindings) env[var] = alg.index_of(elem);
    for (const auto& h : law.hyps)
      if (!eval_cond_alg(h, alg, env)) return note("hypothesis fails at stored witness");
    if (eval_cond_alg(law.concl, alg, env)) return note("conclusion holds at stored witness");
    return true;
  }

  std::vector<std::string> names;
  {
    std::istringstream is(law.witness->universe);
    std::string item;
    while (std::getline(is, item, ',')) names.push_back(item);
  }
  const auto u = make_universe(names);
  Env env;
  for (const auto& [var, literal] : law.witness->bindings)
    env.emplace(var, parse_mrel_literal(u, literal));
  for (const auto& h : law.hyps)
    if (!eval_cond(h, u, env)) return note("hypothesis fails at stored witness");
  if (eval_cond(law.concl, u, env)) return note("conclusion holds at stored witness");
  return true;
}

std::string witness_to_string(const Assignment& a) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [var, val] : a) j[var] = mrel_to_json(val);
  return j.dump();
}

SuiteReport run_suite(const std::vector<Law>& laws, int n, const CheckMode& mode,
                      std::ostream* log) {
  const auto u = make_universe(n);
  SuiteReport report;

  for (const auto& law : laws) {
    Verdict v;
    if (!law.expect_valid) {
      v = hunt_law(law, std::max(n, 3), mode.samples, mode.seed);
    } else if (law.model == Model::Algebra) {
      v = check_law_algebra(law, builtin_counterexample_algebra());
    } else {
      const auto space = space_of(law, u);
      const bool fits = space && *space <= kAutoExhaustiveSpace;
      v = check_law(law, u,
                    fits ? CheckMode::exhaustive() : CheckMode::sampled(mode.samples, mode.seed));
    }

    const bool as_expected = law.expect_valid ? v.status != Verdict::Status::Refuted
                                              : v.status == Verdict::Status::Refuted;
    if (!as_expected) ++report.mismatches;
    if (log) {
      *log << "LAW " << law.name << ' ';
      switch (v.status) {
        case Verdict::Status::Holds: *log << "HOLDS"; break;
        case Verdict::Status::Refuted: *log << "REFUTED"; break;
        case Verdict::Status::Inconclusive: *log << "INCONCLUSIVE"; break;
      }
      if (v.witness) *log << ' ' << witness_to_string(*v.witness);
      if (v.alg_witness) {
        const auto& alg = builtin_counterexample_algebra();
        nlohmann::json j = nlohmann::json::object();
        for (const auto& [var, e] : *v.alg_witness)
          j[var] = alg.carrier[static_cast<std::size_t>(e)];
        *log << ' ' << j.dump();
      }
      if (!as_expected) *log << "  [MISMATCH: expected " << (law.expect_valid ? "valid" : "refuted") << ']';
      *log << '\n';
    }
    report.entries.push_back({&law, std::move(v), as_expected});
  }
  return report;
}

}  // namespace mra
