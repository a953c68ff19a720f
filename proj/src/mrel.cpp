#include "mra/mrel.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace mra {

namespace {

// Target sets of s grouped by source, in canonical (ascending) order.
std::vector<std::vector<StateSet>> successors(const Mrel& s) {
  std::vector<std::vector<StateSet>> succ(static_cast<std::size_t>(s.universe()->size()));
  for (const auto& p : s.pairs()) succ[p.src].push_back(p.targets);
  return succ;
}

}  // namespace

Mrel::Mrel(UniversePtr universe, std::vector<MPair> pairs)
    : universe_(std::move(universe)), pairs_(std::move(pairs)) {
  const int n = universe_->size();
  const StateSet full = universe_->full_set();
  for (const auto& p : pairs_) {
    if (static_cast<int>(p.src) >= n) throw std::invalid_argument("pair source out of range");
    if ((p.targets & ~full) != 0) throw std::invalid_argument("target set out of range");
  }
  std::sort(pairs_.begin(), pairs_.end());
  pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());
}

bool Mrel::contains(int src, StateSet targets) const {
  MPair key{static_cast<std::uint16_t>(src), static_cast<std::uint16_t>(targets)};
  return std::binary_search(pairs_.begin(), pairs_.end(), key);
}

Mrel constant(const UniversePtr& u, ConstKind kind) {
  const int n = u->size();
  std::vector<MPair> ps;
  switch (kind) {
    case ConstKind::Zero:
      break;
    case ConstKind::OneSigma:
      for (int i = 0; i < n; ++i)
        ps.push_back({static_cast<std::uint16_t>(i), static_cast<std::uint16_t>(1u << i)});
      break;
    case ConstKind::OnePi:
      for (int i = 0; i < n; ++i) ps.push_back({static_cast<std::uint16_t>(i), 0});
      break;
    case ConstKind::Univ:
      for (int i = 0; i < n; ++i)
        for (StateSet a = 0;; ++a) {
          ps.push_back({static_cast<std::uint16_t>(i), static_cast<std::uint16_t>(a)});
          if (a == u->full_set()) break;
        }
      break;
    case ConstKind::CoOnePi:
      for (int i = 0; i < n; ++i)
        for (StateSet a = 1; a <= u->full_set(); ++a)
          ps.push_back({static_cast<std::uint16_t>(i), static_cast<std::uint16_t>(a)});
      break;
  }
  return Mrel(u, std::move(ps));
}

Mrel mrel_zero(const UniversePtr& u) { return constant(u, ConstKind::Zero); }
Mrel one_sigma(const UniversePtr& u) { return constant(u, ConstKind::OneSigma); }
Mrel one_pi(const UniversePtr& u) { return constant(u, ConstKind::OnePi); }
Mrel univ(const UniversePtr& u) { return constant(u, ConstKind::Univ); }
Mrel co_one_pi(const UniversePtr& u) { return constant(u, ConstKind::CoOnePi); }

Mrel from_pairs(const UniversePtr& u,
                const std::vector<std::pair<std::string, std::vector<std::string>>>& pairs) {
  std::vector<MPair> ps;
  ps.reserve(pairs.size());
  for (const auto& [src, targets] : pairs) {
    StateSet set = 0;
    for (const auto& t : targets) set |= 1u << u->index_of(t);
    ps.push_back({static_cast<std::uint16_t>(u->index_of(src)),
                  static_cast<std::uint16_t>(set)});
  }
  return Mrel(u, std::move(ps));
}

void require_same_universe(const Mrel& a, const Mrel& b) {
  if (a.universe() != b.universe() && !(*a.universe() == *b.universe())) {
    throw std::invalid_argument("universe mismatch");
  }
}

Mrel join(const Mrel& a, const Mrel& b) {
  require_same_universe(a, b);
  std::vector<MPair> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.pairs().begin(), a.pairs().end(), b.pairs().begin(), b.pairs().end(),
                 std::back_inserter(out));
  return Mrel(a.universe(), std::move(out));
}

Mrel meet(const Mrel& a, const Mrel& b) {
  require_same_universe(a, b);
  std::vector<MPair> out;
  std::set_intersection(a.pairs().begin(), a.pairs().end(), b.pairs().begin(),
                        b.pairs().end(), std::back_inserter(out));
  return Mrel(a.universe(), std::move(out));
}

Mrel complement(const Mrel& a) {
  const auto& u = a.universe();
  std::vector<MPair> out;
  auto it = a.pairs().begin();
  for (int i = 0; i < u->size(); ++i) {
    for (StateSet s = 0;; ++s) {
      MPair p{static_cast<std::uint16_t>(i), static_cast<std::uint16_t>(s)};
      if (it != a.pairs().end() && *it == p) {
        ++it;
      } else {
        out.push_back(p);
      }
      if (s == u->full_set()) break;
    }
  }
  return Mrel(u, std::move(out));
}

bool is_subset(const Mrel& a, const Mrel& b) {
  require_same_universe(a, b);
  return std::includes(b.pairs().begin(), b.pairs().end(), a.pairs().begin(),
                       a.pairs().end());
}

Mrel seq(const Mrel& r, const Mrel& s) {
  require_same_universe(r, s);
  const auto& u = r.universe();
  const std::uint32_t nsubsets = 1u << u->size();
  const auto succ = successors(s);

  std::vector<MPair> out;
  std::vector<std::uint32_t> stamp(nsubsets, 0);
  std::uint32_t gen = 0;
  std::vector<StateSet> work, next;

  for (const auto& p : r.pairs()) {
    work.assign(1, 0);
    bool dead = false;
    for (StateSet rest = p.targets; rest != 0; rest &= rest - 1) {
      const int b = std::countr_zero(rest);
      if (succ[static_cast<std::size_t>(b)].empty()) {
        dead = true;
        break;
      }
      ++gen;
      next.clear();
      for (StateSet acc : work) {
        for (StateSet t : succ[static_cast<std::size_t>(b)]) {
          const StateSet v = acc | t;
          if (stamp[v] != gen) {
            stamp[v] = gen;
            next.push_back(v);
          }
        }
      }
      work.swap(next);
    }
    if (dead) continue;
    for (StateSet a : work)
      out.push_back({p.src, static_cast<std::uint16_t>(a)});
  }
  return Mrel(u, std::move(out));
}

Mrel par(const Mrel& r, const Mrel& s) {
  require_same_universe(r, s);
  const auto& u = r.universe();
  const auto rs = successors(r);
  const auto ss = successors(s);
  std::vector<MPair> out;
  for (int i = 0; i < u->size(); ++i) {
    for (StateSet a : rs[static_cast<std::size_t>(i)])
      for (StateSet b : ss[static_cast<std::size_t>(i)])
        out.push_back({static_cast<std::uint16_t>(i), static_cast<std::uint16_t>(a | b)});
  }
  return Mrel(u, std::move(out));
}

Mrel parikh(const Mrel& r, const Mrel& s) {
  require_same_universe(r, s);
  const auto& u = r.universe();
  const auto succ = successors(s);
  std::vector<MPair> out;
  std::vector<StateSet> cand, tmp;
  for (const auto& p : r.pairs()) {
    if (p.targets == 0) {
      // Vacuous condition: every target set qualifies.
      for (StateSet a = 0;; ++a) {
        out.push_back({p.src, static_cast<std::uint16_t>(a)});
        if (a == u->full_set()) break;
      }
      continue;
    }
    bool first = true;
    bool dead = false;
    for (StateSet rest = p.targets; rest != 0; rest &= rest - 1) {
      const int b = std::countr_zero(rest);
      const auto& tb = succ[static_cast<std::size_t>(b)];
      if (first) {
        cand = tb;
        first = false;
      } else {
        tmp.clear();
        std::set_intersection(cand.begin(), cand.end(), tb.begin(), tb.end(),
                              std::back_inserter(tmp));
        cand.swap(tmp);
      }
      if (cand.empty()) {
        dead = true;
        break;
      }
    }
    if (dead) continue;
    for (StateSet a : cand) out.push_back({p.src, static_cast<std::uint16_t>(a)});
  }
  return Mrel(u, std::move(out));
}

std::string to_string(const Mrel& r) {
  const auto& u = r.universe();
  std::ostringstream os;
  os << '{';
  bool first_pair = true;
  for (const auto& p : r.pairs()) {
    if (!first_pair) os << ", ";
    first_pair = false;
    os << '(' << u->name(p.src) << ",{";
    bool first_el = true;
    for (StateSet rest = p.targets; rest != 0; rest &= rest - 1) {
      if (!first_el) os << ',';
      first_el = false;
      os << u->name(std::countr_zero(rest));
    }
    os << "})";
  }
  os << '}';
  return os.str();
}

}  // namespace mra
