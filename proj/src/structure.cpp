#include "mra/structure.hpp"

#include <bit>
#include <functional>
#include <random>
#include <stdexcept>

#include "mra/enumerate.hpp"

namespace mra {

namespace {

// Bit mask of sources that are related to at least one target set.
StateSet domain_mask(const Mrel& r) {
  StateSet dom = 0;
  for (const auto& p : r.pairs()) dom |= 1u << p.src;
  return dom;
}

}  // namespace

Mrel domain(const Mrel& r) {
  std::vector<MPair> out;
  for (StateSet rest = domain_mask(r); rest != 0; rest &= rest - 1) {
    const int a = std::countr_zero(rest);
    out.push_back({static_cast<std::uint16_t>(a), static_cast<std::uint16_t>(1u << a)});
  }
  return Mrel(r.universe(), std::move(out));
}

Mrel tau(const Mrel& r) {
  std::vector<MPair> out;
  for (const auto& p : r.pairs())
    if (p.targets == 0) out.push_back(p);
  return Mrel(r.universe(), std::move(out));
}

Mrel nu(const Mrel& r) {
  std::vector<MPair> out;
  for (const auto& p : r.pairs())
    if (p.targets != 0) out.push_back(p);
  return Mrel(r.universe(), std::move(out));
}

Mrel up_closure(const Mrel& r) {
  const StateSet full = r.universe()->full_set();
  std::vector<MPair> out;
  for (const auto& p : r.pairs()) {
    // Enumerate all supersets of p.targets inside the universe.
    const StateSet free = full & ~p.targets;
    for (StateSet extra = 0;; extra = (extra - free) & free) {
      out.push_back({p.src, static_cast<std::uint16_t>(p.targets | extra)});
      if (extra == free) break;
    }
  }
  return Mrel(r.universe(), std::move(out));
}

Mrel to_terminal(const Mrel& r) {
  std::vector<MPair> out;
  for (StateSet rest = domain_mask(r); rest != 0; rest &= rest - 1) {
    out.push_back({static_cast<std::uint16_t>(std::countr_zero(rest)), 0});
  }
  return Mrel(r.universe(), std::move(out));
}

Mrel vectorize(const Mrel& r) {
  const StateSet full = r.universe()->full_set();
  std::vector<MPair> out;
  for (StateSet rest = domain_mask(r); rest != 0; rest &= rest - 1) {
    const auto a = static_cast<std::uint16_t>(std::countr_zero(rest));
    for (StateSet s = 0;; ++s) {
      out.push_back({a, static_cast<std::uint16_t>(s)});
      if (s == full) break;
    }
  }
  return Mrel(r.universe(), std::move(out));
}

bool is_in_class(const Mrel& r, ClassTag tag) {
  const auto& u = r.universe();
  switch (tag) {
    case ClassTag::SeqSubid:
      return meet(r, one_sigma(u)) == r;
    case ClassTag::Terminal:
      return seq(r, one_pi(u)) == r;
    case ClassTag::Vector:
      return par(seq(r, one_pi(u)), univ(u)) == r;
    case ClassTag::UpClosed:
      return par(r, univ(u)) == r;
    case ClassTag::Nonterminal:
      return meet(r, co_one_pi(u)) == r;
    case ClassTag::General:
      return true;
  }
  return false;
}

const char* class_name(ClassTag tag) {
  switch (tag) {
    case ClassTag::SeqSubid: return "sequential-subidentity";
    case ClassTag::Terminal: return "terminal";
    case ClassTag::Vector: return "vector";
    case ClassTag::UpClosed: return "up-closed";
    case ClassTag::Nonterminal: return "nonterminal";
    case ClassTag::General: return "general";
  }
  return "?";
}

Mrel diamond(const Mrel& x, const Mrel& p) {
  require_same_universe(x, p);
  if (!is_in_class(p, ClassTag::SeqSubid)) {
    throw std::invalid_argument("diamond: second argument must be a sequential subidentity");
  }
  return domain(seq(x, p));
}

bool leq_tau(const Mrel& a, const Mrel& b) { return is_subset(tau(a), tau(b)); }
bool leq_nu(const Mrel& a, const Mrel& b) { return is_subset(nu(a), nu(b)); }
bool eqv_tau(const Mrel& a, const Mrel& b) { return tau(a) == tau(b); }
bool eqv_nu(const Mrel& a, const Mrel& b) { return nu(a) == nu(b); }

RoundTripReport check_iso_roundtrips(const UniversePtr& u, std::uint64_t samples,
                                     std::uint64_t seed) {
  struct Identity {
    const char* name;
    std::function<Mrel(const Mrel&)> lhs;
    std::function<Mrel(const Mrel&)> rhs;
  };

  const Mrel u1p = one_pi(u);
  const Mrel u1s = one_sigma(u);
  const Mrel uU = univ(u);
  const Mrel ucop = co_one_pi(u);

  auto dom = [](const Mrel& x) { return domain(x); };
  auto t1p = [&](const Mrel& x) { return seq(x, u1p); };
  auto tcop = [&](const Mrel& x) { return seq(x, ucop); };
  auto tU = [&](const Mrel& x) { return seq(x, uU); };
  auto pU = [&](const Mrel& x) { return par(x, uU); };
  auto pcop = [&](const Mrel& x) { return par(x, ucop); };
  auto nt = [&](const Mrel& x) { return meet(x, ucop); };

  // Round trips of the three maps between subidentities, terminals and
  // vectors, for general elements and restricted to nonterminal parts; the
  // restriction is baked into the terms, so every identity is universally
  // quantified.
  const std::vector<Identity> ids = {
      {"d(d(x).U) = d(x)", [&](const Mrel& x) { return dom(tU(dom(x))); },
       [&](const Mrel& x) { return dom(x); }},
      {"d((x.1p)||U).U = (x.1p)||U",
       [&](const Mrel& x) { return tU(dom(pU(t1p(x)))); },
       [&](const Mrel& x) { return pU(t1p(x)); }},
      {"((x.1p)||U).1p = x.1p", [&](const Mrel& x) { return t1p(pU(t1p(x))); },
       [&](const Mrel& x) { return t1p(x); }},
      {"(((x.1p)||U).1p)||U = (x.1p)||U",
       [&](const Mrel& x) { return pU(t1p(pU(t1p(x)))); },
       [&](const Mrel& x) { return pU(t1p(x)); }},
      {"d(d(x).1p) = d(x)", [&](const Mrel& x) { return dom(t1p(dom(x))); },
       [&](const Mrel& x) { return dom(x); }},
      {"d(x.1p).1p = x.1p", [&](const Mrel& x) { return t1p(dom(t1p(x))); },
       [&](const Mrel& x) { return t1p(x); }},
      {"d(d(x&n1p).1p) = d(x&n1p)",
       [&](const Mrel& x) { return dom(t1p(dom(nt(x)))); },
       [&](const Mrel& x) { return dom(nt(x)); }},
      {"d((x&n1p).1p).1p = (x&n1p).1p",
       [&](const Mrel& x) { return t1p(dom(t1p(nt(x)))); },
       [&](const Mrel& x) { return t1p(nt(x)); }},
      {"d(d(x&n1p).n1p) = d(x&n1p)",
       [&](const Mrel& x) { return dom(tcop(dom(nt(x)))); },
       [&](const Mrel& x) { return dom(nt(x)); }},
      {"d((x&n1p).n1p).n1p = (x&n1p).n1p",
       [&](const Mrel& x) { return tcop(dom(tcop(nt(x)))); },
       [&](const Mrel& x) { return tcop(nt(x)); }},
      {"(((x&n1p).1p)||n1p).1p = (x&n1p).1p",
       [&](const Mrel& x) { return t1p(pcop(t1p(nt(x)))); },
       [&](const Mrel& x) { return t1p(nt(x)); }},
      {"(((x&n1p).n1p).1p)||n1p = (x&n1p).n1p",
       [&](const Mrel& x) { return pcop(t1p(tcop(nt(x)))); },
       [&](const Mrel& x) { return tcop(nt(x)); }},
  };

  RoundTripReport report;
  for (const auto& id : ids) report.items.push_back({id.name, true, std::nullopt});

  auto visit = [&](const Mrel& x) {
    for (std::size_t i = 0; i < ids.size(); ++i) {
      if (!report.items[i].holds) continue;
      if (!(ids[i].lhs(x) == ids[i].rhs(x))) {
        report.items[i].holds = false;
        report.items[i].witness = x;
      }
    }
  };

  const int n = u->size();
  if (n <= 2) {
    report.exhaustive = true;
    const std::uint64_t total = mrel_space(n);
    for (std::uint64_t i = 0; i < total; ++i) visit(mrel_from_index(u, i));
    report.checked = total;
  } else {
    report.exhaustive = false;
    std::mt19937_64 rng(seed);
    for (std::uint64_t i = 0; i < samples; ++i) visit(random_mrel(u, rng));
    report.checked = samples;
  }
  return report;
}

}  // namespace mra
