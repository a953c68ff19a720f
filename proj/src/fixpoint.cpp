#include "mra/fixpoint.hpp"

#include <stdexcept>

#include "mra/enumerate.hpp"
#include "mra/structure.hpp"

namespace mra {

namespace {

std::uint64_t iteration_cap(const UniversePtr& u) {
  return pair_slots(u->size()) + 1;
}

}  // namespace

FixpointResult lfp(const MonotoneFn& f, const UniversePtr& u) {
  Mrel x = Mrel::empty(u);
  const std::uint64_t cap = iteration_cap(u);
  for (std::uint64_t i = 1; i <= cap; ++i) {
    Mrel next = f.fn(x);
    if (!is_subset(x, next)) {
      throw FixpointError("non-monotone functional (ascending chain broken): " + f.description);
    }
    if (next == x) return {std::move(x), static_cast<int>(i), true};
    x = std::move(next);
  }
  throw FixpointError("iteration cap exceeded: " + f.description);
}

FixpointResult gfp(const MonotoneFn& f, const UniversePtr& u) {
  Mrel x = univ(u);
  const std::uint64_t cap = iteration_cap(u);
  for (std::uint64_t i = 1; i <= cap; ++i) {
    Mrel next = f.fn(x);
    if (!is_subset(next, x)) {
      throw FixpointError("non-monotone functional (descending chain broken): " + f.description);
    }
    if (next == x) return {std::move(x), static_cast<int>(i), true};
    x = std::move(next);
  }
  throw FixpointError("iteration cap exceeded: " + f.description);
}

Mrel star(const Mrel& x) {
  const auto& u = x.universe();
  const Mrel ones = one_sigma(u);
  return lfp({[&](const Mrel& w) { return join(ones, seq(x, w)); }, "1s + x.X"}, u).value;
}

Mrel star_binary(const Mrel& x, const Mrel& y) {
  require_same_universe(x, y);
  const auto& u = x.universe();
  return lfp({[&](const Mrel& w) { return join(y, seq(x, w)); }, "y + x.X"}, u).value;
}

Mrel omega(const Mrel& x) {
  const auto& u = x.universe();
  return gfp({[&](const Mrel& w) { return seq(x, w); }, "x.X"}, u).value;
}

Mrel omega_binary(const Mrel& x, const Mrel& y) {
  require_same_universe(x, y);
  const auto& u = x.universe();
  return gfp({[&](const Mrel& w) { return join(y, seq(x, w)); }, "y + x.X"}, u).value;
}

Mrel infinity(const Mrel& x) {
  const auto& u = x.universe();
  const Mrel ones = one_sigma(u);
  return gfp({[&](const Mrel& w) { return join(ones, seq(x, w)); }, "1s + x.X"}, u).value;
}

Mrel power_paren(const Mrel& x, int i) {
  if (i < 0) throw std::invalid_argument("negative iterate index");
  const auto& u = x.universe();
  Mrel acc = Mrel::empty(u);
  const Mrel ones = one_sigma(u);
  for (int k = 0; k < i; ++k) acc = join(ones, seq(x, acc));
  return acc;
}

Mrel power_bracket(const Mrel& x, int i) {
  if (i < 0) throw std::invalid_argument("negative iterate index");
  const auto& u = x.universe();
  Mrel acc = one_sigma(u);
  for (int k = 0; k < i; ++k) acc = join(one_sigma(u), seq(x, acc));
  return acc;
}

Mrel power_right(const Mrel& x, int k) {
  if (k < 0) throw std::invalid_argument("negative power");
  Mrel acc = one_sigma(x.universe());
  for (int i = 0; i < k; ++i) acc = seq(x, acc);
  return acc;
}

namespace {

Mrel stabilize(const Mrel& x, Mrel acc, const char* what) {
  const auto& u = x.universe();
  const Mrel ones = one_sigma(u);
  const std::uint64_t cap = iteration_cap(u) + 1;
  for (std::uint64_t i = 0; i < cap; ++i) {
    Mrel next = join(ones, seq(x, acc));
    if (next == acc) return acc;
    if (!is_subset(acc, next)) throw FixpointError(std::string("iterate chain not ascending: ") + what);
    acc = std::move(next);
  }
  throw FixpointError(std::string("iteration cap exceeded: ") + what);
}

}  // namespace

Mrel iter_star_paren(const Mrel& x) {
  return stabilize(x, Mrel::empty(x.universe()), "x^(*)");
}

Mrel iter_star_bracket(const Mrel& x) {
  return stabilize(x, one_sigma(x.universe()), "x^[*]");
}

Mrel nabla(const Mrel& x) {
  const auto& u = x.universe();
  Mrel p = one_sigma(u);
  const std::uint64_t cap = static_cast<std::uint64_t>(u->size()) + 2;
  for (std::uint64_t i = 0; i < cap; ++i) {
    Mrel next = domain(seq(x, p));
    if (next == p) return p;
    if (!is_subset(next, p)) throw FixpointError("diamond iteration not descending: nabla");
    p = std::move(next);
  }
  throw FixpointError("iteration cap exceeded: nabla");
}

bool is_omega_trivial(const Mrel& x) { return omega(x).is_empty(); }

namespace {

template <typename Pred>
bool forall_y(const UniversePtr& u, const QuantMode& mode, Pred violated) {
  if (mode.kind == QuantMode::Exhaustive) {
    if (u->size() > 2) {
      throw std::invalid_argument("exhaustive quantification limited to universes of size 2");
    }
    const std::uint64_t total = mrel_space(u->size());
    for (std::uint64_t i = 0; i < total; ++i) {
      if (violated(mrel_from_index(u, i))) return false;
    }
    return true;
  }
  std::mt19937_64 rng(mode.seed);
  for (std::uint64_t i = 0; i < mode.samples; ++i) {
    if (violated(random_mrel(u, rng))) return false;
  }
  return true;
}

}  // namespace

bool is_deflationary(const Mrel& x, const QuantMode& mode) {
  return forall_y(x.universe(), mode, [&](const Mrel& y) {
    return is_subset(y, seq(x, y)) && !y.is_empty();
  });
}

bool is_wellfounded(const Mrel& x, const QuantMode& mode) {
  return forall_y(x.universe(), mode, [&](const Mrel& y) {
    const Mrel dy = domain(y);
    return is_subset(dy, domain(seq(x, y))) && !dy.is_empty();
  });
}

}  // namespace mra
