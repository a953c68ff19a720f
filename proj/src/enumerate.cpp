#include "mra/enumerate.hpp"

#include <bit>
#include <stdexcept>
#include <vector>

namespace mra {

namespace {

// Up-closed families of subsets of an n-element set, each family encoded as
// a bit mask over the 2^n subsets, listed in ascending mask order. Small for
// the sizes we enumerate (n <= 4: 168 families).
std::vector<std::uint32_t> up_families(int n) {
  if (n > 4) throw std::invalid_argument("up-closed enumeration limited to universes of size 4");
  const std::uint32_t nsub = 1u << n;
  std::vector<std::uint32_t> fams;
  for (std::uint64_t fam = 0; fam < (1ull << nsub); ++fam) {
    bool closed = true;
    for (std::uint32_t s = 0; s < nsub && closed; ++s) {
      if (!(fam >> s & 1)) continue;
      const std::uint32_t free = (nsub - 1) & ~s;
      for (std::uint32_t extra = free; extra != 0; extra = (extra - 1) & free) {
        if (!(fam >> (s | extra) & 1)) {
          closed = false;
          break;
        }
      }
    }
    if (closed) fams.push_back(static_cast<std::uint32_t>(fam));
  }
  return fams;
}

std::uint64_t pow_u64(std::uint64_t base, int exp) {
  std::uint64_t r = 1;
  for (int i = 0; i < exp; ++i) {
    if (base != 0 && r > UINT64_MAX / base) throw std::overflow_error("class count exceeds 64 bits");
    r *= base;
  }
  return r;
}

}  // namespace

std::uint64_t pair_slots(int n) {
  return static_cast<std::uint64_t>(n) << n;
}

std::uint64_t mrel_space(int n) {
  const std::uint64_t slots = pair_slots(n);
  if (slots >= 64) throw std::overflow_error("multirelation space exceeds 64 bits");
  return 1ull << slots;
}

Mrel mrel_from_index(const UniversePtr& u, std::uint64_t idx) {
  const int n = u->size();
  const std::uint32_t nsub = n == 0 ? 1 : (1u << n);
  std::vector<MPair> ps;
  while (idx != 0) {
    const int bit = std::countr_zero(idx);
    idx &= idx - 1;
    ps.push_back({static_cast<std::uint16_t>(bit / nsub),
                  static_cast<std::uint16_t>(bit % nsub)});
  }
  return Mrel(u, std::move(ps));
}

std::uint64_t mrel_index(const Mrel& r) {
  const int n = r.universe()->size();
  if (pair_slots(n) >= 64) throw std::overflow_error("multirelation index exceeds 64 bits");
  const std::uint32_t nsub = n == 0 ? 1 : (1u << n);
  std::uint64_t idx = 0;
  for (const auto& p : r.pairs()) {
    idx |= 1ull << (static_cast<std::uint64_t>(p.src) * nsub + p.targets);
  }
  return idx;
}

Mrel random_mrel(const UniversePtr& u, std::mt19937_64& rng) {
  const std::uint64_t slots = pair_slots(u->size());
  std::uint64_t mask = rng();
  if (slots < 64) mask &= (1ull << slots) - 1;
  return mrel_from_index(u, mask);
}

std::uint64_t class_count(const UniversePtr& u, ClassTag tag) {
  const int n = u->size();
  switch (tag) {
    case ClassTag::General:
      return mrel_space(n);
    case ClassTag::SeqSubid:
    case ClassTag::Terminal:
    case ClassTag::Vector:
      return 1ull << n;
    case ClassTag::Nonterminal: {
      const std::uint64_t slots = static_cast<std::uint64_t>(n) * ((1ull << n) - 1);
      if (slots >= 64) throw std::overflow_error("class count exceeds 64 bits");
      return 1ull << slots;
    }
    case ClassTag::UpClosed: {
      const auto fams = up_families(n);
      return pow_u64(fams.size(), n);
    }
  }
  return 0;
}

Mrel class_member(const UniversePtr& u, ClassTag tag, std::uint64_t idx) {
  const int n = u->size();
  std::vector<MPair> ps;
  switch (tag) {
    case ClassTag::General:
      return mrel_from_index(u, idx);
    case ClassTag::SeqSubid:
      for (int i = 0; i < n; ++i)
        if (idx >> i & 1)
          ps.push_back({static_cast<std::uint16_t>(i), static_cast<std::uint16_t>(1u << i)});
      return Mrel(u, std::move(ps));
    case ClassTag::Terminal:
      for (int i = 0; i < n; ++i)
        if (idx >> i & 1) ps.push_back({static_cast<std::uint16_t>(i), 0});
      return Mrel(u, std::move(ps));
    case ClassTag::Vector:
      for (int i = 0; i < n; ++i) {
        if (!(idx >> i & 1)) continue;
        for (StateSet s = 0;; ++s) {
          ps.push_back({static_cast<std::uint16_t>(i), static_cast<std::uint16_t>(s)});
          if (s == u->full_set()) break;
        }
      }
      return Mrel(u, std::move(ps));
    case ClassTag::Nonterminal: {
      // One slot per (source, nonempty target set) pair.
      const std::uint64_t per_src = (1ull << n) - 1;
      for (int i = 0; i < n; ++i) {
        const std::uint64_t block = (idx >> (static_cast<std::uint64_t>(i) * per_src)) &
                                    ((per_src >= 64) ? ~0ull : ((1ull << per_src) - 1));
        for (std::uint64_t b = block; b != 0; b &= b - 1) {
          const int t = std::countr_zero(b);
          ps.push_back({static_cast<std::uint16_t>(i), static_cast<std::uint16_t>(t + 1)});
        }
      }
      return Mrel(u, std::move(ps));
    }
    case ClassTag::UpClosed: {
      const auto fams = up_families(n);
      const std::uint64_t m = fams.size();
      for (int i = 0; i < n; ++i) {
        const std::uint32_t fam = fams[idx % m];
        idx /= m;
        for (std::uint32_t s = 0; s < (1u << n); ++s)
          if (fam >> s & 1)
            ps.push_back({static_cast<std::uint16_t>(i), static_cast<std::uint16_t>(s)});
      }
      return Mrel(u, std::move(ps));
    }
  }
  return Mrel::empty(u);
}

Mrel random_class_member(const UniversePtr& u, ClassTag tag, std::mt19937_64& rng) {
  const int n = u->size();
  switch (tag) {
    case ClassTag::General:
      return random_mrel(u, rng);
    case ClassTag::SeqSubid:
    case ClassTag::Terminal:
    case ClassTag::Vector:
      return class_member(u, tag, rng() & ((1ull << n) - 1));
    case ClassTag::Nonterminal: {
      Mrel r = random_mrel(u, rng);
      return nu(r);
    }
    case ClassTag::UpClosed:
      return up_closure(random_mrel(u, rng));
  }
  return Mrel::empty(u);
}

}  // namespace mra
