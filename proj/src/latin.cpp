#include "pancyclic/detail/latin.hpp"

#include <array>

namespace pancyclic::detail {

namespace {

struct Matcher {
  int k;
  int n;
  std::array<std::uint32_t, kMaxPoints> allowed{};  // per position
  std::array<int, kMaxPoints> owner{};              // value -> position, -1 if free
  std::array<bool, kMaxPoints> seen{};

  bool augment(int pos) {
    for (int v = 0; v < n; ++v) {
      if (!((allowed[static_cast<std::size_t>(pos)] >> v) & 1U) || seen[static_cast<std::size_t>(v)]) continue;
      seen[static_cast<std::size_t>(v)] = true;
      const int o = owner[static_cast<std::size_t>(v)];
      if (o < 0 || augment(o)) {
        owner[static_cast<std::size_t>(v)] = pos;
        return true;
      }
    }
    return false;
  }

  bool perfect() {
    owner.fill(-1);
    for (int p = 0; p < k; ++p) {
      seen.fill(false);
      if (!augment(p)) return false;
    }
    return true;
  }
};

}  // namespace

std::optional<Arrangement> disjoint_row(const std::vector<Arrangement>& rows, int k, int n) {
  Matcher m{k, n};
  const std::uint32_t full = (n >= 32) ? ~0U : ((1U << n) - 1U);
  for (int p = 0; p < k; ++p) {
    std::uint32_t a = full;
    for (const auto& r : rows) a &= ~(1U << r[p]);
    m.allowed[static_cast<std::size_t>(p)] = a;
  }
  if (!m.perfect()) return std::nullopt;

  // Fix positions left to right at the smallest value that keeps a perfect matching.
  std::vector<int> word(static_cast<std::size_t>(k));
  std::uint32_t used = 0;
  for (int p = 0; p < k; ++p) {
    const std::uint32_t saved = m.allowed[static_cast<std::size_t>(p)];
    bool placed = false;
    for (int v = 0; v < n && !placed; ++v) {
      if (!((saved >> v) & 1U) || ((used >> v) & 1U)) continue;
      m.allowed[static_cast<std::size_t>(p)] = 1U << v;
      for (int q = p + 1; q < k; ++q) m.allowed[static_cast<std::size_t>(q)] &= ~(1U << v);
      if (m.perfect()) {
        word[static_cast<std::size_t>(p)] = v;
        used |= 1U << v;
        placed = true;
      } else {
        for (int q = p + 1; q < k; ++q) {
          bool banned = false;
          for (const auto& r : rows) banned = banned || r[q] == v;
          if (!banned) m.allowed[static_cast<std::size_t>(q)] |= 1U << v;
        }
      }
    }
    if (!placed) return std::nullopt;
  }
  return Arrangement(std::span<const int>(word), n);
}

}  // namespace pancyclic::detail
