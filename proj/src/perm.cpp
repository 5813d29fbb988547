#include "pancyclic/perm.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace pancyclic {

Arrangement::Arrangement(std::span<const int> values, int ambient) {
  if (ambient < 0 || ambient > kMaxPoints) {
    throw InvalidArgument("ambient size " + std::to_string(ambient) + " outside [0, 16]");
  }
  if (values.size() > static_cast<std::size_t>(ambient)) {
    throw InvalidArgument("tuple longer than its ambient set");
  }
  for (std::size_t i = 0; i < values.size(); ++i) {
    int v = values[i];
    if (v < 0 || v >= ambient) {
      throw InvalidArgument("value " + std::to_string(v) + " outside the ambient set");
    }
    if ((mask_ >> v) & 1U) {
      throw InvalidArgument("repeated value " + std::to_string(v));
    }
    mask_ |= 1U << v;
    values_[i] = static_cast<std::uint8_t>(v);
  }
  size_ = static_cast<std::uint8_t>(values.size());
  ambient_ = static_cast<std::uint8_t>(ambient);
}

std::vector<int> Arrangement::to_vector() const {
  return {values_.begin(), values_.begin() + size_};
}

int Arrangement::position_of(int value) const {
  if (!contains(value)) return -1;
  for (int i = 0; i < size_; ++i) {
    if (values_[static_cast<std::size_t>(i)] == value) return i;
  }
  return -1;
}

std::strong_ordering operator<=>(const Arrangement& a, const Arrangement& b) {
  if (auto c = a.ambient_ <=> b.ambient_; c != 0) return c;
  return std::lexicographical_compare_three_way(a.values_.begin(), a.values_.begin() + a.size_,
                                                b.values_.begin(), b.values_.begin() + b.size_);
}

Permutation::Permutation(std::span<const int> values)
    : word_(values, static_cast<int>(values.size())) {}

Permutation::Permutation(const Arrangement& word) : word_(word) {
  if (word.size() != word.ambient()) {
    throw InvalidArgument("arrangement of length " + std::to_string(word.size()) +
                          " over " + std::to_string(word.ambient()) + " points is not a permutation");
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 0);
  return Permutation(v);
}

Permutation Permutation::transposition(int n, int a, int b) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 0);
  std::swap(v[static_cast<std::size_t>(a)], v[static_cast<std::size_t>(b)]);
  return Permutation(v);
}

Permutation Permutation::inverse() const {
  std::vector<int> v(static_cast<std::size_t>(size()));
  for (int i = 0; i < size(); ++i) v[static_cast<std::size_t>(word_[i])] = i;
  return Permutation(v);
}

int Permutation::fixed_point_count() const {
  int count = 0;
  for (int i = 0; i < size(); ++i) count += word_[i] == i;
  return count;
}

bool Permutation::is_single_cycle() const {
  if (size() == 0) return false;
  int steps = 0;
  int x = 0;
  do {
    x = word_[x];
    ++steps;
  } while (x != 0);
  return steps == size();
}

CyclicPermutation::CyclicPermutation(Permutation p) : perm_(std::move(p)) {
  if (!perm_.is_single_cycle()) {
    throw InvalidArgument("permutation is not a single n-cycle");
  }
}

CyclicPermutation CyclicPermutation::canonical(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = (i + 1) % n;
  return CyclicPermutation(Permutation(v));
}

Permutation CyclicPermutation::power(int i) const {
  const int n = size();
  i %= n;
  if (i < 0) i += n;
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) {
    int y = x;
    for (int t = 0; t < i; ++t) y = perm_[y];
    v[static_cast<std::size_t>(x)] = y;
  }
  return Permutation(v);
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) throw InvalidArgument("compose: size mismatch");
  std::vector<int> v(static_cast<std::size_t>(p.size()));
  for (int i = 0; i < p.size(); ++i) v[static_cast<std::size_t>(i)] = p[q[i]];
  return Permutation(v);
}

Permutation inverse(const Permutation& p) { return p.inverse(); }

Permutation power(const CyclicPermutation& s, int i) { return s.power(i); }

int delta(const Arrangement& a, const Arrangement& b) {
  if (a.size() != b.size()) throw InvalidArgument("delta: length mismatch");
  int count = 0;
  for (int i = 0; i < a.size(); ++i) count += a[i] == b[i];
  return count;
}

int delta(const Permutation& a, const Permutation& b) { return delta(a.arrangement(), b.arrangement()); }

int common_values(const Arrangement& a, const Arrangement& b) {
  return std::popcount(a.value_mask() & b.value_mask());
}

int fixed_point_count(const Permutation& p) { return p.fixed_point_count(); }

Permutation relabel(const Permutation& gamma, const Permutation& x) { return compose(gamma, x); }

Arrangement relabel(const Permutation& gamma, const Arrangement& x) {
  if (gamma.size() != x.ambient()) throw InvalidArgument("relabel: ambient mismatch");
  std::vector<int> v(static_cast<std::size_t>(x.size()));
  for (int i = 0; i < x.size(); ++i) v[static_cast<std::size_t>(i)] = gamma[x[i]];
  return Arrangement(v, x.ambient());
}

Arrangement permute_positions(const Arrangement& x, const Permutation& rho) {
  if (rho.size() != x.size()) throw InvalidArgument("permute_positions: length mismatch");
  std::vector<int> v(static_cast<std::size_t>(x.size()));
  for (int i = 0; i < x.size(); ++i) v[static_cast<std::size_t>(i)] = x[rho[i]];
  return Arrangement(v, x.ambient());
}

Permutation permute_positions(const Permutation& x, const Permutation& rho) { return compose(x, rho); }

std::vector<Permutation> coset(const Permutation& tau, const CyclicPermutation& s) {
  if (s.size() != tau.size()) throw InvalidArgument("coset: size mismatch");
  std::vector<Permutation> members;
  members.reserve(static_cast<std::size_t>(tau.size()));
  Permutation current = tau;
  for (int i = 0; i < tau.size(); ++i) {
    members.push_back(current);
    current = compose(s.permutation(), current);
  }
  return members;
}

std::vector<Arrangement> coset(const Arrangement& tau, const CyclicPermutation& s) {
  if (s.size() != tau.size()) throw InvalidArgument("coset: cycle length must match tuple length");
  std::vector<Arrangement> members;
  members.reserve(static_cast<std::size_t>(tau.size()));
  Arrangement current = tau;
  for (int i = 0; i < tau.size(); ++i) {
    members.push_back(current);
    current = permute_positions(current, s.permutation());
  }
  return members;
}

std::uint64_t derangement_count(int n) {
  if (n < 0) throw InvalidArgument("derangement_count: negative n");
  if (n > 20) throw std::overflow_error("derangement_count: D_n exceeds 64 bits past n = 20");
  std::uint64_t prev2 = 1;  // D_0
  std::uint64_t prev1 = 0;  // D_1
  if (n == 0) return prev2;
  for (int m = 2; m <= n; ++m) {
    std::uint64_t next = static_cast<std::uint64_t>(m - 1) * (prev1 + prev2);
    prev2 = prev1;
    prev1 = next;
  }
  return prev1;
}

std::uint64_t factorial(int n) {
  if (n < 0 || n > 20) throw std::overflow_error("factorial: n outside [0, 20]");
  std::uint64_t r = 1;
  for (int i = 2; i <= n; ++i) r *= static_cast<std::uint64_t>(i);
  return r;
}

std::uint64_t falling_factorial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 0; i < k; ++i) r *= static_cast<std::uint64_t>(n - i);
  return r;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

bool for_each_cyclic(int n, const std::function<bool(const CyclicPermutation&)>& fn) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 0);
  do {
    Permutation p(v);
    if (p.is_single_cycle() && fn(CyclicPermutation(p))) return true;
  } while (std::next_permutation(v.begin(), v.end()));
  return false;
}

}  // namespace pancyclic

std::size_t std::hash<pancyclic::Arrangement>::operator()(const pancyclic::Arrangement& a) const noexcept {
  std::size_t h = 1469598103934665603ULL ^ static_cast<std::size_t>(a.ambient());
  for (int i = 0; i < a.size(); ++i) {
    h ^= static_cast<std::size_t>(a[i]) + 1;
    h *= 1099511628211ULL;
  }
  return h;
}
