#include "pancyclic/gammak.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "pancyclic/gamma.hpp"
#include "pancyclic/oracle.hpp"

namespace pancyclic::gammak {

std::vector<std::vector<int>> subset_gray_order(int n, int k) {
  if (k < 1 || k >= n) throw InvalidArgument("subset_gray_order needs 1 <= k < n");
  // Layers by smallest element, alternating direction; each layer recurses on the tail.
  std::function<std::vector<std::vector<int>>(int, int)> rec = [&](int lo, int size) {
    std::vector<std::vector<int>> out;
    if (size == 0) {
      out.emplace_back();
      return out;
    }
    bool forward = true;
    for (int j = lo; j + size <= n; ++j) {
      auto tail = rec(j + 1, size - 1);
      if (!forward) std::reverse(tail.begin(), tail.end());
      for (auto& t : tail) {
        t.insert(t.begin(), j);
        out.push_back(std::move(t));
      }
      forward = !forward;
    }
    return out;
  };
  return rec(0, k);
}

namespace {

std::vector<int> sorted_values(const Arrangement& a) {
  std::vector<int> v = a.to_vector();
  std::sort(v.begin(), v.end());
  return v;
}

// Hamiltonian cycle of the derangement graph on S_k through the identity.
std::vector<Permutation> hamiltonian_template(int k) {
  if (k == 1) return {Permutation::identity(1)};
  if (k == 2) return {Permutation::identity(2), Permutation({1, 0})};
  const Permutation id = Permutation::identity(k);
  return gamma::cycle(id, CyclicPermutation::canonical(k).permutation(), static_cast<int>(factorial(k)));
}

std::optional<std::vector<Arrangement>> constructive_eta(int n, int k, const Arrangement& start) {
  // Relabel values so the first subset of the Gray order is the start's value set.
  std::vector<int> image = sorted_values(start);
  for (int v = 0; v < n; ++v)
    if (!start.contains(v)) image.push_back(v);
  auto subsets = subset_gray_order(n, k);
  for (auto& s : subsets) {
    for (int& v : s) v = image[static_cast<std::size_t>(v)];
    std::sort(s.begin(), s.end());
  }

  const auto cycle = hamiltonian_template(k);
  std::vector<Arrangement> out;
  out.reserve(falling_factorial(n, k));
  Arrangement entry = start;
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    // entry as a permutation of S_k: entry = word o hat with word the sorted subset.
    std::vector<int> word = sorted_values(entry);
    std::vector<int> hat(static_cast<std::size_t>(k));
    for (int j = 0; j < k; ++j) {
      hat[static_cast<std::size_t>(j)] =
          static_cast<int>(std::lower_bound(word.begin(), word.end(), entry[j]) - word.begin());
    }
    const Permutation base(hat);
    for (const auto& h : cycle) {
      const Permutation p = compose(base, h);
      std::vector<int> vals(static_cast<std::size_t>(k));
      for (int j = 0; j < k; ++j) vals[static_cast<std::size_t>(j)] = word[static_cast<std::size_t>(p[j])];
      out.emplace_back(vals, n);
    }
    if (i + 1 == subsets.size()) break;
    const auto& now = subsets[i];
    const auto& nxt = subsets[i + 1];
    int drop = -1;
    int add = -1;
    for (int v : now)
      if (!std::binary_search(nxt.begin(), nxt.end(), v)) drop = v;
    for (int v : nxt)
      if (!std::binary_search(now.begin(), now.end(), v)) add = v;
    std::vector<int> last = out.back().to_vector();
    for (int& v : last)
      if (v == drop) v = add;
    std::rotate(last.begin(), last.begin() + (k > 1 ? 1 : 0), last.end());
    entry = Arrangement(last, n);
  }
  if (check_eta_order(n, k, out)) return std::nullopt;
  if (!(out.front() == start)) return std::nullopt;
  return out;
}

std::vector<Arrangement> search_eta(int n, int k, const Arrangement& start) {
  std::vector<Arrangement> vertices;
  for_each_vertex(GraphSpec::arrangement(n, k), [&](const Arrangement& a) { vertices.push_back(a); });
  const std::size_t count = vertices.size();
  std::vector<std::vector<int>> adj(count);
  for (std::size_t a = 0; a < count; ++a)
    for (std::size_t b = a + 1; b < count; ++b)
      if (delta(vertices[a], vertices[b]) == 0 && common_values(vertices[a], vertices[b]) >= k - 1) {
        adj[a].push_back(static_cast<int>(b));
        adj[b].push_back(static_cast<int>(a));
      }

  std::vector<bool> used(count, false);
  std::vector<int> path{static_cast<int>(rank(start))};
  used[static_cast<std::size_t>(path[0])] = true;
  long budget = 5'000'000;
  auto free_degree = [&](int v) {
    int d = 0;
    for (int w : adj[static_cast<std::size_t>(v)]) d += !used[static_cast<std::size_t>(w)];
    return d;
  };
  // Depth-first search, trying the neighbour with the fewest onward options first.
  std::function<bool()> extend = [&]() -> bool {
    if (path.size() == count) return true;
    if (--budget < 0) return false;
    std::vector<std::pair<int, int>> options;
    for (int w : adj[static_cast<std::size_t>(path.back())])
      if (!used[static_cast<std::size_t>(w)]) options.emplace_back(free_degree(w), w);
    std::sort(options.begin(), options.end());
    for (auto [d, w] : options) {
      used[static_cast<std::size_t>(w)] = true;
      path.push_back(w);
      if (extend()) return true;
      path.pop_back();
      used[static_cast<std::size_t>(w)] = false;
    }
    return false;
  };
  if (!extend()) throw ConstructionFailed("no eta order found from the given start");
  std::vector<Arrangement> out;
  for (int v : path) out.push_back(vertices[static_cast<std::size_t>(v)]);
  return out;
}

}  // namespace

std::vector<Arrangement> eta_order(int n, int k, const Arrangement& start) {
  if (k < 1 || k >= n) throw InvalidArgument("eta_order needs 1 <= k < n");
  if (start.size() != k || start.ambient() != n) {
    throw InvalidArgument("start tuple must have " + std::to_string(k) + " distinct values from 1.." + std::to_string(n));
  }
  // Gamma_3 is two disjoint triangles, so no within-subset path exists for k = 3.
  if (k != 3) {
    if (auto order = constructive_eta(n, k, start)) return *order;
  }
  return search_eta(n, k, start);
}

std::optional<std::string> check_eta_order(int n, int k, const std::vector<Arrangement>& order) {
  if (order.size() != falling_factorial(n, k)) {
    return "order has " + std::to_string(order.size()) + " entries, expected " + std::to_string(falling_factorial(n, k));
  }
  std::unordered_set<Arrangement> seen;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const Arrangement& a = order[i];
    if (a.size() != k || a.ambient() != n) return "entry " + std::to_string(i) + " has the wrong shape";
    if (!seen.insert(a).second) return "entry " + std::to_string(i) + " repeats";
    if (i == 0) continue;
    const Arrangement& b = order[i - 1];
    if (delta(a, b) != 0) return "entries " + std::to_string(i - 1) + " and " + std::to_string(i) + " agree somewhere";
    if (common_values(a, b) < k - 1) {
      return "entries " + std::to_string(i - 1) + " and " + std::to_string(i) + " share fewer than k-1 values";
    }
  }
  return std::nullopt;
}

namespace {

Arrangement suffix(const Permutation& x, int k) {
  const int n = x.size();
  std::vector<int> v;
  for (int i = n - k; i < n; ++i) v.push_back(x[i]);
  return Arrangement(v, n);
}

std::vector<int> prefix(const Permutation& x, int k) {
  std::vector<int> v;
  for (int i = 0; i < x.size() - k; ++i) v.push_back(x[i]);
  return v;
}

// Prefix of x with values replaced by their rank among the prefix values.
Permutation compress(const Permutation& x, int k) {
  const std::uint32_t mask = suffix(x, k).value_mask();
  std::vector<int> v;
  for (int i = 0; i < x.size() - k; ++i) {
    const auto below = (1U << x[i]) - 1U;
    v.push_back(x[i] - std::popcount(mask & below));
  }
  return Permutation(v);
}

Permutation expand(const Permutation& hat, const Arrangement& eta) {
  const int n = eta.ambient();
  std::vector<int> free;
  for (int v = 0; v < n; ++v)
    if (!eta.contains(v)) free.push_back(v);
  std::vector<int> w;
  for (int i = 0; i < hat.size(); ++i) w.push_back(free[static_cast<std::size_t>(hat[i])]);
  for (int i = 0; i < eta.size(); ++i) w.push_back(eta[i]);
  return Permutation(w);
}

Permutation join(const std::vector<int>& head, const Arrangement& eta) {
  std::vector<int> w = head;
  for (int i = 0; i < eta.size(); ++i) w.push_back(eta[i]);
  return Permutation(w);
}

int parity(const Permutation& p) {
  int inversions = 0;
  for (int i = 0; i < p.size(); ++i)
    for (int j = i + 1; j < p.size(); ++j) inversions += p[i] > p[j];
  return inversions & 1;
}

}  // namespace

std::optional<BlockBridge> bridge_blocks(const Permutation& x, const Permutation& y, int k, const Arrangement& target,
                                         const std::function<bool(const Permutation&, const Permutation&)>& accept,
                                         bool allow_scan) {
  const int n = x.size();
  const int m = n - k;
  auto good = [&](const Permutation& u, const Permutation& v) {
    return delta(x, u) == k && delta(y, v) == k && delta(u, v) == k && accept(u, v);
  };

  const Arrangement eta = suffix(x, k);
  if (suffix(y, k) == eta && !(eta == target) && delta(eta, target) == 0 && common_values(eta, target) >= k - 1) {
    std::vector<int> a = prefix(x, k);
    std::vector<int> b = prefix(y, k);
    if (common_values(eta, target) == k - 1) {
      // The value leaving the suffix takes the place of the one entering it.
      int leaving = -1;
      int entering = -1;
      for (int i = 0; i < k; ++i) {
        if (!target.contains(eta[i])) leaving = eta[i];
        if (!eta.contains(target[i])) entering = target[i];
      }
      for (int& v : a)
        if (v == entering) v = leaving;
      for (int& v : b)
        if (v == entering) v = leaving;
    }
    std::vector<int> pi(static_cast<std::size_t>(m));
    std::iota(pi.begin(), pi.end(), 0);
    std::vector<int> ha(static_cast<std::size_t>(m));
    std::vector<int> hb(static_cast<std::size_t>(m));
    do {
      for (int j = 0; j < m; ++j) {
        ha[static_cast<std::size_t>(j)] = a[static_cast<std::size_t>(pi[static_cast<std::size_t>(j)])];
        hb[static_cast<std::size_t>(j)] = b[static_cast<std::size_t>(pi[static_cast<std::size_t>(j)])];
      }
      const Permutation u = join(ha, target);
      const Permutation v = join(hb, target);
      if (good(u, v)) return BlockBridge{x, y, u, v, true};
    } while (std::next_permutation(pi.begin(), pi.end()));
  }
  if (!allow_scan) return std::nullopt;

  std::vector<int> free;
  for (int v = 0; v < n; ++v)
    if (!target.contains(v)) free.push_back(v);
  std::vector<int> hu = free;
  do {
    const Permutation u = join(hu, target);
    if (delta(x, u) != k) continue;
    std::vector<int> hv = free;
    do {
      const Permutation v = join(hv, target);
      if (good(u, v)) return BlockBridge{x, y, u, v, false};
    } while (std::next_permutation(hv.begin(), hv.end()));
  } while (std::next_permutation(hu.begin(), hu.end()));
  return std::nullopt;
}

namespace {

struct Unit {
  Arrangement block;
  int part;  // triangle parity, 0 for whole blocks
};

struct Placed {
  int unit;
  std::vector<std::pair<Permutation, Permutation>> edges;
};

class Builder {
 public:
  Builder(const Permutation& alpha, const Permutation& beta, int k, ConstructStats& stats)
      : alpha_(alpha), beta_(beta), n_(alpha.size()), k_(k), m_(n_ - k), triangles_(m_ == 3), stats_(stats) {
    index_.assign(static_cast<std::size_t>(falling_factorial(n_, k_) * 2), -1);
    for (const auto& eta : eta_order(n_, k_, suffix(alpha, k_))) {
      for (int part = 0; part < (triangles_ ? 2 : 1); ++part) {
        index_[key(eta, part)] = static_cast<int>(units_.size());
        units_.push_back({eta, part});
      }
    }
    used_.assign(units_.size(), false);
  }

  int unit_size() const { return triangles_ ? 3 : static_cast<int>(factorial(m_)); }

  std::vector<Permutation> run(int length) {
    const int u = unit_size();
    int first = std::min(length, u);
    std::vector<int> budgets;
    if (length > u) {
      const int rest = length - u;
      const int count = (rest + u - 1) / u;
      budgets.assign(static_cast<std::size_t>(count), u);
      budgets.back() = rest - (count - 1) * u;
      if (budgets.back() == 1) {
        budgets.back() = 2;
        if (count >= 2) {
          budgets[budgets.size() - 2] = u - 1;
        } else {
          first = u - 1;
        }
      }
    }
    start(first);
    for (int p : budgets) splice(p);

    std::vector<Permutation> out{alpha_};
    for (Permutation cur = next_.at(alpha_); !(cur == alpha_); cur = next_.at(cur)) out.push_back(cur);
    if (static_cast<int>(out.size()) != length || !(out[1] == beta_)) {
      throw ConstructionFailed("fixed-k cycle has the wrong shape after splicing");
    }
    return out;
  }

 private:
  static std::size_t key(const Arrangement& eta, int part) { return static_cast<std::size_t>(rank(eta) * 2 + part); }

  int unit_of(const Permutation& x) const {
    return index_[key(suffix(x, k_), triangles_ ? parity(compress(x, k_)) : 0)];
  }

  // Path of p vertices from u to v inside the unit containing both.
  std::vector<Permutation> unit_path(const Permutation& u, const Permutation& v, int p) const {
    if (p == 2) return {u, v};
    const Arrangement eta = suffix(u, k_);
    const Permutation hu = compress(u, k_);
    const Permutation hv = compress(v, k_);
    if (triangles_) {
      for (int t = 1; t < 3; ++t) {
        const Permutation w = compose(hu, CyclicPermutation::canonical(3).power(t));
        if (!(w == hv)) return {u, expand(w, eta), v};
      }
    }
    const auto c = gamma::cycle(hu, hv, p);
    std::vector<Permutation> path{u};
    for (std::size_t i = c.size() - 1; i >= 2; --i) path.push_back(expand(c[i], eta));
    path.push_back(v);
    return path;
  }

  void start(int length) {
    std::vector<Permutation> c{alpha_, beta_};
    if (length >= 3) {
      // unit_path gives alpha, ..., beta; reading it backwards from beta keeps alpha-beta first.
      auto path = unit_path(alpha_, beta_, length);
      c.assign({alpha_, beta_});
      for (std::size_t i = path.size() - 2; i >= 1; --i) c.push_back(path[i]);
    }
    Placed placed{unit_of(alpha_), {}};
    for (std::size_t i = 0; i < c.size(); ++i) {
      next_[c[i]] = c[(i + 1) % c.size()];
      if (i >= 1) placed.edges.emplace_back(c[i], c[(i + 1) % c.size()]);
    }
    used_[static_cast<std::size_t>(placed.unit)] = true;
    placed_.push_back(std::move(placed));
  }

  void splice(int p) {
    for (bool scan : {false, true}) {
      for (std::size_t t = 0; t < units_.size(); ++t) {
        if (used_[t]) continue;
        const auto accept = [&](const Permutation& u, const Permutation& v) {
          return unit_of(u) == static_cast<int>(t) && unit_of(v) == static_cast<int>(t);
        };
        for (auto src = placed_.rbegin(); src != placed_.rend(); ++src) {
          if (units_[static_cast<std::size_t>(src->unit)].block == units_[t].block) continue;
          for (const auto& [x, y] : src->edges) {
            auto it = next_.find(x);
            if (it == next_.end() || !(it->second == y)) continue;
            auto bridge = bridge_blocks(x, y, k_, units_[t].block, accept, scan);
            if (!bridge) continue;
            (bridge->constructed ? stats_.constructed_bridges : stats_.fallback_bridges)++;
            insert(t, *bridge, p);
            return;
          }
        }
      }
    }
    throw ConstructionFailed("no fresh unit can be bridged into the cycle");
  }

  void insert(std::size_t t, const BlockBridge& bridge, int p) {
    const auto path = unit_path(bridge.entry_first, bridge.entry_second, p);
    Placed placed{static_cast<int>(t), {}};
    next_[bridge.exit_first] = path.front();
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      next_[path[i]] = path[i + 1];
      placed.edges.emplace_back(path[i], path[i + 1]);
    }
    next_[path.back()] = bridge.exit_second;
    used_[t] = true;
    placed_.push_back(std::move(placed));
    ++stats_.units;
  }

  Permutation alpha_;
  Permutation beta_;
  int n_;
  int k_;
  int m_;
  bool triangles_;
  ConstructStats& stats_;
  std::vector<Unit> units_;
  std::vector<int> index_;
  std::vector<bool> used_;
  std::vector<Placed> placed_;
  std::unordered_map<Permutation, Permutation> next_;
};

void require_edge(const Permutation& alpha, const Permutation& beta, int k) {
  const int n = alpha.size();
  if (beta.size() != n) throw InvalidArgument("endpoints have different sizes");
  if (k < 0 || k >= n) throw InvalidArgument("k must lie in [0, n-1]");
  if (n < 4 || n < 2 * k + 1) throw PreconditionViolated("the fixed-k graph needs n >= 4 and n >= 2k+1");
  if (alpha == beta || delta(alpha, beta) != k) {
    throw InvalidArgument("endpoints do not agree in exactly " + std::to_string(k) + " positions");
  }
}

}  // namespace

std::vector<Permutation> cycle(const Permutation& alpha, const Permutation& beta, int k, int length,
                               ConstructStats* stats) {
  require_edge(alpha, beta, k);
  const int n = alpha.size();
  if (length < 3 || static_cast<std::uint64_t>(length) > factorial(n)) {
    throw LengthOutOfRange("length " + std::to_string(length) + " outside [3, " + std::to_string(factorial(n)) + "]");
  }
  if (k == 0) return gamma::cycle(alpha, beta, length);
  if (n - k == 3 && 2 * static_cast<std::uint64_t>(length) > factorial(n)) {
    // Every edge multiplies by a 3-cycle, so even and odd permutations never meet.
    throw LengthOutOfRange("gammak:" + std::to_string(n) + ":" + std::to_string(k) +
                           " splits into two components of order " + std::to_string(factorial(n) / 2) +
                           "; no cycle has length " + std::to_string(length));
  }

  // Move the agreement positions to the suffix: rho lists disagreeing positions, then agreeing ones.
  std::vector<int> order;
  for (int i = 0; i < n; ++i)
    if (alpha[i] != beta[i]) order.push_back(i);
  for (int i = 0; i < n; ++i)
    if (alpha[i] == beta[i]) order.push_back(i);
  const Permutation rho(order);
  const Permutation back = rho.inverse();

  ConstructStats local;
  Builder builder(compose(alpha, rho), compose(beta, rho), k, stats ? *stats : local);
  auto out = builder.run(length);
  for (auto& x : out) x = compose(x, back);
  return out;
}

CycleWitness construct(const Permutation& alpha, const Permutation& beta, int k, int length, ConstructStats* stats) {
  CycleWitness witness{GraphSpec::fixed_k(alpha.size(), k), {}};
  for (const auto& p : cycle(alpha, beta, k, length, stats)) witness.vertices.push_back(p.arrangement());
  const auto check = oracle::validate_cycle(witness, {alpha.arrangement(), beta.arrangement()}, length);
  if (!check.ok()) throw ConstructionFailed("fixed-k construction produced an invalid witness: " + check.message);
  return witness;
}

}  // namespace pancyclic::gammak
