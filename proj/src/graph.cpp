#include "pancyclic/graph.hpp"

#include <array>
#include <bit>
#include <charconv>

namespace pancyclic {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidArgument(what);
}

std::vector<int> parse_fields(std::string_view text, std::string_view& head) {
  std::vector<int> fields;
  std::size_t colon = text.find(':');
  head = text.substr(0, colon);
  while (colon != std::string_view::npos) {
    std::size_t next = text.find(':', colon + 1);
    std::string_view piece = text.substr(colon + 1, next == std::string_view::npos ? next : next - colon - 1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
    if (ec != std::errc() || ptr != piece.data() + piece.size()) {
      throw InvalidArgument("bad number '" + std::string(piece) + "' in graph spec");
    }
    fields.push_back(value);
    colon = next;
  }
  return fields;
}

// Depth-first placement of tuple entries; `allow` decides each entry.
template <typename Allow, typename Accept>
void place(int position, int length, int ambient, std::array<int, kMaxPoints>& buf, std::uint32_t used,
           Allow& allow, Accept& accept) {
  if (position == length) {
    accept(std::span<const int>(buf.data(), static_cast<std::size_t>(length)));
    return;
  }
  for (int v = 0; v < ambient; ++v) {
    if ((used >> v) & 1U) continue;
    if (!allow(position, v)) continue;
    buf[static_cast<std::size_t>(position)] = v;
    place(position + 1, length, ambient, buf, used | (1U << v), allow, accept);
    if constexpr (requires { allow.undo(position, v); }) allow.undo(position, v);
  }
}

}  // namespace

GraphSpec GraphSpec::derangement(int n) {
  require(n >= 1 && n <= kMaxPoints, "gamma: n must lie in [1, 16]");
  return {Family::Derangement, n, 0};
}

GraphSpec GraphSpec::fixed_k(int n, int k) {
  require(n >= 1 && n <= kMaxPoints, "gammak: n must lie in [1, 16]");
  require(k >= 0 && k <= n, "gammak: k must lie in [0, n]");
  return {Family::FixedK, n, k};
}

GraphSpec GraphSpec::arrangement(int n, int k) {
  require(n >= 1 && n <= kMaxPoints, "arr: n must lie in [1, 16]");
  require(k >= 1 && k <= n, "arr: k must lie in [1, n]");
  return {Family::Arrangement, n, k};
}

GraphSpec GraphSpec::complement_nontrivial(int n) {
  require(n >= 1 && n <= kMaxPoints, "compl: n must lie in [1, 16]");
  return {Family::ComplementNonTrivial, n, 0};
}

GraphSpec GraphSpec::gtilde1(int n, int k) {
  require(n >= 2 && n <= kMaxPoints + 1, "gtilde: n must lie in [2, 17]");
  require(k >= 2 && k <= n, "gtilde: k must lie in [2, n]");
  return {Family::GTilde1, n, k};
}

GraphSpec GraphSpec::parse(std::string_view text) {
  std::string_view head;
  std::vector<int> f = parse_fields(text, head);
  auto arity = [&](std::size_t want) {
    require(f.size() == want, "graph spec '" + std::string(text) + "' has the wrong number of fields");
  };
  if (head == "gamma") { arity(1); return derangement(f[0]); }
  if (head == "gammak") { arity(2); return fixed_k(f[0], f[1]); }
  if (head == "arr") { arity(2); return arrangement(f[0], f[1]); }
  if (head == "compl") { arity(1); return complement_nontrivial(f[0]); }
  if (head == "gtilde") { arity(2); return gtilde1(f[0], f[1]); }
  throw InvalidArgument("unknown graph family '" + std::string(head) + "'");
}

std::string GraphSpec::to_string() const {
  switch (family_) {
    case Family::Derangement: return "gamma:" + std::to_string(n_);
    case Family::FixedK: return "gammak:" + std::to_string(n_) + ":" + std::to_string(k_);
    case Family::Arrangement: return "arr:" + std::to_string(n_) + ":" + std::to_string(k_);
    case Family::ComplementNonTrivial: return "compl:" + std::to_string(n_);
    case Family::GTilde1: return "gtilde:" + std::to_string(n_) + ":" + std::to_string(k_);
  }
  return {};
}

int GraphSpec::tuple_length() const {
  switch (family_) {
    case Family::Arrangement: return k_;
    case Family::GTilde1: return k_ - 1;
    default: return n_;
  }
}

int GraphSpec::ambient() const { return family_ == Family::GTilde1 ? n_ - 1 : n_; }

std::uint64_t order(const GraphSpec& spec) { return falling_factorial(spec.ambient(), spec.tuple_length()); }

std::uint64_t degree(const GraphSpec& spec) {
  const int n = spec.n();
  const int k = spec.k();
  switch (spec.family()) {
    case GraphSpec::Family::Derangement:
      return derangement_count(n);
    case GraphSpec::Family::FixedK:
      return binomial(n, k) * derangement_count(n - k);
    case GraphSpec::Family::Arrangement: {
      // inclusion-exclusion over the coordinates forced to agree
      std::int64_t total = 0;
      for (int i = 0; i <= k; ++i) {
        auto term = static_cast<std::int64_t>(binomial(k, i) * falling_factorial(n - i, k - i));
        total += (i % 2 == 0) ? term : -term;
      }
      return static_cast<std::uint64_t>(total);
    }
    case GraphSpec::Family::ComplementNonTrivial:
      return factorial(n) - 1 - derangement_count(n);
    case GraphSpec::Family::GTilde1:
      return order(spec) - 1 - derangement_count(k - 1);
  }
  return 0;
}

bool is_vertex(const GraphSpec& spec, const Arrangement& v) {
  return v.size() == spec.tuple_length() && v.ambient() == spec.ambient();
}

bool is_adjacent(const GraphSpec& spec, const Arrangement& u, const Arrangement& v) {
  if (!is_vertex(spec, u) || !is_vertex(spec, v)) {
    throw InvalidArgument("vertex shape does not match " + spec.to_string());
  }
  const int agree = delta(u, v);
  switch (spec.family()) {
    case GraphSpec::Family::Derangement:
    case GraphSpec::Family::Arrangement:
      return agree == 0;
    case GraphSpec::Family::FixedK:
      return agree == spec.k() && !(u == v);
    case GraphSpec::Family::ComplementNonTrivial:
      return agree >= 1 && !(u == v);
    case GraphSpec::Family::GTilde1:
      if (u == v) return false;
      return u.value_mask() != v.value_mask() || agree >= 1;
  }
  return false;
}

void for_each_vertex(const GraphSpec& spec, const std::function<void(const Arrangement&)>& fn) {
  std::array<int, kMaxPoints> buf{};
  auto allow = [](int, int) { return true; };
  const int ambient = spec.ambient();
  auto accept = [&](std::span<const int> values) { fn(Arrangement(values, ambient)); };
  place(0, spec.tuple_length(), ambient, buf, 0, allow, accept);
}

void for_each_neighbor(const GraphSpec& spec, const Arrangement& u,
                       const std::function<void(const Arrangement&)>& fn) {
  if (!is_vertex(spec, u)) throw InvalidArgument("vertex shape does not match " + spec.to_string());
  const int length = spec.tuple_length();
  const int ambient = spec.ambient();
  std::array<int, kMaxPoints> buf{};
  auto accept = [&](std::span<const int> values) { fn(Arrangement(values, ambient)); };

  switch (spec.family()) {
    case GraphSpec::Family::Derangement:
    case GraphSpec::Family::Arrangement: {
      auto allow = [&](int position, int v) { return v != u[position]; };
      place(0, length, ambient, buf, 0, allow, accept);
      return;
    }
    case GraphSpec::Family::FixedK: {
      struct Allow {
        const Arrangement& u;
        int k;
        int length;
        int agreed = 0;
        bool operator()(int position, int v) {
          const bool same = v == u[position];
          const int after = agreed + (same ? 1 : 0);
          // positions left after this one must still be able to reach exactly k
          if (after > k || after + (length - position - 1) < k) return false;
          agreed = after;
          return true;
        }
        void undo(int position, int v) {
          if (v == u[position]) --agreed;
        }
      } allow{u, spec.k(), length};
      place(0, length, ambient, buf, 0, allow, accept);
      return;
    }
    case GraphSpec::Family::ComplementNonTrivial:
    case GraphSpec::Family::GTilde1:
      for_each_vertex(spec, [&](const Arrangement& v) {
        if (is_adjacent(spec, u, v)) fn(v);
      });
      return;
  }
}

std::vector<Arrangement> neighbors(const GraphSpec& spec, const Arrangement& u) {
  std::vector<Arrangement> out;
  for_each_neighbor(spec, u, [&](const Arrangement& v) { out.push_back(v); });
  return out;
}

std::uint64_t rank(const Arrangement& v) {
  const int length = v.size();
  const int ambient = v.ambient();
  std::uint64_t r = 0;
  std::uint32_t used = 0;
  for (int i = 0; i < length; ++i) {
    const std::uint32_t below = (1U << v[i]) - 1U;
    const auto smaller_unused = static_cast<std::uint64_t>(std::popcount(below & ~used));
    r += smaller_unused * falling_factorial(ambient - i - 1, length - i - 1);
    used |= 1U << v[i];
  }
  return r;
}

Arrangement unrank(std::uint64_t index, int length, int ambient) {
  if (index >= falling_factorial(ambient, length)) throw InvalidArgument("unrank: index out of range");
  std::vector<int> values;
  values.reserve(static_cast<std::size_t>(length));
  std::uint32_t used = 0;
  for (int i = 0; i < length; ++i) {
    const std::uint64_t block = falling_factorial(ambient - i - 1, length - i - 1);
    auto skip = index / block;
    index %= block;
    for (int v = 0; v < ambient; ++v) {
      if ((used >> v) & 1U) continue;
      if (skip == 0) {
        values.push_back(v);
        used |= 1U << v;
        break;
      }
      --skip;
    }
  }
  return Arrangement(values, ambient);
}

std::vector<std::pair<Arrangement, Arrangement>> all_edges(const GraphSpec& spec) {
  std::vector<std::pair<Arrangement, Arrangement>> edges;
  for_each_vertex(spec, [&](const Arrangement& u) {
    const auto ru = rank(u);
    for_each_neighbor(spec, u, [&](const Arrangement& v) {
      if (ru < rank(v)) edges.emplace_back(u, v);
    });
  });
  return edges;
}

}  // namespace pancyclic
