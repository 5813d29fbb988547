#pragma once

// Implicit Cayley-type graphs on permutations and k-tuples.
//
// Vertices are never stored; adjacency is decided from the tuples
// themselves. Every vertex, whatever the family, is an Arrangement:
// permutations of [n] are arrangements of length n over n points.

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pancyclic/perm.hpp"

namespace pancyclic {

class GraphSpec {
 public:
  enum class Family {
    Derangement,           // S_n, u ~ v iff they differ in every position
    FixedK,                // S_n, u ~ v iff they agree in exactly k positions
    Arrangement,           // k-tuples over [n], u ~ v iff they differ in every coordinate
    ComplementNonTrivial,  // S_n, u ~ v iff u != v and they agree somewhere
    GTilde1,               // (k-1)-tuples over [n-1], u ~ v iff different sets or agreeing somewhere
  };

  static GraphSpec derangement(int n);
  static GraphSpec fixed_k(int n, int k);
  static GraphSpec arrangement(int n, int k);
  static GraphSpec complement_nontrivial(int n);
  static GraphSpec gtilde1(int n, int k);

  /// Parses "gamma:n", "gammak:n:k", "arr:n:k", "compl:n", "gtilde:n:k".
  static GraphSpec parse(std::string_view text);
  std::string to_string() const;

  Family family() const { return family_; }
  int n() const { return n_; }
  int k() const { return k_; }
  /// Length of every vertex tuple.
  int tuple_length() const;
  /// Number of symbols the tuples are drawn from.
  int ambient() const;

  friend bool operator==(const GraphSpec&, const GraphSpec&) = default;

 private:
  GraphSpec(Family family, int n, int k) : family_(family), n_(n), k_(k) {}

  Family family_;
  int n_;
  int k_;
};

/// Ordered vertex sequence certifying one cycle.
struct CycleWitness {
  GraphSpec spec;
  std::vector<Arrangement> vertices;

  int length() const { return static_cast<int>(vertices.size()); }
};

std::uint64_t order(const GraphSpec& spec);
/// Every family here is vertex-transitive, hence regular.
std::uint64_t degree(const GraphSpec& spec);

/// True iff v has the tuple shape the spec expects.
bool is_vertex(const GraphSpec& spec, const Arrangement& v);
/// Throws InvalidArgument on shape mismatch.
bool is_adjacent(const GraphSpec& spec, const Arrangement& u, const Arrangement& v);

void for_each_neighbor(const GraphSpec& spec, const Arrangement& u,
                       const std::function<void(const Arrangement&)>& fn);
std::vector<Arrangement> neighbors(const GraphSpec& spec, const Arrangement& u);
/// All vertices in lexicographic order (index = rank).
void for_each_vertex(const GraphSpec& spec, const std::function<void(const Arrangement&)>& fn);

/// Lexicographic rank among all length-k tuples over the ambient set.
std::uint64_t rank(const Arrangement& v);
Arrangement unrank(std::uint64_t index, int length, int ambient);

/// Undirected edges {u, v} with rank(u) < rank(v), in lexicographic order of (u, v).
std::vector<std::pair<Arrangement, Arrangement>> all_edges(const GraphSpec& spec);

}  // namespace pancyclic
