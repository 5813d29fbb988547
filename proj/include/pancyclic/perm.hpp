#pragma once

// Permutations and ordered k-tuples over [n].
//
// Everything is 0-based internally; the text helpers in io.hpp convert to
// the 1-based one-line notation used on the command line and in JSON.
// Composition follows (p * q)(i) = p(q(i)): q is applied first.

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace pancyclic {

inline constexpr int kMaxPoints = 16;

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad input from the caller: malformed tuples, non-edges, out-of-range lengths.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class LengthOutOfRange : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// A documented precondition (degree bound, theorem hypothesis) does not hold.
class PreconditionViolated : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// A construction step that should always succeed did not. Indicates a bug.
class ConstructionFailed : public Error {
 public:
  using Error::Error;
};

/// Ordered tuple of pairwise distinct values drawn from {0, ..., ambient-1}.
class Arrangement {
 public:
  Arrangement() = default;
  Arrangement(std::span<const int> values, int ambient);
  Arrangement(std::initializer_list<int> values, int ambient)
      : Arrangement(std::span<const int>(values.begin(), values.size()), ambient) {}

  int size() const { return size_; }
  int ambient() const { return ambient_; }
  int operator[](int position) const { return values_[static_cast<std::size_t>(position)]; }

  std::vector<int> to_vector() const;
  /// Bit v is set iff value v occurs.
  std::uint32_t value_mask() const { return mask_; }
  bool contains(int value) const { return (mask_ >> value) & 1U; }
  /// Position holding value, or -1.
  int position_of(int value) const;

  friend bool operator==(const Arrangement& a, const Arrangement& b) {
    return a.size_ == b.size_ && a.ambient_ == b.ambient_ && a.values_ == b.values_;
  }
  friend std::strong_ordering operator<=>(const Arrangement& a, const Arrangement& b);

 private:
  std::array<std::uint8_t, kMaxPoints> values_{};
  std::uint32_t mask_ = 0;
  std::uint8_t size_ = 0;
  std::uint8_t ambient_ = 0;
};

/// Bijection of {0, ..., n-1}; position i holds the image of i.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::span<const int> values);
  Permutation(std::initializer_list<int> values)
      : Permutation(std::span<const int>(values.begin(), values.size())) {}
  explicit Permutation(const Arrangement& word);

  static Permutation identity(int n);
  /// Swaps a and b, fixes everything else.
  static Permutation transposition(int n, int a, int b);

  int size() const { return word_.size(); }
  int operator[](int i) const { return word_[i]; }
  const Arrangement& arrangement() const { return word_; }
  std::vector<int> to_vector() const { return word_.to_vector(); }

  Permutation inverse() const;
  int fixed_point_count() const;
  bool is_derangement() const { return fixed_point_count() == 0; }
  /// True when the permutation is a single cycle through all n points.
  bool is_single_cycle() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) { return a.word_ <=> b.word_; }

 private:
  Arrangement word_;
};

/// A permutation consisting of one n-cycle. Its nonzero powers are derangements.
class CyclicPermutation {
 public:
  explicit CyclicPermutation(Permutation p);
  /// i -> i+1 mod n.
  static CyclicPermutation canonical(int n);

  const Permutation& permutation() const { return perm_; }
  int size() const { return perm_.size(); }
  /// perm^i, with i reduced mod n.
  Permutation power(int i) const;

 private:
  Permutation perm_;
};

/// (p * q)(i) = p(q(i)).
Permutation compose(const Permutation& p, const Permutation& q);
Permutation inverse(const Permutation& p);
Permutation power(const CyclicPermutation& s, int i);

/// Number of positions where a and b agree.
int delta(const Arrangement& a, const Arrangement& b);
int delta(const Permutation& a, const Permutation& b);
/// |{a} ∩ {b}| as sets of entries.
int common_values(const Arrangement& a, const Arrangement& b);
int fixed_point_count(const Permutation& p);

/// Left action on values: gamma * x. Preserves delta between any two tuples.
Permutation relabel(const Permutation& gamma, const Permutation& x);
Arrangement relabel(const Permutation& gamma, const Arrangement& x);
/// Right action on positions: (x * rho)(i) = x(rho(i)).
Arrangement permute_positions(const Arrangement& x, const Permutation& rho);
Permutation permute_positions(const Permutation& x, const Permutation& rho);

/// {tau, s tau, s^2 tau, ...}: left multiplication by powers of a cyclic s on [n].
std::vector<Permutation> coset(const Permutation& tau, const CyclicPermutation& s);
/// {tau, tau s, tau s^2, ...}: s is a k-cycle acting on the k positions of tau.
std::vector<Arrangement> coset(const Arrangement& tau, const CyclicPermutation& s);

/// Exact |D_n| by D_n = (n-1)(D_{n-1} + D_{n-2}). Throws std::overflow_error past n = 20.
std::uint64_t derangement_count(int n);
std::uint64_t factorial(int n);
/// n! / (n-k)!
std::uint64_t falling_factorial(int n, int k);
std::uint64_t binomial(int n, int k);

/// Calls fn on every single n-cycle in lexicographic order of the one-line
/// form until fn returns true. Returns whether fn accepted one.
bool for_each_cyclic(int n, const std::function<bool(const CyclicPermutation&)>& fn);

}  // namespace pancyclic

template <>
struct std::hash<pancyclic::Arrangement> {
  std::size_t operator()(const pancyclic::Arrangement& a) const noexcept;
};

template <>
struct std::hash<pancyclic::Permutation> {
  std::size_t operator()(const pancyclic::Permutation& p) const noexcept {
    return std::hash<pancyclic::Arrangement>{}(p.arrangement());
  }
};
