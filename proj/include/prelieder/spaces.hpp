#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace prelieder {

/// Which summand of g (+) V a basis vector or slot belongs to.
enum class Factor { G, V };

struct Dims {
  int g = 0;
  int v = 0;
  int total() const { return g + v; }
  int of(Factor f) const { return f == Factor::G ? g : v; }
  friend bool operator==(const Dims&, const Dims&) = default;
};

/// Index into /\^k W (x) W for a single space W: strictly increasing wedge
/// plus an unconstrained tail slot.
struct WedgeIndex {
  std::vector<int> wedge;
  int tail = 0;
  friend auto operator<=>(const WedgeIndex&, const WedgeIndex&) = default;
};

/// Index into /\^a g (x) /\^b V (x) (g or V). Indices are local to their
/// factor (0-based within g, resp. within V).
struct MixedIndex {
  std::vector<int> g_wedge;
  std::vector<int> v_wedge;
  Factor tail_factor = Factor::G;
  int tail = 0;
  friend bool operator==(const MixedIndex&, const MixedIndex&) = default;
};

/// Domain shape /\^a g (x) /\^b V (x) tail.
struct Shape {
  int g_wedge = 0;
  int v_wedge = 0;
  Factor tail = Factor::G;
  friend bool operator==(const Shape&, const Shape&) = default;
};

/// mapping[i] = sigma(i+1) - 1, i.e. the argument placed at position i.
struct SignedPermutation {
  std::vector<int> mapping;
  int sign = 1;
};

long binomial(int n, int k);

/// Signature of the sequence (mapping[0], ..., mapping[n-1]).
int permutation_sign(std::span<const int> mapping);

/// All permutations increasing inside each consecutive block, with their
/// ungraded signatures.
std::vector<SignedPermutation> unshuffles(std::span<const int> block_sizes);
std::vector<SignedPermutation> unshuffles(std::initializer_list<int> block_sizes);

/// Koszul sign of rearranging x_1..x_n into x_{sigma(1)}..x_{sigma(n)} in the
/// graded-symmetric algebra: (-1)^{d_i d_j} per inverted pair.
int koszul_sign(const SignedPermutation& perm, std::span<const int> degrees);

/// Sorts a wedge tuple. Nothing when an index repeats (alternating => 0),
/// otherwise the sorted tuple and the signature of the sorting permutation.
std::optional<std::pair<std::vector<int>, int>> normalize_wedge(std::vector<int> tuple);

/// Strictly increasing k-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<int>> combinations(int n, int k);
std::size_t combination_rank(std::span<const int> combo, int n);

/// Lexicographic on (g_wedge, v_wedge, tail).
std::vector<MixedIndex> enumerate_basis(const Shape& shape, const Dims& dims);
std::size_t basis_size(const Shape& shape, const Dims& dims);
/// Position of a canonical index inside enumerate_basis(shape, dims).
std::size_t basis_position(std::span<const int> g_wedge, std::span<const int> v_wedge, int tail,
                           const Shape& shape, const Dims& dims);

}  // namespace prelieder
