#include "prelieder/spaces.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace prelieder {

long binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

int permutation_sign(std::span<const int> mapping) {
  int inversions = 0;
  for (std::size_t i = 0; i < mapping.size(); ++i)
    for (std::size_t j = i + 1; j < mapping.size(); ++j)
      if (mapping[i] > mapping[j]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

namespace {

void fill_blocks(std::span<const int> blocks, std::size_t block, std::vector<int>& remaining,
                 std::vector<int>& prefix, std::vector<SignedPermutation>& out) {
  if (block == blocks.size()) {
    out.push_back({prefix, permutation_sign(prefix)});
    return;
  }
  const int size = blocks[block];
  const int avail = static_cast<int>(remaining.size());
  for (const auto& pick : combinations(avail, size)) {
    std::vector<int> rest;
    std::vector<bool> taken(static_cast<std::size_t>(avail), false);
    for (int p : pick) {
      prefix.push_back(remaining[static_cast<std::size_t>(p)]);
      taken[static_cast<std::size_t>(p)] = true;
    }
    for (int i = 0; i < avail; ++i)
      if (!taken[static_cast<std::size_t>(i)]) rest.push_back(remaining[static_cast<std::size_t>(i)]);
    fill_blocks(blocks, block + 1, rest, prefix, out);
    prefix.resize(prefix.size() - pick.size());
  }
}

}  // namespace

std::vector<SignedPermutation> unshuffles(std::span<const int> block_sizes) {
  int n = 0;
  for (int b : block_sizes) {
    if (b < 0) throw std::invalid_argument("unshuffles: negative block size");
    n += b;
  }
  std::vector<int> remaining(static_cast<std::size_t>(n));
  std::iota(remaining.begin(), remaining.end(), 0);
  std::vector<int> prefix;
  std::vector<SignedPermutation> out;
  fill_blocks(block_sizes, 0, remaining, prefix, out);
  return out;
}

std::vector<SignedPermutation> unshuffles(std::initializer_list<int> block_sizes) {
  return unshuffles(std::span<const int>(block_sizes.begin(), block_sizes.size()));
}

int koszul_sign(const SignedPermutation& perm, std::span<const int> degrees) {
  if (degrees.size() != perm.mapping.size()) throw std::invalid_argument("koszul_sign: degree count mismatch");
  int sign = 1;
  const auto& m = perm.mapping;
  for (std::size_t a = 0; a < m.size(); ++a)
    for (std::size_t b = a + 1; b < m.size(); ++b)
      if (m[a] > m[b] && (degrees[static_cast<std::size_t>(m[a])] * degrees[static_cast<std::size_t>(m[b])]) % 2 != 0)
        sign = -sign;
  return sign;
}

std::optional<std::pair<std::vector<int>, int>> normalize_wedge(std::vector<int> tuple) {
  int sign = 1;
  // insertion sort, counting transpositions
  for (std::size_t i = 1; i < tuple.size(); ++i) {
    for (std::size_t j = i; j > 0 && tuple[j - 1] >= tuple[j]; --j) {
      if (tuple[j - 1] == tuple[j]) return std::nullopt;
      std::swap(tuple[j - 1], tuple[j]);
      sign = -sign;
    }
  }
  return std::make_pair(std::move(tuple), sign);
}

std::vector<std::vector<int>> combinations(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> c(static_cast<std::size_t>(k));
  std::iota(c.begin(), c.end(), 0);
  while (true) {
    out.push_back(c);
    int i = k - 1;
    while (i >= 0 && c[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++c[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

std::size_t combination_rank(std::span<const int> combo, int n) {
  const int k = static_cast<int>(combo.size());
  std::size_t r = 0;
  int prev = -1;
  for (int i = 0; i < k; ++i) {
    for (int j = prev + 1; j < combo[static_cast<std::size_t>(i)]; ++j)
      r += static_cast<std::size_t>(binomial(n - j - 1, k - i - 1));
    prev = combo[static_cast<std::size_t>(i)];
  }
  return r;
}

std::vector<MixedIndex> enumerate_basis(const Shape& shape, const Dims& dims) {
  std::vector<MixedIndex> out;
  const auto gs = combinations(dims.g, shape.g_wedge);
  const auto vs = combinations(dims.v, shape.v_wedge);
  const int tails = dims.of(shape.tail);
  out.reserve(gs.size() * vs.size() * static_cast<std::size_t>(std::max(tails, 0)));
  for (const auto& g : gs)
    for (const auto& v : vs)
      for (int t = 0; t < tails; ++t) out.push_back({g, v, shape.tail, t});
  return out;
}

std::size_t basis_size(const Shape& shape, const Dims& dims) {
  return static_cast<std::size_t>(binomial(dims.g, shape.g_wedge) * binomial(dims.v, shape.v_wedge) *
                                  dims.of(shape.tail));
}

std::size_t basis_position(std::span<const int> g_wedge, std::span<const int> v_wedge, int tail,
                           const Shape& shape, const Dims& dims) {
  const auto nv = static_cast<std::size_t>(binomial(dims.v, shape.v_wedge));
  const auto nt = static_cast<std::size_t>(dims.of(shape.tail));
  return (combination_rank(g_wedge, dims.g) * nv + combination_rank(v_wedge, dims.v)) * nt +
         static_cast<std::size_t>(tail);
}

}  // namespace prelieder
