#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <thread>
#include <vector>

namespace oddfactor {

/// Options shared by every exhaustive subset enumeration.
struct EnumerationOptions {
  static constexpr int kDefaultCap = 26;
  static constexpr int kHardCap = 62;

  int cap = kDefaultCap;
  int jobs = 1;
  /// When false, every subset is evaluated; used to cross-check pruning.
  bool prune = true;
};

/// A ratio num/den (den > 0) attained at `mask`.
struct SubsetRatio {
  std::int64_t num = 0;
  std::int64_t den = 1;
  std::uint64_t mask = 0;
};

namespace detail {

inline std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

/// The k-subset of {0..n-1} with the given rank in ascending-integer order.
inline std::uint64_t unrank_subset(int n, int k, std::uint64_t rank) {
  std::uint64_t mask = 0;
  for (int i = k; i >= 1; --i) {
    int c = i - 1;
    while (c + 1 < n && binomial(c + 1, i) <= rank) ++c;
    rank -= binomial(c, i);
    mask |= std::uint64_t{1} << c;
  }
  return mask;
}

/// Next larger integer with the same popcount (Gosper's hack); mask != 0.
inline std::uint64_t next_subset(std::uint64_t mask) {
  const std::uint64_t lowest = mask & (~mask + 1);
  const std::uint64_t ripple = mask + lowest;
  return ripple | (((mask ^ ripple) >> 2) / lowest);
}

inline bool ratio_less(const SubsetRatio& a, const SubsetRatio& b) {
  const __int128 lhs = static_cast<__int128>(a.num) * b.den;
  const __int128 rhs = static_cast<__int128>(b.num) * a.den;
  return lhs < rhs || (lhs == rhs && a.mask < b.mask);
}

/// Splits the k-subsets of {0..n-1} into contiguous rank ranges and calls
/// visit(chunk_index, first_mask, count) for each, possibly concurrently.
template <class Visit>
void for_each_chunk(int n, int k, int jobs, Visit&& visit) {
  const std::uint64_t total = binomial(n, k);
  constexpr std::uint64_t kMinChunk = 2048;
  std::uint64_t chunks = std::max<std::uint64_t>(1, std::min<std::uint64_t>(static_cast<std::uint64_t>(std::max(jobs, 1)), total / kMinChunk));
  if (chunks == 1) {
    visit(0, k == 0 ? std::uint64_t{0} : unrank_subset(n, k, 0), total);
    return;
  }
  std::vector<std::jthread> workers;
  workers.reserve(chunks);
  for (std::uint64_t c = 0; c < chunks; ++c) {
    const std::uint64_t begin = total * c / chunks;
    const std::uint64_t end = total * (c + 1) / chunks;
    workers.emplace_back([&visit, n, k, c, begin, end] { visit(c, unrank_subset(n, k, begin), end - begin); });
  }
}

}  // namespace detail

/// Minimizes eval(mask) -> optional<SubsetRatio> over all subsets of
/// {0..n-1}, cardinality layer by layer. Ties go to the smaller cardinality,
/// then the smaller encoding. After layer k, the search stops when
/// stop(k + 1, best) reports that no larger subset can do strictly better.
template <class Eval, class Stop>
std::optional<SubsetRatio> minimize_over_subsets(int n, const EnumerationOptions& options, Eval&& eval, Stop&& stop) {
  std::optional<SubsetRatio> best;
  for (int k = 0; k <= n; ++k) {
    if (options.prune && best && stop(k, *best)) break;
    std::vector<std::optional<SubsetRatio>> partial(static_cast<std::size_t>(std::max(options.jobs, 1)));
    detail::for_each_chunk(n, k, options.jobs, [&](std::uint64_t chunk, std::uint64_t mask, std::uint64_t count) {
      std::optional<SubsetRatio> local;
      for (std::uint64_t i = 0; i < count; ++i) {
        if (auto r = eval(mask)) {
          if (!local || detail::ratio_less(*r, *local)) local = r;
        }
        if (i + 1 < count) mask = detail::next_subset(mask);
      }
      partial[chunk] = local;
    });
    std::optional<SubsetRatio> layer_best;
    for (const auto& r : partial) {
      if (r && (!layer_best || detail::ratio_less(*r, *layer_best))) layer_best = r;
    }
    // Earlier layers win ties, so only a strictly smaller ratio replaces best.
    if (layer_best && (!best || static_cast<__int128>(layer_best->num) * best->den <
                                    static_cast<__int128>(best->num) * layer_best->den)) {
      best = layer_best;
    }
  }
  return best;
}

/// Smallest subset (cardinality, then encoding) of size <= max_size
/// satisfying pred.
template <class Pred>
std::optional<std::uint64_t> first_subset(int n, int max_size, const EnumerationOptions& options, Pred&& pred) {
  for (int k = 0; k <= std::min(n, max_size); ++k) {
    std::vector<std::optional<std::uint64_t>> partial(static_cast<std::size_t>(std::max(options.jobs, 1)));
    detail::for_each_chunk(n, k, options.jobs, [&](std::uint64_t chunk, std::uint64_t mask, std::uint64_t count) {
      for (std::uint64_t i = 0; i < count; ++i) {
        if (pred(mask)) {
          partial[chunk] = mask;
          return;
        }
        if (i + 1 < count) mask = detail::next_subset(mask);
      }
    });
    for (const auto& r : partial) {
      if (r) return r;
    }
  }
  return std::nullopt;
}

}  // namespace oddfactor
