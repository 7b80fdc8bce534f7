#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kperm/bigint.hpp"
#include "kperm/permutation.hpp"

namespace kperm {

inline constexpr std::uint32_t kMaxHistogramSize = 10;
inline constexpr std::uint32_t kMaxCensusSize = 8;
inline constexpr std::uint32_t kMaxSearchSize = 6;
inline constexpr std::uint64_t kDefaultSearchBudget = 50'000'000;

/// counts[i] = number of permutations in S_n with exactly i inversions,
/// obtained by enumerating S_n.
struct InversionHistogram {
  std::uint32_t n = 0;
  std::vector<std::uint64_t> counts;
};

InversionHistogram inversion_histogram(std::uint32_t n);

/// Number of sigma in S_n with d_K(sigma, center) <= r, by enumeration. n <= 8.
BigInt ball_census(std::uint32_t n, std::uint64_t r, const Permutation& center);

/// True iff every pair of distinct codewords is at Kendall distance >= d.
bool verify_min_distance(std::span<const Permutation> code, std::uint64_t d);

enum class SearchOutcome { Found, ExhaustedNone, AbortedBudget };

std::string_view to_string(SearchOutcome outcome);

struct SearchOptions {
  std::uint64_t node_budget = kDefaultSearchBudget;
  /// Place epsilon_n in the code before searching. Sound because relabeling
  /// values preserves d_K and maps any codeword to the identity.
  bool fix_identity = true;
};

struct CodeSearchResult {
  std::uint32_t n = 0;
  std::uint64_t t = 0;
  SearchOutcome outcome = SearchOutcome::ExhaustedNone;
  std::vector<Permutation> code;  // filled for Found
  std::uint64_t nodes_explored = 0;
  std::string note;
};

/// Exhaustive exact-cover search for a perfect t-error-correcting code in S_n,
/// 2 <= n <= 6: ground set S_n, one candidate block per center (its radius-t
/// ball). Dancing links with fail-first column choice, lowest index on ties.
CodeSearchResult search_perfect_code(std::uint32_t n, std::uint64_t t,
                                     const SearchOptions& options = {});

}  // namespace kperm
