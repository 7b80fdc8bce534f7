#pragma once

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "kperm/bigint.hpp"

namespace kperm {

/// Default upper bound on n for anything that builds sphere rows explicitly.
inline constexpr std::uint32_t kDefaultTableCap = 2000;

/// Largest Kendall weight in S_n, n(n-1)/2.
constexpr std::uint64_t max_inversions(std::uint64_t n) { return n * (n - 1) / 2; }

/// Exact Mahonian triangle: row m holds S_K^m(0..m(m-1)/2) for 2 <= m <= max_n.
///
/// Immutable once built; concurrent reads are safe.
class SphereTable {
 public:
  std::uint32_t max_n() const noexcept { return max_n_; }

  /// Row m, 2 <= m <= max_n.
  std::span<const BigInt> row(std::uint32_t m) const;

 private:
  friend SphereTable build_table(std::uint32_t max_n, std::uint32_t cap);

  std::uint32_t max_n_ = 0;
  std::vector<std::vector<BigInt>> rows_;  // rows_[m - 2]
};

/// Fills rows bottom-up with S^m(i) = sum_{j=max(0,i-(m-1))}^{i} S^{m-1}(j),
/// seeded by S_2 = (1,1). Requires 2 <= max_n <= cap.
SphereTable build_table(std::uint32_t max_n, std::uint32_t cap = kDefaultTableCap);

/// S^n(0..min(max_i, n(n-1)/2)) computed with the same recurrence, keeping only
/// one previous row and only the first max_i+1 entries of it. Costs O(n * max_i)
/// additions, so small radii are cheap even for large n.
std::vector<BigInt> sphere_row(std::uint32_t n,
                               std::uint64_t max_i = std::numeric_limits<std::uint64_t>::max(),
                               std::uint32_t cap = kDefaultTableCap);

/// S^n(i); zero for i < 0 or i > n(n-1)/2. Requires 2 <= n <= table.max_n().
BigInt sphere_size(const SphereTable& table, std::uint32_t n, std::int64_t i);

/// Pivot of the piecewise recursions: the unique t >= 4 with
/// (t-1 choose 2) < i <= (t choose 2). Requires i >= 4.
std::uint32_t recursion_pivot(std::int64_t i);

/// Piecewise recursion for 4 <= n, 4 <= i <= n-1:
///   S^t(C(t,2)-i) + sum_{l=t}^{i-1} sum_{j=i-l}^{i-1} S^l(j)
///                 + sum_{l=i}^{n-1} sum_{j=0}^{i-1} S^l(j).
/// Cross-check path only; reads lower rows from `table`.
BigInt sphere_size_below_n(const SphereTable& table, std::uint32_t n, std::int64_t i);

/// Piecewise recursion for 5 <= n, n <= i <= floor(C(n,2)/2):
///   S^t(C(t,2)-i) + sum_{l=t}^{i-1} sum_{j=i-l}^{i-1} S^l(j)
///                 - sum_{l=n}^{i-1} sum_{j=i-l}^{i-1} S^l(j).
/// Needs rows up to max(n, i-1) in `table`.
BigInt sphere_size_from_n(const SphereTable& table, std::uint32_t n, std::int64_t i);

/// Smallest n for which the closed form of S^n(i) is stated to hold.
std::uint32_t sphere_closed_form_min_n(int i);
/// Smallest n for which the closed form of B^n(r) is stated to hold.
std::uint32_t ball_closed_form_min_n(int r);

/// Polynomial closed forms of S^n(i) for 0 <= i <= 5.
BigInt sphere_closed_form(std::uint32_t n, int i);

struct BallSize {
  std::uint32_t n = 0;
  std::uint64_t r = 0;
  BigInt value;
};

/// B^n(r) = sum_{l<=r} S^n(l), saturating at n! once r >= n(n-1)/2.
BallSize ball_size(const SphereTable& table, std::uint32_t n, std::uint64_t r);

/// Polynomial closed forms of B^n(r) for 0 <= r <= 5.
BigInt ball_closed_form(std::uint32_t n, int r);

/// B^n(r) by the truncated recurrence only (no closed forms). n <= cap.
BigInt ball_size_dp(std::uint32_t n, std::uint64_t r, std::uint32_t cap = kDefaultTableCap);

/// B^n(r) for any n >= 2: closed form when r <= 5 and n meets the formula's
/// threshold (no cap applies), otherwise the truncated recurrence with n <= cap.
BigInt ball_size_for(std::uint32_t n, std::uint64_t r, std::uint32_t cap = kDefaultTableCap);

/// Writes "n\ti\tsphere\tball" followed by one line per (n, i), 2 <= n <= max_n,
/// 0 <= i <= min(C(n,2), max_r).
void write_table_tsv(std::ostream& out, const SphereTable& table,
                     std::optional<std::uint64_t> max_r = std::nullopt);

}  // namespace kperm
