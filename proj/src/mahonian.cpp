#include "kperm/mahonian.hpp"

#include <algorithm>
#include <ostream>
#include <string>

#include "kperm/error.hpp"

namespace kperm {

namespace {

void require_cap(std::uint32_t n, std::uint32_t cap) {
  if (n > cap) {
    throw ValidationError("n = " + std::to_string(n) + " exceeds table cap " +
                          std::to_string(cap));
  }
}

// One step of the unified recurrence: row m from row m-1, truncated to
// indices <= max_i. `prev` may itself be truncated at max_i.
std::vector<BigInt> next_row(std::span<const BigInt> prev, std::uint32_t m, std::uint64_t max_i) {
  const std::uint64_t len = std::min(max_i, max_inversions(m)) + 1;
  std::vector<BigInt> prefix(prev.size() + 1);
  for (std::size_t j = 0; j < prev.size(); ++j) prefix[j + 1] = prefix[j] + prev[j];

  std::vector<BigInt> row(len);
  for (std::uint64_t i = 0; i < len; ++i) {
    const std::uint64_t lo = i >= m - 1 ? i - (m - 1) : 0;
    const std::uint64_t hi = std::min<std::uint64_t>(i, prev.size() - 1);
    if (lo <= hi) row[i] = prefix[hi + 1] - prefix[lo];
  }
  return row;
}

std::vector<BigInt> seed_row(std::uint64_t max_i) {
  std::vector<BigInt> row{1, 1};
  if (max_i == 0) row.resize(1);
  return row;
}

// sum_{j=from}^{to} S^l(j), with the empty-sum convention for to < from.
BigInt block_sum(const SphereTable& table, std::uint32_t l, std::int64_t from, std::int64_t to) {
  BigInt total = 0;
  for (std::int64_t j = from; j <= to; ++j) total += sphere_size(table, l, j);
  return total;
}

void require_rows(const SphereTable& table, std::int64_t needed) {
  if (needed > static_cast<std::int64_t>(table.max_n())) {
    throw ValidationError("table has rows up to " + std::to_string(table.max_n()) + ", need " +
                          std::to_string(needed));
  }
}

}  // namespace

std::span<const BigInt> SphereTable::row(std::uint32_t m) const {
  if (m < 2 || m > max_n_) {
    throw ValidationError("row " + std::to_string(m) + " outside table range 2.." +
                          std::to_string(max_n_));
  }
  return rows_[m - 2];
}

SphereTable build_table(std::uint32_t max_n, std::uint32_t cap) {
  if (max_n < 2) throw ValidationError("table needs max_n >= 2");
  require_cap(max_n, cap);
  constexpr auto kAll = std::numeric_limits<std::uint64_t>::max();
  SphereTable table;
  table.max_n_ = max_n;
  table.rows_.reserve(max_n - 1);
  table.rows_.push_back(seed_row(kAll));
  for (std::uint32_t m = 3; m <= max_n; ++m) {
    table.rows_.push_back(next_row(table.rows_.back(), m, kAll));
  }
  return table;
}

std::vector<BigInt> sphere_row(std::uint32_t n, std::uint64_t max_i, std::uint32_t cap) {
  if (n < 2) throw ValidationError("sphere rows need n >= 2");
  require_cap(n, cap);
  std::vector<BigInt> row = seed_row(max_i);
  for (std::uint32_t m = 3; m <= n; ++m) row = next_row(row, m, max_i);
  return row;
}

BigInt sphere_size(const SphereTable& table, std::uint32_t n, std::int64_t i) {
  const auto row = table.row(n);
  if (i < 0 || static_cast<std::uint64_t>(i) >= row.size()) return 0;
  return row[static_cast<std::size_t>(i)];
}

std::uint32_t recursion_pivot(std::int64_t i) {
  if (i < 4) throw ValidationError("pivot is defined for i >= 4");
  std::uint32_t t = 4;
  while (static_cast<std::int64_t>(max_inversions(t)) < i) ++t;
  return t;
}

BigInt sphere_size_below_n(const SphereTable& table, std::uint32_t n, std::int64_t i) {
  if (n < 4 || i < 4 || i > static_cast<std::int64_t>(n) - 1) {
    throw ValidationError("short-range recursion needs 4 <= n and 4 <= i <= n-1");
  }
  require_rows(table, n);
  const std::uint32_t t = recursion_pivot(i);
  BigInt value = sphere_size(table, t, static_cast<std::int64_t>(max_inversions(t)) - i);
  for (std::int64_t l = t; l <= i - 1; ++l) {
    value += block_sum(table, static_cast<std::uint32_t>(l), i - l, i - 1);
  }
  for (std::int64_t l = i; l <= static_cast<std::int64_t>(n) - 1; ++l) {
    value += block_sum(table, static_cast<std::uint32_t>(l), 0, i - 1);
  }
  return value;
}

BigInt sphere_size_from_n(const SphereTable& table, std::uint32_t n, std::int64_t i) {
  if (n < 5 || i < static_cast<std::int64_t>(n) ||
      i > static_cast<std::int64_t>(max_inversions(n) / 2)) {
    throw ValidationError("long-range recursion needs 5 <= n and n <= i <= floor(C(n,2)/2)");
  }
  require_rows(table, std::max<std::int64_t>(n, i - 1));
  const std::uint32_t t = recursion_pivot(i);
  BigInt value = sphere_size(table, t, static_cast<std::int64_t>(max_inversions(t)) - i);
  for (std::int64_t l = t; l <= i - 1; ++l) {
    value += block_sum(table, static_cast<std::uint32_t>(l), i - l, i - 1);
  }
  // Empty when i == n.
  for (std::int64_t l = n; l <= i - 1; ++l) {
    value -= block_sum(table, static_cast<std::uint32_t>(l), i - l, i - 1);
  }
  return value;
}

std::uint32_t sphere_closed_form_min_n(int i) {
  switch (i) {
    case 0:
    case 1:
      return 2;
    case 2:
    case 3:
      return 3;
    case 4:
      return 4;
    case 5:
      return 5;
    default:
      throw ValidationError("no closed form for sphere radius " + std::to_string(i));
  }
}

std::uint32_t ball_closed_form_min_n(int r) {
  switch (r) {
    case 0:
    case 1:
    case 2:
      return 2;
    case 3:
      return 3;
    case 4:
      return 4;
    case 5:
      return 5;
    default:
      throw ValidationError("no closed form for ball radius " + std::to_string(r));
  }
}

BigInt sphere_closed_form(std::uint32_t n, int i) {
  const std::uint32_t min_n = sphere_closed_form_min_n(i);
  if (n < min_n) {
    throw ValidationError("closed form of S^n(" + std::to_string(i) + ") needs n >= " +
                          std::to_string(min_n));
  }
  const BigInt x = n;
  switch (i) {
    case 0:
      return 1;
    case 1:
      return x - 1;
    case 2:
      return exact_div(x * (x - 1), 2) - 1;
    case 3:
      return exact_div(x * x * x - 7 * x, 6);
    case 4:
      return exact_div(x * (x + 1) * (x * x + x - 14), 24);
    default:
      return exact_div((x - 1) * (x * x * x * x + 6 * x * x * x - 9 * x * x - 74 * x - 120), 120);
  }
}

BallSize ball_size(const SphereTable& table, std::uint32_t n, std::uint64_t r) {
  const auto row = table.row(n);
  const std::uint64_t last = std::min<std::uint64_t>(r, row.size() - 1);
  BallSize ball{n, r, 0};
  for (std::uint64_t l = 0; l <= last; ++l) ball.value += row[l];
  return ball;
}

BigInt ball_closed_form(std::uint32_t n, int r) {
  const std::uint32_t min_n = ball_closed_form_min_n(r);
  if (n < min_n) {
    throw ValidationError("closed form of B^n(" + std::to_string(r) + ") needs n >= " +
                          std::to_string(min_n));
  }
  const BigInt x = n;
  switch (r) {
    case 0:
      return 1;
    case 1:
      return x;
    case 2:
      return exact_div((x + 2) * (x - 1), 2);
    case 3:
      return exact_div((x + 1) * (x * x + 2 * x - 6), 6);
    case 4:
      return exact_div((x + 2) * (x + 1) * (x * x + 3 * x - 12), 24);
    default:
      return exact_div((x + 7) * x * (x * x * x + 3 * x * x - 6 * x - 28), 120);
  }
}

BigInt ball_size_dp(std::uint32_t n, std::uint64_t r, std::uint32_t cap) {
  BigInt total = 0;
  for (const auto& s : sphere_row(n, r, cap)) total += s;
  return total;
}

BigInt ball_size_for(std::uint32_t n, std::uint64_t r, std::uint32_t cap) {
  if (n < 2) throw ValidationError("ball sizes need n >= 2");
  if (r <= 5 && n >= ball_closed_form_min_n(static_cast<int>(r))) {
    return ball_closed_form(n, static_cast<int>(r));
  }
  return ball_size_dp(n, r, cap);
}

void write_table_tsv(std::ostream& out, const SphereTable& table,
                     std::optional<std::uint64_t> max_r) {
  out << "n\ti\tsphere\tball\n";
  for (std::uint32_t n = 2; n <= table.max_n(); ++n) {
    const auto row = table.row(n);
    std::uint64_t last = row.size() - 1;
    if (max_r) last = std::min(last, *max_r);
    BigInt ball = 0;
    for (std::uint64_t i = 0; i <= last; ++i) {
      ball += row[i];
      out << n << '\t' << i << '\t' << to_decimal(row[i]) << '\t' << to_decimal(ball) << '\n';
    }
  }
}

}  // namespace kperm
