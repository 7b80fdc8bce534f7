#include "kperm/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>

#include "kperm/error.hpp"

namespace kperm {

namespace {

void require_group_size(std::size_t n) {
  if (n == 0) throw ValidationError("permutation size must be at least 1");
  if (n > kMaxGroupSize) {
    throw ValidationError("permutation size " + std::to_string(n) + " exceeds limit " +
                          std::to_string(kMaxGroupSize));
  }
}

void require_same_size(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) {
    throw ValidationError("permutation size mismatch: " + std::to_string(a.size()) + " vs " +
                          std::to_string(b.size()));
  }
}

// Sorts `values[lo, hi)` and returns the number of inversions in it.
std::uint64_t sort_count(std::vector<int>& values, std::vector<int>& scratch, std::size_t lo,
                         std::size_t hi) {
  if (hi - lo < 2) return 0;
  const std::size_t mid = lo + (hi - lo) / 2;
  std::uint64_t count = sort_count(values, scratch, lo, mid) + sort_count(values, scratch, mid, hi);
  std::size_t i = lo, j = mid, k = lo;
  while (i < mid && j < hi) {
    if (values[j] < values[i]) {
      count += mid - i;
      scratch[k++] = values[j++];
    } else {
      scratch[k++] = values[i++];
    }
  }
  while (i < mid) scratch[k++] = values[i++];
  while (j < hi) scratch[k++] = values[j++];
  std::copy(scratch.begin() + lo, scratch.begin() + hi, values.begin() + lo);
  return count;
}

}  // namespace

Permutation::Permutation(std::vector<int> entries) : entries_(std::move(entries)) {
  const std::size_t n = entries_.size();
  require_group_size(n);
  std::vector<bool> seen(n + 1, false);
  for (int v : entries_) {
    if (v < 1 || static_cast<std::size_t>(v) > n || seen[v]) {
      throw ValidationError("not a permutation of {1,...," + std::to_string(n) + "}");
    }
    seen[v] = true;
  }
}

Permutation Permutation::parse(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.size() < 2 || text.front() != '[' || text.back() != ']') {
    throw ValidationError("permutation must be written as [a,b,...]");
  }
  text = text.substr(1, text.size() - 2);
  std::vector<int> values;
  while (true) {
    const auto comma = text.find(',');
    const auto token = trim(text.substr(0, comma));
    int v = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
      throw ValidationError("bad permutation entry '" + std::string(token) + "'");
    }
    values.push_back(v);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return Permutation(std::move(values));
}

std::string Permutation::to_string() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out << ',';
    out << entries_[i];
  }
  out << ']';
  return out.str();
}

Permutation identity(std::size_t n) {
  require_group_size(n);
  std::vector<int> e(n);
  std::iota(e.begin(), e.end(), 1);
  return Permutation(Permutation::Unchecked{}, std::move(e));
}

Permutation compose(const Permutation& pi, const Permutation& sigma) {
  require_same_size(pi, sigma);
  std::vector<int> r(pi.size());
  for (std::size_t i = 1; i <= pi.size(); ++i) r[i - 1] = sigma(pi(i));
  return Permutation(Permutation::Unchecked{}, std::move(r));
}

Permutation inverse(const Permutation& pi) {
  std::vector<int> r(pi.size());
  for (std::size_t i = 1; i <= pi.size(); ++i) r[pi(i) - 1] = static_cast<int>(i);
  return Permutation(Permutation::Unchecked{}, std::move(r));
}

Permutation reverse(const Permutation& pi) {
  std::vector<int> r(pi.entries().rbegin(), pi.entries().rend());
  return Permutation(Permutation::Unchecked{}, std::move(r));
}

std::uint64_t kendall_weight(const Permutation& pi) {
  std::vector<int> values(pi.entries().begin(), pi.entries().end());
  std::vector<int> scratch(values.size());
  return sort_count(values, scratch, 0, values.size());
}

std::uint64_t kendall_distance(const Permutation& sigma, const Permutation& pi) {
  require_same_size(sigma, pi);
  // k -> position of sigma(k) inside pi; its inversions are the discordant pairs.
  return kendall_weight(compose(sigma, inverse(pi)));
}

std::vector<Permutation> adjacent_neighbors(const Permutation& pi) {
  std::vector<Permutation> out;
  if (pi.size() < 2) return out;
  out.reserve(pi.size() - 1);
  for (std::size_t i = 0; i + 1 < pi.size(); ++i) {
    std::vector<int> e = pi.entries_;
    std::swap(e[i], e[i + 1]);
    out.push_back(Permutation(Permutation::Unchecked{}, std::move(e)));
  }
  return out;
}

PermutationStream::PermutationStream(std::size_t n)
    : current_(Permutation::Unchecked{}, {}) {
  if (n == 0) throw ValidationError("enumeration size must be at least 1");
  if (n > kMaxEnumerationSize) {
    throw ValidationError("enumeration of S_" + std::to_string(n) + " exceeds limit n <= " +
                          std::to_string(kMaxEnumerationSize));
  }
  current_ = identity(n);
}

void PermutationStream::advance() {
  if (done_) return;
  done_ = !std::next_permutation(current_.entries_.begin(), current_.entries_.end());
}

PermutationStream enumerate_sn(std::size_t n) { return PermutationStream(n); }

}  // namespace kperm
