#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace kperm {

/// Largest n accepted for group arithmetic on explicit permutations.
inline constexpr std::size_t kMaxGroupSize = 20;
/// Largest n for which S_n may be enumerated.
inline constexpr std::size_t kMaxEnumerationSize = 10;

/// A permutation of {1,...,n} in one-line notation [pi(1),...,pi(n)].
///
/// Values are 1-based everywhere at the interface; `operator()(i)` returns
/// pi(i) for 1 <= i <= n.
class Permutation {
 public:
  /// Validates that `entries` is a bijection on {1,...,n}, 1 <= n <= 20.
  explicit Permutation(std::vector<int> entries);

  /// Parses the textual form "[2,1,3]" (whitespace tolerated).
  static Permutation parse(std::string_view text);

  std::size_t size() const noexcept { return entries_.size(); }

  /// pi(i), 1-based.
  int operator()(std::size_t i) const { return entries_[i - 1]; }

  std::span<const int> entries() const noexcept { return entries_; }

  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.entries_ <=> b.entries_;
  }

 private:
  struct Unchecked {};
  Permutation(Unchecked, std::vector<int> entries) : entries_(std::move(entries)) {}

  friend class PermutationStream;
  friend Permutation identity(std::size_t);
  friend Permutation compose(const Permutation&, const Permutation&);
  friend Permutation inverse(const Permutation&);
  friend Permutation reverse(const Permutation&);
  friend std::vector<Permutation> adjacent_neighbors(const Permutation&);

  std::vector<int> entries_;
};

/// epsilon_n = [1,2,...,n].
Permutation identity(std::size_t n);

/// Composition in the left-to-right convention (pi o sigma)(i) = sigma(pi(i)).
Permutation compose(const Permutation& pi, const Permutation& sigma);

Permutation inverse(const Permutation& pi);

/// [pi(n),...,pi(1)].
Permutation reverse(const Permutation& pi);

/// Number of inversions, counted by merge sort in O(n log n).
std::uint64_t kendall_weight(const Permutation& pi);

/// Minimum number of adjacent transpositions taking pi to sigma.
///
/// Equals the number of value pairs whose relative order differs between
/// sigma and pi, i.e. the weight of compose(sigma, inverse(pi)).
std::uint64_t kendall_distance(const Permutation& sigma, const Permutation& pi);

/// The n-1 permutations obtained by swapping positions i and i+1.
std::vector<Permutation> adjacent_neighbors(const Permutation& pi);

/// Lazy lexicographic enumeration of S_n, 1 <= n <= 10. Single consumer.
class PermutationStream {
 public:
  explicit PermutationStream(std::size_t n);

  bool done() const noexcept { return done_; }
  const Permutation& current() const noexcept { return current_; }
  void advance();

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Permutation;
    using difference_type = std::ptrdiff_t;
    using reference = const Permutation&;
    using pointer = const Permutation*;

    iterator() = default;
    explicit iterator(PermutationStream* stream) : stream_(stream) {}

    reference operator*() const { return stream_->current(); }
    pointer operator->() const { return &stream_->current(); }
    iterator& operator++() {
      stream_->advance();
      return *this;
    }
    void operator++(int) { stream_->advance(); }
    friend bool operator==(const iterator& it, std::default_sentinel_t) {
      return it.stream_ == nullptr || it.stream_->done();
    }

   private:
    PermutationStream* stream_ = nullptr;
  };

  iterator begin() { return iterator(this); }
  std::default_sentinel_t end() const noexcept { return {}; }

 private:
  Permutation current_;
  bool done_ = false;
};

PermutationStream enumerate_sn(std::size_t n);

}  // namespace kperm
