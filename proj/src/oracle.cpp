#include "kperm/oracle.hpp"

#include <algorithm>

#include "kperm/error.hpp"
#include "kperm/mahonian.hpp"
#include "kperm/numtheory.hpp"

namespace kperm {

namespace {

void require_range(std::uint32_t n, std::uint32_t hi, const char* what) {
  if (n < 2 || n > hi) {
    throw ValidationError(std::string(what) + " needs 2 <= n <= " + std::to_string(hi) +
                          ", got " + std::to_string(n));
  }
}

// Sparse 0/1 matrix with dancing links. Node 0 is the root, nodes 1..cols are
// column headers, the rest are cells.
class ExactCover {
 public:
  explicit ExactCover(std::size_t cols) : size_(cols + 1, 0) {
    for (std::size_t c = 0; c <= cols; ++c) {
      nodes_.push_back({c == 0 ? cols : c - 1, c == cols ? 0 : c + 1, c, c, c, kNoRow});
    }
  }

  void add_row(std::size_t row, std::span<const std::size_t> cols) {
    const std::size_t first = nodes_.size();
    for (std::size_t k = 0; k < cols.size(); ++k) {
      const std::size_t c = cols[k] + 1;
      const std::size_t id = nodes_.size();
      const std::size_t left = k == 0 ? id : id - 1;
      nodes_.push_back({left, first, nodes_[c].up, c, c, row});
      nodes_[nodes_[c].up].down = id;
      nodes_[c].up = id;
      nodes_[left].right = id;
      nodes_[first].left = id;
      ++size_[c];
    }
    rows_.push_back(first);
  }

  /// Covers every column of `row` as if it had been chosen.
  void preselect(std::size_t row) {
    const std::size_t first = rows_[row];
    std::size_t j = first;
    do {
      cover(nodes_[j].col);
      j = nodes_[j].right;
    } while (j != first);
    chosen_.push_back(row);
  }

  /// Returns true if a full cover was found; `chosen()` then lists its rows.
  /// Stops with aborted() set once `budget` rows have been tried.
  bool solve(std::uint64_t budget) {
    budget_ = budget;
    return search();
  }

  const std::vector<std::size_t>& chosen() const { return chosen_; }
  std::uint64_t nodes() const { return nodes_tried_; }
  bool aborted() const { return aborted_; }

 private:
  static constexpr std::size_t kNoRow = static_cast<std::size_t>(-1);

  struct Node {
    std::size_t left, right, up, down, col, row;
  };

  void cover(std::size_t c) {
    nodes_[nodes_[c].right].left = nodes_[c].left;
    nodes_[nodes_[c].left].right = nodes_[c].right;
    for (std::size_t i = nodes_[c].down; i != c; i = nodes_[i].down) {
      for (std::size_t j = nodes_[i].right; j != i; j = nodes_[j].right) {
        nodes_[nodes_[j].down].up = nodes_[j].up;
        nodes_[nodes_[j].up].down = nodes_[j].down;
        --size_[nodes_[j].col];
      }
    }
  }

  void uncover(std::size_t c) {
    for (std::size_t i = nodes_[c].up; i != c; i = nodes_[i].up) {
      for (std::size_t j = nodes_[i].left; j != i; j = nodes_[j].left) {
        ++size_[nodes_[j].col];
        nodes_[nodes_[j].down].up = j;
        nodes_[nodes_[j].up].down = j;
      }
    }
    nodes_[nodes_[c].right].left = c;
    nodes_[nodes_[c].left].right = c;
  }

  bool search() {
    if (nodes_[0].right == 0) return true;
    std::size_t best = nodes_[0].right;
    for (std::size_t c = nodes_[best].right; c != 0; c = nodes_[c].right) {
      if (size_[c] < size_[best]) best = c;
    }
    if (size_[best] == 0) return false;
    cover(best);
    for (std::size_t r = nodes_[best].down; r != best; r = nodes_[r].down) {
      if (nodes_tried_ >= budget_) {
        aborted_ = true;
        break;
      }
      ++nodes_tried_;
      chosen_.push_back(nodes_[r].row);
      for (std::size_t j = nodes_[r].right; j != r; j = nodes_[j].right) cover(nodes_[j].col);
      const bool found = search();
      if (!found) {
        for (std::size_t j = nodes_[r].left; j != r; j = nodes_[j].left) uncover(nodes_[j].col);
        chosen_.pop_back();
      }
      if (found) return true;
      if (aborted_) break;
    }
    uncover(best);
    return false;
  }

  std::vector<Node> nodes_;
  std::vector<std::size_t> size_;
  std::vector<std::size_t> rows_;
  std::vector<std::size_t> chosen_;
  std::uint64_t budget_ = 0;
  std::uint64_t nodes_tried_ = 0;
  bool aborted_ = false;
};

}  // namespace

InversionHistogram inversion_histogram(std::uint32_t n) {
  require_range(n, kMaxHistogramSize, "inversion histogram");
  InversionHistogram h{n, std::vector<std::uint64_t>(max_inversions(n) + 1, 0)};
  for (const auto& pi : enumerate_sn(n)) ++h.counts[kendall_weight(pi)];
  return h;
}

BigInt ball_census(std::uint32_t n, std::uint64_t r, const Permutation& center) {
  require_range(n, kMaxCensusSize, "ball census");
  if (center.size() != n) throw ValidationError("census center has the wrong size");
  std::uint64_t count = 0;
  for (const auto& sigma : enumerate_sn(n)) {
    if (kendall_distance(sigma, center) <= r) ++count;
  }
  return BigInt(static_cast<unsigned long>(count));
}

bool verify_min_distance(std::span<const Permutation> code, std::uint64_t d) {
  if (code.empty()) throw ValidationError("code must be nonempty");
  for (const auto& c : code) {
    if (c.size() != code[0].size()) throw ValidationError("codewords have mixed sizes");
  }
  for (std::size_t a = 0; a < code.size(); ++a) {
    for (std::size_t b = a + 1; b < code.size(); ++b) {
      if (kendall_distance(code[a], code[b]) < d) return false;
    }
  }
  return true;
}

std::string_view to_string(SearchOutcome outcome) {
  switch (outcome) {
    case SearchOutcome::Found:
      return "FOUND";
    case SearchOutcome::ExhaustedNone:
      return "EXHAUSTED_NONE";
    case SearchOutcome::AbortedBudget:
      return "ABORTED_BUDGET";
  }
  return "ABORTED_BUDGET";
}

CodeSearchResult search_perfect_code(std::uint32_t n, std::uint64_t t,
                                     const SearchOptions& options) {
  require_range(n, kMaxSearchSize, "perfect-code search");
  CodeSearchResult result;
  result.n = n;
  result.t = t;

  const BigInt group = factorial(n);
  const BigInt ball = ball_size_dp(n, t);
  if (group % ball != 0) {
    result.outcome = SearchOutcome::ExhaustedNone;
    result.note = "ball size " + to_decimal(ball) + " does not divide " + std::to_string(n) + "!";
    return result;
  }

  std::vector<Permutation> all;
  for (const auto& pi : enumerate_sn(n)) all.push_back(pi);

  // Lexicographic order puts epsilon_n at index 0.
  ExactCover matrix(all.size());
  std::vector<std::size_t> members;
  for (std::size_t c = 0; c < all.size(); ++c) {
    members.clear();
    for (std::size_t s = 0; s < all.size(); ++s) {
      if (kendall_distance(all[s], all[c]) <= t) members.push_back(s);
    }
    matrix.add_row(c, members);
  }

  if (options.fix_identity) matrix.preselect(0);
  const bool found = matrix.solve(options.node_budget);
  result.nodes_explored = matrix.nodes();
  if (found) {
    result.outcome = SearchOutcome::Found;
    for (std::size_t row : matrix.chosen()) result.code.push_back(all[row]);
    std::sort(result.code.begin(), result.code.end());
  } else if (matrix.aborted()) {
    result.outcome = SearchOutcome::AbortedBudget;
    result.note = "node budget exhausted";
  } else {
    result.outcome = SearchOutcome::ExhaustedNone;
    result.note = "search space exhausted";
  }
  return result;
}

}  // namespace kperm
