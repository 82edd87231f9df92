#include "maxarc/exact_cover.hpp"

#include <algorithm>
#include <stdexcept>

namespace maxarc {

// Node 0 is the root; nodes 1..n are column headers; option nodes follow.
ExactCover::ExactCover(int n_items, const std::vector<std::vector<int>>& options) {
  const int n = n_items;
  std::size_t total = static_cast<std::size_t>(n) + 1;
  for (const auto& o : options) total += o.size();
  left_.resize(total);
  right_.resize(total);
  up_.resize(total);
  down_.resize(total);
  column_.resize(total);
  option_of_.assign(total, -1);
  size_.assign(n + 1, 0);

  for (int c = 0; c <= n; ++c) {
    left_[c] = c == 0 ? n : c - 1;
    right_[c] = c == n ? 0 : c + 1;
    up_[c] = down_[c] = c;
    column_[c] = c;
  }
  int node = n + 1;
  for (int r = 0; r < static_cast<int>(options.size()); ++r) {
    const int first = node;
    for (int item : options[r]) {
      if (item < 0 || item >= n) throw std::out_of_range("exact cover item out of range");
      const int c = item + 1;
      column_[node] = c;
      option_of_[node] = r;
      up_[node] = up_[c];
      down_[node] = c;
      down_[up_[c]] = node;
      up_[c] = node;
      ++size_[c];
      left_[node] = node == first ? node : node - 1;
      right_[node] = first;
      if (node != first) {
        right_[node - 1] = node;
        left_[first] = node;
      }
      ++node;
    }
  }
}

void ExactCover::cover(int c) {
  right_[left_[c]] = right_[c];
  left_[right_[c]] = left_[c];
  for (int i = down_[c]; i != c; i = down_[i])
    for (int j = right_[i]; j != i; j = right_[j]) {
      down_[up_[j]] = down_[j];
      up_[down_[j]] = up_[j];
      --size_[column_[j]];
    }
}

void ExactCover::uncover(int c) {
  for (int i = up_[c]; i != c; i = up_[i])
    for (int j = left_[i]; j != i; j = left_[j]) {
      ++size_[column_[j]];
      down_[up_[j]] = j;
      up_[down_[j]] = j;
    }
  right_[left_[c]] = c;
  left_[right_[c]] = c;
}

bool ExactCover::search() {
  if (right_[root_] == root_) {
    std::vector<int> sol = partial_;
    std::sort(sol.begin(), sol.end());
    return (*visit_)(sol);
  }
  // Column with fewest remaining options; ties go to the lowest item.
  int best = right_[root_];
  for (int c = right_[best]; c != root_; c = right_[c])
    if (size_[c] < size_[best]) best = c;
  if (size_[best] == 0) return true;

  cover(best);
  bool keep_going = true;
  for (int r = down_[best]; r != best && keep_going; r = down_[r]) {
    partial_.push_back(option_of_[r]);
    for (int j = right_[r]; j != r; j = right_[j]) cover(column_[j]);
    keep_going = search();
    for (int j = left_[r]; j != r; j = left_[j]) uncover(column_[j]);
    partial_.pop_back();
  }
  uncover(best);
  return keep_going;
}

void ExactCover::enumerate(const std::function<bool(const std::vector<int>&)>& visit) {
  visit_ = &visit;
  partial_.clear();
  search();
  visit_ = nullptr;
}

std::uint64_t ExactCover::count() {
  std::uint64_t n = 0;
  enumerate([&](const std::vector<int>&) {
    ++n;
    return true;
  });
  return n;
}

}  // namespace maxarc
