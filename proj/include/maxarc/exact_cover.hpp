#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace maxarc {

/// Dancing-links exact cover over items 0..n_items-1. Each option is a list
/// of items; a solution is a set of options covering every item once.
class ExactCover {
 public:
  ExactCover(int n_items, const std::vector<std::vector<int>>& options);

  /// Calls visit with the option indices of each solution (ascending).
  /// Returning false from visit stops the search.
  void enumerate(const std::function<bool(const std::vector<int>&)>& visit);
  std::uint64_t count();

 private:
  bool search();
  void cover(int c);
  void uncover(int c);

  std::vector<int> left_, right_, up_, down_, column_, option_of_, size_;
  int root_ = 0;
  std::vector<int> partial_;
  const std::function<bool(const std::vector<int>&)>* visit_ = nullptr;
};

}  // namespace maxarc
