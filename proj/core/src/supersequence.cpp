// Copyright (c) the mpcs authors. Licensed under the Apache License,
// Version 2.0; see LICENSE or http://www.apache.org/licenses/LICENSE-2.0
#include "mpcs/complexity.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace mpcs {

namespace {

// Decides whether some sequence of exactly `len` symbols over {0..n-1}
// contains every permutation as a subsequence. Symmetry is cut down by
// fixing the order of first occurrences and by never repeating a symbol in
// adjacent positions (a repeat can always be dropped without losing an
// embedded permutation).
bool supersequence_exists(unsigned n, unsigned len) {
  std::vector<std::vector<std::uint8_t>> perms;
  std::vector<std::uint8_t> base(n);
  std::iota(base.begin(), base.end(), 0);
  do {
    perms.push_back(base);
  } while (std::next_permutation(base.begin(), base.end()));

  std::vector<std::uint8_t> progress(perms.size(), 0);

  auto dfs = [&](auto&& self, unsigned pos, unsigned introduced,
                 int last) -> bool {
    unsigned need = 0;
    for (std::size_t i = 0; i < perms.size(); ++i)
      need = std::max(need, n - progress[i]);
    if (need == 0) return true;
    if (pos + need > len) return false;

    unsigned limit = std::min(n - 1, introduced);
    for (unsigned c = 0; c <= limit; ++c) {
      if (static_cast<int>(c) == last) continue;
      std::vector<std::uint8_t> saved = progress;
      for (std::size_t i = 0; i < perms.size(); ++i)
        if (progress[i] < n && perms[i][progress[i]] == c) ++progress[i];
      if (self(self, pos + 1, std::max(introduced, c + 1),
               static_cast<int>(c)))
        return true;
      progress = saved;
    }
    return false;
  };
  return dfs(dfs, 0, 0, -1);
}

}  // namespace

unsigned shortest_supersequence_length(unsigned n) {
  if (n == 0 || n > 4)
    throw std::out_of_range("exact supersequence search supports 1 <= n <= 4");
  if (n == 1) return 1;
  for (unsigned len = n;; ++len)
    if (supersequence_exists(n, len)) return len;
}

}  // namespace mpcs
