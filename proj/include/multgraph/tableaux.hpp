#pragma once

// Type-A oracles by direct enumeration: semistandard tableaux for weight
// multiplicities and Littlewood-Richardson tableaux for tensor multiplicities.
// Both are exponential and meant for small shapes.

#include <cstdint>
#include <functional>
#include <vector>

#include "characters.hpp"
#include "errors.hpp"
#include "partition.hpp"

namespace multgraph {

/// Content-vector table of all semistandard tableaux of shape lambda over
/// the alphabet {1..r}.
inline WeightTable ssyt_character(const Partition &lambda, int r) {
  detail::require(r >= 1, "alphabet size must be positive");
  detail::require(lambda.length() <= r,
                  "shape has more rows than letters in the alphabet");
  struct Cell {
    int row, col;
  };
  std::vector<Cell> cells;
  for (int i = 0; i < lambda.length(); ++i)
    for (int j = 0; j < lambda[i]; ++j)
      cells.push_back({i, j});

  std::vector<std::vector<int>> fill(static_cast<std::size_t>(lambda.length()));
  for (int i = 0; i < lambda.length(); ++i)
    fill[i].assign(static_cast<std::size_t>(lambda[i]), 0);
  IntWeight content(static_cast<std::size_t>(r), 0);
  WeightTable table;

  std::function<void(std::size_t)> place = [&](std::size_t k) {
    if (k == cells.size()) {
      ++table[content];
      return;
    }
    const auto [i, j] = cells[k];
    int lo = 1;
    if (j > 0)
      lo = std::max(lo, fill[i][j - 1]);
    if (i > 0)
      lo = std::max(lo, fill[i - 1][j] + 1);
    for (int v = lo; v <= r; ++v) {
      fill[i][j] = v;
      ++content[v - 1];
      place(k + 1);
      --content[v - 1];
    }
  };
  place(0);
  return table;
}

/// Littlewood-Richardson coefficient c^{mu}_{lambda,delta}: the number of
/// semistandard fillings of mu/lambda with content delta whose reverse
/// reading word is a lattice word.
inline std::uint64_t lr_coefficient(const Partition &lambda,
                                    const Partition &delta,
                                    const Partition &mu) {
  if (mu.size() != lambda.size() + delta.size())
    return 0;
  for (int i = 0; i < std::max(lambda.length(), mu.length()); ++i)
    if (lambda[i] > mu[i])
      return 0;

  // Skew cells in reverse reading order: rows top to bottom, right to left.
  struct Cell {
    int row, col;
  };
  std::vector<Cell> cells;
  for (int i = 0; i < mu.length(); ++i)
    for (int j = mu[i] - 1; j >= lambda[i]; --j)
      cells.push_back({i, j});

  const int letters = delta.length();
  std::vector<std::vector<int>> fill(static_cast<std::size_t>(mu.length()));
  for (int i = 0; i < mu.length(); ++i)
    fill[i].assign(static_cast<std::size_t>(mu[i]), 0);
  std::vector<int> used(static_cast<std::size_t>(letters) + 1, 0);
  std::uint64_t count = 0;

  std::function<void(std::size_t)> place = [&](std::size_t k) {
    if (k == cells.size()) {
      ++count;
      return;
    }
    const auto [i, j] = cells[k];
    for (int v = 1; v <= letters; ++v) {
      if (used[v] >= delta[v - 1])
        continue;
      if (v > 1 && used[v] + 1 > used[v - 1])
        continue; // lattice condition
      // rows weakly increase left to right; the right neighbour is filled
      if (j + 1 < mu[i] && fill[i][j + 1] != 0 && v > fill[i][j + 1])
        continue;
      // columns strictly increase downward; the upper cell is either in
      // lambda (no constraint) or already filled
      if (i > 0 && j >= lambda[i - 1] && v <= fill[i - 1][j])
        continue;
      fill[i][j] = v;
      ++used[v];
      place(k + 1);
      --used[v];
      fill[i][j] = 0;
    }
  };
  place(0);
  return count;
}

} // namespace multgraph
