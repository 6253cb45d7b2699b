#pragma once

// Ring-generic Pfaffian and determinant expansions. `T` needs +, -, *,
// unary minus and is_zero(); entries are supplied through a callable so the
// same code serves polynomial, constant, and parameter-ring matrices.

#include <bit>
#include <cstdint>
#include <numeric>
#include <unordered_map>
#include <utility>
#include <vector>

#include "pfaff/errors.hpp"

namespace pfaff {

/// Pfaffian by expansion along the lowest remaining row, memoized on the
/// subset of surviving indices. `upper(i, j)` is queried only for i < j.
template <class T, class Upper>
T pfaffian_expand(std::size_t n, Upper&& upper, const T& one) {
  if (n % 2 != 0) throw Error(ErrorCode::InvalidInput, "Pfaffian of an odd-size matrix");
  if (n > 30) throw Error(ErrorCode::SizeLimit, "Pfaffian expansion limited to n <= 30");
  std::unordered_map<std::uint32_t, T> memo;
  auto rec = [&](auto&& self, std::uint32_t mask) -> T {
    if (mask == 0) return one;
    if (auto it = memo.find(mask); it != memo.end()) return it->second;
    const auto i = static_cast<std::size_t>(std::countr_zero(mask));
    std::uint32_t rest = mask & (mask - 1);
    T acc = one - one;
    bool negative = false;
    for (std::uint32_t scan = rest; scan; scan &= scan - 1) {
      const auto j = static_cast<std::size_t>(std::countr_zero(scan));
      const T& a = upper(i, j);
      if (!a.is_zero()) {
        T term = a * self(self, rest & ~(std::uint32_t{1} << j));
        if (negative) {
          acc = acc - term;
        } else {
          acc = acc + term;
        }
      }
      negative = !negative;
    }
    memo.emplace(mask, acc);
    return acc;
  };
  const std::uint32_t full = n == 0 ? 0 : static_cast<std::uint32_t>((std::uint64_t{1} << n) - 1);
  return rec(rec, full);
}

/// Signed sum over all perfect matchings; the sign of a matching
/// {(i1,j1),...,(ik,jk)} is the sign of the permutation (i1 j1 ... ik jk),
/// computed by counting inversions. Independent of pfaffian_expand.
template <class T, class Upper>
T pfaffian_matchings(std::size_t n, Upper&& upper, const T& one) {
  if (n % 2 != 0) throw Error(ErrorCode::InvalidInput, "Pfaffian of an odd-size matrix");
  if (n > 12) throw Error(ErrorCode::SizeLimit, "matching oracle limited to n <= 12");
  T total = one - one;
  std::vector<std::size_t> perm;
  std::vector<bool> used(n, false);
  auto sign_of = [](const std::vector<std::size_t>& p) {
    std::size_t inv = 0;
    for (std::size_t a = 0; a < p.size(); ++a)
      for (std::size_t b = a + 1; b < p.size(); ++b)
        if (p[a] > p[b]) ++inv;
    return inv % 2 == 0;
  };
  auto rec = [&](auto&& self) -> void {
    std::size_t i = 0;
    while (i < n && used[i]) ++i;
    if (i == n) {
      T prod = one;
      for (std::size_t k = 0; k < perm.size(); k += 2) prod = prod * upper(perm[k], perm[k + 1]);
      total = sign_of(perm) ? total + prod : total - prod;
      return;
    }
    used[i] = true;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (used[j]) continue;
      used[j] = true;
      perm.push_back(i);
      perm.push_back(j);
      self(self);
      perm.pop_back();
      perm.pop_back();
      used[j] = false;
    }
    used[i] = false;
  };
  rec(rec);
  return total;
}

/// Determinant by Laplace expansion along rows, memoized on the set of
/// unused columns. `entry(i, j)` for 0 <= i, j < n.
template <class T, class Entry>
T determinant_expand(std::size_t n, Entry&& entry, const T& one) {
  if (n > 30) throw Error(ErrorCode::SizeLimit, "Laplace expansion limited to n <= 30");
  std::unordered_map<std::uint32_t, T> memo;
  auto rec = [&](auto&& self, std::size_t row, std::uint32_t cols) -> T {
    if (row == n) return one;
    if (auto it = memo.find(cols); it != memo.end()) return it->second;
    T acc = one - one;
    bool negative = false;
    for (std::uint32_t scan = cols; scan; scan &= scan - 1) {
      const auto j = static_cast<std::size_t>(std::countr_zero(scan));
      const T& a = entry(row, j);
      if (!a.is_zero()) {
        T term = a * self(self, row + 1, cols & ~(std::uint32_t{1} << j));
        acc = negative ? acc - term : acc + term;
      }
      negative = !negative;
    }
    memo.emplace(cols, acc);
    return acc;
  };
  const std::uint32_t full = n == 0 ? 0 : static_cast<std::uint32_t>((std::uint64_t{1} << n) - 1);
  return rec(rec, 0, full);
}

}  // namespace pfaff
