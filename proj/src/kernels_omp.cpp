#include <omp.h>

#include <cstdint>
#include <exception>

#include "pfaff/kernels.hpp"

namespace pfaff::kernels {

namespace {

// Marks indices [0, n) satisfying pred in parallel, then gathers in order.
template <class Pred>
std::vector<std::uint64_t> parallel_filter(std::uint64_t n, Pred&& pred) {
  std::vector<std::uint8_t> keep(n, 0);
  const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(static)
  for (std::int64_t t = 0; t < count; ++t) keep[static_cast<std::size_t>(t)] = pred(static_cast<std::uint64_t>(t));
  std::vector<std::uint64_t> out;
  for (std::uint64_t t = 0; t < n; ++t)
    if (keep[t]) out.push_back(t);
  return out;
}

}  // namespace

std::vector<Triple> curve_points(const ModPoly& f) {
  const std::uint64_t p = f.modulus();
  auto idx = parallel_filter(projective_plane_size(p), [&](std::uint64_t t) {
    return f.eval(projective_point(t, p)) == 0;
  });
  std::vector<Triple> out;
  out.reserve(idx.size());
  for (auto t : idx) out.push_back(projective_point(t, p));
  return out;
}

std::vector<Triple> singular_points(const ModPoly& f) {
  const std::uint64_t p = f.modulus();
  const ModPoly d[3] = {f.partial(0), f.partial(1), f.partial(2)};
  auto idx = parallel_filter(projective_plane_size(p), [&](std::uint64_t t) {
    const Triple x = projective_point(t, p);
    return f.eval(x) == 0 && d[0].eval(x) == 0 && d[1].eval(x) == 0 && d[2].eval(x) == 0;
  });
  std::vector<Triple> out;
  for (auto t : idx) out.push_back(projective_point(t, p));
  return out;
}

std::vector<std::pair<Residue, Residue>> weierstrass_affine_points(Residue alpha, Residue beta, std::uint64_t p) {
  auto idx = parallel_filter(p * p, [&](std::uint64_t t) {
    const Residue s = t / p;
    const Residue l = t % p;
    return l * l % p == (s * s % p * s + alpha % p * s + beta) % p;
  });
  std::vector<std::pair<Residue, Residue>> out;
  for (auto t : idx) out.emplace_back(t / p, t % p);
  return out;
}

std::vector<SearchHit> search_attempts(std::span<const ModPoly> system, std::span<const std::size_t> outer,
                                       std::span<const std::size_t> inner, std::uint64_t seed, std::uint64_t first,
                                       std::uint64_t count) {
  std::vector<std::vector<SearchHit>> per_attempt(count);
  std::exception_ptr failure;
  const auto n = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t k = 0; k < n; ++k) {
    try {
      detail::scan_attempt(system, outer, inner, seed, first + static_cast<std::uint64_t>(k),
                           per_attempt[static_cast<std::size_t>(k)]);
    } catch (...) {
#pragma omp critical
      failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  std::vector<SearchHit> out;
  for (auto& hits : per_attempt)
    for (auto& h : hits) out.push_back(std::move(h));
  return out;
}

}  // namespace pfaff::kernels
