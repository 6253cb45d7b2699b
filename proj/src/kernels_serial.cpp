#include <algorithm>

#include "pfaff/errors.hpp"
#include "pfaff/kernels.hpp"
#include "pfaff/mpoly.hpp"
#include "pfaff/poly.hpp"

namespace pfaff::kernels {

namespace {

Residue mulmod(Residue a, Residue b, std::uint64_t p) { return a * b % p; }

Residue powmod(Residue a, unsigned e, std::uint64_t p) {
  Residue r = 1 % p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

Residue to_residue(const Scalar& c, std::uint64_t p) { return c.reduce(Field::prime(p)).residue(); }

}  // namespace

void ModPoly::add_term(Residue c, std::span<const std::uint8_t> exps) {
  if (exps.size() != nvars_) throw Error(ErrorCode::InvalidInput, "exponent vector of the wrong length");
  c %= p_;
  if (c == 0) return;
  coef_.push_back(c);
  exps_.insert(exps_.end(), exps.begin(), exps.end());
  for (auto e : exps) max_exp_ = std::max<unsigned>(max_exp_, e);
}

ModPoly ModPoly::from_poly(const Poly& f, std::uint64_t p) {
  ModPoly r(p, 3);
  for (const auto& [m, c] : f.terms()) {
    if (m.e[0] > 255 || m.e[1] > 255 || m.e[2] > 255) throw Error(ErrorCode::SizeLimit, "exponent exceeds 255");
    std::array<std::uint8_t, 3> e{static_cast<std::uint8_t>(m.e[0]), static_cast<std::uint8_t>(m.e[1]),
                                  static_cast<std::uint8_t>(m.e[2])};
    r.add_term(to_residue(c, p), e);
  }
  return r;
}

ModPoly ModPoly::from_mpoly(const MPoly& f, std::uint64_t p) {
  const std::size_t n = f.ring()->nvars();
  ModPoly r(p, n);
  std::vector<std::uint8_t> e(n);
  for (const auto& [m, c] : f.terms()) {
    for (std::size_t v = 0; v < n; ++v) {
      if (m[v] > 255) throw Error(ErrorCode::SizeLimit, "exponent exceeds 255");
      e[v] = static_cast<std::uint8_t>(m[v]);
    }
    r.add_term(to_residue(c, p), e);
  }
  return r;
}

Residue ModPoly::eval(std::span<const Residue> x) const {
  Residue acc = 0;
  const std::size_t nt = coef_.size();
  for (std::size_t t = 0; t < nt; ++t) {
    Residue term = coef_[t];
    const std::uint8_t* e = &exps_[t * nvars_];
    for (std::size_t v = 0; v < nvars_ && term; ++v) {
      for (unsigned k = 0; k < e[v]; ++k) term = term * x[v] % p_;
    }
    acc += term;
    if (acc >= p_) acc -= p_;
  }
  return acc;
}

ModPoly ModPoly::specialize(std::span<const std::size_t> fixed, std::span<const Residue> values) const {
  std::vector<int> keep_index(nvars_, 0);
  std::vector<bool> is_fixed(nvars_, false);
  std::vector<Residue> value_of(nvars_, 0);
  for (std::size_t k = 0; k < fixed.size(); ++k) {
    is_fixed[fixed[k]] = true;
    value_of[fixed[k]] = values[k] % p_;
  }
  std::size_t kept = 0;
  for (std::size_t v = 0; v < nvars_; ++v)
    if (!is_fixed[v]) keep_index[v] = static_cast<int>(kept++);
  ModPoly r(p_, kept);
  // Merge equal residual monomials.
  std::vector<std::pair<std::vector<std::uint8_t>, Residue>> acc;
  std::vector<std::uint8_t> e(kept);
  for (std::size_t t = 0; t < coef_.size(); ++t) {
    Residue c = coef_[t];
    const std::uint8_t* te = &exps_[t * nvars_];
    for (std::size_t v = 0; v < nvars_; ++v) {
      if (is_fixed[v]) {
        c = c * powmod(value_of[v], te[v], p_) % p_;
      } else {
        e[static_cast<std::size_t>(keep_index[v])] = te[v];
      }
    }
    if (c == 0) continue;
    auto it = std::find_if(acc.begin(), acc.end(), [&](const auto& a) { return a.first == e; });
    if (it == acc.end()) {
      acc.emplace_back(e, c);
    } else {
      it->second = (it->second + c) % p_;
    }
  }
  for (const auto& [ex, c] : acc) r.add_term(c, ex);
  return r;
}

ModPoly ModPoly::partial(std::size_t var) const {
  ModPoly r(p_, nvars_);
  std::vector<std::uint8_t> e(nvars_);
  for (std::size_t t = 0; t < coef_.size(); ++t) {
    std::copy_n(&exps_[t * nvars_], nvars_, e.begin());
    if (e[var] == 0) continue;
    Residue c = coef_[t] * (e[var] % p_) % p_;
    e[var] -= 1;
    r.add_term(c, e);
  }
  return r;
}

std::uint64_t projective_plane_size(std::uint64_t p) { return p * p + p + 1; }

Triple projective_point(std::uint64_t index, std::uint64_t p) {
  if (index < p * p) return {1, index / p, index % p};
  index -= p * p;
  if (index < p) return {0, 1, index};
  return {0, 0, 1};
}

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

namespace detail {

std::vector<Residue> draw_outer(std::span<const std::size_t> outer, std::size_t nvars, std::uint64_t p,
                                std::uint64_t seed, std::uint64_t attempt) {
  std::uint64_t state = seed ^ (attempt * 0xD1B54A32D192ED03ULL);
  std::vector<Residue> values(nvars, 0);
  for (auto v : outer) values[v] = splitmix64(state) % p;
  return values;
}

void scan_attempt(std::span<const ModPoly> system, std::span<const std::size_t> outer,
                  std::span<const std::size_t> inner, std::uint64_t seed, std::uint64_t attempt,
                  std::vector<SearchHit>& out) {
  if (system.empty()) return;
  if (inner.size() != 3) throw Error(ErrorCode::InvalidInput, "inner scan expects exactly three variables");
  const std::uint64_t p = system.front().modulus();
  const std::size_t nvars = system.front().nvars();
  std::vector<Residue> values = draw_outer(outer, nvars, p, seed, attempt);
  std::vector<Residue> outer_values;
  for (auto v : outer) outer_values.push_back(values[v]);

  // Remaining variables are the inner ones, in increasing index order.
  std::vector<std::size_t> order(inner.begin(), inner.end());
  std::sort(order.begin(), order.end());

  std::vector<ModPoly> s3;
  for (const auto& f : system) s3.push_back(f.specialize(outer, outer_values));

  const std::array<std::size_t, 1> first_var{0};
  for (Residue a = 0; a < p; ++a) {
    const std::array<Residue, 1> va{a};
    std::vector<ModPoly> s2;
    for (const auto& f : s3) s2.push_back(f.specialize(first_var, va));
    for (Residue b = 0; b < p; ++b) {
      const std::array<Residue, 1> vb{b};
      std::vector<ModPoly> s1;
      for (const auto& f : s2) s1.push_back(f.specialize(first_var, vb));
      for (Residue c = 0; c < p; ++c) {
        const std::array<Residue, 1> vc{c};
        bool all_zero = true;
        for (const auto& f : s1) {
          if (f.eval(vc) != 0) {
            all_zero = false;
            break;
          }
        }
        if (!all_zero) continue;
        SearchHit hit{attempt, values};
        hit.values[order[0]] = a;
        hit.values[order[1]] = b;
        hit.values[order[2]] = c;
        out.push_back(std::move(hit));
      }
    }
  }
}

}  // namespace detail

namespace serial {

std::vector<Triple> curve_points(const ModPoly& f) {
  const std::uint64_t p = f.modulus();
  std::vector<Triple> out;
  for (std::uint64_t t = 0; t < projective_plane_size(p); ++t) {
    Triple x = projective_point(t, p);
    if (f.eval(x) == 0) out.push_back(x);
  }
  return out;
}

std::vector<Triple> singular_points(const ModPoly& f) {
  const std::uint64_t p = f.modulus();
  const ModPoly d[3] = {f.partial(0), f.partial(1), f.partial(2)};
  std::vector<Triple> out;
  for (std::uint64_t t = 0; t < projective_plane_size(p); ++t) {
    Triple x = projective_point(t, p);
    if (f.eval(x) == 0 && d[0].eval(x) == 0 && d[1].eval(x) == 0 && d[2].eval(x) == 0) out.push_back(x);
  }
  return out;
}

std::vector<std::pair<Residue, Residue>> weierstrass_affine_points(Residue alpha, Residue beta, std::uint64_t p) {
  std::vector<std::pair<Residue, Residue>> out;
  for (Residue s = 0; s < p; ++s) {
    const Residue rhs = (s * s % p * s + alpha % p * s + beta) % p;
    for (Residue l = 0; l < p; ++l)
      if (l * l % p == rhs) out.emplace_back(s, l);
  }
  return out;
}

std::vector<SearchHit> search_attempts(std::span<const ModPoly> system, std::span<const std::size_t> outer,
                                       std::span<const std::size_t> inner, std::uint64_t seed, std::uint64_t first,
                                       std::uint64_t count) {
  std::vector<SearchHit> out;
  for (std::uint64_t t = first; t < first + count; ++t) detail::scan_attempt(system, outer, inner, seed, t, out);
  return out;
}

}  // namespace serial

}  // namespace pfaff::kernels
