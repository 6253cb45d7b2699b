#include "pfaff/scalar.hpp"

#include <cctype>
#include <ostream>

#include "pfaff/errors.hpp"

namespace pfaff {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

std::uint64_t mpz_mod(const mpz_class& z, std::uint64_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p);
  return r.get_ui();
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic Miller-Rabin witness set for 64-bit integers.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Field Field::prime(std::uint64_t p) {
  if (p == 2 || !is_prime_u64(p))
    throw Error(ErrorCode::InvalidInput, "field characteristic must be an odd prime, got " + std::to_string(p));
  if (p >= (1ULL << 31))
    throw Error(ErrorCode::InvalidInput, "prime " + std::to_string(p) + " exceeds 2^31");
  return Field(p);
}

Field Field::parse(std::string_view d) {
  if (d == "QQ") return rationals();
  if (d.size() > 3 && d.substr(0, 3) == "Fp:") {
    std::uint64_t p = 0;
    for (char ch : d.substr(3)) {
      if (!std::isdigit(static_cast<unsigned char>(ch)) || p > (1ULL << 40))
        throw Error(ErrorCode::Parse, "bad field descriptor '" + std::string(d) + "'");
      p = p * 10 + static_cast<std::uint64_t>(ch - '0');
    }
    return prime(p);
  }
  throw Error(ErrorCode::Parse, "bad field descriptor '" + std::string(d) + "' (expected QQ or Fp:<p>)");
}

std::string Field::to_string() const {
  return is_rational() ? std::string("QQ") : "Fp:" + std::to_string(p_);
}

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(long long v) const {
  if (is_rational()) return Scalar(mpq_class(static_cast<long>(v)));
  long long r = v % static_cast<long long>(p_);
  if (r < 0) r += static_cast<long long>(p_);
  return Scalar(static_cast<std::uint64_t>(r), p_);
}

Scalar Field::from_mpq(const mpq_class& q) const { return Scalar(q).reduce(*this); }

Scalar Field::parse_scalar(std::string_view text) const {
  std::string s(text);
  mpq_class q;
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      q = mpq_class(mpz_class(s, 10));
    } else {
      mpz_class num(s.substr(0, slash), 10);
      mpz_class den(s.substr(slash + 1), 10);
      if (den == 0) throw Error(ErrorCode::Parse, "zero denominator in '" + s + "'");
      q = mpq_class(num, den);
      q.canonicalize();
    }
  } catch (const std::invalid_argument&) {
    throw Error(ErrorCode::Parse, "bad scalar '" + s + "'");
  }
  return from_mpq(q);
}

Scalar::Scalar(const mpq_class& q) : value_(q) {
  std::get<mpq_class>(value_).canonicalize();
}


Field Scalar::field() const {
  if (auto r = std::get_if<Residue>(&value_)) return Field(r->p);
  return Field::rationals();
}

bool Scalar::is_zero() const {
  if (auto r = std::get_if<Residue>(&value_)) return r->v == 0;
  return std::get<mpq_class>(value_) == 0;
}

bool Scalar::is_one() const {
  if (auto r = std::get_if<Residue>(&value_)) return r->v == 1;
  return std::get<mpq_class>(value_) == 1;
}

const mpq_class& Scalar::rational() const {
  if (auto q = std::get_if<mpq_class>(&value_)) return *q;
  throw Error(ErrorCode::FieldMismatch, "scalar is not rational");
}

std::uint64_t Scalar::residue() const {
  if (auto r = std::get_if<Residue>(&value_)) return r->v;
  throw Error(ErrorCode::FieldMismatch, "scalar is not a prime-field residue");
}

void Scalar::check_same(const Scalar& o) const {
  auto a = std::get_if<Residue>(&value_);
  auto b = std::get_if<Residue>(&o.value_);
  if ((a == nullptr) != (b == nullptr) || (a && a->p != b->p))
    throw Error(ErrorCode::FieldMismatch, "arithmetic on scalars from different fields");
}

Scalar Scalar::operator-() const {
  if (auto r = std::get_if<Residue>(&value_)) return Scalar(r->v == 0 ? 0 : r->p - r->v, r->p);
  return Scalar(mpq_class(-std::get<mpq_class>(value_)));
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same(o);
  if (auto r = std::get_if<Residue>(&value_)) {
    r->v += std::get<Residue>(o.value_).v;
    if (r->v >= r->p) r->v -= r->p;
  } else {
    std::get<mpq_class>(value_) += std::get<mpq_class>(o.value_);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check_same(o);
  if (auto r = std::get_if<Residue>(&value_)) {
    auto w = std::get<Residue>(o.value_).v;
    r->v = r->v >= w ? r->v - w : r->v + r->p - w;
  } else {
    std::get<mpq_class>(value_) -= std::get<mpq_class>(o.value_);
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same(o);
  if (auto r = std::get_if<Residue>(&value_)) {
    r->v = r->v * std::get<Residue>(o.value_).v % r->p;
  } else {
    std::get<mpq_class>(value_) *= std::get<mpq_class>(o.value_);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  check_same(o);
  return *this *= o.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  auto ra = std::get_if<Scalar::Residue>(&a.value_);
  auto rb = std::get_if<Scalar::Residue>(&b.value_);
  if ((ra == nullptr) != (rb == nullptr)) return false;
  if (ra) return ra->p == rb->p && ra->v == rb->v;
  return std::get<mpq_class>(a.value_) == std::get<mpq_class>(b.value_);
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorCode::InvalidInput, "division by zero");
  if (auto r = std::get_if<Residue>(&value_)) return Scalar(powmod(r->v, r->p - 2, r->p), r->p);
  return Scalar(mpq_class(1 / std::get<mpq_class>(value_)));
}

Scalar Scalar::pow(unsigned e) const {
  Scalar result = field().one();
  Scalar base = *this;
  while (e) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

Scalar Scalar::reduce(const Field& target) const {
  if (auto r = std::get_if<Residue>(&value_)) {
    if (target.characteristic() != r->p)
      throw Error(ErrorCode::FieldMismatch, "cannot move a residue into " + target.to_string());
    return *this;
  }
  const auto& q = std::get<mpq_class>(value_);
  if (target.is_rational()) return *this;
  const auto p = target.characteristic();
  std::uint64_t den = mpz_mod(q.get_den(), p);
  if (den == 0)
    throw Error(ErrorCode::NotDivisible, "denominator of " + q.get_str() + " vanishes mod " + std::to_string(p));
  std::uint64_t num = mpz_mod(q.get_num(), p);
  return Scalar(mulmod(num, powmod(den, p - 2, p), p), p);
}

std::string Scalar::to_string() const {
  if (auto r = std::get_if<Residue>(&value_)) return std::to_string(r->v);
  return std::get<mpq_class>(value_).get_str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace pfaff
