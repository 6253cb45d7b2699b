#include "pfaff/mpoly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "pfaff/errors.hpp"

namespace pfaff {

PolyRing::PolyRing(Field field, std::vector<std::string> names) : field_(field), names_(std::move(names)) {
  for (std::size_t i = 0; i < names_.size(); ++i)
    for (std::size_t j = i + 1; j < names_.size(); ++j)
      if (names_[i] == names_[j]) throw Error(ErrorCode::InvalidInput, "duplicate variable name " + names_[i]);
}

std::optional<std::size_t> PolyRing::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

RingPtr make_ring(Field field, std::vector<std::string> names) {
  return std::make_shared<const PolyRing>(field, std::move(names));
}

bool MPoly::GradedGreater::operator()(const Exponents& a, const Exponents& b) const {
  const unsigned da = std::accumulate(a.begin(), a.end(), 0u);
  const unsigned db = std::accumulate(b.begin(), b.end(), 0u);
  if (da != db) return da > db;
  return a > b;
}

MPoly MPoly::constant(RingPtr ring, const Scalar& c) {
  MPoly r(ring);
  r.add_term(Exponents(ring->nvars(), 0), c);
  return r;
}

MPoly MPoly::constant(RingPtr ring, long long c) {
  const Scalar s = ring->field().from_int(c);
  return constant(std::move(ring), s);
}

MPoly MPoly::variable(RingPtr ring, std::size_t index) {
  if (index >= ring->nvars()) throw Error(ErrorCode::IndexOutOfRange, "variable index out of range");
  Exponents e(ring->nvars(), 0);
  e[index] = 1;
  MPoly r(ring);
  r.add_term(e, ring->field().one());
  return r;
}

MPoly MPoly::variable(RingPtr ring, std::string_view name) {
  auto idx = ring->index_of(name);
  if (!idx) throw Error(ErrorCode::InvalidInput, "unknown variable '" + std::string(name) + "'");
  return variable(std::move(ring), *idx);
}

void MPoly::add_term(const Exponents& e, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void MPoly::check_ring(const MPoly& o) const {
  if (ring_ != o.ring_ && !(ring_ && o.ring_ && ring_->names() == o.ring_->names() &&
                            ring_->field() == o.ring_->field()))
    throw Error(ErrorCode::FieldMismatch, "polynomials from different rings");
}

bool MPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const auto& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](auto v) { return v == 0; });
}

Scalar MPoly::constant_value() const {
  if (!is_constant()) throw Error(ErrorCode::InvalidInput, "polynomial is not constant");
  return terms_.empty() ? ring_->field().zero() : terms_.begin()->second;
}

unsigned MPoly::total_degree() const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0u));
  return d;
}

unsigned MPoly::degree_in(std::size_t var) const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max<unsigned>(d, e[var]);
  return d;
}

MPoly MPoly::operator-() const {
  MPoly r(ring_);
  for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e, -c);
  return r;
}

MPoly& MPoly::operator+=(const MPoly& o) {
  if (!ring_) ring_ = o.ring_;
  if (o.is_zero()) return *this;
  check_ring(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) { return *this += -o; }

MPoly operator*(const MPoly& a, const MPoly& b) {
  a.check_ring(b);
  MPoly r(a.ring_);
  if (a.is_zero() || b.is_zero()) return r;
  const std::size_t n = a.ring_->nvars();
  MPoly::Exponents e(n);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t v = 0; v < n; ++v) e[v] = static_cast<std::uint16_t>(ea[v] + eb[v]);
      r.add_term(e, ca * cb);
    }
  return r;
}

MPoly MPoly::scaled(const Scalar& s) const {
  MPoly r(ring_);
  if (s.is_zero()) return r;
  for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e, c * s);
  return r;
}

MPoly MPoly::pow(unsigned e) const {
  MPoly result = constant(ring_, 1);
  MPoly base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

bool operator==(const MPoly& a, const MPoly& b) {
  if (a.is_zero() && b.is_zero()) return true;
  if (a.ring_ != b.ring_ && !(a.ring_ && b.ring_ && a.ring_->names() == b.ring_->names())) return false;
  return a.terms_ == b.terms_;
}

MPoly MPoly::coefficient_of(std::size_t var, unsigned power) const {
  MPoly r(ring_);
  for (const auto& [e, c] : terms_) {
    if (e[var] != power) continue;
    Exponents f = e;
    f[var] = 0;
    r.add_term(f, c);
  }
  return r;
}

MPoly MPoly::substitute(std::size_t var, const MPoly& value) const {
  check_ring(value);
  MPoly r(ring_);
  std::vector<MPoly> powers{constant(ring_, 1)};
  for (const auto& [e, c] : terms_) {
    while (powers.size() <= e[var]) powers.push_back(powers.back() * value);
    MPoly rest(ring_);
    Exponents f = e;
    f[var] = 0;
    rest.add_term(f, c);
    r += rest * powers[e[var]];
  }
  return r;
}

MPoly MPoly::partial(std::size_t var) const {
  MPoly r(ring_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponents f = e;
    f[var] -= 1;
    r.add_term(f, c * ring_->field().from_int(e[var]));
  }
  return r;
}

Scalar MPoly::evaluate(std::span<const Scalar> values) const {
  if (values.size() != ring_->nvars()) throw Error(ErrorCode::InvalidInput, "evaluation point has the wrong length");
  Scalar acc = ring_->field().zero();
  for (const auto& [e, c] : terms_) {
    Scalar t = c;
    for (std::size_t v = 0; v < e.size(); ++v)
      if (e[v]) t *= values[v].pow(e[v]);
    acc += t;
  }
  return acc;
}

std::map<std::vector<std::uint16_t>, MPoly> MPoly::split(std::span<const std::size_t> vars) const {
  std::map<std::vector<std::uint16_t>, MPoly> out;
  for (const auto& [e, c] : terms_) {
    std::vector<std::uint16_t> key;
    Exponents f = e;
    for (auto v : vars) {
      key.push_back(e[v]);
      f[v] = 0;
    }
    auto [it, inserted] = out.try_emplace(key, MPoly(ring_));
    it->second.add_term(f, c);
  }
  for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

MPoly MPoly::remap(const RingPtr& target) const {
  std::vector<std::optional<std::size_t>> map(ring_->nvars());
  for (std::size_t v = 0; v < ring_->nvars(); ++v) map[v] = target->index_of(ring_->name(v));
  MPoly r(target);
  for (const auto& [e, c] : terms_) {
    Exponents f(target->nvars(), 0);
    for (std::size_t v = 0; v < e.size(); ++v) {
      if (e[v] == 0) continue;
      if (!map[v]) throw Error(ErrorCode::InvalidInput, "variable " + ring_->name(v) + " missing from target ring");
      f[*map[v]] = e[v];
    }
    r.add_term(f, c.reduce(target->field()));
  }
  return r;
}

MPoly MPoly::reduce(const RingPtr& target) const { return remap(target); }

std::string MPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    bool negative = false;
    std::string coef;
    if (c.field().is_rational()) {
      negative = c.rational() < 0;
      coef = mpq_class(abs(c.rational())).get_str();
    } else {
      coef = c.to_string();
    }
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    std::string factors;
    for (std::size_t v = 0; v < e.size(); ++v) {
      if (e[v] == 0) continue;
      if (!factors.empty()) factors += "*";
      factors += ring_->name(v);
      if (e[v] > 1) factors += "^" + std::to_string(e[v]);
    }
    if (factors.empty()) {
      os << coef;
    } else if (coef == "1") {
      os << factors;
    } else {
      os << coef << "*" << factors;
    }
  }
  return os.str();
}

namespace {

class ExprParser {
 public:
  ExprParser(std::string_view s, RingPtr ring) : s_(s), ring_(std::move(ring)) {}

  MPoly parse() {
    MPoly r = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected character");
    return r;
  }

 private:
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::Parse, what + " at position " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }
  bool starts_factor(char c) const {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '(' || c == '_';
  }

  MPoly expr() {
    MPoly acc(ring_);
    bool first = true;
    while (true) {
      char c = peek();
      bool negative = false;
      if (c == '+' || c == '-') {
        negative = c == '-';
        ++pos_;
      } else if (!first) {
        break;
      }
      first = false;
      MPoly t = term();
      acc += negative ? -t : t;
    }
    return acc;
  }

  MPoly term() {
    MPoly acc = power();
    while (true) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        acc = acc * power();
      } else if (starts_factor(c)) {
        acc = acc * power();
      } else {
        return acc;
      }
    }
  }

  MPoly power() {
    MPoly base = primary();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      base = base.pow(static_cast<unsigned>(std::stoul(std::string(s_.substr(start, pos_ - start)))));
    }
    return base;
  }

  MPoly primary() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      MPoly inner = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      std::string num(s_.substr(start, pos_ - start));
      if (peek() == '/') {
        ++pos_;
        skip_ws();
        std::size_t d = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (d == pos_) fail("expected denominator");
        num += "/" + std::string(s_.substr(d, pos_ - d));
      }
      return MPoly::constant(ring_, ring_->field().parse_scalar(num));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string_view name = s_.substr(start, pos_ - start);
      auto idx = ring_->index_of(name);
      if (!idx) {
        pos_ = start;
        fail("unknown variable '" + std::string(name) + "'");
      }
      return MPoly::variable(ring_, *idx);
    }
    fail("expected a number, variable or '('");
  }

  std::string_view s_;
  RingPtr ring_;
  std::size_t pos_ = 0;
};

}  // namespace

MPoly MPoly::parse(std::string_view text, RingPtr ring) { return ExprParser(text, std::move(ring)).parse(); }

}  // namespace pfaff
