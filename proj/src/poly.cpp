#include "pfaff/poly.hpp"

#include <cctype>
#include <sstream>

#include "pfaff/errors.hpp"

namespace pfaff {

Point::Point(Scalar x0, Scalar x1, Scalar x2) : c_{std::move(x0), std::move(x1), std::move(x2)} {
  const Field f = c_[0].field();
  if (!(c_[1].field() == f) || !(c_[2].field() == f))
    throw Error(ErrorCode::FieldMismatch, "point coordinates from different fields");
  if (c_[0].is_zero() && c_[1].is_zero() && c_[2].is_zero())
    throw Error(ErrorCode::InvalidInput, "(0:0:0) is not a projective point");
}

Point Point::scaled(const Scalar& lambda) const {
  return Point(c_[0] * lambda, c_[1] * lambda, c_[2] * lambda);
}

std::string Point::to_string() const {
  return "(" + c_[0].to_string() + ":" + c_[1].to_string() + ":" + c_[2].to_string() + ")";
}

Poly Poly::constant(const Scalar& c) {
  Poly p(c.field(), 0);
  p.add_term(Monomial{}, c);
  return p;
}

Poly Poly::variable(Field field, int var) {
  if (var < 0 || var > 2) throw Error(ErrorCode::IndexOutOfRange, "variable index must be 0..2");
  Monomial m;
  m.e[static_cast<std::size_t>(var)] = 1;
  return monomial(m, field.one());
}

Poly Poly::monomial(const Monomial& m, const Scalar& c) {
  Poly p(c.field(), m.degree());
  p.add_term(m, c);
  return p;
}

Poly Poly::from_terms(Field field, std::uint32_t degree, const std::vector<std::pair<Monomial, Scalar>>& terms) {
  Poly p(field, degree);
  for (const auto& [m, c] : terms) {
    if (m.degree() != degree)
      throw Error(ErrorCode::DegreeMismatch, "monomial of degree " + std::to_string(m.degree()) +
                                                 " in a polynomial of degree " + std::to_string(degree));
    if (!(c.field() == field)) throw Error(ErrorCode::FieldMismatch, "coefficient from a different field");
    p.add_term(m, c);
  }
  return p;
}

void Poly::add_term(const Monomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Scalar Poly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? field_.zero() : it->second;
}

void Poly::check_compatible(const Poly& o, const char* op) const {
  if (!(field_ == o.field_)) throw Error(ErrorCode::FieldMismatch, std::string(op) + " of polynomials over different fields");
}

Poly Poly::operator-() const {
  Poly r(field_, degree_);
  for (const auto& [m, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), m, -c);
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  check_compatible(o, "sum");
  if (o.is_zero()) return *this;
  if (is_zero()) {
    degree_ = o.degree_;
  } else if (degree_ != o.degree_) {
    throw Error(ErrorCode::DegreeMismatch, "adding polynomials of degrees " + std::to_string(degree_) + " and " +
                                               std::to_string(o.degree_));
  }
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) { return *this += -o; }

Poly operator*(const Poly& a, const Poly& b) {
  a.check_compatible(b, "product");
  Poly r(a.field_, a.degree_ + b.degree_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

Poly Poly::scaled(const Scalar& s) const {
  if (!(s.field() == field_)) throw Error(ErrorCode::FieldMismatch, "scaling by a scalar from another field");
  Poly r(field_, degree_);
  if (s.is_zero()) return r;
  for (const auto& [m, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), m, c * s);
  return r;
}

Poly Poly::pow(unsigned e) const {
  Poly result = constant(field_.one());
  Poly base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

bool operator==(const Poly& a, const Poly& b) {
  if (!(a.field_ == b.field_)) return false;
  if (a.is_zero() && b.is_zero()) return true;
  return a.degree_ == b.degree_ && a.terms_ == b.terms_;
}

Scalar Poly::eval(const Point& pt) const {
  if (!(pt.field() == field_)) throw Error(ErrorCode::FieldMismatch, "evaluating at a point over another field");
  std::array<std::vector<Scalar>, 3> powers;
  for (std::size_t v = 0; v < 3; ++v) {
    powers[v].push_back(field_.one());
    for (std::uint32_t k = 0; k < degree_; ++k) powers[v].push_back(powers[v].back() * pt[v]);
  }
  Scalar acc = field_.zero();
  for (const auto& [m, c] : terms_) acc += c * powers[0][m.e[0]] * powers[1][m.e[1]] * powers[2][m.e[2]];
  return acc;
}

Poly Poly::partial(int var) const {
  if (var < 0 || var > 2) throw Error(ErrorCode::IndexOutOfRange, "variable index must be 0..2");
  const auto v = static_cast<std::size_t>(var);
  Poly r(field_, degree_ == 0 ? 0 : degree_ - 1);
  for (const auto& [m, c] : terms_) {
    if (m.e[v] == 0) continue;
    Monomial d = m;
    d.e[v] -= 1;
    r.add_term(d, c * field_.from_int(m.e[v]));
  }
  return r;
}

Poly Poly::exact_div(const Poly& g) const {
  check_compatible(g, "division");
  if (g.is_zero()) throw Error(ErrorCode::InvalidInput, "division by the zero polynomial");
  if (is_zero()) return Poly(field_, degree_ >= g.degree_ ? degree_ - g.degree_ : 0);
  if (degree_ < g.degree_)
    throw Error(ErrorCode::NotDivisible, "degree " + std::to_string(degree_) + " below divisor degree; remainder " +
                                             to_string());
  Poly q(field_, degree_ - g.degree_);
  Poly r = *this;
  const auto& [lm, lc] = g.leading();
  const Scalar lc_inv = lc.inverse();
  while (!r.is_zero()) {
    const auto [rm, rc] = r.leading();
    if (!lm.divides(rm)) throw Error(ErrorCode::NotDivisible, "not divisible; remainder witness " + r.to_string());
    Monomial qm{{rm.e[0] - lm.e[0], rm.e[1] - lm.e[1], rm.e[2] - lm.e[2]}};
    Scalar qc = rc * lc_inv;
    q.add_term(qm, qc);
    for (const auto& [gm, gc] : g.terms_) r.add_term(qm * gm, -(qc * gc));
  }
  return q;
}

Poly Poly::reduce(const Field& target) const {
  Poly r(target, degree_);
  for (const auto& [m, c] : terms_) r.add_term(m, c.reduce(target));
  return r;
}

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    std::string coef;
    bool negative = false;
    if (c.field().is_rational()) {
      mpq_class q = c.rational();
      negative = q < 0;
      coef = mpq_class(abs(q)).get_str();
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
    for (std::size_t v = 0; v < 3; ++v) {
      if (m.e[v] == 0) continue;
      if (!factors.empty()) factors += "*";
      factors += "x" + std::to_string(v);
      if (m.e[v] > 1) factors += "^" + std::to_string(m.e[v]);
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

class PolyParser {
 public:
  PolyParser(std::string_view text, const Field& field) : s_(text), field_(field) {}

  Poly parse() {
    skip_ws();
    if (pos_ == s_.size()) fail("empty polynomial");
    std::vector<std::pair<Monomial, Scalar>> terms;
    bool first = true;
    while (true) {
      skip_ws();
      if (pos_ == s_.size()) break;
      bool negative = false;
      if (peek() == '+' || peek() == '-') {
        negative = peek() == '-';
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      terms.push_back(term(negative));
    }
    std::uint32_t degree = terms.front().first.degree();
    for (const auto& [m, c] : terms) {
      if (m.degree() != degree)
        throw Error(ErrorCode::DegreeMismatch, "inhomogeneous polynomial: terms of degree " + std::to_string(degree) +
                                                   " and " + std::to_string(m.degree()) + " in '" + std::string(s_) +
                                                   "'");
    }
    return Poly::from_terms(field_, degree, terms);
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::Parse, what + " at position " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }

  std::string digits() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(s_.substr(start, pos_ - start));
  }

  std::pair<Monomial, Scalar> term(bool negative) {
    Scalar coef = field_.one();
    Monomial m;
    bool need_factor = true;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      std::string num = digits();
      skip_ws();
      if (peek() == '/') {
        ++pos_;
        skip_ws();
        num += "/" + digits();
      }
      coef = field_.parse_scalar(num);
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        skip_ws();
      } else if (!is_var_start()) {
        need_factor = false;
      }
    }
    while (need_factor) {
      factor(m);
      skip_ws();
      if (peek() != '*') break;
      ++pos_;
      skip_ws();
    }
    return {m, negative ? -coef : coef};
  }

  bool is_var_start() const { return peek() == 'x' || peek() == 'y' || peek() == 'z'; }

  void factor(Monomial& m) {
    std::size_t var = 0;
    char c = peek();
    if (c == 'x') {
      ++pos_;
      if (peek() >= '0' && peek() <= '2' &&
          !(pos_ + 1 < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_ + 1])))) {
        var = static_cast<std::size_t>(peek() - '0');
        ++pos_;
      } else if (std::isdigit(static_cast<unsigned char>(peek()))) {
        fail("unknown variable");
      }
    } else if (c == 'y') {
      ++pos_;
      var = 1;
    } else if (c == 'z') {
      ++pos_;
      var = 2;
    } else {
      fail("expected a variable");
    }
    skip_ws();
    std::uint32_t e = 1;
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      std::string d = digits();
      if (d.size() > 6) fail("exponent too large");
      e = static_cast<std::uint32_t>(std::stoul(d));
    }
    m.e[var] += e;
  }

  std::string_view s_;
  const Field& field_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly Poly::parse(std::string_view text, const Field& field) { return PolyParser(text, field).parse(); }

}  // namespace pfaff
