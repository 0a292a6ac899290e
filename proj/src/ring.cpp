#include "bonded/ring.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <unordered_map>

#include "bonded/error.hpp"

namespace bonded {

namespace {

constexpr std::uint64_t pack(std::uint64_t t, std::uint64_t z, std::uint64_t zk) {
  return ((t + z + zk) << 48) | (zk << 32) | (z << 16) | t;
}

mpq_class pow_q(const mpq_class& base, std::uint32_t e) {
  mpq_class result = 1;
  mpq_class b = base;
  while (e != 0) {
    if (e & 1u) result *= b;
    e >>= 1;
    if (e != 0) b *= b;
  }
  return result;
}

void hash_mix(std::size_t& seed, std::size_t v) {
  seed ^= v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

std::size_t hash_mpz(const mpz_class& c) {
  const auto* raw = c.get_mpz_t();
  std::size_t h = std::hash<int>{}(raw->_mp_size);
  const int limbs = raw->_mp_size < 0 ? -raw->_mp_size : raw->_mp_size;
  for (int i = 0; i < limbs; ++i) hash_mix(h, static_cast<std::size_t>(raw->_mp_d[i]));
  return h;
}

bool by_mono_desc(const Polynomial::Term& a, const Polynomial::Term& b) {
  return a.mono > b.mono;
}

}  // namespace

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(std::uint32_t t, std::uint32_t z, std::uint32_t zk) {
  if (t > kMaxExponent || z > kMaxExponent || zk > kMaxExponent) {
    throw Error("monomial exponent overflow");
  }
  key_ = pack(t, z, zk);
}

bool Monomial::divides(const Monomial& other) const {
  return exp_t() <= other.exp_t() && exp_z() <= other.exp_z() && exp_zk() <= other.exp_zk();
}

Monomial Monomial::operator*(const Monomial& other) const {
  return Monomial(exp_t() + other.exp_t(), exp_z() + other.exp_z(), exp_zk() + other.exp_zk());
}

Monomial Monomial::quotient_of(const Monomial& other) const {
  return Monomial(other.exp_t() - exp_t(), other.exp_z() - exp_z(), other.exp_zk() - exp_zk());
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(long c) {
  if (c != 0) terms_.push_back({Monomial(), mpz_class(c)});
}

Polynomial::Polynomial(const mpz_class& c) {
  if (c != 0) terms_.push_back({Monomial(), c});
}

Polynomial Polynomial::variable(Var v, std::uint32_t power) {
  switch (v) {
    case Var::t: return monomial(1, Monomial(power, 0, 0));
    case Var::z: return monomial(1, Monomial(0, power, 0));
    case Var::zk: return monomial(1, Monomial(0, 0, power));
  }
  return {};
}

Polynomial Polynomial::monomial(const mpz_class& c, const Monomial& m) {
  Polynomial p;
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), by_mono_desc);
  Polynomial p;
  for (auto& term : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == term.mono) {
      p.terms_.back().coeff += term.coeff;
      if (p.terms_.back().coeff == 0) p.terms_.pop_back();
    } else if (term.coeff != 0) {
      p.terms_.push_back(std::move(term));
    }
  }
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().mono == Monomial());
}

std::uint32_t Polynomial::min_exp_t() const {
  if (terms_.empty()) return 0;
  std::uint32_t m = terms_.front().mono.exp_t();
  for (const auto& term : terms_) m = std::min(m, term.mono.exp_t());
  return m;
}

Polynomial Polynomial::shift_t(int k) const {
  if (k == 0) return *this;
  Polynomial out;
  out.terms_.reserve(terms_.size());
  for (const auto& term : terms_) {
    const long e = static_cast<long>(term.mono.exp_t()) + k;
    if (e < 0) throw Error("shift_t: negative t exponent");
    out.terms_.push_back(
        {Monomial(static_cast<std::uint32_t>(e), term.mono.exp_z(), term.mono.exp_zk()), term.coeff});
  }
  // Multiplying by t^k preserves the graded-lex order among terms.
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& term : out.terms_) term.coeff = -term.coeff;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) return *this = o;
  std::vector<Term> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->mono > b->mono)) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->mono > a->mono) {
      merged.push_back(*b++);
    } else {
      mpz_class c = a->coeff + b->coeff;
      if (c != 0) merged.push_back({a->mono, std::move(c)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) { return *this += -o; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.terms_.size() == 1 && a.terms_.front().mono == Monomial()) return b.scaled(a.terms_.front().coeff);
  if (b.terms_.size() == 1 && b.terms_.front().mono == Monomial()) return a.scaled(b.terms_.front().coeff);
  std::unordered_map<std::uint64_t, mpz_class> acc;
  acc.reserve(a.terms_.size() * b.terms_.size());
  mpz_class prod;
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) {
      prod = x.coeff * y.coeff;
      acc[(x.mono * y.mono).key()] += prod;
    }
  }
  Polynomial out;
  out.terms_.reserve(acc.size());
  for (auto& [key, c] : acc) {
    if (c != 0) out.terms_.push_back({Monomial::from_key(key), std::move(c)});
  }
  std::sort(out.terms_.begin(), out.terms_.end(), by_mono_desc);
  return out;
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial result(1);
  Polynomial base = *this;
  while (k != 0) {
    if (k & 1u) result = result * base;
    k >>= 1;
    if (k != 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::scaled(const mpz_class& c) const {
  if (c == 0) return {};
  Polynomial out = *this;
  for (auto& term : out.terms_) term.coeff *= c;
  return out;
}

Polynomial Polynomial::exact_div_integer(const mpz_class& c) const {
  if (c == 0) throw DivisionByZero("exact_div_integer by zero");
  Polynomial out = *this;
  for (auto& term : out.terms_) {
    if (!mpz_divisible_p(term.coeff.get_mpz_t(), c.get_mpz_t())) {
      throw Error("exact_div_integer: coefficient not divisible");
    }
    mpz_divexact(term.coeff.get_mpz_t(), term.coeff.get_mpz_t(), c.get_mpz_t());
  }
  return out;
}

Polynomial Polynomial::substitute_z_with_zk() const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& term : terms_) {
    if (term.mono.exp_zk() != 0) throw Error("substitute_z_with_zk: polynomial already contains zk");
    out.push_back({Monomial(term.mono.exp_t(), 0, term.mono.exp_z()), term.coeff});
  }
  return from_terms(std::move(out));
}

mpq_class Polynomial::evaluate(const mpq_class& t, const mpq_class& z, const mpq_class& zk) const {
  mpq_class sum = 0;
  for (const auto& term : terms_) {
    sum += mpq_class(term.coeff) * pow_q(t, term.mono.exp_t()) * pow_q(z, term.mono.exp_z()) *
           pow_q(zk, term.mono.exp_zk());
  }
  return sum;
}

std::size_t Polynomial::hash() const {
  std::size_t h = terms_.size();
  for (const auto& term : terms_) {
    hash_mix(h, std::hash<std::uint64_t>{}(term.mono.key()));
    hash_mix(h, hash_mpz(term.coeff));
  }
  return h;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& term : terms_) {
    const bool negative = term.coeff < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;

    const mpz_class mag = abs(term.coeff);
    std::string factors;
    auto add_factor = [&factors](const std::string& f) {
      if (!factors.empty()) factors += '*';
      factors += f;
    };
    auto add_var = [&](const char* name, std::uint32_t e) {
      if (e == 0) return;
      add_factor(e == 1 ? std::string(name) : std::string(name) + "^" + std::to_string(e));
    };
    if (mag != 1 || term.mono == Monomial()) add_factor(mag.get_str());
    add_var("t", term.mono.exp_t());
    add_var("z", term.mono.exp_z());
    add_var("zk", term.mono.exp_zk());
    out += factors;
  }
  return out;
}

void Polynomial::subtract_scaled_shifted(const Polynomial& q, const mpz_class& c, const Monomial& m) {
  Polynomial delta;
  delta.terms_.reserve(q.terms_.size());
  for (const auto& term : q.terms_) delta.terms_.push_back({term.mono * m, term.coeff * c});
  *this -= delta;
}

std::optional<Polynomial> try_exact_div(const Polynomial& p, const Polynomial& q) {
  if (q.is_zero()) throw DivisionByZero("try_exact_div: divisor is zero");
  if (p.is_zero()) return Polynomial();
  const auto& lead_q = q.leading();
  if (q.is_constant()) {
    for (const auto& term : p.terms()) {
      if (!mpz_divisible_p(term.coeff.get_mpz_t(), lead_q.coeff.get_mpz_t())) return std::nullopt;
    }
    return p.exact_div_integer(lead_q.coeff);
  }
  if (p.leading().mono.degree() < lead_q.mono.degree()) return std::nullopt;

  std::vector<Polynomial::Term> quotient;
  Polynomial rem = p;
  mpz_class c;
  while (!rem.is_zero()) {
    const auto& lead = rem.leading();
    if (!lead_q.mono.divides(lead.mono)) return std::nullopt;
    if (!mpz_divisible_p(lead.coeff.get_mpz_t(), lead_q.coeff.get_mpz_t())) return std::nullopt;
    mpz_divexact(c.get_mpz_t(), lead.coeff.get_mpz_t(), lead_q.coeff.get_mpz_t());
    const Monomial m = lead_q.mono.quotient_of(lead.mono);
    quotient.push_back({m, c});
    rem.subtract_scaled_shifted(q, c, m);
  }
  // Quotient terms were produced in strictly decreasing order.
  Polynomial out;
  out.terms_ = std::move(quotient);
  return out;
}

const Polynomial& special_polynomial(Special s) {
  static const Polynomial t = Polynomial::variable(Var::t);
  static const Polynomial d1 =
      Polynomial(1) - Polynomial::variable(Var::z) - Polynomial::variable(Var::t) * Polynomial::variable(Var::z);
  static const Polynomial d2 = Polynomial(1) - Polynomial::variable(Var::zk) -
                               Polynomial::variable(Var::t) * Polynomial::variable(Var::zk);
  switch (s) {
    case Special::t: return t;
    case Special::d1: return d1;
    case Special::d2: return d2;
  }
  return t;
}

// ---------------------------------------------------------------------------
// RingElement

RingElement::RingElement(Polynomial num, std::uint32_t den_t, std::uint32_t den_d1, std::uint32_t den_d2)
    : num_(std::move(num)), den_t_(den_t), den_d1_(den_d1), den_d2_(den_d2) {
  normalize();
}

void RingElement::normalize() {
  if (num_.is_zero()) {
    den_t_ = den_d1_ = den_d2_ = 0;
    return;
  }
  if (den_t_ > 0) {
    const std::uint32_t k = std::min(den_t_, num_.min_exp_t());
    if (k > 0) {
      num_ = num_.shift_t(-static_cast<int>(k));
      den_t_ -= k;
    }
  }
  while (den_d1_ > 0) {
    auto q = try_exact_div(num_, special_polynomial(Special::d1));
    if (!q) break;
    num_ = std::move(*q);
    --den_d1_;
  }
  while (den_d2_ > 0) {
    auto q = try_exact_div(num_, special_polynomial(Special::d2));
    if (!q) break;
    num_ = std::move(*q);
    --den_d2_;
  }
}

bool RingElement::is_one() const {
  return !has_denominator() && num_ == Polynomial(1);
}

Polynomial RingElement::denominator() const {
  return special_polynomial(Special::t).pow(den_t_) * special_polynomial(Special::d1).pow(den_d1_) *
         special_polynomial(Special::d2).pow(den_d2_);
}

RingElement RingElement::operator-() const {
  RingElement out = *this;
  out.num_ = -out.num_;
  return out;
}

RingElement& RingElement::operator+=(const RingElement& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  const std::uint32_t t = std::max(den_t_, o.den_t_);
  const std::uint32_t d1 = std::max(den_d1_, o.den_d1_);
  const std::uint32_t d2 = std::max(den_d2_, o.den_d2_);
  auto lift = [&](const RingElement& e) {
    Polynomial p = e.num_.shift_t(static_cast<int>(t - e.den_t_));
    if (d1 > e.den_d1_) p = p * special_polynomial(Special::d1).pow(d1 - e.den_d1_);
    if (d2 > e.den_d2_) p = p * special_polynomial(Special::d2).pow(d2 - e.den_d2_);
    return p;
  };
  num_ = lift(*this) + lift(o);
  den_t_ = t;
  den_d1_ = d1;
  den_d2_ = d2;
  normalize();
  return *this;
}

RingElement& RingElement::operator-=(const RingElement& o) { return *this += -o; }

RingElement& RingElement::operator*=(const RingElement& o) {
  num_ = num_ * o.num_;
  den_t_ += o.den_t_;
  den_d1_ += o.den_d1_;
  den_d2_ += o.den_d2_;
  if (has_denominator()) normalize();
  if (num_.is_zero()) den_t_ = den_d1_ = den_d2_ = 0;
  return *this;
}

RingElement RingElement::inverse_of_unit() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  // num must be +-t^a * d1^b * d2^c.
  const std::uint32_t a = num_.min_exp_t();
  Polynomial rest = num_.shift_t(-static_cast<int>(a));
  std::uint32_t b = 0;
  std::uint32_t c = 0;
  while (!rest.is_constant()) {
    if (auto q = try_exact_div(rest, special_polynomial(Special::d1))) {
      rest = std::move(*q);
      ++b;
    } else if (auto q2 = try_exact_div(rest, special_polynomial(Special::d2))) {
      rest = std::move(*q2);
      ++c;
    } else {
      throw Error("element is not a unit of the localized ring: " + to_string());
    }
  }
  const mpz_class& sign = rest.leading().coeff;
  if (sign != 1 && sign != -1) throw Error("element is not a unit of the localized ring: " + to_string());
  Polynomial num = denominator().scaled(sign);
  return RingElement(std::move(num), a, b, c);
}

RingElement RingElement::pow(int k) const {
  if (k < 0) return inverse_of_unit().pow(-k);
  RingElement result(1);
  RingElement base = *this;
  auto e = static_cast<unsigned>(k);
  while (e != 0) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e != 0) base *= base;
  }
  return result;
}

RingElement RingElement::substitute_z_with_zk() const {
  if (den_d2_ != 0) throw Error("substitute_z_with_zk: element already has a d2 denominator");
  return RingElement(num_.substitute_z_with_zk(), den_t_, 0, den_d1_);
}

std::size_t RingElement::hash() const {
  std::size_t h = num_.hash();
  hash_mix(h, den_t_);
  hash_mix(h, den_d1_);
  hash_mix(h, den_d2_);
  return h;
}

std::string RingElement::to_string() const {
  if (!has_denominator()) return num_.to_string();
  std::string out = num_.size() > 1 ? "(" + num_.to_string() + ")" : num_.to_string();
  std::string den;
  auto add = [&den](const std::string& base, std::uint32_t e) {
    if (e == 0) return;
    if (!den.empty()) den += " * ";
    den += base;
    if (e > 1) den += "^" + std::to_string(e);
  };
  add("t", den_t_);
  add("(1-z-t*z)", den_d1_);
  add("(1-zk-t*zk)", den_d2_);
  // A lone d1 or d2 factor already carries its own parentheses.
  if (den_t_ == 0 && (den_d1_ == 0 || den_d2_ == 0)) return out + " / " + den;
  return out + " / (" + den + ")";
}

RingElement invert_special(Special f) {
  switch (f) {
    case Special::t: return RingElement(Polynomial(1), 1, 0, 0);
    case Special::d1: return RingElement(Polynomial(1), 0, 1, 0);
    case Special::d2: return RingElement(Polynomial(1), 0, 0, 1);
  }
  return {};
}

RingElement invert_special(const Polynomial& f) {
  for (Special s : {Special::t, Special::d1, Special::d2}) {
    if (f == special_polynomial(s)) return invert_special(s);
  }
  throw Error("invert_special: only t, 1-z-t*z and 1-zk-t*zk are invertible, got " + f.to_string());
}

mpq_class evaluate(const RingElement& a, const mpq_class& t0, const mpq_class& z0, const mpq_class& zk0) {
  mpq_class den = 1;
  if (a.den_t() > 0) den *= pow_q(t0, a.den_t());
  if (a.den_d1() > 0) den *= pow_q(1 - z0 - t0 * z0, a.den_d1());
  if (a.den_d2() > 0) den *= pow_q(1 - zk0 - t0 * zk0, a.den_d2());
  if (den == 0) throw PoleError("evaluate: denominator vanishes at the given point");
  mpq_class value = a.num().evaluate(t0, z0, zk0) / den;
  value.canonicalize();
  return value;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class ElementParser {
 public:
  explicit ElementParser(std::string_view text) : text_(text) {}

  RingElement element() {
    Polynomial num;
    skip_ws();
    if (peek() == '(') {
      ++pos_;
      num = polynomial();
      expect(')');
    } else {
      num = polynomial();
    }
    skip_ws();
    std::uint32_t dt = 0;
    std::uint32_t dd1 = 0;
    std::uint32_t dd2 = 0;
    if (peek() == '/') {
      ++pos_;
      skip_ws();
      auto factor = [&] {
        skip_ws();
        const std::size_t at = pos_;
        Polynomial base;
        if (peek() == '(') {
          ++pos_;
          base = polynomial();
          expect(')');
        } else {
          base = single_variable();
        }
        std::uint32_t e = 1;
        skip_ws();
        if (peek() == '^') {
          ++pos_;
          e = integer_exponent();
        }
        if (base == special_polynomial(Special::t)) {
          dt += e;
        } else if (base == special_polynomial(Special::d1)) {
          dd1 += e;
        } else if (base == special_polynomial(Special::d2)) {
          dd2 += e;
        } else {
          throw ParseError("denominator factor must be t, (1-z-t*z) or (1-zk-t*zk)", at);
        }
      };
      if (peek() == '(' && !denominator_is_single_factor()) {
        ++pos_;
        factor();
        skip_ws();
        while (peek() == '*') {
          ++pos_;
          factor();
          skip_ws();
        }
        expect(')');
      } else {
        factor();
      }
    }
    skip_ws();
    if (pos_ != text_.size()) throw ParseError("unexpected trailing input", pos_);
    return RingElement(std::move(num), dt, dd1, dd2);
  }

  Polynomial whole_polynomial() {
    Polynomial p = polynomial();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError("unexpected trailing input", pos_);
    return p;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void expect(char c) {
    skip_ws();
    if (peek() != c) throw ParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  // "(1-z-t*z)" directly after '/' is a lone factor, "(t * ...)" a factor list.
  // Both start with '('; a lone special factor parses as a polynomial equal to d1/d2.
  bool denominator_is_single_factor() {
    const std::size_t save = pos_;
    bool single = false;
    try {
      ++pos_;
      Polynomial p = polynomial();
      skip_ws();
      if (peek() == ')') {
        single = p == special_polynomial(Special::d1) || p == special_polynomial(Special::d2);
      }
    } catch (const ParseError&) {
      single = false;
    }
    pos_ = save;
    return single;
  }

  mpz_class integer() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) throw ParseError("expected integer", pos_);
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  std::uint32_t integer_exponent() {
    skip_ws();
    const std::size_t at = pos_;
    mpz_class e = integer();
    if (e > Monomial::kMaxExponent) throw ParseError("exponent too large", at);
    return static_cast<std::uint32_t>(e.get_ui());
  }

  Polynomial single_variable() {
    skip_ws();
    const std::size_t at = pos_;
    if (text_.substr(pos_, 2) == "zk") {
      pos_ += 2;
      return Polynomial::variable(Var::zk);
    }
    if (peek() == 'z') {
      ++pos_;
      return Polynomial::variable(Var::z);
    }
    if (peek() == 't') {
      ++pos_;
      return Polynomial::variable(Var::t);
    }
    throw ParseError("expected variable t, z or zk", at);
  }

  Polynomial factor() {
    skip_ws();
    if (std::isdigit(static_cast<unsigned char>(peek()))) return Polynomial(integer());
    Polynomial v = single_variable();
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      v = v.pow(integer_exponent());
    }
    return v;
  }

  Polynomial term() {
    Polynomial p = factor();
    skip_ws();
    while (peek() == '*') {
      ++pos_;
      p = p * factor();
      skip_ws();
    }
    return p;
  }

  Polynomial polynomial() {
    skip_ws();
    bool negative = false;
    if (peek() == '-' || peek() == '+') {
      negative = peek() == '-';
      ++pos_;
    }
    Polynomial sum = term();
    if (negative) sum = -sum;
    skip_ws();
    while (peek() == '+' || peek() == '-') {
      const bool minus = peek() == '-';
      ++pos_;
      Polynomial t = term();
      if (minus) {
        sum -= t;
      } else {
        sum += t;
      }
      skip_ws();
    }
    return sum;
  }
};

}  // namespace

RingElement parse_ring_element(std::string_view text) { return ElementParser(text).element(); }

Polynomial parse_polynomial(std::string_view text) { return ElementParser(text).whole_polynomial(); }

}  // namespace bonded
