#pragma once

// Exact arithmetic in Z[t, z, zk] localized at the multiplicative set
// generated by t, d1 = 1 - z - t*z and d2 = 1 - zk - t*zk.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bonded {

enum class Var { t, z, zk };

/// Exponent vector t^t * z^z * zk^zk, packed into one word so that integer
/// comparison of the packed key is graded-lex with t < z < zk.
class Monomial {
 public:
  static constexpr std::uint32_t kMaxExponent = 0x7fff;

  constexpr Monomial() = default;
  Monomial(std::uint32_t t, std::uint32_t z, std::uint32_t zk);

  static constexpr Monomial from_key(std::uint64_t key) {
    Monomial m;
    m.key_ = key;
    return m;
  }

  std::uint32_t exp_t() const { return static_cast<std::uint32_t>(key_ & 0xffff); }
  std::uint32_t exp_z() const { return static_cast<std::uint32_t>((key_ >> 16) & 0xffff); }
  std::uint32_t exp_zk() const { return static_cast<std::uint32_t>((key_ >> 32) & 0xffff); }
  std::uint32_t degree() const { return static_cast<std::uint32_t>(key_ >> 48); }
  std::uint64_t key() const { return key_; }

  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  /// Requires divides(other).
  Monomial quotient_of(const Monomial& other) const;

  auto operator<=>(const Monomial&) const = default;

 private:
  std::uint64_t key_ = 0;
};

/// Polynomial in Z[t, z, zk]. Terms are kept sorted by decreasing monomial,
/// with no zero coefficients.
class Polynomial {
 public:
  struct Term {
    Monomial mono;
    mpz_class coeff;
    bool operator==(const Term&) const = default;
  };

  Polynomial() = default;
  Polynomial(long c);  // NOLINT(google-explicit-constructor)
  explicit Polynomial(const mpz_class& c);
  static Polynomial variable(Var v, std::uint32_t power = 1);
  static Polynomial monomial(const mpz_class& c, const Monomial& m);
  /// Builds from unsorted terms; merges duplicates and drops zeros.
  static Polynomial from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::size_t size() const { return terms_.size(); }
  const Term& leading() const { return terms_.front(); }

  /// Smallest exponent of t over all terms (0 for the zero polynomial).
  std::uint32_t min_exp_t() const;
  /// Multiplies by t^k; k may be negative if every term has enough t.
  Polynomial shift_t(int k) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial pow(unsigned k) const;
  Polynomial scaled(const mpz_class& c) const;

  /// Divides every coefficient by c; all coefficients must be multiples of c.
  Polynomial exact_div_integer(const mpz_class& c) const;

  Polynomial substitute_z_with_zk() const;

  mpq_class evaluate(const mpq_class& t, const mpq_class& z, const mpq_class& zk) const;

  bool operator==(const Polynomial&) const = default;
  std::size_t hash() const;
  std::string to_string() const;

 private:
  std::vector<Term> terms_;
  void subtract_scaled_shifted(const Polynomial& q, const mpz_class& c, const Monomial& m);
  friend std::optional<Polynomial> try_exact_div(const Polynomial& p, const Polynomial& q);
};

/// Returns r with p == q * r in Z[t, z, zk], or nullopt if q does not divide p.
/// Throws DivisionByZero if q is zero.
std::optional<Polynomial> try_exact_div(const Polynomial& p, const Polynomial& q);

/// The denominators the ring may invert.
enum class Special { t, d1, d2 };

const Polynomial& special_polynomial(Special s);

/// num / (t^den_t * d1^den_d1 * d2^den_d2), always stored normalized: the
/// numerator is not divisible by a special factor whose exponent is positive.
/// Normalized representations are unique, so == is semantic equality.
class RingElement {
 public:
  RingElement() = default;
  RingElement(long c) : num_(c) {}  // NOLINT(google-explicit-constructor)
  RingElement(Polynomial num) : num_(std::move(num)) {}  // NOLINT(google-explicit-constructor)
  RingElement(Polynomial num, std::uint32_t den_t, std::uint32_t den_d1, std::uint32_t den_d2);

  static RingElement variable(Var v) { return RingElement(Polynomial::variable(v)); }

  const Polynomial& num() const { return num_; }
  std::uint32_t den_t() const { return den_t_; }
  std::uint32_t den_d1() const { return den_d1_; }
  std::uint32_t den_d2() const { return den_d2_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;
  bool has_denominator() const { return den_t_ != 0 || den_d1_ != 0 || den_d2_ != 0; }
  Polynomial denominator() const;

  RingElement operator-() const;
  RingElement& operator+=(const RingElement& o);
  RingElement& operator-=(const RingElement& o);
  RingElement& operator*=(const RingElement& o);
  friend RingElement operator+(RingElement a, const RingElement& b) { return a += b; }
  friend RingElement operator-(RingElement a, const RingElement& b) { return a -= b; }
  friend RingElement operator*(RingElement a, const RingElement& b) { return a *= b; }
  /// Integer powers; negative k only for units (products of t, d1, d2 up to sign).
  RingElement pow(int k) const;

  RingElement substitute_z_with_zk() const;

  bool operator==(const RingElement&) const = default;
  std::size_t hash() const;
  std::string to_string() const;

 private:
  Polynomial num_;
  std::uint32_t den_t_ = 0;
  std::uint32_t den_d1_ = 0;
  std::uint32_t den_d2_ = 0;

  void normalize();
  RingElement inverse_of_unit() const;
};

/// 1/f for f in {t, d1, d2}.
RingElement invert_special(Special f);
/// Accepts only a polynomial equal to t, d1 or d2; throws Error otherwise.
RingElement invert_special(const Polynomial& f);

/// Exact value at a rational point. Throws PoleError if a denominator vanishes.
mpq_class evaluate(const RingElement& a, const mpq_class& t0, const mpq_class& z0,
                   const mpq_class& zk0);

/// Parses the textual form produced by to_string(), e.g.
/// `(-t*z - z + 1) / (t^2 * (1-z-t*z))`. Throws ParseError.
RingElement parse_ring_element(std::string_view text);
Polynomial parse_polynomial(std::string_view text);

}  // namespace bonded

template <>
struct std::hash<bonded::RingElement> {
  std::size_t operator()(const bonded::RingElement& e) const noexcept { return e.hash(); }
};
