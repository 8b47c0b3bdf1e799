#pragma once

// Sparse exact polynomials in x, y, q (Laurent in q) and an indexed family
// z_1, z_2, ... with arbitrary-precision integer coefficients.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

namespace fibstat {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct Var {
  enum class Kind : std::uint8_t { X, Y, Q, Z };
  Kind kind = Kind::X;
  std::uint32_t index = 0;  // only meaningful for Z, 1-based

  static constexpr Var x() { return {Kind::X, 0}; }
  static constexpr Var y() { return {Kind::Y, 0}; }
  static constexpr Var q() { return {Kind::Q, 0}; }
  static constexpr Var z(std::uint32_t i) { return {Kind::Z, i}; }

  friend bool operator==(const Var&, const Var&) = default;
};

/// Exponent vector x^a y^b q^e z_i^f... Only the q exponent may be negative;
/// z exponents are kept sorted by index with no zero entries.
class Monomial {
 public:
  using ZExponents = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

  Monomial() = default;
  Monomial(std::uint32_t x, std::uint32_t y, std::int32_t q, ZExponents z = {});

  static Monomial var(Var v, std::int32_t exp = 1);

  std::uint32_t x_exp() const { return x_; }
  std::uint32_t y_exp() const { return y_; }
  std::int32_t q_exp() const { return q_; }
  const ZExponents& z_exps() const { return z_; }
  std::uint32_t z_exp(std::uint32_t index) const;
  /// Exponent of an arbitrary variable (x, y, z are returned as nonnegative).
  std::int64_t exp(Var v) const;

  bool is_one() const { return x_ == 0 && y_ == 0 && q_ == 0 && z_.empty(); }
  /// True if the monomial involves q only (including the unit monomial).
  bool is_pure_q() const { return x_ == 0 && y_ == 0 && z_.empty(); }

  Monomial operator*(const Monomial& other) const;
  /// Integer power; negative powers are only defined for pure q monomials.
  Monomial pow(std::int64_t e) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::uint32_t x_ = 0;
  std::uint32_t y_ = 0;
  std::int32_t q_ = 0;
  ZExponents z_;
};

/// Order used for storage and rendering: q exponent descending, then x, y,
/// then the z exponent vector lexicographically, all descending.
struct CanonicalOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

class MultiPoly {
 public:
  using TermMap = std::map<Monomial, Integer, CanonicalOrder>;

  MultiPoly() = default;
  MultiPoly(int c) : MultiPoly(Integer(c)) {}  // NOLINT(google-explicit-constructor)
  MultiPoly(const Integer& c);                 // NOLINT(google-explicit-constructor)
  MultiPoly(const Monomial& m, const Integer& c = 1);

  static MultiPoly var(Var v, std::int32_t exp = 1) { return MultiPoly(Monomial::var(v, exp)); }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Integer coefficient(const Monomial& m) const;
  /// The single (monomial, coefficient) pair, if the polynomial has exactly one term.
  std::optional<std::pair<Monomial, Integer>> single_term() const;

  /// Adds c * m in place.
  void add_term(const Monomial& m, const Integer& c);

  MultiPoly& operator+=(const MultiPoly& other);
  MultiPoly& operator-=(const MultiPoly& other);
  MultiPoly& operator*=(const MultiPoly& other);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(MultiPoly a);

  friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

 private:
  TermMap terms_;
};

MultiPoly pow(const MultiPoly& p, unsigned e);

inline MultiPoly X(std::int32_t e = 1) { return MultiPoly::var(Var::x(), e); }
inline MultiPoly Y(std::int32_t e = 1) { return MultiPoly::var(Var::y(), e); }
inline MultiPoly Q(std::int32_t e = 1) { return MultiPoly::var(Var::q(), e); }
inline MultiPoly Z(std::uint32_t i, std::int32_t e = 1) { return MultiPoly::var(Var::z(i), e); }

/// A ring homomorphism given by sending each variable to a single signed
/// monomial. Unmapped variables are fixed.
class Substitution {
 public:
  /// Throws std::invalid_argument unless `image` has exactly one term.
  Substitution& set(Var v, const MultiPoly& image);

  MultiPoly apply(const MultiPoly& p) const;

  /// q -> 1/q.
  static Substitution invert_q();

 private:
  struct Image {
    Integer coeff;
    Monomial mono;
  };
  const Image* find(Var v) const;

  std::optional<Image> x_;
  std::optional<Image> y_;
  std::optional<Image> q_;
  std::map<std::uint32_t, Image> z_;
};

inline MultiPoly substitute(const MultiPoly& p, const Substitution& s) { return s.apply(p); }

struct EvalPoint {
  Integer x = 1;
  Integer y = 1;
  Rational q = 1;
  std::map<std::uint32_t, Integer> z;
  Integer z_default = 1;
};

/// Exact value at a point. Throws std::domain_error if q = 0 and a term has a
/// negative q exponent.
Rational evaluate(const MultiPoly& p, const EvalPoint& at);

std::string canonical_text(const MultiPoly& p);
std::string latex_text(const MultiPoly& p);
nlohmann::json to_json(const MultiPoly& p);
/// Inverse of canonical_text (whitespace tolerant). Throws std::invalid_argument.
MultiPoly parse_poly(std::string_view text);

std::string to_string(const Integer& v);

}  // namespace fibstat
