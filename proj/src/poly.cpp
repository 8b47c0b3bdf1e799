#include "fibstat/poly.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace fibstat {

namespace {

std::uint32_t checked_u32(std::int64_t v, const char* what) {
  if (v < 0) throw std::domain_error(std::string("negative exponent for ") + what);
  if (v > std::numeric_limits<std::uint32_t>::max())
    throw std::overflow_error(std::string("exponent overflow for ") + what);
  return static_cast<std::uint32_t>(v);
}

std::int32_t checked_i32(std::int64_t v) {
  if (v < std::numeric_limits<std::int32_t>::min() || v > std::numeric_limits<std::int32_t>::max())
    throw std::overflow_error("q exponent overflow");
  return static_cast<std::int32_t>(v);
}

}  // namespace

Monomial::Monomial(std::uint32_t x, std::uint32_t y, std::int32_t q, ZExponents z)
    : x_(x), y_(y), q_(q), z_(std::move(z)) {
  std::erase_if(z_, [](const auto& p) { return p.second == 0; });
  std::sort(z_.begin(), z_.end());
  for (std::size_t i = 0; i < z_.size(); ++i) {
    if (z_[i].first == 0) throw std::invalid_argument("z indices are 1-based");
    if (i > 0 && z_[i].first == z_[i - 1].first)
      throw std::invalid_argument("duplicate z index in monomial");
  }
}

Monomial Monomial::var(Var v, std::int32_t exp) {
  switch (v.kind) {
    case Var::Kind::X: return Monomial(checked_u32(exp, "x"), 0, 0);
    case Var::Kind::Y: return Monomial(0, checked_u32(exp, "y"), 0);
    case Var::Kind::Q: return Monomial(0, 0, exp);
    case Var::Kind::Z: return Monomial(0, 0, 0, {{v.index, checked_u32(exp, "z")}});
  }
  return {};
}

std::uint32_t Monomial::z_exp(std::uint32_t index) const {
  auto it = std::lower_bound(z_.begin(), z_.end(), std::make_pair(index, std::uint32_t{0}));
  return (it != z_.end() && it->first == index) ? it->second : 0;
}

std::int64_t Monomial::exp(Var v) const {
  switch (v.kind) {
    case Var::Kind::X: return x_;
    case Var::Kind::Y: return y_;
    case Var::Kind::Q: return q_;
    case Var::Kind::Z: return z_exp(v.index);
  }
  return 0;
}

Monomial Monomial::operator*(const Monomial& other) const {
  ZExponents z;
  z.reserve(z_.size() + other.z_.size());
  auto a = z_.begin();
  auto b = other.z_.begin();
  while (a != z_.end() || b != other.z_.end()) {
    if (b == other.z_.end() || (a != z_.end() && a->first < b->first)) {
      z.push_back(*a++);
    } else if (a == z_.end() || b->first < a->first) {
      z.push_back(*b++);
    } else {
      z.emplace_back(a->first, checked_u32(std::int64_t{a->second} + b->second, "z"));
      ++a;
      ++b;
    }
  }
  Monomial r;
  r.x_ = checked_u32(std::int64_t{x_} + other.x_, "x");
  r.y_ = checked_u32(std::int64_t{y_} + other.y_, "y");
  r.q_ = checked_i32(std::int64_t{q_} + other.q_);
  r.z_ = std::move(z);
  return r;
}

Monomial Monomial::pow(std::int64_t e) const {
  if (e < 0 && !is_pure_q())
    throw std::domain_error("negative power of a monomial outside the q-Laurent part");
  Monomial r;
  r.x_ = checked_u32(std::int64_t{x_} * e, "x");
  r.y_ = checked_u32(std::int64_t{y_} * e, "y");
  r.q_ = checked_i32(std::int64_t{q_} * e);
  if (e != 0) {
    for (const auto& [i, f] : z_) r.z_.emplace_back(i, checked_u32(std::int64_t{f} * e, "z"));
  }
  return r;
}

bool CanonicalOrder::operator()(const Monomial& a, const Monomial& b) const {
  if (a.q_exp() != b.q_exp()) return a.q_exp() > b.q_exp();
  if (a.x_exp() != b.x_exp()) return a.x_exp() > b.x_exp();
  if (a.y_exp() != b.y_exp()) return a.y_exp() > b.y_exp();
  // Dense z vectors (z1, z2, ...) compared lexicographically, larger first.
  const auto& za = a.z_exps();
  const auto& zb = b.z_exps();
  auto i = za.begin();
  auto j = zb.begin();
  while (i != za.end() || j != zb.end()) {
    std::uint32_t idx;
    if (j == zb.end() || (i != za.end() && i->first < j->first)) {
      idx = i->first;
    } else {
      idx = j->first;
    }
    std::uint32_t ea = (i != za.end() && i->first == idx) ? i->second : 0;
    std::uint32_t eb = (j != zb.end() && j->first == idx) ? j->second : 0;
    if (ea != eb) return ea > eb;
    if (i != za.end() && i->first == idx) ++i;
    if (j != zb.end() && j->first == idx) ++j;
  }
  return false;
}

MultiPoly::MultiPoly(const Integer& c) {
  if (c != 0) terms_.emplace(Monomial{}, c);
}

MultiPoly::MultiPoly(const Monomial& m, const Integer& c) {
  if (c != 0) terms_.emplace(m, c);
}

Integer MultiPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Integer(0) : it->second;
}

std::optional<std::pair<Monomial, Integer>> MultiPoly::single_term() const {
  if (terms_.size() != 1) return std::nullopt;
  return *terms_.begin();
}

void MultiPoly::add_term(const Monomial& m, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& other) {
  *this = *this * other;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly r;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  }
  return r;
}

MultiPoly operator-(MultiPoly a) {
  for (auto& [m, c] : a.terms_) c = -c;
  return a;
}

MultiPoly pow(const MultiPoly& p, unsigned e) {
  MultiPoly result(1);
  MultiPoly base = p;
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e > 0) base *= base;
  }
  return result;
}

// ---------------------------------------------------------------------------
// Substitution

Substitution& Substitution::set(Var v, const MultiPoly& image) {
  auto term = image.single_term();
  if (!term) {
    throw std::invalid_argument("substitution image must be a single monomial, got " +
                                canonical_text(image));
  }
  Image img{term->second, term->first};
  switch (v.kind) {
    case Var::Kind::X: x_ = img; break;
    case Var::Kind::Y: y_ = img; break;
    case Var::Kind::Q: q_ = img; break;
    case Var::Kind::Z:
      if (v.index == 0) throw std::invalid_argument("z indices are 1-based");
      z_.insert_or_assign(v.index, img);
      break;
  }
  return *this;
}

Substitution Substitution::invert_q() {
  Substitution s;
  s.set(Var::q(), Q(-1));
  return s;
}

const Substitution::Image* Substitution::find(Var v) const {
  switch (v.kind) {
    case Var::Kind::X: return x_ ? &*x_ : nullptr;
    case Var::Kind::Y: return y_ ? &*y_ : nullptr;
    case Var::Kind::Q: return q_ ? &*q_ : nullptr;
    case Var::Kind::Z: {
      auto it = z_.find(v.index);
      return it == z_.end() ? nullptr : &it->second;
    }
  }
  return nullptr;
}

MultiPoly Substitution::apply(const MultiPoly& p) const {
  MultiPoly out;
  for (const auto& [mono, coeff] : p.terms()) {
    Integer c = coeff;
    Monomial m;
    auto raise = [&](Var v, std::int64_t e) {
      if (e == 0) return;
      const Image* img = find(v);
      if (!img) {
        m = m * Monomial::var(v, 1).pow(e);
        return;
      }
      if (e < 0) {
        if (abs(img->coeff) != 1 || !img->mono.is_pure_q())
          throw std::domain_error("q is sent to a non-invertible monomial");
        // (+-1)^e == (+-1)^(-e)
        if (img->coeff < 0 && (e % 2 != 0)) c = -c;
        m = m * img->mono.pow(e);
        return;
      }
      c *= boost::multiprecision::pow(img->coeff, static_cast<unsigned>(e));
      m = m * img->mono.pow(e);
    };
    raise(Var::x(), mono.x_exp());
    raise(Var::y(), mono.y_exp());
    raise(Var::q(), mono.q_exp());
    for (const auto& [i, f] : mono.z_exps()) raise(Var::z(i), f);
    out.add_term(m, c);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Evaluation

namespace {

Rational rpow(const Rational& base, std::int64_t e) {
  if (e == 0) return 1;
  if (e < 0) {
    if (base == 0) throw std::domain_error("division by zero: q = 0 with a negative q exponent");
    return Rational(1) / rpow(base, -e);
  }
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  Integer num = boost::multiprecision::pow(numerator(base), static_cast<unsigned>(e));
  Integer den = boost::multiprecision::pow(denominator(base), static_cast<unsigned>(e));
  return Rational(num, den);
}

}  // namespace

Rational evaluate(const MultiPoly& p, const EvalPoint& at) {
  Rational sum = 0;
  for (const auto& [m, c] : p.terms()) {
    Rational t = c;
    t *= boost::multiprecision::pow(at.x, m.x_exp());
    t *= boost::multiprecision::pow(at.y, m.y_exp());
    t *= rpow(at.q, m.q_exp());
    for (const auto& [i, f] : m.z_exps()) {
      auto it = at.z.find(i);
      const Integer& zv = it == at.z.end() ? at.z_default : it->second;
      t *= boost::multiprecision::pow(zv, f);
    }
    sum += t;
  }
  return sum;
}

// ---------------------------------------------------------------------------
// Rendering and parsing

std::string to_string(const Integer& v) { return v.str(); }

namespace {

// Factors of a monomial in rendering order: x, y, q, then z by index.
template <class Emit>
void for_each_factor(const Monomial& m, Emit&& emit) {
  if (m.x_exp() != 0) emit(std::string("x"), std::int64_t{m.x_exp()});
  if (m.y_exp() != 0) emit(std::string("y"), std::int64_t{m.y_exp()});
  if (m.q_exp() != 0) emit(std::string("q"), std::int64_t{m.q_exp()});
  for (const auto& [i, f] : m.z_exps()) emit("z" + std::to_string(i), std::int64_t{f});
}

}  // namespace

std::string canonical_text(const MultiPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    bool negative = c < 0;
    Integer magnitude = negative ? Integer(-c) : c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::vector<std::string> factors;
    if (magnitude != 1 || m.is_one()) factors.push_back(magnitude.str());
    for_each_factor(m, [&](const std::string& name, std::int64_t e) {
      factors.push_back(e == 1 ? name : name + "^" + std::to_string(e));
    });
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i > 0) out += "*";
      out += factors[i];
    }
  }
  return out;
}

std::string latex_text(const MultiPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    bool negative = c < 0;
    Integer magnitude = negative ? Integer(-c) : c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (magnitude != 1 || m.is_one()) out += magnitude.str();
    for_each_factor(m, [&](const std::string& name, std::int64_t e) {
      std::string base = name[0] == 'z' ? "z_{" + name.substr(1) + "}" : name;
      out += e == 1 ? base : base + "^{" + std::to_string(e) + "}";
    });
  }
  return out;
}

nlohmann::json to_json(const MultiPoly& p) {
  auto arr = nlohmann::json::array();
  for (const auto& [m, c] : p.terms()) {
    auto z = nlohmann::json::array();
    for (const auto& [i, f] : m.z_exps()) z.push_back({i, f});
    arr.push_back({{"coeff", c.str()}, {"x", m.x_exp()}, {"y", m.y_exp()}, {"q", m.q_exp()}, {"z", z}});
  }
  return arr;
}

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view s) : s_(s) {}

  MultiPoly parse() {
    skip();
    MultiPoly result;
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
      skip();
    }
    result += term_poly(negative);
    for (;;) {
      skip();
      if (pos_ == s_.size()) break;
      char op = s_[pos_];
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      ++pos_;
      skip();
      result += term_poly(op == '-');
    }
    return result;
  }

 private:
  struct Term {
    Monomial m;
    Integer c;
  };

  Term term(bool negative) {
    Integer c = 1;
    Monomial m;
    bool any = false;
    for (;;) {
      skip();
      char ch = peek();
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        c *= number();
      } else if (ch == 'x' || ch == 'y' || ch == 'q' || ch == 'z') {
        ++pos_;
        Var v = ch == 'x' ? Var::x() : ch == 'y' ? Var::y() : Var::q();
        if (ch == 'z') {
          Integer idx = number();
          v = Var::z(static_cast<std::uint32_t>(idx));
        }
        std::int64_t e = 1;
        skip();
        if (peek() == '^') {
          ++pos_;
          skip();
          bool neg = false;
          if (peek() == '-') {
            neg = true;
            ++pos_;
          }
          e = static_cast<std::int64_t>(number());
          if (neg) e = -e;
        }
        if (e < 0 && v.kind != Var::Kind::Q) fail("only q may carry a negative exponent");
        m = m * Monomial::var(v, 1).pow(e);
      } else {
        fail("expected a coefficient or variable");
      }
      any = true;
      skip();
      if (peek() == '*') {
        ++pos_;
        continue;
      }
      break;
    }
    if (!any) fail("empty term");
    return {m, negative ? Integer(-c) : c};
  }

  MultiPoly term_poly(bool negative) {
    auto t = term(negative);
    return MultiPoly(t.m, t.c);
  }

  Integer number() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return Integer(std::string(s_.substr(start, pos_ - start)));
  }

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    std::ostringstream os;
    os << "cannot parse polynomial at offset " << pos_ << ": " << what;
    throw std::invalid_argument(os.str());
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly parse_poly(std::string_view text) {
  PolyParser parser(text);
  std::size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  std::size_t j = text.size();
  while (j > i && std::isspace(static_cast<unsigned char>(text[j - 1]))) --j;
  if (text.substr(i, j - i) == "0") return {};
  return parser.parse();
}

}  // namespace fibstat
