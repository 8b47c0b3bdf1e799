#include "fibstat/identities.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "fibstat/qfib.hpp"

namespace fibstat {

std::string_view origin_name(ReadingOrigin o) {
  switch (o) {
    case ReadingOrigin::Stated: return "stated";
    case ReadingOrigin::Variant: return "variant";
    case ReadingOrigin::Derived: return "derived";
  }
  return "stated";
}

namespace {

std::int64_t choose2(std::int64_t n) { return n * (n - 1) / 2; }

MultiPoly fi(std::int64_t n) { return n < 0 ? MultiPoly() : qfib_oracle(Family::I, static_cast<std::size_t>(n)); }
MultiPoly fd(std::int64_t n) { return n < 0 ? MultiPoly() : qfib_oracle(Family::D, static_cast<std::size_t>(n)); }
MultiPoly fdp(std::int64_t n) { return n < 0 ? MultiPoly() : qfib_oracle(Family::DPrime, static_cast<std::size_t>(n)); }

// West value attached to permutation size s; sizes below 1 are zero.
MultiPoly west(Family f, std::int64_t size) {
  return size < 1 ? MultiPoly() : qfib_oracle(f, static_cast<std::size_t>(size));
}

MultiPoly q(std::int64_t e) { return Q(static_cast<std::int32_t>(e)); }

// F(x q^a, y q^b, q)
MultiPoly scale_xy(const MultiPoly& p, std::int64_t a, std::int64_t b) {
  Substitution s;
  s.set(Var::x(), term(1, 0, a)).set(Var::y(), term(0, 1, b));
  return s.apply(p);
}

Reading stated(std::string name, std::string description) {
  return {std::move(name), ReadingOrigin::Stated, std::move(description)};
}
Reading variant(std::string name, std::string description) {
  return {std::move(name), ReadingOrigin::Variant, std::move(description)};
}
Reading derived(std::string name, std::string description) {
  return {std::move(name), ReadingOrigin::Derived, std::move(description)};
}

IdentityInfo single(std::string id, std::string statement, int min_n, int max_n, std::vector<Reading> readings,
                    std::function<Sides(std::int64_t, std::size_t)> f, std::string notes = {}) {
  IdentityInfo info;
  info.id = std::move(id);
  info.statement = std::move(statement);
  info.arity = {"n"};
  info.min_n = min_n;
  info.default_max_n = max_n;
  info.readings = std::move(readings);
  info.notes = std::move(notes);
  info.sides = [f = std::move(f)](const Indices& idx, std::size_t r) { return f(idx.at(0), r); };
  return info;
}

// Cycle recursions: the three axes are DD coefficient, subscript, and sum bound.
struct CycleAxes {
  bool dd_q2;
  bool shifted_subscript;
  bool wide_bound;
};

std::vector<std::pair<Reading, CycleAxes>> cycle_readings(bool with_dd_axis) {
  std::vector<std::pair<Reading, CycleAxes>> out;
  for (int dd = 0; dd < (with_dd_axis ? 2 : 1); ++dd) {
    for (int sub = 0; sub < 2; ++sub) {
      for (int bound = 0; bound < 2; ++bound) {
        CycleAxes a{dd == 0, sub == 1, bound == 1};
        std::string name;
        if (with_dd_axis) name += a.dd_q2 ? "dd=y^2*q^2," : "dd=y^2*q,";
        name += a.shifted_subscript ? "sub=n+2-2k," : "sub=n-2k,";
        name += a.wide_bound ? "k<=floor((n+2)/2)" : "k<=floor(n/2)";
        std::string desc = "DD prefix term ";
        desc += with_dd_axis ? (a.dd_q2 ? "y^2*q^2" : "y^2*q") : "y^2*z2^2";
        desc += a.shifted_subscript ? "; sum terms use F_{n+2-2k}" : "; sum terms use F_{n-2k}";
        desc += a.wide_bound ? "; k runs to floor((n+2)/2)" : "; k runs to floor(n/2)";
        bool is_stated = a.dd_q2 && !a.shifted_subscript && !a.wide_bound;
        out.emplace_back(Reading{name, is_stated ? ReadingOrigin::Stated : ReadingOrigin::Variant, desc}, a);
      }
    }
  }
  return out;
}

std::vector<IdentityInfo> build_catalog() {
  std::vector<IdentityInfo> cat;

  cat.push_back(single(
      "T2.1", "F^I_n = x q^{n-1} F^I_{n-1} + y q^{2(n-2)} F^I_{n-2}", 2, 12,
      {stated("as-stated", "recursion over the first letter")}, [](std::int64_t n, std::size_t) {
        return Sides{fi(n), term(1, 0, n - 1) * fi(n - 1) + term(0, 1, 2 * (n - 2)) * fi(n - 2)};
      }));

  cat.push_back(single(
      "T2.2", "F^M_n = x q^{n-1} F^M_{n-1} + y q^{n-2} F^M_{n-2}", 2, 12,
      {stated("as-stated", "recursion over the last letter")}, [](std::int64_t n, std::size_t) {
        auto fm = [](std::int64_t k) { return qfib_oracle(Family::M, static_cast<std::size_t>(k)); };
        return Sides{fm(n), term(1, 0, n - 1) * fm(n - 1) + term(0, 1, n - 2) * fm(n - 2)};
      }));

  cat.push_back(single("L2.3", "F^I_n(x,y,q) = q^{C(n,2)} F^{I'}_n(x,y,1/q)", 0, 12,
                       {stated("as-stated", "reversal maps the reverse layered class onto the layered class")},
                       [](std::int64_t n, std::size_t) {
                         auto rhs = q(choose2(n)) * Substitution::invert_q().apply(
                                                        qfib_oracle(Family::IPrime, static_cast<std::size_t>(n)));
                         return Sides{fi(n), rhs};
                       }));

  cat.push_back(single("L2.4", "F^M_n(x,y,q) = q^{C(n,2)} F^{M'}_n(x,y,1/q)", 0, 12,
                       {stated("as-stated", "same block word, complementary descent sets")},
                       [](std::int64_t n, std::size_t) {
                         auto k = static_cast<std::size_t>(n);
                         auto rhs = q(choose2(n)) * Substitution::invert_q().apply(qfib_oracle(Family::MPrime, k));
                         return Sides{qfib_oracle(Family::M, k), rhs};
                       }));

  cat.push_back(single("T3.1", "F^M_n = F_n (rb over Pi_n(13/2,123))", 0, 9,
                       {stated("as-stated", "right-hand side found by filtering all set partitions")},
                       [](std::int64_t n, std::size_t) {
                         auto k = static_cast<std::size_t>(n);
                         return Sides{qfib_oracle(Family::M, k), rb_distribution_filtered(k)};
                       }));

  cat.push_back(single("T3.3", "F^{M'}_n = F^C_n", 0, 12, {stated("as-stated", "Morse weight equals maj")},
                       [](std::int64_t n, std::size_t) {
                         auto k = static_cast<std::size_t>(n);
                         return Sides{qfib_oracle(Family::MPrime, k), qfib_oracle(Family::C, k)};
                       }));

  {
    IdentityInfo info;
    info.id = "T4.1";
    info.statement =
        "F^I_{m+n} = F^I_m(xq^n, yq^{2n}, q) F^I_n + y q^{2(n-1)} F^I_{m-1}(xq^{n+1}, yq^{2(n+1)}, q) F^I_{n-1}";
    info.arity = {"m", "n"};
    info.min_n = 1;
    info.default_max_n = 14;
    info.default_max_m = 13;
    info.readings = {stated("as-stated", "split at position m")};
    info.notes = "max-n bounds m+n; max-m bounds m";
    info.sides = [](const Indices& idx, std::size_t) {
      std::int64_t m = idx.at(0);
      std::int64_t n = idx.at(1);
      MultiPoly rhs = scale_xy(fi(m), n, 2 * n) * fi(n) +
                      term(0, 1, 2 * (n - 1)) * scale_xy(fi(m - 1), n + 1, 2 * (n + 1)) * fi(n - 1);
      return Sides{fi(m + n), rhs};
    };
    cat.push_back(std::move(info));
  }

  cat.push_back(single("T4.3a", "F^I_n(xq, yq^2, q) = q^n F^I_n(x,y,q)", 0, 12,
                       {stated("as-stated", "phantom fixed point at the end")},
                       [](std::int64_t n, std::size_t) { return Sides{scale_xy(fi(n), 1, 2), q(n) * fi(n)}; }));

  cat.push_back(single("T4.3b", "F^I_n(x,y,q) = q^{C(n,2)} F^I_n(x, y/q, 1)", 0, 12,
                       {stated("as-stated", "each doubleton lowers inv by one")}, [](std::int64_t n, std::size_t) {
                         Substitution s;
                         s.set(Var::y(), term(0, 1, -1)).set(Var::q(), MultiPoly(1));
                         return Sides{fi(n), q(choose2(n)) * s.apply(fi(n))};
                       }));

  cat.push_back(single(
      "CASSINI", "q F_n^2 - F_{n+1} F_{n-1} = (-1)^n y^n q^{(n-1)^2}  (F = F^I)", 1, 12,
      {stated("q*F_n^2", "square of F_n times q"), variant("(q*F_n)^2", "square of q times F_n")},
      [](std::int64_t n, std::size_t r) {
        MultiPoly fn = fi(n);
        MultiPoly square = r == 0 ? Q() * fn * fn : (Q() * fn) * (Q() * fn);
        MultiPoly lhs = square - fi(n + 1) * fi(n - 1);
        MultiPoly rhs = term(0, n, (n - 1) * (n - 1), n % 2 == 0 ? 1 : -1);
        return Sides{lhs, rhs};
      },
      "the printed display has unbalanced parentheses"));

  cat.push_back(single("T4.4",
                       "F^I_{n+2} = x^{n+2} q^{C(n+2,2)} + sum_{j=0}^{n} x^{n-j} y q^{(n^2+3n-j^2+j)/2} F^I_j", 0,
                       12, {stated("as-stated", "split at the first doubleton")}, [](std::int64_t n, std::size_t) {
                         MultiPoly rhs = term(n + 2, 0, choose2(n + 2));
                         for (std::int64_t j = 0; j <= n; ++j) {
                           rhs += term(n - j, 1, (n * n + 3 * n - j * j + j) / 2) * fi(j);
                         }
                         return Sides{fi(n + 2), rhs};
                       }));

  cat.push_back(single("T4.5", "F^I_{2n+1} = sum_{j=0}^{n} x y^j q^{4nj-2j^2+2n-2j} F^I_{2n-2j}", 0, 12,
                       {stated("as-stated", "split at the first singleton")}, [](std::int64_t n, std::size_t) {
                         MultiPoly rhs;
                         for (std::int64_t j = 0; j <= n; ++j) {
                           rhs += term(1, j, 4 * n * j - 2 * j * j + 2 * n - 2 * j) * fi(2 * n - 2 * j);
                         }
                         return Sides{fi(2 * n + 1), rhs};
                       }));

  cat.push_back(single(
      "T4.6", "F^I_{2n} = y^n q^{n(n-1)} + sum_{j=0}^{n-1} x y^j q^{4nj-2j^2-4j+2n-1} F^I_{2n-2j-1}", 0, 12,
      {stated("as-stated", "all-doubleton term y^n q^{n(n-1)}"),
       variant("y^n*q^{2n(n-1)}", "all-doubleton term y^n q^{2n(n-1)}, the inv of the all-doubleton matching")},
      [](std::int64_t n, std::size_t r) {
        MultiPoly rhs = term(0, n, (r == 0 ? 1 : 2) * n * (n - 1));
        for (std::int64_t j = 0; j <= n - 1; ++j) {
          rhs += term(1, j, 4 * n * j - 2 * j * j - 4 * j + 2 * n - 1) * fi(2 * n - 2 * j - 1);
        }
        return Sides{fi(2 * n), rhs};
      }));

  cat.push_back(single("T4.7", "F^I_{n+1} F^I_n = sum_{j=0}^{n} x y^{n-j} q^{(n-j)(n+j-1)+j} (F^I_j)^2", 0, 10,
                       {stated("as-stated", "search both words for the first singleton")},
                       [](std::int64_t n, std::size_t) {
                         MultiPoly rhs;
                         for (std::int64_t j = 0; j <= n; ++j) {
                           MultiPoly f = fi(j);
                           rhs += term(1, n - j, (n - j) * (n + j - 1) + j) * f * f;
                         }
                         return Sides{fi(n + 1) * fi(n), rhs};
                       }));

  {
    auto readings = cycle_readings(true);
    std::vector<Reading> rs;
    std::vector<CycleAxes> axes;
    for (auto& [r, a] : readings) {
      rs.push_back(r);
      axes.push_back(a);
    }
    cat.push_back(single(
        "T5.3",
        "F^D_{n+2} = x^2 q F^D_n + (y^2 q^2 + 2 x^2 y q) F^D_{n-2} + 2 sum_{k=3}^{floor(n/2)} x^2 y^{k-1} q F^D_{n-2k}",
        0, 10, rs,
        [axes](std::int64_t n, std::size_t r) {
          const CycleAxes& a = axes.at(r);
          MultiPoly rhs = term(2, 0, 1) * fd(n) + (term(0, 2, a.dd_q2 ? 2 : 1) + term(2, 1, 1, 2)) * fd(n - 2);
          std::int64_t upper = a.wide_bound ? (n + 2) / 2 : n / 2;
          for (std::int64_t k = 3; k <= upper; ++k) {
            rhs += term(2, k - 1, 1, 2) * fd(a.shifted_subscript ? n + 2 - 2 * k : n - 2 * k);
          }
          return Sides{fd(n + 2), rhs};
        },
        "F at a negative index is 0. Words whose interleaving leaves an odd cycle (for example a lone D) "
        "have no matching term in any reading."));
  }

  {
    auto readings = cycle_readings(false);
    std::vector<Reading> rs;
    std::vector<CycleAxes> axes;
    for (auto& [r, a] : readings) {
      rs.push_back(r);
      axes.push_back(a);
    }
    cat.push_back(single(
        "T5.4",
        "F^{D'}_{n+2} = x^2 z2 F^{D'}_n + (y^2 z2^2 + 2 x^2 y z4) F^{D'}_{n-2} + 2 sum_{k=3}^{floor(n/2)} x^2 "
        "y^{k-1} z_{2k} F^{D'}_{n-2k}",
        0, 10, rs,
        [axes](std::int64_t n, std::size_t r) {
          const CycleAxes& a = axes.at(r);
          MultiPoly rhs = X(2) * Z(2) * fdp(n) + (Y(2) * Z(2, 2) + MultiPoly(2) * X(2) * Y() * Z(4)) * fdp(n - 2);
          std::int64_t upper = a.wide_bound ? (n + 2) / 2 : n / 2;
          for (std::int64_t k = 3; k <= upper; ++k) {
            rhs += MultiPoly(2) * X(2) * Y(static_cast<std::int32_t>(k - 1)) * Z(static_cast<std::uint32_t>(2 * k)) *
                   fdp(a.shifted_subscript ? n + 2 - 2 * k : n - 2 * k);
          }
          return Sides{fdp(n + 2), rhs};
        },
        "F at a negative index is 0."));
  }

  cat.push_back(single(
      "T6.1", "F^{W1}_{2n} = q^{n-1} F^{W1}_{2n-2} + sum_{k=2}^{n} q^{(n-1)(k-1)+C(k,2)} F^{W1}_{2(n-k)}", 2, 10,
      {stated("+C(k,2)", "exponent (n-1)(k-1) + C(k,2)"), variant("-C(k,2)", "exponent (n-1)(k-1) - C(k,2)"),
       derived("gap-insertion",
               "with N = n+1: (q^{N-1} + q^{N-2}) F(N-1) + sum_{k=3}^{N} q^{C(k-2,2)+(k-2)(N-k+1)+N-k} F(N-k+1), "
               "F(s) the size-s polynomial")},
      [](std::int64_t n, std::size_t r) {
        // F_{2j} is the size j+1 polynomial.
        const Family f = Family::W1;
        MultiPoly lhs = west(f, n + 1);
        MultiPoly rhs;
        if (r < 2) {
          rhs = q(n - 1) * west(f, n);
          for (std::int64_t k = 2; k <= n; ++k) {
            std::int64_t e = (n - 1) * (k - 1) + (r == 0 ? choose2(k) : -choose2(k));
            rhs += q(e) * west(f, n - k + 1);
          }
        } else {
          const std::int64_t N = n + 1;
          rhs = (q(N - 1) + q(N - 2)) * west(f, N - 1);
          for (std::int64_t k = 3; k <= N; ++k) {
            rhs += q(choose2(k - 2) + (k - 2) * (N - k + 1) + N - k) * west(f, N - k + 1);
          }
        }
        return Sides{lhs, rhs};
      },
      "F^{W1}_{2n-2} is the size-n polynomial; the base F^{W1}_1 = 1 is read as F^{W1}_0 = 1 (size 1). "
      "Derived readings never decide the verdict."));

  cat.push_back(single(
      "T6.2", "F^{W2}_{2n-2} = (q^{n-1}+1) F^{W2}_{2n-4} + sum_{k=1}^{n-2} q^{k(n-k)} F^{W2}_{2n-2k-4}", 2, 10,
      {stated("k=1..n-2", "sum over k = 1..n-2"), variant("k=2..n-1", "sum over k = 2..n-1"),
       derived("gap-insertion", "(q^{n-1}+1) F_{2n-4} + sum_{k=2}^{n-1} q^{k(n-k)} F_{2n-2k-2}")},
      [](std::int64_t n, std::size_t r) {
        const Family f = Family::W2;
        MultiPoly rhs = (q(n - 1) + 1) * west(f, n - 1);
        if (r < 2) {
          std::int64_t lo = r == 0 ? 1 : 2;
          std::int64_t hi = r == 0 ? n - 2 : n - 1;
          for (std::int64_t k = lo; k <= hi; ++k) rhs += q(k * (n - k)) * west(f, n - k - 1);
        } else {
          for (std::int64_t k = 2; k <= n - 1; ++k) rhs += q(k * (n - k)) * west(f, n - k);
        }
        return Sides{west(f, n), rhs};
      },
      "F^{W2}_{2n-2} is the size-n polynomial; F at a negative index is 0. Derived readings never decide the "
      "verdict."));

  cat.push_back(single(
      "T6.3",
      "F^{W3}_{2n-2} = (q^{n-1}+1) F^{W2}_{2n-4} + sum_{k=1}^{n-2} q^{k(n-k)+C(n-k,2)} F^{W3}_{2k-4}", 2, 10,
      {stated("W2-first,k=1..n-2", "first term uses F^{W2}; sum over k = 1..n-2"),
       variant("W2-first,k=2..n-1", "first term uses F^{W2}; sum over k = 2..n-1"),
       variant("W3-first,k=1..n-2", "first term uses F^{W3}; sum over k = 1..n-2"),
       variant("W3-first,k=2..n-1", "first term uses F^{W3}; sum over k = 2..n-1")},
      [](std::int64_t n, std::size_t r) {
        const Family first = r < 2 ? Family::W2 : Family::W3;
        const bool shifted = r % 2 == 1;
        MultiPoly rhs = (q(n - 1) + 1) * west(first, n - 1);
        std::int64_t lo = shifted ? 2 : 1;
        std::int64_t hi = shifted ? n - 1 : n - 2;
        for (std::int64_t k = lo; k <= hi; ++k) {
          rhs += q(k * (n - k) + choose2(n - k)) * west(Family::W3, k - 1);
        }
        return Sides{west(Family::W3, n), rhs};
      },
      "F^{W3}_{2n-2} is the size-n polynomial; F at a negative index is 0."));

  return cat;
}

bool counts(const Reading& r) { return r.origin != ReadingOrigin::Derived; }

std::string range_text(const IdentityInfo& info, const VerifyOptions& opt) {
  std::ostringstream out;
  int max_n = opt.max_n.value_or(info.default_max_n);
  if (info.arity.size() == 2) {
    int max_m = opt.max_m.value_or(*info.default_max_m);
    out << "m >= " << info.min_n << ", n >= " << info.min_n << ", m <= " << max_m << ", m + n <= " << max_n;
  } else {
    out << "n = " << info.min_n << ".." << max_n;
  }
  return out.str();
}

std::string indices_text(const IdentityInfo& info, const Indices& idx) {
  std::string out;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i > 0) out += ", ";
    out += info.arity[i] + "=" + std::to_string(idx[i]);
  }
  return out;
}

nlohmann::json indices_json(const std::vector<std::string>& names, const Indices& idx) {
  nlohmann::json j = nlohmann::json::object();
  for (std::size_t i = 0; i < idx.size(); ++i) j[names[i]] = idx[i];
  return j;
}

}  // namespace

const std::vector<IdentityInfo>& identity_catalog() {
  static const std::vector<IdentityInfo> cat = build_catalog();
  return cat;
}

const IdentityInfo* find_identity(std::string_view id) {
  for (const auto& info : identity_catalog()) {
    if (info.id == id) return &info;
  }
  return nullptr;
}

std::vector<std::string> identity_ids() {
  std::vector<std::string> out;
  for (const auto& info : identity_catalog()) out.push_back(info.id);
  return out;
}

std::vector<Indices> instance_range(const IdentityInfo& info, const VerifyOptions& opt) {
  std::vector<Indices> out;
  int max_n = opt.max_n.value_or(info.default_max_n);
  if (info.arity.size() == 2) {
    int max_m = opt.max_m.value_or(*info.default_max_m);
    for (int m = info.min_n; m <= max_m; ++m) {
      for (int n = info.min_n; m + n <= max_n; ++n) out.push_back({m, n});
    }
  } else {
    for (int n = info.min_n; n <= max_n; ++n) out.push_back({n});
  }
  return out;
}

IdentityReport verify_identity(std::string_view id, const VerifyOptions& opt) {
  const IdentityInfo* info = find_identity(id);
  if (info == nullptr) throw std::invalid_argument("unknown identity id: " + std::string(id));

  const auto instances = instance_range(*info, opt);
  if (instances.empty()) throw std::invalid_argument("empty range for " + info->id + ": " + range_text(*info, opt));
  const std::size_t nr = info->readings.size();

  // results[i][r] = (holds, lhs, rhs)
  struct Cell {
    bool holds = false;
    MultiPoly lhs;
    MultiPoly rhs;
  };
  std::vector<std::vector<Cell>> results(instances.size(), std::vector<Cell>(nr));

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= instances.size()) return;
      try {
        for (std::size_t r = 0; r < nr; ++r) {
          auto [lhs, rhs] = info->sides(instances[i], r);
          results[i][r].holds = lhs == rhs;
          results[i][r].lhs = std::move(lhs);
          results[i][r].rhs = std::move(rhs);
        }
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = instances.size();
        return;
      }
    }
  };
  unsigned jobs = std::max(1u, std::min<unsigned>(opt.jobs, static_cast<unsigned>(instances.size())));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  IdentityReport report;
  report.id = info->id;
  report.statement = info->statement;
  report.range = range_text(*info, opt);
  report.notes = info->notes;

  for (std::size_t r = 0; r < nr; ++r) {
    ReadingSummary s;
    s.reading = info->readings[r];
    for (const auto& row : results) s.failing += row[r].holds ? 0 : 1;
    s.holds_on_range = s.failing == 0;
    report.readings.push_back(std::move(s));
  }

  std::optional<std::size_t> full;
  for (std::size_t r = 0; r < nr; ++r) {
    if (counts(info->readings[r]) && report.readings[r].holds_on_range) {
      full = r;
      break;
    }
  }
  report.verdict = full.has_value();
  if (full) report.holding_reading = info->readings[*full].name;

  for (std::size_t i = 0; i < instances.size(); ++i) {
    InstanceVerdict v;
    v.indices = instances[i];
    for (std::size_t r = 0; r < nr; ++r) v.reading_holds.push_back(results[i][r].holds);
    if (full) {
      v.holds = true;
      v.reading = info->readings[*full].name;
    } else {
      for (std::size_t r = 0; r < nr; ++r) {
        if (counts(info->readings[r]) && results[i][r].holds) {
          v.holds = true;
          v.reading = info->readings[r].name;
          break;
        }
      }
    }
    report.instances.push_back(std::move(v));
  }

  if (!report.verdict) {
    // Best counted reading: fewest failures, earliest on ties; its first failing instance.
    std::size_t best = nr;
    for (std::size_t r = 0; r < nr; ++r) {
      if (!counts(info->readings[r])) continue;
      if (best == nr || report.readings[r].failing < report.readings[best].failing) best = r;
    }
    for (std::size_t i = 0; i < instances.size(); ++i) {
      if (!results[i][best].holds) {
        report.counterexample = Counterexample{instances[i], info->readings[best].name,
                                               canonical_text(results[i][best].lhs),
                                               canonical_text(results[i][best].rhs)};
        break;
      }
    }
  }
  return report;
}

nlohmann::json to_json(const IdentityReport& r) {
  const IdentityInfo* info = find_identity(r.id);
  nlohmann::json j;
  j["id"] = r.id;
  j["statement"] = r.statement;
  j["range"] = r.range;
  j["readings"] = nlohmann::json::array();
  for (const auto& s : r.readings) {
    j["readings"].push_back({{"name", s.reading.name},
                             {"origin", origin_name(s.reading.origin)},
                             {"description", s.reading.description},
                             {"holds_on_range", s.holds_on_range},
                             {"failing", s.failing}});
  }
  j["instances"] = nlohmann::json::array();
  for (const auto& v : r.instances) {
    nlohmann::json per = nlohmann::json::object();
    for (std::size_t k = 0; k < r.readings.size(); ++k) per[r.readings[k].reading.name] = v.reading_holds[k];
    j["instances"].push_back({{"indices", indices_json(info->arity, v.indices)},
                              {"verdict", v.holds ? "holds" : "fails"},
                              {"reading", v.reading.empty() ? nlohmann::json(nullptr) : nlohmann::json(v.reading)},
                              {"readings", per}});
  }
  j["verdict"] = r.verdict ? "holds" : "fails";
  j["holding_reading"] = r.holding_reading.empty() ? nlohmann::json(nullptr) : nlohmann::json(r.holding_reading);
  if (r.counterexample) {
    j["counterexample"] = {{"indices", indices_json(info->arity, r.counterexample->indices)},
                           {"reading", r.counterexample->reading},
                           {"lhs", r.counterexample->lhs},
                           {"rhs", r.counterexample->rhs}};
  } else {
    j["counterexample"] = nullptr;
  }
  j["notes"] = r.notes;
  return j;
}

std::string to_text(const IdentityReport& r) {
  const IdentityInfo* info = find_identity(r.id);
  std::ostringstream out;
  out << r.id << ": " << (r.verdict ? "HOLDS" : "FAILS") << " on " << r.range;
  if (r.verdict) out << " (reading " << r.holding_reading << ")";
  out << "\n  " << r.statement << "\n";
  for (const auto& s : r.readings) {
    out << "  reading " << s.reading.name << " [" << origin_name(s.reading.origin) << "]: ";
    if (s.holds_on_range) {
      out << "holds on every instance\n";
    } else {
      out << "fails on " << s.failing << " of " << r.instances.size() << " instances\n";
    }
  }
  if (r.counterexample) {
    out << "  counterexample (" << r.counterexample->reading << ") at "
        << indices_text(*info, r.counterexample->indices) << ":\n"
        << "    lhs = " << r.counterexample->lhs << "\n"
        << "    rhs = " << r.counterexample->rhs << "\n";
  }
  if (!r.notes.empty()) out << "  note: " << r.notes << "\n";
  return out.str();
}

}  // namespace fibstat
