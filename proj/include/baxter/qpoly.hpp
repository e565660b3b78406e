#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <string>
#include <vector>

#include "baxter/errors.hpp"

namespace baxter {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Int r = 1;
  for (int i = 0; i < k; ++i) {
    r *= (n - i);
    r /= (i + 1);
  }
  return r;
}

// Dense univariate polynomial with exact integer coefficients; index =
// exponent, highest stored coefficient nonzero.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  IntPolynomial(Int constant) {  // NOLINT: implicit by design
    if (constant != 0) c_.push_back(std::move(constant));
  }
  IntPolynomial(int constant) : IntPolynomial(Int(constant)) {}
  explicit IntPolynomial(std::vector<Int> coeffs) : c_(std::move(coeffs)) {
    normalize();
  }

  static IntPolynomial monomial(Int coeff, int exp) {
    if (coeff == 0) return {};
    std::vector<Int> c(static_cast<std::size_t>(exp) + 1, Int(0));
    c.back() = std::move(coeff);
    return IntPolynomial(std::move(c));
  }

  // [m]_q = 1 + q + ... + q^{m-1}.
  static IntPolynomial q_integer(int m) {
    return IntPolynomial(std::vector<Int>(static_cast<std::size_t>(m), Int(1)));
  }

  // 1 - q^s.
  static IntPolynomial one_minus_q_pow(int s) {
    std::vector<Int> c(static_cast<std::size_t>(s) + 1, Int(0));
    c[0] = 1;
    c.back() = -1;
    return IntPolynomial(std::move(c));
  }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Int coeff(int e) const {
    if (e < 0 || e >= static_cast<int>(c_.size())) return 0;
    return c_[static_cast<std::size_t>(e)];
  }
  const std::vector<Int>& coeffs() const { return c_; }

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<Int> c(std::max(a.c_.size(), b.c_.size()), Int(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return IntPolynomial(std::move(c));
  }
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<Int> c(std::max(a.c_.size(), b.c_.size()), Int(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
    return IntPolynomial(std::move(c));
  }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Int> c(a.c_.size() + b.c_.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return IntPolynomial(std::move(c));
  }
  IntPolynomial& operator+=(const IntPolynomial& o) { return *this = *this + o; }
  IntPolynomial& operator-=(const IntPolynomial& o) { return *this = *this - o; }
  IntPolynomial& operator*=(const IntPolynomial& o) { return *this = *this * o; }

  // Long division that must leave remainder zero; every step must divide
  // exactly over the integers.
  IntPolynomial divide_exact(const IntPolynomial& d) const {
    if (d.is_zero()) fail(errc::non_exact_division, "division by zero polynomial");
    if (is_zero()) return {};
    if (degree() < d.degree())
      fail(errc::non_exact_division, "degree too small for exact division");
    std::vector<Int> rem = c_;
    std::vector<Int> quot(c_.size() - d.c_.size() + 1, Int(0));
    const Int& lead = d.c_.back();
    for (int i = static_cast<int>(rem.size()) - 1;
         i >= static_cast<int>(d.c_.size()) - 1; --i) {
      Int& top = rem[static_cast<std::size_t>(i)];
      if (top == 0) continue;
      if (top % lead != 0)
        fail(errc::non_exact_division, "leading coefficient does not divide");
      Int q = top / lead;
      int shift = i - (static_cast<int>(d.c_.size()) - 1);
      for (std::size_t j = 0; j < d.c_.size(); ++j)
        rem[static_cast<std::size_t>(shift) + j] -= q * d.c_[j];
      quot[static_cast<std::size_t>(shift)] = std::move(q);
    }
    for (const Int& x : rem)
      if (x != 0) fail(errc::non_exact_division, "nonzero remainder");
    return IntPolynomial(std::move(quot));
  }

  Int eval(const Int& x) const {
    Int acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }
  Int at_one() const { return eval(1); }
  Int at_minus_one() const { return eval(-1); }

  bool is_palindromic() const {
    if (is_zero()) return true;
    for (std::size_t i = 0, j = c_.size() - 1; i < j; ++i, --j)
      if (c_[i] != c_[j]) return false;
    return true;
  }

  bool has_nonnegative_coeffs() const {
    for (const Int& x : c_)
      if (x < 0) return false;
    return true;
  }

  // Multiply by q^s.
  IntPolynomial shifted(int s) const {
    if (is_zero() || s == 0) return *this;
    std::vector<Int> c(c_.size() + static_cast<std::size_t>(s), Int(0));
    std::copy(c_.begin(), c_.end(), c.begin() + s);
    return IntPolynomial(std::move(c));
  }

  std::vector<std::string> coeff_strings() const {
    std::vector<std::string> out;
    out.reserve(c_.size());
    for (const Int& x : c_) out.push_back(x.str());
    return out;
  }

  std::string str() const {
    if (is_zero()) return "0";
    std::string out;
    for (int e = 0; e <= degree(); ++e) {
      if (coeff(e) == 0) continue;
      if (!out.empty()) out += " + ";
      out += coeff(e).str();
      if (e > 0) out += "*q^" + std::to_string(e);
    }
    return out;
  }

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  void normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Int> c_;
};

// Gaussian binomial via the exact recurrence
// qbin(n,k) = qbin(n-1,k-1) + q^k * qbin(n-1,k).
inline IntPolynomial qbinomial(int n, int k) {
  if (k < 0 || k > n) return {};
  std::vector<IntPolynomial> row(static_cast<std::size_t>(k) + 1);
  row[0] = 1;
  for (int m = 1; m <= n; ++m)
    for (int j = std::min(m, k); j >= 1; --j)
      row[static_cast<std::size_t>(j)] =
          row[static_cast<std::size_t>(j - 1)] +
          row[static_cast<std::size_t>(j)].shifted(j);
  return row[static_cast<std::size_t>(k)];
}

// The q-count of the order-(k,l) Baxter objects:
// qbin(n+1,k) qbin(n+1,k+1) qbin(n+1,k+2) / (qbin(n+1,1) qbin(n+1,2)),
// n = k+l+1; always divides exactly.
inline IntPolynomial theta_q(int k, int l) {
  if (k < 0 || l < 0) fail(errc::malformed, "k and l must be >= 0");
  int n = k + l + 1;
  IntPolynomial num = qbinomial(n + 1, k) * qbinomial(n + 1, k + 1) *
                      qbinomial(n + 1, k + 2);
  IntPolynomial den = qbinomial(n + 1, 1) * qbinomial(n + 1, 2);
  return num.divide_exact(den);
}

inline Int theta(int k, int l) { return theta_q(k, l).at_one(); }

inline Int baxter_number(int n) {
  Int b = 0;
  for (int k = 0; k < n; ++k) b += theta(k, n - 1 - k);
  return b;
}

// Generating function of plane partitions in an a x b x c box by volume.
inline IntPolynomial macmahon_q(int a, int b, int c) {
  if (a < 0 || b < 0 || c < 0) fail(errc::malformed, "box must be non-negative");
  IntPolynomial num = 1, den = 1;
  for (int i = 1; i <= a; ++i)
    for (int j = 1; j <= b; ++j)
      for (int k = 1; k <= c; ++k) {
        num *= IntPolynomial::q_integer(i + j + k - 1);
        den *= IntPolynomial::q_integer(i + j + k - 2);
      }
  return num.divide_exact(den);
}

// Involution-fixed count: theta_q at q = -1.
inline Int fixed_count(int k, int l) { return theta_q(k, l).at_minus_one(); }

namespace detail {
inline Int rational_to_int(const Rat& r, const char* what) {
  if (boost::multiprecision::denominator(r) != 1)
    fail(errc::non_integer_result, what);
  return boost::multiprecision::numerator(r);
}

// Even/even summation: for k = 2K, l = 2L, N = K+L,
// sum_r 2 r^3 / ((N+1)(N+2)^2) C(N+2,K+1) C(N+2,K-r+1) C(N+2,K+r+1).
inline Rat fixed_sum_even_even(int K, int L) {
  int N = K + L;
  Rat total = 0;
  for (int r = 1; r <= N + 1; ++r) {
    Int b1 = binomial(N + 2, K + 1);
    Int b2 = binomial(N + 2, K - r + 1);
    Int b3 = binomial(N + 2, K + r + 1);
    if (b2 == 0 || b3 == 0) continue;
    Rat term(2 * Int(r) * r * r * b1 * b2 * b3,
             Int(N + 1) * (N + 2) * (N + 2));
    total += term;
  }
  return total;
}

// Odd/even summation: for k = 2K+1, l = 2L, N = K+L, the even/even value
// plus sum_{r>=1} (L-r+1) r (r+1)(2r+1) / ((K+2+r)(N+1)(N+2)^2) * (same
// binomial product).
inline Rat fixed_sum_odd_even(int K, int L) {
  int N = K + L;
  Rat total = fixed_sum_even_even(K, L);
  for (int r = 1; r <= N + 1; ++r) {
    Int b1 = binomial(N + 2, K + 1);
    Int b2 = binomial(N + 2, K - r + 1);
    Int b3 = binomial(N + 2, K + r + 1);
    if (b2 == 0 || b3 == 0) continue;
    Rat term(Int(L - r + 1) * r * (r + 1) * (2 * r + 1) * b1 * b2 * b3,
             Int(K + 2 + r) * (N + 1) * (N + 2) * (N + 2));
    total += term;
  }
  return total;
}
}  // namespace detail

// Fixed-point counts from the parity case analysis (summation forms).
inline Int ffon_fixed(int k, int l) {
  if (k < 0 || l < 0) fail(errc::malformed, "k and l must be >= 0");
  bool ko = k % 2, lo = l % 2;
  if (ko && lo) return 0;
  Rat value;
  if (!ko && !lo) value = detail::fixed_sum_even_even(k / 2, l / 2);
  else if (ko && !lo) value = detail::fixed_sum_odd_even((k - 1) / 2, l / 2);
  else value = detail::fixed_sum_odd_even((l - 1) / 2, k / 2);  // swap k and l
  return detail::rational_to_int(value, "fixed-point sum is not an integer");
}

// Closed forms for the same counts. The odd/even closed form has two
// variants: `corrected` (default) passes the oracle everywhere we can test;
// `as_published` reproduces a formula known to disagree at (k,l) = (1,2).
enum class OddEvenClosedForm { corrected, as_published };

inline Rat ffon_fixed_closed(int k, int l,
                             OddEvenClosedForm variant = OddEvenClosedForm::corrected) {
  if (k < 0 || l < 0) fail(errc::malformed, "k and l must be >= 0");
  bool ko = k % 2, lo = l % 2;
  if (ko && lo) return 0;
  if (!ko && !lo) {
    int K = k / 2, L = l / 2, N = K + L;
    return Rat(binomial(N + 1, K) * binomial(N + 1, K + 1) * binomial(N, K),
               Int(N + 1));
  }
  if (!ko && lo) return ffon_fixed_closed(l, k, variant);  // swap rule
  int K = (k - 1) / 2, L = l / 2, N = K + L;
  if (variant == OddEvenClosedForm::as_published)
    return Rat(binomial(N + 1, K) * binomial(N + 1, K) * binomial(N + 1, K + 1),
               Int(N + 1));
  return Rat(binomial(N + 1, K) * binomial(N + 1, L) * binomial(N + 1, K + 1),
             Int(N + 1));
}

// Plane partition counts in a k x l x m box and their shifted q-analogues.
inline IntPolynomial hoggatt_q(int m, int k, int l) {
  return macmahon_q(k, l, m).shifted(m * static_cast<int>(binomial(k + 1, 2)));
}

inline Int hoggatt(int m, int k, int l) { return macmahon_q(k, l, m).at_one(); }

inline IntPolynomial hoggatt_sum_q(int n, int m) {
  IntPolynomial total;
  for (int k = 0; k <= n; ++k) total += hoggatt_q(m, k, n - k);
  return total;
}

inline Int hoggatt_sum(int n, int m) {
  Int total = 0;
  for (int k = 0; k <= n; ++k) total += hoggatt(m, k, n - k);
  return total;
}

// Descent generating function B(n,t) = sum_k theta(k, n-1-k) t^k.
inline IntPolynomial baxter_poly(int n) {
  if (n < 1) fail(errc::malformed, "n must be >= 1");
  std::vector<Int> c;
  c.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) c.push_back(theta(k, n - 1 - k));
  return IntPolynomial(std::move(c));
}

// Coefficients of t^k, each an exact polynomial in q.
class BiPolynomial {
 public:
  BiPolynomial() = default;
  explicit BiPolynomial(std::vector<IntPolynomial> t_coeffs)
      : c_(std::move(t_coeffs)) {
    normalize();
  }

  int t_degree() const { return static_cast<int>(c_.size()) - 1; }
  IntPolynomial t_coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return {};
    return c_[static_cast<std::size_t>(k)];
  }
  const std::vector<IntPolynomial>& t_coeffs() const { return c_; }

  friend BiPolynomial operator+(const BiPolynomial& a, const BiPolynomial& b) {
    std::vector<IntPolynomial> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i)
      c[i] = a.t_coeff(static_cast<int>(i)) + b.t_coeff(static_cast<int>(i));
    return BiPolynomial(std::move(c));
  }

  // Multiply by (1 + t q^s).
  BiPolynomial times_one_plus_tq(int s) const {
    std::vector<IntPolynomial> c(c_.size() + 1);
    for (std::size_t i = 0; i < c_.size(); ++i) {
      c[i] += c_[i];
      c[i + 1] += c_[i].shifted(s);
    }
    return BiPolynomial(std::move(c));
  }

  // Substitute t = q^s, collapsing to a polynomial in q.
  IntPolynomial collapse_t_to_q_pow(int s) const {
    IntPolynomial out;
    for (std::size_t i = 0; i < c_.size(); ++i)
      out += c_[i].shifted(static_cast<int>(i) * s);
    return out;
  }

  // Evaluate q = 1, leaving a polynomial in t.
  IntPolynomial at_q_one() const {
    std::vector<Int> c;
    c.reserve(c_.size());
    for (const IntPolynomial& p : c_) c.push_back(p.at_one());
    return IntPolynomial(std::move(c));
  }

  friend bool operator==(const BiPolynomial&, const BiPolynomial&) = default;

 private:
  void normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<IntPolynomial> c_;
};

// The (t,q) refinement B(n,t,q) = sum_k theta_q(k, n-1-k) q^{3 C(k,2)} t^k.
inline BiPolynomial baxter_poly_tq(int n) {
  if (n < 1) fail(errc::malformed, "n must be >= 1");
  std::vector<IntPolynomial> c;
  c.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k)
    c.push_back(theta_q(k, n - 1 - k)
                    .shifted(3 * static_cast<int>(binomial(k, 2))));
  return BiPolynomial(std::move(c));
}

// Expansion of a palindromic polynomial of degree d over the basis
// t^i (1+t)^{d-2i}; gamma coefficients are integers and unique.
inline std::vector<Int> gamma_expansion(const IntPolynomial& p, int d) {
  if (p.is_zero() || p.degree() != d || !p.is_palindromic())
    fail(errc::not_palindromic, "need a palindromic polynomial of degree d");
  IntPolynomial residual = p;
  std::vector<Int> gamma;
  for (int i = 0; 2 * i <= d; ++i) {
    Int g = residual.coeff(i);
    gamma.push_back(g);
    if (g != 0) {
      std::vector<Int> basis(static_cast<std::size_t>(d - i) + 1, Int(0));
      for (int j = 0; j <= d - 2 * i; ++j)
        basis[static_cast<std::size_t>(i + j)] = g * binomial(d - 2 * i, j);
      residual -= IntPolynomial(std::move(basis));
    }
  }
  if (!residual.is_zero())
    fail(errc::not_palindromic, "expansion did not terminate cleanly");
  return gamma;
}

// Closed form gamma_i = (n+3)_i (1-n)_{2i} / ((1)_i (2)_i (3)_i) with rising
// factorials (x)_j = x (x+1) ... (x+j-1).
inline Rat gamma_closed(int n, int i) {
  if (i < 0 || 2 * i > n - 1) fail(errc::malformed, "need 0 <= i <= (n-1)/2");
  auto rising = [](Int x, int j) {
    Int r = 1;
    for (int m = 0; m < j; ++m) r *= x + m;
    return r;
  };
  Rat num = Rat(rising(Int(n + 3), i) * rising(Int(1 - n), 2 * i));
  Rat den = Rat(rising(1, i) * rising(2, i) * rising(3, i));
  return num / den;
}

// q-analogue: q^{3 C(i,2)} (q^{n-2i};q)_{2i} (q^{n+3};q)_i /
// ((q^3;q)_i (q^2;q)_i (q;q)_i) with (q^s;q)_j = prod (1 - q^{s+m}).
inline IntPolynomial gamma_q(int n, int i) {
  if (i < 0 || 2 * i > n - 1) fail(errc::malformed, "need 0 <= i <= (n-1)/2");
  auto pochhammer = [](int s, int j) {
    IntPolynomial p = 1;
    for (int m = 0; m < j; ++m) p *= IntPolynomial::one_minus_q_pow(s + m);
    return p;
  };
  IntPolynomial num = pochhammer(n - 2 * i, 2 * i) * pochhammer(n + 3, i);
  IntPolynomial den = pochhammer(3, i) * pochhammer(2, i) * pochhammer(1, i);
  return num.divide_exact(den).shifted(3 * static_cast<int>(binomial(i, 2)));
}

// ---- exact real-rootedness via Sturm sequences over the rationals

namespace detail {
using RatPoly = std::vector<Rat>;  // index = exponent, normalized

inline void rp_normalize(RatPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline RatPoly rp_from(const IntPolynomial& p) {
  RatPoly out;
  for (int e = 0; e <= p.degree(); ++e) out.emplace_back(p.coeff(e));
  rp_normalize(out);
  return out;
}

inline RatPoly rp_derivative(const RatPoly& p) {
  RatPoly out;
  for (std::size_t e = 1; e < p.size(); ++e)
    out.push_back(p[e] * static_cast<int>(e));
  rp_normalize(out);
  return out;
}

inline RatPoly rp_rem(RatPoly a, const RatPoly& b) {
  while (a.size() >= b.size() && !a.empty()) {
    Rat f = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    a.pop_back();  // the leading term cancels exactly
    rp_normalize(a);
  }
  return a;
}

inline RatPoly rp_gcd(RatPoly a, RatPoly b) {
  while (!b.empty()) {
    RatPoly r = rp_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

inline RatPoly rp_div(const RatPoly& a, const RatPoly& b) {
  RatPoly rem = a, quot(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rat(0));
  while (rem.size() >= b.size() && !rem.empty()) {
    Rat f = rem.back() / b.back();
    std::size_t shift = rem.size() - b.size();
    quot[shift] = f;
    for (std::size_t i = 0; i < b.size(); ++i) rem[shift + i] -= f * b[i];
    rp_normalize(rem);
  }
  return quot;
}

inline int sign_at_infinity(const RatPoly& p, bool positive) {
  if (p.empty()) return 0;
  int lead = p.back() > 0 ? 1 : -1;
  if (positive) return lead;
  return ((p.size() - 1) % 2 == 0) ? lead : -lead;
}
}  // namespace detail

// True iff every root of p is real (with multiplicity): the square-free part
// must have as many distinct real roots as its degree.
inline bool is_real_rooted(const IntPolynomial& p) {
  if (p.is_zero()) fail(errc::malformed, "zero polynomial");
  if (p.degree() <= 1) return true;
  detail::RatPoly f = detail::rp_from(p);
  detail::RatPoly g = detail::rp_gcd(f, detail::rp_derivative(f));
  detail::RatPoly s = g.size() <= 1 ? f : detail::rp_div(f, g);
  int target = static_cast<int>(s.size()) - 1;
  if (target <= 1) return true;
  // Sturm chain of the square-free part.
  std::vector<detail::RatPoly> chain{s, detail::rp_derivative(s)};
  while (!chain.back().empty() && chain.back().size() > 1) {
    detail::RatPoly r = detail::rp_rem(chain[chain.size() - 2], chain.back());
    for (Rat& x : r) x = -x;
    detail::rp_normalize(r);
    if (r.empty()) break;
    chain.push_back(std::move(r));
  }
  auto variations = [&](bool positive) {
    int count = 0, prev = 0;
    for (const auto& q : chain) {
      int sgn = detail::sign_at_infinity(q, positive);
      if (sgn == 0) continue;
      if (prev != 0 && sgn != prev) ++count;
      prev = sgn;
    }
    return count;
  };
  int real_roots = variations(false) - variations(true);
  return real_roots == target;
}

}  // namespace baxter
