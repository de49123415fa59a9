#pragma once

#include <compare>
#include <functional>
#include <map>
#include <vector>

#include "cohen/scalar.hpp"

namespace cohen {

/// Exponent pair: q^q p^p (phase space) or qh^q ph^p (standard-ordered operator).
struct Monomial {
  int q = 0;
  int p = 0;

  int degree() const noexcept { return q + p; }
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

struct CommutingTag {};
struct StandardOrderedTag {};

/// Sparse polynomial in two variables with graded exact coefficients.
///
/// The tag only selects the multiplication rule; storage, linear structure and
/// equality are shared. Terms are kept in descending (q, p) order, which is also
/// the canonical rendering order. Zero coefficients are never stored.
template <class Tag>
class Polynomial {
 public:
  using Map = std::map<Monomial, ScalarSum, std::greater<>>;

  Polynomial() = default;

  static Polynomial monomial(int q, int p, ScalarSum c = ScalarSum(1)) {
    Polynomial out;
    out.add_term({q, p}, c);
    return out;
  }
  static Polynomial constant(ScalarSum c) { return monomial(0, 0, std::move(c)); }

  const Map& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  /// Largest total degree q + p, or -1 for the zero polynomial.
  int degree() const {
    int d = -1;
    for (const auto& [mono, c] : terms_) d = std::max(d, mono.degree());
    return d;
  }

  ScalarSum coefficient(Monomial mono) const {
    auto it = terms_.find(mono);
    return it == terms_.end() ? ScalarSum{} : it->second;
  }

  void add_term(Monomial mono, const ScalarSum& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(mono, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }

  /// Coefficient-wise complex conjugate (hbar and 2 pi are real).
  Polynomial conj() const {
    Polynomial out;
    for (const auto& [mono, c] : terms_) out.terms_.emplace(mono, c.conj());
    return out;
  }

  Polynomial& operator+=(const Polynomial& o) {
    for (const auto& [mono, c] : o.terms_) add_term(mono, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    for (const auto& [mono, c] : o.terms_) add_term(mono, -c);
    return *this;
  }
  Polynomial& operator*=(const ScalarSum& s) {
    Polynomial out;
    for (const auto& [mono, c] : terms_) out.add_term(mono, c * s);
    return *this = std::move(out);
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(const Polynomial& a) {
    Polynomial out;
    for (const auto& [mono, c] : a.terms_) out.terms_.emplace(mono, -c);
    return out;
  }
  friend Polynomial operator*(Polynomial a, const ScalarSum& s) { return a *= s; }
  friend Polynomial operator*(const ScalarSum& s, Polynomial a) { return a *= s; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

 private:
  Map terms_;
};

/// Commutative polynomial sum c_nm q^n p^m.
using PhasePoly = Polynomial<CommutingTag>;
/// Operator polynomial sum c_nm qh^n ph^m, always in standard order (qh left of ph).
using OperatorPoly = Polynomial<StandardOrderedTag>;

PhasePoly operator*(const PhasePoly& a, const PhasePoly& b);
/// Noncommutative product, re-normal-ordered with [qh, ph] = i hbar.
OperatorPoly operator*(const OperatorPoly& a, const OperatorPoly& b);

PhasePoly pow(const PhasePoly& base, int exponent);
OperatorPoly pow(const OperatorPoly& base, int exponent);

enum class Letter { q, p };

struct Run {
  Letter letter;
  int power;
};

/// Arbitrary product of qh- and ph-runs, e.g. qh^j ph^k qh^l, with a coefficient.
struct OperatorWord {
  Scalar coefficient{GaussianRational(1), {}};
  std::vector<Run> runs;
};

/// Rewrites a word into standard order using ph qh = qh ph - i hbar.
OperatorPoly standard_order(const OperatorWord& word);

/// Standard-ordered form of ph^m qh^n:
/// sum_k (-i hbar)^k k! C(m,k) C(n,k) qh^(n-k) ph^(m-k).
OperatorPoly reorder_pq(int m, int n);

/// Hermitian adjoint: conjugated coefficients, reversed words, re-ordered.
OperatorPoly adjoint(const OperatorPoly& a);

}  // namespace cohen
