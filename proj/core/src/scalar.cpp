#include "cohen/scalar.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "cohen/errors.hpp"

namespace cohen {

GaussianRational::GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

GaussianRational GaussianRational::reciprocal() const {
  if (is_zero()) throw DomainError("reciprocal of zero");
  Rational norm = re_ * re_ + im_ * im_;
  return {re_ / norm, -im_ / norm};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational i_pow(long k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
  }
}

ScalarSum::ScalarSum(GaussianRational value, Grade grade) {
  if (!value.is_zero()) terms_.emplace(grade, std::move(value));
}

bool ScalarSum::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == Grade{} && terms_.begin()->second.is_one();
}

GaussianRational ScalarSum::at(Grade g) const {
  auto it = terms_.find(g);
  return it == terms_.end() ? GaussianRational{} : it->second;
}

std::optional<Scalar> ScalarSum::as_scalar() const {
  if (terms_.size() != 1) return std::nullopt;
  return Scalar{terms_.begin()->second, terms_.begin()->first};
}

ScalarSum ScalarSum::conj() const {
  ScalarSum out;
  for (const auto& [g, c] : terms_) out.terms_.emplace(g, c.conj());
  return out;
}

ScalarSum ScalarSum::reciprocal() const {
  auto s = as_scalar();
  if (!s) throw DomainError("only a single graded term can be inverted");
  return {s->value.reciprocal(), Grade{-s->grade.hbar, -s->grade.twopi}};
}

std::complex<double> ScalarSum::evaluate(double hbar) const {
  std::complex<double> sum = 0.0;
  for (const auto& [g, c] : terms_) {
    sum += c.to_complex() * std::pow(hbar, g.hbar) * std::pow(2.0 * std::numbers::pi, g.twopi);
  }
  return sum;
}

void ScalarSum::add(const GaussianRational& value, Grade grade) {
  if (value.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(grade, value);
  if (inserted) return;
  it->second += value;
  if (it->second.is_zero()) terms_.erase(it);
}

ScalarSum& ScalarSum::operator+=(const ScalarSum& o) {
  for (const auto& [g, c] : o.terms_) add(c, g);
  return *this;
}

ScalarSum& ScalarSum::operator-=(const ScalarSum& o) {
  for (const auto& [g, c] : o.terms_) add(-c, g);
  return *this;
}

ScalarSum& ScalarSum::operator*=(const ScalarSum& o) {
  *this = *this * o;
  return *this;
}

ScalarSum& ScalarSum::operator*=(const GaussianRational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [g, v] : terms_) v *= c;
  return *this;
}

ScalarSum operator*(const ScalarSum& a, const ScalarSum& b) {
  ScalarSum out;
  for (const auto& [ga, ca] : a.terms_)
    for (const auto& [gb, cb] : b.terms_) out.add(ca * cb, ga + gb);
  return out;
}

ScalarSum operator-(const ScalarSum& a) {
  ScalarSum out;
  for (const auto& [g, c] : a.terms_) out.terms_.emplace(g, -c);
  return out;
}

Scalar add_same_grade(const Scalar& a, const Scalar& b) {
  if (a.value.is_zero()) return b;
  if (b.value.is_zero()) return a;
  if (a.grade != b.grade) throw DomainError("cannot add scalars of different hbar / 2pi grade");
  Scalar out{a.value + b.value, a.grade};
  if (out.value.is_zero()) out.grade = {};
  return out;
}

Rational factorial(int n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(f);
}

Rational binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(b);
}

std::string to_string(const Rational& r) {
  Rational reduced = r;
  reduced.canonicalize();
  if (reduced.get_den() == 1) return reduced.get_num().get_str();
  return reduced.get_num().get_str() + "/" + reduced.get_den().get_str();
}

}  // namespace cohen
