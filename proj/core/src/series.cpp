#include "cohen/series.hpp"

#include "cohen/errors.hpp"

namespace cohen {

namespace {

const ScalarSum kZero{};

void check_order(int order) {
  if (order < 0) throw OrderError("series order must be nonnegative");
}

}  // namespace

ThetaSeries::ThetaSeries(int order) : order_(order) {
  check_order(order);
  c_.resize(static_cast<std::size_t>(order) + 1);
}

ThetaSeries ThetaSeries::one(int order) {
  ThetaSeries s(order);
  s.c_[0] = ScalarSum(1);
  return s;
}

const ScalarSum& ThetaSeries::coefficient(int j) const {
  if (j < 0) return kZero;
  if (j > order_) {
    throw OrderError("theta coefficient " + std::to_string(j) + " beyond series order " +
                     std::to_string(order_));
  }
  return c_[static_cast<std::size_t>(j)];
}

void ThetaSeries::set(int j, ScalarSum c) {
  if (j < 0 || j > order_) throw OrderError("theta coefficient index out of range");
  c_[static_cast<std::size_t>(j)] = std::move(c);
}

bool ThetaSeries::is_zero() const {
  for (const auto& c : c_)
    if (!c.is_zero()) return false;
  return true;
}

ThetaSeries ThetaSeries::truncated(int order) const {
  if (order > order_) {
    throw OrderError("cannot extend theta series from order " + std::to_string(order_) + " to " +
                     std::to_string(order));
  }
  ThetaSeries out(order);
  for (int j = 0; j <= order; ++j) out.c_[j] = c_[j];
  return out;
}

ScalarSum ThetaSeries::derivative_at_zero(int k) const {
  return coefficient(k) * GaussianRational(factorial(k));
}

ThetaSeries ThetaSeries::inverse() const {
  if (!c_[0].is_one()) throw KernelError("theta series inverse requires unit constant term");
  ThetaSeries out(order_);
  out.c_[0] = ScalarSum(1);
  for (int j = 1; j <= order_; ++j) {
    ScalarSum acc;
    for (int a = 1; a <= j; ++a) {
      if (c_[a].is_zero() || out.c_[j - a].is_zero()) continue;
      acc += c_[a] * out.c_[j - a];
    }
    out.c_[j] = -acc;
  }
  return out;
}

ThetaSeries ThetaSeries::pow(int exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  ThetaSeries result = ThetaSeries::one(order_);
  for (int e = 0; e < exponent; ++e) result = result * *this;
  return result;
}

ThetaSeries& ThetaSeries::operator+=(const ThetaSeries& o) {
  if (o.order_ < order_) *this = truncated(o.order_);
  for (int j = 0; j <= order_; ++j) c_[j] += o.c_[j];
  return *this;
}

ThetaSeries& ThetaSeries::operator-=(const ThetaSeries& o) {
  if (o.order_ < order_) *this = truncated(o.order_);
  for (int j = 0; j <= order_; ++j) c_[j] -= o.c_[j];
  return *this;
}

ThetaSeries& ThetaSeries::operator*=(const ScalarSum& s) {
  for (auto& c : c_) c = c * s;
  return *this;
}

ThetaSeries operator*(const ThetaSeries& a, const ThetaSeries& b) {
  int order = std::min(a.order_, b.order_);
  ThetaSeries out(order);
  for (int i = 0; i <= order; ++i) {
    if (a.c_[i].is_zero()) continue;
    for (int j = 0; i + j <= order; ++j) {
      if (b.c_[j].is_zero()) continue;
      out.c_[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return out;
}

KernelSeries::KernelSeries(int order, bool marginal) : order_(order), marginal_(marginal) {
  check_order(order);
  auto n = static_cast<std::size_t>(order) + 1;
  c_.resize(n * (n + 1) / 2);
}

KernelSeries KernelSeries::one(int order) {
  KernelSeries s(order, true);
  s.set(0, 0, ScalarSum(1));
  return s;
}

std::size_t KernelSeries::index(int j, int k) const {
  auto d = static_cast<std::size_t>(j + k);
  return d * (d + 1) / 2 + static_cast<std::size_t>(k);
}

const ScalarSum& KernelSeries::coefficient(int j, int k) const {
  if (j < 0 || k < 0) return kZero;
  if (j + k > order_) {
    throw OrderError("coefficient theta^" + std::to_string(j) + " tau^" + std::to_string(k) +
                     " beyond series order " + std::to_string(order_));
  }
  return c_[index(j, k)];
}

void KernelSeries::set(int j, int k, ScalarSum c) {
  if (j < 0 || k < 0 || j + k > order_) throw OrderError("kernel coefficient index out of range");
  c_[index(j, k)] = std::move(c);
}

ThetaSeries KernelSeries::tau_slice(int k) const {
  if (k > order_) {
    throw OrderError("tau order " + std::to_string(k) + " beyond series order " +
                     std::to_string(order_));
  }
  ThetaSeries out(order_ - k);
  for (int j = 0; j + k <= order_; ++j) out.set(j, c_[index(j, k)]);
  return out;
}

bool KernelSeries::data_satisfies_marginal_condition() const {
  for (int d = 1; d <= order_; ++d)
    if (!c_[index(d, 0)].is_zero() || !c_[index(0, d)].is_zero()) return false;
  return true;
}

KernelSeries KernelSeries::truncated(int order) const {
  if (order > order_) {
    throw OrderError("cannot extend kernel series from order " + std::to_string(order_) + " to " +
                     std::to_string(order));
  }
  KernelSeries out(order, marginal_);
  for (int d = 0; d <= order; ++d)
    for (int k = 0; k <= d; ++k) out.c_[out.index(d - k, k)] = c_[index(d - k, k)];
  return out;
}

KernelSeries& KernelSeries::operator+=(const KernelSeries& o) {
  if (o.order_ < order_) *this = truncated(o.order_);
  for (int d = 0; d <= order_; ++d)
    for (int k = 0; k <= d; ++k) c_[index(d - k, k)] += o.c_[o.index(d - k, k)];
  marginal_ = false;
  return *this;
}

KernelSeries& KernelSeries::operator*=(const ScalarSum& s) {
  for (auto& c : c_) c = c * s;
  marginal_ = false;
  return *this;
}

KernelSeries operator*(const KernelSeries& a, const KernelSeries& b) {
  int order = std::min(a.order_, b.order_);
  KernelSeries out(order, a.marginal_ && b.marginal_);
  for (int d1 = 0; d1 <= order; ++d1) {
    for (int k1 = 0; k1 <= d1; ++k1) {
      const ScalarSum& ca = a.c_[a.index(d1 - k1, k1)];
      if (ca.is_zero()) continue;
      for (int d2 = 0; d1 + d2 <= order; ++d2) {
        for (int k2 = 0; k2 <= d2; ++k2) {
          const ScalarSum& cb = b.c_[b.index(d2 - k2, k2)];
          if (cb.is_zero()) continue;
          out.c_[out.index(d1 - k1 + d2 - k2, k1 + k2)] += ca * cb;
        }
      }
    }
  }
  return out;
}

}  // namespace cohen
