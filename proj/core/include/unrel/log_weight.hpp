#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>

namespace unrel {

/// Nonnegative real stored as its natural logarithm; -inf encodes zero.
/// The very reliable regime produces weights like p^c that underflow doubles.
class LogWeight {
 public:
  constexpr LogWeight() = default;

  static constexpr LogWeight zero() { return LogWeight(); }
  static constexpr LogWeight one() { return from_log(0.0); }
  static constexpr LogWeight from_log(double log_value) {
    LogWeight w;
    w.log_ = log_value;
    return w;
  }
  static LogWeight from_linear(double value) {
    return value > 0.0 ? from_log(std::log(value)) : zero();
  }

  constexpr double log() const { return log_; }
  double log10() const { return log_ / std::log(10.0); }
  double linear() const { return std::exp(log_); }
  constexpr bool is_zero() const { return log_ == -std::numeric_limits<double>::infinity(); }

  friend LogWeight operator*(LogWeight a, LogWeight b) {
    if (a.is_zero() || b.is_zero()) return zero();
    return from_log(a.log_ + b.log_);
  }
  friend LogWeight operator/(LogWeight a, LogWeight b) { return from_log(a.log_ - b.log_); }
  friend LogWeight operator+(LogWeight a, LogWeight b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const double hi = std::max(a.log_, b.log_);
    const double lo = std::min(a.log_, b.log_);
    return from_log(hi + std::log1p(std::exp(lo - hi)));
  }
  LogWeight& operator+=(LogWeight other) { return *this = *this + other; }
  LogWeight pow(double exponent) const {
    if (is_zero()) return exponent == 0.0 ? one() : zero();
    return from_log(log_ * exponent);
  }

  friend constexpr bool operator<(LogWeight a, LogWeight b) { return a.log_ < b.log_; }
  friend constexpr bool operator==(LogWeight a, LogWeight b) { return a.log_ == b.log_; }

 private:
  double log_ = -std::numeric_limits<double>::infinity();
};

/// Streaming first and second moments of nonnegative samples in log space.
class LogAccumulator {
 public:
  void add(LogWeight x) {
    ++count_;
    sum_ += x;
    sum_sq_ += x * x;
  }
  void merge(const LogAccumulator& other) {
    count_ += other.count_;
    sum_ += other.sum_;
    sum_sq_ += other.sum_sq_;
  }

  std::size_t count() const { return count_; }
  LogWeight sum() const { return sum_; }
  LogWeight mean() const {
    if (count_ == 0) return LogWeight::zero();
    return sum_ / LogWeight::from_linear(static_cast<double>(count_));
  }

  /// Unbiased sample variance divided by the squared sample mean. Zero when
  /// fewer than two samples or a zero mean.
  double rel_variance() const {
    if (count_ < 2 || sum_.is_zero()) return 0.0;
    const double n = static_cast<double>(count_);
    const double second_over_first_sq = std::exp(sum_sq_.log() + std::log(n) - 2.0 * sum_.log());
    return std::max(0.0, (second_over_first_sq - 1.0) * n / (n - 1.0));
  }

 private:
  std::size_t count_ = 0;
  LogWeight sum_;
  LogWeight sum_sq_;
};

}  // namespace unrel
