#pragma once

// Truncated power series c_0 + c_1 t + ... + c_N t^N with t = z or u
// (ascending) or t = z^{-1} (descending). Coefficients are RatFunc or
// commuting matrices over RatFunc (the ω-series on a module are diagonal).

#include <cstdlib>
#include <string>
#include <vector>

#include "qaff/eigen_support.hpp"
#include "qaff/exact_linalg.hpp"

namespace qaff {

enum class SeriesVar { z, u };
enum class Direction { ascending, descending };

inline constexpr int kDefaultSeriesOrder = 8;

/// QAFF_SERIES_ORDER if it holds an integer in [0, 64], else 8.
inline int default_series_order() {
  const char* env = std::getenv("QAFF_SERIES_ORDER");
  if (!env || !*env) return kDefaultSeriesOrder;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 0 || v > 64) return kDefaultSeriesOrder;
  return static_cast<int>(v);
}

template <typename T>
struct series_traits;

template <>
struct series_traits<RatFunc> {
  static RatFunc zero_like(const RatFunc&) { return RatFunc(); }
  static RatFunc one_like(const RatFunc&) { return RatFunc(1); }
  static bool is_zero(const RatFunc& x) { return x.is_zero(); }
  static bool is_one(const RatFunc& x) { return x.is_one(); }
  static RatFunc invert(const RatFunc& x) {
    if (x.is_zero()) throw BadConstantTerm("series inverse needs a nonzero constant term");
    return x.inverse();
  }
};

template <>
struct series_traits<Matrix> {
  static Matrix zero_like(const Matrix& x) { return Matrix::Zero(x.rows(), x.cols()); }
  static Matrix one_like(const Matrix& x) { return Matrix::Identity(x.rows(), x.cols()); }
  static bool is_zero(const Matrix& x) { return qaff::is_zero(x); }
  static bool is_one(const Matrix& x) { return equal(x, Matrix::Identity(x.rows(), x.cols())); }
  static Matrix invert(const Matrix& x) {
    try {
      return inverse(x);
    } catch (const NoSolution&) {
      throw BadConstantTerm("series inverse needs an invertible constant term");
    }
  }
};

template <typename T>
class TruncSeries {
 public:
  using traits = series_traits<T>;

  TruncSeries(std::vector<T> coeffs, SeriesVar var = SeriesVar::z, Direction dir = Direction::ascending)
      : c_(std::move(coeffs)), var_(var), dir_(dir) {
    if (c_.empty()) throw Error("a truncated series needs at least c_0");
  }

  /// c_0 + 0 t + ... up to order N.
  static TruncSeries constant(const T& c0, int order, SeriesVar var = SeriesVar::z,
                              Direction dir = Direction::ascending) {
    std::vector<T> c(static_cast<std::size_t>(order) + 1, traits::zero_like(c0));
    c[0] = c0;
    return TruncSeries(std::move(c), var, dir);
  }

  /// The polynomial c_0 + c_1 t + ..., padded with zeros or truncated to order N.
  static TruncSeries polynomial(std::vector<T> c, int order, SeriesVar var = SeriesVar::z,
                                Direction dir = Direction::ascending) {
    const T zero = traits::zero_like(c.at(0));
    c.resize(static_cast<std::size_t>(order) + 1, zero);
    return TruncSeries(std::move(c), var, dir);
  }

  int order() const { return static_cast<int>(c_.size()) - 1; }
  SeriesVar var() const { return var_; }
  Direction direction() const { return dir_; }
  const T& operator[](int k) const { return c_.at(static_cast<std::size_t>(k)); }
  const std::vector<T>& coeffs() const { return c_; }

  TruncSeries truncated(int order) const {
    if (order > this->order()) throw WindowTooSmall("cannot extend a truncated series");
    return TruncSeries(std::vector<T>(c_.begin(), c_.begin() + order + 1), var_, dir_);
  }

  friend TruncSeries operator+(const TruncSeries& x, const TruncSeries& y) {
    x.compatible(y);
    std::vector<T> c(x.c_.size());
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = x.c_[k] + y.c_[k];
    return TruncSeries(std::move(c), x.var_, x.dir_);
  }

  friend TruncSeries operator-(const TruncSeries& x, const TruncSeries& y) {
    x.compatible(y);
    std::vector<T> c(x.c_.size());
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = x.c_[k] - y.c_[k];
    return TruncSeries(std::move(c), x.var_, x.dir_);
  }

  friend TruncSeries operator*(const TruncSeries& x, const TruncSeries& y) {
    x.compatible(y);
    std::vector<T> c(x.c_.size(), traits::zero_like(x.c_[0]));
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (traits::is_zero(x.c_[i])) continue;
      for (std::size_t j = 0; i + j < c.size(); ++j) {
        if (!traits::is_zero(y.c_[j])) c[i + j] += x.c_[i] * y.c_[j];
      }
    }
    return TruncSeries(std::move(c), x.var_, x.dir_);
  }

  friend TruncSeries operator*(const TruncSeries& x, const RatFunc& s) {
    std::vector<T> c = x.c_;
    for (auto& t : c) t = t * s;
    return TruncSeries(std::move(c), x.var_, x.dir_);
  }

  friend bool operator==(const TruncSeries& x, const TruncSeries& y) {
    if (x.var_ != y.var_ || x.dir_ != y.dir_ || x.c_.size() != y.c_.size()) return false;
    for (std::size_t k = 0; k < x.c_.size(); ++k) {
      if (!traits::is_zero(x.c_[k] - y.c_[k])) return false;
    }
    return true;
  }

  TruncSeries inv() const {
    const T i0 = traits::invert(c_[0]);
    std::vector<T> g(c_.size(), traits::zero_like(c_[0]));
    g[0] = i0;
    for (std::size_t k = 1; k < c_.size(); ++k) {
      T acc = traits::zero_like(c_[0]);
      for (std::size_t j = 1; j <= k; ++j) {
        if (!traits::is_zero(c_[j])) acc += c_[j] * g[k - j];
      }
      g[k] = -(i0 * acc);
    }
    return TruncSeries(std::move(g), var_, dir_);
  }

  /// log f for c_0 = 1: k g_k = k f_k - sum_{j<k} j g_j f_{k-j}.
  TruncSeries log() const {
    if (!traits::is_one(c_[0])) throw BadConstantTerm("log needs constant term 1");
    std::vector<T> g(c_.size(), traits::zero_like(c_[0]));
    for (std::size_t k = 1; k < c_.size(); ++k) {
      T acc = c_[k] * RatFunc(static_cast<long>(k));
      for (std::size_t j = 1; j < k; ++j) {
        if (!traits::is_zero(g[j]) && !traits::is_zero(c_[k - j]))
          acc -= g[j] * c_[k - j] * RatFunc(static_cast<long>(j));
      }
      g[k] = acc * RatFunc(Rational(1, static_cast<long>(k)));
    }
    return TruncSeries(std::move(g), var_, dir_);
  }

  /// exp f for c_0 = 0: k g_k = sum_{j=1}^k j f_j g_{k-j}.
  TruncSeries exp() const {
    if (!traits::is_zero(c_[0])) throw BadConstantTerm("exp needs constant term 0");
    std::vector<T> g(c_.size(), traits::zero_like(c_[0]));
    g[0] = traits::one_like(c_[0]);
    for (std::size_t k = 1; k < c_.size(); ++k) {
      T acc = traits::zero_like(c_[0]);
      for (std::size_t j = 1; j <= k; ++j) {
        if (!traits::is_zero(c_[j])) acc += c_[j] * g[k - j] * RatFunc(static_cast<long>(j));
      }
      g[k] = acc * RatFunc(Rational(1, static_cast<long>(k)));
    }
    return TruncSeries(std::move(g), var_, dir_);
  }

 private:
  void compatible(const TruncSeries& o) const {
    if (var_ != o.var_ || dir_ != o.dir_ || c_.size() != o.c_.size())
      throw MixedSeries("series differ in variable, direction or order");
  }

  std::vector<T> c_;
  SeriesVar var_;
  Direction dir_;
};

using Series = TruncSeries<RatFunc>;
using MatrixSeries = TruncSeries<Matrix>;

/// Power series of 1/(1 - x t) to order N (a geometric series).
inline Series geometric(const RatFunc& x, int order, SeriesVar var = SeriesVar::z,
                        Direction dir = Direction::ascending) {
  std::vector<RatFunc> c(static_cast<std::size_t>(order) + 1);
  RatFunc p(1);
  for (auto& ck : c) {
    ck = p;
    p *= x;
  }
  return Series(std::move(c), var, dir);
}

/// The polynomial 1 - x t as a series.
inline Series linear_factor(const RatFunc& x, int order, SeriesVar var = SeriesVar::z,
                            Direction dir = Direction::ascending) {
  return Series::polynomial({RatFunc(1), -x}, order, var, dir);
}

std::string to_string(const Series& s);

}  // namespace qaff
