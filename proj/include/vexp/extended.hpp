#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>

namespace vexp {

// Extended nonnegative real with a tagged infinity.
//
// Arithmetic rules: inf + x = inf, c * inf = inf for c > 0, and 0 * inf is
// rejected. The power conventions (1^inf = 0, 0^0 = 0) live with the
// exponent helpers, not here; they apply to exponentiation only.
class ExtReal {
 public:
  ExtReal() = default;

  ExtReal(double v) {  // NOLINT(runtime/explicit): value-type conversions intended
    if (std::isnan(v)) throw std::invalid_argument("ExtReal: NaN not admitted");
    if (v < 0.0) throw std::invalid_argument("ExtReal: negative value");
    if (std::isinf(v)) {
      inf_ = true;
    } else {
      v_ = v;
    }
  }

  static ExtReal infinity() {
    ExtReal x;
    x.inf_ = true;
    return x;
  }

  bool is_infinite() const { return inf_; }
  bool is_finite() const { return !inf_; }

  /// Finite value; throws if infinite.
  double value() const {
    if (inf_) throw std::logic_error("ExtReal: value() called on infinity");
    return v_;
  }

  /// Lossy view: infinity maps to the IEEE infinity (for printing/comparison).
  double as_double() const {
    return inf_ ? std::numeric_limits<double>::infinity() : v_;
  }

  ExtReal& operator+=(const ExtReal& o) {
    if (o.inf_) inf_ = true;
    if (!inf_) v_ += o.v_;
    return *this;
  }

  friend ExtReal operator+(ExtReal a, const ExtReal& b) { return a += b; }

  friend ExtReal operator*(double c, const ExtReal& x) {
    if (std::isnan(c) || c < 0.0)
      throw std::invalid_argument("ExtReal: scalar must be nonnegative");
    if (x.inf_) {
      if (c == 0.0) throw std::invalid_argument("ExtReal: 0 * inf undefined");
      return infinity();
    }
    return ExtReal(c * x.v_);
  }

  friend bool operator==(const ExtReal& a, const ExtReal& b) {
    return a.inf_ == b.inf_ && (a.inf_ || a.v_ == b.v_);
  }
  friend bool operator<(const ExtReal& a, const ExtReal& b) {
    if (a.inf_) return false;
    if (b.inf_) return true;
    return a.v_ < b.v_;
  }
  friend bool operator<=(const ExtReal& a, const ExtReal& b) { return !(b < a); }
  friend bool operator>(const ExtReal& a, const ExtReal& b) { return b < a; }
  friend bool operator>=(const ExtReal& a, const ExtReal& b) { return !(a < b); }

 private:
  double v_ = 0.0;
  bool inf_ = false;
};

}  // namespace vexp
