#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <Eigen/Core>

#include <compare>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "giry/errors.hpp"

namespace giry {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number with arbitrary-precision numerator and denominator.
///
/// Always stored in lowest terms with a positive denominator, so equality is
/// plain field comparison.  This is the only scalar type in the library; there
/// is no floating-point mode.
class Rat {
 public:
  Rat() = default;
  Rat(int n) : num_(n) {}                // NOLINT: implicit by design (Eigen literals)
  Rat(long long n) : num_(n) {}          // NOLINT
  explicit Rat(BigInt n) : num_(std::move(n)) {}
  Rat(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) throw InvalidValue("rational with zero denominator");
    normalize();
  }

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_negative() const { return num_ < 0; }
  bool is_integer() const { return den_ == 1; }

  friend Rat operator+(const Rat& a, const Rat& b) {
    return Rat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rat operator-(const Rat& a, const Rat& b) {
    return Rat(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rat operator*(const Rat& a, const Rat& b) {
    return Rat(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.num_ == 0) throw InvalidValue("rational division by zero");
    return Rat(a.num_ * b.den_, a.den_ * b.num_);
  }

  Rat operator-() const {
    Rat r(*this);
    r.num_ = -r.num_;
    return r;
  }

  Rat& operator+=(const Rat& o) { return *this = *this + o; }
  Rat& operator-=(const Rat& o) { return *this = *this - o; }
  Rat& operator*=(const Rat& o) { return *this = *this * o; }
  Rat& operator/=(const Rat& o) { return *this = *this / o; }

  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    const BigInt lhs = a.num_ * b.den_;
    const BigInt rhs = b.num_ * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rat& r) {
    os << r.num_;
    if (r.den_ != 1) os << '/' << r.den_;
    return os;
  }

 private:
  void normalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    BigInt g = boost::multiprecision::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  BigInt num_ = 0;
  BigInt den_ = 1;
};

inline Rat abs(const Rat& r) { return r.is_negative() ? -r : r; }

/// Renders "a/b", or just "a" when the denominator is 1.  Inverse of parse_rat.
inline std::string to_string(const Rat& r) {
  std::string s = r.num().str();
  if (!r.is_integer()) {
    s += '/';
    s += r.den().str();
  }
  return s;
}

/// Parses the literal forms "a" and "a/b" (optional leading sign, b > 0).
inline Rat parse_rat(std::string_view text) {
  const auto fail = [&] {
    throw ParseError("invalid rational literal '" + std::string(text) + "'");
  };
  std::string_view rest = text;
  bool negative = false;
  if (!rest.empty() && (rest.front() == '-' || rest.front() == '+')) {
    negative = rest.front() == '-';
    rest.remove_prefix(1);
  }
  const auto digits = [&](std::string_view part) -> BigInt {
    if (part.empty()) fail();
    for (char c : part)
      if (c < '0' || c > '9') fail();
    return BigInt(std::string(part));
  };
  const auto slash = rest.find('/');
  BigInt num, den = 1;
  if (slash == std::string_view::npos) {
    num = digits(rest);
  } else {
    num = digits(rest.substr(0, slash));
    den = digits(rest.substr(slash + 1));
    if (den == 0) fail();
  }
  if (negative) num = -num;
  return Rat(std::move(num), std::move(den));
}

using RatVec = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;
using RatMat = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using Index = Eigen::Index;

}  // namespace giry

namespace Eigen {

template <>
struct NumTraits<giry::Rat> : GenericNumTraits<giry::Rat> {
  using Real = giry::Rat;
  using NonInteger = giry::Rat;
  using Literal = giry::Rat;
  using Nested = giry::Rat;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 16,
    MulCost = 16,
  };
  // Exact scalar: comparisons never need slack.
  static giry::Rat epsilon() { return giry::Rat(0); }
  static giry::Rat dummy_precision() { return giry::Rat(0); }
  static int digits10() { return 0; }
};

}  // namespace Eigen
