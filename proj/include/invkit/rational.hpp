#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <Eigen/Core>
#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>

namespace invkit {

/// Arbitrary-precision integer.
using Int = boost::multiprecision::cpp_int;

/// Exact rational scalar: numerator and positive denominator, always in
/// lowest terms (gcd 1, zero stored as 0/1). This is the sole scalar type
/// of the library; nothing here is ever rounded.
///
/// The class is a thin value wrapper around cpp_rational with a closed set
/// of constructors, so it composes with Eigen expression templates without
/// tripping over the backend's generic conversion machinery.
class Rational {
 public:
  Rational() = default;
  Rational(int v) : v_(v) {}  // NOLINT: implicit by design, scalar literals
  Rational(long long v) : v_(v) {}
  Rational(const Int& n) : v_(n) {}
  Rational(const Int& n, const Int& d);

  Int num() const { return boost::multiprecision::numerator(v_); }
  Int den() const { return boost::multiprecision::denominator(v_); }

  bool is_zero() const { return v_.is_zero(); }
  bool is_integer() const { return den() == 1; }
  int sign() const { return v_ < 0 ? -1 : (v_.is_zero() ? 0 : 1); }

  Rational operator-() const { return Rational(cpp_rational(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  /// Canonical text form: "n" for integers, "n/d" otherwise.
  std::string str() const;

  /// Parses "n" or "n/d" (optionally signed, d > 0 after normalization).
  /// Throws ValidationError on anything else.
  static Rational parse(std::string_view text);

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  using cpp_rational = boost::multiprecision::cpp_rational;
  explicit Rational(cpp_rational v) : v_(std::move(v)) {}
  cpp_rational v_;
};

inline Rational abs(const Rational& r) { return r < 0 ? -r : r; }

/// Number of bits in |n| (0 for n = 0). Used for pivot selection.
inline std::size_t bit_length(const Int& n) {
  if (n.is_zero()) return 0;
  return boost::multiprecision::msb(boost::multiprecision::abs(n)) + 1;
}

Int gcd(const Int& a, const Int& b);
Int lcm(const Int& a, const Int& b);

/// n! as an exact integer.
Int factorial(unsigned n);

std::string to_string(const Int& n);

/// Dense matrix and vector over the exact rational scalar. All linear
/// algebra in the library goes through these types.
using MatrixQ = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using VectorQ = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

}  // namespace invkit

namespace Eigen {

template <>
struct NumTraits<invkit::Rational> : GenericNumTraits<invkit::Rational> {
  using Real = invkit::Rational;
  using NonInteger = invkit::Rational;
  using Nested = invkit::Rational;
  using Literal = invkit::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 40,
    MulCost = 40
  };
  static inline Real epsilon() { return invkit::Rational(0); }
  static inline Real dummy_precision() { return invkit::Rational(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
