#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include <Eigen/Core>
#include <gmpxx.h>

namespace ncreal {

/// Exact rational number backed by GMP. Always stored in lowest terms with a
/// positive denominator; zero is 0/1.
///
/// gmpxx expression templates do not mix well with Eigen's scalar deduction,
/// so every operator here materializes a Rational.
class Rational {
 public:
  Rational() = default;
  Rational(int v) : v_(v) {}                 // NOLINT(google-explicit-constructor)
  Rational(long v) : v_(v) {}                // NOLINT(google-explicit-constructor)
  Rational(long long v) : v_(static_cast<long>(v)) {}  // NOLINT
  Rational(long num, long den);
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  /// Parses "p", "-p", "p/q" or "-p/q". Throws std::invalid_argument.
  static Rational parse(std::string_view text);

  /// "p/q", or "p" when the denominator is 1.
  std::string str() const;

  const mpq_class& value() const { return v_; }
  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  double to_double() const { return v_.get_d(); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational operator+() const { return *this; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return cmp(a.v_, b.v_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

/// True iff r is the square of a rational; the nonnegative root goes to *root.
bool is_rational_square(const Rational& r, Rational* root = nullptr);

}  // namespace ncreal

namespace Eigen {

template <>
struct NumTraits<ncreal::Rational> : GenericNumTraits<ncreal::Rational> {
  typedef ncreal::Rational Real;
  typedef ncreal::Rational NonInteger;
  typedef ncreal::Rational Nested;
  typedef ncreal::Rational Literal;
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 20,
    MulCost = 40
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
  static inline int max_digits10() { return 0; }
};

}  // namespace Eigen
