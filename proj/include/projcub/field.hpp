#pragma once

// Arithmetic over R, C and H, and the inner-product geometry of K^m viewed
// as R^{delta*m}. Every scalar is a 4-slot real tuple (real part first, then
// i, j, k); slots beyond the field's real dimension are kept at zero.

#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace projcub {

enum class Field : std::uint8_t { R, C, H };

/// Real dimension of the field: 1, 2 or 4.
constexpr int delta(Field f) noexcept {
  switch (f) {
    case Field::R: return 1;
    case Field::C: return 2;
    case Field::H: return 4;
  }
  return 0;
}

std::string_view field_name(Field f) noexcept;
/// Accepts "R", "C", "H" (case-insensitive). Throws InvalidArgument.
Field parse_field(std::string_view name);

class Scalar {
 public:
  constexpr Scalar() = default;
  constexpr explicit Scalar(Field f) : field_(f) {}
  Scalar(Field f, std::span<const double> coords);
  Scalar(Field f, std::initializer_list<double> coords);

  static constexpr Scalar real(Field f, double value) {
    Scalar s(f);
    s.c_[0] = value;
    return s;
  }
  /// The imaginary unit with the given slot (1 = i, 2 = j, 3 = k).
  static Scalar unit(Field f, int slot);

  constexpr Field field() const noexcept { return field_; }
  constexpr double operator[](int slot) const noexcept { return c_[slot]; }
  std::span<const double> coords() const noexcept {
    return {c_.data(), static_cast<std::size_t>(delta(field_))};
  }

  double norm_squared() const noexcept;
  double abs() const noexcept;

  friend bool operator==(const Scalar&, const Scalar&) = default;

 private:
  Field field_ = Field::R;
  std::array<double, 4> c_{};
};

Scalar conj(const Scalar& a) noexcept;
/// Field product; non-commutative for H. Throws FieldMismatch.
Scalar operator*(const Scalar& a, const Scalar& b);
Scalar operator+(const Scalar& a, const Scalar& b);
Scalar operator-(const Scalar& a, const Scalar& b);
Scalar operator*(double t, const Scalar& a) noexcept;
/// Re(conj(theta) * zeta), the Euclidean inner product of the coordinate tuples.
double re_inner(const Scalar& theta, const Scalar& zeta);

namespace raw {

// Coordinate-level primitives on packed delta-tuples, shared by the hot loops.

/// out = a * b.
inline void mul(Field f, const double* a, const double* b, double* out) noexcept {
  switch (f) {
    case Field::R:
      out[0] = a[0] * b[0];
      return;
    case Field::C: {
      const double re = a[0] * b[0] - a[1] * b[1];
      const double im = a[0] * b[1] + a[1] * b[0];
      out[0] = re;
      out[1] = im;
      return;
    }
    case Field::H: {
      const double w = a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3];
      const double x = a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2];
      const double y = a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1];
      const double z = a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0];
      out[0] = w;
      out[1] = x;
      out[2] = y;
      out[3] = z;
      return;
    }
  }
}

/// out = conj(a) * b.
inline void conj_mul(Field f, const double* a, const double* b, double* out) noexcept {
  switch (f) {
    case Field::R:
      out[0] = a[0] * b[0];
      return;
    case Field::C: {
      const double re = a[0] * b[0] + a[1] * b[1];
      const double im = a[0] * b[1] - a[1] * b[0];
      out[0] = re;
      out[1] = im;
      return;
    }
    case Field::H: {
      const double w = a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3];
      const double x = a[0] * b[1] - a[1] * b[0] - a[2] * b[3] + a[3] * b[2];
      const double y = a[0] * b[2] + a[1] * b[3] - a[2] * b[0] - a[3] * b[1];
      const double z = a[0] * b[3] - a[1] * b[2] + a[2] * b[1] - a[3] * b[0];
      out[0] = w;
      out[1] = x;
      out[2] = y;
      out[3] = z;
      return;
    }
  }
}

/// <x, y> = sum_i conj(x_i) y_i over m packed entries; result written to out[0..delta).
inline void inner(Field f, std::size_t m, const double* x, const double* y,
                  double* out) noexcept {
  const int d = delta(f);
  double acc[4] = {0, 0, 0, 0};
  double term[4];
  for (std::size_t i = 0; i < m; ++i) {
    conj_mul(f, x + i * d, y + i * d, term);
    for (int t = 0; t < d; ++t) acc[t] += term[t];
  }
  for (int t = 0; t < d; ++t) out[t] = acc[t];
}

/// |<x, y>|^2.
inline double abs_inner_squared(Field f, std::size_t m, const double* x,
                                const double* y) noexcept {
  double c[4];
  inner(f, m, x, y, c);
  double s = 0.0;
  for (int t = 0; t < delta(f); ++t) s += c[t] * c[t];
  return s;
}

/// x <- x * alpha for every entry (right scalar multiplication).
inline void scale_right(Field f, std::size_t m, double* x, const double* alpha) noexcept {
  const int d = delta(f);
  for (std::size_t i = 0; i < m; ++i) mul(f, x + i * d, alpha, x + i * d);
}

}  // namespace raw

/// A column of m field entries, stored flattened as delta*m reals.
class KVector {
 public:
  KVector() = default;
  KVector(Field f, std::size_t m);
  KVector(Field f, std::vector<double> flat);
  KVector(Field f, std::span<const double> flat);

  static KVector basis(Field f, std::size_t m, std::size_t i);

  Field field() const noexcept { return field_; }
  std::size_t dimension() const noexcept { return coords_.size() / delta(field_); }
  std::span<const double> flat() const noexcept { return coords_; }
  std::span<double> flat() noexcept { return coords_; }

  Scalar entry(std::size_t i) const;
  void set_entry(std::size_t i, const Scalar& value);

  double norm() const noexcept;
  /// Right scalar multiplication x * alpha.
  KVector times(const Scalar& alpha) const;
  KVector scaled(double t) const;

  friend bool operator==(const KVector&, const KVector&) = default;

 private:
  Field field_ = Field::R;
  std::vector<double> coords_;
};

/// <x, y> = sum_i conj(xi_i) eta_i. Throws FieldMismatch / DimensionMismatch.
Scalar inner(const KVector& x, const KVector& y);
/// |<x, y>|^p for even p >= 2. Throws InvalidArgument for odd or small p.
double abs_inner_pow(const KVector& x, const KVector& y, int p);

/// Integer power by repeated squaring.
inline double ipow(double base, unsigned exponent) noexcept {
  double result = 1.0;
  while (exponent != 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent != 0) base *= base;
  }
  return result;
}

}  // namespace projcub
