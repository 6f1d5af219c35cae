#include "projcub/field.hpp"

#include <cctype>
#include <cmath>
#include <string>

#include "projcub/error.hpp"

namespace projcub {

std::string_view field_name(Field f) noexcept {
  switch (f) {
    case Field::R: return "R";
    case Field::C: return "C";
    case Field::H: return "H";
  }
  return "?";
}

Field parse_field(std::string_view name) {
  if (name.size() == 1) {
    switch (std::toupper(static_cast<unsigned char>(name[0]))) {
      case 'R': return Field::R;
      case 'C': return Field::C;
      case 'H': return Field::H;
      default: break;
    }
  }
  throw InvalidArgument("unknown field '" + std::string(name) + "' (expected R, C or H)");
}

Scalar::Scalar(Field f, std::span<const double> coords) : field_(f) {
  if (coords.size() != static_cast<std::size_t>(delta(f))) {
    throw DimensionMismatch("scalar over " + std::string(field_name(f)) + " needs " +
                            std::to_string(delta(f)) + " coordinates, got " +
                            std::to_string(coords.size()));
  }
  for (std::size_t t = 0; t < coords.size(); ++t) c_[t] = coords[t];
}

Scalar::Scalar(Field f, std::initializer_list<double> coords)
    : Scalar(f, std::span<const double>(coords.begin(), coords.size())) {}

Scalar Scalar::unit(Field f, int slot) {
  if (slot < 0 || slot >= delta(f)) {
    throw InvalidArgument("no unit with slot " + std::to_string(slot) + " over " +
                          std::string(field_name(f)));
  }
  Scalar s(f);
  s.c_[slot] = 1.0;
  return s;
}

double Scalar::norm_squared() const noexcept {
  double s = 0.0;
  for (int t = 0; t < delta(field_); ++t) s += c_[t] * c_[t];
  return s;
}

double Scalar::abs() const noexcept { return std::sqrt(norm_squared()); }

Scalar conj(const Scalar& a) noexcept {
  std::array<double, 4> c{};
  const int d = delta(a.field());
  c[0] = a[0];
  for (int t = 1; t < d; ++t) c[t] = -a[t];
  return Scalar(a.field(), std::span<const double>(c.data(), d));
}

namespace {

void require_same(Field a, Field b) {
  if (a != b) {
    throw FieldMismatch("field mismatch: " + std::string(field_name(a)) + " vs " +
                        std::string(field_name(b)));
  }
}

Scalar from_raw(Field f, const double* c) {
  return Scalar(f, std::span<const double>(c, delta(f)));
}

}  // namespace

Scalar operator*(const Scalar& a, const Scalar& b) {
  require_same(a.field(), b.field());
  double ac[4] = {a[0], a[1], a[2], a[3]};
  double bc[4] = {b[0], b[1], b[2], b[3]};
  double out[4];
  raw::mul(a.field(), ac, bc, out);
  return from_raw(a.field(), out);
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  require_same(a.field(), b.field());
  double out[4];
  for (int t = 0; t < 4; ++t) out[t] = a[t] + b[t];
  return from_raw(a.field(), out);
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  require_same(a.field(), b.field());
  double out[4];
  for (int t = 0; t < 4; ++t) out[t] = a[t] - b[t];
  return from_raw(a.field(), out);
}

Scalar operator*(double t, const Scalar& a) noexcept {
  double out[4];
  for (int k = 0; k < 4; ++k) out[k] = t * a[k];
  return from_raw(a.field(), out);
}

double re_inner(const Scalar& theta, const Scalar& zeta) {
  require_same(theta.field(), zeta.field());
  double s = 0.0;
  for (int t = 0; t < delta(theta.field()); ++t) s += theta[t] * zeta[t];
  return s;
}

KVector::KVector(Field f, std::size_t m)
    : field_(f), coords_(m * static_cast<std::size_t>(delta(f)), 0.0) {}

KVector::KVector(Field f, std::vector<double> flat) : field_(f), coords_(std::move(flat)) {
  if (coords_.size() % static_cast<std::size_t>(delta(f)) != 0) {
    throw DimensionMismatch("flat length " + std::to_string(coords_.size()) +
                            " is not a multiple of " + std::to_string(delta(f)));
  }
}

KVector::KVector(Field f, std::span<const double> flat)
    : KVector(f, std::vector<double>(flat.begin(), flat.end())) {}

KVector KVector::basis(Field f, std::size_t m, std::size_t i) {
  if (i >= m) throw InvalidArgument("basis index out of range");
  KVector v(f, m);
  v.coords_[i * delta(f)] = 1.0;
  return v;
}

Scalar KVector::entry(std::size_t i) const {
  const std::size_t d = delta(field_);
  if (i >= dimension()) throw InvalidArgument("entry index out of range");
  return Scalar(field_, std::span<const double>(coords_.data() + i * d, d));
}

void KVector::set_entry(std::size_t i, const Scalar& value) {
  require_same(field_, value.field());
  const std::size_t d = delta(field_);
  if (i >= dimension()) throw InvalidArgument("entry index out of range");
  for (std::size_t t = 0; t < d; ++t) coords_[i * d + t] = value[static_cast<int>(t)];
}

double KVector::norm() const noexcept {
  double s = 0.0;
  for (double c : coords_) s += c * c;
  return std::sqrt(s);
}

KVector KVector::times(const Scalar& alpha) const {
  require_same(field_, alpha.field());
  KVector out = *this;
  double a[4] = {alpha[0], alpha[1], alpha[2], alpha[3]};
  raw::scale_right(field_, dimension(), out.coords_.data(), a);
  return out;
}

KVector KVector::scaled(double t) const {
  KVector out = *this;
  for (double& c : out.coords_) c *= t;
  return out;
}

namespace {

void require_compatible(const KVector& x, const KVector& y) {
  require_same(x.field(), y.field());
  if (x.dimension() != y.dimension()) {
    throw DimensionMismatch("dimension mismatch: " + std::to_string(x.dimension()) + " vs " +
                            std::to_string(y.dimension()));
  }
}

}  // namespace

Scalar inner(const KVector& x, const KVector& y) {
  require_compatible(x, y);
  double out[4] = {0, 0, 0, 0};
  raw::inner(x.field(), x.dimension(), x.flat().data(), y.flat().data(), out);
  return from_raw(x.field(), out);
}

double abs_inner_pow(const KVector& x, const KVector& y, int p) {
  if (p < 2 || p % 2 != 0) {
    throw InvalidArgument("index must be an even integer >= 2, got " + std::to_string(p));
  }
  require_compatible(x, y);
  const double s = raw::abs_inner_squared(x.field(), x.dimension(), x.flat().data(),
                                          y.flat().data());
  return ipow(s, static_cast<unsigned>(p / 2));
}

}  // namespace projcub
