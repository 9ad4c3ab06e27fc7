#pragma once

// Exact arithmetic over prime fields F_p, extension fields F_{p^k} realised
// as F_p[u]/(m(u)), and the rationals.
//
// Field descriptors are interned: every distinct field is created once and
// lives for the rest of the process, so `Field` and `FieldElement` are cheap
// value types that can be shared freely between threads.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ecassoc {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

enum class FieldKind { prime, extension, rational };

/// Largest supported extension degree (irreducibility is checked exhaustively).
inline constexpr unsigned kMaxExtensionDegree = 4;
/// Largest supported prime, both for prime fields and as a base field.
inline constexpr std::uint64_t kMaxPrime = (std::uint64_t{1} << 31) - 1;
/// Largest supported extension field order p^k.
inline constexpr std::uint64_t kMaxExtensionOrder = std::uint64_t{1} << 32;

namespace detail {
struct FieldData;
}

class FieldElement;

/// Handle to an interned field. Two handles compare equal iff they denote the
/// same field (same kind, characteristic and modulus).
class Field {
 public:
  /// F_p. Throws NotPrime (trial division) or Unsupported for p > kMaxPrime.
  static Field prime(std::uint64_t p);

  /// F_p[u]/(m). `modulus` lists c_0..c_k; it must be monic of degree >= 2.
  /// Throws ReducibleModulus naming a factor when m is reducible over F_p.
  static Field extension(std::uint64_t p, std::span<const std::int64_t> modulus);

  static Field rationals();

  /// Parses `p=<int>`, `p=<int>,k=<int>,mod=<c0,...,ck>` or `Q`.
  static Field parse(std::string_view spec);

  /// The extension of degree k over F_p using the first irreducible monic
  /// modulus in enumeration order (k == 1 yields the prime field).
  static Field finite(std::uint64_t p, unsigned k);

  FieldKind kind() const noexcept;
  bool is_finite() const noexcept { return kind() != FieldKind::rational; }
  /// 0 for the rationals.
  std::uint64_t characteristic() const noexcept;
  /// Extension degree k (1 for prime fields and for Q).
  unsigned degree() const noexcept;
  /// Number of elements; nullopt for Q.
  std::optional<std::uint64_t> order() const noexcept;
  /// c_0..c_k of the defining modulus (extension kind only, else empty).
  std::span<const std::uint32_t> modulus() const noexcept;

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement from_int(std::int64_t value) const;
  FieldElement from_bigint(const BigInt& value) const;
  /// Extension element from coefficients c_0..c_{k-1} (reduced mod p).
  FieldElement from_coefficients(std::span<const std::int64_t> coeffs) const;
  FieldElement from_rational(const Rational& value) const;
  /// Finite fields only: the element with index `code` in enumeration order.
  FieldElement from_code(std::uint64_t code) const;

  /// Parses an element literal in this field's syntax: an integer for F_p,
  /// `c0,...,c(k-1)` for extensions, `a` or `a/b` for Q.
  FieldElement parse_element(std::string_view text) const;

  /// All elements in enumeration order (lexicographic with c_{k-1} most
  /// significant). Throws InfiniteField for Q.
  std::vector<FieldElement> elements() const;

  /// Canonical textual spec, accepted back by `parse`.
  std::string spec() const;

  friend bool operator==(const Field& a, const Field& b) noexcept { return a.data_ == b.data_; }

 private:
  explicit Field(const detail::FieldData* data) : data_(data) {}

  const detail::FieldData* data_;

  friend class FieldElement;
};

/// An exact element of some Field. Default-constructed elements are unbound
/// placeholders; any arithmetic on them raises MixedFields.
class FieldElement {
 public:
  FieldElement() = default;

  Field field() const;
  bool is_bound() const noexcept { return field_ != nullptr; }
  bool is_zero() const noexcept;
  bool is_one() const noexcept;

  /// Enumeration index (finite fields only).
  std::uint64_t code() const;
  /// Coefficients c_0..c_{k-1} for finite fields (k = 1 for F_p).
  std::vector<std::uint32_t> coefficients() const;
  /// Value as a rational (rational kind only).
  const Rational& rational() const;

  FieldElement inverse() const;
  FieldElement pow(std::uint64_t exponent) const;

  std::string to_string() const;

  FieldElement operator-() const;
  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  FieldElement& operator+=(const FieldElement& other) { return *this = *this + other; }
  FieldElement& operator-=(const FieldElement& other) { return *this = *this - other; }
  FieldElement& operator*=(const FieldElement& other) { return *this = *this * other; }
  FieldElement& operator/=(const FieldElement& other) { return *this = *this / other; }

  friend bool operator==(const FieldElement& a, const FieldElement& b) noexcept;

 private:
  FieldElement(const detail::FieldData* field, std::uint64_t code) : field_(field), code_(code) {}
  FieldElement(const detail::FieldData* field, Rational value);

  const detail::FieldData* field_ = nullptr;
  std::uint64_t code_ = 0;
  std::shared_ptr<const Rational> rational_;

  friend class Field;
  friend struct ElementAccess;
};

std::ostream& operator<<(std::ostream& os, const FieldElement& value);
std::ostream& operator<<(std::ostream& os, const Field& field);

enum class FieldOp { add, sub, mul, div };

/// Single entry point for binary arithmetic; equivalent to the operators.
FieldElement field_arithmetic(const FieldElement& a, const FieldElement& b, FieldOp op);
FieldElement invert(const FieldElement& a);
std::vector<FieldElement> enumerate_field(const Field& field);

/// Trial-division primality for p <= kMaxPrime.
bool is_prime(std::uint64_t p) noexcept;

/// Searches for a monic factor of degree 1..k/2 of the monic polynomial
/// `modulus` (c_0..c_k) over F_p; returns its coefficients c_0..c_d.
std::optional<std::vector<std::uint32_t>> find_modulus_factor(std::uint64_t p,
                                                              std::span<const std::uint32_t> modulus);

}  // namespace ecassoc
