#pragma once

// Projective-plane primitives: points, lines and ternary cubic forms written
// in the fixed monomial basis (X^3, Y^3, Z^3, X^2Y, XY^2, X^2Z, XZ^2, Y^2Z,
// YZ^2, XYZ).

#include "ecassoc/field.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace ecassoc {

enum class Monomial : std::size_t { X3, Y3, Z3, X2Y, XY2, X2Z, XZ2, Y2Z, YZ2, XYZ };

inline constexpr std::size_t kMonomialCount = 10;

/// Exponents (of X, Y, Z) for each monomial, in index order.
inline constexpr std::array<std::array<int, 3>, kMonomialCount> kMonomialExponents{{
    {3, 0, 0}, {0, 3, 0}, {0, 0, 3}, {2, 1, 0}, {1, 2, 0},
    {2, 0, 1}, {1, 0, 2}, {0, 2, 1}, {0, 1, 2}, {1, 1, 1},
}};

constexpr std::size_t index_of(Monomial m) noexcept { return static_cast<std::size_t>(m); }

/// "X^3", "Y^2Z", ... (also accepted by `monomial_from_name`, as are "X3", "Y2Z").
std::string_view monomial_name(Monomial m) noexcept;
std::optional<Monomial> monomial_from_name(std::string_view name) noexcept;

using Coords = std::array<FieldElement, 3>;
using MonomialVector = std::array<FieldElement, kMonomialCount>;

/// Scales a nonzero triple so its last nonzero entry is 1. Throws InvalidPoint
/// for the zero vector.
Coords normalize_last_nonzero(const Coords& v);

/// A point of P^2, stored with its last nonzero coordinate equal to 1; so
/// O = [0:1:0] and affine points are [x:y:1].
class ProjectivePoint {
 public:
  ProjectivePoint(FieldElement x, FieldElement y, FieldElement z);
  explicit ProjectivePoint(const Coords& coords);

  static ProjectivePoint affine(const FieldElement& x, const FieldElement& y);
  static ProjectivePoint infinity(const Field& field);

  const FieldElement& x() const noexcept { return coords_[0]; }
  const FieldElement& y() const noexcept { return coords_[1]; }
  const FieldElement& z() const noexcept { return coords_[2]; }
  const Coords& coords() const noexcept { return coords_; }
  Field field() const { return coords_[0].field(); }

  bool is_affine() const noexcept { return coords_[2].is_one(); }
  /// True for O = [0:1:0].
  bool is_origin_at_infinity() const noexcept;

  friend bool operator==(const ProjectivePoint& a, const ProjectivePoint& b) noexcept {
    return a.coords_ == b.coords_;
  }

 private:
  Coords coords_;
};

/// The line A X + B Y + C Z = 0. Coefficients are kept as given (evaluation
/// uses them verbatim); equality compares the normalized vectors.
class Line {
 public:
  Line(FieldElement a, FieldElement b, FieldElement c);
  explicit Line(const Coords& coeffs);

  const Coords& coeffs() const noexcept { return coeffs_; }
  Coords canonical() const { return normalize_last_nonzero(coeffs_); }
  Field field() const { return coeffs_[0].field(); }

  friend bool operator==(const Line& a, const Line& b) { return a.canonical() == b.canonical(); }

 private:
  Coords coeffs_;
};

/// Coefficient vector c_F of a homogeneous cubic F, indexed like MonomialVector.
struct CubicForm {
  MonomialVector c;

  FieldElement& operator[](Monomial m) noexcept { return c[index_of(m)]; }
  const FieldElement& operator[](Monomial m) const noexcept { return c[index_of(m)]; }
  Field field() const { return c[0].field(); }

  static CubicForm zero(const Field& field);

  friend bool operator==(const CubicForm&, const CubicForm&) = default;
};

enum class MonomialDerivative { none, d_x, d_y, d_z };

/// Canonical line through two distinct points (cross product of coordinates,
/// normalized). Throws CoincidentPoints when P == Q.
Line line_through(const ProjectivePoint& p, const ProjectivePoint& q);

FieldElement eval_line(const Line& line, const ProjectivePoint& p);

/// M(P), or one of its formal partial derivatives M_X, M_Y, M_Z, evaluated at
/// the canonical coordinates of P.
MonomialVector monomial_vector(const ProjectivePoint& p, MonomialDerivative which = MonomialDerivative::none);

/// Coefficients of the expanded product l1*l2*l3.
CubicForm cubic_from_lines(const Line& l1, const Line& l2, const Line& l3);

/// F(P) = M(P) . c_F.
FieldElement eval_cubic(const CubicForm& form, const ProjectivePoint& p);

/// (d_t F)(P) = M_t(P) . c_F.
FieldElement eval_cubic_partial(const CubicForm& form, const ProjectivePoint& p, MonomialDerivative which);

FieldElement dot(const MonomialVector& a, const MonomialVector& b);

/// `O`, `(x,y)` for affine points, `[x:y:z]` otherwise.
std::string format_point(const ProjectivePoint& p);

/// Accepts `O`, `(x,y)` and `[x:y:z]`. Extension-field coordinates are written
/// as flat coefficient lists, so `(x0,x1,y0,y1)` over a degree-2 field.
ProjectivePoint parse_point(const Field& field, std::string_view text);

}  // namespace ecassoc
