#pragma once

// Weierstrass curves
//   E: X^3 + a2 X^2 Z + a4 X Z^2 + a6 Z^3 - Y^2 Z - a1 XYZ - a3 Y Z^2 = 0
// and the chord-tangent operation computed by restricting E to a line.

#include "ecassoc/field.hpp"
#include "ecassoc/geometry.hpp"

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ecassoc {

namespace detail {
struct CurveData;
}

class CurvePoint;

struct WeierstrassCoefficients {
  FieldElement a1, a2, a3, a4, a6;
};

/// Standard discriminant via b2, b4, b6, b8.
FieldElement discriminant(const WeierstrassCoefficients& a);

/// Handle to an interned smooth Weierstrass curve. Curves are identified by
/// (field, a1..a6); handles and points are trivially copyable.
class WeierstrassCurve {
 public:
  /// Throws SingularCurve (reporting the discriminant) when Delta == 0.
  WeierstrassCurve(const Field& field, const WeierstrassCoefficients& coeffs);

  /// `a1,a2,a3,a4,a6` in the field's element syntax (extension elements are
  /// flat coefficient lists, so 5k values in total).
  static WeierstrassCurve parse(const Field& field, std::string_view spec);

  Field field() const;
  const WeierstrassCoefficients& coefficients() const;
  const FieldElement& a1() const { return coefficients().a1; }
  const FieldElement& a2() const { return coefficients().a2; }
  const FieldElement& a3() const { return coefficients().a3; }
  const FieldElement& a4() const { return coefficients().a4; }
  const FieldElement& a6() const { return coefficients().a6; }

  /// The coefficient vector c_E in monomial order.
  const CubicForm& form() const;
  const FieldElement& discriminant() const;

  bool contains(const ProjectivePoint& p) const;
  /// Throws NotOnCurve.
  CurvePoint point(const ProjectivePoint& p) const;
  CurvePoint point(std::string_view text) const;
  CurvePoint infinity() const;

  /// Canonical `a1,a2,a3,a4,a6`.
  std::string spec() const;

  friend bool operator==(const WeierstrassCurve& a, const WeierstrassCurve& b) noexcept {
    return a.data_ == b.data_;
  }

 private:
  explicit WeierstrassCurve(const detail::CurveData* data) : data_(data) {}

  const detail::CurveData* data_;

  friend class CurvePoint;
};

/// A point of E(K); always satisfies E(P) = 0.
class CurvePoint {
 public:
  const ProjectivePoint& point() const noexcept { return point_; }
  WeierstrassCurve curve() const { return WeierstrassCurve(curve_); }
  bool is_infinity() const noexcept { return point_.is_origin_at_infinity(); }
  std::string to_string() const { return format_point(point_); }

  friend bool operator==(const CurvePoint& a, const CurvePoint& b) noexcept {
    return a.curve_ == b.curve_ && a.point_ == b.point_;
  }

 private:
  CurvePoint(const detail::CurveData* curve, ProjectivePoint point) : curve_(curve), point_(std::move(point)) {}

  const detail::CurveData* curve_;
  ProjectivePoint point_;

  friend class WeierstrassCurve;
};

FieldElement eval_curve(const WeierstrassCurve& e, const ProjectivePoint& p);
FieldElement discriminant(const WeierstrassCurve& e);

/// (dE/dX, dE/dY, dE/dZ) at P. Throws SingularPoint if all three vanish.
Coords tangent_coeffs(const WeierstrassCurve& e, const CurvePoint& p);
/// Line with coefficient vector tangent_coeffs (not normalized).
Line tangent_line(const WeierstrassCurve& e, const CurvePoint& p);

CurvePoint negate(const WeierstrassCurve& e, const CurvePoint& p);
CurvePoint star(const WeierstrassCurve& e, const CurvePoint& p, const CurvePoint& q);
CurvePoint add_points(const WeierstrassCurve& e, const CurvePoint& p, const CurvePoint& q);

/// While in scope, star() on `e` is memoized for the current thread. Only
/// finite fields of order at most kStarMemoMaxOrder are memoized; otherwise
/// the scope has no effect. Scopes do not nest.
class StarMemo {
 public:
  static constexpr std::uint64_t kStarMemoMaxOrder = 16;

  explicit StarMemo(const WeierstrassCurve& e);
  ~StarMemo();
  StarMemo(const StarMemo&) = delete;
  StarMemo& operator=(const StarMemo&) = delete;

  struct State;

 private:
  std::unique_ptr<State> state_;
};

/// O followed by the affine points (x, y) in field enumeration order of x,
/// then y. Throws InfiniteField over Q.
std::vector<CurvePoint> enumerate_points(const WeierstrassCurve& e);

// --- line restriction ------------------------------------------------------

/// Binary form sum g[i] s^(n-i) t^i.
using BinaryForm = std::vector<FieldElement>;

/// Basis points of a line A X + B Y + C Z = 0: pivot on the first nonzero
/// coefficient; b1 (b2) sets the first (second) remaining coordinate to 1.
/// The point with parameter [s:t] is s*b1 + t*b2.
struct LineParametrization {
  Coords b1;
  Coords b2;
  std::size_t pivot = 0;
  std::array<std::size_t, 2> free{};
};

LineParametrization parametrize(const Line& line);
/// Parameter [s:t] of a point lying on the line.
std::array<FieldElement, 2> line_parameter(const LineParametrization& param, const ProjectivePoint& p);
ProjectivePoint point_at(const LineParametrization& param, const FieldElement& s, const FieldElement& t);

/// E restricted to the line: a binary cubic G(s, t).
BinaryForm restrict_to_line(const WeierstrassCurve& e, const LineParametrization& param);

/// G / (t0 s - s0 t) when [s0:t0] is a root of G, otherwise nullopt.
std::optional<BinaryForm> divide_by_root(const BinaryForm& g, const FieldElement& s0, const FieldElement& t0);

/// Multiplicity of the root [s0:t0] of a nonzero binary form.
unsigned root_multiplicity(const BinaryForm& g, const FieldElement& s0, const FieldElement& t0);

}  // namespace ecassoc
