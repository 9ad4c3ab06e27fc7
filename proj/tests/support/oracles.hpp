#pragma once

// Reference computations for tests. They share only the field arithmetic with
// the library: points come from the affine equation, lines from cross
// products, and rank from a separate elimination.

#include "ecassoc/certificate.hpp"
#include "ecassoc/curve.hpp"

#include <optional>
#include <vector>

namespace oracle {

using ecassoc::Coords;
using ecassoc::CurvePoint;
using ecassoc::Field;
using ecassoc::FieldElement;
using ecassoc::WeierstrassCurve;

/// y^2 + a1 x y + a3 y - (x^3 + a2 x^2 + a4 x + a6) at (x, y).
FieldElement affine_equation(const WeierstrassCurve& e, const FieldElement& x, const FieldElement& y);

/// O plus every (x, y) in K^2 on the affine equation, scanning x then y.
std::vector<CurvePoint> brute_points(const WeierstrassCurve& e);

/// Coefficients of the tangent line at P from the affine partials (Z = 0 at O).
Coords tangent(const WeierstrassCurve& e, const CurvePoint& p);

Coords cross(const Coords& a, const Coords& b);
bool proportional(const Coords& a, const Coords& b);
FieldElement apply(const Coords& line, const CurvePoint& p);

/// Third intersection by scanning the curve points on the line through P and
/// Q (finite fields only).
CurvePoint brute_star(const WeierstrassCurve& e, const std::vector<CurvePoint>& points, const CurvePoint& p,
                      const CurvePoint& q);

CurvePoint brute_negate(const WeierstrassCurve& e, const CurvePoint& p);

/// True if a point of P^2(L) is a common zero of the curve and its three
/// partials, with the coefficients of `coeffs` (integers) read in L.
bool has_singular_point(const std::array<std::int64_t, 5>& coeffs, const Field& l);

/// Rank by elimination from the last column leftwards, last row upwards.
std::size_t rank(std::vector<std::vector<FieldElement>> rows);

/// Algebraic side of the multiple-intersection criterion via the product
/// rule on l1 l2 l3 (no monomial expansion).
bool product_rule_proportional(const WeierstrassCurve& e, const Coords& l1, const Coords& l2, const Coords& l3,
                               const CurvePoint& p);

/// Geometric side: l1 is the tangent at P or l2, l3 passes through P.
bool tangent_or_incident(const WeierstrassCurve& e, const Coords& l1, const Coords& l2, const Coords& l3,
                         const CurvePoint& p);

/// Curves over F_p or F_q given by small integer coefficient tuples.
WeierstrassCurve curve(const Field& f, std::array<std::int64_t, 5> a);

/// Deterministic sample of curves: every `stride`-th smooth curve.
std::vector<WeierstrassCurve> sample_curves(const Field& f, std::size_t stride);

/// Chord-slope addition with the general Weierstrass formulas.
CurvePoint formula_add(const WeierstrassCurve& e, const CurvePoint& p, const CurvePoint& q);

}  // namespace oracle
