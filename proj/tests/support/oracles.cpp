#include "oracles.hpp"

#include "ecassoc/harness.hpp"

#include <stdexcept>

namespace oracle {

FieldElement affine_equation(const WeierstrassCurve& e, const FieldElement& x, const FieldElement& y) {
  return y * y + e.a1() * x * y + e.a3() * y - (x * x * x + e.a2() * x * x + e.a4() * x + e.a6());
}

std::vector<CurvePoint> brute_points(const WeierstrassCurve& e) {
  const auto field = e.field();
  std::vector<CurvePoint> out{e.infinity()};
  const auto els = field.elements();
  for (const auto& x : els) {
    for (const auto& y : els) {
      if (affine_equation(e, x, y).is_zero()) {
        out.push_back(e.point(ecassoc::ProjectivePoint::affine(x, y)));
      }
    }
  }
  return out;
}

Coords tangent(const WeierstrassCurve& e, const CurvePoint& p) {
  const auto f = e.field();
  if (p.is_infinity()) return {f.zero(), f.zero(), f.one()};
  const auto& x = p.point().x();
  const auto& y = p.point().y();
  const auto three = f.from_int(3);
  const auto two = f.from_int(2);
  const auto fx = e.a1() * y - three * x * x - two * e.a2() * x - e.a4();
  const auto fy = two * y + e.a1() * x + e.a3();
  if (fx.is_zero() && fy.is_zero()) throw std::logic_error("singular point in oracle tangent");
  return {fx, fy, -(fx * x + fy * y)};
}

Coords cross(const Coords& a, const Coords& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

bool proportional(const Coords& a, const Coords& b) {
  const auto c = cross(a, b);
  return c[0].is_zero() && c[1].is_zero() && c[2].is_zero();
}

FieldElement apply(const Coords& line, const CurvePoint& p) {
  const auto& c = p.point().coords();
  return line[0] * c[0] + line[1] * c[1] + line[2] * c[2];
}

CurvePoint brute_star(const WeierstrassCurve& e, const std::vector<CurvePoint>& points, const CurvePoint& p,
                      const CurvePoint& q) {
  const Coords line = p == q ? tangent(e, p) : cross(p.point().coords(), q.point().coords());
  std::vector<CurvePoint> others;
  for (const auto& s : points) {
    if (!(s == p) && !(s == q) && apply(line, s).is_zero()) others.push_back(s);
  }
  if (others.size() > 1) throw std::logic_error("line meets the curve in more than three points");
  if (others.size() == 1) return others.front();
  if (p == q) return p;
  return proportional(line, tangent(e, p)) ? p : q;
}

CurvePoint brute_negate(const WeierstrassCurve& e, const CurvePoint& p) {
  if (p.is_infinity()) return p;
  const auto& x = p.point().x();
  const auto& y = p.point().y();
  return e.point(ecassoc::ProjectivePoint::affine(x, -e.a1() * x - e.a3() - y));
}

bool has_singular_point(const std::array<std::int64_t, 5>& coeffs, const Field& l) {
  const auto a1 = l.from_int(coeffs[0]), a2 = l.from_int(coeffs[1]), a3 = l.from_int(coeffs[2]),
             a4 = l.from_int(coeffs[3]), a6 = l.from_int(coeffs[4]);
  const auto two = l.from_int(2), three = l.from_int(3);
  const auto zero_at = [&](const FieldElement& x, const FieldElement& y, const FieldElement& z) {
    const auto f = x * x * x + a2 * x * x * z + a4 * x * z * z + a6 * z * z * z - y * y * z - a1 * x * y * z -
                   a3 * y * z * z;
    const auto fx = three * x * x + two * a2 * x * z + a4 * z * z - a1 * y * z;
    const auto fy = -two * y * z - a1 * x * z - a3 * z * z;
    const auto fz = a2 * x * x + two * a4 * x * z + three * a6 * z * z - y * y - a1 * x * y - two * a3 * y * z;
    return f.is_zero() && fx.is_zero() && fy.is_zero() && fz.is_zero();
  };
  if (zero_at(l.zero(), l.one(), l.zero())) return true;
  const auto els = l.elements();
  for (const auto& x : els) {
    for (const auto& y : els) {
      if (zero_at(x, y, l.one())) return true;
    }
  }
  return false;
}

std::size_t rank(std::vector<std::vector<FieldElement>> rows) {
  if (rows.empty()) return 0;
  std::size_t r = rows.size();  // rows [r, n) are echelon rows
  for (std::size_t col = rows[0].size(); col-- > 0 && r > 0;) {
    std::size_t pivot = r;
    for (std::size_t i = r; i-- > 0;) {
      if (!rows[i][col].is_zero()) {
        pivot = i;
        break;
      }
    }
    if (pivot == r) continue;
    --r;
    std::swap(rows[pivot], rows[r]);
    for (std::size_t i = 0; i < r; ++i) {
      if (rows[i][col].is_zero()) continue;
      const auto factor = rows[i][col] / rows[r][col];
      for (std::size_t j = 0; j < rows[i].size(); ++j) rows[i][j] -= factor * rows[r][j];
    }
  }
  return rows.size() - r;
}

bool product_rule_proportional(const WeierstrassCurve& e, const Coords& l1, const Coords& l2, const Coords& l3,
                               const CurvePoint& p) {
  const auto v1 = apply(l1, p), v2 = apply(l2, p), v3 = apply(l3, p);
  Coords grad;
  for (std::size_t t = 0; t < 3; ++t) grad[t] = l1[t] * v2 * v3 + l2[t] * v1 * v3 + l3[t] * v1 * v2;
  const auto tan = tangent(e, p);
  // At an affine point the library's (T_X, T_Y) is a nonzero multiple of the
  // affine partials (fx, fy), so proportionality is the vanishing of the minor.
  return (grad[0] * tan[1] - grad[1] * tan[0]).is_zero();
}

bool tangent_or_incident(const WeierstrassCurve& e, const Coords& l1, const Coords& l2, const Coords& l3,
                         const CurvePoint& p) {
  return proportional(l1, tangent(e, p)) || apply(l2, p).is_zero() || apply(l3, p).is_zero();
}

WeierstrassCurve curve(const Field& f, std::array<std::int64_t, 5> a) {
  return WeierstrassCurve(f, {f.from_int(a[0]), f.from_int(a[1]), f.from_int(a[2]), f.from_int(a[3]),
                              f.from_int(a[4])});
}

std::vector<WeierstrassCurve> sample_curves(const Field& f, std::size_t stride) {
  ecassoc::SweepOptions o;
  o.curve_stride = stride;
  return ecassoc::select_curves(f, o);
}

CurvePoint formula_add(const WeierstrassCurve& e, const CurvePoint& p, const CurvePoint& q) {
  if (p.is_infinity()) return q;
  if (q.is_infinity()) return p;
  const auto f = e.field();
  const auto &x1 = p.point().x(), &y1 = p.point().y(), &x2 = q.point().x(), &y2 = q.point().y();
  FieldElement lambda;
  if (x1 == x2) {
    if ((y1 + y2 + e.a1() * x2 + e.a3()).is_zero()) return e.infinity();
    lambda = (f.from_int(3) * x1 * x1 + f.from_int(2) * e.a2() * x1 + e.a4() - e.a1() * y1) /
             (f.from_int(2) * y1 + e.a1() * x1 + e.a3());
  } else {
    lambda = (y2 - y1) / (x2 - x1);
  }
  const auto nu = y1 - lambda * x1;
  const auto x3 = lambda * lambda + e.a1() * lambda - e.a2() - x1 - x2;
  const auto y3 = -(lambda + e.a1()) * x3 - nu - e.a3();
  return e.point(ecassoc::ProjectivePoint::affine(x3, y3));
}

}  // namespace oracle
