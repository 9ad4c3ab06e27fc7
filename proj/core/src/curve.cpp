#include "ecassoc/curve.hpp"

#include "ecassoc/error.hpp"

#include <cctype>
#include <map>
#include <memory>
#include <mutex>

namespace ecassoc {

namespace detail {

struct CurveData {
  Field field;
  WeierstrassCoefficients coeffs;
  CubicForm form;
  FieldElement discriminant;
  std::string spec;
};

}  // namespace detail

namespace {

using detail::CurveData;

std::mutex& registry_mutex() {
  static std::mutex m;
  return m;
}

std::map<std::string, std::unique_ptr<CurveData>>& registry() {
  static std::map<std::string, std::unique_ptr<CurveData>> r;
  return r;
}

std::string coefficient_spec(const WeierstrassCoefficients& a) {
  return a.a1.to_string() + "," + a.a2.to_string() + "," + a.a3.to_string() + "," + a.a4.to_string() + "," +
         a.a6.to_string();
}

CubicForm curve_form(const Field& field, const WeierstrassCoefficients& a) {
  auto f = CubicForm::zero(field);
  f[Monomial::X3] = field.one();
  f[Monomial::Z3] = a.a6;
  f[Monomial::X2Z] = a.a2;
  f[Monomial::XZ2] = a.a4;
  f[Monomial::Y2Z] = -field.one();
  f[Monomial::YZ2] = -a.a3;
  f[Monomial::XYZ] = -a.a1;
  return f;
}

void require_curve(const WeierstrassCurve& e, const CurvePoint& p, const char* what) {
  if (!(p.curve() == e)) {
    raise(ErrorCode::CrossCurve, std::string(what) + ": point " + p.to_string() + " belongs to curve [" +
                                     p.curve().spec() + "], not [" + e.spec() + "]");
  }
}

BinaryForm multiply(const BinaryForm& a, const BinaryForm& b) {
  BinaryForm out(a.size() + b.size() - 1, a[0].field().zero());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

bool is_zero_form(const BinaryForm& g) {
  for (const auto& c : g) {
    if (!c.is_zero()) return false;
  }
  return true;
}

std::string describe_form(const BinaryForm& g) {
  std::string out = "[";
  for (std::size_t i = 0; i < g.size(); ++i) out += (i ? "," : "") + g[i].to_string();
  return out + "]";
}

// Root [s:t] of a nonzero linear form g0 s + g1 t.
std::array<FieldElement, 2> linear_root(const BinaryForm& g) { return {-g[1], g[0]}; }

}  // namespace

FieldElement discriminant(const WeierstrassCoefficients& a) {
  const auto field = a.a1.field();
  const auto n = [&](std::int64_t v) { return field.from_int(v); };
  const auto b2 = a.a1 * a.a1 + n(4) * a.a2;
  const auto b4 = n(2) * a.a4 + a.a1 * a.a3;
  const auto b6 = a.a3 * a.a3 + n(4) * a.a6;
  const auto b8 = a.a1 * a.a1 * a.a6 + n(4) * a.a2 * a.a6 - a.a1 * a.a3 * a.a4 + a.a2 * a.a3 * a.a3 - a.a4 * a.a4;
  return -(b2 * b2 * b8) - n(8) * b4 * b4 * b4 - n(27) * b6 * b6 + n(9) * b2 * b4 * b6;
}

WeierstrassCurve::WeierstrassCurve(const Field& field, const WeierstrassCoefficients& coeffs) : data_(nullptr) {
  for (const auto* c : {&coeffs.a1, &coeffs.a2, &coeffs.a3, &coeffs.a4, &coeffs.a6}) {
    if (!(c->field() == field)) raise(ErrorCode::MixedFields, "curve coefficient outside " + field.spec());
  }
  const auto spec = coefficient_spec(coeffs);
  const auto key = field.spec() + "|" + spec;
  {
    std::lock_guard lock(registry_mutex());
    if (const auto it = registry().find(key); it != registry().end()) {
      data_ = it->second.get();
      return;
    }
  }
  auto delta = ecassoc::discriminant(coeffs);
  if (delta.is_zero()) {
    raise(ErrorCode::SingularCurve, "curve [" + spec + "] over " + field.spec() + " is singular (discriminant " +
                                        delta.to_string() + ")");
  }
  auto data = std::make_unique<CurveData>(
      CurveData{field, coeffs, curve_form(field, coeffs), std::move(delta), spec});
  std::lock_guard lock(registry_mutex());
  auto& slot = registry()[key];
  if (!slot) slot = std::move(data);
  data_ = slot.get();
}

WeierstrassCurve WeierstrassCurve::parse(const Field& field, std::string_view spec) {
  std::vector<std::string_view> tokens;
  std::size_t start = 0;
  while (true) {
    const auto pos = spec.find(',', start);
    tokens.push_back(spec.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  const std::size_t k = field.degree();
  if (tokens.size() != 5 * k) {
    raise(ErrorCode::ParseError, "curve spec over " + field.spec() + " needs " + std::to_string(5 * k) +
                                     " comma-separated values (a1,a2,a3,a4,a6), got '" + std::string(spec) + "'");
  }
  std::array<FieldElement, 5> a;
  for (std::size_t i = 0; i < 5; ++i) {
    const auto begin = tokens[i * k].data() - spec.data();
    const auto end = tokens[i * k + k - 1].data() + tokens[i * k + k - 1].size() - spec.data();
    a[i] = field.parse_element(spec.substr(static_cast<std::size_t>(begin), static_cast<std::size_t>(end - begin)));
  }
  return WeierstrassCurve(field, {a[0], a[1], a[2], a[3], a[4]});
}

Field WeierstrassCurve::field() const { return data_->field; }
const WeierstrassCoefficients& WeierstrassCurve::coefficients() const { return data_->coeffs; }
const CubicForm& WeierstrassCurve::form() const { return data_->form; }
const FieldElement& WeierstrassCurve::discriminant() const { return data_->discriminant; }
std::string WeierstrassCurve::spec() const { return data_->spec; }

bool WeierstrassCurve::contains(const ProjectivePoint& p) const { return eval_curve(*this, p).is_zero(); }

CurvePoint WeierstrassCurve::point(const ProjectivePoint& p) const {
  if (!(p.field() == field())) raise(ErrorCode::MixedFields, "point outside " + field().spec());
  if (!contains(p)) raise(ErrorCode::NotOnCurve, format_point(p) + " is not on curve [" + spec() + "]");
  return CurvePoint(data_, p);
}

CurvePoint WeierstrassCurve::point(std::string_view text) const { return point(parse_point(field(), text)); }

CurvePoint WeierstrassCurve::infinity() const { return CurvePoint(data_, ProjectivePoint::infinity(field())); }

FieldElement eval_curve(const WeierstrassCurve& e, const ProjectivePoint& p) { return eval_cubic(e.form(), p); }

FieldElement discriminant(const WeierstrassCurve& e) { return e.discriminant(); }

Coords tangent_coeffs(const WeierstrassCurve& e, const CurvePoint& p) {
  require_curve(e, p, "tangent_coeffs");
  const auto f = e.field();
  const auto n = [&](std::int64_t v) { return f.from_int(v); };
  const auto& [x, y, z] = p.point().coords();
  const auto& a = e.coefficients();
  Coords t{
      n(3) * x * x + n(2) * a.a2 * x * z + a.a4 * z * z - a.a1 * y * z,
      -(n(2) * y * z) - a.a1 * x * z - a.a3 * z * z,
      a.a2 * x * x + n(2) * a.a4 * x * z + n(3) * a.a6 * z * z - y * y - a.a1 * x * y - n(2) * a.a3 * y * z,
  };
  if (t[0].is_zero() && t[1].is_zero() && t[2].is_zero()) {
    raise(ErrorCode::SingularPoint, "all partial derivatives vanish at " + p.to_string());
  }
  return t;
}

Line tangent_line(const WeierstrassCurve& e, const CurvePoint& p) { return Line(tangent_coeffs(e, p)); }

CurvePoint negate(const WeierstrassCurve& e, const CurvePoint& p) {
  require_curve(e, p, "negate");
  if (p.is_infinity()) return p;
  const auto& pt = p.point();
  return e.point(ProjectivePoint::affine(pt.x(), -(e.a1() * pt.x()) - e.a3() - pt.y()));
}

LineParametrization parametrize(const Line& line) {
  const auto& c = line.coeffs();
  LineParametrization param;
  param.pivot = c[0].is_zero() ? (c[1].is_zero() ? 2 : 1) : 0;
  std::size_t slot = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    if (i != param.pivot) param.free[slot++] = i;
  }
  const auto field = line.field();
  const auto inv = c[param.pivot].inverse();
  param.b1 = {field.zero(), field.zero(), field.zero()};
  param.b2 = param.b1;
  param.b1[param.free[0]] = field.one();
  param.b1[param.pivot] = -(c[param.free[0]] * inv);
  param.b2[param.free[1]] = field.one();
  param.b2[param.pivot] = -(c[param.free[1]] * inv);
  return param;
}

std::array<FieldElement, 2> line_parameter(const LineParametrization& param, const ProjectivePoint& p) {
  return {p.coords()[param.free[0]], p.coords()[param.free[1]]};
}

ProjectivePoint point_at(const LineParametrization& param, const FieldElement& s, const FieldElement& t) {
  return ProjectivePoint(s * param.b1[0] + t * param.b2[0], s * param.b1[1] + t * param.b2[1],
                         s * param.b1[2] + t * param.b2[2]);
}

BinaryForm restrict_to_line(const WeierstrassCurve& e, const LineParametrization& param) {
  const auto field = e.field();
  std::array<BinaryForm, 3> linear;
  for (std::size_t v = 0; v < 3; ++v) linear[v] = {param.b1[v], param.b2[v]};
  BinaryForm g(4, field.zero());
  const auto& c = e.form().c;
  for (std::size_t i = 0; i < kMonomialCount; ++i) {
    if (c[i].is_zero()) continue;
    BinaryForm term{field.one()};
    for (std::size_t v = 0; v < 3; ++v) {
      for (int k = 0; k < kMonomialExponents[i][v]; ++k) term = multiply(term, linear[v]);
    }
    for (std::size_t j = 0; j < 4; ++j) g[j] += c[i] * term[j];
  }
  return g;
}

std::optional<BinaryForm> divide_by_root(const BinaryForm& g, const FieldElement& s0, const FieldElement& t0) {
  // Divide by u s + v t with (u, v) = (t0, -s0).
  const auto& u = t0;
  const auto v = -s0;
  const auto n = g.size() - 1;
  BinaryForm q(n, g[0].field().zero());
  if (!u.is_zero()) {
    const auto inv = u.inverse();
    q[0] = g[0] * inv;
    for (std::size_t i = 1; i < n; ++i) q[i] = (g[i] - v * q[i - 1]) * inv;
    if (!(g[n] - v * q[n - 1]).is_zero()) return std::nullopt;
  } else {
    if (!g[0].is_zero()) return std::nullopt;
    const auto inv = v.inverse();
    for (std::size_t i = 1; i <= n; ++i) q[i - 1] = g[i] * inv;
  }
  return q;
}

unsigned root_multiplicity(const BinaryForm& g, const FieldElement& s0, const FieldElement& t0) {
  if (is_zero_form(g)) raise(ErrorCode::LineOnCurve, "root multiplicity of the zero form is undefined");
  unsigned m = 0;
  auto current = g;
  while (current.size() > 1) {
    auto next = divide_by_root(current, s0, t0);
    if (!next) break;
    current = std::move(*next);
    ++m;
  }
  return m;
}

struct StarMemo::State {
  WeierstrassCurve curve;
  std::uint64_t order;
  std::vector<std::optional<CurvePoint>> points;
  std::vector<std::int32_t> table;

  std::size_t index(const CurvePoint& p) const {
    if (p.is_infinity()) return order * order;
    const auto& c = p.point().coords();
    return c[0].code() * order + c[1].code();
  }
};

namespace {

thread_local StarMemo::State* active_memo = nullptr;

CurvePoint star_uncached(const WeierstrassCurve& e, const CurvePoint& p, const CurvePoint& q);

}  // namespace

StarMemo::StarMemo(const WeierstrassCurve& e) {
  const auto order = e.field().order();
  if (!order || *order > kStarMemoMaxOrder || active_memo) return;
  const auto n = *order * *order + 1;
  state_ = std::make_unique<State>(State{e, *order, std::vector<std::optional<CurvePoint>>(n),
                                         std::vector<std::int32_t>(n * n, -1)});
  active_memo = state_.get();
}

StarMemo::~StarMemo() {
  if (state_ && active_memo == state_.get()) active_memo = nullptr;
}

CurvePoint star(const WeierstrassCurve& e, const CurvePoint& p, const CurvePoint& q) {
  auto* memo = active_memo;
  if (!memo || !(memo->curve == e)) return star_uncached(e, p, q);
  require_curve(e, p, "star");
  require_curve(e, q, "star");
  const auto n = memo->points.size();
  const auto i = memo->index(p);
  const auto j = memo->index(q);
  auto& slot = memo->table[i * n + j];
  if (slot < 0) {
    const auto r = star_uncached(e, p, q);
    const auto k = memo->index(r);
    if (!memo->points[k]) memo->points[k] = r;
    slot = static_cast<std::int32_t>(k);
    memo->table[j * n + i] = slot;
  }
  return *memo->points[static_cast<std::size_t>(slot)];
}

namespace {

CurvePoint star_uncached(const WeierstrassCurve& e, const CurvePoint& p, const CurvePoint& q) {
  require_curve(e, p, "star");
  require_curve(e, q, "star");
  const auto line = p == q ? tangent_line(e, p) : line_through(p.point(), q.point());
  const auto param = parametrize(line);
  const auto g = restrict_to_line(e, param);
  if (is_zero_form(g)) {
    raise(ErrorCode::LineOnCurve, "line through " + p.to_string() + " and " + q.to_string() + " lies on E");
  }
  const auto [ps, pt] = line_parameter(param, p.point());
  const auto [qs, qt] = line_parameter(param, q.point());
  const auto after_p = divide_by_root(g, ps, pt);
  if (!after_p) {
    raise(ErrorCode::DichotomyViolation, p.to_string() + " is not a root of the restricted cubic " + describe_form(g));
  }
  const auto residual = divide_by_root(*after_p, qs, qt);
  if (!residual) {
    raise(ErrorCode::DichotomyViolation,
          p == q ? "tangent restriction lacks a double root at " + p.to_string()
                 : q.to_string() + " is not a root of the restricted cubic " + describe_form(g));
  }
  const auto [rs, rt] = linear_root(*residual);
  return e.point(point_at(param, rs, rt));
}

}  // namespace

CurvePoint add_points(const WeierstrassCurve& e, const CurvePoint& p, const CurvePoint& q) {
  return negate(e, star(e, p, q));
}

std::vector<CurvePoint> enumerate_points(const WeierstrassCurve& e) {
  const auto field = e.field();
  if (!field.is_finite()) raise(ErrorCode::InfiniteField, "cannot enumerate points over Q");
  const auto elements = field.elements();
  std::vector<CurvePoint> out{e.infinity()};
  const auto one = field.one();
  for (const auto& x : elements) {
    for (const auto& y : elements) {
      ProjectivePoint pt(x, y, one);
      if (e.contains(pt)) out.push_back(e.point(pt));
    }
  }
  return out;
}

}  // namespace ecassoc
