#include "ecassoc/geometry.hpp"

#include "ecassoc/error.hpp"

#include <cctype>
#include <vector>

namespace ecassoc {

namespace {

constexpr std::array<std::string_view, kMonomialCount> kNames{
    "X^3", "Y^3", "Z^3", "X^2Y", "XY^2", "X^2Z", "XZ^2", "Y^2Z", "YZ^2", "XYZ",
};

constexpr std::array<std::string_view, kMonomialCount> kCompactNames{
    "X3", "Y3", "Z3", "X2Y", "XY2", "X2Z", "XZ2", "Y2Z", "YZ2", "XYZ",
};

// Monomial index for the exponent triple (a, b, c) with a + b + c == 3.
constexpr std::size_t monomial_index(int a, int b, int c) {
  for (std::size_t i = 0; i < kMonomialCount; ++i) {
    const auto& e = kMonomialExponents[i];
    if (e[0] == a && e[1] == b && e[2] == c) return i;
  }
  return kMonomialCount;
}

void require_same_field(const Field& a, const Field& b, const char* what) {
  if (!(a == b)) raise(ErrorCode::MixedFields, std::string(what) + ": " + a.spec() + " vs " + b.spec());
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

std::string_view monomial_name(Monomial m) noexcept { return kNames[index_of(m)]; }

std::optional<Monomial> monomial_from_name(std::string_view name) noexcept {
  for (std::size_t i = 0; i < kMonomialCount; ++i) {
    if (kNames[i] == name || kCompactNames[i] == name) return static_cast<Monomial>(i);
  }
  return std::nullopt;
}

Coords normalize_last_nonzero(const Coords& v) {
  for (std::size_t i = 3; i-- > 0;) {
    if (!v[i].is_bound()) raise(ErrorCode::MixedFields, "unbound coordinate");
    if (!v[i].is_zero()) {
      if (v[i].is_one()) return v;
      const auto scale = v[i].inverse();
      return {v[0] * scale, v[1] * scale, v[2] * scale};
    }
  }
  raise(ErrorCode::InvalidPoint, "the zero vector does not define a projective point or line");
}

ProjectivePoint::ProjectivePoint(FieldElement x, FieldElement y, FieldElement z)
    : ProjectivePoint(Coords{std::move(x), std::move(y), std::move(z)}) {}

ProjectivePoint::ProjectivePoint(const Coords& coords) {
  require_same_field(coords[0].field(), coords[1].field(), "point coordinates");
  require_same_field(coords[0].field(), coords[2].field(), "point coordinates");
  coords_ = normalize_last_nonzero(coords);
}

ProjectivePoint ProjectivePoint::affine(const FieldElement& x, const FieldElement& y) {
  return ProjectivePoint(x, y, x.field().one());
}

ProjectivePoint ProjectivePoint::infinity(const Field& field) {
  return ProjectivePoint(field.zero(), field.one(), field.zero());
}

bool ProjectivePoint::is_origin_at_infinity() const noexcept {
  return coords_[0].is_zero() && coords_[1].is_one() && coords_[2].is_zero();
}

Line::Line(FieldElement a, FieldElement b, FieldElement c) : Line(Coords{std::move(a), std::move(b), std::move(c)}) {}

Line::Line(const Coords& coeffs) : coeffs_(coeffs) {
  require_same_field(coeffs[0].field(), coeffs[1].field(), "line coefficients");
  require_same_field(coeffs[0].field(), coeffs[2].field(), "line coefficients");
  if (coeffs[0].is_zero() && coeffs[1].is_zero() && coeffs[2].is_zero()) {
    raise(ErrorCode::InvalidPoint, "line coefficients must not all vanish");
  }
}

CubicForm CubicForm::zero(const Field& field) {
  CubicForm f;
  f.c.fill(field.zero());
  return f;
}

Line line_through(const ProjectivePoint& p, const ProjectivePoint& q) {
  require_same_field(p.field(), q.field(), "line_through");
  if (p == q) raise(ErrorCode::CoincidentPoints, "line_through needs distinct points; use the tangent for P = Q");
  const auto& a = p.coords();
  const auto& b = q.coords();
  Coords cross{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
  return Line(normalize_last_nonzero(cross));
}

FieldElement eval_line(const Line& line, const ProjectivePoint& p) {
  require_same_field(line.field(), p.field(), "eval_line");
  const auto& c = line.coeffs();
  const auto& x = p.coords();
  return c[0] * x[0] + c[1] * x[1] + c[2] * x[2];
}

MonomialVector monomial_vector(const ProjectivePoint& p, MonomialDerivative which) {
  const auto field = p.field();
  // powers[v][e] = coordinate v raised to e.
  std::array<std::array<FieldElement, 4>, 3> powers;
  for (std::size_t v = 0; v < 3; ++v) {
    powers[v][0] = field.one();
    for (std::size_t e = 1; e < 4; ++e) powers[v][e] = powers[v][e - 1] * p.coords()[v];
  }
  const int var = which == MonomialDerivative::none  ? -1
                  : which == MonomialDerivative::d_x ? 0
                  : which == MonomialDerivative::d_y ? 1
                                                      : 2;
  MonomialVector out;
  for (std::size_t i = 0; i < kMonomialCount; ++i) {
    auto e = kMonomialExponents[i];
    auto factor = field.one();
    if (var >= 0) {
      if (e[var] == 0) {
        out[i] = field.zero();
        continue;
      }
      factor = field.from_int(e[var]);
      --e[var];
    }
    out[i] = factor * powers[0][e[0]] * powers[1][e[1]] * powers[2][e[2]];
  }
  return out;
}

CubicForm cubic_from_lines(const Line& l1, const Line& l2, const Line& l3) {
  require_same_field(l1.field(), l2.field(), "cubic_from_lines");
  require_same_field(l1.field(), l3.field(), "cubic_from_lines");
  auto form = CubicForm::zero(l1.field());
  const auto& a = l1.coeffs();
  const auto& b = l2.coeffs();
  const auto& c = l3.coeffs();
  for (int i = 0; i < 3; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; j < 3; ++j) {
      if (b[j].is_zero()) continue;
      const auto ab = a[i] * b[j];
      for (int k = 0; k < 3; ++k) {
        if (c[k].is_zero()) continue;
        std::array<int, 3> e{0, 0, 0};
        ++e[i];
        ++e[j];
        ++e[k];
        form.c[monomial_index(e[0], e[1], e[2])] += ab * c[k];
      }
    }
  }
  return form;
}

FieldElement dot(const MonomialVector& a, const MonomialVector& b) {
  auto sum = a[0] * b[0];
  for (std::size_t i = 1; i < kMonomialCount; ++i) sum += a[i] * b[i];
  return sum;
}

FieldElement eval_cubic(const CubicForm& form, const ProjectivePoint& p) {
  require_same_field(form.field(), p.field(), "eval_cubic");
  return dot(monomial_vector(p), form.c);
}

FieldElement eval_cubic_partial(const CubicForm& form, const ProjectivePoint& p, MonomialDerivative which) {
  require_same_field(form.field(), p.field(), "eval_cubic_partial");
  return dot(monomial_vector(p, which), form.c);
}

std::string format_point(const ProjectivePoint& p) {
  if (p.is_origin_at_infinity()) return "O";
  if (p.is_affine()) return "(" + p.x().to_string() + "," + p.y().to_string() + ")";
  return "[" + p.x().to_string() + ":" + p.y().to_string() + ":" + p.z().to_string() + "]";
}

ProjectivePoint parse_point(const Field& field, std::string_view text) {
  text = trim(text);
  if (text == "O") return ProjectivePoint::infinity(field);
  if (text.size() >= 2 && text.front() == '(' && text.back() == ')') {
    const auto body = text.substr(1, text.size() - 2);
    std::vector<std::string_view> tokens;
    std::size_t start = 0;
    while (true) {
      const auto pos = body.find(',', start);
      tokens.push_back(body.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
      if (pos == std::string_view::npos) break;
      start = pos + 1;
    }
    const std::size_t k = field.degree();
    if (tokens.size() != 2 * k) {
      raise(ErrorCode::ParseError, "affine point over " + field.spec() + " needs " + std::to_string(2 * k) +
                                       " comma-separated values, got '" + std::string(text) + "'");
    }
    // Coordinates occupy k consecutive tokens each; re-slice the body text.
    const auto x_end = tokens[k - 1].data() + tokens[k - 1].size() - body.data();
    const auto x_text = body.substr(0, static_cast<std::size_t>(x_end));
    const auto y_text = body.substr(static_cast<std::size_t>(x_end) + 1);
    return ProjectivePoint::affine(field.parse_element(x_text), field.parse_element(y_text));
  }
  if (text.size() >= 2 && text.front() == '[' && text.back() == ']') {
    const auto body = text.substr(1, text.size() - 2);
    const auto c1 = body.find(':');
    const auto c2 = c1 == std::string_view::npos ? c1 : body.find(':', c1 + 1);
    if (c2 == std::string_view::npos || body.find(':', c2 + 1) != std::string_view::npos) {
      raise(ErrorCode::ParseError, "projective point must be written [x:y:z], got '" + std::string(text) + "'");
    }
    const auto x = field.parse_element(body.substr(0, c1));
    const auto y = field.parse_element(body.substr(c1 + 1, c2 - c1 - 1));
    const auto z = field.parse_element(body.substr(c2 + 1));
    if (x.is_zero() && y.is_zero() && z.is_zero()) raise(ErrorCode::ParseError, "[0:0:0] is not a point");
    return ProjectivePoint(x, y, z);
  }
  raise(ErrorCode::ParseError, "point must be 'O', '(x,y)' or '[x:y:z]', got '" + std::string(text) + "'");
}

}  // namespace ecassoc
