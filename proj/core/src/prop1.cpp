#include "certificate_internal.hpp"

#include <algorithm>
#include <numeric>

namespace ecassoc {

namespace {

using detail::expect;
using detail::expect_distinct;
using detail::expect_points;
using detail::vector_string;

std::string index_list(const std::vector<int>& v) {
  std::string out = "{";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + "}";
}

bool contains(const std::vector<int>& v, int x) { return std::find(v.begin(), v.end(), x) != v.end(); }

Vector concat(const MonomialVector& c, const Vector& w) {
  Vector out(c.begin(), c.end());
  out.insert(out.end(), w.begin(), w.end());
  return out;
}

Vector form_vector(const CubicForm& f) { return Vector(f.c.begin(), f.c.end()); }

std::pair<FieldElement, FieldElement> partial_pair(const CubicForm& f, const ProjectivePoint& p) {
  return {eval_cubic_partial(f, p, MonomialDerivative::d_x), eval_cubic_partial(f, p, MonomialDerivative::d_y)};
}

[[noreturn]] void fail_with_matrix(ErrorCode code, const std::string& what, const Matrix& h) {
  raise(code, what + "\nH =\n" + h.dump());
}

}  // namespace

bool has_triple_coincidence(const TenPoints& tp, int ninth) {
  std::array<int, 9> idx{1, 2, 3, 4, 5, 6, 7, 8, ninth};
  for (std::size_t a = 0; a < idx.size(); ++a) {
    int count = 1;
    for (std::size_t b = a + 1; b < idx.size(); ++b) {
      if (tp[idx[a]] == tp[idx[b]] && ++count >= 3) return true;
    }
  }
  return false;
}

IndexSets build_index_sets(const TenPoints& tp, int ninth) {
  if (has_triple_coincidence(tp, ninth)) {
    raise(ErrorCode::TripleCoincidence,
          "three of P1..P8, P" + std::to_string(ninth) + " coincide; the triple needs a reduction");
  }
  std::array<int, 9> side{};  // 0 unassigned, 1 in I, 2 in J
  const auto in = [](int x, std::initializer_list<int> set) { return std::find(set.begin(), set.end(), x) != set.end(); };
  for (int i = 1; i <= 8; ++i) {
    for (int j = i + 1; j <= 8; ++j) {
      if (!(tp[i] == tp[j])) continue;
      int keep = i;
      if (in(i, {2, 4}) || in(j, {2, 4})) {
        keep = in(i, {2, 4}) ? i : j;
      } else if (in(i, {3, 5}) || in(j, {3, 5})) {
        keep = in(i, {3, 5}) ? i : j;
      } else if (in(i, {6, 7, 8}) && in(j, {6, 7, 8})) {
        keep = i == 6 ? j : i;
      }
      side[static_cast<std::size_t>(keep)] = 1;
      side[static_cast<std::size_t>(keep == i ? j : i)] = 2;
    }
  }
  IndexSets out;
  for (int i = 1; i <= 8; ++i) (side[static_cast<std::size_t>(i)] == 2 ? out.J : out.I).push_back(i);
  return out;
}

MatrixH build_matrix_H(const WeierstrassCurve& e, const TenPoints& tp, const IndexSets& idx) {
  const auto field = e.field();
  const std::size_t cols = kMonomialCount + idx.J.size();
  MatrixH h{Matrix(field, 0, cols), {}, {}};
  for (std::size_t c = 0; c < kMonomialCount; ++c) h.column_labels.emplace_back(monomial_name(static_cast<Monomial>(c)));
  for (const int j : idx.J) h.column_labels.push_back("P" + std::to_string(j));

  std::vector<Vector> rows;
  for (int i = 1; i <= 8; ++i) {
    const auto& pt = tp[i].point();
    if (contains(idx.I, i)) {
      const auto m = monomial_vector(pt);
      Vector row(m.begin(), m.end());
      row.resize(cols, field.zero());
      rows.push_back(std::move(row));
      h.row_labels.push_back("v[" + std::to_string(i) + "]");
      continue;
    }
    const auto column =
        kMonomialCount + static_cast<std::size_t>(std::find(idx.J.begin(), idx.J.end(), i) - idx.J.begin());
    const auto t = tangent_coeffs(e, tp[i]);
    for (const auto& [which, k, name] : {std::tuple{MonomialDerivative::d_x, 0, "X"},
                                         std::tuple{MonomialDerivative::d_y, 1, "Y"}}) {
      const auto m = monomial_vector(pt, which);
      Vector row(m.begin(), m.end());
      row.resize(cols, field.zero());
      row[column] = -t[static_cast<std::size_t>(k)];
      rows.push_back(std::move(row));
      h.row_labels.push_back("v[" + std::to_string(i) + "," + name + "]");
    }
  }
  h.m = Matrix::from_rows(field, std::move(rows));
  return h;
}

std::optional<FieldElement> proportionality(const FieldElement& a, const FieldElement& b, const Coords& t) {
  if (!t[0].is_zero()) {
    auto lambda = a / t[0];
    if (b == lambda * t[1]) return lambda;
    return std::nullopt;
  }
  if (!t[1].is_zero()) {
    auto lambda = b / t[1];
    if (a.is_zero()) return lambda;
    return std::nullopt;
  }
  return std::nullopt;
}

MultipleIntersection multiple_intersection(const WeierstrassCurve& e, const Line& l1, const Line& l2, const Line& l3,
                                           const CurvePoint& p) {
  if (p.is_infinity()) raise(ErrorCode::PointAtInfinity, "multiple intersection is not defined at O");
  if (!eval_line(l1, p.point()).is_zero()) {
    raise(ErrorCode::InvalidPoint, "the first line must pass through " + p.to_string());
  }
  const auto form = cubic_from_lines(l1, l2, l3);
  const auto t = tangent_coeffs(e, p);
  const auto [fx, fy] = partial_pair(form, p.point());
  MultipleIntersection out;
  out.lambda = proportionality(fx, fy, t);
  out.algebraic = out.lambda.has_value();
  out.geometric = l1 == Line(t) || eval_line(l2, p.point()).is_zero() || eval_line(l3, p.point()).is_zero();
  return out;
}

Line chord(const WeierstrassCurve& e, const CurvePoint& a, const CurvePoint& b) {
  return a == b ? tangent_line(e, a) : line_through(a.point(), b.point());
}

namespace {

CubicFactors factors(const WeierstrassCurve& e, const TenPoints& tp, std::array<std::pair<int, int>, 3> pairs) {
  std::array<Line, 3> lines{chord(e, tp[pairs[0].first], tp[pairs[0].second]),
                            chord(e, tp[pairs[1].first], tp[pairs[1].second]),
                            chord(e, tp[pairs[2].first], tp[pairs[2].second])};
  auto form = cubic_from_lines(lines[0], lines[1], lines[2]);
  return {lines, form};
}

}  // namespace

CubicFactors build_F1(const WeierstrassCurve& e, const TenPoints& tp) {
  return factors(e, tp, {{{2, 3}, {4, 6}, {7, 5}}});
}

CubicFactors build_F2(const WeierstrassCurve& e, const TenPoints& tp) {
  return factors(e, tp, {{{4, 5}, {2, 6}, {8, 3}}});
}

Lemma4Witnesses lemma4_witnesses(const WeierstrassCurve& e, const TenPoints& tp, const IndexSets& idx,
                                 const CubicForm& f1, const CubicForm& f2) {
  Lemma4Witnesses w;
  for (const int j : idx.J) {
    const auto& p = tp[j];
    const auto t = tangent_coeffs(e, p);
    for (const auto& [form, out, name] : {std::tuple{&e.form(), &w.w_E, "E"}, std::tuple{&f1, &w.w_F1, "F1"},
                                          std::tuple{&f2, &w.w_F2, "F2"}}) {
      const auto [fx, fy] = partial_pair(*form, p.point());
      const auto lambda = proportionality(fx, fy, t);
      if (!lambda) {
        raise(ErrorCode::WitnessExtractionFailed,
              std::string("no lambda for ") + name + " at P" + std::to_string(j) + " = " + p.to_string() +
                  ": (dX, dY) = (" + fx.to_string() + "," + fy.to_string() + "), (T_X, T_Y) = (" +
                  t[0].to_string() + "," + t[1].to_string() + ")");
      }
      out->push_back(*lambda);
    }
  }
  return w;
}

Certificate certify_prop1(const WeierstrassCurve& e, const TenPoints& tp, const CertifyOptions& options) {
  Certificate node;
  detail::fill_header(node, e, tp);
  detail::prop1_into(node, e, tp, options);
  detail::finish_node(node, tp);
  return node;
}

void detail::prop1_into(Certificate& node, const WeierstrassCurve& e, const TenPoints& tp,
                        const CertifyOptions& options) {
  node.path = CertificatePath::prop1;
  node.case_or_lemma.reset();
  auto& checks = node.checks;
  const auto field = e.field();

  {
    std::map<std::string, std::string> w;
    for (int i = 1; i <= 9; ++i) w["P" + std::to_string(i)] = tp[i].to_string();
    expect(checks, "hypothesis", "no three of P1..P9 coincide", std::move(w), !has_triple_coincidence(tp, 9),
           ErrorCode::TripleCoincidence);
  }

  const auto idx = build_index_sets(tp, 9);
  {
    bool ok = contains(idx.I, 1) && contains(idx.I, 2) && contains(idx.I, 4) &&
              contains(idx.J, 3) == (tp[2] == tp[3]) && contains(idx.J, 5) == (tp[4] == tp[5]) &&
              idx.I.size() + idx.J.size() == 8;
    expect(checks, "index_sets", "I and J partition 1..8; 1,2,4 in I; 3 in J iff P2 = P3; 5 in J iff P4 = P5",
           {{"I", index_list(idx.I)}, {"J", index_list(idx.J)}}, ok, ErrorCode::ChainCheckFailed);
  }

  auto h = build_matrix_H(e, tp, idx);
  if (options.tamper_h) options.tamper_h(h.m);
  const std::size_t rows = h.m.rows();
  const std::size_t cols = h.m.cols();
  const std::size_t expected_rank = 8 + idx.J.size();
  {
    std::map<std::string, std::string> w;
    for (std::size_t r = 0; r < rows; ++r) w[h.row_labels[r]] = vector_string(h.m.row(r));
    std::string labels;
    for (std::size_t c = 0; c < cols; ++c) labels += (c ? "," : "") + h.column_labels[c];
    w["columns"] = "[" + labels + "]";
    w["shape"] = std::to_string(rows) + "x" + std::to_string(cols);
    expect(checks, "matrix_H", "H has 8+|J| rows and 10+|J| columns", std::move(w),
           rows == expected_rank && cols == kMonomialCount + idx.J.size(), ErrorCode::ChainCheckFailed);
  }

  const auto rk = rank_kernel(h.m);
  {
    const bool ok = rk.rank == expected_rank;
    std::string pivots;
    for (std::size_t i = 0; i < rk.pivots.size(); ++i) pivots += (i ? "," : "") + std::to_string(rk.pivots[i]);
    checks.push_back({"rank", "rank(H) = 8+|J|",
                      {{"rank", std::to_string(rk.rank)},
                       {"expected", std::to_string(expected_rank)},
                       {"pivots", "[" + pivots + "]"}},
                      ok});
    if (!ok) {
      fail_with_matrix(ErrorCode::RankDeficient,
                       "rank(H) = " + std::to_string(rk.rank) + ", expected " + std::to_string(expected_rank), h.m);
    }
  }
  {
    std::vector<std::size_t> perm(cols);
    std::iota(perm.rbegin(), perm.rend(), std::size_t{0});
    const auto alt = rank_kernel_permuted(h.m, perm);
    bool ok = alt.rank == rk.rank;
    for (const auto& v : alt.kernel) ok = ok && is_zero_vector(multiply(h.m, v));
    if (ok && !rk.kernel.empty()) {
      auto both = rk.kernel;
      both.insert(both.end(), alt.kernel.begin(), alt.kernel.end());
      ok = rank_kernel(Matrix::from_rows(field, both)).rank == rk.kernel.size();
    }
    checks.push_back({"rank_permuted", "re-elimination with reversed column order gives the same rank and kernel",
                      {{"rank", std::to_string(alt.rank)}}, ok});
    if (!ok) fail_with_matrix(ErrorCode::RankDeficient, "column-permuted elimination disagrees", h.m);
  }
  {
    std::map<std::string, std::string> w{{"dimension", std::to_string(rk.kernel.size())}};
    for (std::size_t i = 0; i < rk.kernel.size(); ++i) w["basis" + std::to_string(i)] = vector_string(rk.kernel[i]);
    const bool ok = rk.kernel.size() == 2;
    checks.push_back({"kernel_dimension", "dim ker H = 2", std::move(w), ok});
    if (!ok) {
      fail_with_matrix(ErrorCode::KernelDimUnexpected,
                       "kernel dimension " + std::to_string(rk.kernel.size()) + ", expected 2", h.m);
    }
  }

  const auto f1 = build_F1(e, tp);
  const auto f2 = build_F2(e, tp);
  {
    const auto pair = Matrix::from_rows(field, {form_vector(e.form()), form_vector(f1.form)});
    const bool ok = rank_kernel(pair).rank == 2;
    checks.push_back({"independence",
                      "c_E and c_F1 are linearly independent",
                      {{"c_E", vector_string(form_vector(e.form()))},
                       {"c_F1", vector_string(form_vector(f1.form))},
                       {"c_F1[XY^2]", f1.form[Monomial::XY2].to_string()}},
                      ok});
    if (!ok) fail_with_matrix(ErrorCode::SpanFailure, "c_E and c_F1 are dependent", h.m);
  }

  const auto w = lemma4_witnesses(e, tp, idx, f1.form, f2.form);
  const auto hat_e = concat(e.form().c, w.w_E);
  const auto hat_f1 = concat(f1.form.c, w.w_F1);
  const auto hat_f2 = concat(f2.form.c, w.w_F2);
  checks.push_back({"lemma4_witnesses",
                    "w_E, w_F1, w_F2 collect the lambda values at the doubled points",
                    {{"w_E", vector_string(w.w_E)}, {"w_F1", vector_string(w.w_F1)}, {"w_F2", vector_string(w.w_F2)}},
                    true});
  {
    const auto he = multiply(h.m, hat_e);
    const auto hf1 = multiply(h.m, hat_f1);
    const auto hf2 = multiply(h.m, hat_f2);
    const bool ok = is_zero_vector(he) && is_zero_vector(hf1) && is_zero_vector(hf2);
    checks.push_back({"kernel_membership",
                      "H (c_E||w_E) = H (c_F1||w_F1) = H (c_F2||w_F2) = 0",
                      {{"H.c_E", vector_string(he)}, {"H.c_F1", vector_string(hf1)}, {"H.c_F2", vector_string(hf2)}},
                      ok});
    if (!ok) fail_with_matrix(ErrorCode::SpanFailure, "an extended coefficient vector is not in ker H", h.m);
  }

  Matrix basis(field, cols, 2);
  for (std::size_t c = 0; c < cols; ++c) {
    basis.at(c, 0) = hat_e[c];
    basis.at(c, 1) = hat_f1[c];
  }
  const auto coeffs = solve(basis, hat_f2);
  checks.push_back({"span",
                    "c_F2||w_F2 = mu (c_E||w_E) + nu (c_F1||w_F1)",
                    {{"mu", coeffs ? (*coeffs)[0].to_string() : "none"},
                     {"nu", coeffs ? (*coeffs)[1].to_string() : "none"}},
                    coeffs.has_value()});
  if (!coeffs) fail_with_matrix(ErrorCode::SpanFailure, "c_F2 is not in span(c_E, c_F1)", h.m);
  const auto& mu = (*coeffs)[0];
  const auto& nu = (*coeffs)[1];

  const auto& p9 = tp[9];
  const auto f2_at_p9 = mu * eval_curve(e, p9.point()) + nu * eval_cubic(f1.form, p9.point());
  expect(checks, "f2_vanishes_at_p9", "F2(P9) = mu E(P9) + nu F1(P9) = 0",
         {{"combination", f2_at_p9.to_string()}, {"direct", eval_cubic(f2.form, p9.point()).to_string()}},
         f2_at_p9.is_zero() && eval_cubic(f2.form, p9.point()).is_zero(), ErrorCode::SpanFailure);

  int equal_to = 0;
  for (int i = 1; i <= 8 && !equal_to; ++i) {
    if (tp[i] == p9) equal_to = i;
  }

  if (!equal_to) {
    checks.push_back({"branch", "P9 differs from P1..P8", {{"P9", p9.to_string()}}, true});
    const auto zero_on = [&](const Line& l) { return eval_line(l, p9.point()).is_zero(); };
    expect(checks, "branch1.line_r_minus_r", "the line (R, -R) misses P9", {{"value", eval_line(f2.lines[0], p9.point()).to_string()}},
           !zero_on(f2.lines[0]), ErrorCode::ChainCheckFailed);
    expect(checks, "branch1.line_p_q", "the line (P, Q) misses P9", {{"value", eval_line(f2.lines[1], p9.point()).to_string()}},
           !zero_on(f2.lines[1]), ErrorCode::ChainCheckFailed);
    expect(checks, "branch1.line_rq_minus_p", "the line (R*Q, -P) passes through P9", {}, zero_on(f2.lines[2]),
           ErrorCode::ChainCheckFailed);
    expect_distinct(checks, "branch1.p9_not_p3", "P9 != -P", p9, tp[3]);
    expect_distinct(checks, "branch1.p9_not_p8", "P9 != R*Q", p9, tp[8]);
    expect_points(checks, "branch1.third_point", "P9 = (R*Q)*(-P)", p9, star(e, tp[8], tp[3]));
  } else {
    checks.push_back({"branch", "P9 equals some Pi, i <= 8", {{"i", std::to_string(equal_to)}}, true});
    const auto t = tangent_coeffs(e, p9);
    const auto [ex, ey] = partial_pair(e.form(), p9.point());
    const auto lambda_e = proportionality(ex, ey, t);
    expect(checks, "branch2.e_proportional", "(M_X(P9).c_E, M_Y(P9).c_E) = lambda_E (T_X, T_Y)(P9)",
           {{"lambda_E", lambda_e ? lambda_e->to_string() : "none"}}, lambda_e.has_value(),
           ErrorCode::WitnessExtractionFailed);
    const auto mi1 = multiple_intersection(e, f1.lines[2], f1.lines[0], f1.lines[1], p9);
    expect(checks, "branch2.f1_multiple", "P9 is a multiple intersection point of E and F1",
           {{"algebraic", mi1.algebraic ? "true" : "false"},
            {"geometric", mi1.geometric ? "true" : "false"},
            {"lambda_F1", mi1.lambda ? mi1.lambda->to_string() : "none"}},
           mi1.algebraic && mi1.geometric, ErrorCode::ChainCheckFailed);
    const auto lambda_f2 = mu * *lambda_e + nu * *mi1.lambda;
    const auto [fx, fy] = partial_pair(f2.form, p9.point());
    expect(checks, "branch2.f2_proportional", "(M_X(P9).c_F2, M_Y(P9).c_F2) = (mu lambda_E + nu lambda_F1) (T_X, T_Y)(P9)",
           {{"lambda_F2", lambda_f2.to_string()}}, fx == lambda_f2 * t[0] && fy == lambda_f2 * t[1],
           ErrorCode::SpanFailure);
    std::size_t through = 3;
    for (const std::size_t k : {std::size_t{2}, std::size_t{0}, std::size_t{1}}) {
      if (through == 3 && eval_line(f2.lines[k], p9.point()).is_zero()) through = k;
    }
    expect(checks, "branch2.f2_line", "some line of F2 passes through P9", {{"line", std::to_string(through + 1)}},
           through < 3, ErrorCode::ChainCheckFailed);
    const auto& l2 = f2.lines[through == 0 ? 1 : 0];
    const auto& l3 = f2.lines[through == 2 ? 1 : 2];
    const auto mi2 = multiple_intersection(e, f2.lines[through], l2, l3, p9);
    expect(checks, "branch2.f2_multiple", "P9 is a multiple intersection point of E and F2",
           {{"algebraic", mi2.algebraic ? "true" : "false"}, {"geometric", mi2.geometric ? "true" : "false"}},
           mi2.algebraic && mi2.geometric, ErrorCode::ChainCheckFailed);
  }
}

}  // namespace ecassoc
