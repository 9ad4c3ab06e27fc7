#include "certificate_internal.hpp"

namespace ecassoc {

std::string_view path_name(CertificatePath path) noexcept {
  switch (path) {
    case CertificatePath::obvious: return "obvious";
    case CertificatePath::prop1: return "prop1";
    case CertificatePath::reduction: return "reduction";
  }
  return "obvious";
}

std::optional<CertificatePath> path_from_name(std::string_view name) noexcept {
  for (const auto p : {CertificatePath::obvious, CertificatePath::prop1, CertificatePath::reduction}) {
    if (path_name(p) == name) return p;
  }
  return std::nullopt;
}

CertificationError::CertificationError(const Error& cause, Certificate partial)
    : Error(cause), partial_(std::move(partial)) {}

namespace detail {

std::string vector_string(const Vector& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + v[i].to_string();
  return out + "]";
}

void expect(std::vector<Check>& checks, std::string name, std::string claim,
            std::map<std::string, std::string> witnesses, bool pass, ErrorCode code) {
  checks.push_back({std::move(name), std::move(claim), std::move(witnesses), pass});
  if (!pass) {
    const auto& c = checks.back();
    std::string detail;
    for (const auto& [k, v] : c.witnesses) detail += " " + k + "=" + v;
    raise(code, "check '" + c.name + "' failed: " + c.claim + (detail.empty() ? "" : " (" + detail.substr(1) + ")"));
  }
}

void expect_points(std::vector<Check>& checks, std::string name, std::string claim, const CurvePoint& lhs,
                   const CurvePoint& rhs, ErrorCode code) {
  expect(checks, std::move(name), std::move(claim), {{"lhs", lhs.to_string()}, {"rhs", rhs.to_string()}}, lhs == rhs,
         code);
}

void expect_distinct(std::vector<Check>& checks, std::string name, std::string claim, const CurvePoint& lhs,
                     const CurvePoint& rhs, ErrorCode code) {
  expect(checks, std::move(name), std::move(claim), {{"lhs", lhs.to_string()}, {"rhs", rhs.to_string()}},
         !(lhs == rhs), code);
}

void fill_header(Certificate& node, const WeierstrassCurve& e, const TenPoints& tp) {
  node.field = e.field().spec();
  node.curve = e.spec();
  node.triple = {tp[2].to_string(), tp[6].to_string(), tp[4].to_string()};
}

void finish_node(Certificate& node, const TenPoints& tp) {
  node.patterns.clear();
  for (const auto p : coincidence_patterns(tp)) node.patterns.emplace_back(pattern_name(p));
  const bool equal = tp[9] == tp[10];
  node.checks.push_back({"verdict", "P9 = P10", {{"P9", tp[9].to_string()}, {"P10", tp[10].to_string()}}, equal});
  bool all = true;
  for (const auto& c : node.checks) all = all && c.pass;
  for (const auto& child : node.children) all = all && child.verdict;
  node.verdict = all;
}

void route(Certificate& node, const WeierstrassCurve& e, const TenPoints& tp, int depth, std::optional<int> hint,
           const CertifyOptions& options) {
  fill_header(node, e, tp);
  if (depth > kMaxCertificateDepth) {
    raise(ErrorCode::DepthExceeded, "certificate nesting exceeds " + std::to_string(kMaxCertificateDepth));
  }
  if (auto oc = classify_obvious(e, tp)) {
    node.path = CertificatePath::obvious;
    node.case_or_lemma = oc->id;
    node.swap_pr = oc->swapped;
    node.checks = std::move(oc->chain);
    finish_node(node, tp);
    return;
  }
  if (hint && lemma_applies(*hint, tp)) {
    reduce_into(node, e, tp, depth, hint, options);
    return;
  }
  if (!has_triple_coincidence(tp, 9)) {
    prop1_into(node, e, tp, options);
    finish_node(node, tp);
    return;
  }
  if (!has_triple_coincidence(tp, 10)) {
    node.swap_pr = true;
    prop1_into(node, e, tp.swapped(), options);
    finish_node(node, tp);
    return;
  }
  reduce_into(node, e, tp, depth, std::nullopt, options);
}

}  // namespace detail

Certificate certify(const WeierstrassCurve& e, const CurvePoint& p, const CurvePoint& q, const CurvePoint& r,
                    const CertifyOptions& options) {
  Certificate root;
  try {
    const auto tp = build_ten_points(e, p, q, r);
    detail::route(root, e, tp, 1, std::nullopt, options);
    const bool direct = tp[9] == tp[10];
    if (root.verdict != direct || !root.verdict) {
      raise(ErrorCode::CertificateFailure, "certificate verdict " + std::string(root.verdict ? "true" : "false") +
                                               " but direct comparison gives " + (direct ? "true" : "false"));
    }
  } catch (const CertificationError&) {
    throw;
  } catch (const Error& err) {
    throw CertificationError(err, std::move(root));
  }
  return root;
}

namespace {

std::optional<std::string> validate_node(const Certificate& c, int depth) {
  if (depth > kMaxCertificateDepth) return "nesting deeper than " + std::to_string(kMaxCertificateDepth);
  if (c.verdict) {
    for (const auto& check : c.checks) {
      if (!check.pass) return "verdict true but check '" + check.name + "' failed";
    }
  }
  if (c.checks.empty() || c.checks.back().name != "verdict") return "missing final verdict check";
  switch (c.path) {
    case CertificatePath::obvious:
      if (!c.case_or_lemma || *c.case_or_lemma < 1 || *c.case_or_lemma > 10) return "obvious node without case 1..10";
      if (!c.children.empty()) return "obvious node with children";
      break;
    case CertificatePath::prop1:
      if (c.case_or_lemma) return "prop1 node with a case id";
      if (!c.children.empty()) return "prop1 node with children";
      break;
    case CertificatePath::reduction:
      if (!c.case_or_lemma || *c.case_or_lemma < 6 || *c.case_or_lemma > 10) return "reduction node without lemma 6..10";
      break;
  }
  for (const auto& child : c.children) {
    if (c.verdict && !child.verdict) return "verdict true but a child verdict is false";
    if (auto problem = validate_node(child, depth + 1)) return problem;
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::string> validate_certificate(const Certificate& cert) { return validate_node(cert, 1); }

}  // namespace ecassoc
