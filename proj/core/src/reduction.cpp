#include "certificate_internal.hpp"

#include <algorithm>
#include <cstdlib>

namespace ecassoc {

namespace {

using detail::expect;
using detail::expect_points;

constexpr std::array<std::array<int, 3>, 6> kPatternIndices{{
    {2, 6, 7}, {3, 8, 9}, {3, 8, 10}, {4, 6, 8}, {5, 7, 9}, {5, 7, 10},
}};

bool holds(const TenPoints& t, Pattern p) { return pattern_holds(t, p); }

// The lemma's hypothesis in the given orientation.
bool lemma_applies_oriented(int lemma, const TenPoints& t) {
  switch (lemma) {
    case 6: return holds(t, Pattern::p3_8_9);
    case 7: return holds(t, Pattern::p3_8_10) && !holds(t, Pattern::p5_7_9);
    case 8: return holds(t, Pattern::p2_6_7) && t[4] == t[5];
    case 9: return holds(t, Pattern::p2_6_7);
    case 10: return holds(t, Pattern::p3_8_10);
    default: return false;
  }
}

class Replay {
 public:
  Replay(Certificate& node, const WeierstrassCurve& e, int depth, const CertifyOptions& options)
      : node_(node), e_(e), depth_(depth), options_(options) {}

  CurvePoint s(const CurvePoint& a, const CurvePoint& b) const { return star(e_, a, b); }
  CurvePoint n(const CurvePoint& a) const { return negate(e_, a); }
  CurvePoint o() const { return e_.infinity(); }

  void eq(const char* name, const std::string& claim, const CurvePoint& lhs, const CurvePoint& rhs) {
    expect_points(node_.checks, name, claim, lhs, rhs);
  }

  void pattern(const TenPoints& t, Pattern p, const char* name) {
    const auto& idx = kPatternIndices[static_cast<std::size_t>(p)];
    expect(node_.checks, name, std::string(pattern_name(p)),
           {{"P" + std::to_string(idx[0]), t[idx[0]].to_string()},
            {"P" + std::to_string(idx[1]), t[idx[1]].to_string()},
            {"P" + std::to_string(idx[2]), t[idx[2]].to_string()}},
           holds(t, p), ErrorCode::ChainCheckFailed);
  }

  void absent(const TenPoints& t, Pattern p, const char* name) {
    expect(node_.checks, name, "not " + std::string(pattern_name(p)), {}, !holds(t, p), ErrorCode::ChainCheckFailed);
  }

  [[noreturn]] void contradiction(const char* name, const std::string& claim, const CurvePoint& forced) {
    expect(node_.checks, name, claim, {{"forced", forced.to_string()}}, false, ErrorCode::UnmatchedPattern);
    std::abort();
  }

  Certificate& child() {
    node_.children.emplace_back();
    return node_.children.back();
  }

  // Child certificate for the triple (p, q, r), routed with a lemma hint.
  const Certificate& recurse(const TenPoints& t, std::optional<int> hint) {
    auto& c = child();
    detail::route(c, e_, t, depth_ + 1, hint, options_);
    return c;
  }

  // Child prop1 node; `swap` runs it on the P10 side.
  void prop1_child(const TenPoints& t, bool swap) {
    auto& c = child();
    detail::fill_header(c, e_, t);
    if (depth_ + 1 > kMaxCertificateDepth) {
      raise(ErrorCode::DepthExceeded, "certificate nesting exceeds " + std::to_string(kMaxCertificateDepth));
    }
    c.swap_pr = swap;
    detail::prop1_into(c, e_, swap ? t.swapped() : t, options_);
    detail::finish_node(c, t);
  }

  // Three coincident points among P1..P8, P_ninth, matched against the
  // patterns the lemma allows.
  std::vector<Pattern> side_patterns(const TenPoints& t, int ninth) const {
    std::vector<Pattern> out;
    for (const auto p : kAllPatterns) {
      const auto& idx = kPatternIndices[static_cast<std::size_t>(p)];
      const int last = idx[2];
      if ((last <= 8 || last == ninth) && holds(t, p)) out.push_back(p);
    }
    return out;
  }

  void lemma6(const TenPoints& t) {
    pattern(t, Pattern::p3_8_9, "lemma06.hypothesis");
    if (!has_triple_coincidence(t, 10)) {
      expect(node_.checks, "lemma06.p10_side", "no three of P1..P8, P10 coincide", {}, true,
             ErrorCode::ChainCheckFailed);
      prop1_child(t, true);
      return;
    }
    const auto found = side_patterns(t, 10);
    const auto has = [&](Pattern p) { return std::find(found.begin(), found.end(), p) != found.end(); };
    if (has(Pattern::p3_8_10)) {
      eq("lemma06.p9_p8", "P9 = P8", t[9], t[8]);
      eq("lemma06.p8_p10", "P8 = P10", t[8], t[10]);
      return;
    }
    if (has(Pattern::p2_6_7)) {
      contradiction("lemma06.excluded_p2_6_7", "P2=P6=P7 with P3=P8=P9 forces R = (-P)*P = O", s(t[3], t[2]));
    }
    if (has(Pattern::p5_7_10)) {
      pattern(t, Pattern::p5_7_10, "lemma06.p5_7_10");
      eq("lemma06.minus_p", "-P = P9 = (-R)*(-R)", t[3], s(t[5], t[5]));
      eq("lemma06.minus_r", "-R = P10 = (-P)*(-P)", t[5], s(t[3], t[3]));
      eq("lemma06.chain_p", "-P = (-P)*(-R)", t[3], s(t[3], t[5]));
      eq("lemma06.chain_r", "(-P)*(-R) = -R", s(t[3], t[5]), t[5]);
      eq("lemma06.p9_p5", "P9 = P3 = P5", t[9], t[5]);
      eq("lemma06.p5_p10", "P5 = P10", t[5], t[10]);
      return;
    }
    raise(ErrorCode::UnmatchedPattern, "three of P1..P8, P10 coincide outside P2=P6=P7, P3=P8=P10, P5=P7=P10");
  }

  void lemma7(const TenPoints& t) {
    pattern(t, Pattern::p3_8_10, "lemma07.hypothesis");
    absent(t, Pattern::p5_7_9, "lemma07.hypothesis_excludes");
    if (!has_triple_coincidence(t, 9)) {
      expect(node_.checks, "lemma07.p9_side", "no three of P1..P9 coincide", {}, true, ErrorCode::ChainCheckFailed);
      prop1_child(t, false);
      return;
    }
    const auto found = side_patterns(t, 9);
    const auto has = [&](Pattern p) { return std::find(found.begin(), found.end(), p) != found.end(); };
    if (has(Pattern::p2_6_7)) {
      contradiction("lemma07.excluded_p2_6_7", "P2=P6=P7 with P3=P8=P10 forces R = (-P)*P = O", s(t[3], t[2]));
    }
    if (has(Pattern::p3_8_9)) {
      eq("lemma07.p9_p8", "P9 = P8", t[9], t[8]);
      eq("lemma07.p8_p10", "P8 = P10", t[8], t[10]);
      return;
    }
    raise(ErrorCode::UnmatchedPattern, "three of P1..P9 coincide outside P2=P6=P7, P3=P8=P9");
  }

  // P' = -P, Q' = P*R, R' = R together with the identities P'3 = P'8 = P'10 = P.
  TenPoints primed(const TenPoints& t, const char* prefix) {
    const auto pr = s(t[2], t[4]);
    auto tp = build_ten_points(e_, t[3], pr, t[4]);
    const std::string pre = prefix;
    eq((pre + ".p3_prime").c_str(), "P'3 = -P' = P", tp[3], t[2]);
    eq((pre + ".p8_prime").c_str(), "P'8 = R*(P*R) = P", tp[8], t[2]);
    eq((pre + ".p10_prime").c_str(), "P'10 = P*P = P", tp[10], t[2]);
    return tp;
  }

  // From P'9 = P'10 conclude P9 = P10.
  void close_primed(const TenPoints& t, const TenPoints& tp, const char* prefix) {
    const std::string pre = prefix;
    const auto pr = tp[6];
    eq((pre + ".p9_prime").c_str(), "P'9 = ((-P)*(P*R))*(-R)", tp[9], s(s(t[3], pr), t[5]));
    eq((pre + ".p9_p10_prime").c_str(), "P'9 = P'10", tp[9], tp[10]);
    eq((pre + ".p10_prime_value").c_str(), "P'10 = P", tp[10], t[2]);
    eq((pre + ".transfer").c_str(), "(-P)*(P*R) = P*(-R)", s(t[3], pr), s(t[2], t[5]));
    eq((pre + ".lhs").c_str(), "P9 = (P*Q)*(-R) = P*(-R)", t[9], s(t[2], t[5]));
    eq((pre + ".rq").c_str(), "R*Q = R*P = P*R", t[8], pr);
    eq((pre + ".rhs").c_str(), "(R*Q)*(-P) = (-P)*(P*R)", t[10], s(t[3], pr));
  }

  void lemma8(const TenPoints& t) {
    pattern(t, Pattern::p2_6_7, "lemma08.hypothesis");
    eq("lemma08.hypothesis_r", "P4 = P5", t[4], t[5]);
    eq("lemma08.flex", "P*P = P = Q", s(t[2], t[2]), t[6]);
    const auto tp = primed(t, "lemma08");
    absent(tp, Pattern::p5_7_9, "lemma08.excludes_p5_7_9_prime");
    recurse(tp, 7);
    close_primed(t, tp, "lemma08");
  }

  void lemma9(const TenPoints& t) {
    pattern(t, Pattern::p2_6_7, "lemma09.hypothesis");
    eq("lemma09.flex", "P*P = P = Q", s(t[2], t[2]), t[6]);
    const auto tp = primed(t, "lemma09");
    if (!holds(tp, Pattern::p5_7_9)) {
      absent(tp, Pattern::p5_7_9, "lemma09.excludes_p5_7_9_prime");
      recurse(tp, 7);
      close_primed(t, tp, "lemma09");
      return;
    }
    pattern(tp, Pattern::p5_7_9, "lemma09.p5_7_9_prime");
    const auto pr = tp[6];
    eq("lemma09.minus_r", "-R = P'7 = (-P)*(P*R)", t[5], s(t[3], pr));
    eq("lemma09.pr", "P*R = (-P)*(-R)", pr, s(t[3], t[5]));
    eq("lemma09.pr_neg", "(-P)*(-R) = -(P*R)", s(t[3], t[5]), n(pr));
    const auto tpp = build_ten_points(e_, t[3], t[3], pr);
    eq("lemma09.p7_second", "P''7 = (-P)*(-P) = -(P*P)", tpp[7], n(s(t[2], t[2])));
    eq("lemma09.p7_second_value", "-(P*P) = -P = P''2 = P''6", tpp[7], t[3]);
    eq("lemma09.p4_p5_second", "P''4 = R'' = -R'' = P''5", tpp[4], tpp[5]);
    recurse(tpp, 8);
    eq("lemma09.p9_second", "P''9 = ((-P)*(-P))*((-P)*(-R))", tpp[9], s(s(t[3], t[3]), s(t[3], t[5])));
    eq("lemma09.p9_second_step", "((-P)*(-P))*((-P)*(-R)) = (-P)*((-P)*(-R))", s(s(t[3], t[3]), s(t[3], t[5])),
       s(t[3], s(t[3], t[5])));
    eq("lemma09.p9_second_value", "(-P)*((-P)*(-R)) = -R", s(t[3], s(t[3], t[5])), t[5]);
    eq("lemma09.p10_second", "P''10 = ((P*R)*(-P))*P", tpp[10], s(s(pr, t[3]), t[2]));
    eq("lemma09.p9_p10_second", "P''9 = P''10", tpp[9], tpp[10]);
    eq("lemma09.transfer", "(P*R)*(-P) = P*(-R)", s(pr, t[3]), s(t[2], t[5]));
    eq("lemma09.lhs", "P9 = (P*Q)*(-R) = P*(-R)", t[9], s(t[2], t[5]));
    eq("lemma09.rq", "R*Q = P*R", t[8], pr);
    eq("lemma09.rhs", "(R*Q)*(-P) = (P*R)*(-P)", t[10], s(pr, t[3]));
  }

  void lemma10(const TenPoints& t) {
    pattern(t, Pattern::p3_8_10, "lemma10.hypothesis");
    eq("lemma10.minus_p", "-P = R*Q", t[3], t[8]);
    eq("lemma10.flex_minus_p", "(-P)*(-P) = -P", s(t[3], t[3]), t[3]);
    if (!holds(t, Pattern::p5_7_9)) {
      absent(t, Pattern::p5_7_9, "lemma10.excludes_p5_7_9");
      recurse(t, 7);
      return;
    }
    pattern(t, Pattern::p5_7_9, "lemma10.assumed_p5_7_9");
    eq("lemma10.minus_r", "-R = P*Q", t[5], t[7]);
    eq("lemma10.flex_minus_r", "(-R)*(-R) = -R", s(t[5], t[5]), t[5]);
    eq("lemma10.flex_r", "R*R = R", s(t[4], t[4]), t[4]);
    const auto child_tp = build_ten_points(e_, t[3], t[3], n(t[6]));
    recurse(child_tp, 9);
    eq("lemma10.r_value", "R = (-P)*Q = ((-P)*(-P))*Q", t[4], s(s(t[3], t[3]), t[6]));
    eq("lemma10.swap_identity", "((-P)*(-P))*Q = ((-Q)*(-P))*P", s(s(t[3], t[3]), t[6]), s(s(n(t[6]), t[3]), t[2]));
    eq("lemma10.r_star_p", "((-Q)*(-P))*P = (-(P*Q))*P = R*P", s(n(t[7]), t[2]), s(t[4], t[2]));
    contradiction("lemma10.excluded", "R = R*P forces P = R*R = R", s(t[4], t[4]));
  }

  void run(int lemma, const TenPoints& t) {
    switch (lemma) {
      case 6: return lemma6(t);
      case 7: return lemma7(t);
      case 8: return lemma8(t);
      case 9: return lemma9(t);
      default: return lemma10(t);
    }
  }

 private:
  Certificate& node_;
  const WeierstrassCurve& e_;
  int depth_;
  const CertifyOptions& options_;
};

}  // namespace

std::string_view pattern_name(Pattern p) noexcept {
  switch (p) {
    case Pattern::p2_6_7: return "P2=P6=P7";
    case Pattern::p3_8_9: return "P3=P8=P9";
    case Pattern::p3_8_10: return "P3=P8=P10";
    case Pattern::p4_6_8: return "P4=P6=P8";
    case Pattern::p5_7_9: return "P5=P7=P9";
    case Pattern::p5_7_10: return "P5=P7=P10";
  }
  return "";
}

bool pattern_holds(const TenPoints& tp, Pattern p) {
  const auto& idx = kPatternIndices[static_cast<std::size_t>(p)];
  return tp[idx[0]] == tp[idx[1]] && tp[idx[1]] == tp[idx[2]];
}

std::vector<Pattern> coincidence_patterns(const TenPoints& tp) {
  std::vector<Pattern> out;
  for (const auto p : kAllPatterns) {
    if (pattern_holds(tp, p)) out.push_back(p);
  }
  return out;
}

bool detail::lemma_applies(int lemma, const TenPoints& tp) {
  return lemma_applies_oriented(lemma, tp) || lemma_applies_oriented(lemma, tp.swapped());
}

void detail::reduce_into(Certificate& node, const WeierstrassCurve& e, const TenPoints& tp, int depth,
                         std::optional<int> hint, const CertifyOptions& options) {
  node.path = CertificatePath::reduction;
  std::optional<int> lemma;
  bool swap = false;
  const auto swapped = tp.swapped();
  const auto pick = [&](int id) {
    if (lemma) return;
    if (lemma_applies_oriented(id, tp)) {
      lemma = id;
    } else if (lemma_applies_oriented(id, swapped)) {
      lemma = id;
      swap = true;
    }
  };
  if (hint) pick(*hint);
  for (const int id : {6, 7, 8, 9, 10}) pick(id);
  if (!lemma) {
    std::string found;
    for (const auto p : coincidence_patterns(tp)) found += " " + std::string(pattern_name(p));
    raise(ErrorCode::UnmatchedPattern,
          "no reduction lemma matches the coincidences of this triple (patterns:" + (found.empty() ? " none" : found) +
              ")");
  }
  node.case_or_lemma = *lemma;
  node.swap_pr = swap;
  Replay replay(node, e, depth, options);
  replay.run(*lemma, swap ? swapped : tp);
  finish_node(node, tp);
}

Certificate reduce_coincidence(const WeierstrassCurve& e, const TenPoints& tp, const CertifyOptions& options) {
  Certificate node;
  detail::fill_header(node, e, tp);
  if (!has_triple_coincidence(tp, 9) || !has_triple_coincidence(tp, 10)) {
    raise(ErrorCode::UnmatchedPattern, "reduction needs three coincident points on both the P9 and the P10 side");
  }
  detail::reduce_into(node, e, tp, 1, std::nullopt, options);
  return node;
}

}  // namespace ecassoc
