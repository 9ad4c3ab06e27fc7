#include "certificate_internal.hpp"

#include <utility>

namespace ecassoc {

namespace {

using detail::expect_points;

// Identity chains for the ten obvious cases. Each chain works on a fixed
// orientation of the triple; symmetric triggers are handled by the caller
// passing the swapped points.
class Chain {
 public:
  Chain(const WeierstrassCurve& e, std::vector<Check>& out) : e_(e), out_(out) {}

  CurvePoint s(const CurvePoint& a, const CurvePoint& b) const { return star(e_, a, b); }
  CurvePoint n(const CurvePoint& a) const { return negate(e_, a); }
  CurvePoint o() const { return e_.infinity(); }

  void eq(const std::string& prefix, const char* name, const char* claim, const CurvePoint& lhs,
          const CurvePoint& rhs) {
    expect_points(out_, prefix + "." + name, claim, lhs, rhs);
  }

  void case1(const TenPoints& t, const std::string& pre) {
    eq(pre, "trigger", "P = O", t[2], o());
    eq(pre, "lhs_first", "P*Q = O*Q = -Q", t[7], n(t[6]));
    eq(pre, "lhs", "LHS = (-Q)*(-R)", t[9], s(n(t[6]), t[5]));
    eq(pre, "lhs_value", "(-Q)*(-R) = -(Q*R)", s(n(t[6]), t[5]), n(s(t[6], t[4])));
    eq(pre, "rhs", "RHS = (R*Q)*O", t[10], s(t[8], o()));
    eq(pre, "rhs_value", "(R*Q)*O = -(Q*R)", s(t[8], o()), n(s(t[6], t[4])));
  }

  void case2(const TenPoints& t, const std::string& pre, int i) {
    if (i == 3) {
      eq(pre, "trigger", "P*Q = -P", t[7], t[3]);
      eq(pre, "recover_q", "Q = (P*Q)*P", s(t[7], t[2]), t[6]);
      eq(pre, "recover_q_value", "(P*Q)*P = (-P)*P = O", s(t[3], t[2]), o());
    }
    eq(pre, "q_zero", "Q = O", t[6], o());
    eq(pre, "lhs_first", "P*O = -P", t[7], t[3]);
    eq(pre, "lhs", "LHS = (-P)*(-R)", t[9], s(t[3], t[5]));
    eq(pre, "rhs_first", "R*O = -R", t[8], t[5]);
    eq(pre, "rhs", "RHS = (-R)*(-P)", t[10], s(t[5], t[3]));
    eq(pre, "symmetric", "(-P)*(-R) = (-R)*(-P)", s(t[3], t[5]), s(t[5], t[3]));
  }

  void case3(const TenPoints& t, const std::string& pre, int i) {
    if (i == 7) {
      eq(pre, "trigger", "P*Q = R*Q", t[7], t[8]);
      eq(pre, "recover_p", "P = (P*Q)*Q", s(t[7], t[6]), t[2]);
      eq(pre, "recover_r", "R = (R*Q)*Q", s(t[8], t[6]), t[4]);
    }
    eq(pre, "p_equals_r", "P = R", t[2], t[4]);
    eq(pre, "first_factors", "P*Q = R*Q", t[7], t[8]);
    eq(pre, "second_factors", "-R = -P", t[5], t[3]);
  }

  void case4(const TenPoints& t, const std::string& pre, int i) {
    if (i == 1) {
      eq(pre, "trigger", "P*Q = O", t[7], o());
      eq(pre, "recover_q", "Q = O*P", s(o(), t[2]), t[6]);
      eq(pre, "recover_q_value", "O*P = -P", s(o(), t[2]), t[3]);
    }
    eq(pre, "q_minus_p", "Q = -P", t[6], t[3]);
    eq(pre, "lhs_first", "P*Q = O", t[7], o());
    eq(pre, "lhs", "LHS = O*(-R)", t[9], s(o(), t[5]));
    eq(pre, "lhs_value", "O*(-R) = R", s(o(), t[5]), t[4]);
    eq(pre, "rhs", "RHS = (R*Q)*Q", t[10], s(t[8], t[6]));
    eq(pre, "rhs_value", "(R*Q)*Q = R", s(t[8], t[6]), t[4]);
  }

  void case5(const TenPoints& t, const std::string& pre) {
    eq(pre, "trigger", "P = -R", t[2], t[5]);
    eq(pre, "trigger_dual", "-P = R", t[3], t[4]);
    eq(pre, "lhs", "LHS = (P*Q)*P", t[9], s(t[7], t[2]));
    eq(pre, "lhs_value", "(P*Q)*P = Q", s(t[7], t[2]), t[6]);
    eq(pre, "rhs", "RHS = (R*Q)*R", t[10], s(t[8], t[4]));
    eq(pre, "rhs_value", "(R*Q)*R = Q", s(t[8], t[4]), t[6]);
  }

  void case6(const TenPoints& t, const std::string& pre) {
    eq(pre, "trigger", "R = P*Q", t[4], t[7]);
    eq(pre, "trigger_dual", "P = R*Q", t[2], t[8]);
    eq(pre, "lhs", "LHS = R*(-R)", t[9], s(t[4], t[5]));
    eq(pre, "lhs_value", "R*(-R) = O", s(t[4], t[5]), o());
    eq(pre, "rhs", "RHS = P*(-P)", t[10], s(t[2], t[3]));
    eq(pre, "rhs_value", "P*(-P) = O", s(t[2], t[3]), o());
  }

  void case7(const TenPoints& t, const std::string& pre) {
    eq(pre, "trigger", "(P*Q)*(-R) = O", t[9], o());
    eq(pre, "reduce", "P*Q = O*(-R)", t[7], s(o(), t[5]));
    eq(pre, "reduce_value", "O*(-R) = R", s(o(), t[5]), t[4]);
    case6(t, pre + ".case06");
  }

  void case8(const TenPoints& t, const std::string& pre) {
    eq(pre, "trigger", "(P*Q)*(-R) = P", t[9], t[2]);
    eq(pre, "reduce", "-R = (P*Q)*P", t[5], s(t[7], t[2]));
    eq(pre, "reduce_value", "(P*Q)*P = Q", s(t[7], t[2]), t[6]);
    // Q = -R is the exchanged form of Q = -P.
    case4(t.swapped(), pre + ".case04_swapped", 3);
  }

  void case9(const TenPoints& t, const std::string& pre) {
    eq(pre, "trigger", "(R*Q)*(-P) = P", t[10], t[2]);
    eq(pre, "reduce", "R*Q = P*(-P)", t[8], s(t[2], t[3]));
    eq(pre, "reduce_value", "P*(-P) = O", s(t[2], t[3]), o());
    // R*Q = O is the exchanged form of P*Q = O.
    case4(t.swapped(), pre + ".case04_swapped", 1);
  }

  void case10(const TenPoints& t, const std::string& pre) {
    eq(pre, "trigger", "(P*Q)*(-R) = Q", t[9], t[6]);
    eq(pre, "reduce", "-R = (P*Q)*Q", t[5], s(t[7], t[6]));
    eq(pre, "reduce_value", "(P*Q)*Q = P", s(t[7], t[6]), t[2]);
    case5(t, pre + ".case05");
  }

  void run(int id, int i, const TenPoints& t) {
    const std::string pre = id < 10 ? "case0" + std::to_string(id) : "case" + std::to_string(id);
    switch (id) {
      case 1: return case1(t, pre);
      case 2: return case2(t, pre, i);
      case 3: return case3(t, pre, i);
      case 4: return case4(t, pre, i);
      case 5: return case5(t, pre);
      case 6: return case6(t, pre);
      case 7: return case7(t, pre);
      case 8: return case8(t, pre);
      case 9: return case9(t, pre);
      default: return case10(t, pre);
    }
  }

 private:
  const WeierstrassCurve& e_;
  std::vector<Check>& out_;
};

struct Trigger {
  int id;
  std::vector<std::pair<int, int>> cells;
};

// Trigger cells in the unswapped orientation; the exchanged cells are
// obtained by swapping the triple.
const std::vector<Trigger>& triggers() {
  static const std::vector<Trigger> t{
      {1, {{1, 2}, {1, 3}}}, {2, {{1, 6}, {3, 7}}}, {3, {{2, 4}, {3, 5}, {7, 8}}},
      {4, {{3, 6}, {1, 7}}}, {5, {{2, 5}, {3, 4}}}, {6, {{4, 7}, {2, 8}}},
      {7, {{1, 9}}},         {8, {{2, 9}}},         {9, {{2, 10}}},
      {10, {{6, 9}}},
  };
  return t;
}

}  // namespace

int swap_index(int i) noexcept {
  switch (i) {
    case 2: return 4;
    case 4: return 2;
    case 3: return 5;
    case 5: return 3;
    case 7: return 8;
    case 8: return 7;
    case 9: return 10;
    case 10: return 9;
    default: return i;
  }
}

TenPoints TenPoints::swapped() const {
  TenPoints out;
  out.p.reserve(10);
  for (int i = 1; i <= 10; ++i) out.p.push_back((*this)[swap_index(i)]);
  return out;
}

TenPoints build_ten_points(const WeierstrassCurve& e, const CurvePoint& p, const CurvePoint& q, const CurvePoint& r) {
  TenPoints tp;
  tp.p.reserve(10);
  tp.p.push_back(e.infinity());
  tp.p.push_back(p);
  tp.p.push_back(negate(e, p));
  tp.p.push_back(r);
  tp.p.push_back(negate(e, r));
  tp.p.push_back(q);
  tp.p.push_back(star(e, p, q));
  tp.p.push_back(star(e, r, q));
  tp.p.push_back(star(e, tp[7], tp[5]));
  tp.p.push_back(star(e, tp[8], tp[3]));
  return tp;
}

std::optional<ObviousCase> classify_obvious(const WeierstrassCurve& e, const TenPoints& tp) {
  std::optional<TenPoints> swapped;
  for (const auto& trig : triggers()) {
    for (const bool swap : {false, true}) {
      if (swap && !swapped) swapped = tp.swapped();
      const auto& t = swap ? *swapped : tp;
      for (const auto& [i, j] : trig.cells) {
        if (!(t[i] == t[j])) continue;
        ObviousCase result{trig.id, swap, {}};
        Chain chain(e, result.chain);
        chain.run(trig.id, i, t);
        return result;
      }
    }
  }
  return std::nullopt;
}

}  // namespace ecassoc
