#pragma once

// Per-triple certificates for the associativity identity
//   (P*Q)*(-R) = (R*Q)*(-P),
// built by replaying the linear-algebra proof on concrete points.
//
// Ten points are attached to a triple:
//   P1 = O, P2 = P, P3 = -P, P4 = R, P5 = -R, P6 = Q,
//   P7 = P*Q, P8 = R*Q, P9 = P7*P5, P10 = P8*P3.
// Exchanging P and R permutes them by (2 4)(3 5)(7 8)(9 10).

#include "ecassoc/curve.hpp"
#include "ecassoc/error.hpp"
#include "ecassoc/linalg.hpp"

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ecassoc {

struct Check {
  std::string name;
  std::string claim;
  std::map<std::string, std::string> witnesses;
  bool pass = false;

  friend bool operator==(const Check&, const Check&) = default;
};

enum class CertificatePath { obvious, prop1, reduction };

std::string_view path_name(CertificatePath path) noexcept;
std::optional<CertificatePath> path_from_name(std::string_view name) noexcept;

struct Certificate {
  std::string field;
  std::string curve;
  std::array<std::string, 3> triple;
  CertificatePath path = CertificatePath::obvious;
  /// Case id (obvious) or lemma id (reduction); empty for prop1.
  std::optional<int> case_or_lemma;
  std::vector<Check> checks;
  /// Three-point coincidence patterns present at this node.
  std::vector<std::string> patterns;
  bool swap_pr = false;
  std::vector<Certificate> children;
  bool verdict = false;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

/// A certification error together with the certificate built up to the point
/// of failure.
class CertificationError : public Error {
 public:
  CertificationError(const Error& cause, Certificate partial);
  const Certificate& partial() const noexcept { return partial_; }

 private:
  Certificate partial_;
};

// --- ten points --------------------------------------------------------------

struct TenPoints {
  std::vector<CurvePoint> p;

  /// 1-based access: tp[1] == O, tp[9] == (P*Q)*(-R).
  const CurvePoint& operator[](int i) const { return p[static_cast<std::size_t>(i - 1)]; }
  /// The ten points of the triple (R, Q, P).
  TenPoints swapped() const;
};

/// Index image of i under the P <-> R exchange.
int swap_index(int i) noexcept;

TenPoints build_ten_points(const WeierstrassCurve& e, const CurvePoint& p, const CurvePoint& q, const CurvePoint& r);

// --- obvious cases ------------------------------------------------------------

struct ObviousCase {
  int id = 0;
  /// The trigger matched after exchanging P and R.
  bool swapped = false;
  std::vector<Check> chain;
};

/// First case (1..10) whose trigger cell holds, with its identity chain
/// recomputed. Throws ChainCheckFailed if an identity of the chain fails.
std::optional<ObviousCase> classify_obvious(const WeierstrassCurve& e, const TenPoints& tp);

// --- index sets and H ------------------------------------------------------------

/// True if some point occurs three or more times among P1..P8 and P_ninth.
bool has_triple_coincidence(const TenPoints& tp, int ninth);

struct IndexSets {
  std::vector<int> I;
  std::vector<int> J;

  friend bool operator==(const IndexSets&, const IndexSets&) = default;
};

/// Throws TripleCoincidence if three of P1..P8, P_ninth coincide.
IndexSets build_index_sets(const TenPoints& tp, int ninth = 9);

struct MatrixH {
  Matrix m;
  std::vector<std::string> row_labels;
  std::vector<std::string> column_labels;
};

MatrixH build_matrix_H(const WeierstrassCurve& e, const TenPoints& tp, const IndexSets& idx);

// --- multiple intersections ------------------------------------------------

/// lambda with (a, b) = lambda * (t[0], t[1]); the division uses the first
/// nonzero of t[0], t[1]. Nullopt if no such lambda or t[0] = t[1] = 0.
std::optional<FieldElement> proportionality(const FieldElement& a, const FieldElement& b, const Coords& t);

struct MultipleIntersection {
  bool algebraic = false;
  bool geometric = false;
  std::optional<FieldElement> lambda;
};

/// For F = l1*l2*l3 and P' on l1: algebraic is the proportionality of
/// (M_X(P').c_F, M_Y(P').c_F) to (T_X, T_Y)(P'); geometric is "l1 is the
/// tangent at P' or l2, l3 passes through P'". Throws PointAtInfinity for O.
MultipleIntersection multiple_intersection(const WeierstrassCurve& e, const Line& l1, const Line& l2, const Line& l3,
                                           const CurvePoint& p);

/// Line through a and b, or the tangent at a when a == b.
Line chord(const WeierstrassCurve& e, const CurvePoint& a, const CurvePoint& b);

struct CubicFactors {
  std::array<Line, 3> lines;
  CubicForm form;
};

/// F1 = (P2 P3)(P4 P6)(P7 P5).
CubicFactors build_F1(const WeierstrassCurve& e, const TenPoints& tp);
/// F2 = (P4 P5)(P2 P6)(P8 P3).
CubicFactors build_F2(const WeierstrassCurve& e, const TenPoints& tp);

struct Lemma4Witnesses {
  Vector w_E;
  Vector w_F1;
  Vector w_F2;
};

/// lambda values at each j in J. Throws WitnessExtractionFailed.
Lemma4Witnesses lemma4_witnesses(const WeierstrassCurve& e, const TenPoints& tp, const IndexSets& idx,
                                 const CubicForm& f1, const CubicForm& f2);

// --- coincidence patterns ----------------------------------------------------

enum class Pattern { p2_6_7, p3_8_9, p3_8_10, p4_6_8, p5_7_9, p5_7_10 };

inline constexpr std::array<Pattern, 6> kAllPatterns{Pattern::p2_6_7, Pattern::p3_8_9,  Pattern::p3_8_10,
                                                     Pattern::p4_6_8, Pattern::p5_7_9, Pattern::p5_7_10};

/// "P2=P6=P7", ...
std::string_view pattern_name(Pattern p) noexcept;
bool pattern_holds(const TenPoints& tp, Pattern p);
std::vector<Pattern> coincidence_patterns(const TenPoints& tp);

// --- certification -------------------------------------------------------------

struct CertifyOptions {
  /// Applied to H before any check; used to exercise the failure paths.
  std::function<void(Matrix&)> tamper_h;
};

inline constexpr int kMaxCertificateDepth = 5;

/// Prop-1 node for a triple with no obvious trigger and no three coincident
/// points among P1..P9. Throws RankDeficient, KernelDimUnexpected,
/// SpanFailure, WitnessExtractionFailed, ChainCheckFailed.
Certificate certify_prop1(const WeierstrassCurve& e, const TenPoints& tp, const CertifyOptions& options = {});

/// Reduction node for a triple with three coincident points on both the P9
/// and the P10 side. Throws UnmatchedPattern, DepthExceeded.
Certificate reduce_coincidence(const WeierstrassCurve& e, const TenPoints& tp, const CertifyOptions& options = {});

/// Full certificate. Any failure is rethrown as CertificationError carrying
/// the partial certificate.
Certificate certify(const WeierstrassCurve& e, const CurvePoint& p, const CurvePoint& q, const CurvePoint& r,
                    const CertifyOptions& options = {});

/// Structural validation: verdict implies all checks passed, reduction
/// depth bounds, path-specific fields present. Returns the first problem.
std::optional<std::string> validate_certificate(const Certificate& cert);

}  // namespace ecassoc
