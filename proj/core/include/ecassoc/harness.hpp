#pragma once

// Exhaustive verification over small fields: curve generation, group-axiom
// checks and certification sweeps with path accounting.

#include "ecassoc/certificate.hpp"
#include "ecassoc/curve.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace ecassoc {

/// Every (a1, a2, a3, a4, a6) in K^5 with nonzero discriminant, in
/// lexicographic order of element codes with a1 most significant.
/// Throws InfiniteField over Q.
std::vector<WeierstrassCurve> exhaustive_curves(const Field& field);

struct AxiomReport {
  std::string field;
  std::string curve;
  std::uint64_t points = 0;
  std::uint64_t identity_checks = 0;
  std::uint64_t inverse_checks = 0;
  std::uint64_t commutativity_checks = 0;
  std::uint64_t associativity_checks = 0;
};

/// Identity, inverse, commutativity and associativity over all points of a
/// finite curve. Throws AxiomFailure naming the witness.
AxiomReport verify_group_axioms(const WeierstrassCurve& e);

/// Same checks over an explicit point list (used over Q).
AxiomReport verify_group_axioms(const WeierstrassCurve& e, const std::vector<CurvePoint>& points);

struct SweepFailure {
  std::string curve;
  std::array<std::string, 3> triple;
  std::string error;
  /// Canonical JSON of the (partial) certificate.
  std::string certificate;

  friend bool operator==(const SweepFailure&, const SweepFailure&) = default;
};

struct SweepReport {
  std::string field;
  std::uint64_t curves_tested = 0;
  std::uint64_t triples_tested = 0;
  /// Root path per triple: "obvious/case01", "prop1", "reduction/lemma09".
  std::map<std::string, std::uint64_t> histogram;
  /// Every certificate node, children included, keyed like `histogram`.
  std::map<std::string, std::uint64_t> nodes;
  /// Patterns seen at reduction nodes whose lemma replay passed.
  std::map<std::string, std::uint64_t> patterns;
  /// Prop1 nodes with c_F1[XY^2] = 0.
  std::uint64_t prop1_zero_xy2 = 0;
  std::vector<SweepFailure> failures;
  /// FNV-1a 64 over a length-prefixed encoding of every certificate field,
  /// in sweep order.
  std::string certificate_digest;
  /// Reported in text form only.
  double wall_seconds = 0;

  bool ok() const noexcept { return failures.empty(); }
};

struct SweepOptions {
  unsigned threads = 1;
  /// Keep every stride-th curve of the exhaustive list (1 = all).
  std::size_t curve_stride = 1;
  /// 0 = no limit.
  std::size_t max_curves = 0;
  bool digest_certificates = true;
  std::size_t max_failures_recorded = 20;
  /// Called with every successful certificate, from the worker threads when
  /// threads > 1.
  std::function<void(const WeierstrassCurve&, const Certificate&)> on_certificate;
};

/// Certifies every triple of one finite curve.
SweepReport verify_all_triples(const WeierstrassCurve& e, const SweepOptions& options = {});

/// Certifies every triple of every listed curve.
SweepReport sweep_curves(const Field& field, const std::vector<WeierstrassCurve>& curves,
                         const SweepOptions& options = {});

/// exhaustive_curves(field) filtered by stride and limit, then sweep_curves.
SweepReport sweep_field(const Field& field, const SweepOptions& options = {});

/// Curve list selected by the options.
std::vector<WeierstrassCurve> select_curves(const Field& field, const SweepOptions& options);

/// Appends `part` (a later slice of the same field) to `into`.
void merge_report(SweepReport& into, const SweepReport& part);

/// Names of the six patterns with no passing reduction instance.
std::vector<std::string> unattained_patterns(const std::vector<SweepReport>& reports);

/// Histogram key of a certificate node.
std::string path_key(const Certificate& node);

struct RationalSpotCheck {
  std::string curve;
  std::vector<std::string> points;
  std::uint64_t triples = 0;
  std::map<std::string, std::uint64_t> histogram;
  std::vector<SweepFailure> failures;
  AxiomReport axioms;

  bool ok() const noexcept { return failures.empty(); }
};

/// Points O, G, 2G, ... (count multiples, each numerator and denominator at
/// most max_bits bits) on a curve over Q; certifies and checks associativity
/// on all triples. Throws Unsupported if the cap is hit before `count`.
RationalSpotCheck rational_spot_check(const WeierstrassCurve& e, const CurvePoint& generator, std::size_t count = 6,
                                      unsigned max_bits = 512);

/// Multiples G, 2G, ..., count*G under the bit cap.
std::vector<CurvePoint> multiples(const WeierstrassCurve& e, const CurvePoint& generator, std::size_t count,
                                  unsigned max_bits);

std::string format_report_text(const SweepReport& report);

}  // namespace ecassoc
