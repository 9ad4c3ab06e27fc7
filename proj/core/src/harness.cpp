#include "ecassoc/harness.hpp"

#include "ecassoc/error.hpp"
#include "ecassoc/serialize.hpp"

#include <atomic>
#include <chrono>
#include <cstdio>
#include <set>
#include <thread>

namespace ecassoc {

namespace {

constexpr std::uint64_t kFnvOffset = 0xcbf29ce484222325ULL;
constexpr std::uint64_t kFnvPrime = 0x100000001b3ULL;

std::uint64_t fnv1a(std::uint64_t h, std::string_view bytes) {
  for (const unsigned char c : bytes) {
    h ^= c;
    h *= kFnvPrime;
  }
  return h;
}

std::uint64_t fnv1a_field(std::uint64_t h, std::string_view bytes) {
  h = fnv1a(h, std::to_string(bytes.size()));
  h = fnv1a(h, ":");
  return fnv1a(h, bytes);
}

// Length-prefixed walk over every certificate field, children in order.
std::uint64_t hash_certificate(std::uint64_t h, const Certificate& c) {
  h = fnv1a_field(h, c.field);
  h = fnv1a_field(h, c.curve);
  for (const auto& t : c.triple) h = fnv1a_field(h, t);
  h = fnv1a_field(h, path_name(c.path));
  h = fnv1a_field(h, c.case_or_lemma ? std::to_string(*c.case_or_lemma) : "-");
  h = fnv1a_field(h, std::to_string(c.checks.size()));
  for (const auto& check : c.checks) {
    h = fnv1a_field(h, check.name);
    h = fnv1a_field(h, check.claim);
    h = fnv1a_field(h, std::to_string(check.witnesses.size()));
    for (const auto& [k, v] : check.witnesses) {
      h = fnv1a_field(h, k);
      h = fnv1a_field(h, v);
    }
    h = fnv1a_field(h, check.pass ? "1" : "0");
  }
  h = fnv1a_field(h, std::to_string(c.patterns.size()));
  for (const auto& p : c.patterns) h = fnv1a_field(h, p);
  h = fnv1a_field(h, c.swap_pr ? "1" : "0");
  h = fnv1a_field(h, std::to_string(c.children.size()));
  for (const auto& child : c.children) h = hash_certificate(h, child);
  return fnv1a_field(h, c.verdict ? "1" : "0");
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

std::string two_digits(int v) { return (v < 10 ? "0" : "") + std::to_string(v); }

void count_nodes(const Certificate& node, SweepReport& report) {
  ++report.nodes[path_key(node)];
  if (node.path == CertificatePath::reduction && node.verdict) {
    for (const auto& p : node.patterns) ++report.patterns[p];
  }
  if (node.path == CertificatePath::prop1) {
    for (const auto& c : node.checks) {
      if (c.name != "independence") continue;
      const auto it = c.witnesses.find("c_F1[XY^2]");
      if (it != c.witnesses.end() && it->second == "0") ++report.prop1_zero_xy2;
    }
  }
  for (const auto& child : node.children) count_nodes(child, report);
}

// All triples with first point points[i].
struct Unit {
  std::size_t curve;
  std::size_t first;
};

struct UnitResult {
  SweepReport partial;
  std::uint64_t digest = kFnvOffset;
};

void record_failure(SweepReport& report, const SweepOptions& options, SweepFailure failure) {
  ++report.histogram["failed"];
  if (report.failures.size() < options.max_failures_recorded) report.failures.push_back(std::move(failure));
}

void certify_triple(const WeierstrassCurve& e, const CurvePoint& p, const CurvePoint& q, const CurvePoint& r,
                    const SweepOptions& options, UnitResult& out) {
  auto& report = out.partial;
  ++report.triples_tested;
  const auto triple = [&] { return std::array<std::string, 3>{p.to_string(), q.to_string(), r.to_string()}; };
  try {
    const auto cert = certify(e, p, q, r);
    if (auto problem = validate_certificate(cert)) {
      record_failure(report, options,
                     {e.spec(), triple(), "invalid certificate: " + *problem, canonical_dump(certificate_to_json(cert))});
      return;
    }
    ++report.histogram[path_key(cert)];
    count_nodes(cert, report);
    if (options.on_certificate) options.on_certificate(e, cert);
    if (options.digest_certificates) out.digest = hash_certificate(out.digest, cert);
  } catch (const CertificationError& err) {
    record_failure(report, options, {e.spec(), triple(), err.what(), canonical_dump(certificate_to_json(err.partial()))});
  } catch (const Error& err) {
    record_failure(report, options, {e.spec(), triple(), err.what(), ""});
  }
}

void add_counts(std::map<std::string, std::uint64_t>& into, const std::map<std::string, std::uint64_t>& from) {
  for (const auto& [k, v] : from) into[k] += v;
}

}  // namespace

std::string path_key(const Certificate& node) {
  switch (node.path) {
    case CertificatePath::obvious: return "obvious/case" + two_digits(node.case_or_lemma.value_or(0));
    case CertificatePath::prop1: return "prop1";
    case CertificatePath::reduction: return "reduction/lemma" + two_digits(node.case_or_lemma.value_or(0));
  }
  return "";
}

std::vector<WeierstrassCurve> exhaustive_curves(const Field& field) {
  if (!field.is_finite()) raise(ErrorCode::InfiniteField, "cannot enumerate curves over Q");
  const auto els = field.elements();
  std::vector<WeierstrassCurve> out;
  for (const auto& a1 : els) {
    for (const auto& a2 : els) {
      for (const auto& a3 : els) {
        for (const auto& a4 : els) {
          for (const auto& a6 : els) {
            const WeierstrassCoefficients c{a1, a2, a3, a4, a6};
            if (!discriminant(c).is_zero()) out.emplace_back(field, c);
          }
        }
      }
    }
  }
  return out;
}

AxiomReport verify_group_axioms(const WeierstrassCurve& e, const std::vector<CurvePoint>& points) {
  AxiomReport report;
  report.field = e.field().spec();
  report.curve = e.spec();
  report.points = points.size();
  const auto o = e.infinity();
  const auto fail = [&](const std::string& what) { raise(ErrorCode::AxiomFailure, what + " on [" + e.spec() + "]"); };
  for (const auto& p : points) {
    if (!(add_points(e, p, o) == p) || !(add_points(e, o, p) == p)) fail("identity fails at " + p.to_string());
    ++report.identity_checks;
    if (!(add_points(e, p, negate(e, p)) == o) || !(star(e, p, negate(e, p)) == o)) {
      fail("inverse fails at " + p.to_string());
    }
    ++report.inverse_checks;
  }
  std::vector<std::vector<std::optional<CurvePoint>>> sums(points.size(),
                                                           std::vector<std::optional<CurvePoint>>(points.size()));
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = 0; j < points.size(); ++j) {
      sums[i][j] = add_points(e, points[i], points[j]);
      if (j < i) {
        if (!(*sums[i][j] == *sums[j][i])) {
          fail("commutativity fails for " + points[i].to_string() + ", " + points[j].to_string());
        }
        ++report.commutativity_checks;
      }
    }
  }
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = 0; j < points.size(); ++j) {
      for (std::size_t k = 0; k < points.size(); ++k) {
        const auto lhs = add_points(e, *sums[i][j], points[k]);
        const auto rhs = add_points(e, points[i], *sums[j][k]);
        if (!(lhs == rhs)) {
          fail("associativity fails for (" + points[i].to_string() + ", " + points[j].to_string() + ", " +
               points[k].to_string() + "): " + lhs.to_string() + " vs " + rhs.to_string());
        }
        ++report.associativity_checks;
      }
    }
  }
  return report;
}

AxiomReport verify_group_axioms(const WeierstrassCurve& e) { return verify_group_axioms(e, enumerate_points(e)); }

std::vector<WeierstrassCurve> select_curves(const Field& field, const SweepOptions& options) {
  const auto all = exhaustive_curves(field);
  const std::size_t stride = options.curve_stride == 0 ? 1 : options.curve_stride;
  std::vector<WeierstrassCurve> out;
  for (std::size_t i = 0; i < all.size(); i += stride) {
    if (options.max_curves && out.size() >= options.max_curves) break;
    out.push_back(all[i]);
  }
  return out;
}

SweepReport sweep_curves(const Field& field, const std::vector<WeierstrassCurve>& curves,
                         const SweepOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<std::vector<CurvePoint>> points;
  std::vector<Unit> units;
  for (std::size_t c = 0; c < curves.size(); ++c) {
    if (!(curves[c].field() == field)) raise(ErrorCode::MixedFields, "curve outside " + field.spec());
    points.push_back(enumerate_points(curves[c]));
    for (std::size_t i = 0; i < points.back().size(); ++i) units.push_back({c, i});
  }

  std::vector<UnitResult> results(units.size());
  const auto work = [&](std::size_t u) {
    const auto& e = curves[units[u].curve];
    const auto& pts = points[units[u].curve];
    const auto& p = pts[units[u].first];
    const StarMemo memo(e);
    for (const auto& q : pts) {
      for (const auto& r : pts) certify_triple(e, p, q, r, options, results[u]);
    }
  };
  const unsigned threads = std::max(1u, options.threads);
  if (threads == 1) {
    for (std::size_t u = 0; u < units.size(); ++u) work(u);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        for (std::size_t u = next++; u < units.size(); u = next++) work(u);
      });
    }
  }

  SweepReport report;
  report.field = field.spec();
  report.curves_tested = curves.size();
  std::uint64_t digest = kFnvOffset;
  for (auto& r : results) {
    auto& part = r.partial;
    report.triples_tested += part.triples_tested;
    add_counts(report.histogram, part.histogram);
    add_counts(report.nodes, part.nodes);
    add_counts(report.patterns, part.patterns);
    report.prop1_zero_xy2 += part.prop1_zero_xy2;
    for (auto& f : part.failures) {
      if (report.failures.size() < options.max_failures_recorded) report.failures.push_back(std::move(f));
    }
    digest = fnv1a(digest, hex64(r.digest));
  }
  report.certificate_digest = options.digest_certificates ? hex64(digest) : "";
  report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

SweepReport verify_all_triples(const WeierstrassCurve& e, const SweepOptions& options) {
  return sweep_curves(e.field(), {e}, options);
}

SweepReport sweep_field(const Field& field, const SweepOptions& options) {
  return sweep_curves(field, select_curves(field, options), options);
}

void merge_report(SweepReport& into, const SweepReport& part) {
  if (into.field.empty()) into.field = part.field;
  if (into.field != part.field) raise(ErrorCode::MixedFields, "cannot merge reports for different fields");
  into.curves_tested += part.curves_tested;
  into.triples_tested += part.triples_tested;
  add_counts(into.histogram, part.histogram);
  add_counts(into.nodes, part.nodes);
  add_counts(into.patterns, part.patterns);
  into.prop1_zero_xy2 += part.prop1_zero_xy2;
  into.failures.insert(into.failures.end(), part.failures.begin(), part.failures.end());
  into.certificate_digest = hex64(fnv1a(fnv1a(kFnvOffset, into.certificate_digest), part.certificate_digest));
  into.wall_seconds += part.wall_seconds;
}

std::vector<std::string> unattained_patterns(const std::vector<SweepReport>& reports) {
  std::vector<std::string> out;
  for (const auto p : kAllPatterns) {
    const std::string name(pattern_name(p));
    bool seen = false;
    for (const auto& r : reports) {
      const auto it = r.patterns.find(name);
      seen = seen || (it != r.patterns.end() && it->second > 0);
    }
    if (!seen) out.push_back(name);
  }
  return out;
}

std::vector<CurvePoint> multiples(const WeierstrassCurve& e, const CurvePoint& generator, std::size_t count,
                                  unsigned max_bits) {
  const auto small = [&](const CurvePoint& p) {
    if (p.is_infinity()) return true;
    for (const auto& c : {p.point().x(), p.point().y()}) {
      const auto& q = c.rational();
      const BigInt num = abs(numerator(q));
      const BigInt den = denominator(q);
      if ((num != 0 && msb(num) + 1 > max_bits) || msb(den) + 1 > max_bits) return false;
    }
    return true;
  };
  std::vector<CurvePoint> out;
  auto current = generator;
  while (out.size() < count) {
    if (!small(current)) {
      raise(ErrorCode::Unsupported, "multiple " + std::to_string(out.size() + 1) + " of " + generator.to_string() +
                                        " exceeds " + std::to_string(max_bits) + " bits");
    }
    out.push_back(current);
    current = add_points(e, current, generator);
  }
  return out;
}

RationalSpotCheck rational_spot_check(const WeierstrassCurve& e, const CurvePoint& generator, std::size_t count,
                                      unsigned max_bits) {
  RationalSpotCheck check;
  check.curve = e.spec();
  std::vector<CurvePoint> points{e.infinity()};
  for (const auto& p : multiples(e, generator, count, max_bits)) {
    if (std::find(points.begin(), points.end(), p) == points.end()) points.push_back(p);
  }
  for (const auto& p : points) check.points.push_back(p.to_string());
  check.axioms = verify_group_axioms(e, points);
  for (const auto& p : points) {
    for (const auto& q : points) {
      for (const auto& r : points) {
        ++check.triples;
        try {
          const auto cert = certify(e, p, q, r);
          ++check.histogram[path_key(cert)];
        } catch (const CertificationError& err) {
          check.failures.push_back({e.spec(), {p.to_string(), q.to_string(), r.to_string()}, err.what(), canonical_dump(certificate_to_json(err.partial()))});
        }
      }
    }
  }
  return check;
}

std::string format_report_text(const SweepReport& report) {
  std::string out;
  out += "field " + report.field + ": " + std::to_string(report.curves_tested) + " curves, " +
         std::to_string(report.triples_tested) + " triples\n";
  for (const auto& [k, v] : report.histogram) out += "  " + k + ": " + std::to_string(v) + "\n";
  out += "  nodes:";
  for (const auto& [k, v] : report.nodes) out += " " + k + "=" + std::to_string(v);
  out += "\n  patterns:";
  for (const auto p : kAllPatterns) {
    const auto it = report.patterns.find(std::string(pattern_name(p)));
    out += " " + std::string(pattern_name(p)) + "=" + (it == report.patterns.end() ? "0" : std::to_string(it->second));
  }
  out += "\n  prop1 nodes with c_F1[XY^2] = 0: " + std::to_string(report.prop1_zero_xy2) + "\n";
  out += "  failures: " + std::to_string(report.failures.size()) + "\n";
  for (const auto& f : report.failures) {
    out += "    [" + f.curve + "] (" + f.triple[0] + ", " + f.triple[1] + ", " + f.triple[2] + "): " + f.error + "\n";
  }
  if (!report.certificate_digest.empty()) out += "  certificate digest: " + report.certificate_digest + "\n";
  char buf[64];
  std::snprintf(buf, sizeof buf, "  wall time: %.3f s\n", report.wall_seconds);
  out += buf;
  return out;
}

}  // namespace ecassoc
