#include "cli.hpp"

#include "ecassoc/certificate.hpp"
#include "ecassoc/curve.hpp"
#include "ecassoc/error.hpp"
#include "ecassoc/harness.hpp"
#include "ecassoc/serialize.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace ecassoc::cli {

namespace {

struct Common {
  std::string field;
  std::string curve;
  std::string format = "text";
  std::string out;
};

struct Document {
  Json json;
  std::string text;
  bool ok = true;
};

bool is_parse_error(ErrorCode code) { return code == ErrorCode::ParseError; }

void add_common(CLI::App* cmd, Common& c, bool needs_curve) {
  cmd->add_option("--field", c.field, "field spec: p=<int>, p=<int>,k=<int>,mod=<c0,...,ck> or Q")->required();
  if (needs_curve) cmd->add_option("--curve", c.curve, "a1,a2,a3,a4,a6")->required();
  cmd->add_option("--format", c.format, "output format")->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--out", c.out, "write output to this path instead of stdout");
}

// Affine points first, O last.
std::vector<CurvePoint> listing_order(std::vector<CurvePoint> points) {
  std::stable_partition(points.begin(), points.end(), [](const CurvePoint& p) { return !p.is_infinity(); });
  return points;
}

void render_certificate(const Certificate& node, int depth, std::string& out) {
  const std::string pad(static_cast<std::size_t>(2 * depth), ' ');
  out += pad + path_key(node) + (node.swap_pr ? " (P<->R)" : "") + " [" + node.triple[0] + ", " + node.triple[1] +
         ", " + node.triple[2] + "] verdict " + (node.verdict ? "true" : "false") + "\n";
  for (const auto& c : node.checks) {
    out += pad + "  " + (c.pass ? "ok   " : "FAIL ") + c.name + ": " + c.claim;
    std::string w;
    for (const auto& [k, v] : c.witnesses) w += (w.empty() ? "" : ", ") + k + "=" + v;
    out += (w.empty() ? "" : "  {" + w + "}") + "\n";
  }
  for (const auto& child : node.children) render_certificate(child, depth + 1, out);
}

std::vector<Field> fields_up_to(std::uint64_t bound) {
  std::vector<Field> out;
  for (std::uint64_t q = 2; q <= bound; ++q) {
    std::uint64_t p = 2;
    while (q % p) ++p;
    unsigned k = 0;
    std::uint64_t rest = q;
    while (rest % p == 0) {
      rest /= p;
      ++k;
    }
    if (rest == 1) out.push_back(Field::finite(p, k));
  }
  return out;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Elliptic-curve group law with per-triple associativity certificates", "ecassoc"};
  app.require_subcommand(1);

  Common points_opts;
  auto* points_cmd = app.add_subcommand("points", "list E(K) for a finite field");
  add_common(points_cmd, points_opts, true);

  Common add_opts, star_opts, negate_opts, certify_opts;
  std::string p_text, q_text, r_text;
  auto* add_cmd = app.add_subcommand("add", "P + Q");
  add_common(add_cmd, add_opts, true);
  auto* star_cmd = app.add_subcommand("star", "P * Q, the third intersection point");
  add_common(star_cmd, star_opts, true);
  auto* negate_cmd = app.add_subcommand("negate", "-P");
  add_common(negate_cmd, negate_opts, true);
  auto* certify_cmd = app.add_subcommand("certify", "associativity certificate for (P, Q, R)");
  add_common(certify_cmd, certify_opts, true);
  for (auto* cmd : {add_cmd, star_cmd, negate_cmd, certify_cmd}) cmd->add_option("--p", p_text, "point P")->required();
  for (auto* cmd : {add_cmd, star_cmd, certify_cmd}) cmd->add_option("--q", q_text, "point Q")->required();
  certify_cmd->add_option("--r", r_text, "point R")->required();

  Common sweep_opts;
  std::uint64_t max_field = 0;
  SweepOptions sweep_options;
  auto* sweep_cmd = app.add_subcommand("sweep", "certify every triple on every smooth curve over small fields");
  sweep_cmd->add_option("--max-field", max_field, "largest field order to sweep")->required()->check(CLI::Range(2, 16));
  sweep_cmd->add_option("--field", sweep_opts.field, "sweep this field only");
  sweep_cmd->add_option("--stride", sweep_options.curve_stride, "keep every n-th curve")->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--max-curves", sweep_options.max_curves, "stop after this many curves per field");
  sweep_cmd->add_option("--threads", sweep_options.threads, "worker threads")->check(CLI::Range(1, 256));
  sweep_cmd->add_option("--format", sweep_opts.format, "output format")->check(CLI::IsMember({"text", "json"}));
  sweep_cmd->add_option("--out", sweep_opts.out, "write output to this path instead of stdout");

  Common axioms_opts;
  std::string generator;
  std::size_t count = 6;
  auto* axioms_cmd = app.add_subcommand("axioms", "check the group axioms on all points (or multiples of a generator over Q)");
  add_common(axioms_cmd, axioms_opts, true);
  axioms_cmd->add_option("--generator", generator, "over Q: spot-check O, G, 2G, ...");
  axioms_cmd->add_option("--count", count, "number of multiples of the generator")->check(CLI::Range(1, 64));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kParseError;
  }

  Common* common = nullptr;
  Document doc;
  try {
    if (points_cmd->parsed()) {
      common = &points_opts;
      const auto field = Field::parse(common->field);
      const auto e = WeierstrassCurve::parse(field, common->curve);
      const auto pts = listing_order(enumerate_points(e));
      doc.json = Json{{"field", field.spec()}, {"curve", e.spec()}, {"count", pts.size()}, {"points", Json::array()}};
      for (const auto& p : pts) {
        doc.json["points"].push_back(p.to_string());
        doc.text += p.to_string() + "\n";
      }
    } else if (add_cmd->parsed() || star_cmd->parsed() || negate_cmd->parsed()) {
      const char* op = add_cmd->parsed() ? "add" : star_cmd->parsed() ? "star" : "negate";
      common = add_cmd->parsed() ? &add_opts : star_cmd->parsed() ? &star_opts : &negate_opts;
      const auto field = Field::parse(common->field);
      const auto e = WeierstrassCurve::parse(field, common->curve);
      const auto p = e.point(p_text);
      doc.json = Json{{"op", op}, {"field", field.spec()}, {"curve", e.spec()}, {"p", p.to_string()}};
      std::optional<CurvePoint> result;
      if (negate_cmd->parsed()) {
        result = negate(e, p);
      } else {
        const auto q = e.point(q_text);
        doc.json["q"] = q.to_string();
        result = add_cmd->parsed() ? add_points(e, p, q) : star(e, p, q);
      }
      doc.json["result"] = result->to_string();
      doc.text = result->to_string() + "\n";
    } else if (certify_cmd->parsed()) {
      common = &certify_opts;
      const auto field = Field::parse(common->field);
      const auto e = WeierstrassCurve::parse(field, common->curve);
      const auto p = e.point(p_text);
      const auto q = e.point(q_text);
      const auto r = e.point(r_text);
      try {
        const auto cert = certify(e, p, q, r);
        doc.json = certificate_to_json(cert);
        render_certificate(cert, 0, doc.text);
      } catch (const CertificationError& ce) {
        doc.json = certificate_to_json(ce.partial());
        render_certificate(ce.partial(), 0, doc.text);
        err << "error: " << ce.what() << "\n";
        doc.ok = false;
      }
    } else if (sweep_cmd->parsed()) {
      common = &sweep_opts;
      std::vector<Field> fields;
      if (!common->field.empty()) {
        const auto field = Field::parse(common->field);
        if (!field.is_finite()) raise(ErrorCode::InfiniteField, "sweep needs a finite field");
        if (*field.order() > max_field) {
          raise(ErrorCode::Unsupported, "field of order " + std::to_string(*field.order()) + " exceeds --max-field " +
                                            std::to_string(max_field));
        }
        fields.push_back(field);
      } else {
        fields = fields_up_to(max_field);
      }
      std::vector<SweepReport> reports;
      for (const auto& f : fields) {
        reports.push_back(sweep_field(f, sweep_options));
        doc.text += format_report_text(reports.back());
        doc.ok = doc.ok && reports.back().ok();
      }
      const auto missing = unattained_patterns(reports);
      doc.text += "unattained patterns:";
      for (const auto& m : missing) doc.text += " " + m;
      doc.text += missing.empty() ? " none\n" : "\n";
      doc.json = sweep_document(reports);
    } else if (axioms_cmd->parsed()) {
      common = &axioms_opts;
      const auto field = Field::parse(common->field);
      const auto e = WeierstrassCurve::parse(field, common->curve);
      if (!field.is_finite()) {
        if (generator.empty()) raise(ErrorCode::InfiniteField, "over Q pass --generator");
        const auto check = rational_spot_check(e, e.point(generator), count);
        doc.json = rational_check_to_json(check);
        doc.ok = check.ok();
        doc.text = "curve " + check.curve + " over Q: " + std::to_string(check.points.size()) + " points, " +
                   std::to_string(check.triples) + " triples certified, " +
                   std::to_string(check.axioms.associativity_checks) + " associativity checks, " +
                   std::to_string(check.failures.size()) + " failures\n";
      } else {
        const auto report = verify_group_axioms(e);
        doc.json = axiom_report_to_json(report);
        doc.text = "curve " + report.curve + " over " + report.field + ": " + std::to_string(report.points) +
                   " points; identity " + std::to_string(report.identity_checks) + ", inverse " +
                   std::to_string(report.inverse_checks) + ", commutativity " +
                   std::to_string(report.commutativity_checks) + ", associativity " +
                   std::to_string(report.associativity_checks) + " checks passed\n";
      }
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return is_parse_error(e.code()) ? kParseError : kDomainError;
  }

  const std::string body = common->format == "json" ? canonical_dump(doc.json) + "\n" : doc.text;
  if (common->out.empty()) {
    out << body;
  } else {
    std::ofstream file(common->out, std::ios::binary);
    file << body;
    if (!file) {
      err << "error: cannot write " << common->out << "\n";
      return kDomainError;
    }
  }
  return doc.ok ? kOk : kDomainError;
}

}  // namespace ecassoc::cli
