#include "cli.hpp"

#include <algorithm>
#include <optional>
#include <variant>

#include "CLI11.hpp"
#include "pentablock/automorphisms.hpp"
#include "pentablock/bidisc.hpp"
#include "pentablock/error.hpp"
#include "pentablock/pentablock.hpp"
#include "pentablock/records.hpp"
#include "pentablock/sampling.hpp"
#include "pentablock/suites.hpp"
#include "pentablock/text.hpp"

namespace pentablock::cli {

namespace {

const std::vector<std::string> kRegions{"penta-interior", "penta-d1", "penta-d2", "g2-interior",
                                        "g2-boundary",    "g2-shilov", "royal"};

struct Globals {
  std::optional<double> tol;
  std::uint64_t seed = 0;
  std::optional<std::size_t> samples;
  bool json = false;
};

// Human-readable form: one `key: value` per line.
void print_text(std::ostream& out, const std::vector<std::pair<std::string, std::string>>& rows) {
  for (const auto& [k, v] : rows) out << k << ": " << v << '\n';
}

std::string describe(const std::variant<Point2, Point3>& pt) {
  if (const auto* p2 = std::get_if<Point2>(&pt)) {
    return format_complex(p2->s) + ", " + format_complex(p2->p);
  }
  const auto& p3 = std::get<Point3>(pt);
  return format_complex(p3.a) + ", " + format_complex(p3.s) + ", " + format_complex(p3.p);
}

double minkowski_or_zero(const Point3& pt) {
  if (pt.a == Complex{} && pt.s == Complex{} && pt.p == Complex{}) return 0.0;
  return minkowski_functional(pt);
}

int classify(const Globals& g, const std::string& text, std::ostream& out) {
  const double tol = g.tol.value_or(kExactTol);
  const auto point = parse_point(text);
  if (const auto* p2 = std::get_if<Point2>(&point)) {
    const auto cls = g2_classify(*p2, tol);
    const auto royal = royal_membership(*p2, tol);
    if (g.json) {
      JsonLine line;
      line.field("point", point)
          .field("verdict", to_string(cls.verdict))
          .field("defects", std::vector<double>{cls.defect});
      if (royal) {
        line.field("royal_lambda", royal->lambda);
      } else {
        line.raw("royal_lambda", "null");
      }
      out << line.str() << '\n';
    } else {
      print_text(out, {{"point", describe(point)},
                       {"verdict", std::string(to_string(cls.verdict))},
                       {"defect", format_double(cls.defect)},
                       {"royal_lambda", royal ? format_complex(royal->lambda) : "none"}});
    }
    return kOk;
  }

  const auto& p3 = std::get<Point3>(point);
  const auto cls = penta_classify(p3, tol);
  const double gauge = minkowski_or_zero(p3);
  if (g.json) {
    out << JsonLine{}
               .field("point", point)
               .field("verdict", to_string(cls.verdict))
               .field("defects", std::vector<double>{cls.hartogs_defect, cls.base.defect})
               .field("base_verdict", to_string(cls.base.verdict))
               .field("in_closure", cls.in_closure)
               .field("minkowski", gauge)
               .str()
        << '\n';
  } else {
    print_text(out, {{"point", describe(point)},
                     {"verdict", std::string(to_string(cls.verdict))},
                     {"hartogs_defect", format_double(cls.hartogs_defect)},
                     {"base_verdict", std::string(to_string(cls.base.verdict))},
                     {"base_defect", format_double(cls.base.defect)},
                     {"in_closure", cls.in_closure ? "true" : "false"},
                     {"minkowski", format_double(gauge)}});
  }
  return kOk;
}

int apply(const Globals& g, const std::string& params, const std::string& text,
          std::ostream& out) {
  const double tol = g.tol.value_or(kPropagatedTol);
  const PentaAutomorphism f = parse_automorphism(params);
  const Point3 pt = parse_point3(text);
  const Point3 img = penta_aut_apply(f, pt, tol);
  const auto before = penta_classify(pt, tol);
  const auto after = penta_classify(img, tol);
  const bool agree = before.verdict == after.verdict;
  if (g.json) {
    out << JsonLine{}
               .field("point", std::variant<Point2, Point3>(pt))
               .field("image", std::variant<Point2, Point3>(img))
               .field("input_verdict", to_string(before.verdict))
               .field("image_verdict", to_string(after.verdict))
               .field("agreement", agree)
               .str()
        << '\n';
  } else {
    print_text(out, {{"image", describe(img)},
                     {"input_verdict", std::string(to_string(before.verdict))},
                     {"image_verdict", std::string(to_string(after.verdict))},
                     {"agreement", agree ? "true" : "false"}});
  }
  return kOk;
}

int lift(const Globals& g, const std::string& blaschke, const std::string& text,
         std::ostream& out) {
  const double tol = g.tol.value_or(kPropagatedTol);
  const BlaschkeProduct b = parse_blaschke(blaschke);
  const Point2 pt = parse_point2(text);
  const Point2 img = lift_blaschke_to_g2(b, pt, tol);
  const auto before = g2_classify(pt, tol);
  const auto after = g2_classify(img, tol);
  if (g.json) {
    out << JsonLine{}
               .field("point", std::variant<Point2, Point3>(pt))
               .field("image", std::variant<Point2, Point3>(img))
               .field("input_verdict", to_string(before.verdict))
               .field("image_verdict", to_string(after.verdict))
               .str()
        << '\n';
  } else {
    print_text(out, {{"image", describe(img)},
                     {"input_verdict", std::string(to_string(before.verdict))},
                     {"image_verdict", std::string(to_string(after.verdict))}});
  }
  return kOk;
}

int verify(const Globals& g, const std::string& suite, std::ostream& out, std::ostream& err) {
  if (suite != "all" && !is_suite(suite)) {
    err << "unknown suite '" << suite << "'\n";
    return kUsageError;
  }
  SuiteOptions options{g.samples, g.seed, g.tol};
  bool all_passed = true;
  for (const auto& report : run_suites(suite, options)) {
    out << to_json_line(report) << '\n';
    all_passed = all_passed && report.passed;
  }
  return all_passed ? kOk : kSuiteFailure;
}

SampleRecord sample_record(const std::string& region, Rng& rng) {
  SampleRecord r;
  r.region = region;
  auto from2 = [&](const Point2& pt) {
    const auto cls = g2_classify(pt, kSampleTol);
    r.point = pt;
    r.verdict = std::string(to_string(cls.verdict));
    r.defects = {cls.defect};
  };
  auto from3 = [&](const Point3& pt) {
    const auto cls = penta_classify(pt, kSampleTol);
    r.point = pt;
    r.verdict = std::string(to_string(cls.verdict));
    r.defects = {cls.hartogs_defect, cls.base.defect};
  };
  if (region == "penta-interior") from3(sample_penta_interior(rng));
  else if (region == "penta-d1") from3(sample_penta_d1(rng));
  else if (region == "penta-d2") from3(sample_penta_d2(rng));
  else if (region == "g2-interior") from2(sample_g2_interior(rng));
  else if (region == "g2-boundary") from2(sample_g2_boundary(rng));
  else if (region == "g2-shilov") from2(sample_g2_shilov(rng));
  else from2(sample_royal(rng));
  return r;
}

int sample(const Globals& g, const std::string& region, std::ostream& out, std::ostream& err) {
  if (std::find(kRegions.begin(), kRegions.end(), region) == kRegions.end()) {
    err << "unknown region '" << region << "'\n";
    return kUsageError;
  }
  Rng rng = Rng(g.seed).substream(region);
  const std::size_t n = g.samples.value_or(10);
  for (std::size_t i = 0; i < n; ++i) out << to_json_line(sample_record(region, rng)) << '\n';
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Pentablock and symmetrized bidisc geometry toolkit", "pentablock"};
  app.fallthrough();
  app.require_subcommand(1);

  Globals g;
  app.add_option("--tol", g.tol, "Classification tolerance / suite threshold override")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", g.seed, "PRNG seed");
  app.add_option("--samples", g.samples, "Number of cases or records");
  app.add_flag("--json", g.json, "Emit JSON Lines for classify/apply/lift");

  std::string point;
  std::string params;
  std::string blaschke;
  std::string suite;
  std::string region;

  auto* cmd_classify = app.add_subcommand("classify", "Classify a point of C^2 or C^3");
  cmd_classify->add_option("--point", point, "Comma-separated complex literals")->required();

  auto* cmd_apply = app.add_subcommand("apply", "Apply a pentablock automorphism");
  cmd_apply->add_option("--params", params, "omega=..; eta=..; alpha=..")->required();
  cmd_apply->add_option("--point", point, "a,s,p")->required();

  auto* cmd_lift = app.add_subcommand("lift", "Apply a Blaschke product to a point of G2");
  cmd_lift->add_option("--blaschke", blaschke, "eta=..; zeros=[..]")->required();
  cmd_lift->add_option("--point", point, "s,p")->required();

  auto* cmd_verify = app.add_subcommand("verify", "Run verification suites");
  cmd_verify->add_option("--suite", suite, "Suite name or 'all'")->required();

  auto* cmd_sample = app.add_subcommand("sample", "Emit sampled points as JSON Lines");
  cmd_sample->add_option("--region", region, "Sampling region")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (cmd_classify->parsed()) return classify(g, point, out);
    if (cmd_apply->parsed()) return apply(g, params, point, out);
    if (cmd_lift->parsed()) return lift(g, blaschke, point, out);
    if (cmd_verify->parsed()) return verify(g, suite, out, err);
    if (cmd_sample->parsed()) return sample(g, region, out, err);
  } catch (const ParseError& e) {
    err << "parse error " << e.what() << '\n';
    return kUsageError;
  } catch (const Error& e) {
    err << e.what() << '\n';
    return e.kind() == ErrorKind::InvalidArgument ? kUsageError : kDomainError;
  }
  return kUsageError;
}

}  // namespace pentablock::cli
