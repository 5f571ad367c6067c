#include "nlk3cli/commands.hpp"

#include <functional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "nlk3/divisors.hpp"
#include "nlk3/lattice.hpp"
#include "nlk3/mukai.hpp"
#include "nlk3/nonbn.hpp"
#include "nlk3/picard.hpp"
#include "nlk3/report.hpp"
#include "nlk3cli/document.hpp"

namespace nlk3cli {

namespace {

using nlk3::CanonicalDivisor;
using nlk3::Int;
using nlk3::NLPair;

// Provenance strings attached to output that carries recorded (as opposed
// to recomputed) values.
const char* const kProvRank =
    "rank formula: closed form for the NL-divisor part of Pic_Q(K_g) "
    "(Bruinier-style dimension count); anchor ranks 6,7,7,8,9 for g=6..10 "
    "and 11 for g=12 are recorded values";
const char* const kProvNonbn =
    "non-BN loci: recorded classification of non-Brill-Noether-general "
    "polarizations (discriminant bound plus itemized lists for g=6..10,12)";
const char* const kProvGenerators =
    "generator sets: recorded NL-divisor spanning lists; the genus-6 list "
    "includes D_{4,0}, the locus of non-very-ample polarizations";
const char* const kProvMukai =
    "model catalog: Mukai's homogeneous-space classification of "
    "Brill-Noether-general K3 surfaces; Grassmannian and classical-group "
    "dimensions recomputed, ambient/exceptional constants recorded";
const char* const kProvPeterson =
    "genus-12 relation: coefficients computed by A. Peterson via "
    "vector-valued cusp forms of weight 21/2; recorded and "
    "structure-checked only";
const char* const kProvGit =
    "genus-12 GIT facts: recorded dimensions (boundary 53, incidence "
    "variety 56 with P^3 fibers)";
const char* const kProvSupport =
    "curve-class decompositions: recorded small cases C_{1,0} and C_{2,0} "
    "(a third component exactly at genus 7)";

// Post-parse argument problems (bad range syntax, unknown fault name).
struct UsageError {
  std::string message;
};

struct GenusRange {
  long long lo = 0;
  long long hi = 0;
};

constexpr long long kGenusMin = 2;
constexpr long long kGenusMax = 10000;

GenusRange parse_genus_spec(const std::string& spec) {
  auto parse_one = [](const std::string& text) {
    std::size_t used = 0;
    long long v;
    try {
      v = std::stoll(text, &used);
    } catch (const std::exception&) {
      throw UsageError{"--g expects an integer or a range a..b, got '" +
                       text + "'"};
    }
    if (used != text.size())
      throw UsageError{"--g expects an integer or a range a..b, got '" +
                       text + "'"};
    return v;
  };
  GenusRange out;
  std::size_t dots = spec.find("..");
  if (dots == std::string::npos) {
    out.lo = out.hi = parse_one(spec);
  } else {
    out.lo = parse_one(spec.substr(0, dots));
    out.hi = parse_one(spec.substr(dots + 2));
  }
  if (out.lo < kGenusMin || out.hi > kGenusMax || out.lo > out.hi)
    throw UsageError{"--g must lie within [2, 10000] with a <= b, got '" +
                     spec + "'"};
  return out;
}

const std::vector<std::string>& divisor_columns() {
  static const std::vector<std::string> cols = {"g",     "d", "n",
                                                "delta", "r", "label"};
  return cols;
}

std::vector<std::string> divisor_row(const CanonicalDivisor& c) {
  return {c.ctx().g.str(), c.rep_d().str(),  c.rep_n().str(),
          c.delta().str(), c.r().str(),      c.label()};
}

nlohmann::json divisor_json(const CanonicalDivisor& c) {
  nlohmann::json obj = nlohmann::json::object();
  obj["g"] = c.ctx().g.str();
  obj["d"] = c.rep_d().str();
  obj["n"] = c.rep_n().str();
  obj["delta"] = c.delta().str();
  obj["r"] = c.r().str();
  obj["label"] = c.label();
  return obj;
}

std::vector<std::string> rho_row(const nlk3::RhoBreakdown& b) {
  return {b.g.str(),
          b.rho.str(),
          nlk3::rat_str(b.leading),
          std::to_string(b.alpha),
          std::to_string(b.beta),
          nlk3::rat_str(b.frac_sum),
          b.square_count.str()};
}

nlohmann::json rho_json(const nlk3::RhoBreakdown& b) {
  nlohmann::json obj = nlohmann::json::object();
  obj["g"] = b.g.str();
  obj["rho"] = b.rho.str();
  obj["leading"] = nlk3::rat_str(b.leading);
  obj["alpha"] = std::to_string(b.alpha);
  obj["beta"] = std::to_string(b.beta);
  obj["frac_sum"] = nlk3::rat_str(b.frac_sum);
  obj["square_count"] = b.square_count.str();
  return obj;
}

Document do_rho(const GenusRange& range) {
  Document doc;
  doc.command = "rho";
  doc.inputs = {{"g", range.lo == range.hi
                          ? std::to_string(range.lo)
                          : std::to_string(range.lo) + ".." +
                                std::to_string(range.hi)}};
  doc.columns = {"g", "rho", "leading", "alpha", "beta", "frac_sum",
                 "square_count"};
  for (long long g = range.lo; g <= range.hi; ++g)
    doc.rows.push_back(rho_row(nlk3::picard_rank(g)));
  doc.provenance = {kProvRank};
  return doc;
}

Document do_canon(long long g, long long d, long long n) {
  Document doc;
  doc.command = "canon";
  doc.inputs = {{"g", std::to_string(g)},
                {"d", std::to_string(d)},
                {"n", std::to_string(n)}};
  CanonicalDivisor c = nlk3::canonicalize(NLPair(g, d, n));
  doc.columns = divisor_columns();
  doc.csv_omit = {"label"};
  doc.rows.push_back(divisor_row(c));
  return doc;
}

Document do_nonbn(const GenusRange& range, const std::string& method) {
  Document doc;
  doc.command = "nonbn";
  doc.inputs = {{"g", range.lo == range.hi
                          ? std::to_string(range.lo)
                          : std::to_string(range.lo) + ".." +
                                std::to_string(range.hi)},
                {"method", method}};
  doc.columns = divisor_columns();
  doc.csv_omit = {"label"};
  for (long long g = range.lo; g <= range.hi; ++g) {
    nlk3::NonBNList list = method == "system" ? nlk3::nonbn_system(g)
                                              : nlk3::nonbn_closed_form(g);
    for (const auto& [d, n] : list.pairs)
      doc.rows.push_back(divisor_row(nlk3::canonicalize(NLPair(g, d, n))));
  }
  doc.provenance = {kProvNonbn};
  return doc;
}

Document do_decompose(long long g, long long d, long long n,
                      long long bound) {
  Document doc;
  doc.command = "decompose";
  doc.inputs = {{"g", std::to_string(g)},
                {"d", std::to_string(d)},
                {"n", std::to_string(n)},
                {"bound", std::to_string(bound)}};
  nlk3::SupportSet support = nlk3::decompose(g, d, n, bound);
  doc.rows_key = "members";
  doc.columns = divisor_columns();
  doc.csv_omit = {"label"};
  for (const CanonicalDivisor& c : support.members)
    doc.rows.push_back(divisor_row(c));
  doc.scalars = {{"source_delta", nlk3::discriminant(support.source).str()},
                 {"member_count", std::to_string(support.members.size())}};
  return doc;
}

Document do_generators(long long g) {
  Document doc;
  doc.command = "generators";
  doc.inputs = {{"g", std::to_string(g)}};
  nlk3::GeneratorSet gens = nlk3::generator_set(g);
  doc.rows_key = "members";
  doc.columns = divisor_columns();
  doc.csv_omit = {"label"};
  for (const CanonicalDivisor& c : gens.members)
    doc.rows.push_back(divisor_row(c));
  doc.scalars = {{"rho", gens.expected_rank.str()},
                 {"relation_dim", gens.relation_dim.str()}};
  doc.provenance = {kProvGenerators, kProvRank};
  return doc;
}

Document do_elliptic(long long g, long long d_max) {
  Document doc;
  doc.command = "elliptic";
  doc.inputs = {{"g", std::to_string(g)}, {"dmax", std::to_string(d_max)}};
  nlk3::EllipticDivisors list = nlk3::elliptic_divisors(g, d_max);
  doc.rows_key = "members";
  doc.columns = divisor_columns();
  doc.csv_omit = {"label"};
  for (const CanonicalDivisor& c : list.members)
    doc.rows.push_back(divisor_row(c));
  doc.scalars = {{"excluded_count", std::to_string(list.excluded.size())}};
  if (!list.excluded.empty()) {
    nlohmann::json excluded = nlohmann::json::array();
    for (const auto& [d, c] : list.excluded) {
      nlohmann::json obj = divisor_json(c);
      obj["input_d"] = d.str();
      excluded.push_back(obj);
    }
    doc.extra = nlohmann::json::object();
    doc.extra["excluded"] = excluded;
  }
  return doc;
}

std::vector<std::string> model_row(const nlk3::MukaiModel& m) {
  return {m.g.str(),
          m.ambient_name,
          m.ambient_dim.str(),
          m.section_space_dim.str(),
          m.bundle_desc,
          m.bundle_rank.str(),
          m.parameter_space_desc,
          m.parameter_dim.str(),
          m.group_name,
          m.group_dim.str(),
          m.fiber_dim.str(),
          m.moduli_dim().str(),
          m.rs_factorization ? m.rs_factorization->first.str() : "",
          m.rs_factorization ? m.rs_factorization->second.str() : "",
          m.section_degree.str()};
}

Document do_catalog(long long g) {
  Document doc;
  doc.command = "catalog";
  doc.inputs = {{"g", g == 0 ? "all" : std::to_string(g)}};
  doc.columns = {"g",           "ambient",       "ambient_dim",
                 "sections",    "bundle",        "bundle_rank",
                 "parameter_space", "parameter_dim", "group",
                 "group_dim",   "fiber_dim",     "moduli_dim",
                 "rs_r",        "rs_s",          "degree"};
  doc.csv_omit = {"ambient", "bundle", "parameter_space", "group"};
  nlohmann::json notes = nlohmann::json::array();
  auto add = [&](const nlk3::MukaiModel& m) {
    doc.rows.push_back(model_row(m));
    if (!m.note.empty() || m.section_space_dim_derived) {
      nlohmann::json obj = nlohmann::json::object();
      obj["g"] = m.g.str();
      obj["note"] = m.note;
      obj["section_space_dim_derived"] = m.section_space_dim_derived;
      notes.push_back(obj);
    }
  };
  if (g == 0)
    for (const nlk3::MukaiModel& m : nlk3::mukai_catalog()) add(m);
  else
    add(nlk3::mukai_model(g));
  if (!notes.empty()) {
    doc.extra = nlohmann::json::object();
    doc.extra["notes"] = notes;
  }
  doc.provenance = {kProvMukai};
  return doc;
}

Document do_report(const std::string& fault, bool& any_failed) {
  std::vector<nlk3::MukaiModel> catalog = nlk3::mukai_catalog();
  if (fault == "g8_group_dim") {
    for (nlk3::MukaiModel& m : catalog)
      if (m.g == 8) m.group_dim += 1;
  } else if (!fault.empty()) {
    throw UsageError{"unknown --check-fault '" + fault +
                     "' (known: g8_group_dim)"};
  }

  nlk3::FullReport report = nlk3::build_report(catalog);
  any_failed = !report.all_pass;

  Document doc;
  doc.command = "report";
  int failed = 0;
  for (const nlk3::ReportCheck& c : report.checks) {
    if (!c.pass) ++failed;
    doc.checks.push_back(CheckRow{c.g == 0 ? "-" : c.g.str(), c.name, c.pass,
                                  c.value, c.expected, c.detail});
  }
  doc.scalars = {{"checks_total", std::to_string(report.checks.size())},
                 {"checks_failed", std::to_string(failed)}};
  doc.overall = report.all_pass ? "PASS" : "FAIL";

  nlohmann::json genera = nlohmann::json::array();
  for (const nlk3::GenusSection& s : report.sections) {
    nlohmann::json sec = nlohmann::json::object();
    sec["g"] = s.rho.g.str();
    sec["rho"] = rho_json(s.rho);

    nlohmann::json gens = nlohmann::json::object();
    nlohmann::json members = nlohmann::json::array();
    for (const CanonicalDivisor& c : s.generators.members)
      members.push_back(divisor_json(c));
    gens["members"] = members;
    gens["expected_rank"] = s.generators.expected_rank.str();
    gens["relation_dim"] = s.generators.relation_dim.str();
    sec["generators"] = gens;

    nlohmann::json nonbn = nlohmann::json::array();
    for (const auto& [d, n] : s.nonbn.pairs) {
      nlohmann::json obj = nlohmann::json::object();
      obj["d"] = d.str();
      obj["n"] = n.str();
      nonbn.push_back(obj);
    }
    sec["nonbn"] = nonbn;

    auto support_json = [](const nlk3::SupportSet& set) {
      nlohmann::json obj = nlohmann::json::object();
      nlohmann::json source = nlohmann::json::object();
      source["d"] = set.source.d.str();
      source["n"] = set.source.n.str();
      source["delta"] = nlk3::discriminant(set.source).str();
      obj["source"] = source;
      nlohmann::json members = nlohmann::json::array();
      for (const CanonicalDivisor& c : set.members)
        members.push_back(divisor_json(c));
      obj["members"] = members;
      return obj;
    };
    sec["c10"] = support_json(s.c10);
    sec["c20"] = support_json(s.c20);

    nlohmann::json model = nlohmann::json::object();
    model["ambient"] = s.model.ambient_name;
    model["ambient_dim"] = s.model.ambient_dim.str();
    model["sections"] = s.model.section_space_dim.str();
    model["bundle"] = s.model.bundle_desc;
    model["bundle_rank"] = s.model.bundle_rank.str();
    model["parameter_space"] = s.model.parameter_space_desc;
    model["parameter_dim"] = s.model.parameter_dim.str();
    model["group"] = s.model.group_name;
    model["group_dim"] = s.model.group_dim.str();
    model["fiber_dim"] = s.model.fiber_dim.str();
    model["degree"] = s.model.section_degree.str();
    sec["model"] = model;

    genera.push_back(sec);
  }
  doc.extra = nlohmann::json::object();
  doc.extra["genera"] = genera;

  doc.provenance = {kProvRank,       kProvNonbn, kProvGenerators,
                    kProvSupport,    kProvMukai, kProvPeterson,
                    kProvGit};
  return doc;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Noether-Lefschetz divisors on moduli of quasi-polarized "
               "K3 surfaces: ranks, canonical forms, non-BN lists, "
               "curve-class decompositions and the Mukai-model catalog",
               "nlk3"};
  app.require_subcommand(1);

  std::string format_text;
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format_text,
                    "output format: table, json or csv (default table; "
                    "NLK3_FORMAT overrides the default)")
        ->envname("NLK3_FORMAT")
        ->check(CLI::IsMember({"table", "json", "csv"}));
  };

  std::string g_spec;
  long long g = 0, d = 0, n = 0, bound = 0, d_max = 1;
  std::string method = "closed_form";
  std::string fault;
  long long catalog_g = 0;

  std::function<Document()> action;
  bool report_failed = false;

  CLI::App* rho = app.add_subcommand(
      "rho", "rank of the NL part of Pic_Q(K_g), with breakdown");
  rho->add_option("--g", g_spec, "genus, or inclusive range a..b")
      ->required();
  add_format(rho);
  rho->callback([&] {
    GenusRange range = parse_genus_spec(g_spec);
    action = [range] { return do_rho(range); };
  });

  CLI::App* canon =
      app.add_subcommand("canon", "canonical form of a divisor label");
  canon->add_option("--g", g, "genus")->required()
      ->check(CLI::Range(kGenusMin, kGenusMax));
  canon->add_option("--d", d, "pairing L.beta")->required();
  canon->add_option("--n", n, "self-intersection beta^2")->required();
  add_format(canon);
  canon->callback([&] {
    action = [g, d, n] { return do_canon(g, d, n); };
  });

  CLI::App* nonbn = app.add_subcommand(
      "nonbn", "divisors parametrizing non-Brill-Noether-general surfaces");
  nonbn->add_option("--g", g_spec, "genus, or inclusive range a..b")
      ->required();
  nonbn->add_option("--method", method,
                    "enumeration route: closed_form (default) or system")
      ->check(CLI::IsMember({"closed_form", "system"}));
  add_format(nonbn);
  nonbn->callback([&] {
    GenusRange range = parse_genus_spec(g_spec);
    action = [range, &method] { return do_nonbn(range, method); };
  });

  CLI::App* decompose = app.add_subcommand(
      "decompose", "support of the curve-class locus C_{d,n}");
  decompose->add_option("--g", g, "genus")->required()
      ->check(CLI::Range(kGenusMin, kGenusMax));
  decompose->add_option("--d", d, "pairing L.beta")->required();
  decompose->add_option("--n", n, "self-intersection beta^2")->required();
  decompose->add_option("--bound", bound,
                        "vector search box; raised to the proven default "
                        "max(4, delta) when smaller")
      ->check(CLI::NonNegativeNumber);
  add_format(decompose);
  decompose->callback([&] {
    action = [g, d, n, bound] { return do_decompose(g, d, n, bound); };
  });

  CLI::App* generators = app.add_subcommand(
      "generators", "NL-divisor generating set of Pic_Q(K_g)");
  generators->add_option("--g", g, "genus in {6..10, 12}")->required()
      ->check(CLI::Range(kGenusMin, kGenusMax));
  add_format(generators);
  generators->callback([&] {
    action = [g] { return do_generators(g); };
  });

  CLI::App* elliptic = app.add_subcommand(
      "elliptic", "canonical forms of the elliptic labels D_{d,0}");
  elliptic->add_option("--g", g, "genus")->required()
      ->check(CLI::Range(kGenusMin, kGenusMax));
  elliptic->add_option("--dmax", d_max, "largest d to include")
      ->required()
      ->check(CLI::PositiveNumber);
  add_format(elliptic);
  elliptic->callback([&] {
    action = [g, d_max] { return do_elliptic(g, d_max); };
  });

  CLI::App* catalog = app.add_subcommand(
      "catalog", "homogeneous-space models and GIT parameter spaces");
  catalog->add_option("--g", catalog_g, "restrict to one genus")
      ->check(CLI::Range(kGenusMin, kGenusMax));
  add_format(catalog);
  catalog->callback([&] {
    action = [&catalog_g] { return do_catalog(catalog_g); };
  });

  CLI::App* report = app.add_subcommand(
      "report", "recompute and check every recorded table");
  add_format(report);
  report->add_option("--check-fault", fault,
                     "perturb one catalog constant to exercise the "
                     "failure path")
      ->group("");  // hidden
  report->callback([&] {
    action = [&fault, &report_failed] {
      return do_report(fault, report_failed);
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    err << "error: " << e.message << "\n";
    return 2;
  }

  Format format = Format::table;
  if (!format_text.empty()) parse_format(format_text, format);

  try {
    Document doc = action();
    out << render(doc, format);
  } catch (const UsageError& e) {
    err << "error: " << e.message << "\n";
    return 2;
  } catch (const nlk3::NonIntegralRho& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const nlk3::DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 4;
  }
  return report_failed ? 5 : 0;
}

}  // namespace nlk3cli
