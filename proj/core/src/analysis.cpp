#include <biham/analysis.hpp>
#include <biham/errors.hpp>
#include <biham/poisson.hpp>

#include <algorithm>
#include <map>
#include <sstream>

#include "json.hpp"

namespace biham {

using nlohmann::json;

namespace {

bool is_generic(const AnalysisInput& in, const Point& m) {
  for (const auto& g : in.genericity)
    if (g.evaluate(m) == 0) return false;
  for (const auto* p : {&in.structure.p1, &in.structure.p2})
    for (const auto& d : p->excluded_loci())
      if (d.evaluate(m) == 0) return false;
  for (const auto& f : in.families)
    for (const auto& c : f.coeffs)
      if (c.denominator().evaluate(m) == 0) return false;
  for (const auto& ch : in.chains)
    for (const auto& h : ch.functions)
      if (h.denominator().evaluate(m) == 0) return false;
  return true;
}

std::string common_value(const std::vector<std::string>& values) {
  if (values.empty()) return "none";
  for (const auto& v : values)
    if (v != values.front()) return "mixed";
  return values.front();
}

std::string short_reason(const std::string& reason) {
  if (reason.find("degree bound") != std::string::npos) return "degree bound";
  if (reason.find("dim W1") != std::string::npos && reason.find("fails") != std::string::npos) return "W1 dimension bound";
  return reason;
}

json point_json(const Point& p) {
  json a = json::array();
  for (const auto& x : p) a.push_back(x.get_str());
  return a;
}

json report_json(const AnalysisReport& r) {
  json j;
  j["tool"] = "biham";
  j["version"] = r.version;
  j["identity"] = r.identity;
  j["seed"] = r.seed;
  j["dimension"] = r.dimension;
  j["sampling_attempts"] = r.sampling_attempts;
  json certs = json::array();
  for (const auto& c : r.certificates) certs.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  j["certificates"] = certs;
  json pts = json::array();
  for (const auto& p : r.points)
    pts.push_back({{"point", point_json(p.point)},
                   {"pencil_type", p.pencil_type},
                   {"corank_p1", p.corank_p1},
                   {"corank_p2", p.corank_p2},
                   {"generic_corank", p.generic_corank},
                   {"w1", p.w1},
                   {"criterion", p.criterion},
                   {"lax", p.lax},
                   {"integrability", p.integrability}});
  j["points"] = pts;
  j["modal_type"] = r.modal_type;
  json verdicts = json::array();
  for (const auto& v : r.verdicts)
    verdicts.push_back({{"name", v.name},
                        {"value", v.value},
                        {"reason", v.reason},
                        {"provenance", v.provenance},
                        {"conjectural", v.conjectural},
                        {"depends_on", v.depends_on}});
  j["verdicts"] = verdicts;
  json exps = json::array();
  for (const auto& e : r.expectations)
    exps.push_back({{"name", e.name}, {"expected", e.expected}, {"observed", e.observed}, {"met", e.met}});
  j["expectations"] = exps;
  j["status"] = r.certificates_passed() && r.expectations_met() ? "ok" : "mismatch";
  return j;
}

std::string render_markdown(const AnalysisReport& r) {
  std::ostringstream out;
  out << "# Analysis of " << r.identity << "\n\n";
  out << "- version: " << r.version << "\n- seed: " << r.seed << "\n- dimension: " << r.dimension
      << "\n- points: " << r.points.size() << " (" << r.sampling_attempts << " sampling attempts)\n- modal type: "
      << r.modal_type << "\n\n";
  out << "## Certificates\n\n| certificate | result | detail |\n|---|---|---|\n";
  for (const auto& c : r.certificates)
    out << "| " << c.name << " | " << (c.passed ? "pass" : "FAIL") << " | " << c.detail << " |\n";
  out << "\n## Points\n\n| point | type | corank P1 | corank P2 | W1 | criterion | lax | integrability |\n"
      << "|---|---|---|---|---|---|---|---|\n";
  for (const auto& p : r.points)
    out << "| " << to_string(p.point) << " | " << p.pencil_type << " | " << p.corank_p1 << " | " << p.corank_p2 << " | "
        << p.w1 << " | " << p.criterion << " | " << p.lax << " | " << p.integrability << " |\n";
  out << "\n## Verdicts\n\n";
  for (const auto& v : r.verdicts) {
    out << "- " << v.name << ": " << v.value;
    if (!v.reason.empty()) out << " (" << v.reason << ")";
    out << "\n  - provenance: " << v.provenance << "\n";
    if (v.name == "criterion") {
      if (v.conjectural)
        out << "  - conjectural path used; criterion " << v.value << " rests on the multi-family type conjecture\n";
      else
        out << "  - conjectural path unused; criterion " << v.value << " (" << short_reason(v.reason) << ")\n";
    }
    out << "  - depends on: ";
    for (std::size_t i = 0; i < v.depends_on.size(); ++i) out << (i ? ", " : "") << v.depends_on[i];
    out << "\n";
  }
  out << "\n## Expectations\n\n";
  if (r.expectations.empty()) out << "none declared\n";
  for (const auto& e : r.expectations)
    out << "- " << e.name << ": expected " << e.expected << ", observed " << e.observed << " -> "
        << (e.met ? "met" : "MISMATCH") << "\n";
  out << "\nstatus: " << (r.certificates_passed() && r.expectations_met() ? "ok" : "mismatch") << "\n";
  return out.str();
}

}  // namespace

bool AnalysisReport::certificates_passed() const {
  return std::all_of(certificates.begin(), certificates.end(), [](const Certificate& c) { return c.passed; });
}

bool AnalysisReport::expectations_met() const {
  return std::all_of(expectations.begin(), expectations.end(), [](const ExpectationCheck& e) { return e.met; });
}

AnalysisInput analysis_input(const ModelSpec& m) {
  return {m.identity(), m.structure, m.families, {}, m.genericity, m.expected};
}

AnalysisInput analysis_input(const StructureFile& s) {
  return {s.name, s.structure, s.families, s.chains, s.genericity, std::nullopt};
}

Point sample_point(std::mt19937_64& rng, std::size_t n) {
  Point p;
  p.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const long num = static_cast<long>(rng() % 21) - 10;
    const long den = static_cast<long>(rng() % 5) + 1;
    Rational q(num, den);
    q.canonicalize();
    p.push_back(q);
  }
  return p;
}

std::vector<Point> sample_generic_points(const AnalysisInput& in, std::size_t count, std::uint64_t seed,
                                         std::size_t* attempts) {
  std::mt19937_64 rng(seed);
  std::vector<Point> out;
  const std::size_t budget = 10 * std::max<std::size_t>(count, 1);
  std::size_t tries = 0;
  while (out.size() < count && tries < budget) {
    ++tries;
    Point p = sample_point(rng, in.structure.dim());
    if (is_generic(in, p)) out.push_back(std::move(p));
  }
  if (attempts) *attempts = tries;
  if (out.size() < count)
    throw Error(ErrorKind::SamplingExhausted, "found " + std::to_string(out.size()) + " of " + std::to_string(count) +
                                                  " generic points in " + std::to_string(budget) + " attempts");
  return out;
}

AnalysisReport run_analyze(const AnalysisInput& in, const AnalysisOptions& opts) {
  const BihamStructure& b = in.structure;
  AnalysisReport r;
  r.identity = in.identity;
  r.version = BIHAM_VERSION;
  r.seed = opts.seed;
  r.dimension = b.dim();

  // Certificates.
  std::vector<std::string> base_deps{"jacobi_P1", "jacobi_P2", "compatibility"};
  auto named = [](Certificate c, const std::string& name) {
    c.name = name;
    return c;
  };
  r.certificates.push_back(named(jacobi_check(b.p1), "jacobi_P1"));
  r.certificates.push_back(named(jacobi_check(b.p2), "jacobi_P2"));
  r.certificates.push_back(named(compatibility_check(b.p1, b.p2), "compatibility"));
  std::vector<std::string> family_deps = base_deps, chain_deps = base_deps;
  std::vector<LenardChain> chains = in.chains;
  for (std::size_t i = 0; i < in.families.size(); ++i) {
    const std::string name = "family_" + std::to_string(i);
    Certificate c = named(family_check(b, in.families[i]), name);
    r.certificates.push_back(c);
    family_deps.push_back(name);
    if (c.passed) chains.push_back(chain_from_family(b, in.families[i]));
  }
  std::vector<RationalFunction> all_functions;
  for (std::size_t i = 0; i < chains.size(); ++i) {
    const std::string name = "chain_" + std::to_string(i);
    r.certificates.push_back(named(verify_chain(b, chains[i]), name));
    chain_deps.push_back(name);
    all_functions.insert(all_functions.end(), chains[i].functions.begin(), chains[i].functions.end());
  }
  if (!all_functions.empty()) {
    r.certificates.push_back(named(involution_check(all_functions, b), "involution"));
    chain_deps.push_back("involution");
  }

  // Points.
  std::vector<Point> points;
  if (opts.point) {
    if (opts.point->size() != b.dim())
      throw Error(ErrorKind::DimensionMismatch, "point has " + std::to_string(opts.point->size()) + " coordinates, expected " +
                                                    std::to_string(b.dim()));
    points.push_back(*opts.point);
    r.sampling_attempts = 0;
  } else {
    points = sample_generic_points(in, opts.samples, opts.seed, &r.sampling_attempts);
  }

  std::vector<CriterionVerdict> criteria;
  std::vector<std::string> crit_values, lax_values, integ_values;
  std::string lax_detail;
  for (const auto& m : points) {
    PointRecord rec;
    rec.point = m;
    const SkewPencil pencil = pencil_at(b, m);
    rec.pencil_type = decompose(pencil).to_string();
    rec.corank_p1 = corank_at(b.p1, m);
    rec.corank_p2 = corank_at(b.p2, m);
    rec.generic_corank = generic_corank(pencil);
    rec.w1 = in.families.empty() ? 0 : w1_span_dim(in.families, m);
    criteria.push_back(kronecker_criterion(b, in.families, m));
    rec.criterion = to_string(criteria.back().outcome);
    if (!in.families.empty()) {
      LaxVerdict lv = lax_check(b, in.families.front(), m);
      rec.lax = to_string(lv.outcome);
      if (lax_detail.empty()) lax_detail = lv.detail;
    } else {
      rec.lax = "NotApplicable";
    }
    rec.integrability = to_string(integrability_verdict(b, chains, m).outcome);
    crit_values.push_back(rec.criterion);
    lax_values.push_back(rec.lax);
    integ_values.push_back(rec.integrability);
    r.points.push_back(std::move(rec));
  }

  std::map<std::string, std::size_t> counts;
  for (const auto& p : r.points) ++counts[p.pencil_type];
  std::size_t best = 0;
  for (const auto& [type, c] : counts)
    if (c > best) {
      best = c;
      r.modal_type = type;
    }

  VerdictSummary crit{"criterion", common_value(crit_values), "", "", false, family_deps};
  if (!criteria.empty()) {
    crit.reason = criteria.front().reason;
    crit.provenance = criteria.front().provenance;
    crit.conjectural = std::any_of(criteria.begin(), criteria.end(), [](const CriterionVerdict& v) { return v.conjectural; });
  }
  r.verdicts.push_back(crit);
  std::vector<std::string> lax_deps = base_deps;
  if (!in.families.empty()) lax_deps.push_back("family_0");
  r.verdicts.push_back({"lax", common_value(lax_values), lax_detail, "weak Lax / Lax structure test", false, lax_deps});
  r.verdicts.push_back({"integrability", common_value(integ_values), "", "anchored Lenard scheme and action dimension", false,
                        chain_deps});

  if (in.expected) {
    const Expectations& e = *in.expected;
    const std::string types = common_value([&] {
      std::vector<std::string> t;
      for (const auto& p : r.points) t.push_back(p.pencil_type);
      return t;
    }());
    r.expectations.push_back({"pencil_type", e.pencil_type, types, types == e.pencil_type});
    if (e.criterion) {
      const std::string want = to_string(*e.criterion);
      r.expectations.push_back({"criterion", want, crit.value, crit.value == want});
    }
    if (e.integrability) {
      const std::string want = to_string(*e.integrability);
      const std::string got = r.verdicts.back().value;
      r.expectations.push_back({"integrability", want, got, got == want});
    }
  }
  return r;
}

std::string emit_report(const AnalysisReport& r, ReportFormat format) {
  if (format == ReportFormat::Json) return report_json(r).dump(2) + "\n";
  return render_markdown(r);
}

AnalysisReport parse_report(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::Parse, std::string("report is not valid JSON: ") + e.what());
  }
  try {
    AnalysisReport r;
    r.identity = j.at("identity").get<std::string>();
    r.version = j.at("version").get<std::string>();
    r.seed = j.at("seed").get<std::uint64_t>();
    r.dimension = j.at("dimension").get<std::size_t>();
    r.sampling_attempts = j.at("sampling_attempts").get<std::size_t>();
    for (const auto& c : j.at("certificates"))
      r.certificates.push_back({c.at("name").get<std::string>(), c.at("passed").get<bool>(), c.at("detail").get<std::string>()});
    for (const auto& p : j.at("points")) {
      PointRecord rec;
      for (const auto& x : p.at("point")) rec.point.push_back(parse_rational(x.get<std::string>()));
      rec.pencil_type = p.at("pencil_type").get<std::string>();
      rec.corank_p1 = p.at("corank_p1").get<std::size_t>();
      rec.corank_p2 = p.at("corank_p2").get<std::size_t>();
      rec.generic_corank = p.at("generic_corank").get<std::size_t>();
      rec.w1 = p.at("w1").get<std::size_t>();
      rec.criterion = p.at("criterion").get<std::string>();
      rec.lax = p.at("lax").get<std::string>();
      rec.integrability = p.at("integrability").get<std::string>();
      r.points.push_back(std::move(rec));
    }
    r.modal_type = j.at("modal_type").get<std::string>();
    for (const auto& v : j.at("verdicts"))
      r.verdicts.push_back({v.at("name").get<std::string>(), v.at("value").get<std::string>(), v.at("reason").get<std::string>(),
                            v.at("provenance").get<std::string>(), v.at("conjectural").get<bool>(),
                            v.at("depends_on").get<std::vector<std::string>>()});
    for (const auto& e : j.at("expectations"))
      r.expectations.push_back({e.at("name").get<std::string>(), e.at("expected").get<std::string>(),
                                e.at("observed").get<std::string>(), e.at("met").get<bool>()});
    return r;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Validation, std::string("malformed report: ") + e.what());
  }
}

}  // namespace biham
