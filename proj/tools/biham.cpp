#include <biham/analysis.hpp>
#include <biham/errors.hpp>
#include <biham/io.hpp>
#include <biham/models.hpp>
#include <biham/normal_form.hpp>
#include <biham/parse.hpp>
#include <biham/pencil.hpp>
#include <biham/poisson.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

using namespace biham;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kInputError = 2;

// A catalog spec such as "open_toda:k=2" or a path to a structure file.
StructureFile resolve_structure(const std::string& target) {
  if (std::filesystem::is_regular_file(target)) return parse_structure_file(target);
  return structure_from_model(make_model(target));
}

AnalysisInput resolve_analysis(const std::string& target) {
  if (std::filesystem::is_regular_file(target)) return analysis_input(parse_structure_file(target));
  return analysis_input(make_model(target));
}

Point parse_point(const std::string& text) {
  Point p;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) p.push_back(parse_rational(item));
  if (p.empty()) throw Error(ErrorKind::Parse, "empty point");
  return p;
}

void write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::Validation, "cannot write '" + path + "'");
  out << text;
}

int print_certificates(const std::vector<Certificate>& certs) {
  bool ok = true;
  for (const auto& c : certs) {
    std::cout << (c.passed ? "PASS " : "FAIL ") << c.name;
    if (!c.detail.empty()) std::cout << ": " << c.detail;
    std::cout << "\n";
    ok = ok && c.passed;
  }
  return ok ? kOk : kMismatch;
}

Certificate renamed(Certificate c, std::string name) {
  c.name = std::move(name);
  return c;
}

ReportFormat report_format(const std::string& s) {
  if (s == "json") return ReportFormat::Json;
  if (s == "markdown" || s == "md") return ReportFormat::Markdown;
  throw Error(ErrorKind::Validation, "unknown format '" + s + "'");
}

std::string decomposition_text(const SkewPencil& p, bool as_json) {
  const PencilType t = decompose(p);
  const std::vector<int> mins = minimal_indices(p);
  if (as_json) {
    json j;
    j["type"] = t.to_string();
    j["dimension"] = t.n;
    j["minimal_indices"] = mins;
    j["kronecker_dims"] = t.kronecker_dims();
    json blocks = json::array();
    for (const auto& b : t.blocks) {
      json e{{"kind", b.kind == BlockKind::Kronecker ? "kronecker" : "jordan"}, {"k", b.k}, {"dimension", b.dimension()}};
      if (b.kind == BlockKind::Jordan) {
        e["divisor"] = b.divisor.to_string();
        auto mu = b.divisor.mu();
        e["mu"] = mu ? json(mu->to_string()) : json(nullptr);
        e["certified_irreducible"] = b.divisor.certified_irreducible();
      }
      blocks.push_back(e);
    }
    j["blocks"] = blocks;
    j["generic_corank"] = generic_corank(p);
    j["action_dimension"] = action_dimension(t);
    return j.dump(2) + "\n";
  }
  std::ostringstream out;
  out << "type: " << t.to_string() << "\n";
  out << "minimal indices:";
  for (int m : mins) out << " " << m;
  out << "\ngeneric corank: " << generic_corank(p) << "\naction dimension: " << action_dimension(t) << "\n";
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact analysis of bihamiltonian structures and skew matrix pencils"};
  app.set_version_flag("--version", std::string("biham ") + BIHAM_VERSION);
  app.require_subcommand(1);

  std::uint64_t seed = 0;
  std::size_t samples = 10;
  std::string point_text, format = "json", output;
  int truncation = 6;

  auto* catalog = app.add_subcommand("catalog", "List or export catalog models");
  catalog->require_subcommand(1);
  auto* cat_list = catalog->add_subcommand("list", "List catalog model names");
  auto* cat_export = catalog->add_subcommand("export", "Print a catalog model as a structure file");
  std::string export_spec;
  cat_export->add_option("model", export_spec, "Catalog spec, e.g. open_toda:k=2")->required();
  cat_export->add_option("-o,--output", output, "Output file");

  auto* analyze = app.add_subcommand("analyze", "Certificates, sampled decompositions and verdicts");
  std::string analyze_target;
  analyze->add_option("target", analyze_target, "Catalog spec or structure file")->required();
  analyze->add_option("--seed", seed, "Sampling seed")->envname("BIHAM_SEED");
  analyze->add_option("--samples", samples, "Number of generic sample points");
  analyze->add_option("--point", point_text, "Analyze one point, e.g. 1,2/3,-1");
  analyze->add_option("--format", format, "json or markdown");
  analyze->add_option("-o,--output", output, "Output file");

  auto* check = app.add_subcommand("check", "Exact identity checks on a structure");
  check->require_subcommand(1);
  std::string check_target, function_text, family_file, chain_file;
  int bracket = 1;
  auto* chk_poisson = check->add_subcommand("poisson", "Jacobi identity for both bivectors");
  auto* chk_compat = check->add_subcommand("compatible", "Compatibility of the two bivectors");
  auto* chk_casimir = check->add_subcommand("casimir", "Whether a function is a Casimir");
  auto* chk_family = check->add_subcommand("family", "Casimir families of lambda*P1 + P2");
  auto* chk_chain = check->add_subcommand("chain", "Lenard chains and involution");
  for (auto* sub : {chk_poisson, chk_compat, chk_casimir, chk_family, chk_chain})
    sub->add_option("target", check_target, "Catalog spec or structure file")->required();
  chk_casimir->add_option("--function", function_text, "Expression in the structure variables")->required();
  chk_casimir->add_option("--bracket", bracket, "1 or 2")->check(CLI::IsMember({1, 2}));
  chk_family->add_option("--family", family_file, "Family file; defaults to the families in the structure");
  chk_chain->add_option("--chain", chain_file, "Chain file; defaults to chains of the structure and its families");

  auto* decompose_cmd = app.add_subcommand("decompose", "Jordan-Kronecker type of a pencil file");
  std::string pencil_file;
  decompose_cmd->add_option("pencil", pencil_file, "Pencil file with skew matrices A and B")->required();
  decompose_cmd->add_option("--format", format, "text or json");

  auto* normalform = app.add_subcommand("normalform", "Normal form phi of f(x, y) and the flatness verdict");
  std::string f_text;
  normalform->add_option("f", f_text, "Polynomial in x, y")->required();
  normalform->add_option("--truncation", truncation, "Total degree of the truncation")->check(CLI::Range(1, 40));
  normalform->add_option("--format", format, "text or json");

  auto* report = app.add_subcommand("report", "Re-render a saved JSON report");
  std::string report_file;
  report->add_option("report", report_file, "JSON report file")->required();
  report->add_option("--format", format, "json or markdown");
  report->add_option("-o,--output", output, "Output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (cat_list->parsed()) {
      for (const auto& name : catalog_names()) std::cout << name << "  " << catalog_description(name) << "\n";
      return kOk;
    }
    if (cat_export->parsed()) {
      write_output(serialize_structure(structure_from_model(make_model(export_spec))), output);
      return kOk;
    }
    if (analyze->parsed()) {
      AnalysisOptions opts;
      opts.seed = seed;
      opts.samples = samples;
      if (!point_text.empty()) opts.point = parse_point(point_text);
      const ReportFormat fmt = report_format(format);
      const AnalysisReport r = run_analyze(resolve_analysis(analyze_target), opts);
      write_output(emit_report(r, fmt), output);
      return r.certificates_passed() && r.expectations_met() ? kOk : kMismatch;
    }
    if (check->parsed()) {
      if (chk_poisson->parsed() && std::filesystem::is_regular_file(check_target)) {
        const std::string text = read_text_file(check_target);
        const json probe = json::parse(text, nullptr, false);
        if (probe.is_object() && probe.contains("brackets"))
          return print_certificates({renamed(jacobi_check(parse_poisson_text(text)), "jacobi")});
      }
      const StructureFile s = resolve_structure(check_target);
      const BihamStructure& b = s.structure;
      std::vector<Certificate> certs;
      if (chk_poisson->parsed()) {
        certs.push_back(renamed(jacobi_check(b.p1), "jacobi_P1"));
        certs.push_back(renamed(jacobi_check(b.p2), "jacobi_P2"));
      } else if (chk_compat->parsed()) {
        certs.push_back(renamed(compatibility_check(b.p1, b.p2), "compatibility"));
      } else if (chk_casimir->parsed()) {
        const RationalFunction f = parse_expression(function_text, b.ring());
        certs.push_back(renamed(is_casimir(bracket == 1 ? b.p1 : b.p2, f), "casimir_P" + std::to_string(bracket)));
      } else if (chk_family->parsed()) {
        std::vector<LambdaFamily> fams = s.families;
        if (!family_file.empty()) fams = {parse_family_text(read_text_file(family_file), b.ring())};
        if (fams.empty()) throw Error(ErrorKind::Validation, "no family to check");
        for (std::size_t i = 0; i < fams.size(); ++i)
          certs.push_back(renamed(family_check(b, fams[i]), "family_" + std::to_string(i)));
      } else if (chk_chain->parsed()) {
        std::vector<LenardChain> chains = s.chains;
        if (!chain_file.empty()) {
          chains = {parse_chain_text(read_text_file(chain_file), b.ring())};
        } else {
          for (const auto& f : s.families) chains.push_back(chain_from_family(b, f));
        }
        if (chains.empty()) throw Error(ErrorKind::Validation, "no chain to check");
        std::vector<RationalFunction> all;
        for (std::size_t i = 0; i < chains.size(); ++i) {
          certs.push_back(renamed(verify_chain(b, chains[i]), "chain_" + std::to_string(i)));
          all.insert(all.end(), chains[i].functions.begin(), chains[i].functions.end());
        }
        certs.push_back(renamed(involution_check(all, b), "involution"));
      }
      return print_certificates(certs);
    }
    if (decompose_cmd->parsed()) {
      if (format != "json" && format != "text") throw Error(ErrorKind::Validation, "unknown format '" + format + "'");
      std::cout << decomposition_text(parse_pencil_text(read_text_file(pencil_file)), format == "json");
      return kOk;
    }
    if (normalform->parsed()) {
      if (format != "json" && format != "text") throw Error(ErrorKind::Validation, "unknown format '" + format + "'");
      const Poly f = parse_poly(f_text, make_ring({"x", "y"}));
      if (f.constant_term() != 0) throw Error(ErrorKind::Validation, "f must vanish at the origin");
      const NormalForm nf = normal_form_phi(f, truncation);
      const std::string phi = nf.phi.to_string({"x", "y"});
      if (format == "json") {
        json j{{"f", f.to_string()}, {"truncation", truncation}, {"phi", phi}, {"flat", nf.flat},
               {"status", to_string(nf.status)}, {"detail", nf.detail}};
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "phi: " << phi << "\nflat: " << (nf.flat ? "yes" : "no") << "\nstatus: " << to_string(nf.status)
                  << "\n";
      }
      return kOk;
    }
    if (report->parsed()) {
      const AnalysisReport r = parse_report(read_text_file(report_file));
      write_output(emit_report(r, report_format(format)), output);
      return r.certificates_passed() && r.expectations_met() ? kOk : kMismatch;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
