// monopole: catalog listing, spectra, Chern numbers, verification and export
// for magnetic fields on Platonic graphs built from binary polyhedral groups.

#include <cstdlib>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "monopole/io.hpp"
#include "monopole/monopoles.hpp"
#include "monopole/reference.hpp"
#include "monopole/verify.hpp"

namespace {

using namespace monopole;

struct Config {
  double tolerance = 1e-9;
  std::uint64_t seed = kDefaultSeed;
  std::string format = "text";
  std::string output;
};

void emit(const Config& cfg, const std::string& text) {
  if (cfg.output.empty()) std::cout << text;
  else write_text(cfg.output, text);
}

std::string fixed12(double v) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(12);
  os << round12(v);
  return os.str();
}

std::string format_lines(const Spectrum& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ", ";
    out += "[" + fixed12(s[i].value) + "]^" + std::to_string(s[i].multiplicity);
    if (auto cf = closed_form(s[i].value)) out += " (" + *cf + ")";
  }
  return out;
}

Solid require_solid(const std::string& name, bool allow_dodecahedron = false) {
  const auto s = parse_solid(name);
  if (!s || (!allow_dodecahedron && *s == Solid::dodecahedron))
    throw OutOfRange("unknown or uncatalogued solid '" + name + "'");
  return *s;
}

const FieldEntry& require_field(const MonopoleCase& mc, long long chern) {
  if (chern > mc.chern_max() || -chern > mc.chern_max())
    throw OutOfRange("Chern number " + std::to_string(chern) + " outside " + std::to_string(mc.chern_min()) + ".." +
                     std::to_string(mc.chern_max()) + " for the " + std::string(solid_name(mc.solid)));
  const FieldEntry* f = mc.find_chern(chern);
  if (!f) throw OutOfRange("no field with Chern number " + std::to_string(chern));
  return *f;
}

std::string field_origin(const FieldEntry& f) {
  if (f.status == FieldStatus::phase_power)
    return "phase power " + std::to_string(f.power) + " of the Chern +1 field (character " +
           std::to_string(f.exponent) + "); no character of the stabiliser gives this Chern number";
  return "character " + std::to_string(f.exponent);
}

int cmd_list(const Config& cfg, const Catalog& cat) {
  const NoGoCertificate cert = dodecahedron_no_go(cat.binary_icosahedral);
  const PentadodecahedralCase pc = pentadodecahedral_case(cat.at(Solid::icosahedron));
  if (cfg.format == "json") {
    Json cases = Json::array();
    for (const auto& mc : cat.cases) cases.push_back(case_json(mc, cfg.tolerance));
    Json j = {{"cases", cases},
              {"pentadodecahedral", pentadodecahedral_json(pc, cfg.tolerance)},
              {"dodecahedron_no_go", no_go_json(cert)},
              {"seed", cfg.seed}};
    emit(cfg, j.dump(2) + "\n");
    return 0;
  }
  std::ostringstream os;
  os << "solid              group  |G|  |H|  V   E   F   d  chern range\n";
  for (const auto& mc : cat.cases) {
    char line[160];
    std::snprintf(line, sizeof line, "%-18s %-5s %4zu %4zu %3zu %3zu %3zu %2zu  %lld..%lld (|c| <= %lld)\n",
                  std::string(solid_name(mc.solid)).c_str(), group_name(mc.group->kind).c_str(),
                  mc.group->group.order(), mc.subgroup.order(), mc.cosets.size(), mc.embedding.edge_count(),
                  mc.face_count(), mc.degree, mc.chern_min(), mc.chern_max(), mc.chern_max());
    os << line;
  }
  char line[200];
  std::snprintf(line, sizeof line, "%-18s %-5s %4zu %4d %3zu  multigraph, %zu summands, L = %zuI - C\n",
                "pentadodecahedral", "2I", cat.binary_icosahedral->group.order(), 6, pc.graph.vertex_count,
                pc.casimir.size(), pc.casimir.size());
  os << line;
  std::snprintf(line, sizeof line, "%-18s %-5s %4zu %4d %3d  no good triple (%zu candidates searched)\n",
                "dodecahedron", "2I", cat.binary_icosahedral->group.order(), 6, 20, cert.search.candidates);
  os << line;
  emit(cfg, os.str());
  return 0;
}

int cmd_spectrum(const Config& cfg, const Catalog& cat, const std::string& solid, long long chern,
                 const std::string& method) {
  const MonopoleCase& mc = cat.at(require_solid(solid));
  const FieldEntry& f = require_field(mc, chern);
  const bool numeric = method != "frobenius";
  const bool frob = method != "numeric" && f.frobenius_adjacency.has_value();
  std::optional<double> delta;
  if (method == "both" && frob)
    delta = cross_validate(f.adjacency_spectrum, *f.frobenius_adjacency, cfg.tolerance).max_delta;

  if (cfg.format == "json") {
    Json j = {{"solid", std::string(solid_name(mc.solid))},
              {"chern", *f.chern},
              {"abs_chern", std::abs(*f.chern)},
              {"origin", status_name(f.status)},
              {"exponent", f.exponent},
              {"degree", mc.degree}};
    if (f.status == FieldStatus::phase_power) j["power"] = f.power;
    if (numeric || !frob) {
      j["adjacency"] = spectrum_json(f.adjacency_spectrum, "numeric", cfg.tolerance);
      j["laplacian"] = spectrum_json(f.laplacian_spectrum, "numeric", cfg.tolerance);
    }
    if (frob) {
      j["frobenius_adjacency"] = spectrum_json(*f.frobenius_adjacency, "frobenius", cfg.tolerance);
      j["frobenius_laplacian"] = spectrum_json(*f.frobenius_laplacian, "frobenius", cfg.tolerance);
    }
    if (delta) j["cross_validation_delta"] = round12(*delta);
    emit(cfg, j.dump(2) + "\n");
    return 0;
  }
  std::ostringstream os;
  os << solid_name(mc.solid) << ", Chern " << *f.chern << " (|c| = " << std::abs(*f.chern) << "), "
     << field_origin(f) << "\n";
  if (method != "numeric" && !f.frobenius_adjacency)
    os << "note: the Frobenius route needs a character; numeric spectra shown\n";
  if (numeric || !frob) {
    os << "adjacency (numeric):   " << format_lines(f.adjacency_spectrum) << "\n";
    os << "laplacian (numeric):   " << format_lines(f.laplacian_spectrum) << "\n";
  }
  if (frob) {
    os << "adjacency (frobenius): " << format_lines(*f.frobenius_adjacency) << "\n";
    os << "laplacian (frobenius): " << format_lines(*f.frobenius_laplacian) << "\n";
  }
  if (delta) os << "cross-validation max delta: " << fixed12(*delta) << "\n";
  emit(cfg, os.str());
  return 0;
}

int cmd_chern(const Config& cfg, const Catalog& cat, const std::string& solid) {
  const MonopoleCase& mc = cat.at(require_solid(solid));
  auto face_turns = [&](const FieldEntry& f) {
    return flux(MagneticPotential::from_adjacency(f.adjacency), mc.embedding.faces.front()) / (2 * std::numbers::pi);
  };
  if (cfg.format == "json") {
    Json rows = Json::array();
    auto add = [&](const FieldEntry& f) {
      Json r = {{"exponent", f.exponent}, {"status", status_name(f.status)}};
      if (f.status == FieldStatus::phase_power) r["power"] = f.power;
      if (f.chern) {
        r["chern"] = *f.chern;
        r["abs_chern"] = std::abs(*f.chern);
        r["face_flux_turns"] = round12(face_turns(f));
      } else {
        r["chern"] = nullptr;
      }
      rows.push_back(r);
    };
    for (const auto& f : mc.characters) add(f);
    for (const auto& f : mc.derived) add(f);
    emit(cfg, Json{{"solid", std::string(solid_name(mc.solid))}, {"faces", mc.face_count()}, {"fields", rows}}.dump(2) + "\n");
    return 0;
  }
  std::ostringstream os;
  os << solid_name(mc.solid) << ": " << mc.face_count() << " faces, admissible Chern numbers " << mc.chern_min()
     << ".." << mc.chern_max() << "\n";
  os << "exponent  origin        chern  |c|  flux per face (turns)\n";
  auto add = [&](const FieldEntry& f) {
    char line[160];
    const std::string origin = f.status == FieldStatus::phase_power ? "power " + std::to_string(f.power)
                                                                    : status_name(f.status);
    if (f.chern)
      std::snprintf(line, sizeof line, "%8lld  %-12s %6lld %4lld  %s\n", f.exponent, origin.c_str(), *f.chern,
                    std::abs(*f.chern), fixed12(face_turns(f)).c_str());
    else
      std::snprintf(line, sizeof line, "%8lld  %-12s %6s %4s  -\n", f.exponent, origin.c_str(), "-", "-");
    os << line;
  };
  for (const auto& f : mc.characters) add(f);
  for (const auto& f : mc.derived) add(f);
  emit(cfg, os.str());
  return 0;
}

int cmd_verify(const Config& cfg, const Catalog& cat, const std::string& scope, std::optional<long long> q,
               long long lmax) {
  VerifyReport r;
  const bool all = scope == "all";
  if (all || scope == "tables") r.append(verify_tables(cat, cfg.tolerance));
  if (all || scope == "gauge") r.append(verify_gauge(cat, cfg.seed));
  if (all || scope == "nogo") r.append(verify_no_go(cat));
  if (all || scope == "penta") r.append(verify_penta(cat, cfg.tolerance));
  if (all || scope == "wuyang") r.append(verify_wu_yang(5, lmax, q));

  if (cfg.format == "json") {
    Json checks = Json::array();
    for (const auto& c : r.checks)
      checks.push_back({{"scope", c.scope}, {"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    emit(cfg, Json{{"scope", scope}, {"checks", checks}, {"failures", r.failures()}, {"passed", r.passed()}}.dump(2) + "\n");
  } else {
    std::ostringstream os;
    for (const auto& c : r.checks)
      os << (c.passed ? "PASS " : "FAIL ") << c.scope << ": " << c.name << (c.detail.empty() ? "" : " (" + c.detail + ")")
         << "\n";
    os << r.checks.size() - r.failures() << "/" << r.checks.size() << " checks passed\n";
    emit(cfg, os.str());
  }
  return r.passed() ? 0 : 1;
}

int cmd_export(const Config& cfg, const Catalog& cat, const std::string& solid, const std::string& what,
               std::optional<long long> chern) {
  if (what == "catalog-json") {
    Json cases = Json::array();
    for (const auto& mc : cat.cases) cases.push_back(case_json(mc, cfg.tolerance));
    Json groups = Json::array({group_json(*cat.binary_tetrahedral), group_json(*cat.binary_octahedral),
                               group_json(*cat.binary_icosahedral)});
    emit(cfg, Json{{"cases", cases}, {"groups", groups}}.dump(2) + "\n");
    return 0;
  }
  const Solid s = require_solid(solid, true);
  if (s == Solid::dodecahedron) {
    if (what == "embedding-json") {
      emit(cfg, embedding_json(reference_embedding(s)).dump(2) + "\n");
      return 0;
    }
    if (what == "graph-dot") {
      const PentadodecahedralCase pc = pentadodecahedral_case(cat.at(Solid::icosahedron));
      emit(cfg, graph_dot(pc.graph, "pentadodecahedral"));
      return 0;
    }
    throw OutOfRange("the dodecahedron has no magnetic field to export");
  }
  const MonopoleCase& mc = cat.at(s);
  if (what == "graph-dot") {
    emit(cfg, graph_dot(mc.graph, std::string(solid_name(s))));
  } else if (what == "embedding-json") {
    emit(cfg, embedding_json(mc.embedding).dump(2) + "\n");
  } else if (what == "matrix-json" || what == "potential-json") {
    const FieldEntry& f = require_field(mc, chern.value_or(1));
    Json j = what == "matrix-json" ? matrix_json(f.adjacency)
                                   : potential_json(MagneticPotential::from_adjacency(f.adjacency));
    j["solid"] = std::string(solid_name(s));
    j["chern"] = *f.chern;
    emit(cfg, j.dump(2) + "\n");
  } else if (what == "character-table-json") {
    emit(cfg, character_table_json(mc.group->table).dump(2) + "\n");
  } else {
    throw OutOfRange("unknown export '" + what + "'");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Discrete Dirac monopoles on Platonic graphs"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "TOML/INI file with option defaults");

  Config cfg;
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", cfg.seed, "Seed for the character-table RNG")->envname("MONOPOLE_SEED");
  app.add_option("--tolerance", cfg.tolerance, "Spectral comparison tolerance")->check(CLI::PositiveNumber);
  app.add_option("--output", cfg.output, "Write to this file instead of stdout");

  std::string solid, method = "both", scope = "all", what;
  long long chern = 0, lmax = 10;
  std::optional<long long> q, export_chern;

  auto* list = app.add_subcommand("list", "Summarise the catalog");
  auto* spectrum = app.add_subcommand("spectrum", "Adjacency and Laplacian spectra for one field");
  spectrum->add_option("--solid", solid)->required();
  spectrum->add_option("--chern", chern)->required();
  spectrum->add_option("--method", method)->check(CLI::IsMember({"numeric", "frobenius", "both"}));
  auto* chern_cmd = app.add_subcommand("chern", "Chern numbers of every field on a solid");
  chern_cmd->add_option("--solid", solid)->required();
  auto* verify = app.add_subcommand("verify", "Run verification checks");
  verify->add_option("--scope", scope)->check(CLI::IsMember({"all", "tables", "gauge", "nogo", "penta", "wuyang"}));
  verify->add_option("--q", q, "Single magnetic charge for the wuyang scope")->check(CLI::NonNegativeNumber);
  verify->add_option("--lmax", lmax, "Highest level for the wuyang scope")->check(CLI::NonNegativeNumber);
  auto* exp = app.add_subcommand("export", "Export graphs, matrices and embeddings");
  exp->add_option("--solid", solid);
  exp->add_option("--what", what)
      ->required()
      ->check(CLI::IsMember(
          {"graph-dot", "matrix-json", "embedding-json", "potential-json", "character-table-json", "catalog-json"}));
  exp->add_option("--chern", export_chern);

  CLI11_PARSE(app, argc, argv);

  try {
    if (exp->parsed() && what != "catalog-json" && solid.empty()) throw OutOfRange("export needs --solid");
    const Catalog cat = build_catalog(cfg.seed);
    if (list->parsed()) return cmd_list(cfg, cat);
    if (spectrum->parsed()) return cmd_spectrum(cfg, cat, solid, chern, method);
    if (chern_cmd->parsed()) return cmd_chern(cfg, cat, solid);
    if (verify->parsed()) return cmd_verify(cfg, cat, scope, q, lmax);
    if (exp->parsed()) return cmd_export(cfg, cat, solid, what, export_chern);
  } catch (const monopole::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
