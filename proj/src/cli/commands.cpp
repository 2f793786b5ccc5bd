#include "gmrk/cli/commands.hpp"

#include <cstdlib>
#include <filesystem>
#include <sstream>

#include <CLI11.hpp>

#include "gmrk/cli/emit.hpp"
#include "gmrk/errors.hpp"
#include "gmrk/operators/builders.hpp"
#include "gmrk/validator/checks.hpp"
#include "gmrk/validator/scan.hpp"

namespace gmrk::cli {

using coupling::HalfInt;
using operators::OperatorFamily;
using validator::ResidualReport;

namespace {

void emit(const RunConfig& cfg, std::ostream& out, const std::string& content) {
  if (cfg.output_path.empty()) {
    out << content;
  } else {
    write_atomically(cfg.output_path, content);
  }
}

HalfInt margin_or(const RunConfig& cfg, int fallback) { return cfg.margin.value_or(HalfInt::from_int(fallback)); }

std::vector<std::string> default_operators(repspace::SpaceMode mode) {
  if (mode == repspace::SpaceMode::coset) return {"M", "U", "T"};
  return {"M", "U", "Tgm"};
}

OperatorFamily family_for(const std::string& sym, const operators::BasisPtr& basis,
                          const operators::GellMannConfig& gm) {
  if (sym == "M") return operators::build_M(basis);
  if (sym == "K") return operators::build_K(basis);
  if (sym == "U") return operators::build_U(basis, gm);
  if (sym == "T") return operators::build_T_closed(basis, gm);
  if (sym == "Tgm") return operators::build_T_gellmann(basis, gm);
  if (sym == "C2K") return {operators::build_casimir_K(basis)};
  if (sym == "C2M") return {operators::build_casimir_M(basis)};
  throw ConfigError("unknown operator '" + sym + "' (expected M, K, U, T, Tgm, C2K, C2M)");
}

std::string reports_json(const RunConfig& cfg, const std::vector<ResidualReport>& reports, bool ok) {
  Json j;
  j["config"] = config_json(cfg);
  Json arr = Json::array();
  for (const auto& r : reports) arr.push_back(report_json(r));
  j["reports"] = std::move(arr);
  j["success"] = ok;
  return j.dump(2) + "\n";
}

bool all_as_expected(const std::vector<ResidualReport>& reports) {
  for (const auto& r : reports) {
    if (!r.as_expected()) return false;
  }
  return true;
}

}  // namespace

int run_basis(const RunConfig& cfg, std::ostream& out) {
  auto basis = repspace::enumerate_basis(cfg.space(), cfg.convention);
  if (cfg.format == OutputFormat::csv) {
    emit(cfg, out, basis_csv(*basis));
  } else {
    Json j;
    j["config"] = config_json(cfg);
    j["basis"] = basis_json(*basis);
    emit(cfg, out, j.dump(2) + "\n");
  }
  return kExitOk;
}

int run_generators(const RunConfig& cfg, std::ostream& out) {
  auto basis = repspace::enumerate_basis(cfg.space(), cfg.convention);
  const auto gm = operators::GellMannConfig::standard(basis->frame(), cfg.m_split, cfg.sigma);
  const auto symbols = cfg.operators.empty() ? default_operators(cfg.mode) : cfg.operators;
  std::vector<OperatorFamily> families;
  for (const auto& sym : symbols) families.push_back(family_for(sym, basis, gm));

  if (cfg.format == OutputFormat::csv) {
    if (cfg.output_path.empty()) {
      for (const auto& fam : families) {
        for (const auto& op : fam) out << "# " << op.tag().label() << "\n" << operator_csv(op);
      }
    } else {
      std::filesystem::create_directories(cfg.output_path);
      for (const auto& fam : families) {
        for (const auto& op : fam) {
          write_atomically((std::filesystem::path(cfg.output_path) / (operator_file_name(op.tag()) + ".csv")).string(),
                           operator_csv(op));
        }
      }
    }
    return kExitOk;
  }
  Json j;
  j["config"] = config_json(cfg);
  j["basis"] = basis_json(*basis);
  Json ops = Json::array();
  for (const auto& fam : families) {
    for (const auto& op : fam) ops.push_back(operator_json(op));
  }
  j["operators"] = std::move(ops);
  emit(cfg, out, j.dump(2) + "\n");
  return kExitOk;
}

std::vector<ResidualReport> validation_reports(const RunConfig& cfg) {
  using namespace validator;
  auto basis = repspace::enumerate_basis(cfg.space(), cfg.convention);
  const auto gm = operators::GellMannConfig::standard(basis->frame(), cfg.m_split, cfg.sigma);
  const bool coset = cfg.mode == repspace::SpaceMode::coset;
  const double tol = cfg.tolerance;
  const auto T = operators::build_T_gellmann(basis, gm);

  std::vector<ResidualReport> out;
  out.push_back(check_MM(basis, margin_or(cfg, 0), tol));
  out.push_back(check_MK(basis, margin_or(cfg, 0), tol));
  out.push_back(check_casimir(basis, tol));
  out.push_back(check_little_group_conditions(basis->frame(), cfg.m_split, gm.x, tol));
  out.push_back(check_UU(basis, gm, margin_or(cfg, 4), tol));
  out.push_back(check_MT(basis, gm, T, margin_or(cfg, 2), tol));
  ResidualReport tt = check_TT(basis, gm, T, margin_or(cfg, 4), tol);
  if (!coset) tt.expectation = Expectation::fail;
  out.push_back(tt);
  if (coset) {
    out.push_back(check_jacobi(basis, gm, T, margin_or(cfg, 4), std::max(tol, 1e-9)));
    out.push_back(fit_T_equivalence(basis, gm, margin_or(cfg, 4), tol).report);
  }
  for (auto& r : out) {
    if (!r.config) r.config = snapshot(*basis, &gm);
  }
  return out;
}

int run_validate(const RunConfig& cfg, std::ostream& out) {
  const auto reports = validation_reports(cfg);
  const bool ok = all_as_expected(reports);
  emit(cfg, out, cfg.format == OutputFormat::csv ? reports_csv(reports) : reports_json(cfg, reports, ok));
  return ok ? kExitOk : kExitCheckFailed;
}

int run_scan(const RunConfig& cfg, std::ostream& out) {
  const auto grid = validator::default_grid(cfg.n, cfg.j_max, cfg.sigma);
  const auto rows = validator::validity_scan(grid, cfg.tolerance, margin_or(cfg, 4), cfg.convention);
  std::vector<ResidualReport> reports;
  bool ok = true;
  for (const auto& row : rows) {
    reports.push_back(row.report);
    ok = ok && row.agrees;
  }
  emit(cfg, out, cfg.format == OutputFormat::csv ? reports_csv(reports) : reports_json(cfg, reports, ok));
  return ok ? kExitOk : kExitCheckFailed;
}

int dispatch(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    validate(cfg);
    switch (cfg.subcommand) {
      case Subcommand::basis: return run_basis(cfg, out);
      case Subcommand::generators: return run_generators(cfg, out);
      case Subcommand::validate: return run_validate(cfg, out);
      case Subcommand::scan: return run_scan(cfg, out);
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Gell-Mann formula toolkit for sl(n,R), n = 3, 4"};
  app.name("gmrk");
  app.require_subcommand(1);

  RunConfig cfg;
  std::string j_max = "2", mode = "full", sigma = "0", margin, format = "json", convention = "condon-shortley";
  std::string operators_list;
  std::optional<double> tolerance;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--n", cfg.n, "rank n (3 or 4)");
    sub->add_option("--j-max", j_max, "truncation level, e.g. 4 or 7/2");
    sub->add_option("--mode", mode, "full or coset");
    sub->add_option("--m-split", cfg.m_split, "m of Spin(m) x Spin(n-m)");
    sub->add_option("--sigma", sigma, "sigma, real or complex (1+2i)");
    sub->add_option("--tolerance", tolerance, "pass tolerance (default 1e-10, or $GMRK_TOLERANCE)");
    sub->add_option("--margin", margin, "interior margin in J");
    sub->add_option("--output", cfg.output_path, "output file (CSV generators: directory)");
    sub->add_option("--format", format, "json or csv");
    sub->add_option("--convention", convention, "condon-shortley or reversed");
  };
  auto* basis = app.add_subcommand("basis", "list the ordered basis");
  auto* generators = app.add_subcommand("generators", "emit operator matrices");
  auto* validate_cmd = app.add_subcommand("validate", "run the closure and consistency checks");
  auto* scan = app.add_subcommand("scan", "classify full and coset configurations");
  for (auto* sub : {basis, generators, validate_cmd, scan}) add_common(sub);
  generators->add_option("--operators", operators_list, "comma list of M,K,U,T,Tgm,C2K,C2M");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (basis->parsed()) cfg.subcommand = Subcommand::basis;
    if (generators->parsed()) cfg.subcommand = Subcommand::generators;
    if (validate_cmd->parsed()) cfg.subcommand = Subcommand::validate;
    if (scan->parsed()) cfg.subcommand = Subcommand::scan;
    cfg.j_max = HalfInt::parse(j_max);
    cfg.mode = repspace::parse_space_mode(mode);
    cfg.sigma = parse_complex(sigma);
    if (!margin.empty()) cfg.margin = HalfInt::parse(margin);
    cfg.format = parse_format(format);
    cfg.convention = parse_convention(convention);
    if (tolerance) {
      cfg.tolerance = *tolerance;
    } else if (const char* env = std::getenv(kToleranceEnv)) {
      try {
        cfg.tolerance = std::stod(env);
      } catch (const std::exception&) {
        throw ConfigError(std::string("malformed ") + kToleranceEnv + " '" + env + "'");
      }
    }
    std::stringstream ss(operators_list);
    for (std::string item; std::getline(ss, item, ',');) {
      if (!item.empty()) cfg.operators.push_back(item);
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return dispatch(cfg, out, err);
}

}  // namespace gmrk::cli
