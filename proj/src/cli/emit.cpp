#include "gmrk/cli/emit.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace gmrk::cli {

using operators::OperatorMatrix;
using operators::SparseMatrix;
using operators::TensorKind;

namespace {

std::string kind_name(TensorKind k) {
  switch (k) {
    case TensorKind::scalar: return "scalar";
    case TensorKind::adjoint: return "adjoint";
    case TensorKind::symmetric: return "symmetric";
    case TensorKind::adjoint_cartesian: return "adjoint_cartesian";
    case TensorKind::symmetric_cartesian: return "symmetric_cartesian";
  }
  return "";
}

}  // namespace

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

Json config_json(const RunConfig& cfg) {
  Json j;
  j["subcommand"] = to_string(cfg.subcommand);
  j["n"] = cfg.n;
  j["j_max"] = cfg.j_max.to_string();
  j["mode"] = repspace::to_string(cfg.mode);
  j["m_split"] = cfg.m_split;
  j["sigma"] = {{"re", cfg.sigma.real()}, {"im", cfg.sigma.imag()}};
  j["tolerance"] = cfg.tolerance;
  j["margin"] = cfg.margin ? Json(cfg.margin->to_string()) : Json(nullptr);
  j["format"] = to_string(cfg.format);
  j["convention"] = to_string(cfg.convention);
  return j;
}

Json state_json(const repspace::BasisState& s) {
  return {{"J", s.J.to_string()}, {"k", s.k.to_string()}, {"m", s.m.to_string()}};
}

Json basis_json(const repspace::BasisIndex& basis) {
  Json arr = Json::array();
  for (const auto& s : basis.states()) arr.push_back(state_json(s));
  return arr;
}

Json operator_json(const OperatorMatrix& op) {
  Json j;
  j["label"] = op.tag().label();
  j["kind"] = kind_name(op.tag().kind);
  j["component"] = op.tag().component;
  j["su_n"] = op.tag().su_n;
  Json entries = Json::array();
  const SparseMatrix& m = op.matrix();
  for (int r = 0; r < m.outerSize(); ++r) {
    for (SparseMatrix::InnerIterator it(m, r); it; ++it) {
      entries.push_back({{"row", state_json(op.basis().state(r))},
                         {"col", state_json(op.basis().state(static_cast<int>(it.col())))},
                         {"re", it.value().real()},
                         {"im", it.value().imag()}});
    }
  }
  j["entries"] = std::move(entries);
  return j;
}

Json report_json(const validator::ResidualReport& r) {
  Json j;
  j["check"] = r.check_name;
  j["residual"] = r.max_abs_residual;
  j["tolerance"] = r.tolerance;
  j["margin"] = r.interior_margin.to_string();
  j["basis_size"] = r.basis_size;
  j["interior_size"] = r.interior_size;
  j["pass"] = r.pass;
  j["expected"] = r.expectation == validator::Expectation::pass ? "pass" : "fail";
  j["as_expected"] = r.as_expected();
  if (r.config) {
    const auto& c = *r.config;
    j["config"] = {{"n", c.n},
                   {"mode", c.mode},
                   {"j_max", c.j_max.to_string()},
                   {"m_split", c.m_split},
                   {"sigma", {{"re", c.sigma.real()}, {"im", c.sigma.imag()}}},
                   {"alpha", c.alpha},
                   {"u_norm", c.u_norm},
                   {"x", c.x_choice}};
  }
  Json details = Json::object();
  for (const auto& [k, v] : r.details) details[k] = v;
  j["details"] = std::move(details);
  return j;
}

std::string basis_csv(const repspace::BasisIndex& basis) {
  std::ostringstream os;
  os << "index,J,k,m\n";
  for (int i = 0; i < basis.size(); ++i) {
    const auto& s = basis.state(i);
    os << i << ',' << s.J.to_string() << ',' << s.k.to_string() << ',' << s.m.to_string() << '\n';
  }
  return os.str();
}

std::string operator_csv(const OperatorMatrix& op) {
  std::ostringstream os;
  os << "row_J,row_k,row_m,col_J,col_k,col_m,re,im\n";
  const SparseMatrix& m = op.matrix();
  for (int r = 0; r < m.outerSize(); ++r) {
    const auto& rs = op.basis().state(r);
    for (SparseMatrix::InnerIterator it(m, r); it; ++it) {
      const auto& cs = op.basis().state(static_cast<int>(it.col()));
      os << rs.J.to_string() << ',' << rs.k.to_string() << ',' << rs.m.to_string() << ',' << cs.J.to_string() << ','
         << cs.k.to_string() << ',' << cs.m.to_string() << ',' << format_double(it.value().real()) << ','
         << format_double(it.value().imag()) << '\n';
    }
  }
  return os.str();
}

std::string reports_csv(const std::vector<validator::ResidualReport>& reports) {
  std::ostringstream os;
  os << "check,n,mode,j_max,m_split,x,sigma_re,sigma_im,residual,tolerance,margin,basis_size,interior_size,pass,"
        "expected,as_expected\n";
  for (const auto& r : reports) {
    const validator::ConfigSnapshot c = r.config.value_or(validator::ConfigSnapshot{});
    os << r.check_name << ',' << c.n << ',' << c.mode << ',' << c.j_max.to_string() << ',' << c.m_split << ','
       << c.x_choice << ',' << format_double(c.sigma.real()) << ',' << format_double(c.sigma.imag()) << ','
       << format_double(r.max_abs_residual) << ',' << format_double(r.tolerance) << ','
       << r.interior_margin.to_string() << ',' << r.basis_size << ',' << r.interior_size << ','
       << (r.pass ? "true" : "false") << ',' << (r.expectation == validator::Expectation::pass ? "pass" : "fail")
       << ',' << (r.as_expected() ? "true" : "false") << '\n';
  }
  return os.str();
}

std::string operator_file_name(const operators::TensorTag& tag) {
  std::string out;
  for (char c : tag.label()) {
    if (c == '+') out += 'p';
    else if (c == '-') out += 'm';
    else if (c == ';' || c == '/') out += '_';
    else out += c;
  }
  return (tag.su_n ? "su_" : "") + out;
}

void write_atomically(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  if (target.has_parent_path()) fs::create_directories(target.parent_path());
  const fs::path tmp = target.string() + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot write " + tmp.string());
    f << content;
    if (!f) throw std::runtime_error("cannot write " + tmp.string());
  }
  fs::rename(tmp, target);
}

}  // namespace gmrk::cli
