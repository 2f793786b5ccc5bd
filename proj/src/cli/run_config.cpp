#include "gmrk/cli/run_config.hpp"

#include <cstdio>

#include "gmrk/errors.hpp"

namespace gmrk::cli {

namespace {

double parse_real(const std::string& text, const std::string& whole) {
  if (text.empty()) throw ConfigError("malformed complex literal '" + whole + "'");
  size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw ConfigError("malformed complex literal '" + whole + "'");
  }
  if (used != text.size()) throw ConfigError("malformed complex literal '" + whole + "'");
  return v;
}

std::string strip(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c != ' ' && c != '\t') out += c;
  }
  return out;
}

}  // namespace

std::string to_string(Subcommand s) {
  switch (s) {
    case Subcommand::basis: return "basis";
    case Subcommand::generators: return "generators";
    case Subcommand::validate: return "validate";
    case Subcommand::scan: return "scan";
  }
  return "";
}

std::string to_string(OutputFormat f) { return f == OutputFormat::json ? "json" : "csv"; }

OutputFormat parse_format(const std::string& text) {
  if (text == "json") return OutputFormat::json;
  if (text == "csv") return OutputFormat::csv;
  throw ConfigError("unknown format '" + text + "' (expected json or csv)");
}

coupling::PhaseConvention parse_convention(const std::string& text) {
  if (text == "condon-shortley") return coupling::PhaseConvention::condon_shortley;
  if (text == "reversed") return coupling::PhaseConvention::reversed;
  throw ConfigError("unknown phase convention '" + text + "' (expected condon-shortley or reversed)");
}

std::string to_string(coupling::PhaseConvention c) {
  return c == coupling::PhaseConvention::condon_shortley ? "condon-shortley" : "reversed";
}

validator::Complex parse_complex(const std::string& raw) {
  const std::string s = strip(raw);
  if (s.empty()) throw ConfigError("empty complex literal");
  if (s.front() == '(') {
    const auto comma = s.find(',');
    if (s.back() != ')' || comma == std::string::npos) throw ConfigError("malformed complex literal '" + raw + "'");
    return {parse_real(s.substr(1, comma - 1), raw), parse_real(s.substr(comma + 1, s.size() - comma - 2), raw)};
  }
  if (s.back() != 'i' && s.back() != 'j') return {parse_real(s, raw), 0.0};
  const std::string body = s.substr(0, s.size() - 1);
  // Split at the last sign that is not leading and not an exponent sign.
  size_t split = std::string::npos;
  for (size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  const std::string re = split == std::string::npos ? "" : body.substr(0, split);
  std::string im = split == std::string::npos ? body : body.substr(split);
  if (im.empty() || im == "+") im = "1";
  if (im == "-") im = "-1";
  return {re.empty() ? 0.0 : parse_real(re, raw), parse_real(im, raw)};
}

void validate(const RunConfig& cfg) {
  if (cfg.n != 3 && cfg.n != 4) throw ConfigError("unsupported n = " + std::to_string(cfg.n) + " (supported: 3, 4)");
  if (cfg.j_max.twice() < 0) throw ConfigError("j-max must be non-negative");
  if (cfg.m_split < 1 || cfg.m_split > cfg.n - 1) {
    throw ConfigError("m-split must satisfy 1 <= m-split <= n-1 (got " + std::to_string(cfg.m_split) + ")");
  }
  if (cfg.margin && cfg.margin->twice() < 0) throw ConfigError("margin must be non-negative");
  if (!(cfg.tolerance > 0.0)) throw ConfigError("tolerance must be positive");
}

}  // namespace gmrk::cli
