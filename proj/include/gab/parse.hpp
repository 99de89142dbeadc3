#pragma once

// Text literals used by the CLI and config files: weight specs, coefficient
// vectors, and flat key=value config.

#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "gab/lorentz.hpp"
#include "gab/weights.hpp"

namespace gab {

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, sep)) out.push_back(part);
  return out;
}

/// Weight literal: pow:alpha | log:gamma:c | powlog:alpha:gamma:c | const |
/// comma-separated explicit values.  M is the truncation length (ignored for
/// explicit lists).
inline WeightSeq parse_weight(const std::string& literal, int M) {
  if (literal.find(',') != std::string::npos) {
    std::vector<double> v;
    for (auto& tok : split(literal, ',')) v.push_back(std::stod(tok));
    return WeightSeq(std::move(v), literal);
  }
  auto tok = split(literal, ':');
  if (tok[0] == "pow" && tok.size() == 2) return pow_weight(std::stod(tok[1]), M);
  if (tok[0] == "log" && tok.size() == 3)
    return log_weight(std::stod(tok[1]), std::stod(tok[2]), M);
  if (tok[0] == "powlog" && tok.size() == 4)
    return powlog_weight(std::stod(tok[1]), std::stod(tok[2]), std::stod(tok[3]), M);
  if (tok[0] == "const" && tok.size() == 1) return const_weight(M);
  throw std::invalid_argument("parse_weight: bad literal '" + literal + "'");
}

/// One coefficient per line: `index:value` or `index:re:im`.  Blank lines and
/// lines starting with # are skipped.
inline CoefVec parse_coef_text(std::istream& in) {
  CoefVec x;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    auto tok = split(line, ':');
    if (tok.size() == 2)
      x.set(std::stoi(tok[0]), std::stod(tok[1]));
    else if (tok.size() == 3)
      x.set(std::stoi(tok[0]), Scalar{std::stod(tok[1]), std::stod(tok[2])});
    else
      throw std::invalid_argument("coefficient line must be index:value or index:re:im");
  }
  return x;
}

inline CoefVec load_coef_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read coefficient file " + path);
  return parse_coef_text(in);
}

/// Flat key=value config; later keys override earlier ones.
inline std::map<std::string, std::string> parse_config(std::istream& in) {
  std::map<std::string, std::string> cfg;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config line must be key=value: " + line);
    cfg[line.substr(0, eq)] = line.substr(eq + 1);
  }
  return cfg;
}

}  // namespace gab
