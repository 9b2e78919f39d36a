#include "sqfd/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace sqfd {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

[[noreturn]] void parse_fail(int line, const std::string& what) {
  fail(Errc::Parse, "line " + std::to_string(line) + ": " + what);
}

/// "x3*x1" -> {3, 1}; the order is kept so errors can echo the input.
std::vector<int> parse_monomial(const std::string& token, int line) {
  std::vector<int> vars;
  std::stringstream ss(token);
  std::string factor;
  while (std::getline(ss, factor, '*')) {
    factor = trim(factor);
    if (factor.size() < 2 || factor[0] != 'x')
      parse_fail(line, "expected a variable like x3, got '" + factor + "'");
    std::size_t pos = 0;
    int idx = 0;
    try {
      idx = std::stoi(factor.substr(1), &pos);
    } catch (const std::exception&) {
      parse_fail(line, "expected a variable like x3, got '" + factor + "'");
    }
    if (pos + 1 != factor.size())
      parse_fail(line, "trailing characters after variable '" + factor + "'");
    if (idx < 1) parse_fail(line, "variable indices are 1-based, got '" + factor + "'");
    vars.push_back(idx);
  }
  if (vars.empty()) parse_fail(line, "empty monomial");
  return vars;
}

std::vector<std::vector<int>> parse_generator_list(const std::string& body, int line) {
  std::vector<std::vector<int>> gens;
  std::stringstream ss(body);
  std::string token;
  while (std::getline(ss, token, ',')) {
    token = trim(token);
    if (token.empty()) parse_fail(line, "empty generator in list");
    gens.push_back(parse_monomial(token, line));
  }
  return gens;
}

std::string format_monomial(const std::vector<int>& vars) {
  std::string out;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (i) out += "*";
    out += "x" + std::to_string(vars[i]);
  }
  return out;
}

Monomial build_monomial(const std::vector<int>& vars, int n, const char* ideal) {
  Monomial m({}, n);
  for (int idx : vars) {
    if (idx < 1 || idx > n)
      fail(Errc::Parse, std::string(ideal) + "-generator " + format_monomial(vars) +
                            " uses x" + std::to_string(idx) + " outside 1.." + std::to_string(n));
    if (m.contains(idx))
      fail(Errc::Parse, std::string(ideal) + "-generator " + format_monomial(vars) +
                            " repeats x" + std::to_string(idx));
    m = m.with(idx);
  }
  return m;
}

}  // namespace

InstanceFile parse_instance_text(const std::string& content) {
  InstanceFile file;
  bool saw_n = false;
  bool saw_i = false;
  std::stringstream ss(content);
  std::string raw;
  int lineno = 0;
  while (std::getline(ss, raw)) {
    ++lineno;
    std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    if (line.rfind("name:", 0) == 0) {
      file.name = trim(line.substr(5));
    } else if (line.rfind("n=", 0) == 0) {
      try {
        file.n = std::stoi(line.substr(2));
      } catch (const std::exception&) {
        parse_fail(lineno, "expected an integer after n=");
      }
      saw_n = true;
    } else if (line.rfind("I:", 0) == 0) {
      if (saw_i) parse_fail(lineno, "duplicate I: line");
      file.I = parse_generator_list(line.substr(2), lineno);
      saw_i = true;
    } else if (line.rfind("J:", 0) == 0) {
      std::string body = trim(line.substr(2));
      if (!body.empty()) file.J = parse_generator_list(body, lineno);
    } else {
      parse_fail(lineno, "unrecognized line '" + line + "'");
    }
  }
  if (!saw_n) fail(Errc::Parse, "missing n= line");
  if (!saw_i) fail(Errc::Parse, "missing I: line");
  return file;
}

InstanceFile parse_instance_json(const std::string& content) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(content);
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::Parse, std::string("invalid JSON: ") + e.what());
  }
  InstanceFile file;
  try {
    if (j.contains("name")) file.name = j["name"].get<std::string>();
    file.n = j.at("n").get<int>();
    file.I = j.at("I").get<std::vector<std::vector<int>>>();
    if (j.contains("J")) file.J = j["J"].get<std::vector<std::vector<int>>>();
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::Parse, std::string("bad instance fields: ") + e.what());
  }
  for (const auto& g : file.I)
    for (int idx : g)
      if (idx < 1) fail(Errc::Parse, "variable indices are 1-based, got " + std::to_string(idx));
  for (const auto& g : file.J)
    for (int idx : g)
      if (idx < 1) fail(Errc::Parse, "variable indices are 1-based, got " + std::to_string(idx));
  return file;
}

InstanceFile load_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::Parse, "cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  std::string content = buf.str();
  for (char c : content) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '{' ? parse_instance_json(content) : parse_instance_text(content);
  }
  fail(Errc::Parse, path + " is empty");
}

std::string format_instance_text(const InstanceFile& file) {
  std::string out;
  if (!file.name.empty()) out += "name: " + file.name + "\n";
  out += "n=" + std::to_string(file.n) + "\n";
  out += "I:";
  for (std::size_t i = 0; i < file.I.size(); ++i)
    out += (i ? ", " : " ") + format_monomial(file.I[i]);
  out += "\n";
  if (!file.J.empty()) {
    out += "J:";
    for (std::size_t i = 0; i < file.J.size(); ++i)
      out += (i ? ", " : " ") + format_monomial(file.J[i]);
    out += "\n";
  }
  return out;
}

std::string format_instance_json(const InstanceFile& file) {
  nlohmann::json j;
  if (!file.name.empty()) j["name"] = file.name;
  j["n"] = file.n;
  j["I"] = file.I;
  j["J"] = file.J;
  return j.dump();
}

IdealPair to_pair(const InstanceFile& file) {
  if (file.n < 1) fail(Errc::Parse, "n must be positive, got " + std::to_string(file.n));
  std::vector<Monomial> igens;
  for (const auto& g : file.I) igens.push_back(build_monomial(g, file.n, "I"));
  std::vector<Monomial> jgens;
  for (const auto& g : file.J) jgens.push_back(build_monomial(g, file.n, "J"));
  if (igens.empty()) fail(Errc::Parse, "I has no generators");
  MonomialIdeal I = minimalize(igens, file.n);
  MonomialIdeal J =
      jgens.empty() ? MonomialIdeal::zero(file.n) : minimalize(jgens, file.n);
  return validate_pair(I, J);
}

InstanceFile from_pair(const IdealPair& pair, const std::string& name) {
  InstanceFile file;
  file.name = name;
  file.n = pair.n();
  for (const Monomial& g : pair.I.gens()) file.I.push_back(g.indices());
  for (const Monomial& g : pair.J.gens()) file.J.push_back(g.indices());
  return file;
}

}  // namespace sqfd
