// Helpers shared by the CLI tests and the acceptance runner.
#ifndef VANGLE_TESTS_SUPPORT_HPP
#define VANGLE_TESTS_SUPPORT_HPP

#include <sys/wait.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

namespace support {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

/// Runs a shell command, capturing stdout.
inline RunResult run(const std::string& cmd) {
  RunResult r;
  FILE* p = ::popen(cmd.c_str(), "r");
  if (p == nullptr) return r;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = std::fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  const int status = ::pclose(p);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

inline std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

/// Checks that every tag is closed in order. Enough for the generated files,
/// which contain no comments, CDATA or entities beyond the prolog.
inline bool well_formed_xml(const std::string& doc) {
  std::vector<std::string> stack;
  std::size_t i = 0;
  bool root_seen = false;
  while ((i = doc.find('<', i)) != std::string::npos) {
    const std::size_t j = doc.find('>', i);
    if (j == std::string::npos) return false;
    const std::string tag = doc.substr(i + 1, j - i - 1);
    i = j + 1;
    if (tag.empty()) return false;
    if (tag.front() == '?') continue;
    if (tag.front() == '/') {
      if (stack.empty() || stack.back() != tag.substr(1)) return false;
      stack.pop_back();
      continue;
    }
    const std::string name = tag.substr(0, tag.find_first_of(" \t\n/"));
    if (stack.empty() && root_seen) return false;
    root_seen = true;
    if (tag.back() != '/') stack.push_back(name);
    // Quotes must balance within a tag.
    std::size_t quotes = 0;
    for (char c : tag) quotes += c == '"';
    if (quotes % 2 != 0) return false;
  }
  return stack.empty() && root_seen;
}

/// Attributes of the element with the given id.
inline std::optional<std::map<std::string, std::string>> element_by_id(const std::string& doc, const std::string& id) {
  const std::regex elem("<([a-z]+)([^>]*)\\bid=\"" + id + "\"([^>]*)>");
  std::smatch m;
  if (!std::regex_search(doc, m, elem)) return std::nullopt;
  std::map<std::string, std::string> attrs{{"tag", m[1].str()}};
  const std::string body = m[2].str() + " " + m[3].str();
  const std::regex attr("([a-zA-Z0-9-]+)=\"([^\"]*)\"");
  for (auto it = std::sregex_iterator(body.begin(), body.end(), attr); it != std::sregex_iterator(); ++it)
    attrs[(*it)[1].str()] = (*it)[2].str();
  return attrs;
}

/// Tangency defect of the emitted extremal circle against the emitted
/// boundary, recomputed from the SVG text alone. Returns NaN when the
/// elements are missing.
inline double svg_tangency_defect(const std::string& doc) {
  const auto c = element_by_id(doc, "extremal-circle");
  const auto b = element_by_id(doc, "boundary");
  if (!c || !b) return std::nan("");
  const double cx = std::stod(c->at("cx")), cy = std::stod(c->at("cy")), r = std::stod(c->at("r"));
  if (b->at("tag") == "circle") {
    const double bx = std::stod(b->at("cx")), by = std::stod(b->at("cy")), br = std::stod(b->at("r"));
    return std::abs(std::hypot(cx - bx, cy - by) + r - br) / br;
  }
  const double y0 = std::stod(b->at("y1"));
  return std::abs(r - std::abs(cy - y0)) / std::max(1.0, r);
}

}  // namespace support

#endif  // VANGLE_TESTS_SUPPORT_HPP
