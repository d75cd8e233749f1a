#include "knots/fixtures.hpp"

#include "knots/errors.hpp"

#include <fstream>
#include <sstream>

namespace knots {

FixtureTable parse_fixtures(const std::string& text) {
  FixtureTable table;
  std::istringstream in(text);
  std::string line;
  std::string current;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> tokens;
    std::string tok;
    while (ls >> tok) tokens.push_back(tok);
    if (tokens.empty()) continue;
    if (tokens.size() == 1) {
      current = tokens[0];
      table[current];  // a block may legitimately be the zero... unknot blocks still add terms
      continue;
    }
    if (tokens.size() == 3 && !current.empty()) {
      table[current].add_term(std::stoi(tokens[0]), std::stoi(tokens[1]), BigInt(tokens[2]));
      continue;
    }
    throw IoError("malformed fixture line: " + line);
  }
  return table;
}

FixtureTable load_fixtures(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw IoError("cannot open fixture file: " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_fixtures(ss.str());
}

std::string format_fixtures(const FixtureTable& table) {
  std::ostringstream os;
  os << "# HOMFLY fixtures; skein v^-1 P(L+) - v P(L-) = z P(L0), unknot = 1\n";
  os << "# blocks: name, then lines \"e_v e_z coeff\"\n";
  for (const auto& [name, poly] : table) {
    os << "\n" << name << "\n";
    for (const auto& [e, c] : poly.terms())
      os << e.first << " " << e.second << " " << c.str() << "\n";
  }
  return os.str();
}

bool compare_fixture(const HomflyResult& result, const std::string& name,
                     const FixtureTable& table) {
  auto it = table.find(name);
  if (it == table.end()) throw UnknownFixture("no fixture named " + name);
  return result.polynomial == it->second || result.polynomial == it->second.mirror_v();
}

}  // namespace knots
