#include "prefalloc/reductions/sources.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "prefalloc/error.hpp"

namespace prefalloc::reductions {

namespace {

using nlohmann::json;

}  // namespace

void validate_x3c(const X3CInstance& x3c) {
  std::map<std::string, int> count;
  for (const auto& x : x3c.elements) {
    if (x.empty()) throw DomainError("X3C element names must be non-empty");
    if (!count.emplace(x, 0).second) throw DomainError("X3C element '" + x + "' is listed twice");
  }
  if (x3c.elements.size() % 3 != 0) throw DomainError("X3C ground set size must be a multiple of 3");
  for (std::size_t j = 0; j < x3c.sets.size(); ++j) {
    const auto& s = x3c.sets[j];
    if (s[0] == s[1] || s[0] == s[2] || s[1] == s[2]) {
      throw DomainError("X3C set " + std::to_string(j + 1) + " repeats an element");
    }
    for (const auto& x : s) {
      const auto it = count.find(x);
      if (it == count.end()) throw DomainError("X3C set " + std::to_string(j + 1) + " uses unknown element '" + x + "'");
      ++it->second;
    }
  }
  for (const auto& [x, c] : count) {
    if (c != 3) {
      throw DomainError("X3C element '" + x + "' occurs in " + std::to_string(c) + " sets instead of 3");
    }
  }
}

X3CInstance parse_x3c(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError("byte " + std::to_string(e.byte), e.what());
  }
  if (!doc.is_object() || !doc.contains("X") || !doc.contains("C")) throw ParseError("/", "expected members \"X\" and \"C\"");
  if (!doc["X"].is_array()) throw ParseError("/X", "expected an array");
  if (!doc["C"].is_array()) throw ParseError("/C", "expected an array");
  X3CInstance x3c;
  for (std::size_t i = 0; i < doc["X"].size(); ++i) {
    if (!doc["X"][i].is_string()) throw ParseError("/X/" + std::to_string(i), "expected a string");
    x3c.elements.push_back(doc["X"][i].get<std::string>());
  }
  for (std::size_t j = 0; j < doc["C"].size(); ++j) {
    const auto& s = doc["C"][j];
    const std::string where = "/C/" + std::to_string(j);
    if (!s.is_array() || s.size() != 3) throw ParseError(where, "expected an array of three elements");
    std::array<std::string, 3> set;
    for (std::size_t t = 0; t < 3; ++t) {
      if (!s[t].is_string()) throw ParseError(where + "/" + std::to_string(t), "expected a string");
      set[t] = s[t].get<std::string>();
    }
    x3c.sets.push_back(std::move(set));
  }
  validate_x3c(x3c);
  return x3c;
}

std::string serialize_x3c(const X3CInstance& x3c) {
  nlohmann::ordered_json doc;
  doc["X"] = x3c.elements;
  doc["C"] = nlohmann::ordered_json::array();
  for (const auto& s : x3c.sets) doc["C"].push_back({s[0], s[1], s[2]});
  return doc.dump(2) + "\n";
}

bool is_exact_cover(const X3CInstance& x3c, const ExactCover& cover) {
  std::multiset<std::string> covered;
  for (std::size_t j : cover) {
    if (j >= x3c.sets.size()) return false;
    covered.insert(x3c.sets[j].begin(), x3c.sets[j].end());
  }
  const std::multiset<std::string> ground(x3c.elements.begin(), x3c.elements.end());
  return covered == ground;
}

Cnf3Formula parse_dimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  bool header = false;
  std::size_t expected = 0;
  Cnf3Formula formula;
  std::vector<Literal> pending;
  const auto where = [&] { return "line " + std::to_string(line_no); };
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream tokens(line);
    std::string first;
    if (!(tokens >> first) || first == "c" || first.front() == 'c' || first == "%") continue;
    if (first == "p") {
      std::string format;
      long long n = -1;
      long long m = -1;
      if (header) throw ParseError(where(), "second problem line");
      if (!(tokens >> format >> n >> m) || format != "cnf" || n < 0 || m < 0) {
        throw ParseError(where(), "expected 'p cnf <variables> <clauses>'");
      }
      header = true;
      formula.variables = static_cast<std::uint32_t>(n);
      expected = static_cast<std::size_t>(m);
      continue;
    }
    if (!header) throw ParseError(where(), "clause before the problem line");
    tokens.clear();
    tokens.str(line);
    long long lit = 0;
    while (tokens >> lit) {
      if (lit == 0) {
        if (pending.size() != 3) throw ParseError(where(), "clause must have exactly 3 literals");
        formula.clauses.push_back({pending[0], pending[1], pending[2]});
        pending.clear();
        continue;
      }
      const long long var = lit < 0 ? -lit : lit;
      if (var > static_cast<long long>(formula.variables)) throw ParseError(where(), "literal out of range");
      pending.push_back({static_cast<std::uint32_t>(var), lit < 0});
    }
    if (!tokens.eof()) throw ParseError(where(), "expected integer literals");
  }
  if (!header) throw ParseError("line " + std::to_string(line_no), "missing problem line");
  if (!pending.empty()) throw ParseError("line " + std::to_string(line_no), "unterminated clause");
  if (formula.clauses.size() != expected) {
    throw ParseError("line " + std::to_string(line_no), "expected " + std::to_string(expected) + " clauses, found " +
                                                             std::to_string(formula.clauses.size()));
  }
  return formula;
}

std::string serialize_dimacs(const Cnf3Formula& formula) {
  std::ostringstream out;
  out << "p cnf " << formula.variables << ' ' << formula.clauses.size() << '\n';
  for (const auto& clause : formula.clauses) {
    for (const auto& lit : clause) out << (lit.negated ? "-" : "") << lit.variable << ' ';
    out << "0\n";
  }
  return out.str();
}

bool satisfies(const Cnf3Formula& formula, const TruthAssignment& assignment) {
  if (assignment.size() != formula.variables) return false;
  return std::all_of(formula.clauses.begin(), formula.clauses.end(), [&](const auto& clause) {
    return std::any_of(clause.begin(), clause.end(),
                       [&](const Literal& l) { return assignment[l.variable - 1] != l.negated; });
  });
}

std::optional<TruthAssignment> brute_force_sat(const Cnf3Formula& formula) {
  if (formula.variables > 20) throw DomainError("truth-table search is limited to 20 variables");
  const std::uint32_t n = formula.variables;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    TruthAssignment assignment(n);
    for (std::uint32_t i = 0; i < n; ++i) assignment[i] = (mask >> i & 1) != 0;
    if (satisfies(formula, assignment)) return assignment;
  }
  return std::nullopt;
}

}  // namespace prefalloc::reductions
