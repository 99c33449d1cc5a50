#include "df/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "df/errors.hpp"

namespace df {

namespace {

std::ifstream open(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path);
  return in;
}

bool blank_or_comment(const std::string& line) {
  const auto pos = line.find_first_not_of(" \t\r");
  return pos == std::string::npos || line[pos] == '#';
}

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  std::string t;
  while (ss >> t) out.push_back(t);
  return out;
}

[[noreturn]] void fail(const std::string& source, std::size_t line, const std::string& what) {
  throw ParseError(source + ":" + std::to_string(line) + ": " + what);
}

// Integers from the non-comment lines, each tagged with its line.
std::vector<std::pair<std::string, std::size_t>> numeric_tokens(std::istream& in) {
  std::vector<std::pair<std::string, std::size_t>> out;
  std::string line;
  std::size_t no = 0;
  while (std::getline(in, line)) {
    ++no;
    if (blank_or_comment(line)) continue;
    for (auto& t : tokens(line)) out.emplace_back(std::move(t), no);
  }
  return out;
}

long long to_integer(const std::pair<std::string, std::size_t>& tok, const std::string& source) {
  try {
    std::size_t used = 0;
    long long v = std::stoll(tok.first, &used);
    if (used != tok.first.size()) throw std::invalid_argument(tok.first);
    return v;
  } catch (const std::exception&) {
    fail(source, tok.second, "expected an integer, got '" + tok.first + "'");
  }
}

}  // namespace

SimplicialComplex parse_complex(std::istream& in, const std::string& source) {
  std::vector<std::vector<std::string>> facets;
  std::set<std::vector<std::string>> seen;
  std::string line;
  std::size_t no = 0;
  while (std::getline(in, line)) {
    ++no;
    if (blank_or_comment(line)) continue;
    auto facet = tokens(line);
    std::set<std::string> uniq(facet.begin(), facet.end());
    if (uniq.size() != facet.size()) fail(source, no, "repeated vertex in facet");
    if (!seen.insert(std::vector<std::string>(uniq.begin(), uniq.end())).second) continue;
    facets.push_back(std::move(facet));
  }
  if (facets.empty()) throw ParseError(source + ": no facets");
  return SimplicialComplex::from_label_facets(facets);
}

SimplicialComplex read_complex(const std::string& path) {
  auto in = open(path);
  return parse_complex(in, path);
}

std::string emit_complex(const SimplicialComplex& k) {
  std::string out;
  for (const auto& f : k.facets()) {
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (i) out += ' ';
      out += k.labels()[f[i]];
    }
    out += '\n';
  }
  return out;
}

FiniteGroup parse_group_table(std::istream& in, const std::string& source) {
  auto toks = numeric_tokens(in);
  if (toks.empty()) throw ParseError(source + ": empty group table");
  const long long n = to_integer(toks[0], source);
  if (n <= 0) fail(source, toks[0].second, "group order must be positive");
  if (toks.size() != 1 + static_cast<std::size_t>(n * n))
    throw ParseError(source + ": expected " + std::to_string(n * n) + " table entries, got " +
                     std::to_string(toks.size() - 1));
  std::vector<std::vector<std::uint32_t>> table(static_cast<std::size_t>(n));
  for (std::size_t i = 1; i < toks.size(); ++i) {
    const long long v = to_integer(toks[i], source);
    if (v < 0 || v >= n) fail(source, toks[i].second, "entry out of range");
    table[(i - 1) / static_cast<std::size_t>(n)].push_back(static_cast<std::uint32_t>(v));
  }
  return FiniteGroup(std::move(table));
}

FiniteGroup read_group_table(const std::string& path) {
  auto in = open(path);
  return parse_group_table(in, path);
}

IntegerMatrix parse_matrix(std::istream& in, const std::string& source) {
  auto toks = numeric_tokens(in);
  if (toks.size() < 2) throw ParseError(source + ": missing matrix dimensions");
  const long long r = to_integer(toks[0], source), c = to_integer(toks[1], source);
  if (r < 0 || c < 0) fail(source, toks[0].second, "negative dimension");
  if (toks.size() != 2 + static_cast<std::size_t>(r * c))
    throw ParseError(source + ": expected " + std::to_string(r * c) + " entries, got " +
                     std::to_string(toks.size() - 2));
  IntegerMatrix m(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
  for (std::size_t i = 2; i < toks.size(); ++i) {
    Int v;
    if (v.set_str(toks[i].first, 10) != 0) fail(source, toks[i].second, "expected an integer");
    m((i - 2) / static_cast<std::size_t>(c), (i - 2) % static_cast<std::size_t>(c)) = v;
  }
  return m;
}

IntegerMatrix read_matrix(const std::string& path) {
  auto in = open(path);
  return parse_matrix(in, path);
}

CoxeterSystem parse_coxeter_system(std::istream& in, const std::string& source) {
  std::string line;
  std::size_t no = 0;
  std::vector<std::string> gens;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  while (std::getline(in, line)) {
    ++no;
    if (blank_or_comment(line)) continue;
    auto t = tokens(line);
    if (gens.empty()) {
      gens = t;
      continue;
    }
    if (t.size() != 2) fail(source, no, "expected a commuting pair");
    auto index = [&](const std::string& label) {
      for (std::size_t i = 0; i < gens.size(); ++i)
        if (gens[i] == label) return static_cast<std::uint32_t>(i);
      fail(source, no, "unknown generator '" + label + "'");
    };
    pairs.emplace_back(index(t[0]), index(t[1]));
  }
  if (gens.empty()) throw ParseError(source + ": no generators");
  try {
    return CoxeterSystem(gens, pairs);
  } catch (const Error& e) {
    throw ParseError(source + ": " + e.what());
  }
}

}  // namespace df
