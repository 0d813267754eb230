#include <algorithm>
#include <cctype>
#include <sstream>

#include "chernob/cli.hpp"
#include "chernob/errors.hpp"

namespace chernob::cli {

namespace {

struct Statement {
  std::string text;
  std::size_t line;
};

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<Statement> split_statements(std::string_view text) {
  std::vector<Statement> out;
  std::string current;
  std::size_t line = 1, start_line = 0;
  bool in_comment = false;
  for (char c : text) {
    if (c == '\n') {
      ++line;
      in_comment = false;
      current += ' ';
      continue;
    }
    if (in_comment) continue;
    if (c == '#') {
      in_comment = true;
      continue;
    }
    if (c == ';') {
      std::string t = trim(current);
      if (!t.empty()) out.push_back({t, start_line});
      else throw ParseError("line " + std::to_string(line) + ": empty statement", line);
      current.clear();
      start_line = 0;
      continue;
    }
    if (start_line == 0 && !std::isspace(static_cast<unsigned char>(c))) start_line = line;
    current += c;
  }
  if (!trim(current).empty())
    throw ParseError("line " + std::to_string(start_line) + ": statement is missing its ';' terminator",
                     start_line);
  return out;
}

[[noreturn]] void fail(std::size_t line, const std::string& msg) {
  throw ParseError("line " + std::to_string(line) + ": " + msg, line);
}

// Splits on commas that are not nested inside parentheses.
std::vector<std::string> split_top_level(std::string_view s, std::size_t line) {
  std::vector<std::string> parts;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')' && --depth < 0) fail(line, "unbalanced ')'");
    if (c == ',' && depth == 0) {
      parts.push_back(trim(cur));
      cur.clear();
      continue;
    }
    cur += c;
  }
  if (depth != 0) fail(line, "unbalanced '('");
  parts.push_back(trim(cur));
  for (const auto& p : parts)
    if (p.empty()) fail(line, "empty list entry");
  return parts;
}

// "(a, b, c)" -> {"a", "b", "c"}
std::vector<std::string> parenthesized_list(const std::string& s, std::size_t line) {
  if (s.size() < 2 || s.front() != '(' || s.back() != ')') fail(line, "expected a parenthesized list, got '" + s + "'");
  return split_top_level(std::string_view(s).substr(1, s.size() - 2), line);
}

Polynomial parse_at(const std::string& text, const RingPtr& ring, std::size_t line) {
  try {
    return parse_poly(text, ring);
  } catch (const ParseError& e) {
    fail(line, e.what());
  }
}

bool starts_with_word(const std::string& s, std::string_view word) {
  if (s.compare(0, word.size(), word) != 0) return false;
  return s.size() == word.size() || !(std::isalnum(static_cast<unsigned char>(s[word.size()])) || s[word.size()] == '_');
}

}  // namespace

ProblemSpec parse_input_file(std::string_view text) {
  RingPtr ring;
  std::optional<int> dim;
  std::size_t dim_line = 0;
  std::vector<std::pair<std::string, std::size_t>> variety_lines, singular_lines;
  std::optional<std::pair<std::string, std::size_t>> normalization_line;
  std::vector<std::pair<std::string, std::size_t>> collection_lines;

  for (const auto& st : split_statements(text)) {
    const std::string& s = st.text;
    if (starts_with_word(s, "ring")) {
      if (ring) fail(st.line, "ring declared twice");
      std::vector<std::string> names;
      for (auto& n : split_top_level(std::string_view(s).substr(4), st.line)) names.push_back(n);
      try {
        ring = make_ring(names);
      } catch (const std::invalid_argument& e) {
        fail(st.line, e.what());
      }
    } else if (starts_with_word(s, "variety")) {
      auto colon = s.find(':');
      if (colon == std::string::npos) fail(st.line, "expected 'variety: <polynomial>'");
      variety_lines.emplace_back(trim(std::string_view(s).substr(colon + 1)), st.line);
    } else if (starts_with_word(s, "singular")) {
      auto colon = s.find(':');
      if (colon == std::string::npos) fail(st.line, "expected 'singular: <polynomial>'");
      singular_lines.emplace_back(trim(std::string_view(s).substr(colon + 1)), st.line);
    } else if (starts_with_word(s, "dim")) {
      if (dim) fail(st.line, "dim declared twice");
      std::string v = trim(std::string_view(s).substr(3));
      if (v.empty() || !std::all_of(v.begin(), v.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) ||
          v.size() > 6)
        fail(st.line, "dim needs a non-negative integer");
      dim = std::stoi(v);
      dim_line = st.line;
    } else if (starts_with_word(s, "normalization")) {
      if (normalization_line) fail(st.line, "normalization declared twice");
      normalization_line.emplace(trim(std::string_view(s).substr(13)), st.line);
    } else if (starts_with_word(s, "collection")) {
      collection_lines.emplace_back(trim(std::string_view(s).substr(10)), st.line);
    } else {
      fail(st.line, "unknown statement '" + s.substr(0, s.find_first_of(" :")) + "'");
    }
  }

  if (!ring) throw ParseError("line 1: missing 'ring' statement", 1);
  if (!dim) throw ParseError("line 1: missing 'dim' statement", 1);
  if (collection_lines.empty()) throw ParseError("line 1: missing 'collection' statement", 1);

  ProblemSpec spec;
  spec.variety.ring = ring;
  spec.variety.dim = *dim;
  const int n = static_cast<int>(ring->num_vars());
  if (*dim < 1 || *dim > n) fail(dim_line, "dim must lie between 1 and the number of variables");
  for (const auto& [t, line] : variety_lines) {
    Polynomial p = parse_at(t, ring, line);
    if (p.is_zero()) fail(line, "zero generator in variety");
    spec.variety.equations.push_back(std::move(p));
  }
  if (!singular_lines.empty()) {
    std::vector<Polynomial> gens;
    for (const auto& [t, line] : singular_lines) gens.push_back(parse_at(t, ring, line));
    spec.variety.singular_override = std::move(gens);
  }

  if (normalization_line) {
    const auto& [t, line] = *normalization_line;
    auto arrow = t.find("->");
    if (arrow == std::string::npos) fail(line, "expected 'normalization (s, t) -> (f1, ..., fn)'");
    std::vector<std::string> source_names = parenthesized_list(trim(std::string_view(t).substr(0, arrow)), line);
    std::vector<std::string> images = parenthesized_list(trim(std::string_view(t).substr(arrow + 2)), line);
    RingPtr source;
    try {
      source = make_ring(source_names);
    } catch (const std::invalid_argument& e) {
      fail(line, e.what());
    }
    if (static_cast<int>(images.size()) != n)
      fail(line, "normalization has " + std::to_string(images.size()) + " images, expected " + std::to_string(n));
    if (static_cast<int>(source->num_vars()) != *dim)
      fail(line, "normalization source has " + std::to_string(source->num_vars()) + " variables, expected d = " +
                     std::to_string(*dim));
    Normalization map{source, {}};
    for (const auto& img : images) map.images.push_back(parse_at(img, source, line));
    spec.variety.normalization = std::move(map);
  }

  int k_sum = 0;
  std::size_t last_line = 0;
  for (const auto& [t, line] : collection_lines) {
    last_line = line;
    auto colon = t.find(':');
    if (colon == std::string::npos) fail(line, "expected 'collection k=<int>: (..), ..'");
    std::string head = trim(std::string_view(t).substr(0, colon));
    head.erase(std::remove_if(head.begin(), head.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); }),
               head.end());
    if (head.rfind("k=", 0) != 0 || head.size() == 2 || head.size() > 8 ||
        !std::all_of(head.begin() + 2, head.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      fail(line, "expected 'k=<positive integer>'");
    SubCollection part;
    part.k = std::stoi(head.substr(2));
    if (part.k < 1) fail(line, "k must be positive");
    k_sum += part.k;
    for (const auto& group : split_top_level(std::string_view(t).substr(colon + 1), line)) {
      auto entries = parenthesized_list(group, line);
      if (static_cast<int>(entries.size()) != n)
        fail(line, "form has " + std::to_string(entries.size()) + " entries, expected n = " + std::to_string(n));
      Covector form;
      for (const auto& e : entries) form.push_back(parse_at(e, ring, line));
      part.forms.push_back(std::move(form));
    }
    const int expected = *dim - part.k + 1;
    if (static_cast<int>(part.forms.size()) != expected)
      fail(line, "sub-collection has " + std::to_string(part.forms.size()) + " forms, expected d-k+1 = " +
                     std::to_string(expected));
    spec.collection.parts.push_back(std::move(part));
  }
  if (k_sum != *dim)
    fail(last_line, "partition sums to " + std::to_string(k_sum) + " but dim is " + std::to_string(*dim));
  return spec;
}

std::string format_problem(const ProblemSpec& spec) {
  std::ostringstream os;
  const auto& v = spec.variety;
  os << "ring ";
  for (std::size_t i = 0; i < v.ring->num_vars(); ++i) os << (i ? ", " : "") << v.ring->variable(i);
  os << ";\n";
  for (const auto& f : v.equations) os << "variety: " << to_string(f) << ";\n";
  if (v.singular_override)
    for (const auto& g : *v.singular_override) os << "singular: " << to_string(g) << ";\n";
  os << "dim " << v.dim << ";\n";
  if (v.normalization) {
    os << "normalization (";
    for (std::size_t i = 0; i < v.normalization->source->num_vars(); ++i)
      os << (i ? ", " : "") << v.normalization->source->variable(i);
    os << ") -> (";
    for (std::size_t i = 0; i < v.normalization->images.size(); ++i)
      os << (i ? ", " : "") << to_string(v.normalization->images[i]);
    os << ");\n";
  }
  for (const auto& part : spec.collection.parts) {
    os << "collection k=" << part.k << ":";
    for (std::size_t f = 0; f < part.forms.size(); ++f) {
      os << (f ? ", (" : " (");
      for (std::size_t i = 0; i < part.forms[f].size(); ++i) os << (i ? ", " : "") << to_string(part.forms[f][i]);
      os << ")";
    }
    os << ";\n";
  }
  return os.str();
}

}  // namespace chernob::cli
