#include "polyopt/problem.hpp"

#include <cctype>
#include <fstream>
#include <regex>
#include <sstream>

namespace polyopt {

namespace {

struct Line {
  int number;
  std::string text;
  int indent;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int indent_of(const std::string& s) {
  int k = 0;
  while (k < static_cast<int>(s.size()) && (s[k] == ' ' || s[k] == '\t')) ++k;
  return k;
}

// Splits "key: rest" and returns the column (1-based) where rest starts.
bool split_key(const Line& l, std::string& key, std::string& rest, int& rest_col) {
  auto colon = l.text.find(':');
  if (colon == std::string::npos) return false;
  key = std::string(trim(std::string_view(l.text).substr(0, colon)));
  std::size_t start = colon + 1;
  while (start < l.text.size() && std::isspace(static_cast<unsigned char>(l.text[start]))) ++start;
  rest = std::string(trim(std::string_view(l.text).substr(start)));
  rest_col = static_cast<int>(start);
  return true;
}

bool valid_identifier(const std::string& s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

}  // namespace

std::optional<Status> parse_status(std::string_view s) {
  if (s == "attained") return Status::Attained;
  if (s == "not_attained") return Status::Unattained;
  if (s == "empty") return Status::RealEmpty;
  if (s == "unbounded") return Status::UnboundedBelow;
  return std::nullopt;
}

AlgebraicNumber parse_expected_value(std::string_view s, int line, int column_offset) {
  static const std::regex root_re(R"(^root of (.+) in \[\s*([^,\]]+?)\s*,\s*([^\]]+?)\s*\]$)");
  std::string text(trim(s));
  std::smatch m;
  if (std::regex_match(text, m, root_re)) {
    static const RingPtr t_ring = make_ring(std::vector<std::string>{"T"});
    const int poly_col = column_offset + static_cast<int>(m.position(1));
    UPoly p = parse_polynomial(m.str(1), t_ring, line, poly_col).to_upoly(0);
    Rational lo, hi;
    try {
      lo = parse_rational(m.str(2));
      hi = parse_rational(m.str(3));
    } catch (const std::invalid_argument&) {
      throw ParseError("malformed interval endpoint", line, column_offset + static_cast<int>(m.position(2)) + 1);
    }
    try {
      return AlgebraicNumber(p, Interval(lo, hi));
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), line, column_offset + 1);
    }
  }
  try {
    return AlgebraicNumber::from_rational(parse_rational(text));
  } catch (const std::invalid_argument&) {
    throw ParseError("expected a rational or 'root of <poly> in [lo, hi]'", line, column_offset + 1);
  }
}

std::string print_value(const AlgebraicNumber& v) {
  Rational r;
  if (v.exact_rational(r)) return to_string(r);
  return "root of " + v.annihilator().to_string("T") + " in [" + to_string(v.interval().lo) + ", " +
         to_string(v.interval().hi) + "]";
}

ProblemFile parse_problem(std::string_view text) {
  std::vector<Line> lines;
  {
    std::istringstream in{std::string(text)};
    std::string s;
    int no = 0;
    while (std::getline(in, s)) {
      ++no;
      if (!s.empty() && s.back() == '\r') s.pop_back();
      auto t = trim(s);
      if (t.empty() || t.front() == '#') continue;
      lines.push_back({no, s, indent_of(s)});
    }
  }
  ProblemFile p;
  std::size_t i = 0;
  std::string key, rest;
  int col = 0;
  auto expect_key = [&](const char* want) {
    if (i >= lines.size()) throw ParseError(std::string("missing '") + want + ":' line", lines.empty() ? 1 : lines.back().number + 1, 1);
    const Line& l = lines[i];
    if (l.indent != 0 || !split_key(l, key, rest, col) || key != want)
      throw ParseError(std::string("expected '") + want + ":'", l.number, l.indent + 1);
  };

  expect_key("vars");
  {
    std::vector<std::string> names;
    std::size_t k = 0;
    while (true) {
      while (k < rest.size() && std::isspace(static_cast<unsigned char>(rest[k]))) ++k;
      if (k == rest.size()) break;
      const std::size_t start = k;
      while (k < rest.size() && !std::isspace(static_cast<unsigned char>(rest[k]))) ++k;
      const std::string name = rest.substr(start, k - start);
      const int at = col + static_cast<int>(start) + 1;
      if (!valid_identifier(name)) throw ParseError("invalid variable name '" + name + "'", lines[i].number, at);
      if (std::find(names.begin(), names.end(), name) != names.end())
        throw ParseError("duplicate variable '" + name + "'", lines[i].number, at);
      names.push_back(name);
    }
    if (names.empty()) throw ParseError("no variables declared", lines[i].number, col + 1);
    p.ring = make_ring(names);
  }
  ++i;

  expect_key("objective");
  p.objective = parse_polynomial(rest, p.ring, lines[i].number, col);
  ++i;

  if (i < lines.size() && lines[i].indent == 0 && split_key(lines[i], key, rest, col) && key == "constraints") {
    if (!rest.empty()) throw ParseError("constraints go on indented lines below 'constraints:'", lines[i].number, col + 1);
    ++i;
    while (i < lines.size() && lines[i].indent > 0) {
      const Line& l = lines[i];
      MPoly c = parse_polynomial(std::string_view(l.text).substr(static_cast<std::size_t>(l.indent)), p.ring, l.number,
                                 l.indent);
      if (c.is_zero()) throw ParseError("constraint is the zero polynomial", l.number, l.indent + 1);
      p.constraints.push_back(std::move(c));
      ++i;
    }
  }

  if (i < lines.size() && lines[i].indent == 0 && split_key(lines[i], key, rest, col) && key == "expect") {
    ++i;
    ExpectedResult e;
    bool have_status = false;
    while (i < lines.size() && lines[i].indent > 0) {
      const Line& l = lines[i];
      if (!split_key(l, key, rest, col)) throw ParseError("expected 'status:' or 'value:'", l.number, l.indent + 1);
      if (key == "status") {
        auto s = parse_status(rest);
        if (!s) throw ParseError("unknown status '" + rest + "'", l.number, col + 1);
        e.status = *s;
        have_status = true;
      } else if (key == "value") {
        e.value = parse_expected_value(rest, l.number, col);
      } else {
        throw ParseError("unknown expect field '" + key + "'", l.number, l.indent + 1);
      }
      ++i;
    }
    if (!have_status) throw ParseError("expect block without status", lines[i - 1].number, 1);
    p.expect = std::move(e);
  }

  if (i < lines.size()) throw ParseError("unexpected line", lines[i].number, lines[i].indent + 1);
  return p;
}

ProblemFile load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_problem(ss.str());
}

std::string print_problem(const ProblemFile& p) {
  std::string out = "vars:";
  for (const auto& n : p.ring->names()) out += " " + n;
  out += "\nobjective: " + p.objective.to_string() + "\nconstraints:\n";
  for (const auto& c : p.constraints) out += "  " + c.to_string() + "\n";
  if (p.expect) {
    out += "expect:\n  status: " + to_string(p.expect->status) + "\n";
    if (p.expect->value) out += "  value: " + print_value(*p.expect->value) + "\n";
  }
  return out;
}

}  // namespace polyopt
