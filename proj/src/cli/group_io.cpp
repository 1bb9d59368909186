#include "pregal/cli/group_io.hpp"

#include <cctype>
#include <charconv>

#include "pregal/error.hpp"

namespace pregal::cli {

namespace {

class Cursor {
 public:
  Cursor(std::string_view text, std::size_t line, std::size_t column0)
      : text_(text), line_(line), column0_(column0) {}

  void skip_space() {
    while (pos_ < text_.size() && (std::isspace(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == ','))
      ++pos_;
  }
  bool done() {
    skip_space();
    return pos_ >= text_.size();
  }
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void expect(char c) {
    skip_space();
    if (peek() != c) error(std::string("expected '") + c + "'");
    ++pos_;
  }
  std::size_t number() {
    skip_space();
    std::size_t v = 0;
    auto [end, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), v);
    if (ec != std::errc() || end == text_.data() + pos_) error("expected a point number");
    pos_ = static_cast<std::size_t>(end - text_.data());
    return v;
  }
  [[noreturn]] void error(const std::string& msg) const { throw ParseError(line_, column0_ + pos_ + 1, msg); }

 private:
  std::string_view text_;
  std::size_t line_, column0_;
  std::size_t pos_ = 0;
};

Perm cycles_at(std::string_view text, std::size_t degree, std::size_t line, std::size_t column0) {
  Cursor c(text, line, column0);
  std::vector<std::vector<Point>> cycles;
  std::vector<char> used(degree, 0);
  if (c.done()) c.error("empty permutation (write () for the identity)");
  while (!c.done()) {
    c.expect('(');
    std::vector<Point> cyc;
    c.skip_space();
    while (c.peek() != ')') {
      if (c.peek() == '\0') c.error("unterminated cycle");
      std::size_t p = c.number();
      if (p == 0 || p > degree)
        fail(ErrorKind::DegreeMismatch, "line " + std::to_string(line) + ": point " + std::to_string(p) +
                                            " outside 1.." + std::to_string(degree));
      if (used[p - 1]) c.error("point " + std::to_string(p) + " repeated");
      used[p - 1] = 1;
      cyc.push_back(static_cast<Point>(p - 1));
      c.skip_space();
    }
    c.expect(')');
    if (cyc.size() > 1) cycles.push_back(std::move(cyc));
  }
  return Perm::from_cycles(degree, cycles);
}

std::string_view trim(std::string_view s, std::size_t* lead = nullptr) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  if (lead) *lead = a;
  return s.substr(a, b - a);
}

}  // namespace

Perm parse_cycles(std::string_view text, std::size_t degree) { return cycles_at(text, degree, 1, 0); }

GroupSpec parse_group_spec(std::string_view text) {
  GroupSpec spec;
  bool have_degree = false;
  std::vector<Perm>* target = &spec.generators;
  bool in_block = false;
  std::size_t line_no = 0, block_line = 0;

  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t nl = text.find('\n', start);
    std::string_view raw = text.substr(start, nl == std::string_view::npos ? std::string_view::npos : nl - start);
    start = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::size_t lead = 0;
    std::string_view line = trim(raw, &lead);
    if (line.empty()) continue;

    std::size_t sp = 0;
    while (sp < line.size() && !std::isspace(static_cast<unsigned char>(line[sp])) && line[sp] != '(') ++sp;
    std::string_view key = line.substr(0, sp);
    std::size_t rest_lead = 0;
    std::string_view rest = trim(line.substr(sp), &rest_lead);
    const std::size_t rest_col = lead + sp + rest_lead;

    if (!have_degree) {
      if (key != "degree") throw ParseError(line_no, lead + 1, "expected 'degree N' first");
      Cursor c(rest, line_no, rest_col);
      spec.degree = c.number();
      if (!c.done()) c.error("trailing text after degree");
      if (spec.degree == 0) throw ParseError(line_no, rest_col + 1, "degree must be positive");
      have_degree = true;
    } else if (key == "degree") {
      throw ParseError(line_no, lead + 1, "degree given twice");
    } else if (key == "gen") {
      target->push_back(cycles_at(rest, spec.degree, line_no, rest_col));
    } else if (key == "subgroup") {
      if (in_block) throw ParseError(line_no, lead + 1, "nested subgroup block");
      if (rest.empty() || rest.find_first_of(" \t") != std::string_view::npos)
        throw ParseError(line_no, rest_col + 1, "expected one subgroup name");
      for (const auto& [name, gens] : spec.subgroups)
        if (name == rest) throw ParseError(line_no, rest_col + 1, "subgroup " + std::string(rest) + " defined twice");
      spec.subgroups.emplace_back(std::string(rest), std::vector<Perm>{});
      target = &spec.subgroups.back().second;
      in_block = true;
      block_line = line_no;
    } else if (key == "end") {
      if (!in_block) throw ParseError(line_no, lead + 1, "'end' outside a subgroup block");
      if (!rest.empty()) throw ParseError(line_no, rest_col + 1, "trailing text after end");
      target = &spec.generators;
      in_block = false;
    } else {
      throw ParseError(line_no, lead + 1, "unknown keyword '" + std::string(key) + "'");
    }
  }
  if (!have_degree) throw ParseError(line_no == 0 ? 1 : line_no, 1, "missing 'degree N'");
  if (in_block) throw ParseError(block_line, 1, "subgroup block not closed with 'end'");
  return spec;
}

PermGroup parse_group(std::string_view text) {
  GroupSpec s = parse_group_spec(text);
  return PermGroup::closure(s.degree, std::move(s.generators));
}

std::string format_cycles(const Perm& p) {
  std::string out;
  std::vector<char> seen(p.degree(), 0);
  for (Point i = 0; i < p.degree(); ++i) {
    if (seen[i] || p[i] == i) continue;
    out += '(';
    for (Point j = i; !seen[j]; j = p[j]) {
      seen[j] = 1;
      if (j != i) out += ' ';
      out += std::to_string(j + 1);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

std::string serialize_group(const PermGroup& g,
                            const std::vector<std::pair<std::string, std::vector<Perm>>>& subgroups) {
  std::string out = "degree " + std::to_string(g.degree()) + "\n";
  for (const Perm& p : g.generators()) out += "gen " + format_cycles(p) + "\n";
  for (const auto& [name, gens] : subgroups) {
    out += "subgroup " + name + "\n";
    for (const Perm& p : gens) out += "gen " + format_cycles(p) + "\n";
    out += "end\n";
  }
  return out;
}

}  // namespace pregal::cli
