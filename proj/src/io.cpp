#include "rsfan/io.hpp"

#include <fstream>
#include <sstream>

namespace rsfan {

namespace {

struct Lines {
  std::vector<std::pair<int, std::string>> rows;  // (line number, content)
  size_t pos = 0;

  bool done() const { return pos >= rows.size(); }
  const std::pair<int, std::string>& peek() const { return rows[pos]; }
  std::pair<int, std::string> next() { return rows[pos++]; }
};

Lines split_lines(const std::string& text) {
  Lines out;
  std::istringstream is(text);
  std::string line;
  int no = 0;
  while (std::getline(is, line)) {
    ++no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    size_t a = line.find_first_not_of(" \t\r");
    if (a == std::string::npos) continue;
    size_t b = line.find_last_not_of(" \t\r");
    out.rows.emplace_back(no, line.substr(a, b - a + 1));
  }
  return out;
}

std::vector<std::string> tokens(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  std::string t;
  while (is >> t) out.push_back(t);
  return out;
}

[[noreturn]] void fail(int line, const std::string& what) {
  throw ParseError("line " + std::to_string(line) + ": " + what);
}

}  // namespace

FiniteTS parse_structure(const std::string& text) {
  Lines in = split_lines(text);
  if (in.done()) throw ParseError("empty structure file");

  auto [l1, header] = in.next();
  auto ht = tokens(header);
  if (ht.size() != 2 || ht[0] != "ts") fail(l1, "expected 'ts <label>'");
  std::string label = ht[1];

  if (in.done()) throw ParseError("missing 'constants' line");
  auto [l2, cline] = in.next();
  auto ct = tokens(cline);
  if (ct.size() != 4 || ct[0] != "constants") fail(l2, "expected 'constants <one> <zero> <minus-one>'");
  std::string one_name = ct[1], zero_name = ct[2], mone_name = ct[3];

  if (in.done()) throw ParseError("missing body");
  auto [l3, bline] = in.next();
  auto bt = tokens(bline);

  if (bt[0] == "generators" || bt[0] == "relations") {
    Presentation p;
    p.label = label;
    if (bt[0] == "generators") {
      p.generators.assign(bt.begin() + 1, bt.end());
      if (in.done()) throw ParseError("missing 'relations' block");
      auto [l4, rline] = in.next();
      if (tokens(rline) != std::vector<std::string>{"relations"}) fail(l4, "expected 'relations'");
    }
    for (;;) {
      if (in.done()) throw ParseError("unterminated relations block; expected 'end'");
      auto [ln, row] = in.next();
      if (row == "end") break;
      auto eq = row.find('=');
      if (eq == std::string::npos) fail(ln, "expected 'lhs = rhs'");
      Relation r;
      r.lhs_text = row.substr(0, eq);
      r.rhs_text = row.substr(eq + 1);
      auto trim = [](std::string& s) {
        size_t a = s.find_first_not_of(" \t");
        size_t b = s.find_last_not_of(" \t");
        s = (a == std::string::npos) ? "" : s.substr(a, b - a + 1);
      };
      trim(r.lhs_text);
      trim(r.rhs_text);
      try {
        r.lhs = parse_monomial(r.lhs_text, p.generators);
        r.rhs = parse_monomial(r.rhs_text, p.generators);
      } catch (const ParseError& e) {
        fail(ln, e.what());
      }
      p.relations.push_back(std::move(r));
    }
    if (one_name != "1" || zero_name != "0" || mone_name != "-1")
      fail(l2, "presentation structures use the constant names 1, 0, -1");
    FiniteTS g = build_from_presentation(p);
    return g;
  }

  if (bt[0] != "elements") fail(l3, "expected 'generators', 'relations' or 'elements'");
  std::vector<std::string> names(bt.begin() + 1, bt.end());
  if (in.done()) throw ParseError("missing 'table' block");
  auto [l5, tline] = in.next();
  if (tokens(tline) != std::vector<std::string>{"table"}) fail(l5, "expected 'table'");

  std::vector<Elem> table;
  auto index_of = [&](const std::string& nm, int ln) {
    for (size_t i = 0; i < names.size(); ++i)
      if (names[i] == nm) return static_cast<Elem>(i);
    fail(ln, "unknown element name '" + nm + "'");
  };
  int rows_seen = 0;
  for (;;) {
    if (in.done()) throw ParseError("unterminated table; expected 'end'");
    auto [ln, row] = in.next();
    if (row == "end") break;
    auto rt = tokens(row);
    if (rt.size() != names.size())
      fail(ln, "table row has " + std::to_string(rt.size()) + " entries, expected " +
                   std::to_string(names.size()));
    for (auto& nm : rt) table.push_back(index_of(nm, ln));
    ++rows_seen;
  }
  if (rows_seen != static_cast<int>(names.size()))
    throw ParseError("table has " + std::to_string(rows_seen) + " rows, expected " +
                     std::to_string(names.size()));

  Elem one = index_of(one_name, l2), zero = index_of(zero_name, l2), mone = index_of(mone_name, l2);
  return make_ts(label, std::move(names), std::move(table), one, zero, mone);
}

FiniteTS load_structure(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ParseError("cannot open " + path);
  std::ostringstream os;
  os << f.rdbuf();
  return parse_structure(os.str());
}

std::string serialize_structure(const FiniteTS& g) {
  std::ostringstream os;
  os << "ts " << (g.label.empty() ? "unnamed" : g.label) << "\n";
  os << "constants " << g.name(g.one) << " " << g.name(g.zero) << " " << g.name(g.minus_one) << "\n";
  if (!g.generators.empty() || !g.relations.empty()) {
    os << "generators";
    for (auto& s : g.generators) os << " " << s;
    os << "\nrelations\n";
    for (auto& [l, r] : g.relations) os << l << " = " << r << "\n";
    os << "end\n";
    return os.str();
  }
  os << "elements";
  for (auto& s : g.names) os << " " << s;
  os << "\ntable\n";
  for (Elem a = 0; a < g.size(); ++a) {
    for (Elem b = 0; b < g.size(); ++b) os << (b ? " " : "") << g.name(g.mul(a, b));
    os << "\n";
  }
  os << "end\n";
  return os.str();
}

}  // namespace rsfan
