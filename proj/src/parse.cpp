#include "qhw/parse.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace qw {

namespace {

[[noreturn]] void perr(const std::string& filename, int line, const std::string& msg) {
  fail("ParseError", filename + ":" + std::to_string(line) + ": " + msg);
}

std::vector<std::string> tokens_of(const std::string& line) {
  std::vector<std::string> toks;
  std::istringstream iss(line);
  std::string t;
  while (iss >> t) toks.push_back(t);
  return toks;
}

std::string strip_comment(const std::string& line) {
  auto pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

bool is_scalar_token(const std::string& t) {
  std::size_t i = (t[0] == '+' || t[0] == '-') ? 1 : 0;
  if (i == t.size()) return false;
  bool seen_slash = false;
  for (; i < t.size(); ++i) {
    if (t[i] == '/' && !seen_slash && i + 1 < t.size()) {
      seen_slash = true;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
  }
  return true;
}

Path parse_path_token(const Quiver& q, const std::string& tok, const std::string& filename,
                      int line) {
  // "c*b*a" means first a, then b, then c;  "e_v" is the trivial path at v.
  if (tok.rfind("e_", 0) == 0) {
    auto v = q.find_vertex(tok.substr(2));
    if (!v) perr(filename, line, "unknown vertex in '" + tok + "'");
    return Path::trivial(*v);
  }
  std::vector<std::string> names;
  std::string cur;
  for (char c : tok) {
    if (c == '*') {
      names.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  names.push_back(cur);
  Path p;
  for (auto it = names.rbegin(); it != names.rend(); ++it) {
    auto a = q.find_arrow(*it);
    if (!a) perr(filename, line, "unknown arrow '" + *it + "'");
    if (p.arrows.empty()) {
      p.src = q.arrow(*a).src;
    } else if (q.arrow(p.arrows.back()).dst != q.arrow(*a).src) {
      perr(filename, line, "path '" + tok + "' is not composable");
    }
    p.arrows.push_back(*a);
  }
  return p;
}

}  // namespace

ParsedAlgebra parse_algebra(const std::string& text, const std::string& filename) {
  ParsedAlgebra pa;
  bool field_seen = false;
  std::vector<std::pair<int, int>> order_rels;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::vector<std::string> toks = tokens_of(strip_comment(raw));
    if (toks.empty()) continue;
    const std::string& head = toks[0];
    if (head == "field") {
      if (toks.size() != 2) perr(filename, lineno, "expected 'field Q' or 'field F<p>'");
      if (toks[1] == "Q") {
        pa.field = Field::rationals();
      } else if (toks[1].size() > 1 && toks[1][0] == 'F') {
        try {
          pa.field = Field::prime(std::stoul(toks[1].substr(1)));
        } catch (const QwError&) {
          throw;
        } catch (...) {
          perr(filename, lineno, "bad field '" + toks[1] + "'");
        }
      } else {
        perr(filename, lineno, "bad field '" + toks[1] + "'");
      }
      field_seen = true;
    } else if (head == "vertex") {
      for (std::size_t i = 1; i < toks.size(); ++i) {
        if (pa.quiver.find_vertex(toks[i]))
          perr(filename, lineno, "duplicate vertex '" + toks[i] + "'");
        pa.quiver.add_vertex(toks[i]);
      }
    } else if (head == "arrow") {
      // arrow a : 1 -> 2
      if (toks.size() != 6 || toks[2] != ":" || toks[4] != "->")
        perr(filename, lineno, "expected 'arrow name : src -> dst'");
      if (is_scalar_token(toks[1]))
        perr(filename, lineno, "arrow name '" + toks[1] + "' would parse as a number");
      auto s = pa.quiver.find_vertex(toks[3]), d = pa.quiver.find_vertex(toks[5]);
      if (!s || !d) perr(filename, lineno, "arrow endpoints must be declared vertices");
      if (pa.quiver.find_arrow(toks[1]))
        perr(filename, lineno, "duplicate arrow '" + toks[1] + "'");
      pa.quiver.add_arrow(toks[1], *s, *d);
    } else if (head == "relation") {
      Relation rel;
      Scalar sign(1);
      std::optional<Scalar> pending;
      for (std::size_t i = 1; i < toks.size(); ++i) {
        const std::string& t = toks[i];
        if (t == "+" || t == "-") {
          if (pending) perr(filename, lineno, "dangling coefficient before '" + t + "'");
          sign = Scalar(t == "+" ? 1 : -1);
          continue;
        }
        if (is_scalar_token(t)) {
          if (pending) perr(filename, lineno, "two coefficients in a row");
          pending = pa.field.parse_scalar(t);
          continue;
        }
        Scalar c = pending ? *pending : Scalar(1);
        pending.reset();
        Path p = parse_path_token(pa.quiver, t, filename, lineno);
        rel.terms.push_back({pa.field.reduce(sign * c), p});
        sign = Scalar(1);
      }
      if (pending) perr(filename, lineno, "coefficient without a path");
      if (rel.terms.empty()) perr(filename, lineno, "empty relation");
      pa.relations.push_back(std::move(rel));
    } else if (head == "order") {
      std::string rest;
      for (std::size_t i = 1; i < toks.size(); ++i) rest += toks[i] + " ";
      std::string chunk;
      std::istringstream cs(rest);
      std::vector<std::string> chunks;
      while (std::getline(cs, chunk, ',')) chunks.push_back(chunk);
      for (const auto& ch : chunks) {
        std::vector<std::string> ct = tokens_of(ch);
        if (ct.size() != 3 || ct[1] != "<")
          perr(filename, lineno, "expected 'a < b' entries in order line");
        auto a = pa.quiver.find_vertex(ct[0]), b = pa.quiver.find_vertex(ct[2]);
        if (!a || !b) perr(filename, lineno, "order references an undeclared vertex");
        order_rels.push_back({*a, *b});
      }
    } else {
      perr(filename, lineno, "unknown directive '" + head + "'");
    }
  }
  if (!field_seen) fail("ParseError", filename + ": no 'field' directive");
  require(pa.quiver.vertex_count() > 0, "ParseError", filename + ": no vertices declared");
  if (!order_rels.empty()) {
    try {
      pa.order = transitive_closure_of(pa.quiver.vertex_count(), order_rels);
    } catch (const QwError& e) {
      fail("ParseError", filename + ": " + e.what());
    }
  }
  return pa;
}

Algebra build_parsed(const ParsedAlgebra& pa, int max_nilpotency) {
  Algebra A = build_algebra(pa.quiver, pa.relations, pa.field, max_nilpotency);
  if (pa.order) A.set_declared_order(*pa.order);
  return A;
}

ParsedPoset parse_poset(const std::string& text, const std::string& filename) {
  ParsedPoset pp;
  std::vector<std::pair<int, int>> covers;
  auto find = [&](const std::string& n) -> int {
    for (std::size_t i = 0; i < pp.names.size(); ++i)
      if (pp.names[i] == n) return static_cast<int>(i);
    return -1;
  };
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::vector<std::string> toks = tokens_of(strip_comment(raw));
    if (toks.empty()) continue;
    if (toks[0] == "element") {
      if (toks.size() != 4 || toks[2] != "height")
        perr(filename, lineno, "expected 'element name height h'");
      if (find(toks[1]) >= 0) perr(filename, lineno, "duplicate element '" + toks[1] + "'");
      pp.names.push_back(toks[1]);
      try {
        pp.heights.push_back(std::stoi(toks[3]));
      } catch (...) {
        perr(filename, lineno, "bad height '" + toks[3] + "'");
      }
    } else if (toks[0] == "cover") {
      if (toks.size() != 4 || toks[2] != "<") perr(filename, lineno, "expected 'cover a < b'");
      int a = find(toks[1]), b = find(toks[3]);
      if (a < 0 || b < 0) perr(filename, lineno, "cover references an undeclared element");
      covers.push_back({a, b});
    } else {
      perr(filename, lineno, "unknown directive '" + toks[0] + "'");
    }
  }
  require(!pp.names.empty(), "ParseError", filename + ": no elements declared");
  try {
    pp.poset = Poset::from_covers(static_cast<int>(pp.names.size()), covers);
  } catch (const QwError& e) {
    fail("ParseError", filename + ": " + e.what());
  }
  // Longest-chain heights must match the declared ones.
  int n = static_cast<int>(pp.names.size());
  std::vector<int> h(n, 0);
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto [a, b] : covers)
      if (h[b] < h[a] + 1) {
        h[b] = h[a] + 1;
        changed = true;
      }
  }
  for (int i = 0; i < n; ++i)
    require(h[i] == pp.heights[i], "ParseError",
            filename + ": element '" + pp.names[i] + "' declares height " +
                std::to_string(pp.heights[i]) + " but the covers give " + std::to_string(h[i]));
  return pp;
}

std::vector<NamedRep> parse_modules(const std::string& text, const Algebra& A,
                                    const std::string& filename) {
  std::vector<NamedRep> out;
  const Quiver& q = A.quiver();
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  bool open = false;
  std::string name;
  std::vector<int> dims;
  std::vector<std::vector<std::tuple<int, int, Scalar>>> entries;  // per arrow
  int decl_line = 0;
  auto flush = [&]() {
    Rep r;
    r.A = &A;
    r.dims = dims;
    for (int a = 0; a < q.arrow_count(); ++a) {
      Matrix m(A.field(), dims[q.arrow(a).dst], dims[q.arrow(a).src]);
      for (const auto& [i, j, v] : entries[a]) {
        if (i >= static_cast<int>(m.rows()) || j >= static_cast<int>(m.cols()))
          perr(filename, decl_line, "matrix entry out of range for arrow " + q.arrow(a).name);
        m.set(i, j, v);
      }
      r.act.push_back(std::move(m));
    }
    try {
      r.validate();
    } catch (const QwError& e) {
      perr(filename, decl_line, "module '" + name + "': " + e.what());
    }
    out.push_back({name, std::move(r)});
  };
  while (std::getline(in, raw)) {
    ++lineno;
    std::vector<std::string> toks = tokens_of(strip_comment(raw));
    if (toks.empty()) continue;
    if (toks[0] == "module") {
      if (open) perr(filename, lineno, "missing 'end' before new module");
      if (toks.size() != 2) perr(filename, lineno, "expected 'module name'");
      open = true;
      name = toks[1];
      decl_line = lineno;
      dims.assign(q.vertex_count(), 0);
      entries.assign(q.arrow_count(), {});
    } else if (toks[0] == "dim") {
      if (!open) perr(filename, lineno, "'dim' outside a module block");
      if (toks.size() != 3) perr(filename, lineno, "expected 'dim vertex n'");
      auto v = q.find_vertex(toks[1]);
      if (!v) perr(filename, lineno, "unknown vertex '" + toks[1] + "'");
      try {
        dims[*v] = std::stoi(toks[2]);
      } catch (...) {
        perr(filename, lineno, "bad dimension '" + toks[2] + "'");
      }
      if (dims[*v] < 0) perr(filename, lineno, "negative dimension");
    } else if (toks[0] == "map") {
      if (!open) perr(filename, lineno, "'map' outside a module block");
      if (toks.size() != 5) perr(filename, lineno, "expected 'map arrow row col value'");
      auto a = q.find_arrow(toks[1]);
      if (!a) perr(filename, lineno, "unknown arrow '" + toks[1] + "'");
      int i = 0, j = 0;
      try {
        i = std::stoi(toks[2]) - 1;
        j = std::stoi(toks[3]) - 1;
      } catch (...) {
        perr(filename, lineno, "bad matrix index");
      }
      if (i < 0 || j < 0) perr(filename, lineno, "matrix indices are 1-based");
      entries[*a].push_back({i, j, A.field().parse_scalar(toks[4])});
    } else if (toks[0] == "end") {
      if (!open) perr(filename, lineno, "'end' without module");
      flush();
      open = false;
    } else {
      perr(filename, lineno, "unknown directive '" + toks[0] + "'");
    }
  }
  if (open) fail("ParseError", filename + ": unterminated module block");
  require(!out.empty(), "ParseError", filename + ": no modules declared");
  return out;
}

std::string read_text_file(const std::string& path) {
  std::ifstream f(path);
  require(f.good(), "ParseError", "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace qw
