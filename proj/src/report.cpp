#include "qhw/report.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <set>
#include <sstream>

namespace qw {

void ReportTable::cell(const std::string& row, const std::string& col, std::string value) {
  cells.push_back({row, col, std::move(value)});
}

void ReportTable::cell(const std::string& row, const std::string& col, long long value) {
  cell(row, col, std::to_string(value));
}

void ReportSection::add(const std::string& key, std::string value) {
  kv.emplace_back(key, std::move(value));
}

void ReportSection::add(const std::string& key, long long value) {
  add(key, std::to_string(value));
}

void ReportSection::add_flag(const std::string& key, bool value) {
  add(key, std::string(value ? "yes" : "no"));
}

ReportTable& ReportSection::table(const std::string& table_name) {
  tables.push_back(ReportTable{table_name, {}});
  return tables.back();
}

void Report::param(const std::string& key, std::string value) {
  parameters.emplace_back(key, std::move(value));
}

void Report::param(const std::string& key, long long value) {
  param(key, std::to_string(value));
}

ReportSection& Report::section(const std::string& section_name) {
  sections.push_back(ReportSection{section_name, {}, {}});
  return sections.back();
}

std::string fnv64_digest(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    h ^= static_cast<std::uint64_t>(c);
    h *= 1099511628211ULL;
  }
  static const char* hex = "0123456789abcdef";
  std::string out = "fnv64:";
  for (int i = 15; i >= 0; --i) out += hex[(h >> (4 * i)) & 0xf];
  return out;
}

bool natural_less(const std::string& a, const std::string& b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    const bool da = std::isdigit(static_cast<unsigned char>(a[i])) != 0;
    const bool db = std::isdigit(static_cast<unsigned char>(b[j])) != 0;
    if (da && db) {
      // Compare the two maximal digit runs as integers: strip leading
      // zeros, then shorter run < longer run, then byte-wise.
      std::size_t si = i, sj = j;
      while (si < a.size() && a[si] == '0') ++si;
      while (sj < b.size() && b[sj] == '0') ++sj;
      std::size_t ei = si, ej = sj;
      while (ei < a.size() && std::isdigit(static_cast<unsigned char>(a[ei]))) ++ei;
      while (ej < b.size() && std::isdigit(static_cast<unsigned char>(b[ej]))) ++ej;
      const std::size_t la = ei - si, lb = ej - sj;
      if (la != lb) return la < lb;
      const int cmp = a.compare(si, la, b, sj, lb);
      if (cmp != 0) return cmp < 0;
      // Equal numeric value: fewer leading zeros first, then move on.
      const std::size_t za = si - i, zb = sj - j;
      if (za != zb) return za < zb;
      i = ei;
      j = ej;
    } else {
      if (a[i] != b[j]) return a[i] < b[j];
      ++i;
      ++j;
    }
  }
  return a.size() - i < b.size() - j;
}

std::string scalar_str(const Scalar& a) {
  Scalar t = a;
  t.canonicalize();
  return t.get_str();
}

std::string relation_str(const Quiver& q, const Relation& r) {
  if (r.terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const RelTerm& t : r.terms) {
    Scalar c = t.coeff;
    c.canonicalize();
    const bool neg = c < 0;
    if (first) {
      if (neg) out += "- ";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    Scalar mag = neg ? Scalar(-c) : c;
    if (mag != 1) out += mag.get_str() + " ";
    out += t.path.to_string(q);
  }
  return out;
}

namespace {

struct TableGrid {
  std::vector<std::string> rows, cols;
  std::map<std::pair<std::size_t, std::size_t>, const std::string*> at;
};

// Sorted row/column ids plus a lookup from (row idx, col idx) to the value.
// Later writes to the same cell win, which no command relies on.
TableGrid grid_of(const ReportTable& t) {
  std::set<std::string, bool (*)(const std::string&, const std::string&)> rows(natural_less),
      cols(natural_less);
  for (const auto& c : t.cells) {
    rows.insert(c[0]);
    cols.insert(c[1]);
  }
  TableGrid g;
  g.rows.assign(rows.begin(), rows.end());
  g.cols.assign(cols.begin(), cols.end());
  auto index = [](const std::vector<std::string>& v, const std::string& s) {
    return static_cast<std::size_t>(
        std::lower_bound(v.begin(), v.end(), s, natural_less) - v.begin());
  };
  for (const auto& c : t.cells) g.at[{index(g.rows, c[0]), index(g.cols, c[1])}] = &c[2];
  return g;
}

}  // namespace

std::string Report::render_text() const {
  std::ostringstream os;
  os << "command: " << command << "\n";
  os << "input-digest: " << input_digest << "\n";
  for (const auto& [k, v] : parameters) os << "parameter " << k << ": " << v << "\n";
  for (const ReportSection& sec : sections) {
    os << "\n== " << sec.name << " ==\n";
    for (const auto& [k, v] : sec.kv) os << k << ": " << v << "\n";
    for (const ReportTable& t : sec.tables) {
      const TableGrid g = grid_of(t);
      os << "-- " << t.name << " --\n";
      for (const std::string& c : g.cols) os << "\t" << c;
      os << "\n";
      for (std::size_t r = 0; r < g.rows.size(); ++r) {
        os << g.rows[r];
        for (std::size_t c = 0; c < g.cols.size(); ++c) {
          auto it = g.at.find({r, c});
          os << "\t" << (it == g.at.end() ? "." : *it->second);
        }
        os << "\n";
      }
    }
  }
  return os.str();
}

std::string Report::render_records() const {
  std::ostringstream os;
  os << "meta\tcommand\t" << command << "\n";
  os << "meta\tinput-digest\t" << input_digest << "\n";
  for (const auto& [k, v] : parameters) os << "param\t" << k << "\t" << v << "\n";
  for (const ReportSection& sec : sections) {
    for (const auto& [k, v] : sec.kv) os << "kv\t" << sec.name << "\t" << k << "\t" << v << "\n";
    for (const ReportTable& t : sec.tables) {
      const TableGrid g = grid_of(t);
      for (std::size_t r = 0; r < g.rows.size(); ++r)
        for (std::size_t c = 0; c < g.cols.size(); ++c) {
          auto it = g.at.find({r, c});
          if (it == g.at.end()) continue;
          os << "cell\t" << sec.name << "\t" << t.name << "\t" << g.rows[r] << "\t" << g.cols[c]
             << "\t" << *it->second << "\n";
        }
    }
  }
  return os.str();
}

}  // namespace qw
