// Deterministic structured reports for the command-line tools.
//
// A Report is a command name, a digest of the input bytes, the parameter
// list, and an ordered list of sections; each section holds key-value pairs
// and rectangular tables.  Two renderings exist: a human-readable text form
// (section headers, `key: value` lines, tab-separated tables) and a flat
// record form (`--format records`, one line per parameter / key-value pair /
// table cell) for machine consumption.  Both are byte-identical across runs:
// sections, keys and parameters render in insertion order, which every
// command fixes deterministically, and table rows/columns are sorted with a
// natural order (digit runs compare as numbers, so "v10" sorts after "v2").
#pragma once

#include <array>
#include <deque>
#include <string>
#include <utility>
#include <vector>

#include "qhw/algebra.hpp"

namespace qw {

struct ReportTable {
  std::string name;
  // One entry per set cell: (row id, column id, value).  Rendering
  // rectangularizes over the union of ids and fills unset cells with ".".
  std::vector<std::array<std::string, 3>> cells;

  void cell(const std::string& row, const std::string& col, std::string value);
  void cell(const std::string& row, const std::string& col, long long value);
};

struct ReportSection {
  std::string name;
  std::vector<std::pair<std::string, std::string>> kv;
  // Deque so that references returned by table() stay valid while later
  // tables are appended to the same section.
  std::deque<ReportTable> tables;

  void add(const std::string& key, std::string value);
  void add(const std::string& key, long long value);
  void add_flag(const std::string& key, bool value);  // renders yes / no
  ReportTable& table(const std::string& table_name);
};

struct Report {
  std::string command;
  std::string input_digest;
  std::vector<std::pair<std::string, std::string>> parameters;
  // Deque for the same reference-stability reason as ReportSection::tables.
  std::deque<ReportSection> sections;

  void param(const std::string& key, std::string value);
  void param(const std::string& key, long long value);
  ReportSection& section(const std::string& section_name);

  std::string render_text() const;
  std::string render_records() const;
};

// "fnv64:<16 lowercase hex digits>": FNV-1a 64-bit hash of the bytes.
std::string fnv64_digest(const std::string& bytes);

// Natural string comparison: maximal digit runs compare as integers (shorter
// run of equal numeric value first), other characters byte-wise.
bool natural_less(const std::string& a, const std::string& b);

// Canonical scalar form: `num` or `num/den`, lowest terms, positive
// denominator.
std::string scalar_str(const Scalar& a);

// `c1 p1 + c2 p2 + ...` with unit coefficients suppressed and paths printed
// right-to-left; used for relations in reconstruction and Borel reports.
std::string relation_str(const Quiver& q, const Relation& r);

}  // namespace qw
