#include "qhw/quiver.hpp"

#include <algorithm>
#include <numeric>

namespace qw {

int Quiver::add_vertex(const std::string& name) {
  require(!find_vertex(name), "ParseError", "duplicate vertex '" + name + "'");
  vertices_.push_back(name);
  return static_cast<int>(vertices_.size()) - 1;
}

int Quiver::add_arrow(const std::string& name, int src, int dst) {
  require(src >= 0 && src < vertex_count() && dst >= 0 && dst < vertex_count(), "UnknownVertex",
          "arrow '" + name + "' references an undeclared vertex");
  require(!find_arrow(name), "ParseError", "duplicate arrow '" + name + "'");
  arrows_.push_back(Arrow{name, src, dst});
  return static_cast<int>(arrows_.size()) - 1;
}

std::optional<int> Quiver::find_vertex(const std::string& name) const {
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    if (vertices_[i] == name) return static_cast<int>(i);
  return std::nullopt;
}

std::optional<int> Quiver::find_arrow(const std::string& name) const {
  for (std::size_t i = 0; i < arrows_.size(); ++i)
    if (arrows_[i].name == name) return static_cast<int>(i);
  return std::nullopt;
}

bool Quiver::operator==(const Quiver& o) const {
  if (vertices_ != o.vertices_ || arrows_.size() != o.arrows_.size()) return false;
  for (std::size_t i = 0; i < arrows_.size(); ++i)
    if (arrows_[i].name != o.arrows_[i].name || arrows_[i].src != o.arrows_[i].src ||
        arrows_[i].dst != o.arrows_[i].dst)
      return false;
  return true;
}

std::string Path::to_string(const Quiver& q) const {
  if (arrows.empty()) return "e_" + q.vertex_name(src);
  std::string s;
  for (auto it = arrows.rbegin(); it != arrows.rend(); ++it) {
    if (!s.empty()) s += "*";
    s += q.arrow(*it).name;
  }
  return s;
}

Path concat(const Quiver& qv, const Path& p, const Path& q) {
  require(p.dst(qv) == q.src, "BlockMismatch", "non-composable paths");
  Path r = p;
  r.arrows.insert(r.arrows.end(), q.arrows.begin(), q.arrows.end());
  return r;
}

bool path_less(const Path& a, const Path& b) {
  if (a.length() != b.length()) return a.length() < b.length();
  if (a.arrows.empty()) return a.src < b.src;
  return a.arrows < b.arrows;
}

Poset Poset::from_covers(int n, const std::vector<std::pair<int, int>>& covers) {
  return transitive_closure_of(n, covers);
}

Poset Poset::total_order(const std::vector<int>& ranked) {
  int n = static_cast<int>(ranked.size());
  Poset p(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) p.lt_[ranked[i]][ranked[j]] = true;
  return p;
}

void Poset::set_lt(int a, int b) {
  require(a >= 0 && a < n_ && b >= 0 && b < n_, "UnknownVertex", "poset element out of range");
  lt_[a][b] = true;
  close_and_validate();
}

void Poset::close_and_validate() {
  for (int k = 0; k < n_; ++k)
    for (int i = 0; i < n_; ++i)
      if (lt_[i][k])
        for (int j = 0; j < n_; ++j)
          if (lt_[k][j]) lt_[i][j] = true;
  for (int i = 0; i < n_; ++i) {
    require(!lt_[i][i], "ParseError", "order relation contains a cycle");
    for (int j = 0; j < n_; ++j)
      require(!(lt_[i][j] && lt_[j][i]), "ParseError", "order relation is not antisymmetric");
  }
}

std::vector<int> Poset::linear_extension(bool reversed_tiebreak) const {
  std::vector<int> order;
  std::vector<bool> used(n_, false);
  for (int step = 0; step < n_; ++step) {
    int chosen = -1;
    for (int t = 0; t < n_; ++t) {
      int i = reversed_tiebreak ? n_ - 1 - t : t;
      if (used[i]) continue;
      bool minimal = true;
      for (int j = 0; j < n_; ++j)
        if (!used[j] && lt_[j][i]) {
          minimal = false;
          break;
        }
      if (minimal) {
        chosen = i;
        break;
      }
    }
    require(chosen >= 0, "ParseError", "order relation contains a cycle");
    used[chosen] = true;
    order.push_back(chosen);
  }
  return order;
}

std::vector<int> Poset::maximal_elements() const {
  std::vector<int> out;
  for (int i = 0; i < n_; ++i) {
    bool maximal = true;
    for (int j = 0; j < n_; ++j)
      if (lt_[i][j]) {
        maximal = false;
        break;
      }
    if (maximal) out.push_back(i);
  }
  return out;
}

Poset transitive_closure_of(int n, const std::vector<std::pair<int, int>>& rels) {
  Poset p(n);
  for (auto [a, b] : rels) {
    require(a >= 0 && a < n && b >= 0 && b < n, "UnknownVertex", "order element out of range");
    p.lt_[a][b] = true;
  }
  p.close_and_validate();
  return p;
}

}  // namespace qw
