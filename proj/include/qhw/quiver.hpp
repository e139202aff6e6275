#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qhw/common.hpp"

namespace qw {

struct Arrow {
  std::string name;
  int src = -1;
  int dst = -1;
};

// Finite quiver with named vertices and arrows.  Vertices and arrows are
// referred to by their declaration index everywhere in the library; names are
// for I/O only.
class Quiver {
public:
  int add_vertex(const std::string& name);
  int add_arrow(const std::string& name, int src, int dst);

  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int arrow_count() const { return static_cast<int>(arrows_.size()); }
  const std::string& vertex_name(int v) const { return vertices_[v]; }
  const Arrow& arrow(int a) const { return arrows_[a]; }
  std::optional<int> find_vertex(const std::string& name) const;
  std::optional<int> find_arrow(const std::string& name) const;

  bool operator==(const Quiver& o) const;

private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
};

// Directed path.  Arrows are stored in application order: arrows[0] is
// applied first.  The printed form is the usual right-to-left composition
// ("b*a" means first a, then b); a trivial path prints as "e_<vertex>".
struct Path {
  int src = -1;                 // start vertex (meaningful also when arrows empty)
  std::vector<int> arrows;

  static Path trivial(int v) { return Path{v, {}}; }
  int length() const { return static_cast<int>(arrows.size()); }
  int dst(const Quiver& q) const { return arrows.empty() ? src : q.arrow(arrows.back()).dst; }
  bool operator==(const Path& o) const { return src == o.src && arrows == o.arrows; }
  std::string to_string(const Quiver& q) const;
};

// "q after p": first p, then q.  Requires dst(p) == src(q).
Path concat(const Quiver& qv, const Path& p, const Path& q);

// Degree-lexicographic order: by length, then by the arrow index sequence.
// Trivial paths compare by their vertex.
bool path_less(const Path& a, const Path& b);

// Finite poset on elements 0..n-1 given by its strict order relation.
// Construction from a cover list takes the transitive closure and validates
// antisymmetry.
class Poset {
public:
  Poset() = default;
  explicit Poset(int n) : n_(n), lt_(n, std::vector<bool>(n, false)) {}
  static Poset from_covers(int n, const std::vector<std::pair<int, int>>& covers);
  static Poset total_order(const std::vector<int>& ranked);  // ranked[0] is smallest

  int size() const { return n_; }
  bool lt(int a, int b) const { return lt_[a][b]; }
  bool leq(int a, int b) const { return a == b || lt_[a][b]; }
  bool comparable(int a, int b) const { return a == b || lt_[a][b] || lt_[b][a]; }

  void set_lt(int a, int b);           // adds a<b, keeps closure, validates
  std::vector<int> linear_extension(bool reversed_tiebreak = false) const;
  std::vector<int> maximal_elements() const;
  bool operator==(const Poset& o) const { return n_ == o.n_ && lt_ == o.lt_; }

private:
  int n_ = 0;
  std::vector<std::vector<bool>> lt_;
  void close_and_validate();
  friend Poset transitive_closure_of(int n, const std::vector<std::pair<int, int>>& rels);
};

// Poset from an arbitrary relation list (not necessarily covers).
Poset transitive_closure_of(int n, const std::vector<std::pair<int, int>>& rels);

}  // namespace qw
