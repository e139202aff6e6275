// Shared family of bound-quiver algebras used across the test suites.
//
// Each member is kept as source text in the workbench's algebra file format
// and built through the parser, so the corpus doubles as parser coverage and
// the same strings can be written out as CLI fixture files.  The members are
// small but exercise distinct behaviours: monomial vs. commutation relations,
// a genuinely nonzero m3, non-homogeneous relations (no length grading),
// local algebras of infinite global dimension, parallel arrows, and a
// directed zig-zag family with rich quasi-hereditary structure.
#pragma once

#include <memory>
#include <string>

#include "qhw/parse.hpp"

namespace corpus {

using qw::Algebra;

inline Algebra from_text(const std::string& text) {
  return qw::build_parsed(qw::parse_algebra(text, "<corpus>"));
}

inline std::shared_ptr<const Algebra> share(Algebra a) {
  return std::make_shared<const Algebra>(std::move(a));
}

inline std::shared_ptr<const Algebra> share_text(const std::string& text) {
  return share(from_text(text));
}

// -- linear A_n quivers 1 -> 2 -> ... -> n ----------------------------------

// Path algebra of linear A_n (hereditary).
inline std::string lin_hereditary_text(int n) {
  std::string s = "field Q\nvertex";
  for (int i = 1; i <= n; ++i) s += " " + std::to_string(i);
  s += "\n";
  for (int i = 1; i < n; ++i) {
    s += "arrow a" + std::to_string(i) + " : " + std::to_string(i) + " -> " +
         std::to_string(i + 1) + "\n";
  }
  return s;
}
inline Algebra lin_hereditary(int n) { return from_text(lin_hereditary_text(n)); }

// Linear A_3 with the monomial relation a2*a1 (radical square zero).
inline std::string lin_a3_monomial_text() {
  return lin_hereditary_text(3) + "relation a2*a1\n";
}
inline Algebra lin_a3_monomial() { return from_text(lin_a3_monomial_text()); }

// Same presentation over the prime field F5.
inline std::string f5_lin_a3_text() {
  std::string s = lin_a3_monomial_text();
  return "field F5\n" + s.substr(s.find('\n') + 1);
}
inline Algebra f5_lin_a3() { return from_text(f5_lin_a3_text()); }

// Linear A_n with all length-2 compositions zero (radical square zero).
inline std::string lin_radsq_text(int n) {
  std::string s = lin_hereditary_text(n);
  for (int i = 1; i + 1 < n; ++i) {
    s += "relation a" + std::to_string(i + 1) + "*a" + std::to_string(i) + "\n";
  }
  return s;
}
inline Algebra lin_radsq(int n) { return from_text(lin_radsq_text(n)); }

// -- one-vertex local algebras ------------------------------------------------

// k[t]/(t^ell): one loop, relation t^ell.  Infinite global dimension, so all
// resolutions are truncations.
inline std::string truncated_poly_text(int ell) {
  std::string word = "t";
  for (int i = 1; i < ell; ++i) word += "*t";
  return "field Q\nvertex 1\narrow t : 1 -> 1\nrelation " + word + "\n";
}
inline Algebra truncated_poly(int ell) { return from_text(truncated_poly_text(ell)); }

// -- special small quivers ------------------------------------------------------

// Five vertices; al:1->2, be:2->4, ga:2->3, de:3->4, ep:4->5; relations
// (be - de*ga)*al and ep*be.  Global dimension two; dim 15; the Ext-algebra
// carries a genuinely nonzero m3.  The first relation mixes path lengths, so
// the algebra has no arrow-length grading.
inline std::string biserial_text() {
  return "field Q\n"
         "vertex 1 2 3 4 5\n"
         "arrow al : 1 -> 2\n"
         "arrow be : 2 -> 4\n"
         "arrow ga : 2 -> 3\n"
         "arrow de : 3 -> 4\n"
         "arrow ep : 4 -> 5\n"
         "relation be*al - de*ga*al\n"
         "relation ep*be\n";
}
inline Algebra biserial() { return from_text(biserial_text()); }

// Commutative square: a:1->2, b:2->4, c:1->3, d:3->4, relation b*a - d*c.
inline std::string comm_square_text() {
  return "field Q\n"
         "vertex 1 2 3 4\n"
         "arrow a : 1 -> 2\n"
         "arrow b : 2 -> 4\n"
         "arrow c : 1 -> 3\n"
         "arrow d : 3 -> 4\n"
         "relation b*a - d*c\n";
}
inline Algebra comm_square() { return from_text(comm_square_text()); }

// Kite: a:1->2, b:2->3, c:3->4, d:1->3 with the non-homogeneous relation
// c*b*a - c*d, so the algebra has no arrow-length grading.
inline std::string kite_text() {
  return "field Q\n"
         "vertex 1 2 3 4\n"
         "arrow a : 1 -> 2\n"
         "arrow b : 2 -> 3\n"
         "arrow c : 3 -> 4\n"
         "arrow d : 1 -> 3\n"
         "relation c*b*a - c*d\n";
}
inline Algebra kite() { return from_text(kite_text()); }

// Kronecker: two parallel arrows 1->2 (hereditary).
inline std::string kronecker_text() {
  return "field Q\nvertex 1 2\narrow x : 1 -> 2\narrow y : 1 -> 2\n";
}
inline Algebra kronecker() { return from_text(kronecker_text()); }

// Semisimple: n isolated vertices.
inline std::string semisimple_text(int n) {
  std::string s = "field Q\nvertex";
  for (int i = 1; i <= n; ++i) s += " " + std::to_string(i);
  return s + "\n";
}
inline Algebra semisimple(int n) { return from_text(semisimple_text(n)); }

// -- directed zig-zag family ------------------------------------------------------

// Vertices 1..n; every odd vertex is a source with arrows to its neighbours
// (1->2, 3->2, 3->4, 5->4, ...).  Hereditary and directed; quasi-hereditary
// with half of the standard modules two-dimensional.
inline std::string zigzag_text(int n) {
  std::string s = "field Q\nvertex";
  for (int i = 1; i <= n; ++i) s += " " + std::to_string(i);
  s += "\n";
  for (int i = 1; i <= n; i += 2) {
    if (i - 1 >= 1) {
      s += "arrow a" + std::to_string(i) + "_" + std::to_string(i - 1) + " : " +
           std::to_string(i) + " -> " + std::to_string(i - 1) + "\n";
    }
    if (i + 1 <= n) {
      s += "arrow a" + std::to_string(i) + "_" + std::to_string(i + 1) + " : " +
           std::to_string(i) + " -> " + std::to_string(i + 1) + "\n";
    }
  }
  return s;
}
inline Algebra zigzag(int n) { return from_text(zigzag_text(n)); }

// -- parallel-arrow family ----------------------------------------------------------

// Three vertices, m parallel arrows 1->2 (a1..am) and n parallel arrows 2->3
// (b1..bn); hereditary.  Quasi-hereditary for the order 2 < 3 < 1, declared
// in the source text.
inline std::string multi_arrow_text(int m, int n) {
  std::string s = "field Q\nvertex 1 2 3\n";
  for (int i = 1; i <= m; ++i) {
    s += "arrow a" + std::to_string(i) + " : 1 -> 2\n";
  }
  for (int i = 1; i <= n; ++i) {
    s += "arrow b" + std::to_string(i) + " : 2 -> 3\n";
  }
  s += "order 2 < 3, 3 < 1\n";
  return s;
}
inline Algebra multi_arrow(int m, int n) { return from_text(multi_arrow_text(m, n)); }

}  // namespace corpus
