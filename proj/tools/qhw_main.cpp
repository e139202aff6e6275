// qhw — quiver-algebra homological workbench, command-line surface.
//
// Subcommands:
//   ext         Ext dimension table between the chosen modules
//   ainf        transferred higher products m_n plus a Stasheff audit
//   reconstruct Koszul-dual reconstruction from the simples' Ext-algebra
//   qh          quasi-hereditary analysis for the file's weight order
//   borel       Borel subalgebra, Roiter coring and right-algebra pipeline
//   conde-poset combinatorial multiplicity recursion on a plain poset
//   enumerate   all quasi-hereditary structures from total orders
//
// Exit codes: 0 success; 1 domain errors (non-admissible input, not
// quasi-hereditary, truncation too low, ...); 2 parse/usage errors.  All
// output is deterministic: rerunning a command on the same input produces
// byte-identical bytes.
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qhw/ainfinity.hpp"
#include "qhw/borel.hpp"
#include "qhw/conde.hpp"
#include "qhw/parse.hpp"
#include "qhw/qh.hpp"
#include "qhw/reconstruct.hpp"
#include "qhw/report.hpp"

namespace {

using namespace qw;

// ---------------------------------------------------------------------------
// Small shared helpers

std::vector<std::pair<int, int>> poset_covers(const Poset& p) {
  std::vector<std::pair<int, int>> out;
  const int n = p.size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (!p.lt(a, b)) continue;
      bool cover = true;
      for (int c = 0; c < n && cover; ++c)
        if (p.lt(a, c) && p.lt(c, b)) cover = false;
      if (cover) out.emplace_back(a, b);
    }
  return out;
}

std::string covers_str(const Poset& p, const std::vector<std::string>& names) {
  std::string out;
  for (const auto& [a, b] : poset_covers(p)) {
    if (!out.empty()) out += ", ";
    out += names[a] + " < " + names[b];
  }
  return out.empty() ? "(antichain)" : out;
}

std::vector<std::string> vertex_names(const Quiver& q) {
  std::vector<std::string> out;
  for (int v = 0; v < q.vertex_count(); ++v) out.push_back(q.vertex_name(v));
  return out;
}

std::string chain_str(const Poset& total, const std::vector<std::string>& names) {
  std::string out;
  for (int v : total.linear_extension()) {
    if (!out.empty()) out += " < ";
    out += names[v];
  }
  return out;
}

// Weight order for qh/borel: the file's `order` line when present, otherwise
// the vertex declaration order read as a total order (documented default).
std::pair<Poset, std::string> weight_order(const Algebra& A) {
  if (A.declared_order()) return {*A.declared_order(), "declared"};
  std::vector<int> ranked(A.quiver().vertex_count());
  for (std::size_t i = 0; i < ranked.size(); ++i) ranked[i] = static_cast<int>(i);
  return {Poset::total_order(ranked), "declaration-order-default"};
}

void algebra_section(Report& rep, const Algebra& A) {
  ReportSection& s = rep.section("algebra");
  s.add("field", A.field().name());
  s.add("vertices", static_cast<long long>(A.quiver().vertex_count()));
  s.add("arrows", static_cast<long long>(A.quiver().arrow_count()));
  s.add("relations", static_cast<long long>(A.relations().size()));
  s.add("dimension", static_cast<long long>(A.dim()));
  s.add("nilpotency-index", static_cast<long long>(A.nilpotency()));
  s.add_flag("length-graded", A.length_graded());
}

void order_section(Report& rep, const Algebra& A, const Poset& poset, const std::string& source) {
  ReportSection& s = rep.section("order");
  s.add("source", source);
  s.add("relations", covers_str(poset, vertex_names(A.quiver())));
}

struct LoadedAlgebra {
  std::string digest;
  std::shared_ptr<const Algebra> A;
};

LoadedAlgebra load_algebra(const std::string& path) {
  const std::string text = read_text_file(path);
  const ParsedAlgebra pa = parse_algebra(text, path);
  return {fnv64_digest(text), std::make_shared<Algebra>(build_parsed(pa))};
}

// The module family behind --modules: the simples (default), the standard
// modules of the weight order, or a module-list file.
struct ModuleFamily {
  std::string source;
  std::vector<std::string> labels;
  std::vector<Rep> reps;
};

ModuleFamily module_family(const std::shared_ptr<const Algebra>& A, const std::string& spec) {
  ModuleFamily fam;
  const Quiver& q = A->quiver();
  if (spec == "simples") {
    fam.source = "simples";
    for (int v = 0; v < q.vertex_count(); ++v) {
      fam.labels.push_back(q.vertex_name(v));
      fam.reps.push_back(simple_rep(*A, v));
    }
  } else if (spec == "standards") {
    fam.source = "standards";
    const auto [poset, src] = weight_order(*A);
    (void)src;
    StandardSystem S = standard_modules(*A, poset);
    for (int v = 0; v < q.vertex_count(); ++v) {
      fam.labels.push_back("D" + q.vertex_name(v));
      fam.reps.push_back(std::move(S.delta[v]));
    }
  } else {
    fam.source = spec;
    const std::string text = read_text_file(spec);
    for (NamedRep& nr : parse_modules(text, *A, spec)) {
      fam.labels.push_back(nr.name);
      fam.reps.push_back(std::move(nr.rep));
    }
    require(!fam.reps.empty(), "ParseError", spec + ": no modules declared");
  }
  return fam;
}

void modules_section(Report& rep, const Algebra& A, const ModuleFamily& fam) {
  ReportSection& s = rep.section("modules");
  s.add("source", fam.source);
  s.add("count", static_cast<long long>(fam.reps.size()));
  ReportTable& t = s.table("module-dims");
  for (std::size_t m = 0; m < fam.reps.size(); ++m)
    for (int v = 0; v < A.quiver().vertex_count(); ++v)
      t.cell(fam.labels[m], A.quiver().vertex_name(v),
             static_cast<long long>(fam.reps[m].dims[v]));
}

// ---------------------------------------------------------------------------
// ext

Report cmd_ext(const std::string& path, const std::string& modules, int max_degree) {
  LoadedAlgebra in = load_algebra(path);
  Report rep;
  rep.command = "ext";
  rep.input_digest = in.digest;
  rep.param("input", path);
  rep.param("modules", modules);
  rep.param("max-degree", max_degree);

  algebra_section(rep, *in.A);
  ModuleFamily fam = module_family(in.A, modules);
  modules_section(rep, *in.A, fam);

  // Resolve one degree past the request so that truncated resolutions still
  // certify every requested degree; complete resolutions report honest zeros
  // beyond their length.
  ModelBundle mb = build_model(in.A, fam.reps, max_degree + 1);
  ExtTable tab = ext_table(mb.model->splitting(), max_degree);
  const int top = tab.complete ? max_degree : tab.max_degree;

  ReportSection& s = rep.section("ext");
  s.add("requested-degree", static_cast<long long>(max_degree));
  s.add("reported-degree", static_cast<long long>(top));
  s.add_flag("resolutions-complete", tab.complete);
  ReportTable& t = s.table("dimensions");
  const int nb = static_cast<int>(fam.reps.size());
  for (int i = 0; i < nb; ++i)
    for (int j = 0; j < nb; ++j) {
      const std::string row = "(" + fam.labels[i] + "," + fam.labels[j] + ")";
      for (int d = 0; d <= top; ++d) {
        const int dim = d <= tab.max_degree ? tab.dims[d][j][i] : 0;
        t.cell(row, std::to_string(d), static_cast<long long>(dim));
      }
    }
  return rep;
}

// ---------------------------------------------------------------------------
// ainf

Report cmd_ainf(const std::string& path, const std::string& modules, int max_degree,
                int max_arity) {
  LoadedAlgebra in = load_algebra(path);
  Report rep;
  rep.command = "ainf";
  rep.input_digest = in.digest;
  rep.param("input", path);
  rep.param("modules", modules);
  rep.param("max-degree", max_degree);
  rep.param("max-arity", max_arity);

  algebra_section(rep, *in.A);
  ModuleFamily fam = module_family(in.A, modules);
  modules_section(rep, *in.A, fam);

  ModelBundle mb = build_model(in.A, fam.reps, max_degree, SplitPolicy::Deterministic, max_arity);
  const Model& M = *mb.model;

  // Nonzero values of every m_n on block-chained tuples of non-identity
  // classes: one table per arity, rows the input tuple, columns the output
  // class, cells the coefficient.
  std::vector<int> gens;
  for (int g = 0; g < M.hcount(); ++g)
    if (!M.info(g).is_identity && M.dg().trusted_degree(M.info(g).deg)) gens.push_back(g);

  ReportSection& s = rep.section("higher-products");
  s.add("max-arity", static_cast<long long>(max_arity));
  s.add("classes", static_cast<long long>(gens.size()));
  long long untrusted_skipped = 0;
  for (int n = 2; n <= max_arity; ++n) {
    ReportTable t{"m" + std::to_string(n), {}};
    long long nonzero = 0;
    std::vector<int> tuple;
    // Depth-first enumeration of chained tuples (source block of each entry
    // matches the target block of the next one to compose).
    auto visit = [&](auto&& self) -> void {
      if (static_cast<int>(tuple.size()) == n) {
        if (!M.trusted_tuple(tuple)) {
          ++untrusted_skipped;
          return;
        }
        const Model::HValue& v = M.m(tuple);
        if (v.empty()) return;
        std::string row = "(";
        for (std::size_t i = 0; i < tuple.size(); ++i) {
          if (i) row += ",";
          row += M.hlabel(tuple[i]);
        }
        row += ")";
        for (const auto& [g, c] : v) t.cell(row, M.hlabel(g), scalar_str(c));
        ++nonzero;
        return;
      }
      for (int g : gens) {
        if (!tuple.empty() && M.info(tuple.back()).blk_b != M.info(g).blk_a) continue;
        tuple.push_back(g);
        self(self);
        tuple.pop_back();
      }
    };
    visit(visit);
    s.add("m" + std::to_string(n) + "-nonzero-tuples", nonzero);
    if (!t.cells.empty()) s.tables.push_back(std::move(t));
  }
  if (untrusted_skipped > 0) s.add("untrusted-tuples-skipped", untrusted_skipped);

  StasheffReport sr = check_stasheff(M, max_arity);
  ReportSection& ss = rep.section("stasheff");
  ss.add_flag("identities-hold", sr.ok);
  ss.add("residual", std::string(sr.ok ? "0" : "nonzero"));
  ss.add("tuples-checked", sr.tuples_checked);
  for (std::size_t i = 0; i < sr.violations.size(); ++i)
    ss.add("violation-" + std::to_string(i + 1), sr.violations[i]);
  return rep;
}

// ---------------------------------------------------------------------------
// reconstruct

Report cmd_reconstruct(const std::string& path) {
  LoadedAlgebra in = load_algebra(path);
  Report rep;
  rep.command = "reconstruct";
  rep.input_digest = in.digest;
  rep.param("input", path);

  algebra_section(rep, *in.A);
  ModelBundle mb = build_simples_model(in.A);
  ReconstructionResult rr = koszul_reconstruct(*mb.model);

  ReportSection& s = rep.section("reconstruction");
  s.add("vertices", static_cast<long long>(rr.quiver.vertex_count()));
  s.add("arrows", static_cast<long long>(rr.quiver.arrow_count()));
  s.add("relations", static_cast<long long>(rr.relations.size()));
  s.add("dimension", static_cast<long long>(rr.algebra.dim()));
  s.add_flag("dimensions-match", rr.dims_match);
  if (rr.quiver.arrow_count() > 0) {
    ReportTable& ta = s.table("arrows");
    for (int a = 0; a < rr.quiver.arrow_count(); ++a) {
      const Arrow& ar = rr.quiver.arrow(a);
      ta.cell(ar.name, "source", rr.quiver.vertex_name(ar.src));
      ta.cell(ar.name, "target", rr.quiver.vertex_name(ar.dst));
    }
  }
  if (!rr.relations.empty()) {
    ReportTable& tr = s.table("relations");
    for (std::size_t k = 0; k < rr.relations.size(); ++k)
      tr.cell("r" + std::to_string(k + 1), "relation", relation_str(rr.quiver, rr.relations[k]));
  }
  ReportTable& td = s.table("pair-dimensions");
  const std::vector<std::string> names = vertex_names(in.A->quiver());
  for (const auto& [i, j, din, dout] : rr.dim_table) {
    const std::string row = "(" + names[i] + "," + names[j] + ")";
    td.cell(row, "input", static_cast<long long>(din));
    td.cell(row, "reconstructed", static_cast<long long>(dout));
    td.cell(row, "diff", static_cast<long long>(dout - din));
  }
  return rep;
}

// ---------------------------------------------------------------------------
// qh

std::pair<Report, bool> cmd_qh(const std::string& path) {
  LoadedAlgebra in = load_algebra(path);
  Report rep;
  rep.command = "qh";
  rep.input_digest = in.digest;
  rep.param("input", path);

  algebra_section(rep, *in.A);
  const auto [poset, source] = weight_order(*in.A);
  order_section(rep, *in.A, poset, source);
  const std::vector<std::string> names = vertex_names(in.A->quiver());

  StandardSystem S = standard_modules(*in.A, poset);
  QhDiagnosis diag = is_quasi_hereditary(S);

  ReportSection& sv = rep.section("verdict");
  sv.add_flag("quasi-hereditary", diag.qh);
  sv.add_flag("ext-vanishing", diag.ext_vanishing);
  sv.add_flag("projectives-filtered", diag.regular_filtered);
  sv.add_flag("counts-consistent", diag.counts_consistent);
  for (std::size_t i = 0; i < diag.failures.size(); ++i)
    sv.add("failure-" + std::to_string(i + 1), diag.failures[i]);
  ReportTable& tdg = sv.table("endomorphisms");
  for (std::size_t v = 0; v < names.size(); ++v) {
    tdg.cell(names[v], "dim-end-delta", static_cast<long long>(diag.end_dims[v]));
    tdg.cell(names[v], "top-multiplicity", static_cast<long long>(diag.top_mult[v]));
  }

  ReportSection& sd = rep.section("standard-modules");
  ReportTable& td = sd.table("delta-dims");
  ReportTable& tn = sd.table("nabla-dims");
  for (std::size_t i = 0; i < names.size(); ++i)
    for (std::size_t v = 0; v < names.size(); ++v) {
      td.cell("D" + names[i], names[v], static_cast<long long>(S.delta[i].dims[v]));
      tn.cell("N" + names[i], names[v], static_cast<long long>(S.nabla[i].dims[v]));
    }

  if (!diag.qh) return {rep, false};

  EssentialOrder eo = essential_order(S);
  ReportSection& se = rep.section("essential-order");
  se.add_flag("routes-agree", eo.agree);
  se.add("relations", covers_str(eo.from_multiplicities, names));
  se.add_flag("equals-input-order", eo.from_multiplicities == poset);

  std::vector<long long> ell = conde_multiplicities(S);
  ReportSection& sc = rep.section("multiplicities");
  ReportTable& tc = sc.table("ell");
  for (std::size_t v = 0; v < names.size(); ++v) tc.cell(names[v], "ell", ell[v]);
  sc.add_flag("radical-criterion", conde_criterion(S));
  return {rep, true};
}

// ---------------------------------------------------------------------------
// borel

Report cmd_borel(const std::string& path, int max_degree, int max_arity) {
  LoadedAlgebra in = load_algebra(path);
  Report rep;
  rep.command = "borel";
  rep.input_digest = in.digest;
  rep.param("input", path);
  rep.param("max-degree", max_degree);
  rep.param("max-arity", max_arity);

  algebra_section(rep, *in.A);
  const auto [poset, source] = weight_order(*in.A);
  order_section(rep, *in.A, poset, source);
  const std::vector<std::string> names = vertex_names(in.A->quiver());

  StandardSystem S = standard_modules(*in.A, poset);
  ModelBundle mb = build_model(in.A, S.delta, max_degree);
  BorelData bd = borel_data(S, *mb.model, max_arity);

  ReportSection& sb = rep.section("borel-subalgebra");
  const Quiver& bq = bd.borel.quiver();
  sb.add("vertices", static_cast<long long>(bq.vertex_count()));
  sb.add("arrows", static_cast<long long>(bq.arrow_count()));
  sb.add("relations", static_cast<long long>(bd.borel.relations().size()));
  sb.add("dimension", static_cast<long long>(bd.borel.dim()));
  if (bq.arrow_count() > 0) {
    ReportTable& ta = sb.table("arrows");
    for (int a = 0; a < bq.arrow_count(); ++a) {
      const Arrow& ar = bq.arrow(a);
      ta.cell(ar.name, "source", bq.vertex_name(ar.src));
      ta.cell(ar.name, "target", bq.vertex_name(ar.dst));
    }
  }
  if (!bd.borel.relations().empty()) {
    ReportTable& tr = sb.table("relations");
    for (std::size_t k = 0; k < bd.borel.relations().size(); ++k)
      tr.cell("r" + std::to_string(k + 1), "relation", relation_str(bq, bd.borel.relations()[k]));
  }

  CoringData cd = roiter_coring(bd);
  ReportSection& sc = rep.section("coring");
  sc.add("dim-v", static_cast<long long>(cd.dim_v));
  sc.add("dim-vbar", static_cast<long long>(bd.vbar.size()));
  sc.add_flag("differential-well-defined", bd.d0_well_defined);
  sc.add("d-squared-residual", std::string(bd.d_squared_zero ? "0" : "nonzero"));
  sc.add_flag("group-like", cd.group_like);
  sc.add_flag("counital", cd.counital);
  sc.add_flag("coassociative", cd.coassociative);
  sc.add_flag("right-linear", cd.right_linear);
  if (!bd.gens.empty()) {
    ReportTable& tv = sc.table("vbar-dims");
    std::map<int, long long> per_gen;
    for (const VbarBasisElt& e : bd.vbar) per_gen[e.gen] += 1;
    for (std::size_t g = 0; g < bd.gens.size(); ++g)
      tv.cell(bd.gens[g].label, "dim", per_gen[static_cast<int>(g)]);
  }

  RightAlgebraData ra = right_algebra(cd);
  ReportSection& sr = rep.section("right-algebra");
  sr.add("dimension", static_cast<long long>(ra.dim_r));
  sr.add_flag("unit", ra.unit_ok);
  sr.add_flag("associative", ra.associative);
  sr.add_flag("base-embeds-as-subalgebra", ra.iota_homomorphism);
  sr.add_flag("projective-right-module", ra.right_projective);
  if (ra.radical_exact) {
    sr.add("radical-dim", static_cast<long long>(ra.radical_dim));
    sr.add_flag("semisimple-quotient-certified", ra.semisimple_certified);
    sr.add("primitive-idempotents", static_cast<long long>(ra.primitive_idempotents));
  }
  ReportTable& ti = sr.table("induced-modules");
  for (std::size_t v = 0; v < names.size(); ++v) {
    ti.cell(names[v], "dim-R-tensor-L", static_cast<long long>(ra.induced_dims[v]));
    ti.cell(names[v], "expected", static_cast<long long>(ra.induced_expected[v]));
    if (ra.radical_exact && !ra.top_dims.empty())
      ti.cell(names[v], "top-dim", static_cast<long long>(ra.top_dims[v]));
  }
  ReportSection& si = rep.section("induction");
  si.add_flag("induced-dims-match", ra.induced_match);
  ReportTable& ts = si.table("projective-summands");
  std::map<int, long long> mult;
  for (int v : ra.summand_vertices) mult[v] += 1;
  for (std::size_t v = 0; v < names.size(); ++v) ts.cell(names[v], "multiplicity", mult[(int)v]);
  ReportTable& tl = si.table("ell");
  for (std::size_t v = 0; v < names.size(); ++v) tl.cell(names[v], "ell", bd.ell[v]);
  return rep;
}

// ---------------------------------------------------------------------------
// conde-poset

Report cmd_conde_poset(const std::string& path) {
  const std::string text = read_text_file(path);
  const ParsedPoset pp = parse_poset(text, path);
  Report rep;
  rep.command = "conde-poset";
  rep.input_digest = fnv64_digest(text);
  rep.param("input", path);

  ReportSection& s = rep.section("poset");
  s.add("elements", static_cast<long long>(pp.poset.size()));
  s.add("relations", covers_str(pp.poset, pp.names));

  const std::vector<long long> ell = conde_poset(pp.poset);
  ReportSection& sm = rep.section("multiplicities");
  ReportTable& t = sm.table("ell");
  for (std::size_t v = 0; v < pp.names.size(); ++v) {
    t.cell(pp.names[v], "height", static_cast<long long>(pp.heights[v]));
    t.cell(pp.names[v], "ell", ell[v]);
  }
  return rep;
}

// ---------------------------------------------------------------------------
// enumerate

Report cmd_enumerate(const std::string& path, int cap) {
  LoadedAlgebra in = load_algebra(path);
  Report rep;
  rep.command = "enumerate";
  rep.input_digest = in.digest;
  rep.param("input", path);
  rep.param("cap", cap);

  algebra_section(rep, *in.A);
  std::vector<QhStructure> st = enumerate_qh_structures(*in.A, cap);
  const std::vector<std::string> names = vertex_names(in.A->quiver());

  ReportSection& s = rep.section("enumeration");
  s.add("quasi-hereditary-structures", static_cast<long long>(st.size()));
  if (!st.empty()) {
    ReportTable& t = s.table("representative-orders");
    for (std::size_t k = 0; k < st.size(); ++k)
      t.cell("s" + std::to_string(k + 1), "order", chain_str(st[k].order, names));
  }
  return rep;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quiver-algebra homological workbench"};
  app.require_subcommand(1);

  std::string format = "text";
  app.add_option("--format", format, "output format: text or records")
      ->check(CLI::IsMember({"text", "records"}));

  std::string file;
  std::string modules = "simples";
  int max_degree = 6;
  int max_arity = 4;
  int cap = 7;

  CLI::App* c_ext = app.add_subcommand("ext", "Ext dimension table");
  c_ext->add_option("file", file, "algebra definition file")->required();
  c_ext->add_option("--modules", modules,
                    "simples | standards | path to a module-list file (default simples)");
  c_ext->add_option("--max-degree", max_degree, "resolution truncation degree (default 6)");

  CLI::App* c_ainf = app.add_subcommand("ainf", "higher products and Stasheff audit");
  c_ainf->add_option("file", file, "algebra definition file")->required();
  c_ainf->add_option("--modules", modules,
                     "simples | standards | path to a module-list file (default simples)");
  c_ainf->add_option("--max-degree", max_degree, "resolution truncation degree (default 6)");
  c_ainf->add_option("--max-arity", max_arity, "largest arity reported/audited (default 4)");

  CLI::App* c_rec = app.add_subcommand("reconstruct", "Koszul-dual reconstruction from simples");
  c_rec->add_option("file", file, "algebra definition file")->required();

  CLI::App* c_qh = app.add_subcommand("qh", "quasi-hereditary analysis");
  c_qh->add_option("file", file, "algebra definition file (order line used when present)")
      ->required();

  int b_max_degree = 8;
  int b_max_arity = 0;
  CLI::App* c_borel = app.add_subcommand("borel", "Borel subalgebra / coring / right algebra");
  c_borel->add_option("file", file, "algebra definition file (order line used when present)")
      ->required();
  c_borel->add_option("--max-degree", b_max_degree, "resolution truncation degree (default 8)");
  c_borel->add_option("--max-arity", b_max_arity,
                      "product arity cap; 0 picks max(2, vertex count)");

  CLI::App* c_cp = app.add_subcommand("conde-poset", "multiplicity recursion on a poset file");
  c_cp->add_option("file", file, "poset definition file")->required();

  CLI::App* c_enum = app.add_subcommand("enumerate", "quasi-hereditary structures");
  c_enum->add_option("file", file, "algebra definition file")->required();
  c_enum->add_option("--cap", cap, "vertex-count cap for enumeration (default 7)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    Report rep;
    bool domain_ok = true;
    std::string domain_error;
    if (c_ext->parsed()) {
      rep = cmd_ext(file, modules, max_degree);
    } else if (c_ainf->parsed()) {
      rep = cmd_ainf(file, modules, max_degree, max_arity);
    } else if (c_rec->parsed()) {
      rep = cmd_reconstruct(file);
    } else if (c_qh->parsed()) {
      auto [r, qh] = cmd_qh(file);
      rep = std::move(r);
      if (!qh) {
        domain_ok = false;
        domain_error = "NotQuasiHereditary: the input is not quasi-hereditary "
                       "for the given order (see the verdict section)";
      }
    } else if (c_borel->parsed()) {
      rep = cmd_borel(file, b_max_degree, b_max_arity);
    } else if (c_cp->parsed()) {
      rep = cmd_conde_poset(file);
    } else if (c_enum->parsed()) {
      rep = cmd_enumerate(file, cap);
    }
    std::cout << (format == "records" ? rep.render_records() : rep.render_text());
    if (!domain_ok) {
      std::cerr << "error: " << domain_error << "\n";
      return 1;
    }
    return 0;
  } catch (const QwError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == "ParseError" ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
