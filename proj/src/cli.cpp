#include "ccalc/cli.hpp"

#include <fstream>
#include <memory>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "ccalc/coding.hpp"
#include "ccalc/error.hpp"
#include "ccalc/formula.hpp"
#include "ccalc/heyting.hpp"
#include "ccalc/hfset.hpp"
#include "ccalc/kripke.hpp"
#include "ccalc/machines.hpp"
#include "ccalc/subject.hpp"
#include "ccalc/truthtable.hpp"
#include "ccalc/workspace.hpp"

namespace ccalc::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw domain_error("cannot read file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::size_t p = 0;
  while (p <= s.size()) {
    std::size_t q = s.find(',', p);
    if (q == std::string::npos) q = s.size();
    std::string item = s.substr(p, q - p);
    if (!item.empty()) out.push_back(item);
    p = q + 1;
  }
  return out;
}

// one lattice source must be picked: a chain size, a poset file taken as
// the carrier, or a poset file whose downsets become the carrier
struct LatticeSource {
  int chain_n = 0;
  std::string lattice_path;
  std::string downsets_path;

  void attach(CLI::App* cmd) {
    cmd->add_option("--chain", chain_n, "chain with N elements");
    cmd->add_option("--lattice", lattice_path, "poset file used as the carrier");
    cmd->add_option("--downsets", downsets_path,
                    "poset file whose downsets form the carrier");
  }

  heyting::HeytingAlgebra build() const {
    int given = (chain_n > 0) + !lattice_path.empty() + !downsets_path.empty();
    if (given != 1)
      throw domain_error("pick exactly one of --chain, --lattice, --downsets");
    if (chain_n > 0) return heyting::HeytingAlgebra::chain(chain_n);
    if (!lattice_path.empty()) {
      std::istringstream in(read_file(lattice_path));
      return heyting::HeytingAlgebra::from_poset(heyting::parse_poset_file(in));
    }
    std::istringstream in(read_file(downsets_path));
    return heyting::HeytingAlgebra::downset_algebra(heyting::parse_poset_file(in));
  }

  heyting::FinitePoset poset_only() const {
    int given = (chain_n > 0) + !lattice_path.empty() + !downsets_path.empty();
    if (given != 1)
      throw domain_error("pick exactly one of --chain, --lattice, --downsets");
    return build().poset();
  }
};

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"context-calculus toolkit"};
  app.name("ccalc");
  app.require_subcommand(1);

  // ordinal
  int ord_k = 0;
  auto* c_ordinal = app.add_subcommand("ordinal", "print a von Neumann ordinal");
  c_ordinal->add_option("k", ord_k, "which ordinal")->required();
  c_ordinal->callback([&] {
    if (ord_k < 0 || ord_k > 20)
      throw domain_error("printable ordinals are 0..20");
    out << hf::ord_of_nat(ord_k).set().str() << "\n";
  });

  // parse
  std::string parse_text;
  bool parse_code = false;
  auto* c_parse = app.add_subcommand("parse", "parse a formula, print it back");
  c_parse->add_option("formula", parse_text, "formula text")->required();
  c_parse->add_flag("--code", parse_code, "print the structural number instead");
  c_parse->callback([&] {
    logic::Formula f = logic::parse_formula(parse_text);
    if (parse_code)
      out << logic::encode(f) << "\n";
    else
      out << f.str() << "\n";
  });

  // table
  std::string table_text;
  auto* c_table = app.add_subcommand("table", "print a classical truth table");
  c_table->add_option("formula", table_text, "formula text")->required();
  c_table->callback([&] {
    logic::Formula f = logic::parse_formula(table_text);
    out << logic::table_of(f).str(f.str());
  });

  // nform
  std::string nform_text;
  auto* c_nform = app.add_subcommand("nform", "rewrite into the N-only basis");
  c_nform->add_option("formula", nform_text, "formula text")->required();
  c_nform->callback([&] {
    logic::Formula f = logic::parse_formula(nform_text);
    out << logic::to_n_form(f).str() << "\n";
  });

  // countermodel
  std::string cm_text;
  int cm_max_worlds = 4;
  bool cm_serial = false;
  auto* c_cm = app.add_subcommand("countermodel",
                                  "search for a refuting Kripke model");
  c_cm->add_option("formula", cm_text, "formula text")->required();
  c_cm->add_option("--max-worlds", cm_max_worlds, "world budget, 1..5");
  c_cm->add_flag("--serial", cm_serial, "disable the parallel sweep");
  c_cm->callback([&] {
    logic::Formula f = logic::parse_formula(cm_text);
    auto found = kripke::countermodel_search(
        f, cm_max_worlds, cm_serial ? ExecMode::Serial : ExecMode::Parallel);
    if (found)
      out << found->str();
    else
      out << "valid on all frames with at most " << cm_max_worlds
          << " worlds\n";
  });

  // heyting
  auto* c_heyting = app.add_subcommand("heyting", "finite Heyting algebras");
  c_heyting->require_subcommand(1);

  LatticeSource check_src;
  auto* c_check = c_heyting->add_subcommand("check", "run the algebra law suite");
  check_src.attach(c_check);
  c_check->callback([&] {
    heyting::HeytingAlgebra h = check_src.build();
    out << h.check_laws().str(h);
  });

  LatticeSource imp_src;
  std::string imp_a, imp_b;
  auto* c_imp = c_heyting->add_subcommand("imp", "evaluate an implication");
  imp_src.attach(c_imp);
  c_imp->add_option("a", imp_a, "left element label")->required();
  c_imp->add_option("b", imp_b, "right element label")->required();
  c_imp->callback([&] {
    heyting::HeytingAlgebra h = imp_src.build();
    out << h.label(h.imp(h.index(imp_a), h.index(imp_b))) << "\n";
  });

  LatticeSource quo_src;
  std::string quo_seed, quo_principal;
  auto* c_quo = c_heyting->add_subcommand("quotient", "quotient by a filter");
  quo_src.attach(c_quo);
  c_quo->add_option("--filter", quo_seed, "comma list of generating labels");
  c_quo->add_option("--principal", quo_principal, "generator of a principal filter");
  c_quo->callback([&] {
    heyting::HeytingAlgebra h = quo_src.build();
    if (quo_seed.empty() == quo_principal.empty())
      throw domain_error("pick exactly one of --filter, --principal");
    heyting::Filter f;
    if (!quo_principal.empty()) {
      f = heyting::principal_filter(h, h.index(quo_principal));
    } else {
      std::vector<int> seed;
      for (const std::string& l : split_csv(quo_seed)) seed.push_back(h.index(l));
      f = heyting::generate_filter(h, seed);
    }
    out << "filter:";
    for (int m : f.members) out << " " << h.label(m);
    out << "\n";
    heyting::QuotientResult q = heyting::quotient(h, f);
    out << "classes: " << q.algebra.size() << "\n";
    for (std::size_t c = 0; c < q.algebra.size(); ++c) {
      out << q.algebra.label(static_cast<int>(c)) << ":";
      for (std::size_t i = 0; i < h.size(); ++i)
        if (q.class_of[i] == static_cast<int>(c))
          out << " " << h.label(static_cast<int>(i));
      out << "\n";
    }
    out << q.algebra.check_laws().str(q.algebra);
  });

  LatticeSource hasse_src;
  auto* c_hasse = c_heyting->add_subcommand("hasse", "emit the Hasse diagram as DOT");
  hasse_src.attach(c_hasse);
  c_hasse->callback([&] {
    out << heyting::to_dot(hasse_src.poset_only(), "hasse");
  });

  // merge
  std::string merge_script;
  auto* c_merge = app.add_subcommand("merge", "replay a derivation script");
  c_merge->add_option("--script", merge_script, "script file")->required();
  c_merge->callback([&] {
    workspace::ScriptResult r = workspace::run_script(read_file(merge_script));
    for (const std::string& t : r.triples) out << t << "\n";
    out << r.ws.str();
  });

  // chain
  auto* c_chain = app.add_subcommand("chain", "citation and context chains");
  c_chain->require_subcommand(1);

  std::string ctx_base = "A";
  std::string ctx_axioms;
  int ctx_steps = 1;
  std::string ctx_rebase;
  auto* c_ctx = c_chain->add_subcommand("context", "axiom-accumulating chain");
  c_ctx->add_option("--base", ctx_base, "base label");
  c_ctx->add_option("--axioms", ctx_axioms, "comma list of starting axioms");
  c_ctx->add_option("--steps", ctx_steps, "steps to apply");
  c_ctx->add_option("--rebase", ctx_rebase, "after stepping, restart here");
  c_ctx->callback([&] {
    if (ctx_steps < 0) throw domain_error("steps must be nonnegative");
    workspace::ContextChain chain(ctx_base, split_csv(ctx_axioms));
    for (int i = 0; i < ctx_steps; ++i) chain = chain.step();
    out << chain.str();
    if (!ctx_rebase.empty()) out << chain.rebase(ctx_rebase).str();
  });

  std::string cite_label = "w1";
  std::string cite_assertions;
  std::string cite_resolve;
  auto* c_cite = c_chain->add_subcommand("cite", "citation chain");
  c_cite->add_option("--label", cite_label, "chain label");
  c_cite->add_option("--assertions", cite_assertions,
                     "comma list, first starts the chain")
      ->required();
  c_cite->add_option("--resolve", cite_resolve, "name to resolve afterwards");
  c_cite->callback([&] {
    std::vector<std::string> as = split_csv(cite_assertions);
    if (as.empty()) throw domain_error("need at least one assertion");
    workspace::CitationChain chain =
        workspace::CitationChain::start(cite_label, as[0]);
    for (std::size_t i = 1; i < as.size(); ++i) chain = chain.cite(as[i]);
    out << chain.str();
    if (!cite_resolve.empty()) {
      auto idx = chain.resolve(cite_resolve);
      if (idx)
        out << "resolve " << cite_resolve << ": "
            << chain.records()[*idx].str() << "\n";
      else
        out << "resolve " << cite_resolve << ": not found\n";
    }
  });

  // ledger
  std::int64_t ledger_n = 0;
  auto* c_ledger = app.add_subcommand("ledger", "external witness count n^2 - n");
  c_ledger->add_option("n", ledger_n, "name count")->required();
  c_ledger->callback([&] { out << subject::ledger(ledger_n) << "\n"; });

  // homogeneity
  std::int64_t hom_n = 0;
  auto* c_hom = app.add_subcommand("homogeneity", "determinacy of 1/(n^2 - n)");
  c_hom->add_option("n", hom_n, "category count")->required();
  c_hom->callback([&] { out << subject::homogeneity_flag(hom_n).str() << "\n"; });

  // affinity
  std::string aff_left, aff_right;
  int aff_shift = 0;
  auto* c_aff = app.add_subcommand("affinity", "aligned class pairing");
  c_aff->add_option("--left", aff_left, "comma list")->required();
  c_aff->add_option("--right", aff_right, "comma list")->required();
  c_aff->add_option("--shift", aff_shift, "rearticulation shift");
  c_aff->callback([&] {
    subject::AffinityPairing p =
        subject::affinity(split_csv(aff_left), split_csv(aff_right));
    if (aff_shift > 0) p = subject::rearticulate(p, aff_shift);
    out << p.str();
  });

  // diag
  auto* c_diag = app.add_subcommand("diag", "diagonal constructions");
  c_diag->require_subcommand(1);

  std::string diag_file;
  auto* c_dtable = c_diag->add_subcommand("table", "antidiagonal of a value table");
  c_dtable->add_option("file", diag_file, "one row of numbers per line")
      ->required();
  c_dtable->callback([&] {
    std::istringstream in(read_file(diag_file));
    std::vector<std::vector<std::uint64_t>> rows;
    std::string line;
    while (std::getline(in, line)) {
      for (char& ch : line)
        if (ch == ',') ch = ' ';
      std::istringstream ls(line);
      std::vector<std::uint64_t> row;
      std::uint64_t v;
      while (ls >> v) row.push_back(v);
      if (!row.empty()) rows.push_back(std::move(row));
    }
    if (rows.empty()) throw domain_error("empty table");
    std::vector<std::uint64_t> g =
        logic::diag_table(rows, rows[0].size() - 1);
    out << "g:";
    for (std::uint64_t v : g) out << " " << v;
    out << "\n";
  });

  std::string fix_text, fix_hole;
  auto* c_fix = c_diag->add_subcommand("fixpoint", "diagonal fixed point");
  c_fix->add_option("template", fix_text, "formula with a one-use hole atom")
      ->required();
  c_fix->add_option("--hole", fix_hole, "hole atom name")->required();
  c_fix->callback([&] {
    logic::CodedFormula cf = logic::fixed_point(
        logic::DiagTemplate{logic::parse_formula(fix_text), fix_hole});
    out << "fixed point: " << cf.formula.str() << "\n";
    out << "code: " << cf.code << "\n";
  });

  // machines
  auto* c_mach = app.add_subcommand("machines", "small Turing machines");
  c_mach->require_subcommand(1);

  std::string mrun_file, mrun_input;
  std::int64_t mrun_budget = 1000;
  auto* c_mrun = c_mach->add_subcommand("run", "run one machine");
  c_mrun->add_option("file", mrun_file, "machine file")->required();
  c_mrun->add_option("--input", mrun_input, "tape digits, default blank");
  c_mrun->add_option("--budget", mrun_budget, "step budget");
  c_mrun->callback([&] {
    machines::MachineSpec m = machines::parse_machine_file(read_file(mrun_file));
    out << machines::run(m, mrun_input, mrun_budget).str();
  });

  int menum_symbols = 2;
  std::int64_t menum_budget = 1000;
  std::string menum_out;
  bool menum_serial = false;
  auto* c_menum = c_mach->add_subcommand("enumerate", "census of a machine class");
  c_menum->add_option("--symbols", menum_symbols, "2 or 3");
  c_menum->add_option("--budget", menum_budget, "step budget, 1..10000");
  c_menum->add_option("--out", menum_out, "also write the report here");
  c_menum->add_flag("--serial", menum_serial, "disable the parallel sweep");
  c_menum->callback([&] {
    machines::EnumReport rep = machines::enumerate_specs(
        2, menum_symbols, menum_budget,
        menum_serial ? ExecMode::Serial : ExecMode::Parallel);
    out << rep.str();
    if (!menum_out.empty()) {
      std::ofstream f(menum_out, std::ios::binary);
      if (!f) throw domain_error("cannot write file: " + menum_out);
      f << rep.str();
    }
  });

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  } catch (const parse_error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const domain_error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace ccalc::cli
