#pragma once

#include <cstdlib>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "correspondence.hpp"
#include "io.hpp"
#include "model_check.hpp"
#include "mv_structure.hpp"
#include "pco_ops.hpp"

namespace cyclord::cli {

namespace detail {

inline std::vector<int> parse_unit_vector(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw std::invalid_argument("invalid unit vector component '" + item + "'");
    }
  }
  if (out.empty()) throw std::invalid_argument("empty unit vector");
  return out;
}

inline int default_cap() {
  if (const char* env = std::getenv("CYCLORD_MAX_SIZE")) {
    try {
      return std::max(1, std::stoi(env));
    } catch (const std::exception&) {
    }
  }
  return 24;
}

inline FinitePco finite_of(const Structure& s) {
  if (s.pco) return *s.pco;
  if (s.lq && s.lq->is_finite()) return s.lq->to_finite();
  throw std::invalid_argument("structure does not have a finite p.c.o. carrier");
}

inline void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty() || out_path == "-") {
    out << text;
    return;
  }
  std::ofstream f(out_path);
  if (!f) throw std::runtime_error("cannot write " + out_path);
  f << text;
}

inline nlohmann::json invariants_json(const InvariantVector& v) {
  nlohmann::json j;
  j["kind"] = v.kind;
  j["size"] = v.size;
  if (v.shape) j["shape"] = *v.shape;
  if (v.is_discrete) j["discrete"] = *v.is_discrete;
  if (v.eps_position) j["eps_position"] = *v.eps_position;
  if (v.c_archimedean) j["c_archimedean"] = *v.c_archimedean;
  if (v.c_regular) j["c_regular"] = *v.c_regular;
  if (!v.d_spectrum.empty()) {
    nlohmann::json d;
    for (const auto& [qk, val] : v.d_spectrum) d[std::to_string(qk.first) + "," + std::to_string(qk.second)] = val;
    j["d_spectrum"] = d;
  }
  if (!v.zakon.empty()) {
    nlohmann::json z;
    for (const auto& [p, val] : v.zakon) z[std::to_string(p)] = val;
    j["zakon"] = z;
  }
  j["torsion_factors"] = v.torsion_factors;
  return j;
}

}  // namespace detail

/// Command dispatch; returns the process exit code.  0 = success / property
/// holds, 1 = property fails (witness printed), 2 = usage or parse error.
inline int dispatch(const std::vector<std::string>& args, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"finite MV-algebras, cyclically ordered groups, and their correspondence"};
  app.require_subcommand(1);

  auto* make = app.add_subcommand("make", "construct a structure file");
  std::string make_gamma_arg, make_wound_arg, make_out;
  int make_cyclic_arg = 0;
  std::vector<std::string> make_product_arg;
  make->add_option("--gamma", make_gamma_arg, "interval algebra of the box [0,u], u comma-separated");
  make->add_option("--cyclic", make_cyclic_arg, "cyclic group Z/nZ with the canonical order");
  make->add_option("--wound", make_wound_arg, "lattice quotient by the unit vector, comma-separated");
  make->add_option("--product", make_product_arg, "componentwise product of structure files")->expected(2, -1);
  make->add_option("out", make_out, "output file ('-' for stdout)")->required();

  auto* check = app.add_subcommand("check", "run a verification suite on a structure file");
  bool chk_mv = false, chk_pco = false, chk_ac = false, chk_pred = false;
  std::string check_file;
  check->add_flag("--mv-axioms", chk_mv, "exhaustive MV1-MV6 scan");
  check->add_flag("--pco-axioms", chk_pco, "exhaustive p.c.o. axiom scan");
  check->add_flag("--ac-class", chk_ac, "membership of the canonical-MV-algebra class");
  check->add_flag("--predicates", chk_pred, "structural predicate report");
  check->add_option("file", check_file, "structure file")->required();

  auto* convert = app.add_subcommand("convert", "apply a correspondence map");
  bool cv_cfc = false, cv_chain = false, cv_canonical = false, cv_wound = false, cv_unwound = false;
  std::string convert_in, convert_out;
  int width_cap = 4;
  convert->add_flag("--co-from-chain", cv_cfc, "cyclically ordered group of an MV-chain");
  convert->add_flag("--chain-from-co", cv_chain, "MV-chain of a finite cyclically ordered group");
  convert->add_flag("--canonical-mv", cv_canonical, "canonical MV-algebra of a p.c.o. group");
  convert->add_flag("--wound-round", cv_wound, "associated cyclically ordered structure of an MV-algebra");
  convert->add_flag("--unwound", cv_unwound, "unwound description of a finite cyclically ordered group");
  convert->add_option("--width-cap", width_cap, "decomposition width bound for --wound-round");
  convert->add_option("in", convert_in, "input structure file")->required();
  convert->add_option("out", convert_out, "output file ('-' for stdout)");

  auto* iso = app.add_subcommand("iso", "decide isomorphism of two structure files");
  std::string iso_a, iso_b;
  int iso_cap = detail::default_cap();
  iso->add_option("a", iso_a, "first structure file")->required();
  iso->add_option("b", iso_b, "second structure file")->required();
  iso->add_option("--cap", iso_cap, "size cap for the search");

  auto* report = app.add_subcommand("report", "emit the first-order invariant vector");
  std::string report_file;
  InvariantBounds bounds;
  report->add_option("file", report_file, "structure file")->required();
  report->add_option("--q-max", bounds.q_max, "largest prime power in the D spectrum");
  report->add_option("--p-max", bounds.p_max, "largest prime for the Zakon invariants");

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("cyclord");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (make->parsed()) {
      const int chosen = (!make_gamma_arg.empty()) + (make_cyclic_arg > 0) + (!make_wound_arg.empty()) + (!make_product_arg.empty());
      if (chosen != 1) {
        err << "make: choose exactly one of --gamma/--cyclic/--wound/--product\n";
        return 2;
      }
      Structure s;
      if (!make_gamma_arg.empty()) {
        s.kind = Structure::Kind::Mv;
        s.mv = make_gamma(detail::parse_unit_vector(make_gamma_arg));
      } else if (make_cyclic_arg > 0) {
        s.kind = Structure::Kind::Co;
        s.pco = make_cyclic_group(make_cyclic_arg);
      } else if (!make_wound_arg.empty()) {
        s.kind = Structure::Kind::Pco;
        s.lq = wound_round(detail::parse_unit_vector(make_wound_arg));
      } else {
        std::vector<Structure> factors;
        for (const auto& f : make_product_arg) factors.push_back(load_structure(f));
        const bool all_mv = std::all_of(factors.begin(), factors.end(), [](const Structure& f) { return f.mv.has_value(); });
        if (all_mv) {
          s.kind = Structure::Kind::Mv;
          MvAlgebra acc = *factors[0].mv;
          for (std::size_t i = 1; i < factors.size(); ++i) acc = product(acc, *factors[i].mv);
          s.mv = std::move(acc);
        } else {
          s.kind = Structure::Kind::Pco;
          FinitePco acc = detail::finite_of(factors[0]);
          for (std::size_t i = 1; i < factors.size(); ++i) acc = make_product_pco(acc, detail::finite_of(factors[i]));
          s.pco = std::move(acc);
        }
      }
      detail::emit(serialize_structure(s), make_out, out);
      return 0;
    }

    if (check->parsed()) {
      if (chk_mv + chk_pco + chk_ac + chk_pred != 1) {
        err << "check: choose exactly one of --mv-axioms/--pco-axioms/--ac-class/--predicates\n";
        return 2;
      }
      const Structure s = load_structure(check_file);
      if (chk_mv) {
        if (!s.mv) { err << "check --mv-axioms: input is not an mv structure\n"; return 2; }
        const AxiomReport rep = check_mv_axioms(*s.mv);
        out << rep.summary();
        return rep.all_pass() ? 0 : 1;
      }
      if (chk_pco) {
        if (s.mv) { err << "check --pco-axioms: input is not a p.c.o. structure\n"; return 2; }
        if (s.lq && !s.lq->is_finite()) {
          out << "lattice quotient: strict/cyclic/order/compatible hold by construction\n";
          return 0;
        }
        const FinitePco c = detail::finite_of(s);
        const PcoAxiomReport rep = check_pco_axioms(c);
        out << "strict: " << (rep.strict ? "pass" : "FAIL") << "\ncyclic: " << (rep.cyclic ? "pass" : "FAIL")
            << "\norder per base point: " << (rep.order_per_base ? "pass" : "FAIL")
            << "\ncompatible: " << (rep.compatible ? "pass" : "FAIL") << "\ncyclically ordered: " << (rep.is_co ? "yes" : "no") << "\n";
        if (!rep.witness.empty()) {
          out << "witness: (";
          for (std::size_t i = 0; i < rep.witness.size(); ++i) out << (i ? "," : "") << rep.witness[i];
          out << ")\n";
        }
        return rep.all_pass() ? 0 : 1;
      }
      if (chk_ac) {
        if (s.mv) { err << "check --ac-class: input is not a p.c.o. structure\n"; return 2; }
        AcClassReport rep;
        if (s.lq && !s.lq->is_finite()) rep = check_ac_class(*s.lq);
        else rep = check_ac_class(detail::finite_of(s));
        out << "condition 1: " << (rep.cond1 ? "pass" : "FAIL " + rep.witness1) << "\n"
            << "condition 2: " << (rep.cond2 ? "pass" : "FAIL " + rep.witness2) << "\n"
            << "condition 3: " << (rep.cond3 ? "pass" : "FAIL " + rep.witness3) << "\n"
            << "condition 4: " << (rep.cond4 ? "pass" : "FAIL " + rep.witness4) << "\n";
        return rep.all_pass() ? 0 : 1;
      }
      // predicates
      if (s.mv) {
        const MvAlgebra& a = *s.mv;
        const AlgebraPredicates p = algebra_predicates(a);
        out << "shape: " << to_string(shape_classify(a)) << "\n"
            << "chain: " << p.is_chain << "\natomic: " << p.is_atomic << "\natomless: " << p.is_atomless
            << "\nhyperarchimedean: " << p.is_hyperarchimedean << "\nprojectable: " << p.is_projectable << "\n";
        if (p.is_chain) {
          out << "regular: " << chain_regular(a) << "\n";
          const ChainTorsion t = torsion_subgroup(a);
          out << "torsion elements:";
          for (int x : t.elements) out << " " << x;
          out << "\n";
        }
        return 0;
      }
      const FinitePco c = detail::finite_of(s);
      const CoPredicates p = co_predicates(c);
      out << "c-archimedean: " << p.c_archimedean << "\ndiscrete: " << p.discrete << "\nc-regular: " << p.c_regular << "\n";
      return 0;
    }

    if (convert->parsed()) {
      if (cv_cfc + cv_chain + cv_canonical + cv_wound + cv_unwound != 1) {
        err << "convert: choose exactly one conversion\n";
        return 2;
      }
      const Structure s = load_structure(convert_in);
      Structure result;
      if (cv_cfc) {
        if (!s.mv) { err << "convert --co-from-chain: input is not an mv structure\n"; return 2; }
        result.kind = Structure::Kind::Co;
        result.pco = co_from_chain(*s.mv);
      } else if (cv_chain) {
        if (s.mv) { err << "convert --chain-from-co: input is not a p.c.o. structure\n"; return 2; }
        result.kind = Structure::Kind::Mv;
        result.mv = chain_from_co(detail::finite_of(s));
      } else if (cv_canonical) {
        if (s.mv) { err << "convert --canonical-mv: input is not a p.c.o. structure\n"; return 2; }
        result.kind = Structure::Kind::Mv;
        if (s.lq && !s.lq->is_finite()) result.mv = canonical_mv(*s.lq).algebra;
        else result.mv = canonical_mv(detail::finite_of(s)).algebra;
      } else if (cv_wound) {
        if (!s.mv) { err << "convert --wound-round: input is not an mv structure\n"; return 2; }
        if (s.mv->is_chain()) {
          result.kind = Structure::Kind::Co;
          result.pco = co_from_chain(*s.mv);
        } else {
          const DecomposeResult dec = decompose_product(*s.mv, width_cap);
          if (!dec.decomposed) { err << "convert --wound-round: algebra does not decompose within the width cap\n"; return 2; }
          std::vector<int> u;
          for (int unit : dec.units) {
            int below = 0;
            for (int y = 0; y < s.mv->size; ++y)
              if (s.mv->le(y, unit)) ++below;
            u.push_back(below - 1);
          }
          result.kind = Structure::Kind::Pco;
          result.lq = wound_round(u);
        }
      } else {
        const FinitePco c = detail::finite_of(s);
        const Unwound uw{c};
        std::vector<int> order(c.size);
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int x, int y) { return x != y && c.leq0(x, y); });
        std::vector<int> rank(c.size, 0);
        for (int i = 0; i < c.size; ++i) rank[order[i]] = i;
        nlohmann::json j;
        j["v"] = 1;
        j["kind"] = "unwound";
        j["carrier"] = "Z x C, lexicographic, carry on wrap";
        j["unit"] = std::vector<int>{1, c.zero};
        j["size_of_c"] = c.size;
        j["order_positions"] = rank;
        detail::emit(j.dump() + "\n", convert_out, out);
        return 0;
      }
      detail::emit(serialize_structure(result), convert_out, out);
      return 0;
    }

    if (iso->parsed()) {
      const Structure sa = load_structure(iso_a);
      const Structure sb = load_structure(iso_b);
      std::optional<IsoWitness> w;
      if (sa.mv && sb.mv) {
        w = mv_iso(*sa.mv, *sb.mv, iso_cap);
      } else if (!sa.mv && !sb.mv) {
        w = pco_iso(detail::finite_of(sa), detail::finite_of(sb), iso_cap);
      } else {
        err << "iso: structures have different kinds\n";
        return 2;
      }
      if (!w) {
        out << "not isomorphic\n";
        return 1;
      }
      out << "isomorphic; witness:";
      for (std::size_t i = 0; i < w->map.size(); ++i) out << " " << i << "->" << w->map[i];
      out << "\n";
      return 0;
    }

    // report
    const Structure s = load_structure(report_file);
    InvariantVector v;
    if (s.mv) v = eq_invariants(*s.mv, bounds);
    else v = eq_invariants(detail::finite_of(s), bounds);
    out << detail::invariants_json(v).dump() << "\n";
    return 0;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace cyclord::cli
