// rdfold: exact computations with root data, foldings, Borel-de Siebenthal
// subsystems, Coxeter fixed complexes, and characteristic-2 form analysis.
//
// All results go to standard output as JSON (or a table where supported);
// diagnostics go to standard error.  Exit codes: 0 success, 1 check failure,
// 2 input/usage error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>

#include "rootfold/bds.hpp"
#include "rootfold/catalog.hpp"
#include "rootfold/checks.hpp"
#include "rootfold/coxfix.hpp"
#include "rootfold/folding.hpp"
#include "rootfold/formlab.hpp"
#include "rootfold/induce.hpp"
#include "rootfold/json_io.hpp"

using namespace rootfold;
using nlohmann::json;

namespace {

std::size_t weyl_bound() {
  if (const char* env = std::getenv("ROOTFOLD_WEYL_BOUND")) return std::stoull(env);
  return 1000000;
}

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Failure("BadInput", "cannot open " + path);
  json j;
  in >> j;
  return j;
}

RootDatum load_datum(const std::string& type, const std::string& file) {
  if (!type.empty() && !file.empty())
    throw Failure("BadInput", "give either --type or --datum, not both");
  if (!type.empty()) return make_named(type);
  if (!file.empty()) return datum_from_json(load_json(file));
  throw Failure("BadInput", "need --type or --datum");
}

std::vector<IntMatrix> load_action(const RootDatum& d, const std::string& name,
                                   const std::string& file, std::vector<int>* geometric,
                                   bool* has_geometric) {
  if (!name.empty() && !file.empty())
    throw Failure("BadInput", "give either --action or --action-file, not both");
  if (!file.empty()) {
    ActionSpec spec = action_from_json(load_json(file));
    if (geometric && spec.has_geometric) {
      *geometric = spec.geometric;
      *has_geometric = true;
    }
    return spec.generators;
  }
  return named_action(d, name.empty() ? "trivial" : name);
}

int exit_code_for(const Failure& f) {
  static const std::set<std::string> input_errors{
      "BadInput",   "UnknownType", "NotSubgroup", "NotAdjoint",
      "DivisionByZero", "UnknownCheck", "NotInvolution", "NotRegular"};
  return input_errors.count(f.code()) ? 2 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact root-datum folding toolkit"};
  app.require_subcommand(1);

  std::string type, datum_file, action_name, action_file, format = "json";
  int characteristic = 1;
  std::vector<int> galois;
  int node = 0;
  std::string only, spec_file, gram_file;
  std::vector<std::string> extends;

  auto* validate_cmd = app.add_subcommand("validate", "check the root-datum axioms");
  validate_cmd->add_option("--type", type);
  validate_cmd->add_option("--datum", datum_file);

  auto* classify_cmd = app.add_subcommand("classify", "irreducible components and type label");
  classify_cmd->add_option("--type", type);
  classify_cmd->add_option("--datum", datum_file);

  auto* fold_cmd = app.add_subcommand("fold", "quotient root datum of a finite action");
  fold_cmd->add_option("--type", type);
  fold_cmd->add_option("--datum", datum_file);
  fold_cmd->add_option("--action", action_name, "trivial|swap|flip|triality|s3|copyswap|minus1");
  fold_cmd->add_option("--action-file", action_file);
  fold_cmd->add_option("--characteristic", characteristic, "characteristic exponent (1 or prime)");
  fold_cmd->add_option("--galois", galois,
                       "generator indices acting in the Galois stage (default: none)");
  fold_cmd->add_option("--format", format, "json|table");

  auto* bds_cmd = app.add_subcommand("bds", "Borel-de Siebenthal basis and subsystem");
  bds_cmd->add_option("--type", type);
  bds_cmd->add_option("--datum", datum_file);
  bds_cmd->add_option("--node", node, "simple root, 1-based Bourbaki position")->required();

  auto* induce_cmd = app.add_subcommand("induce", "induced root datum along a subgroup");
  induce_cmd->add_option("--datum", datum_file)->required();
  induce_cmd->add_option("--spec", spec_file, "group/subgroup/action JSON")->required();

  auto* building_cmd = app.add_subcommand("building", "Coxeter complex fixed points");
  building_cmd->add_option("--type", type);
  building_cmd->add_option("--datum", datum_file);
  building_cmd->add_option("--action", action_name);
  building_cmd->add_option("--action-file", action_file);

  auto* char2_cmd = app.add_subcommand("char2", "characteristic-2 bilinear form analysis");
  char2_cmd->add_option("--gram", gram_file, "JSON with generators and c or gram matrix")->required();
  char2_cmd->add_option("--extend", extends, "square roots to adjoin, e.g. sqrt:t");

  auto* verify_cmd = app.add_subcommand("verify-paper", "run the golden checks");
  verify_cmd->add_option("--only", only);
  verify_cmd->add_option("--format", format, "json|table");

  app.add_subcommand("catalog", "list the built-in folding catalog");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp") {
      std::cout << app.help();
      return 0;
    }
    std::cerr << app.help() << "\n" << e.what() << "\n";
    return 2;
  }

  try {
    if (validate_cmd->parsed()) {
      RootDatum d = load_datum(type, datum_file);
      ValidationReport rep = validate(d);
      json out{{"ok", rep.ok}, {"violations", rep.violations}};
      std::cout << out.dump(2) << "\n";
      return rep.ok ? 0 : 1;
    }

    if (classify_cmd->parsed()) {
      RootDatum d = load_datum(type, datum_file);
      json comps = json::array();
      for (const Component& c : irreducible_components(d)) {
        json jc;
        jc["type"] = family_name(c.family) + std::to_string(c.type_rank);
        json simple = json::array();
        for (int i : c.bourbaki_simple) simple.push_back(to_json(d).at("roots")[i]);
        jc["bourbaki_simple"] = simple;
        jc["num_roots"] = c.root_indices.size();
        comps.push_back(jc);
      }
      json out{{"label", type_label(d).str()}, {"components", comps}};
      std::cout << out.dump(2) << "\n";
      return 0;
    }

    if (fold_cmd->parsed()) {
      check_characteristic(characteristic);
      RootDatum d = load_datum(type, datum_file);
      std::vector<int> geo_from_file;
      bool file_geo = false;
      std::vector<IntMatrix> gens = load_action(d, action_name, action_file, &geo_from_file, &file_geo);
      std::vector<int> geometric;
      if (!galois.empty()) {
        std::set<int> gal(galois.begin(), galois.end());
        for (std::size_t i = 0; i < gens.size(); ++i)
          if (!gal.count(int(i))) geometric.push_back(int(i));
      } else if (file_geo) {
        geometric = geo_from_file;
      } else {
        for (std::size_t i = 0; i < gens.size(); ++i) geometric.push_back(int(i));
      }
      ActionGroup sigma = close_group_with_geometric(d, gens, geometric);
      auto stable = stable_positive_system(d, sigma, weyl_bound());
      if (!stable) {
        std::cerr << "the action is not quasisemisimple: no stable positive system\n";
        return 1;
      }
      TwoStageResult t = two_stage(d, sigma, *stable);
      json out = two_stage_to_json(t, characteristic);
      if (format == "table") {
        std::cout << "source:  " << type_label(d).str() << "\n"
                  << "quotient: " << out["total"]["quotient_type"].get<std::string>() << "\n"
                  << "fixed:    " << out["fixed_type"].get<std::string>() << "\n"
                  << "smooth:   " << out["smooth_type"].get<std::string>() << "\n"
                  << "exceptional: " << (out["exceptional"].get<bool>() ? "yes" : "no") << "\n";
      } else {
        std::cout << out.dump(2) << "\n";
      }
      return 0;
    }

    if (bds_cmd->parsed()) {
      RootDatum d = load_datum(type, datum_file);
      SimpleSystem delta = bourbaki_base(d);
      if (node < 1 || node > int(delta.size()))
        throw Failure("BadInput", "--node out of range");
      BdSData b = bds(d, delta, delta[node - 1]);
      std::cout << bds_to_json(d, b).dump(2) << "\n";
      return 0;
    }

    if (induce_cmd->parsed()) {
      RootDatum d1 = datum_from_json(load_json(datum_file));
      json spec = load_json(spec_file);
      FiniteGroup gamma;
      for (const auto& row : spec.at("group").at("table"))
        gamma.table.push_back(row.get<std::vector<int>>());
      if (spec.at("group").contains("identity")) gamma.identity = spec["group"]["identity"].get<int>();
      std::vector<int> gamma1 = spec.at("subgroup").get<std::vector<int>>();
      std::vector<IntMatrix> action1;
      std::vector<int> order;
      for (const auto& a : spec.at("action")) {
        order.push_back(a.at("element").get<int>());
        action1.push_back(matrix_from_json(a.at("matrix")));
      }
      // align action entries with the subgroup list
      std::vector<IntMatrix> aligned;
      for (int e : gamma1) {
        auto it = std::find(order.begin(), order.end(), e);
        if (it == order.end()) throw Failure("BadInput", "missing action for subgroup element");
        aligned.push_back(action1[it - order.begin()]);
      }
      InducedDatum ind = induce_datum(d1, gamma, gamma1, aligned);
      json out = induced_to_json(ind);
      out["quotient_compatible"] = induction_quotient_compat(d1, gamma, gamma1, aligned);
      std::cout << out.dump(2) << "\n";
      return 0;
    }

    if (building_cmd->parsed()) {
      RootDatum d = load_datum(type, datum_file);
      std::vector<IntMatrix> gens = load_action(d, action_name, action_file, nullptr, nullptr);
      ActionGroup g = close_group(d, gens);
      SimpleSystem delta = bourbaki_base(d);
      CoxeterComplex c = build_complex(d, delta, weyl_bound());
      ComplexAction a = complex_action(c, g);
      auto fixed = fixed_subcomplex(c, a);
      json listing = json::array();
      for (const auto& s : fixed) {
        json js;
        json nodes = json::array();
        for (std::size_t k = 0; k < delta.size(); ++k)
          if (s.type & (1u << k)) nodes.push_back(int(k) + 1);
        js["type_nodes"] = nodes;
        js["coset_representative"] = s.coset;
        js["is_chamber"] = s.type == 0;
        listing.push_back(js);
      }
      json out{{"simplices", c.simplices.size()},
               {"chambers", c.chamber_count()},
               {"fixed", listing},
               {"fixed_count", fixed.size()}};
      std::cout << out.dump(2) << "\n";
      return 0;
    }

    if (char2_cmd->parsed()) {
      json spec = load_json(gram_file);
      TowerField base = TowerField::rational(spec.at("generators").get<std::vector<std::string>>());
      FormData form;
      if (spec.contains("c")) {
        form = gram_from_involution(base, fmat_from_json(spec["c"], base));
      } else if (spec.contains("gram")) {
        form.field = base;
        form.gram = fmat_from_json(spec["gram"], base);
        form.dimension = int(form.gram.size());
      } else {
        throw Failure("BadInput", "need a c or gram entry");
      }
      TowerField full = base;
      json levels = json::array();
      auto kernel_report = [&](const TowerField& level) {
        json jl;
        std::vector<std::string> names = level.display_names();
        jl["adjoined"] = [&] {
          json a = json::array();
          for (std::size_t i = 0; i < level.sqrt_adjoined.size(); ++i)
            if (level.sqrt_adjoined[i]) a.push_back(level.gen_names[i]);
          return a;
        }();
        json basis = json::array();
        for (const FVec& v : qb_kernel(form, level)) {
          json row = json::array();
          for (const auto& x : v) row.push_back(gf2::to_string(x, names));
          basis.push_back(row);
        }
        jl["kernel_basis"] = basis;
        return jl;
      };
      levels.push_back(kernel_report(base));
      for (const std::string& e : extends) {
        std::string gen = e.rfind("sqrt:", 0) == 0 ? e.substr(5) : e;
        full = full.with_sqrt(gen);
        levels.push_back(kernel_report(full));
      }
      FixedGroupReport rep = fixed_group_report(form, base);
      LieFixedReport lie = lie_fixed_dimension(form, base);
      json out;
      out["gram"] = fmat_to_json(form.gram, base);
      out["levels"] = levels;
      out["smoothable"] = smoothability_check(form, base, full);
      out["fixed_group"] = {{"d", rep.d},
                            {"symplectic_rank", rep.symplectic_rank},
                            {"hom_dim", rep.hom_dim},
                            {"skew_dim", rep.skew_dim},
                            {"smooth_dim", rep.smooth_dim},
                            {"exceptional", rep.exceptional}};
      out["lie_fixed"] = {{"dimension", lie.dimension}, {"smooth_verdict", lie.smooth_verdict}};
      std::cout << out.dump(2) << "\n";
      return 0;
    }

    if (verify_cmd->parsed()) {
      std::vector<CheckResult> results;
      if (!only.empty())
        results.push_back(run_named_check(only));
      else
        results = run_all_checks();
      bool all = true;
      if (format == "table") {
        for (const auto& r : results) {
          std::cout << (r.passed ? "PASS  " : "FAIL  ") << r.name
                    << (r.passed ? "" : "  " + r.detail) << "\n";
          all = all && r.passed;
        }
      } else {
        json out = json::array();
        for (const auto& r : results) {
          out.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
          all = all && r.passed;
        }
        std::cout << out.dump(2) << "\n";
      }
      return all ? 0 : 1;
    }

    // catalog
    json out = json::array();
    for (const CatalogEntry& e : standard_catalog()) {
      FoldingResult f = quotient_datum(e.datum, e.group, e.stable);
      out.push_back({{"name", e.name},
                     {"source_type", type_label(e.datum).str()},
                     {"group_order", e.group.order()},
                     {"quotient_type", type_label(f.quotient).str()}});
    }
    std::cout << out.dump(2) << "\n";
    return 0;
  } catch (const Failure& f) {
    std::cerr << "error: " << f.what() << "\n";
    return exit_code_for(f);
  } catch (const json::exception& e) {
    std::cerr << "error: bad JSON input: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
