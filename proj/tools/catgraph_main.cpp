#include <CLI11.hpp>
#include <iostream>
#include <optional>
#include <string>

#include "catgraph/catalog.hpp"
#include "catgraph/epi_mono.hpp"
#include "catgraph/hom.hpp"
#include "catgraph/iso.hpp"
#include "catgraph/json_io.hpp"
#include "catgraph/limits.hpp"
#include "catgraph/special.hpp"
#include "catgraph/tables.hpp"
#include "catgraph/topos.hpp"

namespace {

using catgraph::Json;

struct Options {
  std::string category = "G";
  bool pretty = false;
  std::size_t battery_max_parts = 4;
  unsigned seed = 12345;
};

catgraph::CategoryId category_of(const Options& opt) {
  auto c = catgraph::parse_category(opt.category);
  if (!c)
    throw catgraph::Error(catgraph::ErrorCode::BadParameter,
                          "unknown category '" + opt.category + "'");
  return *c;
}

void emit(const Json& j, const Options& opt) {
  if (opt.pretty)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << j.dump() << "\n";
}

Json classification_json(const catgraph::ObjectClassification& r) {
  Json j;
  j["property"] = r.property;
  j["category"] = catgraph::to_string(r.category);
  j["verdict"] = catgraph::to_string(r.verdict);
  j["detail"] = r.detail;
  j["witness_verified"] = r.witness_verified;
  if (r.witness_f) j["witness_f"] = catgraph::to_json(*r.witness_f);
  if (r.witness_g) j["witness_g"] = catgraph::to_json(*r.witness_g);
  if (r.witness_graph) j["witness_graph"] = catgraph::to_json(*r.witness_graph);
  return j;
}

Json table_json(const catgraph::PropertyTable& table) {
  Json j;
  j["name"] = table.name;
  j["columns"] = table.columns;
  j["rows"] = table.rows;
  Json cells = Json::object();
  for (const auto& row : table.rows) {
    Json row_json = Json::object();
    for (const auto& col : table.columns) {
      const auto& cell = table.cells.at(row).at(col);
      row_json[col] = {{"value", cell.value},
                       {"machine_checked", cell.machine_checked},
                       {"detail", cell.detail}};
    }
    cells[row] = row_json;
  }
  j["cells"] = cells;
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"catgraph: constructions and counting arguments in six concrete "
               "categories of graphs"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--category", opt.category,
                 "category: G, SiG, SiLlG, StG, SiStG, SiLlStG (long forms accepted)");
  app.add_flag("--pretty", opt.pretty, "indent JSON; render tables as text");
  app.add_option("--battery-max-parts", opt.battery_max_parts,
                 "size bound for verification batteries (default 4)");
  app.add_option("--seed", opt.seed, "seed for randomized pigeonhole trials");

  std::string name, file_a, file_b, file_c, file_d, property;
  std::vector<std::string> id_args;

  auto* cmd_std = app.add_subcommand("std", "emit a catalog graph");
  cmd_std->add_option("name", name, "catalog name, e.g. K3, K2^l, C6, Omega_G")->required();

  auto* cmd_validate = app.add_subcommand("validate", "check a morphism in a category");
  cmd_validate->add_option("morphism", file_a)->required();

  auto* cmd_homc = app.add_subcommand("hom-count", "count morphisms A -> B");
  cmd_homc->add_option("A", file_a)->required();
  cmd_homc->add_option("B", file_b)->required();

  auto* cmd_homl = app.add_subcommand("hom-list", "enumerate morphisms A -> B");
  cmd_homl->add_option("A", file_a)->required();
  cmd_homl->add_option("B", file_b)->required();

  auto* cmd_product = app.add_subcommand("product", "categorical product");
  cmd_product->add_option("A", file_a)->required();
  cmd_product->add_option("B", file_b)->required();

  auto* cmd_coproduct = app.add_subcommand("coproduct", "categorical coproduct");
  cmd_coproduct->add_option("A", file_a)->required();
  cmd_coproduct->add_option("B", file_b)->required();

  auto* cmd_equalizer = app.add_subcommand("equalizer", "equalizer of a parallel pair");
  cmd_equalizer->add_option("f", file_a)->required();
  cmd_equalizer->add_option("g", file_b)->required();

  auto* cmd_coequalizer =
      app.add_subcommand("coequalizer", "coequalizer of a parallel pair");
  cmd_coequalizer->add_option("f", file_a)->required();
  cmd_coequalizer->add_option("g", file_b)->required();

  auto* cmd_pullback = app.add_subcommand("pullback", "pullback of a cospan");
  cmd_pullback->add_option("f", file_a)->required();
  cmd_pullback->add_option("g", file_b)->required();

  app.add_subcommand("terminal", "terminal object of the category");
  app.add_subcommand("initial", "initial object of the category");
  app.add_subcommand("classifier", "subobject classifier or its refutation");

  auto* cmd_chi = app.add_subcommand("chi", "characteristic morphism of a mono");
  cmd_chi->add_option("mono", file_a)->required();

  auto* cmd_exp = app.add_subcommand("exp", "exponential object with evaluation");
  cmd_exp->add_option("G", file_a)->required();
  cmd_exp->add_option("H", file_b)->required();

  auto* cmd_transpose =
      app.add_subcommand("transpose", "transpose a morphism X x G -> H");
  cmd_transpose->add_option("X", file_a)->required();
  cmd_transpose->add_option("G", file_b)->required();
  cmd_transpose->add_option("H", file_c)->required();
  cmd_transpose->add_option("g", file_d)->required();

  app.add_subcommand("refute-l2", "counting refutation of exponentiation");

  auto* cmd_choice = app.add_subcommand("choice", "search for g with f.g.f = f");
  cmd_choice->add_option("f", file_a)->required();

  app.add_subcommand("two-valued", "compare the classifier with 1+1");

  auto* cmd_free = app.add_subcommand("free", "free graph on a vertex set");
  cmd_free->add_option("ids", id_args, "vertex ids");

  auto* cmd_cofree = app.add_subcommand("cofree", "cofree graph on a vertex set");
  cmd_cofree->add_option("ids", id_args, "vertex ids");

  auto* cmd_classify = app.add_subcommand("classify", "object classification");
  cmd_classify
      ->add_option("--property", property,
                   "projective | injective | generator | cogenerator | presentation")
      ->required();
  cmd_classify->add_option("graph", file_a)->required();

  auto* cmd_iso = app.add_subcommand("iso", "exhaustive isomorphism test");
  cmd_iso->add_option("A", file_a)->required();
  cmd_iso->add_option("B", file_b)->required();

  app.add_subcommand("axiom-table", "the Lawvere-style axiom grid");
  app.add_subcommand("properties-table", "the object-property grid");

  // global flags may follow the subcommand name
  for (auto* sub : app.get_subcommands([](const CLI::App*) { return true; }))
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    using namespace catgraph;
    CategoryId c = category_of(opt);

    if (cmd_std->parsed()) {
      emit(to_json(standard_graph(name)), opt);
    } else if (cmd_validate->parsed()) {
      emit(to_json(validate(morphism_from_file(file_a), c)), opt);
    } else if (cmd_homc->parsed()) {
      std::uint64_t n = hom_count(graph_from_file(file_a), graph_from_file(file_b), c);
      emit(Json{{"category", to_string(c)}, {"count", n}}, opt);
    } else if (cmd_homl->parsed()) {
      HomSet homs = enumerate_homs(graph_from_file(file_a), graph_from_file(file_b), c);
      Json maps = Json::array();
      for (const auto& f : homs.morphisms) {
        Json m = Json::object();
        for (const auto& [p, q] : f.part_map()) m[p] = q;
        maps.push_back(m);
      }
      emit(Json{{"category", to_string(c)},
                {"dom", to_json(homs.dom)},
                {"cod", to_json(homs.cod)},
                {"count", homs.size()},
                {"maps", maps}},
           opt);
    } else if (cmd_product->parsed()) {
      emit(to_json(product(graph_from_file(file_a), graph_from_file(file_b), c)), opt);
    } else if (cmd_coproduct->parsed()) {
      emit(to_json(coproduct(graph_from_file(file_a), graph_from_file(file_b), c)), opt);
    } else if (cmd_equalizer->parsed()) {
      emit(to_json(equalizer(morphism_from_file(file_a), morphism_from_file(file_b), c)),
           opt);
    } else if (cmd_coequalizer->parsed()) {
      CoequalizerResult r =
          coequalizer(morphism_from_file(file_a), morphism_from_file(file_b), c);
      if (r.cone) {
        emit(to_json(*r.cone), opt);
      } else {
        Json j{{"refused", r.refusal}, {"vertex_class", r.refusal_vertex_class}};
        j["class"] = Json::array();
        for (const auto& p : r.refusal_class) j["class"].push_back(p);
        emit(j, opt);
      }
    } else if (cmd_pullback->parsed()) {
      emit(to_json(pullback(morphism_from_file(file_a), morphism_from_file(file_b), c)),
           opt);
    } else if (app.get_subcommand("terminal")->parsed()) {
      TerminalResult t = terminal_object(c);
      if (t.object)
        emit(Json{{"exists", true}, {"object", to_json(*t.object)}}, opt);
      else
        emit(Json{{"exists", false}, {"refutation", t.refutation}}, opt);
    } else if (app.get_subcommand("initial")->parsed()) {
      emit(to_json(initial_object(c)), opt);
    } else if (app.get_subcommand("classifier")->parsed()) {
      ClassifierReport r = subobject_classifier(c);
      Json j{{"exists", r.result.has_value()}};
      if (r.result) {
        j["omega"] = to_json(r.result->omega);
        j["truth"] = to_json(r.result->truth);
      } else {
        j["refutation"] = r.refutation;
        if (r.witness_mono) j["witness_mono"] = to_json(*r.witness_mono);
        if (r.witness_pullback) j["witness_pullback"] = to_json(*r.witness_pullback);
        if (r.witness_expected) j["witness_expected"] = to_json(*r.witness_expected);
      }
      emit(j, opt);
    } else if (cmd_chi->parsed()) {
      emit(to_json(characteristic_morphism(morphism_from_file(file_a), c)), opt);
    } else if (cmd_exp->parsed()) {
      auto expo = exponential(graph_from_file(file_a), graph_from_file(file_b), c);
      if (!expo) {
        emit(Json{{"exists", false},
                  {"hint", "run refute-l2 --category " + to_string(c)}},
             opt);
      } else {
        emit(Json{{"exists", true},
                  {"exp", to_json(expo->exp)},
                  {"ev", to_json(expo->ev)},
                  {"product", to_json(expo->prod)}},
             opt);
      }
    } else if (cmd_transpose->parsed()) {
      Graph X = graph_from_file(file_a);
      Graph G_ = graph_from_file(file_b);
      Graph H = graph_from_file(file_c);
      Morphism g = morphism_from_file(file_d);
      auto expo = exponential(G_, H, c);
      if (!expo)
        throw Error(ErrorCode::WrongCategory,
                    to_string(c) + " has no exponentials; see refute-l2");
      ConeResult xg = product(X, G_, c);
      emit(to_json(transpose(g, xg, *expo, c)), opt);
    } else if (app.get_subcommand("refute-l2")->parsed()) {
      ExpRefutation r = refute_exponentiation(c, opt.seed);
      Json j{{"category", to_string(c)},
             {"counts", r.counts},
             {"narrative", r.narrative}};
      if (r.collision) {
        j["loop_split"] = Json::array({r.loops_m, r.loops_n});
        j["collision"] = Json::array({r.collision->i, r.collision->j});
        j["random_trials"] = r.random_trials;
      }
      emit(j, opt);
    } else if (cmd_choice->parsed()) {
      auto section = check_choice(morphism_from_file(file_a), c);
      if (section)
        emit(Json{{"section", to_json(*section)}}, opt);
      else
        emit(Json{{"section", nullptr}}, opt);
    } else if (app.get_subcommand("two-valued")->parsed()) {
      TwoValuedReport r = check_two_valued(c);
      Json j{{"applicable", r.applicable}, {"detail", r.detail}};
      if (r.applicable) {
        j["two_valued"] = r.two_valued;
        j["one_plus_one"] = to_json(r.one_plus_one);
        j["omega"] = to_json(*r.omega);
      }
      emit(j, opt);
    } else if (cmd_free->parsed()) {
      emit(to_json(free_graph({id_args.begin(), id_args.end()}, c)), opt);
    } else if (cmd_cofree->parsed()) {
      CofreeResult r = cofree_graph({id_args.begin(), id_args.end()}, c);
      if (r.graph)
        emit(Json{{"exists", true}, {"object", to_json(*r.graph)}}, opt);
      else
        emit(Json{{"exists", false},
                  {"refutation", r.refutation},
                  {"refutation_verified", r.refutation_verified}},
             opt);
    } else if (cmd_classify->parsed()) {
      Graph g = graph_from_file(file_a);
      if (property == "projective") {
        emit(classification_json(is_projective(g, c)), opt);
      } else if (property == "injective") {
        emit(classification_json(is_injective(g, c)), opt);
      } else if (property == "generator") {
        emit(classification_json(is_generator(g, c)), opt);
      } else if (property == "cogenerator") {
        emit(classification_json(is_cogenerator(g, c)), opt);
      } else if (property == "presentation") {
        auto [cover, epi] = projective_presentation(g, c);
        emit(Json{{"cover", to_json(cover)}, {"epi", to_json(epi)}}, opt);
      } else {
        throw Error(ErrorCode::BadParameter, "unknown property '" + property + "'");
      }
    } else if (cmd_iso->parsed()) {
      auto iso = is_isomorphic(graph_from_file(file_a), graph_from_file(file_b));
      Json j{{"isomorphic", iso.has_value()}};
      if (iso) {
        j["forward"] = to_json(iso->forward);
        j["inverse"] = to_json(iso->inverse);
      }
      emit(j, opt);
    } else if (app.get_subcommand("axiom-table")->parsed()) {
      PropertyTable table = axiom_table(opt.battery_max_parts);
      if (opt.pretty)
        std::cout << render_table(table);
      else
        emit(table_json(table), opt);
    } else if (app.get_subcommand("properties-table")->parsed()) {
      PropertyTable table = properties_table(opt.battery_max_parts);
      if (opt.pretty)
        std::cout << render_table(table);
      else
        emit(table_json(table), opt);
    }
  } catch (const catgraph::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
