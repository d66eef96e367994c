// Copyright 2026 The oneext Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: one subcommand per operation, JSON reports on stdout,
// graphs to -o (or stdout), diagnostics on stderr.

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "oneext/csma.hpp"
#include "oneext/errors.hpp"
#include "oneext/extendability.hpp"
#include "oneext/graph.hpp"
#include "oneext/kernelize.hpp"
#include "oneext/mis.hpp"
#include "oneext/reduce3sat.hpp"
#include "oneext/transforms.hpp"
#include "oneext/unitdisk.hpp"

namespace {

using namespace oneext;
using nlohmann::json;

constexpr int kOk = 0;
constexpr int kNo = 1;
constexpr int kInputError = 2;
constexpr int kBudget = 3;
constexpr int kInternal = 4;

std::string read_text(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

json read_json(const std::string& path) {
  try {
    return json::parse(read_text(path));
  } catch (const json::parse_error& e) {
    throw ParseError(0, path + ": " + e.what());
  }
}

Graph read_graph(const std::string& path) { return parse_graph(read_text(path)); }

void print(const json& j) { std::cout << j.dump(2) << '\n'; }

json rationals(const std::vector<Rational>& rs) {
  auto out = json::array();
  for (const auto& r : rs) out.push_back(rational_string(r));
  return out;
}

struct Config {
  std::string graph = "-";
  std::string output;
  std::size_t budget = SolverOptions{}.node_budget;
  std::size_t k = 0;
  std::size_t r = 0;
  std::size_t s = 1;
  std::optional<std::size_t> delta;
  std::optional<std::size_t> degeneracy;
  std::string parts, crossings, embedding, layout, oracle = "degen", theta;
  unsigned precision = 6;
  bool t3 = false;

  SolverOptions options() const {
    SolverOptions o;
    o.node_budget = budget;
    return o;
  }
};

/// Graph to -o when given (certificate JSON to stdout), otherwise graph text to stdout.
int emit_graph(const Config& cfg, const Graph& g, const json& report) {
  if (cfg.output.empty()) {
    std::cout << serialize_graph(g);
  } else {
    write_graph_file(g, cfg.output);
    print(report);
  }
  return kOk;
}

int emit_transform(const Config& cfg, const TransformResult& r) { return emit_graph(cfg, r.graph, r.certificate.to_json()); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact 1-extendability toolkit"};
  app.require_subcommand(1);
  app.fallthrough();  // global options may follow the subcommand
  Config cfg;
  app.add_option("--budget", cfg.budget, "Search-node cap for the exact solver")->check(CLI::PositiveNumber);
  app.add_option("-o,--output", cfg.output, "Write the output graph here");

  auto graph_arg = [&](CLI::App* sub) { sub->add_option("graph", cfg.graph, "Edge-list file, or - for stdin"); };
  std::function<int()> run;

  auto* alpha = app.add_subcommand("alpha", "Independence number with a witness");
  graph_arg(alpha);
  alpha->callback([&] {
    run = [&] {
      const auto r = max_independent_set(read_graph(cfg.graph), cfg.options());
      print({{"alpha", r.alpha}, {"witness", r.witness.to_vector()}, {"nodes", r.nodes}});
      return kOk;
    };
  });

  auto* check = app.add_subcommand("check-1ext", "Is every vertex in a maximum independent set?");
  graph_arg(check);
  check->callback([&] {
    run = [&] {
      const auto r = is_one_extendable(read_graph(cfg.graph), cfg.options());
      print(to_json(r));
      return r.extendable ? kOk : kNo;
    };
  });

  auto* param = app.add_subcommand("check-param", "Is every vertex in an independent set of size k?");
  param->add_option("--k", cfg.k, "Target size")->required();
  graph_arg(param);
  param->callback([&] {
    run = [&] {
      const auto r = param_one_extendability(read_graph(cfg.graph), cfg.k, cfg.options());
      print(to_json(r));
      return r.extendable ? kOk : kNo;
    };
  });

  auto* transform = app.add_subcommand("transform", "Graph transformations");
  transform->require_subcommand(1);
  auto* t1 = transform->add_subcommand("t1", "Attach a pendant vertex to every vertex");
  graph_arg(t1);
  t1->callback([&] { run = [&] { return emit_transform(cfg, t1_pendant(read_graph(cfg.graph))); }; });
  auto* t2 = transform->add_subcommand("t2", "Subdivide every edge 2s times");
  t2->add_option("--s", cfg.s, "Pairs of subdivision vertices per edge")->check(CLI::PositiveNumber);
  graph_arg(t2);
  t2->callback([&] { run = [&] { return emit_transform(cfg, t2_subdivide(read_graph(cfg.graph), cfg.s)); }; });
  auto* t3 = transform->add_subcommand("t3", "Replace vertices by paths to reach maximum degree 3");
  t3->add_option("--delta", cfg.delta, "Degree D to use (at least the maximum degree)");
  graph_arg(t3);
  t3->callback([&] {
    run = [&] { return emit_transform(cfg, t3_degree_reduce(read_graph(cfg.graph), std::nullopt, cfg.delta)); };
  });
  auto* gplus = transform->add_subcommand("gplus", "Graph that is 1-extendable iff alpha(G) = r");
  gplus->add_option("--r", cfg.r, "Candidate independence number")->required();
  graph_arg(gplus);
  gplus->callback([&] { run = [&] { return emit_transform(cfg, g_plus(read_graph(cfg.graph), cfg.r)); }; });
  auto* gap = transform->add_subcommand("gap", "Two copies joined through the clique partition");
  gap->add_option("--parts", cfg.parts, "Clique partition file, one clique per line")->required();
  graph_arg(gap);
  gap->callback([&] {
    run = [&] {
      const Graph g = read_graph(cfg.graph);
      return emit_transform(cfg, gap_construction(g, parse_clique_partition(read_text(cfg.parts))));
    };
  });
  auto* w1 = transform->add_subcommand("w1", "Multicoloured independent set construction");
  w1->add_option("--parts", cfg.parts, "Clique partition file, one clique per line")->required();
  graph_arg(w1);
  w1->callback([&] {
    run = [&] {
      const Graph g = read_graph(cfg.graph);
      return emit_transform(cfg, w1_construction(g, parse_clique_partition(read_text(cfg.parts))));
    };
  });

  auto* gadget = app.add_subcommand("gadget", "The 22-vertex crossover gadget");
  gadget->require_subcommand(1);
  auto* emit = gadget->add_subcommand("emit", "Write the gadget graph");
  emit->callback([&] {
    run = [&] {
      const auto& h = gjs_gadget();
      return emit_graph(cfg, h.graph, {{"vertices", h.graph.vertex_count()}, {"edges", h.graph.edge_count()}});
    };
  });
  auto* table = gadget->add_subcommand("table", "Largest independent sets by |S∩Y| (rows) and |S∩X| (columns)");
  table->callback([&] {
    run = [&] {
      const auto& h = gjs_gadget();
      print({{"alpha", max_independent_set(h.graph).alpha}, {"rows", "|S∩Y|"}, {"columns", "|S∩X|"},
             {"table", gadget_table(h)}});
      return kOk;
    };
  });

  auto* replace = app.add_subcommand("replace-crossings", "Replace listed edge crossings by gadgets");
  replace->add_option("--crossings", cfg.crossings, "JSON crossing list")->required();
  graph_arg(replace);
  replace->callback([&] {
    run = [&] {
      const Graph g = read_graph(cfg.graph);
      return emit_transform(cfg, replace_crossings(g, crossing_specs_from_json(read_json(cfg.crossings))));
    };
  });

  std::string formula = "-";
  auto* reduce = app.add_subcommand("reduce-3sat", "Compile a rectilinear monotone 3SAT layout to a graph");
  reduce->add_flag("--t3", cfg.t3, "Reduce the maximum degree to 3");
  reduce->add_option("formula", formula, "Formula JSON, or - for stdin");
  reduce->callback([&] {
    run = [&] {
      const auto f = parse_pmr3sat(read_text(formula));
      const auto r = build_g_phi(f, cfg.t3);
      return emit_graph(cfg, r.graph, r.certificate.to_json());
    };
  });

  auto* kernel = app.add_subcommand("kernelize", "Kernel for the size-k version");
  kernel->add_option("--k", cfg.k, "Target size")->required()->check(CLI::PositiveNumber);
  kernel->add_option("--oracle", cfg.oracle, "degen or krfree")->check(CLI::IsMember({"degen", "krfree"}));
  kernel->add_option("--r", cfg.r, "Forbidden clique size for krfree");
  kernel->add_option("--d", cfg.degeneracy, "Degeneracy bound for degen (default: the graph's)");
  graph_arg(kernel);
  kernel->callback([&] {
    run = [&] {
      const Graph g = read_graph(cfg.graph);
      FriendlyOracle o;
      if (cfg.oracle == "krfree") {
        if (cfg.r < 2) throw InvalidArgument("--oracle krfree needs --r >= 2");
        if (auto c = find_clique(g, cfg.r)) {
          std::string members;
          for (Vertex v : *c) members += (members.empty() ? "" : ",") + std::to_string(v);
          throw InvalidArgument("graph contains the clique {" + members + "}");
        }
        o = oracle_krfree(cfg.r);
      } else {
        o = cfg.degeneracy ? oracle_degenerate(*cfg.degeneracy) : oracle_degenerate(g);
      }
      const auto r = kernelize(g, cfg.k, o);
      return emit_graph(cfg, r.graph, r.trace.to_json());
    };
  });

  auto* thr = app.add_subcommand("throughput", "Per-vertex channel share at one access intensity");
  thr->add_option("--theta", cfg.theta, "Intensity: integer, p/q or decimal")->required();
  thr->add_option("--precision", cfg.precision, "Fractional digits in the decimal rendering");
  graph_arg(thr);
  thr->callback([&] {
    run = [&] {
      const auto t = throughput(read_graph(cfg.graph), parse_rational(cfg.theta), cfg.options());
      json decimal = json::array();
      for (const auto& p : t.p) decimal.push_back(decimal_string(p, cfg.precision));
      print({{"theta", rational_string(t.theta)}, {"p", rationals(t.p)}, {"decimal", decimal}});
      return kOk;
    };
  });

  auto* sweep = app.add_subcommand("sweep", "Channel shares over several intensities as CSV");
  std::string theta_list;
  sweep->add_option("--thetas", theta_list, "Comma-separated intensities")->required();
  sweep->add_option("--precision", cfg.precision, "Fractional digits");
  graph_arg(sweep);
  sweep->callback([&] {
    run = [&] {
      std::vector<Rational> thetas;
      std::istringstream items(theta_list);
      for (std::string t; std::getline(items, t, ',');) thetas.push_back(parse_rational(t));
      std::cout << theta_sweep_csv(read_graph(cfg.graph), thetas, cfg.precision, cfg.options());
      return kOk;
    };
  });

  auto* limit = app.add_subcommand("limit", "Channel shares as the intensity grows without bound");
  graph_arg(limit);
  limit->callback([&] {
    run = [&] {
      const Graph g = read_graph(cfg.graph);
      const auto counts = mis_counts_all(g, cfg.options());
      json containing = json::array();
      for (const auto& c : counts.containing) containing.push_back(c.str());
      print({{"alpha", counts.alpha},
             {"maximum_sets", counts.total.str()},
             {"containing", containing},
             {"limit", rationals(throughput_limit(g, cfg.options()))}});
      return kOk;
    };
  });

  auto* starve = app.add_subcommand("starvation", "Vertices whose channel share vanishes");
  graph_arg(starve);
  starve->callback([&] {
    run = [&] {
      const auto s = starvation_report(read_graph(cfg.graph), cfg.options());
      print({{"starved", s}, {"count", s.size()}});
      return kOk;
    };
  });

  auto* ud = app.add_subcommand("unitdisk", "Realise an orthogonal drawing as a unit disk graph");
  ud->add_option("--embedding", cfg.embedding, "Embedding JSON")->required();
  ud->add_option("--layout", cfg.layout, "Write the disk layout JSON here");
  ud->add_option("graph", cfg.graph, "Edge-list file to check the drawing against (default: the drawing's own graph)");
  ud->callback([&] {
    run = [&] {
      const auto emb = parse_embedding(read_json(cfg.embedding));
      const Graph g = cfg.graph == "-" ? embedded_graph(emb) : read_graph(cfg.graph);
      const auto r = to_unit_disk(g, emb);
      json report = r.certificate.to_json();
      if (cfg.layout.empty()) {
        report["layout"] = r.layout.to_json();
      } else {
        std::ofstream out(cfg.layout);
        if (!out) throw InvalidArgument("cannot write " + cfg.layout);
        out << r.layout.to_json().dump(2) << '\n';
      }
      report["verified"] = verify_disks(r.graph, r.layout).ok;
      if (cfg.output.empty()) {
        print(report);
      } else {
        write_graph_file(r.graph, cfg.output);
        print(report);
      }
      return kOk;
    };
  });

  auto* verify = app.add_subcommand("verify-disks", "Does a disk layout realise a graph exactly?");
  verify->add_option("--layout", cfg.layout, "Layout JSON")->required();
  graph_arg(verify);
  verify->callback([&] {
    run = [&] {
      const auto v = verify_disks(read_graph(cfg.graph), parse_layout(read_json(cfg.layout)));
      print(v.to_json());
      return v.ok ? kOk : kNo;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    return run();
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBudget;
  } catch (const IntegrityError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
}
