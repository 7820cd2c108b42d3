// pancyc command line: generation, arc systems, engine runs, oracles and
// witness verification. Exit codes: 0 success, 2 inconclusive, 1 error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "pancyc/pancyc.hpp"

using namespace pancyc;

namespace {

struct Global {
  std::string out = "-";
  bool verbose = false;
};

struct ProfileArgs {
  int k = 1;
  std::vector<Vertex> W;
};

std::string slurp(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path);
  if (!in) throw Error(Errc::MalformedFile, "cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

GraphPtr read_graph(const std::string& path) { return std::make_shared<const CycledGraph>(parse_graph(slurp(path))); }

json read_json(const std::string& path) {
  try {
    return json::parse(slurp(path));
  } catch (const json::exception& e) {
    throw Error(Errc::MalformedFile, std::string("bad JSON in ") + path + ": " + e.what());
  }
}

void emit(const Global& g, const std::string& text) {
  if (g.out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(g.out);
  if (!f) throw Error(Errc::MalformedFile, "cannot write " + g.out);
  f << text;
}

void emit(const Global& g, const json& j) { emit(g, j.dump(2) + "\n"); }

// One line per trace record: the stage, then its scalar fields.
void print_trace(const json& trace) {
  for (const auto& rec : trace) {
    std::cerr << "[" << rec.value("stage", std::string("?")) << "]";
    for (const auto& [key, val] : rec.items()) {
      if (key == "stage") continue;
      std::cerr << " " << key << "=" << (val.is_string() ? val.get<std::string>() : val.dump());
    }
    std::cerr << "\n";
  }
}

json profile_json(const ProblemProfile& p, const std::vector<Vertex>& W) {
  return {{"k", p.k}, {"W", W}, {"problematic", p.problematic}};
}

void add_profile_opts(CLI::App* c, ProfileArgs& p) {
  c->add_option("--k", p.k, "claimed independence bound k")->required()->check(CLI::PositiveNumber);
  c->add_option("--w", p.W, "extra problematic vertices");
}

int exit_for(const Witness& w) { return w.kind == Witness::Kind::Inconclusive ? 2 : 0; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pancyc: arc systems, cycle surgery and independent-set witnesses over Hamiltonian graphs"};
  app.require_subcommand(1);
  app.fallthrough();
  Global G;
  app.add_option("--out", G.out, "output file (default stdout)");
  app.add_flag("--verbose", G.verbose, "print a readable trace to stderr");

  std::function<int()> action;

  // gen ----------------------------------------------------------------------
  auto* gen = app.add_subcommand("gen", "generate a graph file")->require_subcommand(1);
  int ek = 5;
  auto* gerdos = gen->add_subcommand("erdos", "k cliques of size k-2 in a ring");
  gerdos->add_option("--k", ek, "independence number")->required();
  gerdos->callback([&] { action = [&] { return emit(G, write_graph(erdos_construction(ek))), 0; }; });

  int rk = 3, rn = 20;
  std::uint64_t rseed = 1;
  double rrate = 0.0;
  auto* grand = gen->add_subcommand("random", "Hamiltonian graph with alpha <= k");
  grand->add_option("--k", rk, "number of clique blocks")->required();
  grand->add_option("--n", rn, "vertices")->required();
  grand->add_option("--seed", rseed, "seed");
  grand->add_option("--rate", rrate, "probability of each extra edge");
  grand->callback([&] { action = [&] { return emit(G, write_graph(random_bounded_alpha(rk, rn, rseed, rrate))), 0; }; });

  // arcs ---------------------------------------------------------------------
  auto* arcs = app.add_subcommand("arcs", "arc-system construction")->require_subcommand(1);
  std::string agraph = "-";
  ProfileArgs aprof;
  int alen = 2, acount = 4;
  for (auto* c : {arcs->add_subcommand("build", "chop H into arcs"),
                  arcs->add_subcommand("simplify", "build, then remove M2s")}) {
    c->add_option("graph", agraph, "graph file (default stdin)");
    add_profile_opts(c, aprof);
    c->add_option("--arc-len", alen, "vertices per arc")->check(CLI::PositiveNumber);
    c->add_option("--count", acount, "number of arcs wanted")->check(CLI::PositiveNumber);
  }
  auto build = [&]() {
    auto g = read_graph(agraph);
    auto prof = std::make_shared<const ProblemProfile>(mark_problematic(*g, aprof.W, aprof.k));
    return build_arc_system(g, prof, alen, acount);
  };
  arcs->get_subcommand("build")->callback([&] {
    action = [&] {
      auto sys = build();
      json j = to_json(sys);
      j["length"] = sys.length();
      j["profile"] = profile_json(sys.profile(), aprof.W);
      emit(G, j);
      return 0;
    };
  });
  arcs->get_subcommand("simplify")->callback([&] {
    action = [&] {
      auto sys = build();
      auto s = simplify(sys);
      json j{{"conflict_edges", s.conflict_edges}, {"colors", s.colors}, {"surgery_attempts", s.surgery_attempts}};
      if (s.cycle) {
        j["surgery"] = s.surgery;
        j["cycle"] = to_json(*s.cycle);
      } else {
        j["system"] = to_json(*s.system);
      }
      j["profile"] = profile_json(sys.profile(), aprof.W);
      emit(G, j);
      return 0;
    };
  });

  // engine -------------------------------------------------------------------
  auto* engine = app.add_subcommand("engine", "dual-witness engine")->require_subcommand(1);
  auto* erun = engine->add_subcommand("run", "independent set, contradicting cycle, or inconclusive");
  std::string egraph = "-", emode = "desk";
  ProfileArgs eprof;
  int ep = 2, elen = 2, ecount = 4;
  Count ex = 2;
  std::optional<Count> t_good, t_assign, collection;
  erun->add_option("graph", egraph, "graph file (default stdin)");
  add_profile_opts(erun, eprof);
  erun->add_option("--p", ep, "induction level")->check(CLI::PositiveNumber);
  erun->add_option("--x", ex, "scale; the target is x^p + 1")->check(CLI::PositiveNumber);
  erun->add_option("--mode", emode, "constants: desk or paper")->check(CLI::IsMember({"desk", "paper"}));
  erun->add_option("--t-override", t_good, "per-vertex demand for goodness")->check(CLI::PositiveNumber);
  erun->add_option("--t-assign", t_assign, "per-vertex demand in the semi-triangle search")->check(CLI::PositiveNumber);
  erun->add_option("--collection", collection, "size of the low-edge sub-collection")->check(CLI::PositiveNumber);
  erun->add_option("--arc-len", elen, "vertices per arc")->check(CLI::PositiveNumber);
  erun->add_option("--count", ecount, "number of arcs wanted")->check(CLI::PositiveNumber);
  erun->callback([&] {
    action = [&] {
      auto g = read_graph(egraph);
      EngineConfig cfg;
      cfg.arc_len = elen;
      cfg.want = ecount;
      Constants c = emode == "paper" ? paper_constants(ep, ex) : desk_constants(ep, ex);
      c.t_good_override = t_good;
      c.t_assign_override = t_assign;
      c.collection_override = collection;
      c.recompute();
      cfg.constants = c;
      try {
        auto r = run_engine(g, eprof.W, eprof.k, cfg);
        if (G.verbose) print_trace(r.trace);
        json j = pancyc::to_json(r.witness, r.trace);
        j["profile"] = {{"k", eprof.k}, {"W", eprof.W}};
        j["constants"] = {{"mode", mode_name(c.mode)}, {"p", c.p},           {"x", c.x},
                          {"t_good", c.t_good},        {"t_assign", c.t_assign}, {"target", c.target}};
        emit(G, j);
        return exit_for(r.witness);
      } catch (const EngineFailure& e) {
        if (G.verbose) print_trace(e.trace());
        throw;
      }
    };
  });

  // oracle -------------------------------------------------------------------
  auto* oracle = app.add_subcommand("oracle", "exact desk-scale oracles")->require_subcommand(1);
  std::string ograph = "-";
  int ocap = 0, olen = 3;
  std::vector<Vertex> othrough;
  auto* oalpha = oracle->add_subcommand("alpha", "maximum independent set");
  auto* ospec = oracle->add_subcommand("spectrum", "lengths of all cycles, as a JSON array");
  auto* othr = oracle->add_subcommand("cycle-through", "a cycle of given length through given vertices");
  for (auto* c : {oalpha, ospec, othr}) {
    c->add_option("graph", ograph, "graph file (default stdin)");
    c->add_option("--cap", ocap, "largest n accepted");
  }
  othr->add_option("--length", olen, "cycle length")->required();
  othr->add_option("--through", othrough, "required vertices");
  oalpha->callback([&] {
    action = [&] {
      auto g = read_graph(ograph);
      auto I = max_independent_set(*g, ocap > 0 ? ocap : kDefaultAlphaCap);
      emit(G, json{{"alpha", I.size()}, {"set", I}});
      return 0;
    };
  });
  ospec->callback([&] {
    action = [&] {
      auto g = read_graph(ograph);
      emit(G, json(cycle_spectrum(*g, ocap > 0 ? ocap : kDefaultSpectrumCap).present).dump() + "\n");
      return 0;
    };
  });
  othr->callback([&] {
    action = [&] {
      auto g = read_graph(ograph);
      auto c = has_cycle_through(*g, olen, othrough, ocap > 0 ? ocap : kDefaultCycleSearchCap);
      emit(G, c ? json{{"found", true}, {"cycle", to_json(*c)}} : json{{"found", false}});
      return 0;
    };
  });

  // verify -------------------------------------------------------------------
  auto* verify = app.add_subcommand("verify", "re-check emitted witnesses")->require_subcommand(1);
  auto* vw = verify->add_subcommand("witness", "re-verify a witness JSON against a graph");
  std::string vgraph, vwit = "-";
  std::optional<int> vk;
  std::vector<Vertex> vW;
  vw->add_option("graph", vgraph, "graph file")->required();
  vw->add_option("--witness", vwit, "witness JSON (default stdin)");
  vw->add_option("--k", vk, "claimed k (default: the witness's profile)");
  vw->add_option("--w", vW, "extra problematic vertices (default: the witness's profile)");
  vw->callback([&] {
    action = [&] {
      auto g = read_graph(vgraph);
      auto j = read_json(vwit);
      auto w = witness_from_json(j);
      int k = vk ? *vk : j.contains("profile") ? j["profile"].value("k", 1) : 1;
      auto W = !vW.empty() || vk || !j.contains("profile") ? vW : j["profile"].value("W", std::vector<Vertex>{});
      bool ok = verify_witness(*g, mark_problematic(*g, W, k), w);
      emit(G, json{{"kind", kind_name(w.kind)}, {"verified", ok}});
      if (!ok) return 1;
      return exit_for(w);
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
    return 1;
  }
  try {
    return action ? action() : 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
