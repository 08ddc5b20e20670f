// Command-line surface: generate instances, color them with the library's
// algorithms, verify colorings, query the exact oracle, inspect orderings,
// run matching simulations, and benchmark across families.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "efl/absorb.hpp"
#include "efl/extremal.hpp"
#include "efl/finish.hpp"
#include "efl/generators.hpp"
#include "efl/greedy.hpp"
#include "efl/hypercore.hpp"
#include "efl/matching.hpp"
#include "efl/nibble.hpp"
#include "efl/ordering.hpp"
#include "efl/pipeline.hpp"

using namespace efl;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("IoError", "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const std::string& path, const std::string& text) {
  if (path == "-" || path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error("IoError", "cannot write " + path);
  out << text;
}

int worker_count() {
  if (const char* env = std::getenv("EFL_THREADS")) {
    int k = std::atoi(env);
    if (k > 0) return k;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

LinearHypergraph make_family(const std::string& family, int n, int q, int r,
                             int D, int m, uint64_t seed) {
  if (family == "projective-plane") return projective_plane(q);
  if (family == "degenerate") return degenerate_plane(n);
  if (family == "complete") return complete_graph(n);
  if (family == "uniform") return uniform_near_regular(n, r, D, 0.2, seed);
  if (family == "random-linear") {
    SizeLaw law;
    law.weights = {{2, 4.0}, {3, 3.0}, {4, 2.0}, {5, 1.0}};
    return random_linear(n, law, m > 0 ? m : 3 * n, seed);
  }
  throw Error("UsageError", "unknown family " + family);
}

EdgeColoring run_algo(const std::string& algo, const LinearHypergraph& H,
                      uint64_t seed) {
  Hierarchy h;  // desk profile defaults
  if (algo == "pipeline") return efl_color(H, h, seed).col;
  if (algo == "greedy") {
    auto ord = size_order(H);
    return list_greedy(H, ord, ListAssignment::full(H.edge_count(), H.n + H.edge_count()),
                       0.0, 1.0);
  }
  if (algo == "dsatur") return dsatur_line(H);
  if (algo == "extremal") return extremal_color(H, h.delta);
  if (algo == "exact") return exact_chromatic_index(H).col;
  if (algo == "stability") return stability_color(H, h);
  if (algo == "sublinear") return sublinear_color(H, 0.05, 0.5);
  throw Error("UsageError", "unknown algorithm " + algo);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"linear hypergraph edge-coloring toolkit"};
  app.require_subcommand(1);

  // ---- gen -----------------------------------------------------------
  auto* gen = app.add_subcommand("gen", "generate an instance");
  std::string g_family = "random-linear", g_out = "-";
  int g_n = 100, g_q = 2, g_r = 3, g_D = 20, g_m = 0;
  uint64_t g_seed = 0;
  bool g_seed_set = false;
  gen->add_option("--family", g_family,
                  "projective-plane|degenerate|complete|uniform|random-linear");
  gen->add_option("--n", g_n);
  gen->add_option("--q", g_q);
  gen->add_option("--r", g_r);
  gen->add_option("--D", g_D);
  gen->add_option("--m", g_m);
  gen->add_option("--seed", g_seed)->each([&](const std::string&) { g_seed_set = true; });
  gen->add_option("--out", g_out);

  // ---- color ---------------------------------------------------------
  auto* color = app.add_subcommand("color", "color an instance");
  std::string c_in, c_out = "-", c_algo = "pipeline", c_report;
  uint64_t c_seed = 0;
  bool c_seed_set = false;
  color->add_option("--in", c_in)->required();
  color->add_option("--algo", c_algo);
  color->add_option("--seed", c_seed)->each([&](const std::string&) { c_seed_set = true; });
  color->add_option("--out", c_out);
  color->add_option("--report", c_report);

  // ---- verify --------------------------------------------------------
  auto* verify = app.add_subcommand("verify", "verify a coloring");
  std::string v_in, v_col;
  verify->add_option("--in", v_in)->required();
  verify->add_option("--coloring", v_col)->required();

  // ---- exact ---------------------------------------------------------
  auto* exact = app.add_subcommand("exact", "exact chromatic index");
  std::string x_in;
  exact->add_option("--in", x_in)->required();

  // ---- order ---------------------------------------------------------
  auto* order = app.add_subcommand("order", "size-monotone reordering");
  std::string o_in;
  double o_tau = 0.5, o_K = 1.0;
  order->add_option("--in", o_in)->required();
  order->add_option("--tau", o_tau);
  order->add_option("--K", o_K);

  // ---- nibble-sim ----------------------------------------------------
  auto* nib = app.add_subcommand("nibble-sim", "matching coverage simulation");
  int nb_n = 2000, nb_r = 3, nb_D = 60, nb_seeds = 20;
  double nb_gamma = 0.2, nb_kappa = 0.05;
  std::string nb_csv = "-";
  uint64_t nb_seed = 0;
  bool nb_seed_set = false;
  nib->add_option("--n", nb_n);
  nib->add_option("--r", nb_r);
  nib->add_option("--D", nb_D);
  nib->add_option("--gamma", nb_gamma);
  nib->add_option("--kappa", nb_kappa);
  nib->add_option("--seeds", nb_seeds);
  nib->add_option("--seed", nb_seed)->each([&](const std::string&) { nb_seed_set = true; });
  nib->add_option("--csv", nb_csv);

  // ---- bench ---------------------------------------------------------
  auto* bench = app.add_subcommand("bench", "timing sweep over families");
  std::string b_families = "projective-plane,degenerate,complete", b_algos = "pipeline",
              b_csv = "-";
  int b_seeds = 3, b_n = 60;
  uint64_t b_seed = 0;
  bool b_seed_set = false;
  bench->add_option("--families", b_families);
  bench->add_option("--algos", b_algos);
  bench->add_option("--n", b_n);
  bench->add_option("--seeds", b_seeds);
  bench->add_option("--seed", b_seed)->each([&](const std::string&) { b_seed_set = true; });
  bench->add_option("--csv", b_csv);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*gen) {
      bool randomized = g_family == "uniform" || g_family == "random-linear";
      if (randomized && !g_seed_set) {
        std::cerr << "error: --seed is required for randomized generation\n";
        return 2;
      }
      auto H = make_family(g_family, g_n, g_q, g_r, g_D, g_m, g_seed);
      spit(g_out, to_lhg(H));
      return 0;
    }
    if (*color) {
      if (!c_seed_set) {
        std::cerr << "error: --seed is required\n";
        return 2;
      }
      auto H = from_lhg(slurp(c_in));
      auto ec = run_algo(c_algo, H, c_seed);
      if (verify_coloring(H, ec)) {
        std::cerr << "internal error: improper coloring produced\n";
        return 1;
      }
      spit(c_out, coloring_to_json(ec) + "\n");
      if (!c_report.empty()) {
        std::ostringstream rs;
        rs << "{\"algo\":\"" << c_algo << "\",\"n\":" << H.n
           << ",\"m\":" << H.edge_count() << ",\"colors\":" << ec.colors_used()
           << ",\"within_n\":" << (ec.colors_used() <= H.n ? "true" : "false")
           << "}\n";
        spit(c_report, rs.str());
      }
      return 0;
    }
    if (*verify) {
      auto H = from_lhg(slurp(v_in));
      auto ec = coloring_from_json(slurp(v_col));
      auto bad = verify_coloring(H, ec);
      if (bad) {
        std::cout << "improper: edges " << bad->first << " and " << bad->second
                  << " intersect and share a color\n";
        return 1;
      }
      std::cout << "proper: " << ec.colors_used() << " colors\n";
      return 0;
    }
    if (*exact) {
      auto H = from_lhg(slurp(x_in));
      auto res = exact_chromatic_index(H);
      std::cout << res.chi << "\n";
      return 0;
    }
    if (*order) {
      auto H = from_lhg(slurp(o_in));
      auto oc = reorder(H, o_tau, o_K);
      std::cout << (oc.kind == ReorderOutcome::Kind::Good ? "good" : "window")
                << " certified=" << (oc.certified ? 1 : 0) << " order=";
      for (EdgeId e : oc.ord.perm) std::cout << e << " ";
      std::cout << "\n";
      return 0;
    }
    if (*nib) {
      if (!nb_seed_set) {
        std::cerr << "error: --seed is required\n";
        return 2;
      }
      std::ostringstream csv;
      csv << "seed,n,r,D,gamma,kappa,uncovered_fraction,in_window\n";
      for (int s = 0; s < nb_seeds; ++s) {
        uint64_t sd = nb_seed + s;
        auto H = uniform_near_regular(nb_n, nb_r, nb_D, nb_kappa, sd);
        std::vector<Vertex> V(nb_n);
        std::iota(V.begin(), V.end(), 0);
        auto pr = pseudorandom_matching(H, nb_gamma, nb_kappa, {V}, sd, 1);
        const auto& st = pr.stats.at(0);
        csv << sd << "," << nb_n << "," << nb_r << "," << nb_D << ","
            << nb_gamma << "," << nb_kappa << "," << st.uncovered_fraction
            << "," << (st.in_window ? 1 : 0) << "\n";
      }
      spit(nb_csv, csv.str());
      return 0;
    }
    if (*bench) {
      if (!b_seed_set) {
        std::cerr << "error: --seed is required\n";
        return 2;
      }
      (void)worker_count();  // sweeps are cheap enough to run sequentially
      std::ostringstream csv;
      csv << "family,n,m,algo,seed,colors,proper,wall_ms\n";
      std::stringstream fams(b_families), algs(b_algos);
      std::vector<std::string> fam_list, algo_list;
      for (std::string t; std::getline(fams, t, ',');) fam_list.push_back(t);
      for (std::string t; std::getline(algs, t, ',');) algo_list.push_back(t);
      for (const auto& fam : fam_list) {
        for (const auto& algo : algo_list) {
          for (int s = 0; s < b_seeds; ++s) {
            uint64_t sd = b_seed + s;
            auto H = make_family(fam, b_n, 3, 3, 20, 0, sd);
            auto t0 = std::chrono::steady_clock::now();
            auto ec = run_algo(algo, H, sd);
            auto t1 = std::chrono::steady_clock::now();
            double ms =
                std::chrono::duration<double, std::milli>(t1 - t0).count();
            bool proper = !verify_coloring(H, ec).has_value();
            csv << fam << "," << H.n << "," << H.edge_count() << "," << algo
                << "," << sd << "," << ec.colors_used() << ","
                << (proper ? 1 : 0) << "," << ms << "\n";
          }
        }
      }
      spit(b_csv, csv.str());
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == "UsageError" ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
