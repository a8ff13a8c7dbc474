#include "ehlab/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "ehlab/analysis.hpp"
#include "ehlab/colouring.hpp"
#include "ehlab/construct.hpp"
#include "ehlab/detect.hpp"
#include "ehlab/homog.hpp"
#include "ehlab/patterns.hpp"
#include "ehlab/search.hpp"

namespace ehlab::cli {

namespace {

using Json = nlohmann::ordered_json;
namespace fs = std::filesystem;

// Domain failures that map to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : bytes) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  std::ostringstream out;
  out << "fnv1a64:" << std::hex << std::setw(16) << std::setfill('0') << h;
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct Input {
  Colouring colouring;
  Json meta;
};

Colouring parse_colouring_text(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    Json j;
    try {
      j = Json::parse(text);
      return Colouring(j.at("n").get<int>(), j.at("s").get<int>(), j.at("edges").get<std::vector<int>>());
    } catch (const Json::exception& e) {
      throw ParseError(std::string("json colouring: ") + e.what());
    }
  }
  return parse_ehc(text);
}

// A file path, or the name of a bundled pattern.
Input load(const std::string& source) {
  if (fs::exists(source)) {
    const std::string text = read_file(source);
    return Input{parse_colouring_text(text),
                 Json{{"name", fs::path(source).filename().string()}, {"digest", fnv1a64(text)}}};
  }
  if (auto p = bundled_pattern(source)) {
    return Input{*p, Json{{"name", source}, {"digest", fnv1a64(to_ehc(*p))}}};
  }
  throw UsageError("no such file or bundled pattern: " + source);
}

std::vector<int> one_based(const std::vector<int>& vs) {
  std::vector<int> out(vs);
  for (int& v : out) ++v;
  return out;
}

std::string join(const std::vector<int>& vs, char sep = ' ') {
  std::ostringstream out;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) out << sep;
    out << vs[i];
  }
  return out.str();
}

Json report_header(const std::string& command) {
  return Json{{"report_version", kReportVersion}, {"tool", "ehlab"}, {"version", kVersion}, {"command", command}};
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

void write_output(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot write " + path);
  f << text;
}

std::uint64_t max_leaves_setting(const CLI::Option* flag, std::uint64_t value) {
  if (flag->count() > 0) return value;
  if (const char* env = std::getenv("EHLAB_MAX_LEAVES")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw UsageError("EHLAB_MAX_LEAVES is not an integer");
    }
  }
  return SearchOptions{}.max_leaves;
}

Json stats_json(const SearchStats& st, bool timing) {
  Json j{{"candidates", st.candidates},     {"canonical", st.canonical},       {"noncanonical", st.noncanonical},
         {"pattern_pruned", st.pattern_pruned}, {"bound_pruned", st.bound_pruned}, {"complete", st.complete},
         {"tasks", st.tasks}};
  if (timing) j["wall_seconds"] = st.wall_seconds;
  return j;
}

Json search_json(const SearchResult& r, bool timing) {
  Json j{{"n", r.n}, {"s", r.s}, {"pattern", to_ehc(r.pattern)}};
  j["value"] = r.value ? Json(*r.value) : Json(nullptr);
  j["witness"] = r.witness ? Json(to_ehc(*r.witness)) : Json(nullptr);
  j["stats"] = stats_json(r.stats, timing);
  return j;
}

void print_search_text(std::ostream& out, const SearchResult& r, bool timing) {
  out << "h_" << r.s << "(" << r.n << ", pattern) = ";
  if (r.value)
    out << *r.value << '\n';
  else
    out << "undefined (no pattern-free colouring)\n";
  const auto& st = r.stats;
  out << "candidates " << st.candidates << ", canonical " << st.canonical << ", noncanonical " << st.noncanonical
      << ", pattern-pruned " << st.pattern_pruned << ", bound-pruned " << st.bound_pruned << ", complete "
      << st.complete << ", tasks " << st.tasks << '\n';
  if (timing) out << "wall " << st.wall_seconds << " s\n";
  if (r.witness) out << "witness:\n" << to_ehc(*r.witness);
}

std::string fmt_real(long double x) {
  std::ostringstream out;
  out << std::setprecision(10) << static_cast<double>(x);
  return out.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"ehlab: edge-coloured cliques, forbidden patterns and homogeneous sets"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a colouring");
  std::string gen_kind, gen_out;
  int gen_n = 0, gen_m = 2, gen_s = 0, gen_trials = 20, gen_workers = 1;
  std::vector<int> gen_colours;
  std::vector<std::string> gen_factors;
  std::uint64_t gen_seed = 0;
  bool gen_json = false;
  gen->add_option("--kind", gen_kind, "random | product | gallai-c4 | k4host")
      ->required()
      ->check(CLI::IsMember({"random", "product", "gallai-c4", "k4host"}));
  gen->add_option("--n", gen_n, "Vertex count");
  gen->add_option("--m", gen_m, "Blob size for gallai-c4");
  gen->add_option("--s", gen_s, "Palette size (random; default: largest listed colour)");
  gen->add_option("--colours", gen_colours, "Colours to draw from (random)")->delimiter(',');
  gen->add_option("--factors", gen_factors, "Factor files for product, outermost first")->delimiter(',');
  gen->add_option("--seed", gen_seed, "Seed");
  gen->add_option("--trials", gen_trials, "Random trials per factor (gallai-c4)");
  gen->add_option("--workers", gen_workers, "Worker threads");
  gen->add_option("-o,--output", gen_out, "Output file (default: stdout)");
  gen->add_flag("--json", gen_json, "Summary as JSON");

  // detect
  auto* det = app.add_subcommand("detect", "Find a copy of a pattern or a palette in a host colouring");
  std::string det_host, det_pattern;
  bool det_count = false, det_json = false;
  std::vector<int> det_palette;
  int det_k = 0, det_workers = 1;
  det->add_option("--host", det_host, "Host colouring (ehc file)")->required();
  det->add_option("--pattern", det_pattern, "Pattern file or bundled pattern name");
  det->add_flag("--count", det_count, "Count copies (vertex sets)");
  auto* det_palette_opt = det->add_option("--palette", det_palette, "Palette t1,t2,... to detect instead")->delimiter(',');
  det->add_option("--k", det_k, "Clique size for --palette");
  det->add_option("--workers", det_workers, "Worker threads for --count");
  det->add_flag("--json", det_json, "JSON report");

  // h
  auto* hom = app.add_subcommand("h", "Homogeneous number and S_I values");
  std::string h_host;
  std::vector<int> h_colour_set;
  bool h_json = false;
  hom->add_option("--host", h_host, "Colouring (ehc file)")->required();
  hom->add_option("--colour-set", h_colour_set, "Largest clique using only these colours")->delimiter(',');
  hom->add_flag("--json", h_json, "JSON report");

  // exact
  auto* ex = app.add_subcommand("exact", "Exact h_s(n, pattern) by exhaustive isomorph-free search");
  int ex_n = 0, ex_s = 0, ex_workers = 1;
  std::string ex_pattern;
  std::uint64_t ex_max_leaves = 0, ex_fallback = 0;
  bool ex_json = false, ex_timing = false;
  ex->add_option("--n", ex_n, "Vertex count")->required();
  ex->add_option("--s", ex_s, "Palette size")->required();
  ex->add_option("--pattern", ex_pattern, "Pattern file or bundled pattern name")->required();
  auto* ex_leaves_opt = ex->add_option("--max-leaves", ex_max_leaves, "Cap on extension candidates (env EHLAB_MAX_LEAVES)");
  ex->add_option("--workers", ex_workers, "Worker threads");
  ex->add_option("--fallback-budget", ex_fallback, "On cap, report a minimize upper bound with this budget");
  ex->add_flag("--json", ex_json, "JSON report");
  ex->add_flag("--timing", ex_timing, "Include wall time in the report");

  // minimize
  auto* mn = app.add_subcommand("minimize", "Heuristic upper bound on h_s(n, pattern) by simulated annealing");
  int mn_n = 0, mn_s = 0, mn_chains = 1, mn_workers = 1;
  std::string mn_pattern, mn_out;
  std::uint64_t mn_budget = 100000, mn_seed = 0;
  bool mn_json = false;
  mn->add_option("--n", mn_n, "Vertex count")->required();
  mn->add_option("--s", mn_s, "Palette size")->required();
  mn->add_option("--pattern", mn_pattern, "Pattern file or bundled pattern name")->required();
  mn->add_option("--budget", mn_budget, "Moves per chain");
  mn->add_option("--seed", mn_seed, "Seed");
  mn->add_option("--chains", mn_chains, "Independent chains");
  mn->add_option("--workers", mn_workers, "Worker threads");
  mn->add_option("-o,--output", mn_out, "Write the best colouring here");
  mn->add_flag("--json", mn_json, "JSON report");

  // verify-monotone
  auto* vm = app.add_subcommand("verify-monotone", "Check h_{s+1}(n, c) >= h_s(n, c) exactly");
  int vm_n = 0, vm_s = 0, vm_workers = 1;
  std::string vm_pattern;
  std::uint64_t vm_max_leaves = 0;
  bool vm_json = false, vm_timing = false;
  vm->add_option("--n", vm_n, "Vertex count")->required();
  vm->add_option("--s", vm_s, "Smaller palette size")->required();
  vm->add_option("--pattern", vm_pattern, "Pattern file or bundled pattern name")->required();
  auto* vm_leaves_opt = vm->add_option("--max-leaves", vm_max_leaves, "Cap on extension candidates");
  vm->add_option("--workers", vm_workers, "Worker threads");
  vm->add_flag("--json", vm_json, "JSON report");
  vm->add_flag("--timing", vm_timing, "Include wall time in the report");

  // analyze
  auto* an = app.add_subcommand("analyze", "Evaluate the probabilistic failure bounds");
  an->require_subcommand(1);
  bool an_json = false;
  an->add_flag("--json", an_json, "JSON report");
  auto* an_rec = an->add_subcommand("recolour", "Union bound for random extra-colour recolouring");
  an_rec->set_help_flag("--help", "Print this help message and exit");  // -h would clash with --h
  long double ar_n = 0, ar_h = 0, ar_xi = 0.5L;
  bool ar_json = false;
  an_rec->add_option("--n", ar_n, "n")->required();
  an_rec->add_option("--h", ar_h, "h")->required();
  an_rec->add_option("--xi", ar_xi, "xi in (0,1)");
  an_rec->add_flag("--json", ar_json, "JSON report");
  auto* an_con = an->add_subcommand("construction", "Union bound for the K4-free host colouring");
  long double ac_n = 0, ac_alpha = 0;
  bool ac_json = false;
  an_con->add_option("--n", ac_n, "n")->required();
  an_con->add_option("--alpha", ac_alpha, "alpha(H)")->required();
  an_con->add_flag("--json", ac_json, "JSON report");
  auto* an_tur = an->add_subcommand("turan", "Minimum induced edges given the independence number");
  std::int64_t at_q = 0, at_alpha = 0;
  bool at_json = false;
  an_tur->add_option("--q", at_q, "Set size")->required();
  an_tur->add_option("--alpha", at_alpha, "Independence number")->required();
  an_tur->add_flag("--json", at_json, "JSON report");

  // convert
  auto* cv = app.add_subcommand("convert", "Convert between ehc and JSON, optionally canonically relabelled");
  std::string cv_in, cv_to = "ehc", cv_out;
  bool cv_canonical = false;
  cv->add_option("--in", cv_in, "Input colouring (ehc or JSON)")->required();
  cv->add_option("--to", cv_to, "ehc | json")->check(CLI::IsMember({"ehc", "json"}));
  cv->add_flag("--canonical", cv_canonical, "Relabel to the canonical vertex order (n <= 10)");
  cv->add_option("-o,--output", cv_out, "Output file (default: stdout)");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (*gen) {
      Colouring c = Colouring::monochromatic(1, 1, 1);
      Json summary = report_header("gen");
      summary["kind"] = gen_kind;
      summary["seed"] = gen_seed;
      if (gen_kind == "random") {
        if (gen_n < 1) throw UsageError("gen random: --n is required");
        std::vector<int> colours = gen_colours;
        int s = gen_s;
        if (colours.empty()) {
          if (s < 1) s = 2;
          for (int i = 1; i <= s; ++i) colours.push_back(i);
        }
        if (s < 1) s = *std::max_element(colours.begin(), colours.end());
        c = random_colouring(gen_n, s, colours, gen_seed);
      } else if (gen_kind == "product") {
        if (gen_factors.empty()) throw UsageError("gen product: --factors is required");
        std::vector<Colouring> factors;
        Json files = Json::array();
        for (const auto& f : gen_factors) {
          auto in = load(f);
          factors.push_back(std::move(in.colouring));
          files.push_back(in.meta);
        }
        summary["inputs"] = {{"factors", files}};
        c = lex_product(factors);
      } else if (gen_kind == "gallai-c4") {
        auto g = gallai_product_c4(gen_m, gen_seed, gen_trials, gen_workers);
        summary["m"] = gen_m;
        summary["trials"] = gen_trials;
        summary["factor_h"] = g.factor_h;
        summary["factor_trial"] = g.factor_trial;
        c = std::move(g.product);
      } else {
        if (gen_n < 4) throw UsageError("gen k4host: --n must be at least 4");
        c = k4_free_host_colouring(gen_n, gen_seed);
        const Graph h = host_graph(c);
        summary["host_edges"] = h.edge_count();
      }
      summary["n"] = c.n();
      summary["s"] = c.s();
      summary["used_colours"] = used_colours(c);
      if (gen_out.empty()) {
        out << "# ehlab gen kind=" << gen_kind << " seed=" << gen_seed << '\n' << to_ehc(c);
      } else {
        write_output(gen_out, to_ehc(c));
        if (gen_json) {
          emit(out, summary);
        } else {
          out << "kind " << gen_kind << "\nseed " << gen_seed << "\nn " << c.n() << "\ns " << c.s() << "\nused colours "
              << used_colours(c) << "\nwrote " << gen_out << '\n';
          if (summary.contains("factor_h")) out << "factor h " << join(summary["factor_h"].get<std::vector<int>>()) << '\n';
        }
      }
      return kExitOk;
    }

    if (*det) {
      auto host = load(det_host);
      Json rep = report_header("detect");
      rep["inputs"] = {{"host", host.meta}};
      if (det_palette_opt->count() > 0) {
        if (det_k < 2) throw UsageError("detect: --palette needs --k");
        const Palette palette(det_k, det_palette);
        const auto found = find_palette_copy(host.colouring, palette);
        rep["palette"] = det_palette;
        rep["k"] = det_k;
        rep["free"] = !found.has_value();
        rep["vertices"] = found ? Json(one_based(*found)) : Json(nullptr);
        if (det_json)
          emit(out, rep);
        else if (found)
          out << "palette copy: " << join(one_based(*found)) << '\n';
        else
          out << "palette-free\n";
        return found ? kExitFound : kExitOk;
      }
      if (det_pattern.empty()) throw UsageError("detect: --pattern or --palette is required");
      auto pattern = load(det_pattern);
      rep["inputs"]["pattern"] = pattern.meta;
      const auto found = find_copy(host.colouring, pattern.colouring);
      rep["free"] = !found.has_value();
      rep["embedding"] = found ? Json(one_based(found->map)) : Json(nullptr);
      std::int64_t copies = -1;
      if (det_count) {
        copies = count_copies(host.colouring, pattern.colouring, det_workers);
        rep["copies"] = copies;
      }
      if (det_json) {
        emit(out, rep);
      } else {
        if (found)
          out << "copy: " << join(one_based(found->map)) << '\n';
        else
          out << "free\n";
        if (det_count) out << "copies " << copies << '\n';
      }
      return found ? kExitFound : kExitOk;
    }

    if (*hom) {
      auto host = load(h_host);
      const auto& c = host.colouring;
      Json rep = report_header("h");
      rep["inputs"] = {{"host", host.meta}};
      rep["n"] = c.n();
      rep["s"] = c.s();
      if (!h_colour_set.empty()) {
        const auto sc = s_clique(c, h_colour_set);
        rep["colour_set"] = sc.colours;
        rep["value"] = sc.value;
        rep["witness"] = one_based(sc.witness);
        if (h_json)
          emit(out, rep);
        else
          out << "S_{" << join(sc.colours, ',') << "} = " << sc.value << "\nwitness " << join(one_based(sc.witness))
              << '\n';
        return kExitOk;
      }
      const auto r = homogeneous_number(c);
      rep["value"] = r.value;
      rep["missing_colour"] = r.missing_colour;
      rep["witness"] = one_based(r.witness);
      Json table = Json::object();
      for (int col = 1; col <= c.s(); ++col) table[std::to_string(col)] = r.alpha_by_colour[col];
      rep["alpha_by_colour"] = table;
      if (h_json) {
        emit(out, rep);
      } else {
        out << "h = " << r.value << "\nmissing colour " << r.missing_colour << "\nwitness "
            << join(one_based(r.witness)) << "\ncolour  alpha\n";
        for (int col = 1; col <= c.s(); ++col) out << std::setw(6) << col << "  " << r.alpha_by_colour[col] << '\n';
      }
      return kExitOk;
    }

    if (*ex) {
      auto pattern = load(ex_pattern);
      SearchOptions opt;
      opt.max_leaves = max_leaves_setting(ex_leaves_opt, ex_max_leaves);
      opt.workers = ex_workers;
      Json rep = report_header("exact");
      rep["inputs"] = {{"pattern", pattern.meta}};
      try {
        const auto r = exact_h(ex_n, ex_s, pattern.colouring, opt);
        if (ex_json) {
          const Json body = search_json(r, ex_timing);
          for (const auto& [k, v] : body.items()) rep[k] = v;
          emit(out, rep);
        } else {
          print_search_text(out, r, ex_timing);
        }
        return kExitOk;
      } catch (const CapExceeded& e) {
        rep["error"] = e.what();
        if (ex_fallback > 0) {
          MinimizeOptions mo;
          mo.budget = ex_fallback;
          const auto m = minimize_h(ex_n, ex_s, pattern.colouring, mo);
          rep["upper_bound"] = m.value;
          rep["upper_bound_witness"] = to_ehc(m.colouring);
        }
        if (ex_json) {
          emit(out, rep);
        } else {
          err << "ehlab: " << e.what() << '\n';
          if (rep.contains("upper_bound")) out << "upper bound from minimize: " << rep["upper_bound"] << '\n';
        }
        return kExitCap;
      }
    }

    if (*mn) {
      auto pattern = load(mn_pattern);
      MinimizeOptions mo;
      mo.budget = mn_budget;
      mo.seed = mn_seed;
      mo.chains = mn_chains;
      mo.workers = mn_workers;
      const auto r = minimize_h(mn_n, mn_s, pattern.colouring, mo);
      if (!mn_out.empty()) write_output(mn_out, to_ehc(r.colouring));
      Json rep = report_header("minimize");
      rep["seed"] = mn_seed;
      rep["inputs"] = {{"pattern", pattern.meta}};
      rep["n"] = mn_n;
      rep["s"] = mn_s;
      rep["budget"] = mn_budget;
      rep["chains"] = mn_chains;
      rep["value"] = r.value;
      rep["used_colours"] = r.used_colours;
      rep["chain"] = r.chain;
      rep["moves"] = r.moves;
      rep["accepted"] = r.accepted;
      rep["pattern_rejected"] = r.pattern_rejected;
      rep["witness"] = to_ehc(r.colouring);
      if (mn_json) {
        emit(out, rep);
      } else {
        out << "seed " << mn_seed << "\nh <= " << r.value << " (chain " << r.chain << ", " << r.used_colours
            << " colours used)\nmoves " << r.moves << ", accepted " << r.accepted << ", pattern-rejected "
            << r.pattern_rejected << '\n';
        if (mn_out.empty()) out << to_ehc(r.colouring);
      }
      return kExitOk;
    }

    if (*vm) {
      auto pattern = load(vm_pattern);
      SearchOptions opt;
      opt.max_leaves = max_leaves_setting(vm_leaves_opt, vm_max_leaves);
      opt.workers = vm_workers;
      const auto r = verify_monotone(vm_n, pattern.colouring, vm_s, opt);
      Json rep = report_header("verify-monotone");
      rep["inputs"] = {{"pattern", pattern.meta}};
      rep["n"] = vm_n;
      rep["s"] = vm_s;
      rep["hypothesis_met"] = r.hypothesis_met;
      rep["holds"] = r.holds;
      rep["lower"] = search_json(r.lower, vm_timing);
      rep["upper"] = search_json(r.upper, vm_timing);
      if (vm_json) {
        emit(out, rep);
      } else {
        auto v = [](const SearchResult& x) { return x.value ? std::to_string(*x.value) : std::string("undefined"); };
        out << "h_" << vm_s << "(" << vm_n << ") = " << v(r.lower) << "\nh_" << vm_s + 1 << "(" << vm_n
            << ") = " << v(r.upper) << '\n'
            << (r.holds ? "holds" : "VIOLATED") << (r.hypothesis_met ? "" : " (s does not exceed the pattern's colour count)")
            << '\n';
      }
      return r.holds ? kExitOk : kExitFound;
    }

    if (*an) {
      const bool json = an_json || ar_json || ac_json || at_json;
      Json rep = report_header("analyze");
      rep["log_base"] = 2;
      if (*an_rec) {
        const auto b = recolour_failure_bound(ar_n, ar_h, ar_xi);
        rep["kind"] = "recolour";
        rep["inputs"] = {{"n", static_cast<double>(b.n)}, {"h", static_cast<double>(b.h)}, {"xi", static_cast<double>(b.xi)}};
        rep["set_size"] = static_cast<double>(b.set_size);
        rep["forced_edges"] = static_cast<double>(b.forced);
        rep["log2_bound"] = static_cast<double>(b.log2_bound);
        rep["bound"] = b.bound();
        rep["bite_threshold"] = static_cast<double>(b.bite_threshold);
        rep["bite_regime"] = b.bite_regime;
        rep["vacuous"] = b.vacuous;
        if (!json)
          out << "h^(1+xi) = " << fmt_real(b.set_size) << "\nx = h^(1+2xi) = " << fmt_real(b.forced)
              << "\nlog2 bound = " << fmt_real(b.log2_bound) << "\nbound = " << b.bound() << "\nbite threshold "
              << fmt_real(b.bite_threshold) << (b.bite_regime ? " (h above)" : " (h below)") << '\n'
              << (b.vacuous ? "vacuous" : "non-vacuous (< 1)") << '\n';
      } else if (*an_con) {
        const auto b = construction_failure_bound(ac_n, ac_alpha);
        rep["kind"] = "construction";
        rep["inputs"] = {{"n", static_cast<double>(b.n)}, {"alpha", static_cast<double>(b.alpha_h)}};
        rep["q"] = static_cast<double>(b.q);
        rep["edges"] = static_cast<double>(b.edges);
        rep["log2_p_x"] = static_cast<double>(b.log2_p_x);
        rep["log2_bound"] = static_cast<double>(b.log2_bound);
        rep["log2_bound_closed"] = static_cast<double>(b.log2_bound_closed);
        rep["bound"] = b.bound();
        rep["vacuous"] = b.vacuous;
        if (!json)
          out << "q = " << fmt_real(b.q) << "\ne_X >= " << fmt_real(b.edges) << "\nlog2 p_X <= " << fmt_real(b.log2_p_x)
              << "\nlog2 bound = " << fmt_real(b.log2_bound) << " (closed form " << fmt_real(b.log2_bound_closed)
              << ")\nbound = " << b.bound() << '\n'
              << (b.vacuous ? "vacuous" : "non-vacuous (< 1)") << '\n';
      } else {
        const auto t = turan_min_edges(at_q, at_alpha);
        rep["kind"] = "turan";
        rep["inputs"] = {{"q", t.q}, {"alpha", t.alpha}};
        rep["exact"] = t.exact;
        rep["binomial_over_alpha"] = t.binomial_over_alpha;
        rep["quarter_form"] = t.quarter_form;
        if (!json)
          out << "minimum edges " << t.exact << "\nceil(C(q,2)/alpha) " << t.binomial_over_alpha << "\nq^2/(4 alpha) "
              << t.quarter_form << '\n';
      }
      if (json) emit(out, rep);
      return kExitOk;
    }

    if (*cv) {
      auto in = load(cv_in);
      Colouring c = cv_canonical ? canonical_relabel(in.colouring) : in.colouring;
      std::string text;
      if (cv_to == "json") {
        Json j{{"n", c.n()}, {"s", c.s()}, {"edges", c.row_major()}};
        text = j.dump() + "\n";
      } else {
        text = to_ehc(c);
      }
      if (cv_out.empty())
        out << text;
      else
        write_output(cv_out, text);
      return kExitOk;
    }
  } catch (const CapExceeded& e) {
    err << "ehlab: " << e.what() << '\n';
    return kExitCap;
  } catch (const std::exception& e) {
    err << "ehlab: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace ehlab::cli
