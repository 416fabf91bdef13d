#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "CLI11.hpp"
#include "nilforge/dol.hpp"
#include "nilforge/harness.hpp"

using namespace nilforge;

namespace {

Complex build_capped(int level) {
  BuildOptions opts;
  opts.max_level = max_level_cap();
  return build(level, opts);
}

std::ostream& open_sink(std::ofstream& file, const std::string& path) {
  if (path.empty() || path == "-") return std::cout;
  file.open(path);
  if (!file) throw CLI::ValidationError("cannot open output file: " + path);
  return file;
}

int run_reports(const std::vector<Report>& reps, const std::string& out) {
  std::ofstream f;
  std::ostream& os = open_sink(f, out);
  return write_reports(reps, os);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"nilforge: substitution complexes, their finite coloring, and the"
               " rewriting system over path encodings"};
  app.require_subcommand(1);

  int level = 4;
  std::string out;
  int env_radius = 2;
  int info_depth = 2;
  int cat2_edges = 4;
  long long budget = 1000000;
  int max_edges = 4;

  auto* cb = app.add_subcommand("build", "build the level-N complex and dump it");
  cb->add_option("--level", level)->required();
  cb->add_option("--out", out);

  auto* ca = app.add_subcommand("alphabet", "emit the letter alphabet, one per line");
  ca->add_option("--level", level)->required();
  ca->add_option("--out", out);
  ca->add_option("--env-radius", env_radius);
  ca->add_option("--info-depth", info_depth);

  auto* cp = app.add_subcommand("presentation", "generate the defining relations");
  cp->add_option("--level", level)->required();
  cp->add_option("--out", out);
  cp->add_option("--cat2-edges", cat2_edges);
  cp->add_option("--env-radius", env_radius);
  cp->add_option("--info-depth", info_depth);

  std::string rels_path, word_path, trace_path, strategy = "pipeline";
  int reduce_level = 0;
  auto* cr = app.add_subcommand("reduce", "search a word for zero under the relations");
  cr->add_option("--rels", rels_path, "presentation file from `presentation`");
  cr->add_option("--level", reduce_level, "generate the presentation at this level instead");
  cr->add_option("--word", word_path)->required();
  cr->add_option("--budget", budget);
  cr->add_option("--strategy", strategy)->check(CLI::IsMember({"pipeline", "bfs"}));
  cr->add_option("--trace", trace_path);

  int dol_n = 8;
  bool dol_squares = false;
  std::string dol_seed = "U1";
  auto* cd = app.add_subcommand("dol", "iterate the substitution system");
  cd->add_option("--iterate", dol_n)->required();
  cd->add_flag("--check-squares", dol_squares);
  cd->add_option("--seed", dol_seed)->check(CLI::IsMember({"U1", "L1"}));

  auto* cvs = app.add_subcommand("verify-structure", "structural laws at the given level");
  cvs->add_option("--level", level)->required();
  cvs->add_option("--out", out);

  auto* cvd = app.add_subcommand("verify-determinism", "tile-flip determinism check");
  cvd->add_option("--level", level)->required();
  cvd->add_option("--env-radius", env_radius);
  cvd->add_option("--out", out);

  auto* cnc = app.add_subcommand("nil-check", "ninth powers of short realizable words");
  cnc->add_option("--level", level)->required();
  cnc->add_option("--max-edges", max_edges);
  cnc->add_option("--budget", budget);
  cnc->add_option("--out", out);

  auto* cgc = app.add_subcommand("growth-census", "perimeter-word census and non-collapse");
  cgc->add_option("--level", level)->required();
  cgc->add_option("--budget", budget);
  cgc->add_option("--out", out);

  auto* crep = app.add_subcommand("report", "run every check and aggregate");
  crep->add_option("--level", level);
  crep->add_option("--budget", budget);
  crep->add_option("--out", out);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*cb) {
      Complex cx = build_capped(level);
      std::ofstream f;
      cx.dump(open_sink(f, out));
      return 0;
    }
    if (*ca) {
      auto cx = std::make_shared<const Complex>(build_capped(level));
      ColoringOptions co;
      co.env_radius = env_radius;
      co.info_depth = info_depth;
      Coloring col(cx, co);
      std::ofstream f;
      std::ostream& os = open_sink(f, out);
      for (const auto& tok : col.alphabet().sorted_tokens()) os << tok << "\n";
      return 0;
    }
    if (*cp) {
      auto cx = std::make_shared<const Complex>(build_capped(level));
      ColoringOptions co;
      co.env_radius = env_radius;
      co.info_depth = info_depth;
      ColoringSearch cs = find_deterministic_coloring(cx, co);
      if (!cs.pass) {
        std::cerr << "determinism violation at every searched coloring\n";
        return 1;
      }
      PresentationOptions po;
      po.cat2_edges = cat2_edges;
      Presentation p = generate_presentation(cs.coloring, po);
      std::ofstream f;
      export_presentation(p, open_sink(f, out));
      return 0;
    }
    if (*cr) {
      Presentation pres;
      if (reduce_level > 0) {
        auto cx = std::make_shared<const Complex>(build_capped(reduce_level));
        ColoringSearch cs = find_deterministic_coloring(cx);
        if (!cs.pass) {
          std::cerr << "determinism violation; cannot build relations\n";
          return 1;
        }
        pres = generate_presentation(cs.coloring);
      } else if (!rels_path.empty()) {
        std::ifstream in(rels_path);
        if (!in) {
          std::cerr << "cannot open " << rels_path << "\n";
          return 1;
        }
        ImportError err;
        auto p = import_presentation(in, &err);
        if (!p) {
          std::cerr << rels_path << ":" << err.line << ": " << err.message << "\n";
          return 1;
        }
        pres = std::move(*p);
      } else {
        std::cerr << "reduce needs --rels or --level\n";
        return 1;
      }
      std::ifstream wf(word_path);
      if (!wf) {
        std::cerr << "cannot open " << word_path << "\n";
        return 1;
      }
      std::stringstream ss;
      ss << wf.rdbuf();
      auto w = parse_word(ss.str(), pres.alphabet);
      if (!w) {
        std::cerr << "unparsable word\n";
        return 1;
      }
      Verdict v = reduces_to_zero(*w, pres, budget,
                                  strategy == "bfs" ? Strategy::Bfs : Strategy::Pipeline);
      if (!trace_path.empty()) {
        std::ofstream tf(trace_path);
        for (const RewriteStep& s : v.trace) {
          if (s.kind == RewriteStep::Flip) {
            tf << "FLIP rel=" << s.rel << " pos=" << s.pos
               << " dir=" << (s.left_to_right ? "lr" : "rl") << "\n";
          } else {
            tf << "ZERO cat=" << static_cast<int>(s.kind) << " pos=" << s.pos
               << " len=" << s.len << "\n";
          }
        }
      }
      switch (v.kind) {
        case Verdict::Zero:
          std::cout << "ZERO steps=" << v.trace.size()
                    << " replay=" << (replay_to_zero(*w, v.trace, pres) ? "ok" : "BROKEN")
                    << "\n";
          return 0;
        case Verdict::Irreducible:
          std::cout << "IRREDUCIBLE expansions=" << v.expansions << "\n";
          return 0;
        default:
          std::cout << "UNKNOWN expansions=" << v.expansions << " frontier=" << v.frontier
                    << "\n";
          return 2;
      }
    }
    if (*cd) {
      dol::DolWord w = dol::dol_iterate(
          dol_seed == "U1" ? dol::DolLetter::U1 : dol::DolLetter::L1, dol_n);
      if (w.size() <= 512) {
        std::cout << dol::to_string(w) << "\n";
      } else {
        std::cout << "(word of length " << w.size() << ")\n";
      }
      if (dol_squares) {
        auto rep = dol::has_adjacent_repeat(w);
        if (rep) {
          std::cout << "SQUARE " << dol::to_string(*rep) << "\n";
          return 1;
        }
        std::cout << "SQUARE-FREE\n";
      }
      return 0;
    }
    if (*cvs) return run_reports(cmd_verify_structure(level), out);
    if (*cvd) return run_reports(cmd_verify_determinism(level, env_radius), out);
    if (*cnc) return run_reports(cmd_nil_check(level, max_edges, budget), out);
    if (*cgc) return run_reports(cmd_growth_census(level, budget), out);
    if (*crep) {
      std::vector<Report> all;
      for (auto& r : cmd_verify_structure(level)) all.push_back(r);
      for (auto& r : cmd_verify_determinism(level)) all.push_back(r);
      for (auto& r : cmd_nil_check(std::min(level, 4), max_edges, budget)) all.push_back(r);
      for (auto& r : cmd_growth_census(level, budget)) all.push_back(r);
      return run_reports(all, out);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
