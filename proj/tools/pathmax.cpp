#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "pathmax/errors.hpp"
#include "pathmax/extremal.hpp"
#include "pathmax/optimizer.hpp"
#include "pathmax/oracle.hpp"
#include "pathmax/paths.hpp"
#include "pathmax/tsv.hpp"

namespace {

std::uint64_t parse_u64(const std::string& text, const std::string& what) {
  try {
    std::size_t pos = 0;
    std::uint64_t v = std::stoull(text, &pos);
    if (pos != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw pathmax::HypothesisError("bad " + what + " '" + text +
                                   "': expected a non-negative integer");
  }
}

void print_value(const std::string& key, const pathmax::Label& v,
                 unsigned decimal) {
  std::cout << key << "=" << v.str() << "\n";
  if (decimal > 0) std::cout << key << "~=" << v.decimal(decimal) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"counting and maximizing length-k paths in labelled graphs"};
  app.require_subcommand(1);
  int exit_code = 0;

  // count
  std::string count_file;
  std::uint64_t count_k = 0;
  unsigned count_decimal = 0;
  auto* count = app.add_subcommand(
      "count", "k-content of a graph (the number of k-paths when all labels are 1)");
  count->add_option("file", count_file, "graph TSV file")->required();
  count->add_option("-k", count_k, "path length")->required();
  count->add_option("--decimal", count_decimal,
                    "also print a truncated decimal approximation");
  count->callback([&] {
    pathmax::Graph g = pathmax::read_graph_file(count_file);
    pathmax::Label ct = pathmax::count_k_paths(g, count_k);
    std::cout << ct.str() << "\n";
    if (count_decimal > 0) std::cout << "~" << ct.decimal(count_decimal) << "\n";
  });

  // girth
  std::string girth_file;
  auto* girth_cmd =
      app.add_subcommand("girth", "length of a shortest directed cycle");
  girth_cmd->add_option("file", girth_file, "graph TSV file")->required();
  girth_cmd->callback([&] {
    pathmax::Graph g = pathmax::read_graph_file(girth_file);
    auto gi = pathmax::girth(g);
    if (gi)
      std::cout << *gi << "\n";
    else
      std::cout << "inf\n";
  });

  // check
  std::string check_file;
  std::uint64_t check_k = 0;
  auto* check = app.add_subcommand(
      "check", "verify girth >= k and that every edge pair shares a k-path");
  check->add_option("file", check_file, "graph TSV file")->required();
  check->add_option("-k", check_k, "path length")->required();
  check->callback([&] {
    pathmax::Graph g = pathmax::read_graph_file(check_file);
    auto gi = pathmax::girth(g);
    bool girth_ok = pathmax::check_no_short_loops(g, check_k);
    auto violation = pathmax::chirvasitu_violation(g, check_k);
    std::cout << "girth=" << (gi ? std::to_string(*gi) : "inf") << "\n";
    std::cout << "girth_ok=" << (girth_ok ? "yes" : "no") << "\n";
    std::cout << "chirvasitu_ok=" << (violation ? "no" : "yes") << "\n";
    if (violation)
      std::cout << "chirvasitu_violation=" << violation->first << ","
                << violation->second << "\n";
    if (!girth_ok || violation) exit_code = 1;
  });

  // bound
  std::string bound_n, bound_mode = "nat";
  std::uint64_t bound_k = 0;
  bool bound_acyclic = false;
  unsigned bound_decimal = 0;
  auto* bound = app.add_subcommand(
      "bound", "extremal k-content for a given total weight");
  bound->add_option("-N", bound_n,
                    "total weight (integer; rational in rat mode)")
      ->required();
  bound->add_option("-k", bound_k, "path length")->required();
  bound->add_option("--mode", bound_mode, "label domain (default nat)")
      ->check(CLI::IsMember({"nat", "rat"}));
  bound->add_flag("--acyclic", bound_acyclic, "acyclic maximum P only");
  bound->add_option("--decimal", bound_decimal,
                    "also print truncated decimal approximations");
  bound->callback([&] {
    if (bound_mode == "rat") {
      if (bound_acyclic)
        throw pathmax::HypothesisError(
            "--acyclic applies to nat mode only");
      pathmax::Label W = pathmax::Label::parse(bound_n);
      print_value("sup", pathmax::semiring_bound(W, bound_k), bound_decimal);
      return;
    }
    std::uint64_t N = parse_u64(bound_n, "weight");
    if (bound_acyclic) {
      print_value("P", pathmax::acyclic_bound(N, bound_k), bound_decimal);
    } else {
      pathmax::Label P = pathmax::acyclic_bound(N, bound_k);
      pathmax::Label kP = pathmax::loop_bound(N, bound_k);
      std::cout << "P=" << P.str() << " kP=" << kP.str() << "\n";
      if (bound_decimal > 0)
        std::cout << "P~=" << P.decimal(bound_decimal)
                  << " kP~=" << kP.decimal(bound_decimal) << "\n";
    }
  });

  // construct
  std::string cons_n, cons_shape, cons_out;
  std::uint64_t cons_k = 0;
  auto* cons = app.add_subcommand(
      "construct", "build an extremal graph of the given weight");
  cons->add_option("-N", cons_n, "total weight (rational for --shape rational)")
      ->required();
  cons->add_option("-k", cons_k, "path length")->required();
  cons->add_option("--shape", cons_shape, "path | loop | rational")
      ->required()
      ->check(CLI::IsMember({"path", "loop", "rational"}));
  cons->add_option("-o,--out", cons_out, "output TSV file")->required();
  cons->callback([&] {
    pathmax::Graph g;
    if (cons_shape == "path")
      g = pathmax::construct_extremal_acyclic(parse_u64(cons_n, "weight"),
                                              cons_k);
    else if (cons_shape == "loop")
      g = pathmax::construct_extremal_loop(parse_u64(cons_n, "weight"), cons_k);
    else
      g = pathmax::construct_extremal_rational(pathmax::Label::parse(cons_n),
                                               cons_k);
    pathmax::write_graph_file(g, cons_out);
    std::cout << "ct=" << pathmax::count_k_paths(g, cons_k).str() << "\n";
  });

  // optimize
  std::string opt_file, opt_out, opt_trace, opt_mode = "nat";
  std::uint64_t opt_k = 0;
  auto* opt = app.add_subcommand(
      "optimize", "rewrite a graph into an extremal k-loop of equal weight");
  opt->add_option("file", opt_file, "graph TSV file")->required();
  opt->add_option("-k", opt_k, "path length")->required();
  opt->add_option("-o,--out", opt_out, "output TSV file")->required();
  opt->add_option("--trace", opt_trace, "write the rewrite trace to this file");
  opt->add_option("--mode", opt_mode, "label domain (default nat)")
      ->check(CLI::IsMember({"nat", "rat"}));
  opt->callback([&] {
    pathmax::Graph g = pathmax::read_graph_file(opt_file);
    pathmax::Mode mode =
        opt_mode == "rat" ? pathmax::Mode::Rat : pathmax::Mode::Nat;
    pathmax::Label before = pathmax::count_k_paths(g, opt_k);
    auto [result, trace] = pathmax::optimize(g, opt_k, mode);
    pathmax::write_graph_file(result, opt_out);
    if (!opt_trace.empty()) {
      std::ofstream tf(opt_trace);
      if (!tf)
        throw pathmax::ParseError(opt_trace + ": cannot open file for writing");
      tf << trace.to_text();
    }
    std::cout << "steps=" << trace.steps.size() << "\n";
    std::cout << "ct_before=" << before.str() << "\n";
    std::cout << "ct_after=" << pathmax::count_k_paths(result, opt_k).str()
              << "\n";
    std::cout << "weight=" << result.weight().str() << "\n";
  });

  // verify
  std::uint64_t ver_n = 0, ver_k = 0, ver_jobs = 1;
  bool ver_fast = false, ver_acyclic = false, ver_progress = false;
  std::string ver_argmax;
  auto* ver = app.add_subcommand(
      "verify", "exhaustively check the bound for one (N, k) pair");
  ver->add_option("-N", ver_n, "total integer weight")->required();
  ver->add_option("-k", ver_k, "path length")->required();
  ver->add_flag("--fast", ver_fast,
                "cap vertices at N+1 instead of the exhaustive 2N");
  ver->add_flag("--acyclic", ver_acyclic,
                "check the acyclic bound over acyclic graphs");
  ver->add_flag("--progress", ver_progress, "report progress on stderr");
  ver->add_option("--jobs", ver_jobs, "parallelism cap (currently 1 worker)")
      ->check(CLI::PositiveNumber);
  ver->add_option("--argmax-out", ver_argmax,
                  "write each maximizing graph to PREFIX<i>.tsv");
  ver->callback([&] {
    std::function<void(std::uint64_t)> progress;
    if (ver_progress)
      progress = [](std::uint64_t n) {
        std::cerr << "examined " << n << "\n";
      };
    pathmax::VerifyReport rep =
        ver_acyclic ? pathmax::verify_acyclic_bound(ver_n, ver_k, ver_fast, progress)
                    : pathmax::verify_bound(ver_n, ver_k, ver_fast, progress);
    std::cout << rep.to_text();
    if (!ver_argmax.empty())
      for (std::size_t i = 0; i < rep.argmax.size(); ++i)
        pathmax::write_graph_file(rep.argmax[i],
                                  ver_argmax + std::to_string(i) + ".tsv");
    if (!rep.bound_matched) {
      bool over = rep.max_count > rep.bound;
      std::cout << "over_bound: " << (over ? "yes" : "no") << "\n";
      if (over && !rep.argmax.empty()) {
        std::cout << "witness:\n";
        pathmax::write_graph(rep.argmax.front(), std::cout);
      }
      exit_code = 1;
    }
  });

  // paths
  std::string paths_file;
  std::uint64_t paths_k = 0;
  std::uint64_t paths_limit = pathmax::kDefaultEnumerationLimit;
  auto* paths_cmd = app.add_subcommand(
      "paths", "list all k-paths as edge id sequences with contents");
  paths_cmd->add_option("file", paths_file, "graph TSV file")->required();
  paths_cmd->add_option("-k", paths_k, "path length")->required();
  paths_cmd->add_option("--limit", paths_limit,
                        "fail beyond this many paths (default 10^7)");
  paths_cmd->callback([&] {
    pathmax::Graph g = pathmax::read_graph_file(paths_file);
    auto all = pathmax::enumerate_k_paths(g, paths_k, paths_limit);
    for (const pathmax::Path& p : all) {
      for (std::size_t i = 0; i < p.edge_ids.size(); ++i) {
        if (i) std::cout << ',';
        std::cout << p.edge_ids[i];
      }
      std::cout << '\t' << pathmax::path_content(g, p).str() << "\n";
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const pathmax::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const pathmax::HypothesisError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const pathmax::LimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return exit_code;
}
