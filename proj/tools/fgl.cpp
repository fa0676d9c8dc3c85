// fgl: build and check fusion graphs of PSL2(q), Sz(q) and PSU3(q), q = 2^n.

#include <iostream>

#include <CLI11.hpp>

#include "fgl/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Fusion graphs of involution classes in PSL2(2^n), Sz(2^n) and PSU3(2^n)"};
  app.require_subcommand(1);

  fgl::ConstructArgs construct;
  auto* c = app.add_subcommand("construct", "Build a fusion graph and write it with a metadata sidecar");
  c->add_option("family,--family", construct.family, "psl2, sz or psu3")->required();
  c->add_option("--n", construct.n, "q = 2^n")->required();
  c->add_option("--pi", construct.pi, "chi, odd-complement or a comma-separated list of orders")
      ->capture_default_str();
  c->add_option("--out", construct.out, "output file (.g6 or .json)")->required();
  c->add_option("--format", construct.format, "json or graph6 (default: from the extension)");
  c->add_option("--cache", construct.cache, "cache directory");

  fgl::VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "Run the full verification pipeline");
  v->add_option("family,--family", verify.family, "psl2, sz or psu3")->required();
  v->add_option("--n", verify.n, "q = 2^n")->required();
  v->add_option("--verify-orders", verify.verify_orders,
                "full, sampled or off; classes of at most 4000 involutions are always checked in full")
      ->capture_default_str();
  v->add_option("--samples", verify.samples, "pairs drawn by --verify-orders sampled")->capture_default_str();
  v->add_option("--out", verify.out, "write the JSON report here instead of stdout");
  v->add_option("--cache", verify.cache, "cache directory");

  fgl::AnalyzeArgs analyze;
  auto* a = app.add_subcommand("analyze", "Run graph checks on a graph file");
  a->add_option("input,--in", analyze.input, "graph file (graph6 or JSON)")->required();
  a->add_option("--check", analyze.checks, "drg, antipodal, deza, ddg, spectrum, multipartite")
      ->required()
      ->delimiter(',');
  a->add_option("--partition", analyze.partition, "JSON class labels for ddg (default: the sidecar)");
  a->add_option("--out", analyze.out, "write the JSON result here instead of stdout");

  fgl::ReportArgs report;
  auto* r = app.add_subcommand("report", "Print tables of predicted parameters");
  r->add_option("--max-n", report.max_n, "largest exponent n")->capture_default_str()->check(CLI::Range(2u, 24u));
  r->add_option("--cache", report.cache, "cache directory with verify results");

  fgl::ExportArgs exp;
  auto* e = app.add_subcommand("export", "Write one of the pipeline graphs, or convert a graph file");
  e->add_option("family,--family", exp.family, "psl2, sz or psu3");
  e->add_option("--n", exp.n, "q = 2^n");
  e->add_option("--graph", exp.graph, "chi, pi, phi, commuting, omega-multipartite, omega-cliques")
      ->capture_default_str();
  e->add_option("--in", exp.input, "convert this graph file instead");
  e->add_option("--out", exp.out, "output file")->required();
  e->add_option("--format", exp.format, "json or graph6 (default: from the extension)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? 0 : fgl::kExitUsage;
  }

  if (*c) return fgl::cmd_construct(construct, std::cout, std::cerr);
  if (*v) return fgl::cmd_verify(verify, std::cout, std::cerr);
  if (*a) return fgl::cmd_analyze(analyze, std::cout, std::cerr);
  if (*r) return fgl::cmd_report(report, std::cout, std::cerr);
  if (!exp.input && (exp.family.empty() || exp.n == 0)) {
    std::cerr << "export needs --in, or a family and --n\n";
    return fgl::kExitUsage;
  }
  return fgl::cmd_export(exp, std::cout, std::cerr);
}
