#include <doctest.h>

#include <filesystem>
#include <sstream>

#include <unistd.h>

#include <json.hpp>

#include "fgl/commands.hpp"
#include "fgl/graph_io.hpp"

using namespace fgl;
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct TempDir {
  fs::path path;
  explicit TempDir(const std::string& tag)
      : path(fs::temp_directory_path() / ("fgl_cmd_" + tag + "_" + std::to_string(::getpid()))) {
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

struct Run {
  int code;
  std::string out;
  std::string err;
};

template <class Args, class Fn>
Run run(Fn fn, const Args& args) {
  std::ostringstream out, err;
  const int code = fn(args, out, err);
  return {code, out.str(), err.str()};
}

VerifyArgs verify_args(const char* family, unsigned n) {
  VerifyArgs a;
  a.family = family;
  a.n = n;
  return a;
}

}  // namespace

TEST_CASE("construct writes the graph and its sidecar") {
  TempDir tmp("construct");
  ConstructArgs a;
  a.family = "psl2";
  a.n = 2;
  a.pi = "chi";
  a.out = tmp.path / "g.g6";
  const auto r = run(cmd_construct, a);
  REQUIRE(r.code == kExitPass);
  const Graph g = read_graph(a.out);
  CHECK(g.order() == 15);
  CHECK(g.edge_count() == 30);
  const auto meta = json::parse(read_file(sidecar_path(a.out)));
  CHECK(meta["family"] == "psl2");
  CHECK(meta["q"] == 4);
  CHECK(meta["pi"] == "chi");
  CHECK(meta["vertices"].size() == 15);
  CHECK(meta["sylow"].size() == 15);

  // Same arguments, same bytes.
  const std::string first = read_file(a.out);
  const std::string first_meta = read_file(sidecar_path(a.out));
  REQUIRE(run(cmd_construct, a).code == kExitPass);
  CHECK(read_file(a.out) == first);
  CHECK(read_file(sidecar_path(a.out)) == first_meta);

  a.family = "psu3";
  a.pi = "odd-complement";
  a.out = tmp.path / "g.json";
  REQUIRE(run(cmd_construct, a).code == kExitPass);
  const Graph pi = read_graph(a.out);
  CHECK(pi.order() == 195);
  CHECK(pi.edge_count() == 12480);
}

TEST_CASE("construct rejects bad arguments with exit 2") {
  TempDir tmp("bad");
  ConstructArgs a;
  a.family = "sz";
  a.n = 2;
  a.out = tmp.path / "g.g6";
  auto r = run(cmd_construct, a);
  CHECK(r.code == kExitUsage);
  CHECK(r.err.find("SzEvenExponent") != std::string::npos);
  CHECK(!fs::exists(a.out));
  a.family = "a5";
  a.n = 3;
  CHECK(run(cmd_construct, a).code == kExitUsage);
  a.family = "psl2";
  a.pi = "three";
  CHECK(run(cmd_construct, a).code == kExitUsage);
}

TEST_CASE("verify reports") {
  auto r = run(cmd_verify, verify_args("psl2", 3));
  REQUIRE(r.code == kExitPass);
  auto doc = json::parse(r.out);
  CHECK(doc["schema"] == "fgl-cert-1");
  CHECK(doc["status"] == "pass");
  CHECK(doc["chi_array"]["observed"]["text"] == "{8,6,1;1,1,8}");
  CHECK(doc["chi_array"]["observed"]["b"] == json::array({8, 6, 1}));
  CHECK(doc["chi_array"]["observed"]["c"] == json::array({1, 1, 8}));
  const auto& pi = doc["pi_deza"]["observed"];
  CHECK(json::array({pi["v"], pi["k"], pi["b"], pi["a"]}) == json::array({63, 48, 40, 36}));

  r = run(cmd_verify, verify_args("sz", 3));
  REQUIRE(r.code == kExitPass);
  doc = json::parse(r.out);
  CHECK(doc["ddg"]["m"] == 65);
  CHECK(doc["ddg"]["r"] == 7);

  r = run(cmd_verify, verify_args("psl2", 2));
  REQUIRE(r.code == kExitPass);
  doc = json::parse(r.out);
  CHECK(doc["pi_deza"]["strict"]["observed"] == false);
  CHECK(doc["pi_deza"]["strict"]["predicted"] == false);
  CHECK(doc["omega"]["applicable"] == false);

  auto bad = verify_args("psl2", 2);
  bad.verify_orders = "some";
  CHECK(run(cmd_verify, bad).code == kExitUsage);
  CHECK(run(cmd_verify, verify_args("sz", 4)).code == kExitUsage);
}

TEST_CASE("report tables") {
  ReportArgs a;
  a.max_n = 4;
  auto r = run(cmd_report, a);
  REQUIRE(r.code == kExitPass);
  for (const char* row : {"(15,8,4,4)", "(63,48,40,36)", "(255,224,208,196)", "(455,384,324,320)",
                          "(195,128,84,64)", "(3591,3072,2628,2560)", "{64,54,1;1,9,64}"}) {
    CHECK_MESSAGE(r.out.find(row) != std::string::npos, row);
  }
}

TEST_CASE("analyze imported graphs") {
  TempDir tmp("analyze");
  Graph matching(6);
  matching.add_edge(0, 1);
  matching.add_edge(2, 3);
  matching.add_edge(4, 5);
  write_graph(tmp.path / "octa.json", matching.complement(), GraphFormat::Json);
  AnalyzeArgs a;
  a.input = tmp.path / "octa.json";
  a.checks = {"multipartite"};
  auto r = run(cmd_analyze, a);
  REQUIRE(r.code == kExitPass);
  auto doc = json::parse(r.out);
  CHECK(doc["checks"]["multipartite"]["complete_multipartite"] == json({{"count", 3}, {"size", 2}}));

  write_graph(tmp.path / "petersen.g6", petersen_graph(), GraphFormat::Graph6);
  a.input = tmp.path / "petersen.g6";
  a.checks = {"drg", "antipodal"};
  r = run(cmd_analyze, a);
  CHECK(r.code == kExitFail);
  doc = json::parse(r.out);
  CHECK(doc["checks"]["drg"]["intersection_array"]["text"] == "{3,2;1,1}");
  CHECK(doc["checks"]["antipodal"]["error"] == "NotAntipodal");

  write_file_atomic(tmp.path / "junk.g6", "not a graph\n");
  a.input = tmp.path / "junk.g6";
  CHECK(run(cmd_analyze, a).code == kExitUsage);
  a.input = tmp.path / "absent.g6";
  CHECK(run(cmd_analyze, a).code == kExitUsage);
  a.input = tmp.path / "petersen.g6";
  a.checks = {"girth"};
  CHECK(run(cmd_analyze, a).code == kExitUsage);
  a.checks = {"ddg"};
  CHECK(run(cmd_analyze, a).code == kExitUsage);
}

TEST_CASE("exported chi-graph certificates match the in-memory pipeline") {
  TempDir tmp("roundtrip");
  ExportArgs e;
  e.family = "psl2";
  e.n = 2;
  e.graph = "chi";
  e.out = tmp.path / "chi.g6";
  REQUIRE(run(cmd_export, e).code == kExitPass);

  AnalyzeArgs a;
  a.input = e.out;
  a.checks = {"deza", "ddg", "drg"};
  const auto r = run(cmd_analyze, a);
  REQUIRE(r.code == kExitPass);
  const auto analyzed = nlohmann::ordered_json::parse(r.out);
  CHECK(analyzed["checks"]["deza"]["v"] == 15);
  CHECK(analyzed["checks"]["deza"]["k"] == 4);
  CHECK(analyzed["checks"]["deza"]["b"] == 1);
  CHECK(analyzed["checks"]["deza"]["a"] == 0);

  const auto verified = nlohmann::ordered_json::parse(run(cmd_verify, verify_args("psl2", 2)).out);
  CHECK(analyzed["checks"]["deza"].dump() == verified["chi_deza"]["observed"].dump());
  CHECK(analyzed["checks"]["drg"]["intersection_array"].dump() == verified["chi_array"]["observed"].dump());

  // Conversion keeps the graph.
  ExportArgs c;
  c.input = e.out;
  c.out = tmp.path / "chi.json";
  REQUIRE(run(cmd_export, c).code == kExitPass);
  CHECK(read_graph(c.out) == read_graph(e.out));

  e.graph = "omega-cliques";
  e.family = "psu3";
  e.out = tmp.path / "omega.json";
  REQUIRE(run(cmd_export, e).code == kExitPass);
  CHECK(read_graph(e.out).edge_count() == 65 * 3);
  e.graph = "nonsense";
  CHECK(run(cmd_export, e).code == kExitUsage);
}

TEST_CASE("cache directory") {
  TempDir tmp("cache");
  auto v = verify_args("psl2", 3);
  v.cache = tmp.path;
  const auto first = run(cmd_verify, v);
  REQUIRE(first.code == kExitPass);
  const auto second = run(cmd_verify, v);
  CHECK(second.code == kExitPass);
  CHECK(second.out == first.out);

  ReportArgs rep;
  rep.max_n = 3;
  rep.cache = tmp.path;
  const auto table = run(cmd_report, rep).out;
  std::istringstream lines(table);
  std::string line;
  bool marked = false;
  while (std::getline(lines, line))
    if (line.find("(63,48,40,36)") != std::string::npos) marked = line.find("yes") != std::string::npos;
  CHECK(marked);

  ConstructArgs c;
  c.family = "psl2";
  c.n = 3;
  c.out = tmp.path / "a.g6";
  c.cache = tmp.path;
  REQUIRE(run(cmd_construct, c).code == kExitPass);
  c.out = tmp.path / "b.g6";
  REQUIRE(run(cmd_construct, c).code == kExitPass);
  CHECK(read_file(tmp.path / "a.g6") == read_file(tmp.path / "b.g6"));
  CHECK(read_file(sidecar_path(tmp.path / "a.g6")) == read_file(sidecar_path(tmp.path / "b.g6")));
}
