#include "fgl/commands.hpp"

#include <algorithm>
#include <ostream>

#include <json.hpp>

#include "fgl/closed_form.hpp"
#include "fgl/error.hpp"
#include "fgl/fusion_graphs.hpp"
#include "fgl/graph_io.hpp"
#include "fgl/report.hpp"

namespace fgl {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

int exit_for(const Error& e) {
  switch (e.code()) {
    case Errc::ParseError:
    case Errc::IoError:
    case Errc::InvalidQ:
    case Errc::SzEvenExponent:
    case Errc::UnsupportedDegree:
    case Errc::DegreeMismatch:
    case Errc::NonIrreducibleModulus: return kExitUsage;
    default: return kExitConstruction;
  }
}

GroupSpec parse_group(const std::string& family, unsigned n) { return make_group(parse_family(family), n); }

fs::path cache_dir(const fs::path& root, const GroupSpec& spec) {
  return root / (std::string(family_name(spec.family)) + "-n" + std::to_string(spec.n) + "-v" + kCodeVersion);
}

std::string pi_file_name(const PiSpec& pi) {
  return pi.mode == PiMode::ExplicitSet ? "pi-" + pi.name() + ".g6" : pi.name() + ".g6";
}

ordered_json class_meta(const InvolutionClass& cls) {
  ordered_json out;
  out["schema"] = "fgl-meta-1";
  out["family"] = family_name(cls.spec.family);
  out["n"] = cls.spec.n;
  out["q"] = cls.spec.q;
  out["group"] = cls.spec.label();
  out["field_modulus"] = cls.spec.field.modulus();
  out["dim"] = cls.spec.dim;
  ordered_json vertices = ordered_json::array();
  for (const auto& m : cls.members) vertices.push_back(to_hex(encode(cls.spec.field, m)));
  out["vertices"] = vertices;
  out["sylow"] = cls.sylow.label;
  return out;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

Graph build_pi_graph(const InvolutionClass& cls, const PiSpec& pi) {
  if (pi.mode == PiMode::ExplicitSet) return build_fusion_graph(cls, pi);
  auto graphs = build_fusion_graphs(cls, OrderVerification::Off);
  return pi.mode == PiMode::ChiOnly ? std::move(graphs.chi) : std::move(graphs.pi);
}

Partition read_partition(const fs::path& path, Vertex order) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(read_file(path));
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::ParseError, path.string() + ": " + e.what());
  }
  if (doc.is_object() && doc.contains("sylow")) doc = doc["sylow"];
  if (!doc.is_array() || doc.size() != order) {
    throw Error(Errc::ParseError, path.string() + ": expected " + std::to_string(order) + " class labels");
  }
  std::vector<std::uint32_t> labels;
  for (const auto& x : doc) {
    if (!x.is_number_unsigned()) throw Error(Errc::ParseError, path.string() + ": labels must be unsigned integers");
    labels.push_back(x.get<std::uint32_t>());
  }
  return Partition::from_labels(labels);
}

ordered_json run_check(const std::string& check, const Graph& g, const std::optional<Partition>& partition) {
  if (check == "drg") return ordered_json{{"intersection_array", array_json(intersection_array(g))}};
  if (check == "antipodal") {
    const Partition p = antipodal_classes(g);
    return ordered_json{{"classes", p.count}, {"size", p.uniform_size()}};
  }
  if (check == "deza") return deza_json(deza_check(g));
  if (check == "ddg") {
    if (!partition) throw Error(Errc::ParseError, "ddg needs a partition (sidecar or --partition)");
    return ddg_json(ddg_check(g, *partition));
  }
  if (check == "spectrum") return spectrum_json(common_neighbor_spectrum(g));
  if (check == "multipartite") {
    return ordered_json{{"complete_multipartite", blocks_json(recognize_complete_multipartite(g))},
                        {"clique_union", blocks_json(recognize_clique_union(g))}};
  }
  throw Error(Errc::ParseError, "unknown check '" + check + "' (drg, antipodal, deza, ddg, spectrum, multipartite)");
}

GraphFormat output_format(const fs::path& out, const std::optional<std::string>& format) {
  return format ? parse_format(*format) : format_for_path(out);
}

}  // namespace

fs::path sidecar_path(const fs::path& graph_path) {
  fs::path meta = graph_path;
  meta += ".meta.json";
  return meta;
}

int cmd_construct(const ConstructArgs& args, std::ostream& out, std::ostream& err) {
  GroupSpec spec;
  PiSpec pi;
  GraphFormat format{};
  try {
    spec = parse_group(args.family, args.n);
    pi = parse_pi(args.pi);
    format = output_format(args.out, args.format);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  try {
    Graph g;
    ordered_json meta;
    std::optional<fs::path> cached;
    if (args.cache) cached = cache_dir(*args.cache, spec);
    if (cached && fs::exists(*cached / pi_file_name(pi)) && fs::exists(*cached / "class.json")) {
      g = read_graph(*cached / pi_file_name(pi));
      meta = ordered_json::parse(read_file(*cached / "class.json"));
    } else {
      const InvolutionClass cls = involution_class(spec);
      g = build_pi_graph(cls, pi);
      meta = class_meta(cls);
      if (cached) {
        fs::create_directories(*cached);
        write_graph(*cached / pi_file_name(pi), g, GraphFormat::Graph6);
        write_file_atomic(*cached / "class.json", dump(meta));
      }
    }
    meta["pi"] = pi.name();
    write_graph(args.out, g, format);
    write_file_atomic(sidecar_path(args.out), dump(meta));
    out << spec.label() << " pi=" << pi.name() << ": " << g.order() << " vertices, " << g.edge_count()
        << " edges -> " << args.out.string() << "\n";
    return kExitPass;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_for(e);
  }
}

int cmd_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err) {
  GroupSpec spec;
  VerifyOptions options;
  try {
    spec = parse_group(args.family, args.n);
    options.orders = parse_verification(args.verify_orders);
    options.samples = args.samples;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  try {
    const ordered_json wanted = {{"verify_orders", verification_name(options.orders)}, {"samples", options.samples}};
    std::optional<fs::path> cached;
    if (args.cache) cached = cache_dir(*args.cache, spec) / "report.json";

    std::string text;
    bool pass = false;
    std::string stage, failure;
    if (cached && fs::exists(*cached)) {
      const auto doc = ordered_json::parse(read_file(*cached));
      if (doc.value("options", ordered_json()) == wanted) {
        text = dump(doc);
        pass = doc["status"] == "pass";
        if (!pass) {
          stage = doc["failed_stage"].get<std::string>();
          failure = doc["failure"].get<std::string>();
        }
      }
    }
    if (text.empty()) {
      const VerificationReport report = verify_group(spec, options);
      ordered_json doc = report_json(report);
      doc["options"] = wanted;
      text = dump(doc);
      pass = report.passed();
      if (!pass) {
        stage = *report.failed_stage;
        failure = report.failure;
      }
      if (cached) {
        fs::create_directories(cached->parent_path());
        write_file_atomic(*cached, text);
      }
    }
    if (args.out) {
      write_file_atomic(*args.out, text);
      out << spec.label() << ": " << (pass ? "pass" : "FAIL") << " -> " << args.out->string() << "\n";
    } else {
      out << text;
    }
    if (!pass) {
      err << spec.label() << ": verification failed at stage '" << stage << "': " << failure << "\n";
      return kExitFail;
    }
    return kExitPass;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_for(e);
  } catch (const nlohmann::json::exception& e) {
    err << "error: unreadable cache entry: " << e.what() << "\n";
    return kExitUsage;
  }
}

int cmd_analyze(const AnalyzeArgs& args, std::ostream& out, std::ostream& err) {
  Graph g;
  std::optional<Partition> partition;
  try {
    g = read_graph(args.input);
    if (!g.is_simple()) throw Error(Errc::ParseError, args.input.string() + " is not a simple graph");
    if (args.partition) {
      partition = read_partition(*args.partition, g.order());
    } else if (fs::exists(sidecar_path(args.input))) {
      partition = read_partition(sidecar_path(args.input), g.order());
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  ordered_json doc;
  doc["schema"] = kCertSchema;
  doc["v"] = g.order();
  doc["edges"] = g.edge_count();
  ordered_json results = ordered_json::object();
  bool pass = true;
  for (const auto& check : args.checks) {
    try {
      results[check] = run_check(check, g, partition);
    } catch (const Error& e) {
      if (e.code() == Errc::ParseError) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
      }
      results[check] = {{"error", errc_name(e.code())}, {"message", e.what()}};
      pass = false;
    }
  }
  doc["checks"] = results;
  doc["status"] = pass ? "pass" : "fail";
  try {
    if (args.out) write_file_atomic(*args.out, dump(doc));
    else out << dump(doc);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return pass ? kExitPass : kExitFail;
}

int cmd_report(const ReportArgs& args, std::ostream& out, std::ostream& err) {
  std::map<std::pair<Family, unsigned>, bool> verified;
  if (args.cache && fs::is_directory(*args.cache)) {
    for (const auto& entry : fs::directory_iterator(*args.cache)) {
      const fs::path file = entry.path() / "report.json";
      if (!entry.is_directory() || !fs::exists(file)) continue;
      if (!entry.path().filename().string().ends_with(std::string("-v") + kCodeVersion)) continue;
      try {
        const auto doc = ordered_json::parse(read_file(file));
        verified[{parse_family(doc.at("family").get<std::string>()), doc.at("n").get<unsigned>()}] =
            doc.at("status") == "pass";
      } catch (const std::exception& e) {
        err << "warning: skipping " << file.string() << ": " << e.what() << "\n";
      }
    }
  }
  out << parameter_tables(args.max_n, verified);
  return kExitPass;
}

int cmd_export(const ExportArgs& args, std::ostream& out, std::ostream& err) {
  try {
    const GraphFormat format = output_format(args.out, args.format);
    if (args.input) {
      const Graph g = read_graph(*args.input);
      write_graph(args.out, g, format);
      out << args.input->string() << " -> " << args.out.string() << "\n";
      return kExitPass;
    }
    const GroupSpec spec = parse_group(args.family, args.n);
    const std::vector<std::string> known = {"chi", "pi", "phi", "commuting", "omega-multipartite", "omega-cliques"};
    if (std::find(known.begin(), known.end(), args.graph) == known.end()) {
      throw Error(Errc::ParseError, "unknown graph '" + args.graph + "'");
    }
    Graph g;
    try {
      const InvolutionClass cls = involution_class(spec);
      auto graphs = build_fusion_graphs(cls, OrderVerification::Off);
      const auto cover = cover_params(spec.family, spec.q);
      if (args.graph == "chi") g = std::move(graphs.chi);
      else if (args.graph == "pi") g = std::move(graphs.pi);
      else if (args.graph == "commuting") g = std::move(graphs.commuting);
      else if (args.graph == "phi") g = clique_augment(graphs.chi, cls.sylow);
      else if (args.graph == "omega-multipartite") g = omega_graph(graphs.pi, (cover.r - 1) * (cover.r - 1) * cover.mu);
      else g = omega_graph(graphs.pi, cover.k * (cover.r - 2));
      write_file_atomic(sidecar_path(args.out), dump(class_meta(cls)));
    } catch (const Error& e) {
      if (exit_for(e) == kExitUsage) throw;
      err << "error: " << e.what() << "\n";
      return kExitConstruction;
    }
    write_graph(args.out, g, format);
    out << spec.label() << " " << args.graph << ": " << g.order() << " vertices, " << g.edge_count() << " edges -> "
        << args.out.string() << "\n";
    return kExitPass;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_for(e);
  }
}

}  // namespace fgl
