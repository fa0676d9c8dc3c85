#include "fgl/report.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>

#include "fgl/error.hpp"

namespace fgl {

namespace {

using Clock = std::chrono::steady_clock;
using nlohmann::ordered_json;

std::vector<Word> row_copy(std::span<const Word> row) { return {row.begin(), row.end()}; }

bool rows_equal(std::span<const Word> a, std::span<const Word> b) { return std::equal(a.begin(), a.end(), b.begin(), b.end()); }

class Pipeline {
 public:
  Pipeline(const GroupSpec& spec, const VerifyOptions& options) {
    report_.spec = spec;
    report_.options = options;
  }

  VerificationReport run() {
    stage("class", [&] { return build_class(); }) && stage("orders", [&] { return compute_orders(); }) &&
        stage("scope", [&] { return choose_scope(); }) && stage("chi-array", [&] { return check_chi_array(); }) &&
        stage("chi-deza", [&] { return check_chi_deza(); }) && stage("sylow", [&] { return check_sylow(); }) &&
        stage("antipodal", [&] { return check_antipodal(); }) &&
        stage("distance-graphs", [&] { return check_distance_graphs(); }) &&
        stage("pi-deza", [&] { return check_pi_deza(); }) && stage("ddg", [&] { return check_ddg(); }) &&
        stage("p-numbers", [&] { return check_p_numbers(); }) && stage("omega", [&] { return check_omega(); });
    return std::move(report_);
  }

 private:
  bool stage(const char* name, const std::function<bool()>& body) {
    const auto start = Clock::now();
    bool ok = false;
    try {
      ok = body();
    } catch (const Error& e) {
      if (report_.failure.empty()) report_.failure = e.what();
    }
    report_.timings.push_back({name, std::chrono::duration<double>(Clock::now() - start).count()});
    if (!ok) report_.failed_stage = name;
    return ok;
  }

  bool fail(std::string message) {
    report_.failure = std::move(message);
    return false;
  }

  bool build_class() {
    cls_ = involution_class(report_.spec);
    report_.class_size = cls_.size();
    report_.cover = cover_params(report_.spec.family, report_.spec.q);
    report_.predicted_array = theorem2_array(report_.spec.family, report_.spec.q);
    report_.predicted_pi = theorem1_params(report_.spec.family, report_.spec.q);
    report_.lemma1_pi = lemma1_distance2_deza(report_.cover);
    report_.predicted_p = lemma1_p_numbers(report_.cover.k, report_.cover.r, report_.cover.mu);
    report_.predicted_strict = strictness(report_.cover.k, report_.cover.r, report_.cover.mu);
    const auto& c = report_.cover;
    if (cls_.size() != c.r * (c.k + 1)) {
      return fail("class has " + std::to_string(cls_.size()) + " involutions, expected r(k+1) = " +
                  std::to_string(c.r * (c.k + 1)));
    }
    if (!(report_.predicted_array == cover_array(c))) {
      return fail("family array " + report_.predicted_array.to_string() + " differs from the cover array " +
                  cover_array(c).to_string());
    }
    if (!(report_.predicted_pi.normalized == report_.lemma1_pi)) {
      return fail("family Deza parameters differ from the distance-2 parameters of the cover");
    }
    return true;
  }

  bool compute_orders() {
    graphs_ = build_fusion_graphs(cls_, report_.options.orders, report_.options.samples, report_.options.seed);
    report_.census = graphs_.census;
    const auto& census = graphs_.census;
    if (census.even_noncommuting != 0) {
      return fail(std::to_string(census.even_noncommuting) + " non-commuting pairs have even product order, e.g. " +
                  std::to_string(census.even_witness->first) + "," + std::to_string(census.even_witness->second));
    }
    if (census.propagation_mismatches != 0) {
      return fail(std::to_string(census.propagation_mismatches) + " sampled pairs disagree with the propagated graphs");
    }
    return true;
  }

  bool choose_scope() {
    report_.transitive_scope = cls_.size() > kExhaustiveOrderLimit;
    if (report_.transitive_scope) {
      chi_scope_ = PairScope::transitive(graphs_.chi, cls_.action);
      pi_scope_ = PairScope::transitive(graphs_.pi, cls_.action);
      if (!preserves_partition(cls_.sylow, cls_.action)) return fail("conjugation does not preserve the commuting classes");
    }
    return true;
  }

  bool check_chi_array() {
    report_.chi_array = intersection_array(graphs_.chi, chi_scope_);
    if (!(*report_.chi_array == report_.predicted_array)) {
      return fail("chi-graph array " + report_.chi_array->to_string() + ", predicted " +
                  report_.predicted_array.to_string());
    }
    return true;
  }

  bool check_chi_deza() {
    report_.chi_deza = deza_check(graphs_.chi, chi_scope_);
    report_.chi_spectrum = common_neighbor_spectrum(graphs_.chi, chi_scope_);
    const auto expect = lemma1_cover_deza(report_.cover);
    const auto& got = *report_.chi_deza;
    if (got.v != expect.v || got.k != expect.k || got.b != expect.b || got.a != expect.a) {
      return fail("chi-graph Deza (" + std::to_string(got.v) + "," + std::to_string(got.k) + "," +
                  std::to_string(got.b) + "," + std::to_string(got.a) + "), predicted (" + std::to_string(expect.v) +
                  "," + std::to_string(expect.k) + "," + std::to_string(expect.b) + "," + std::to_string(expect.a) + ")");
    }
    std::vector<std::uint64_t> values;
    for (const auto& [count, pairs] : report_.chi_spectrum) values.push_back(count);
    if (values != std::vector<std::uint64_t>{0, report_.cover.mu}) return fail("chi-graph common-neighbour counts are not {0, mu}");
    return true;
  }

  bool check_sylow() {
    const Partition exhaustive = sylow_partition(cls_, graphs_.commuting);
    report_.sylow_is_equivalence = true;
    report_.sylow_classes = exhaustive.count;
    report_.sylow_size = exhaustive.uniform_size();
    if (!(exhaustive == cls_.sylow)) return fail("commuting classes differ from the classes carried by conjugation");
    return true;
  }

  bool check_antipodal() {
    if (!report_.transitive_scope) {
      report_.antipodal = antipodal_classes(graphs_.chi);
    } else {
      // Antipodes of vertex 0, carried to every vertex by the automorphisms
      // checked in choose_scope().
      base_layers_ = distance_layers(graphs_.chi, 0);
      const unsigned d = static_cast<unsigned>(base_layers_.size() - 1);
      auto root = row_copy(base_layers_[d]);
      set_bit(root, 0);
      report_.antipodal = antipodal_partition(propagate_invariant_graph(cls_, root), d);
    }
    report_.antipodal_matches_sylow = *report_.antipodal == cls_.sylow;
    if (!report_.antipodal_matches_sylow) return fail("antipodal classes differ from the commuting classes");
    return true;
  }

  bool check_distance_graphs() {
    if (!report_.transitive_scope) {
      report_.pi_is_distance2 = graphs_.pi == distance_power(graphs_.chi, {2});
      if (!report_.pi_is_distance2) return fail("odd-complement graph differs from the distance-2 graph");
      const Graph phi = clique_augment(graphs_.chi, cls_.sylow);
      report_.phi_is_distance13 = phi == distance_power(graphs_.chi, {1, 3});
      report_.phi_is_complement = phi.complement() == graphs_.pi;
    } else {
      // Rows of vertex 0 plus invariance under the conjugation action.
      const Graph phi = clique_augment(graphs_.chi, cls_.sylow);
      const std::size_t words = graphs_.chi.words_per_row();
      std::vector<Word> d13(words, 0), rest(words, 0);
      for (std::size_t w = 0; w < words; ++w) d13[w] = base_layers_[1][w] | (base_layers_.size() > 3 ? base_layers_[3][w] : 0);
      const auto pi0 = graphs_.pi.row(0);
      const auto phi0 = phi.row(0);
      for (std::size_t w = 0; w < words; ++w) rest[w] = pi0[w] | phi0[w];
      std::vector<Word> all(words, ~Word{0});
      if (const auto tail = graphs_.chi.order() % 64) all.back() = (Word{1} << tail) - 1;
      all[0] &= ~Word{1};
      report_.pi_is_distance2 = rows_equal(pi0, base_layers_[2]) && are_automorphisms(graphs_.pi, cls_.action);
      if (!report_.pi_is_distance2) return fail("odd-complement graph differs from the distance-2 graph at vertex 0");
      report_.phi_is_distance13 = rows_equal(phi0, d13) && are_automorphisms(phi, cls_.action);
      const bool disjoint = popcount_and(pi0, phi0) == 0;
      report_.phi_is_complement = disjoint && rows_equal(rest, all) && report_.phi_is_distance13;
    }
    if (!report_.phi_is_distance13) return fail("clique-augmented graph differs from the {1,3}-distance graph");
    if (!report_.phi_is_complement) return fail("clique-augmented graph is not the complement of the distance-2 graph");
    return true;
  }

  bool check_pi_deza() {
    report_.pi_deza = deza_check(graphs_.pi, pi_scope_);
    const auto& got = *report_.pi_deza;
    const auto& expect = report_.predicted_pi.normalized;
    if (got.v != expect.v || got.k != expect.k || got.b != expect.b || got.a != expect.a) {
      return fail("pi-graph Deza (" + std::to_string(got.v) + "," + std::to_string(got.k) + ",{" +
                  std::to_string(got.b) + "," + std::to_string(got.a) + "}), predicted (" + std::to_string(expect.v) +
                  "," + std::to_string(expect.k) + ",{" + std::to_string(expect.b) + "," + std::to_string(expect.a) +
                  "})");
    }
    if (got.is_strict != report_.predicted_strict) return fail("strictness differs from the prediction");
    return true;
  }

  bool check_ddg() {
    report_.ddg = ddg_check(graphs_.pi, cls_.sylow, pi_scope_);
    const auto& got = *report_.ddg;
    const auto& c = report_.cover;
    if (got.m != c.k + 1 || got.r != c.r || got.lambda_within != c.k * (c.r - 2) ||
        got.lambda_cross != (c.r - 1) * (c.r - 1) * c.mu) {
      return fail("DDG m=" + std::to_string(got.m) + " r=" + std::to_string(got.r) + " within=" +
                  std::to_string(got.lambda_within) + " cross=" + std::to_string(got.lambda_cross));
    }
    return true;
  }

  bool check_p_numbers() {
    const auto p = intersection_numbers(graphs_.chi, 2, 2, chi_scope_);
    auto at = [&](unsigned t) {
      const auto it = p.find(t);
      return it == p.end() ? std::uint64_t{0} : it->second;
    };
    report_.p_numbers = PNumbers{at(0), at(1), at(2), at(3)};
    if (!(*report_.p_numbers == report_.predicted_p)) return fail("p^t_22 differ from the closed forms");
    return true;
  }

  bool check_omega() {
    const auto& c = report_.cover;
    report_.omega_applicable = c.r != c.mu + 2;
    if (!report_.omega_applicable) return true;
    bool all = true;
    for (const std::uint64_t count : {(c.r - 1) * (c.r - 1) * c.mu, c.k * (c.r - 2)}) {
      OmegaCheck check;
      check.c = count;
      check.predicted = lemma2_structure(c.k, c.r, c.mu, count);
      const Graph omega = report_.transitive_scope
                              ? propagate_invariant_graph(cls_, common_count_row(graphs_.pi, count, 0))
                              : omega_graph(graphs_.pi, count);
      if (report_.transitive_scope && !are_automorphisms(omega, cls_.action)) {
        return fail("common-count graph is not invariant under conjugation");
      }
      check.multipartite = recognize_complete_multipartite(omega);
      check.clique_union = recognize_clique_union(omega);
      const EqualBlocks want{static_cast<std::uint32_t>(check.predicted.parts),
                             static_cast<std::uint32_t>(check.predicted.size)};
      if (check.predicted.kind == Lemma2Kind::MultipartiteK) check.match = check.multipartite == want;
      if (check.predicted.kind == Lemma2Kind::CliqueUnion) check.match = check.clique_union == want;
      all = all && check.match;
      report_.omega.push_back(check);
    }
    if (!all) return fail("common-count graphs do not have the predicted structure");
    return true;
  }

  VerificationReport report_;
  InvolutionClass cls_;
  FusionGraphs graphs_;
  PairScope chi_scope_ = PairScope::all_pairs();
  PairScope pi_scope_ = PairScope::all_pairs();
  std::vector<std::vector<Word>> base_layers_;
};

ordered_json bc_json(const std::vector<std::uint64_t>& b, const std::vector<std::uint64_t>& c) {
  return ordered_json{{"b", b}, {"c", c}};
}

template <class T>
ordered_json optional_json(const std::optional<T>& value) {
  return value ? ordered_json(*value) : ordered_json(nullptr);
}

const char* kind_name(Lemma2Kind kind) {
  switch (kind) {
    case Lemma2Kind::MultipartiteK: return "complete-multipartite";
    case Lemma2Kind::CliqueUnion: return "clique-union";
    case Lemma2Kind::NotApplicable: break;
  }
  return "not-applicable";
}

}  // namespace

VerificationReport verify_group(const GroupSpec& spec, const VerifyOptions& options) {
  return Pipeline(spec, options).run();
}

ordered_json array_json(const IntersectionArray& ia) {
  ordered_json out = bc_json(ia.b, ia.c);
  out["text"] = ia.to_string();
  return out;
}

ordered_json deza_json(const DezaCert& cert) {
  return ordered_json{{"v", cert.v},
                      {"k", cert.k},
                      {"b", cert.b},
                      {"a", cert.a},
                      {"strict", cert.is_strict},
                      {"edge_regular", cert.is_edge_regular},
                      {"strongly_regular", cert.is_strongly_regular},
                      {"lambda", optional_json(cert.lambda)},
                      {"mu", optional_json(cert.mu)},
                      {"diameter", optional_json(cert.diameter)}};
}

ordered_json ddg_json(const DdgCert& cert) {
  return ordered_json{{"m", cert.m},
                      {"r", cert.r},
                      {"lambda_within", cert.lambda_within},
                      {"lambda_cross", cert.lambda_cross}};
}

ordered_json spectrum_json(const std::map<std::uint64_t, std::uint64_t>& spectrum) {
  ordered_json out = ordered_json::object();
  for (const auto& [count, pairs] : spectrum) out[std::to_string(count)] = pairs;
  return out;
}

ordered_json blocks_json(const std::optional<EqualBlocks>& blocks) {
  if (!blocks) return nullptr;
  return ordered_json{{"count", blocks->count}, {"size", blocks->size}};
}

ordered_json params_json(const DezaParams& p) { return ordered_json::array({p.v, p.k, p.b, p.a}); }

ordered_json report_json(const VerificationReport& r) {
  ordered_json out;
  out["schema"] = kCertSchema;
  out["family"] = family_name(r.spec.family);
  out["n"] = r.spec.n;
  out["q"] = r.spec.q;
  out["group"] = r.spec.label();
  out["status"] = r.passed() ? "pass" : "fail";
  out["failed_stage"] = r.failed_stage ? ordered_json(*r.failed_stage) : ordered_json(nullptr);
  out["failure"] = r.failure;
  out["scope"] = r.transitive_scope ? "transitive" : "all-pairs";
  out["class_size"] = {{"observed", r.class_size}, {"expected", r.spec.expected_class_size()}};

  ordered_json hist = ordered_json::object();
  for (const auto& [order, pairs] : r.census.histogram) hist[std::to_string(order)] = pairs;
  out["product_orders"] = {{"mode", verification_name(r.census.mode)},
                           {"pairs_checked", r.census.pairs_checked},
                           {"histogram", hist},
                           {"even_noncommuting", r.census.even_noncommuting},
                           {"propagation_mismatches", r.census.propagation_mismatches},
                           {"passed", r.census.passed()}};

  out["cover"] = {{"k", r.cover.k}, {"r", r.cover.r}, {"mu", r.cover.mu}};
  out["chi_array"] = {{"observed", r.chi_array ? array_json(*r.chi_array) : ordered_json(nullptr)},
                      {"predicted", array_json(r.predicted_array)},
                      {"match", r.chi_array && *r.chi_array == r.predicted_array}};
  out["chi_deza"] = {{"observed", r.chi_deza ? deza_json(*r.chi_deza) : ordered_json(nullptr)},
                     {"predicted", params_json(lemma1_cover_deza(r.cover))},
                     {"spectrum", spectrum_json(r.chi_spectrum)}};
  out["sylow"] = {{"classes", r.sylow_classes}, {"size", r.sylow_size}, {"equivalence", r.sylow_is_equivalence}};
  out["antipodal"] = {{"classes", r.antipodal ? ordered_json(r.antipodal->count) : ordered_json(nullptr)},
                      {"size", r.antipodal ? ordered_json(r.antipodal->uniform_size()) : ordered_json(nullptr)},
                      {"matches_sylow", r.antipodal_matches_sylow}};
  out["distance_graphs"] = {{"pi_is_distance_2", r.pi_is_distance2},
                            {"phi_is_distance_1_3", r.phi_is_distance13},
                            {"phi_is_complement_of_pi", r.phi_is_complement}};

  ordered_json pi;
  pi["observed"] = r.pi_deza ? deza_json(*r.pi_deza) : ordered_json(nullptr);
  pi["predicted"] = {{"as_listed", params_json(r.predicted_pi.printed)},
                     {"normalized", params_json(r.predicted_pi.normalized)},
                     {"from_cover", params_json(r.lemma1_pi)}};
  pi["match"] = r.pi_deza && r.pi_deza->v == r.predicted_pi.normalized.v &&
                r.pi_deza->k == r.predicted_pi.normalized.k && r.pi_deza->b == r.predicted_pi.normalized.b &&
                r.pi_deza->a == r.predicted_pi.normalized.a;
  pi["strict"] = {{"observed", r.pi_deza ? ordered_json(r.pi_deza->is_strict) : ordered_json(nullptr)},
                  {"predicted", r.predicted_strict}};
  out["pi_deza"] = pi;
  out["ddg"] = r.ddg ? ddg_json(*r.ddg) : ordered_json(nullptr);

  auto pn = [](const PNumbers& p) { return ordered_json::array({p.p0, p.p1, p.p2, p.p3}); };
  out["p_numbers"] = {{"observed", r.p_numbers ? pn(*r.p_numbers) : ordered_json(nullptr)},
                      {"predicted", pn(r.predicted_p)}};

  ordered_json omega = ordered_json::array();
  for (const auto& check : r.omega) {
    omega.push_back({{"c", check.c},
                     {"predicted", {{"kind", kind_name(check.predicted.kind)},
                                    {"count", check.predicted.parts},
                                    {"size", check.predicted.size}}},
                     {"complete_multipartite", blocks_json(check.multipartite)},
                     {"clique_union", blocks_json(check.clique_union)},
                     {"match", check.match}});
  }
  out["omega"] = {{"applicable", r.omega_applicable}, {"checks", omega}};

  ordered_json timings = ordered_json::object();
  for (const auto& t : r.timings) timings[t.stage] = t.seconds;
  out["timings"] = timings;
  return out;
}

std::string parameter_tables(unsigned max_n, const std::map<std::pair<Family, unsigned>, bool>& verified) {
  std::ostringstream out;
  char line[256];
  for (const Family family : {Family::PSL2, Family::Sz, Family::PSU3}) {
    out << family_name(family) << "\n";
    std::snprintf(line, sizeof line, "  %-4s %-8s %-10s %-26s %-34s %-6s %s\n", "n", "q", "v",
                  "Deza (v,k,b,a) as listed", "chi-graph array", "strict", "verified");
    out << line;
    for (unsigned n = 2; n <= max_n; ++n) {
      if (family == Family::Sz && n % 2 == 0) continue;
      const std::uint64_t q = std::uint64_t{1} << n;
      const auto t1 = theorem1_params(family, q).printed;
      const auto cover = cover_params(family, q);
      const std::string deza = "(" + std::to_string(t1.v) + "," + std::to_string(t1.k) + "," + std::to_string(t1.b) +
                               "," + std::to_string(t1.a) + ")";
      const auto it = verified.find({family, n});
      const char* mark = it == verified.end() ? "-" : it->second ? "yes" : "FAILED";
      std::snprintf(line, sizeof line, "  %-4u %-8llu %-10llu %-26s %-34s %-6s %s\n", n,
                    static_cast<unsigned long long>(q), static_cast<unsigned long long>(t1.v), deza.c_str(),
                    theorem2_array(family, q).to_string().c_str(),
                    strictness(cover.k, cover.r, cover.mu) ? "yes" : "no", mark);
      out << line;
    }
  }
  return out.str();
}

}  // namespace fgl
