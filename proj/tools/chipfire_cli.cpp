// chipfire: command-line workbench for chip-firing divisor theory on
// multigraphs. See README.md for the file formats and a worked tour.

#include "chipfire/brillnoether.hpp"
#include "chipfire/claims.hpp"
#include "chipfire/divisor.hpp"
#include "chipfire/families.hpp"
#include "chipfire/io.hpp"
#include "chipfire/symmetry.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <iostream>
#include <string>

namespace {

using namespace chipfire;
using json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

json divisor_json(const Divisor& d) {
  return json(std::vector<Int>(d.data(), d.data() + d.size()));
}

// Generic text rendering of a report object: stable, no timestamps, timings
// quarantined behind a trailing marker so outputs are byte-comparable.
void render_text(const json& j, int indent = 0) {
  const std::string pad(indent, ' ');
  for (const auto& [key, value] : j.items()) {
    if (value.is_object()) {
      std::cout << pad << key << ":\n";
      render_text(value, indent + 2);
    } else if (value.is_array() && !value.empty() && value[0].is_object()) {
      std::cout << pad << key << ":\n";
      for (const auto& item : value) {
        std::cout << pad << "  -\n";
        render_text(item, indent + 4);
      }
    } else {
      std::cout << pad << key << ": " << value.dump() << "\n";
    }
  }
}

struct Reporter {
  std::string format = "text";
  Clock::time_point start = Clock::now();

  void emit(json report) const {
    const auto elapsed =
        std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
    if (format == "machine") {
      report["timings"] = {{"total_ms", elapsed.count()}};
      std::cout << report.dump(2) << "\n";
    } else {
      render_text(report);
      std::cout << "--- timings ---\n";
      std::cout << "total_ms: " << elapsed.count() << "\n";
    }
  }
};

void add_format_flag(CLI::App* cmd, Reporter& reporter) {
  cmd->add_option("--format", reporter.format, "output format")
      ->check(CLI::IsMember({"text", "machine"}));
}

std::pair<Int, Int> parse_genus_range(const std::string& text) {
  auto dots = text.find("..");
  if (dots == std::string::npos) {
    Int g = std::stoll(text);
    return {g, g};
  }
  return {std::stoll(text.substr(0, dots)), std::stoll(text.substr(dots + 2))};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"chip-firing divisor workbench"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "generate a graph family member");
  std::string gen_spec, gen_out, gen_marks;
  gen->add_option("spec", gen_spec, "family spec, e.g. 'graph_c(7)'")->required();
  gen->add_option("-o,--out", gen_out, "graph file to write")->required();
  gen->add_option("--marks", gen_marks, "marks sidecar (default: <out>.marks)");

  // fire
  auto* fire = app.add_subcommand("fire", "apply one chip-firing move");
  std::string fire_graph, fire_divisor, fire_out;
  int fire_vertex = 0;
  Reporter fire_fmt;
  fire->add_option("graph", fire_graph)->required();
  fire->add_option("divisor", fire_divisor)->required();
  fire->add_option("-v,--vertex", fire_vertex, "vertex to fire")->required();
  fire->add_option("-o,--out", fire_out, "write the fired divisor here");
  add_format_flag(fire, fire_fmt);

  // reduce
  auto* reduce = app.add_subcommand("reduce", "compute the q-reduced form");
  std::string red_graph, red_divisor, red_out, red_script_out;
  int red_base = 0;
  Reporter red_fmt;
  reduce->add_option("graph", red_graph)->required();
  reduce->add_option("divisor", red_divisor)->required();
  reduce->add_option("--base", red_base, "base vertex (default 0)");
  reduce->add_option("-o,--out", red_out, "write the reduced divisor here");
  reduce->add_option("--script-out", red_script_out, "write the firing script here");
  add_format_flag(reduce, red_fmt);

  // equiv
  auto* equiv = app.add_subcommand("equiv", "decide linear equivalence");
  std::string eq_graph, eq_a, eq_b;
  int eq_base = 0;
  Reporter eq_fmt;
  equiv->add_option("graph", eq_graph)->required();
  equiv->add_option("divisor1", eq_a)->required();
  equiv->add_option("divisor2", eq_b)->required();
  equiv->add_option("--base", eq_base, "base vertex for the reported forms");
  add_format_flag(equiv, eq_fmt);

  // rank
  auto* rankc = app.add_subcommand("rank", "Baker-Norine rank of a divisor");
  std::string rank_graph, rank_divisor;
  int rank_base = 0;
  bool rank_raw_loops = false;
  Reporter rank_fmt;
  rankc->add_option("graph", rank_graph)->required();
  rankc->add_option("divisor", rank_divisor)->required();
  rankc->add_option("--base", rank_base, "base vertex for the reported reduced form");
  rankc->add_flag("--raw-loops", rank_raw_loops,
                  "compute on the graph as given instead of subdividing loops");
  add_format_flag(rankc, rank_fmt);

  // bn-check
  auto* bn = app.add_subcommand("bn-check", "Brill-Noether generality report");
  std::string bn_graph;
  bool bn_exhaustive = false;
  Int bn_max_classes = 0;
  Reporter bn_fmt;
  bn->add_option("graph", bn_graph)->required();
  bn->add_flag("--exhaustive", bn_exhaustive, "scan every rho<0 pair up to 2g-2");
  bn->add_option("--max-classes", bn_max_classes,
                 "hard per-degree class budget (0 = unlimited)");
  add_format_flag(bn, bn_fmt);

  // hyperelliptic
  auto* hyper = app.add_subcommand("hyperelliptic", "search for a degree-2 rank-1 divisor");
  std::string hyper_graph;
  Reporter hyper_fmt;
  hyper->add_option("graph", hyper_graph)->required();
  add_format_flag(hyper, hyper_fmt);

  // gonality
  auto* gon = app.add_subcommand("gonality", "smallest degree with a rank-1 divisor");
  std::string gon_graph;
  Reporter gon_fmt;
  gon->add_option("graph", gon_graph)->required();
  add_format_flag(gon, gon_fmt);

  // aut
  auto* aut = app.add_subcommand("aut", "automorphism group order");
  std::string aut_graph;
  bool aut_list = false, aut_invol = false;
  Reporter aut_fmt;
  aut->add_option("graph", aut_graph)->required();
  aut->add_flag("--list", aut_list, "list all automorphisms");
  aut->add_flag("--involutions", aut_invol, "list the involutions");
  add_format_flag(aut, aut_fmt);

  // export-dot
  auto* dot = app.add_subcommand("export-dot", "write the graph in DOT format");
  std::string dot_graph, dot_out;
  dot->add_option("graph", dot_graph)->required();
  dot->add_option("-o,--out", dot_out, "output file (default: stdout)");

  // verify
  auto* verify = app.add_subcommand("verify", "re-check a rank certificate");
  std::string ver_graph, ver_divisor;
  Int ver_rank = 1;
  Reporter ver_fmt;
  verify->add_option("graph", ver_graph)->required();
  verify->add_option("divisor", ver_divisor)->required();
  verify->add_option("--rank", ver_rank, "claimed rank")->required();
  add_format_flag(verify, ver_fmt);

  // paper-verify
  auto* pv = app.add_subcommand("paper-verify", "run the claim catalog");
  std::string pv_genus, pv_claim;
  Reporter pv_fmt;
  pv->add_option("--genus", pv_genus, "genus range a..b (default: all)");
  pv->add_option("--claim", pv_claim, "only claims whose id contains this");
  add_format_flag(pv, pv_fmt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*gen) {
      FamilySpec spec = parse_family_spec(gen_spec);
      LabeledGraph lg = build(spec);
      save_text(gen_out, graph_to_json(lg.graph));
      std::string marks_path = gen_marks.empty() ? gen_out + ".marks" : gen_marks;
      save_text(marks_path, marks_to_json(lg.marks));
      std::cout << "wrote " << gen_out << " (" << lg.graph.num_vertices()
                << " vertices, " << lg.graph.num_edges() << " edges) and "
                << marks_path << "\n";
      return 0;
    }

    if (*fire) {
      Multigraph g = load_graph(fire_graph);
      Divisor d = load_divisor(fire_divisor);
      Divisor out = chip_fire(g, d, fire_vertex);
      if (!fire_out.empty()) save_text(fire_out, divisor_to_json(out));
      json report;
      report["vertex"] = fire_vertex;
      report["before"] = divisor_json(d);
      report["after"] = divisor_json(out);
      fire_fmt.emit(report);
      return 0;
    }

    if (*reduce) {
      Multigraph g = load_graph(red_graph);
      Divisor d = load_divisor(red_divisor);
      ReductionResult r = q_reduce(g, d, red_base);
      if (!red_out.empty()) save_text(red_out, divisor_to_json(r.reduced));
      if (!red_script_out.empty()) save_text(red_script_out, script_to_json(r.script));
      json report;
      report["base"] = r.base;
      report["input"] = divisor_json(d);
      report["reduced"] = divisor_json(r.reduced);
      report["script"] = divisor_json(r.script);
      red_fmt.emit(report);
      return 0;
    }

    if (*equiv) {
      Multigraph g = load_graph(eq_graph);
      Divisor a = load_divisor(eq_a);
      Divisor b = load_divisor(eq_b);
      bool same = is_equivalent(g, a, b);
      json report;
      report["equivalent"] = same;
      report["reduced1"] = divisor_json(q_reduce(g, a, eq_base).reduced);
      report["reduced2"] = divisor_json(q_reduce(g, b, eq_base).reduced);
      eq_fmt.emit(report);
      return 0;
    }

    if (*rankc) {
      Multigraph g = load_graph(rank_graph);
      Divisor d = load_divisor(rank_divisor);
      LoopPolicy policy = rank_raw_loops ? LoopPolicy::Inert : LoopPolicy::Subdivide;
      Int r = rank(g, d, policy);
      json report;
      report["degree"] = deg(d);
      report["rank"] = r;
      report["subdivided_loops"] = (policy == LoopPolicy::Subdivide && g.has_loops());
      report["reduced"] = divisor_json(q_reduce(g, d, rank_base).reduced);
      rank_fmt.emit(report);
      return 0;
    }

    if (*bn) {
      Multigraph g = load_graph(bn_graph);
      SearchOptions opts{bn_max_classes, bn_exhaustive};
      BNReport r = is_bn_general(g, opts);
      json report;
      report["graph"] = bn_graph;
      report["vertices"] = g.num_vertices();
      report["edges"] = g.num_edges();
      report["genus"] = r.genus_value;
      report["subdivided_loops"] = r.used_subdivision;
      report["mode"] = bn_exhaustive ? "exhaustive" : "check-set";
      report["pairs"] = json::array();
      for (const auto& p : r.pairs) {
        json pj;
        pj["r"] = p.r;
        pj["d"] = p.d;
        pj["rho"] = p.rho_value;
        pj["verdict"] = p.violated ? "violated" : "clean";
        pj["classes_scanned"] = p.classes_scanned;
        if (p.witness) {
          pj["witness"] = divisor_json(*p.witness);
          pj["witness_rank"] = p.witness_rank;
        }
        report["pairs"].push_back(pj);
      }
      report["overall"] = r.general ? "general" : "special";
      bn_fmt.emit(report);
      return 0;
    }

    if (*hyper) {
      Multigraph g = load_graph(hyper_graph);
      auto witness = is_hyperelliptic(g);
      json report;
      report["hyperelliptic"] = witness.has_value();
      report["searched_on_subdivision"] = g.has_loops();
      if (witness) report["witness"] = divisor_json(*witness);
      hyper_fmt.emit(report);
      return 0;
    }

    if (*gon) {
      Multigraph g = load_graph(gon_graph);
      Int value = gonality(g);
      auto witness = exists_rank_at_least(g, value, 1);
      json report;
      report["gonality"] = value;
      if (witness) report["witness"] = divisor_json(*witness);
      gon_fmt.emit(report);
      return 0;
    }

    if (*aut) {
      Multigraph g = load_graph(aut_graph);
      json report;
      report["aut_order"] = aut_order(g);
      auto dump_perms = [](const std::vector<VertexPermutation>& perms) {
        json arr = json::array();
        for (const auto& p : perms) arr.push_back(p);
        return arr;
      };
      if (aut_list) report["automorphisms"] = dump_perms(automorphisms(g));
      if (aut_invol) report["involutions"] = dump_perms(involutions(g));
      aut_fmt.emit(report);
      return 0;
    }

    if (*dot) {
      Multigraph g = load_graph(dot_graph);
      std::string text = to_dot(g);
      if (dot_out.empty())
        std::cout << text;
      else
        save_text(dot_out, text);
      return 0;
    }

    if (*verify) {
      Multigraph g = load_graph(ver_graph);
      Divisor d = load_divisor(ver_divisor);
      bool ok = verify_certificate(g, d, ver_rank);
      json report;
      report["claimed_rank"] = ver_rank;
      report["degree"] = deg(d);
      report["verified"] = ok;
      ver_fmt.emit(report);
      return ok ? 0 : 1;
    }

    if (*pv) {
      Int lo = 0, hi = 1'000'000;
      if (!pv_genus.empty()) std::tie(lo, hi) = parse_genus_range(pv_genus);
      json report;
      report["claims"] = json::array();
      int failures = 0, total = 0;
      std::vector<std::pair<std::string, long>> timings;
      for (const auto& claim : paper_claims()) {
        if (claim.genus_value != 0 && (claim.genus_value < lo || claim.genus_value > hi))
          continue;
        if (!pv_claim.empty() && claim.id.find(pv_claim) == std::string::npos)
          continue;
        ++total;
        auto begin = Clock::now();
        ClaimResult result = claim.run();
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      Clock::now() - begin)
                      .count();
        timings.emplace_back(claim.id, ms);
        if (!result.pass) ++failures;
        json cj;
        cj["id"] = claim.id;
        cj["status"] = result.pass ? "PASS" : "FAIL";
        cj["summary"] = claim.summary;
        cj["detail"] = result.detail;
        report["claims"].push_back(cj);
      }
      report["total"] = total;
      report["failed"] = failures;
      if (pv_fmt.format == "machine") {
        json tj = json::object();
        for (const auto& [id, ms] : timings) tj[id] = ms;
        report["timings"] = tj;
        std::cout << report.dump(2) << "\n";
      } else {
        for (const auto& cj : report["claims"])
          std::cout << cj["status"].get<std::string>() << " "
                    << cj["id"].get<std::string>() << " - "
                    << cj["summary"].get<std::string>() << "\n    "
                    << cj["detail"].get<std::string>() << "\n";
        std::cout << "total: " << total << "  failed: " << failures << "\n";
        std::cout << "--- timings ---\n";
        for (const auto& [id, ms] : timings)
          std::cout << id << ": " << ms << " ms\n";
      }
      return failures == 0 ? 0 : 1;
    }
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
