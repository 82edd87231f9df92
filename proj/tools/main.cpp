#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>

#include "json.hpp"
#include "maxarc/canonical.hpp"
#include "maxarc/catalog.hpp"
#include "maxarc/codes.hpp"
#include "maxarc/designs.hpp"
#include "maxarc/report.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace maxarc;

namespace {

constexpr int kExitTheoremFailure = 1;
constexpr int kExitUsage = 2;

struct ArcSource {
  std::string arc_file;
  std::string plane_file;
  std::vector<std::string> builtins;

  void attach(CLI::App* cmd, bool many) {
    cmd->add_option("--arc", arc_file, "arc file");
    cmd->add_option("--plane", plane_file, "plane file overriding the arc file's plane label");
    auto* b = cmd->add_option("--builtin", builtins, "named arc (see 'arc list')");
    if (!many) b->expected(1);
  }

  std::vector<Arc> load() const {
    std::vector<Arc> out;
    if (!arc_file.empty()) {
      const ArcFile af = parse_arc_file(arc_file);
      PlanePtr plane = plane_file.empty() ? load_plane(af.plane_label) : parse_plane_file(plane_file);
      Arc a = validate_arc(plane, af.points, af.degree);
      a.set_label(af.label);
      out.push_back(std::move(a));
    }
    for (const auto& name : builtins) out.push_back(load_arc(name));
    if (out.empty()) throw CLI::ValidationError("give --arc FILE or --builtin NAME");
    return out;
  }

  Arc load_one() const {
    auto arcs = load();
    if (arcs.size() != 1) throw CLI::ValidationError("exactly one arc expected");
    return std::move(arcs.front());
  }
};

// A plane argument may be a file path or a label such as PG(2,16).
PlanePtr plane_from_argument(const std::string& arg) {
  if (fs::is_regular_file(arg)) return parse_plane_file(arg);
  return load_plane(arg);
}

ArcFile arc_file_of(const Arc& a) {
  return {a.label().empty() ? "arc" : a.label(), a.plane()->label(), a.degree(), a.points()};
}

std::ostream& open_or_stdout(const std::string& path, std::ofstream& file) {
  if (path.empty() || path == "-") return std::cout;
  file.open(path);
  if (!file) throw std::runtime_error("cannot write " + path);
  return file;
}

std::string bits_of(const gf2::BitVector& v) {
  std::string s;
  for (int i = 0; i < v.length(); ++i) s += v.get(i) ? '1' : '0';
  return s;
}

json theorem_json(const CodeTheoremReport& t) {
  json clauses = json::array();
  for (const auto& [name, ok] : t.clauses) clauses.push_back({{"clause", name}, {"holds", ok}});
  return {{"rank", t.rank},
          {"d", t.d},
          {"d_perp", t.d_perp},
          {"a_d_perp", t.a_d_perp.str()},
          {"hyperovals", t.hyperovals},
          {"rank_bounds", {t.bounds.lower, t.bounds.upper}},
          {"clauses", clauses}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Maximal arcs in planes of even order, their designs and binary codes"};
  app.require_subcommand(1);
  bool as_json = false;
  int cap = gf2::kDefaultEnumerationCap;
  app.add_flag("--json", as_json, "machine-readable output");
  app.add_option("--cap", cap, "largest dimension enumerated directly")->check(CLI::Range(1, 40));

  // ------------------------------------------------------------------ plane
  auto* plane_cmd = app.add_subcommand("plane", "projective planes")->require_subcommand(1);
  int gen_m = 4;
  std::string gen_out;
  auto* plane_gen = plane_cmd->add_subcommand("gen", "write PG(2,2^m)");
  plane_gen->add_option("--m", gen_m, "field degree")->check(CLI::Range(1, 8));
  plane_gen->add_option("-o,--out", gen_out, "output file");
  plane_gen->callback([&] {
    std::ofstream f;
    serialize_plane(open_or_stdout(gen_out, f), *make_pg2(Gf2mField(gen_m)));
  });

  std::string check_plane;
  bool check_dual = false;
  auto* plane_check = plane_cmd->add_subcommand("check", "validate a plane file");
  plane_check->add_option("--plane", check_plane, "plane file or label")->required();
  plane_check->add_flag("--dual", check_dual, "print the dual plane instead of a summary");
  plane_check->callback([&] {
    const PlanePtr p = plane_from_argument(check_plane);
    if (check_dual) {
      serialize_plane(std::cout, *dual_plane(*p));
      return;
    }
    if (as_json)
      std::cout << json{{"label", p->label()}, {"order", p->order()}, {"points", p->n_points()},
                        {"valid", true}}
                << "\n";
    else
      std::cout << p->label() << ": projective plane of order " << p->order() << ", "
                << p->n_points() << " points\n";
  });

  // -------------------------------------------------------------------- arc
  auto* arc_cmd = app.add_subcommand("arc", "maximal arcs")->require_subcommand(1);
  auto* arc_list = arc_cmd->add_subcommand("list", "names accepted by --builtin");
  arc_list->callback([&] {
    for (const auto& n : internal_arc_names()) std::cout << n << "\n";
    for (const auto& k : known_arcs())
      std::cout << k.label << "  (needs " << k.plane_label << ".plane)\n";
    std::cout << "denniston-<m>-<s>, <name>^perp\n";
  });

  ArcSource validate_src;
  auto* arc_validate = arc_cmd->add_subcommand("validate", "check an arc is maximal");
  validate_src.attach(arc_validate, true);
  arc_validate->callback([&] {
    for (const Arc& a : validate_src.load()) {
      if (as_json)
        std::cout << json{{"label", a.label()}, {"plane", a.plane()->label()},
                          {"size", a.size()},   {"degree", a.degree()},
                          {"maximal", true}}
                  << "\n";
      else
        std::cout << a.label() << ": maximal (" << a.size() << "," << a.degree() << ")-arc in "
                  << a.plane()->label() << "\n";
    }
  });

  std::string search_plane = "PG(2,16)";
  std::string search_out;
  SearchConfig search_cfg;
  auto* arc_search = arc_cmd->add_subcommand("search", "tabu search for maximal arcs");
  arc_search->add_option("--plane", search_plane, "plane file or label");
  arc_search->add_option("--k", search_cfg.k, "arc degree");
  arc_search->add_option("--experiments", search_cfg.max_experiments, "random restarts");
  arc_search->add_option("--moves", search_cfg.moves_per_experiment, "moves per restart");
  arc_search->add_option("--tabu", search_cfg.tabu_length, "tabu tenure");
  arc_search->add_option("--random-move", search_cfg.random_move_probability,
                         "probability of a random move");
  arc_search->add_option("--seed", search_cfg.rng_seed, "random seed");
  arc_search->add_option("--stop-after", search_cfg.stop_after_hits, "stop after this many hits");
  arc_search->add_option("--out", search_out, "directory for arc files");
  arc_search->callback([&] {
    search_cfg.validate();
    const PlanePtr plane = plane_from_argument(search_plane);
    SearchResult res = tabu_search(plane, search_cfg);

    // Group the arcs by the isomorphism class of their designs.
    std::vector<Design> designs;
    for (const Arc& a : res.arcs) designs.push_back(design_from_arc(a));
    const auto classes = classify_designs(designs);
    std::vector<int> class_of(res.arcs.size());
    for (std::size_t c = 0; c < classes.size(); ++c)
      for (int i : classes[c].members) class_of[i] = static_cast<int>(c);

    if (!search_out.empty()) fs::create_directories(search_out);
    json arcs = json::array();
    for (std::size_t i = 0; i < res.arcs.size(); ++i) {
      Arc& a = res.arcs[i];
      a.set_label("found." + std::to_string(i + 1));
      if (!search_out.empty()) {
        std::ofstream f(fs::path(search_out) / (a.label() + ".arc"));
        serialize_arc(f, arc_file_of(a));
      }
      arcs.push_back({{"label", a.label()},
                      {"hits", res.hits[i]},
                      {"class", class_of[i] + 1},
                      {"points", a.points()}});
    }
    json freq = json::array();
    for (const auto& cls : classes) {
      int hits = 0;
      for (int i : cls.members) hits += res.hits[i];
      freq.push_back({{"arcs", cls.members.size()}, {"hits", hits}});
    }
    if (as_json) {
      std::cout << json{{"plane", plane->label()},
                        {"k", search_cfg.k},
                        {"experiments", res.experiments_run},
                        {"arcs", arcs},
                        {"classes", freq}}
                       .dump(2)
                << "\n";
      return;
    }
    std::cout << res.experiments_run << " experiments, " << res.arcs.size()
              << " distinct arcs, " << classes.size() << " design classes\n";
    for (std::size_t c = 0; c < classes.size(); ++c)
      std::cout << "class " << c + 1 << ": " << freq[c]["arcs"] << " arcs, " << freq[c]["hits"]
                << " hits\n";
  });

  ArcSource dual_src;
  std::string dual_out;
  auto* arc_dual = arc_cmd->add_subcommand("dual", "write the dual arc");
  dual_src.attach(arc_dual, false);
  arc_dual->add_option("-o,--out", dual_out, "output file");
  arc_dual->callback([&] {
    const Arc a = dual_src.load_one();
    Arc d = dual_arc(a);
    d.set_label(a.label() + "^perp");
    std::ofstream f;
    serialize_arc(open_or_stdout(dual_out, f), arc_file_of(d));
  });

  // ----------------------------------------------------------------- design
  auto* design_cmd = app.add_subcommand("design", "designs of arcs")->require_subcommand(1);
  ArcSource design_src;
  bool design_resolutions = false;
  auto* design_report = design_cmd->add_subcommand("report", "design invariants");
  design_src.attach(design_report, true);
  design_report->add_flag("--resolutions", design_resolutions, "enumerate resolutions (slow)");
  int design_exit = 0;
  design_report->callback([&] {
    json all = json::array();
    for (const Arc& a : design_src.load()) {
      const Design d = design_from_arc(a);
      const auto classes = enumerate_parallel_classes(d);
      json j = {{"label", a.label()},
                {"v", d.v()},
                {"k", d.k()},
                {"b", d.b()},
                {"r", d.r()},
                {"automorphisms", design_automorphism_group_order(d).str()},
                {"parallel_classes", classes.size()},
                {"hyperovals", find_hyperovals(d).size()}};
      if (design_resolutions) j["resolutions"] = enumerate_resolutions(d, classes).size();
      if (a.dual_degree() >= 1) {
        const auto emb = resolutions_from_embedding(a, d);
        const int s = a.dual_degree();
        try {
          const auto rep = max_compatible_bound_check(emb, s, d.k());
          j["compatible_resolutions"] = {{"count", rep.m},
                                         {"bound", rep.bound},
                                         {"attains_bound", rep.attains_bound}};
          if (!rep.attains_bound) design_exit = kExitTheoremFailure;
        } catch (const NotPairwiseCompatible& e) {
          j["compatible_resolutions"] = {{"error", e.what()}};
          design_exit = kExitTheoremFailure;
        }
      }
      all.push_back(j);
    }
    if (as_json) {
      std::cout << all.dump(2) << "\n";
      return;
    }
    for (const auto& j : all) {
      std::cout << j["label"].get<std::string>() << ": 2-(" << j["v"] << "," << j["k"]
                << ",1), b=" << j["b"] << ", r=" << j["r"] << ", |Aut|=" << j["automorphisms"].get<std::string>()
                << ", parallel classes " << j["parallel_classes"] << ", hyperovals "
                << j["hyperovals"];
      if (j.contains("resolutions")) std::cout << ", resolutions " << j["resolutions"];
      if (j.contains("compatible_resolutions")) {
        const auto& c = j["compatible_resolutions"];
        if (c.contains("error"))
          std::cout << ", embedding resolutions: " << c["error"].get<std::string>();
        else
          std::cout << ", compatible resolutions " << c["count"] << " (bound " << c["bound"]
                    << ")";
      }
      std::cout << "\n";
    }
  });

  ArcSource res_src;
  std::string res_out;
  bool res_embedding = false;
  auto* design_res = design_cmd->add_subcommand("resolutions", "write resolutions");
  res_src.attach(design_res, false);
  design_res->add_flag("--embedding", res_embedding, "only those induced by exterior lines");
  design_res->add_option("-o,--out", res_out, "output file");
  design_res->callback([&] {
    const Arc a = res_src.load_one();
    const Design d = design_from_arc(a);
    const auto list = res_embedding ? resolutions_from_embedding(a, d)
                                    : enumerate_resolutions(d, enumerate_parallel_classes(d));
    std::ofstream f;
    std::ostream& out = open_or_stdout(res_out, f);
    write_design(out, d);
    for (std::size_t i = 0; i < list.size(); ++i) {
      out << "resolution " << i + 1 << "\n";
      write_resolution(out, list[i]);
    }
  });

  // ------------------------------------------------------------------- code
  auto* code_cmd = app.add_subcommand("code", "codes of designs")->require_subcommand(1);
  ArcSource report_src;
  ReportOptions report_opts;
  bool no_aut = false;
  bool no_dual = false;
  int report_exit = 0;
  auto* code_report = code_cmd->add_subcommand("report", "full arc report");
  report_src.attach(code_report, true);
  code_report->add_flag("--resolutions", report_opts.resolutions, "enumerate resolutions (slow)");
  code_report->add_flag("--no-automorphisms", no_aut, "skip group orders");
  code_report->add_flag("--no-dual", no_dual, "skip the dual arc's design");
  code_report->callback([&] {
    report_opts.automorphisms = !no_aut;
    report_opts.dual = !no_dual;
    report_opts.cap = cap;
    std::vector<ArcReport> reports;
    for (const Arc& a : report_src.load()) {
      reports.push_back(build_report(a, report_opts));
      if (!reports.back().theorem_ok()) report_exit = kExitTheoremFailure;
    }
    if (as_json) {
      json all = json::array();
      for (const auto& r : reports) all.push_back(to_json(r));
      std::cout << all.dump(2) << "\n";
    } else {
      std::cout << format_reports(reports);
    }
  });

  std::vector<std::string> classify_names;
  auto* code_classify = code_cmd->add_subcommand("classify", "equivalence classes of codes");
  code_classify->add_option("names", classify_names, "arc names")->required();
  code_classify->callback([&] {
    std::vector<Design> designs;
    std::vector<gf2::BinaryCode> codes;
    for (const auto& name : classify_names) {
      designs.push_back(design_from_arc(load_arc(name)));
      codes.push_back(code_of_design(designs.back()));
    }
    const auto code_classes = classify_codes(codes, cap);
    const auto design_classes = classify_designs(designs);
    auto describe = [&](const std::vector<EquivalenceClass>& classes) {
      json out = json::array();
      for (const auto& c : classes) {
        json members = json::array();
        for (std::size_t i = 0; i < c.members.size(); ++i) {
          std::vector<int> perm = c.witnesses[i];
          members.push_back({{"name", classify_names[c.members[i]]},
                             {"witness", format_cycles(perm)}});
        }
        out.push_back(members);
      }
      return out;
    };
    const json result = {{"code_classes", describe(code_classes)},
                         {"design_classes", describe(design_classes)}};
    if (as_json) {
      std::cout << result.dump(2) << "\n";
      return;
    }
    std::cout << code_classes.size() << " code classes, " << design_classes.size()
              << " design classes\n";
    int no = 0;
    for (const auto& cls : result["code_classes"]) {
      std::cout << "code class " << ++no << ":";
      for (const auto& m : cls) std::cout << " " << m["name"].get<std::string>();
      std::cout << "\n";
      for (std::size_t i = 1; i < cls.size(); ++i)
        std::cout << "  " << cls[0]["name"].get<std::string>() << " -> "
                  << cls[i]["name"].get<std::string>() << ": "
                  << cls[i]["witness"].get<std::string>() << "\n";
    }
  });

  ArcSource decode_src;
  std::string decode_word;
  auto* code_decode = code_cmd->add_subcommand("decode", "majority-logic decoding in the dual code");
  decode_src.attach(code_decode, false);
  code_decode->add_option("--word", decode_word, "received word as a 0/1 string")->required();
  int decode_exit = 0;
  code_decode->callback([&] {
    const Design d = design_from_arc(decode_src.load_one());
    if (static_cast<int>(decode_word.size()) != d.v())
      throw CLI::ValidationError("word length must be " + std::to_string(d.v()));
    gf2::BitVector w(d.v());
    for (int i = 0; i < d.v(); ++i) {
      if (decode_word[i] != '0' && decode_word[i] != '1')
        throw CLI::ValidationError("word must consist of 0 and 1");
      if (decode_word[i] == '1') w.set(i);
    }
    try {
      const DecodeResult r = majority_logic_decode(d, w);
      std::vector<int> flipped;
      for (int p : r.corrected_positions) flipped.push_back(p + 1);
      if (as_json)
        std::cout << json{{"codeword", bits_of(r.codeword)}, {"corrected", flipped}} << "\n";
      else {
        std::cout << bits_of(r.codeword) << "\ncorrected:";
        for (int p : flipped) std::cout << " " << p;
        std::cout << "\n";
      }
    } catch (const DecodingFailure& e) {
      std::cout << "decoding failed: " << e.what() << "\n";
      decode_exit = kExitTheoremFailure;
    }
  });

  // ----------------------------------------------------------------- verify
  auto* verify_cmd = app.add_subcommand("verify", "consistency checks")->require_subcommand(1);
  std::vector<std::string> verify_names;
  int verify_exit = 0;
  auto* verify_theorems = verify_cmd->add_subcommand("theorems", "check code and design theorems");
  verify_theorems->add_option("--builtin", verify_names, "arcs to check (default: internal ones)");
  verify_theorems->callback([&] {
    if (verify_names.empty()) verify_names = internal_arc_names();
    json all = json::array();
    for (const auto& name : verify_names) {
      const Arc a = load_arc(name);
      const Design d = design_from_arc(a);
      json j = {{"arc", name}};
      bool ok = true;
      try {
        j["code"] = theorem_json(verify_code_theorem(d, cap));
      } catch (const std::exception& e) {
        j["code"] = {{"failure", e.what()}};
        ok = false;
      }
      if (a.dual_degree() >= 1) {
        try {
          const auto rep = max_compatible_bound_check(resolutions_from_embedding(a, d),
                                                      a.dual_degree(), d.k());
          j["compatible_resolutions"] = {{"count", rep.m}, {"bound", rep.bound}};
          ok = ok && rep.attains_bound;
        } catch (const NotPairwiseCompatible& e) {
          j["compatible_resolutions"] = {{"failure", e.what()}};
          ok = false;
        }
      }
      j["passed"] = ok;
      if (!ok) verify_exit = kExitTheoremFailure;
      all.push_back(j);
    }
    if (as_json) {
      std::cout << all.dump(2) << "\n";
      return;
    }
    for (const auto& j : all) {
      std::cout << (j["passed"].get<bool>() ? "PASS " : "FAIL ") << j["arc"].get<std::string>();
      if (j["code"].contains("failure"))
        std::cout << ": " << j["code"]["failure"].get<std::string>();
      else
        std::cout << ": rank " << j["code"]["rank"] << " in [" << j["code"]["rank_bounds"][0]
                  << "," << j["code"]["rank_bounds"][1] << "], d=" << j["code"]["d"]
                  << ", d_perp=" << j["code"]["d_perp"] << ", hyperovals "
                  << j["code"]["hyperovals"];
      if (j.contains("compatible_resolutions") && j["compatible_resolutions"].contains("count"))
        std::cout << ", compatible resolutions " << j["compatible_resolutions"]["count"] << "/"
                  << j["compatible_resolutions"]["bound"];
      std::cout << "\n";
    }
  });

  auto* verify_perms = verify_cmd->add_subcommand(
      "permutations", "check the published coordinate permutations between codes");
  verify_perms->callback([&] {
    std::map<std::string, gf2::BinaryCode> cache;
    auto code = [&](const std::string& name) -> const gf2::BinaryCode& {
      auto it = cache.find(name);
      if (it == cache.end())
        it = cache.emplace(name, code_of_design(design_from_arc(load_arc(name)))).first;
      return it->second;
    };
    for (const auto& e : known_equivalences()) {
      bool ok = false;
      std::string note;
      try {
        ok = verify_permutation(parse_cycles(e.cycles, 52), code(e.from), code(e.to));
      } catch (const MissingData& m) {
        note = m.what();
        verify_exit = kExitUsage;
      }
      std::cout << (note.empty() ? (ok ? "PASS " : "FAIL ") : "SKIP ") << e.from << " -> "
                << e.to << (note.empty() ? "" : ": " + note) << "\n";
      if (note.empty() && !ok) verify_exit = kExitTheoremFailure;
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const MissingData& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return std::max({design_exit, report_exit, decode_exit, verify_exit});
}
