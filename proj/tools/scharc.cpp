// scharc: build, verify, compare and export supercharacter theories.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "scharc/error.hpp"
#include "scharc/oracle.hpp"
#include "scharc/workbench.hpp"

using namespace scharc;

namespace {

struct GroupFlags {
  std::string kind = "ut";
  int n = 3;
  int q = 2;
  std::string poset;  // pattern: "1-2,1-3"
};

void add_group_flags(CLI::App* app, GroupFlags& g) {
  app->add_option("--group", g.kind, "ut | pattern | uo | usp | uu")->check(CLI::IsMember({"ut", "pattern", "uo", "usp", "uu"}));
  app->add_option("--n", g.n, "matrix size");
  app->add_option("--q", g.q, "field size");
  app->add_option("--poset", g.poset, "pattern arcs, e.g. 1-2,1-3");
}

GroupSelector selector(const GroupFlags& g) {
  Json j{{"kind", g.kind}, {"n", g.n}, {"q", g.q}};
  if (g.kind == "pattern") {
    Json arcs = Json::array();
    std::stringstream ss(g.poset);
    std::string item;
    while (std::getline(ss, item, ',')) {
      const auto dash = item.find('-');
      if (dash == std::string::npos) throw Error(Errc::SchemaError, "bad arc '" + item + "'");
      arcs.push_back({std::stoi(item.substr(0, dash)), std::stoi(item.substr(dash + 1))});
    }
    j["relation"] = arcs;
  }
  return GroupSelector::from_json(j);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::IOFailure, "cannot read " + path);
  return std::string((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out, std::ios::binary | std::ios::trunc);
  f << text;
  if (!f) throw Error(Errc::IOFailure, "cannot write " + out);
}

int finish_run(const JobSpec& job, const std::string& out_dir, const std::string& cache_dir, bool no_cache) {
  std::optional<Cache> cache;
  if (!no_cache) cache.emplace(cache_dir);
  const RunResult r = run_job(job, cache ? &*cache : nullptr);
  if (!out_dir.empty()) write_artifacts(r, out_dir);
  const Json& rep = r.report;
  std::cout << rep["group"].get<std::string>() << ": " << rep["provenance"].get<std::string>() << "\n"
            << "  superclasses " << rep["superclasses"] << ", supercharacters " << rep["supercharacters"] << "\n";
  if (rep.contains("verify")) {
    std::cout << "  verify " << (rep["verify"]["ok"].get<bool>() ? "ok" : "FAILED") << "\n";
    for (const auto& f : rep["verify"]["failures"]) std::cout << "    " << f.get<std::string>() << "\n";
  }
  if (rep.contains("comparisons"))
    for (const auto& c : rep["comparisons"]) std::cout << "  vs " << c["provenance"].get<std::string>() << ": " << c["relation"].get<std::string>() << "\n";
  if (r.cache_hit) std::cerr << "(served from cache " << cache->dir().string() << ")\n";
  return r.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"scharc: supercharacter theories of algebra, pattern and classical unipotent groups"};
  app.require_subcommand(1);
  std::string cap;
  app.add_option("--cap", cap, "enumeration cap (elements)");

  GroupFlags gflags;
  std::string construction = "algebra";
  int k = -1;
  std::string strategy;
  bool verify = false;
  std::string out_dir, cache_dir, out_file;
  bool no_cache = false;
  std::vector<std::string> formats{"json"};

  auto* sct = app.add_subcommand("sct", "build a supercharacter theory");
  add_group_flags(sct, gflags);
  sct->add_option("--construction", construction, "algebra | finest | coarsest | littlegroups | star | nk | nS | ideal | supernormal | classical | classical-lg (compact form tag:arg allowed)");
  sct->add_option("--k", k, "split index");
  sct->add_option("--strategy", strategy, "littlegroups: minimal | maximal");
  sct->add_flag("--verify", verify, "check the axioms against the character table");
  sct->add_option("--out", out_dir, "artifact directory");
  sct->add_option("--format", formats, "json and/or csv")->check(CLI::IsMember({"json", "csv"}));
  sct->add_option("--cache-dir", cache_dir, "cache directory (default $SCHARC_CACHE or .scharc-cache)");
  sct->add_flag("--no-cache", no_cache);

  std::string a_spec, b_spec;
  auto* compare = app.add_subcommand("compare", "compare two constructions on one group");
  add_group_flags(compare, gflags);
  compare->add_option("--a", a_spec)->required();
  compare->add_option("--b", b_spec)->required();
  std::string expect;
  compare->add_option("--expect", expect, "exit 1 unless the relation is this one");

  std::string in_file;
  auto* verify_cmd = app.add_subcommand("verify", "verify an exported theory, or a construction");
  add_group_flags(verify_cmd, gflags);
  verify_cmd->add_option("--in", in_file, "exported sct.json");
  verify_cmd->add_option("--construction", construction);
  verify_cmd->add_option("--k", k);
  verify_cmd->add_option("--strategy", strategy);

  auto* oracle = app.add_subcommand("oracle", "character table of the group (CSV, rows = Irr, columns = classes)");
  add_group_flags(oracle, gflags);
  oracle->add_option("--out", out_file);

  bool count_only = false, nonnesting = false;
  auto* parts = app.add_subcommand("partitions", "F_q-set partitions of [n] as JSON");
  parts->add_option("--n", gflags.n)->required();
  parts->add_option("--q", gflags.q);
  parts->add_option("--k", k, "keep the k-nonnesting ones");
  parts->add_flag("--nonnesting", nonnesting);
  parts->add_flag("--count", count_only);
  parts->add_option("--out", out_file);

  std::string format = "csv";
  auto* exp = app.add_subcommand("export", "re-export a theory JSON document");
  exp->add_option("--in", in_file)->required();
  exp->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
  exp->add_option("--out", out_file);

  std::string job_file;
  auto* run = app.add_subcommand("run", "run a JobSpec file");
  run->add_option("job", job_file)->required();
  run->add_option("--out", out_dir);
  run->add_option("--cache-dir", cache_dir);
  run->add_flag("--no-cache", no_cache);

  CLI11_PARSE(app, argc, argv);

  try {
    if (!cap.empty()) set_enumeration_cap(std::stoull(cap));
    auto make_construction = [&](const std::string& s) {
      ConstructionSpec c = ConstructionSpec::parse(s);
      if (k >= 0) c.k = k;
      if (!strategy.empty()) {
        if (strategy != "minimal" && strategy != "maximal") throw Error(Errc::SchemaError, "strategy must be minimal or maximal");
        c.strategy = strategy;
      }
      return c;
    };

    if (*sct) {
      JobSpec job;
      job.group = selector(gflags);
      job.construction = make_construction(construction);
      job.verify = verify;
      job.formats = formats;
      return finish_run(job, out_dir, cache_dir, no_cache);
    }
    if (*run) {
      const JobSpec job = JobSpec::from_json(parse_json_text(read_file(job_file)));
      return finish_run(job, out_dir, cache_dir, no_cache);
    }
    if (*compare) {
      const auto B = build_group(selector(gflags));
      const auto A = build_sct(B, ConstructionSpec::parse(a_spec));
      const auto C = build_sct(B, ConstructionSpec::parse(b_spec));
      const char* rel = relation_name(sct_compare(A, C));
      std::cout << rel << "\n";
      return expect.empty() || expect == rel ? 0 : 1;
    }
    if (*verify_cmd) {
      SCTheory S;
      if (!in_file.empty()) {
        const Json doc = parse_json_text(read_file(in_file));
        if (!doc.contains("selector")) throw Error(Errc::SchemaError, "document has no selector");
        S = import_sct_json(doc, build_group(GroupSelector::from_json(doc.at("selector"))).group);
      } else {
        S = build_sct(build_group(selector(gflags)), make_construction(construction));
      }
      const auto rep = sct_verify(S);
      std::cout << S.group->describe() << ": " << S.provenance << ": " << (rep.ok() ? "ok" : "FAILED") << "\n";
      for (const auto& f : rep.failures) std::cout << "  " << f << "\n";
      return rep.ok() ? 0 : 1;
    }
    if (*oracle) {
      const auto B = build_group(selector(gflags));
      const auto T = irr_table(B.group);
      const auto& cc = B.group->classes();
      std::ostringstream os;
      for (int c = 0; c < cc.count(); ++c) os << (c ? "," : "") << B.group->code(cc.rep(c));
      os << '\n';
      for (const auto& chi : T->chars) {
        for (int c = 0; c < cc.count(); ++c) os << (c ? "," : "") << chi.on_class(c).to_string();
        os << '\n';
      }
      emit(os.str(), out_file);
      return 0;
    }
    if (*parts) {
      auto [p, e] = split_prime_power(gflags.q);
      const auto F = field_new(p, e);
      if (count_only && k < 0 && !nonnesting) {
        emit(std::to_string(count_fq_set_partitions(gflags.n, gflags.q)) + "\n", out_file);
        return 0;
      }
      Json list = Json::array();
      for (const auto& eta : enumerate_fq_set_partitions(gflags.n, *F)) {
        if (k >= 0 && !is_k_nonnesting(eta, k)) continue;
        if (nonnesting && !is_nonnesting(eta)) continue;
        list.push_back(partition_json(eta, *F));
      }
      emit(count_only ? std::to_string(list.size()) + "\n" : list.dump(2) + "\n", out_file);
      return 0;
    }
    if (*exp) {
      const Json doc = parse_json_text(read_file(in_file));
      if (!doc.contains("selector")) throw Error(Errc::SchemaError, "document has no selector");
      const auto S = import_sct_json(doc, build_group(GroupSelector::from_json(doc.at("selector"))).group);
      if (format == "csv") {
        emit(export_sct_csv(S), out_file);
      } else {
        Json out = export_sct_json(S);
        out["selector"] = doc.at("selector");
        emit(out.dump(2) + "\n", out_file);
      }
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "scharc: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "scharc: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
