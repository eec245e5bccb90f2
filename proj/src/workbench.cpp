#include "scharc/workbench.hpp"

#include <openssl/evp.h>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "scharc/error.hpp"
#include "scharc/oracle.hpp"
#include "scharc/pattern.hpp"

namespace scharc {

namespace {

[[noreturn]] void schema(const std::string& what) { throw Error(Errc::SchemaError, what); }

void only_keys(const Json& j, std::initializer_list<const char*> allowed, const char* where) {
  if (!j.is_object()) schema(std::string(where) + " must be an object");
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || it.key() == a;
    if (!ok) schema(std::string(where) + ": unknown field '" + it.key() + "'");
  }
}

template <class T>
T field_as(const Json& j, const char* key, const char* where) {
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception&) {
    schema(std::string(where) + "." + key + " missing or of the wrong type");
  }
}

std::vector<std::pair<int, int>> arcs_from_json(const Json& j, const char* where) {
  std::vector<std::pair<int, int>> out;
  if (!j.is_array()) schema(std::string(where) + " must be a list of [i, j] pairs");
  for (const auto& a : j) {
    if (!a.is_array() || a.size() != 2 || !a[0].is_number_integer() || !a[1].is_number_integer())
      schema(std::string(where) + " must be a list of [i, j] pairs");
    out.emplace_back(a[0].get<int>(), a[1].get<int>());
  }
  return out;
}

Json arcs_to_json(const std::vector<std::pair<int, int>>& arcs) {
  Json j = Json::array();
  for (auto [i, k] : arcs) j.push_back({i, k});
  return j;
}

// "1-3,2-3"
std::vector<std::pair<int, int>> parse_arcs(const std::string& s) {
  std::vector<std::pair<int, int>> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto dash = item.find('-');
    if (dash == std::string::npos) schema("arc '" + item + "' is not of the form i-j");
    try {
      out.emplace_back(std::stoi(item.substr(0, dash)), std::stoi(item.substr(dash + 1)));
    } catch (const std::exception&) {
      schema("arc '" + item + "' is not of the form i-j");
    }
  }
  return out;
}

std::vector<int> parse_ints(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stoi(item));
    } catch (const std::exception&) {
      schema("'" + item + "' is not an integer");
    }
  }
  return out;
}

const std::set<std::string> kTags{"algebra", "finest", "coarsest", "ideal",   "supernormal", "littlegroups",
                                  "star",    "nk",     "nS",       "classical", "classical-lg"};

FieldPtr field_for(const GroupSelector& sel) {
  auto [p, k] = split_prime_power(sel.q);
  return field_new(p, k, sel.modulus);
}

Relation relation_from_name(const std::string& s) {
  for (Relation r : {Relation::Equal, Relation::StrictlyFiner, Relation::StrictlyCoarser, Relation::Incomparable})
    if (s == relation_name(r)) return r;
  schema("unknown relation '" + s + "'");
}

std::string rational_str(const mpq_class& r) { return r.get_str(); }

}  // namespace

Json GroupSelector::to_json() const {
  Json j{{"kind", kind}, {"n", n}, {"q", q}};
  if (kind == "pattern") j["relation"] = arcs_to_json(relation);
  if (modulus) j["modulus"] = *modulus;
  return j;
}

GroupSelector GroupSelector::from_json(const Json& j) {
  only_keys(j, {"kind", "n", "q", "p", "k", "relation", "modulus"}, "group");
  GroupSelector s;
  s.kind = j.contains("kind") ? field_as<std::string>(j, "kind", "group") : (j.contains("relation") ? "pattern" : "ut");
  if (s.kind != "ut" && s.kind != "pattern" && s.kind != "uo" && s.kind != "usp" && s.kind != "uu")
    schema("group.kind must be one of ut, pattern, uo, usp, uu");
  s.n = field_as<int>(j, "n", "group");
  if (j.contains("q")) {
    s.q = field_as<int>(j, "q", "group");
  } else {
    const int p = field_as<int>(j, "p", "group");
    const int k = j.contains("k") ? field_as<int>(j, "k", "group") : 1;
    if (p < 2 || k < 1) schema("group.p and group.k must be positive");
    s.q = 1;
    for (int i = 0; i < k; ++i) s.q *= p;
  }
  if (s.kind == "pattern") s.relation = arcs_from_json(j.at("relation"), "group.relation");
  if (j.contains("modulus")) s.modulus = field_as<std::vector<int>>(j, "modulus", "group");
  if (s.n < 1) schema("group.n must be positive");
  return s;
}

Json ConstructionSpec::to_json() const {
  Json j{{"tag", tag}};
  if (tag == "littlegroups" || tag == "star" || tag == "nk") j["k"] = k;
  if (tag == "littlegroups") j["strategy"] = strategy;
  if (tag == "ideal") j["side"] = side;
  if (tag == "ideal" || tag == "supernormal") j["arcs"] = arcs_to_json(arcs);
  if (tag == "nS") j["S"] = S;
  if (tag == "classical") j["reading"] = reading;
  return j;
}

ConstructionSpec ConstructionSpec::from_json(const Json& j) {
  if (j.is_string()) return parse(j.get<std::string>());
  only_keys(j, {"tag", "k", "strategy", "side", "arcs", "S", "reading"}, "construction");
  ConstructionSpec c;
  c.tag = field_as<std::string>(j, "tag", "construction");
  if (!kTags.count(c.tag)) schema("unknown construction '" + c.tag + "'");
  if (j.contains("k")) c.k = field_as<int>(j, "k", "construction");
  if (j.contains("strategy")) c.strategy = field_as<std::string>(j, "strategy", "construction");
  if (j.contains("side")) c.side = field_as<std::string>(j, "side", "construction");
  if (j.contains("arcs")) c.arcs = arcs_from_json(j.at("arcs"), "construction.arcs");
  if (j.contains("S")) c.S = field_as<std::vector<int>>(j, "S", "construction");
  if (j.contains("reading")) c.reading = field_as<std::string>(j, "reading", "construction");
  if (c.strategy != "minimal" && c.strategy != "maximal") schema("construction.strategy must be minimal or maximal");
  if (c.side != "left" && c.side != "right") schema("construction.side must be left or right");
  if (c.reading != "block" && c.reading != "half") schema("construction.reading must be block or half");
  return c;
}

ConstructionSpec ConstructionSpec::parse(const std::string& s) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ':')) parts.push_back(item);
  if (parts.empty()) schema("empty construction");
  Json j{{"tag", parts[0]}};
  const std::string& t = parts[0];
  auto need = [&](std::size_t count) {
    if (parts.size() != count) schema("construction '" + s + "' has the wrong number of arguments");
  };
  if (t == "littlegroups") {
    if (parts.size() > 3) need(3);
    if (parts.size() >= 2) j["k"] = parse_ints(parts[1]).at(0);
    if (parts.size() == 3) j["strategy"] = parts[2];
  } else if (t == "star" || t == "nk") {
    if (parts.size() > 2) need(2);
    if (parts.size() == 2) j["k"] = parse_ints(parts[1]).at(0);
  } else if (t == "nS") {
    need(2);
    j["S"] = parse_ints(parts[1]);
  } else if (t == "ideal") {
    need(3);
    j["side"] = parts[1];
    j["arcs"] = arcs_to_json(parse_arcs(parts[2]));
  } else if (t == "supernormal") {
    need(2);
    j["arcs"] = arcs_to_json(parse_arcs(parts[1]));
  } else if (t == "classical") {
    if (parts.size() == 2) j["reading"] = parts[1];
    else need(1);
  } else {
    need(1);
  }
  return from_json(j);
}

BuiltGroup build_group(const GroupSelector& sel) {
  const FieldPtr F = field_for(sel);
  BuiltGroup out;
  if (sel.kind == "ut") {
    out.group = ut_group(sel.n, F);
  } else if (sel.kind == "pattern") {
    out.group = pattern_group(Poset(sel.n, sel.relation), F);
  } else {
    if (sel.n % 2 != 0) throw Error(Errc::BadArgument, "classical groups need an even size, got " + std::to_string(sel.n));
    const ClassicalKind kind = sel.kind == "uo"    ? ClassicalKind::Orthogonal
                               : sel.kind == "usp" ? ClassicalKind::Symplectic
                                                   : ClassicalKind::Unitary;
    out.classical = build_classical(kind, sel.n / 2, F);
    out.group = out.classical->U;
  }
  return out;
}

SCTheory build_sct(const BuiltGroup& B, const ConstructionSpec& c) {
  const MatrixGroupPtr& G = B.group;
  const int n = G->n();
  const bool is_ut = !B.classical && static_cast<int>(G->space().dim()) == n * (n - 1) / 2 * G->field()->k();
  if (c.tag == "finest") return sct_finest(G);
  if (c.tag == "coarsest") return sct_coarsest(G);
  if (c.tag == "classical" || c.tag == "classical-lg") {
    if (!B.classical) throw Error(Errc::BadArgument, c.tag + " needs a uo, usp or uu group");
    if (c.tag == "classical-lg") return sct_classical_littlegroups(*B.classical).sct;
    return sct_classical(*B.classical, c.reading == "half" ? HUpperReading::HalfColumns : HUpperReading::BlockColumns);
  }
  if (B.classical) throw Error(Errc::BadArgument, c.tag + " needs an algebra group");
  if (c.tag == "algebra") return sct_algebra_group(G);
  if (c.tag == "ideal") {
    const Side side = c.side == "right" ? Side::Right : Side::Left;
    return sct_ideal(ideal_subgroup(G, side, c.arcs), side);
  }
  if (c.tag == "supernormal") return sct_supernormal(G, ideal_subgroup(G, Side::TwoSided, c.arcs));
  if (c.tag == "littlegroups" || c.tag == "star") {
    const auto split = split_semidirect(G, c.k);
    const auto s = make_setting(split);
    if (c.tag == "star")
      return sct_star_product(sct_conjugation(G, split.N), top_member_sct(split), G, projection_to_h(s));
    if (c.strategy == "minimal") return sch_build(s, hmap_minimal(s, top_member_sct(split)));
    return sch_build(s, hmap_maximal(split, s));
  }
  if (!is_ut) throw Error(Errc::BadArgument, c.tag + " needs UT_n");
  if (c.tag == "nk") {
    if (c.k < 0 || c.k > G->n()) throw Error(Errc::BadIndex, "k = " + std::to_string(c.k));
    return sct_nk_littlegroups(G, c.k);
  }
  if (c.tag == "nS") return sct_nS(G->n(), c.S, G->field());
  throw Error(Errc::SchemaError, "unknown construction '" + c.tag + "'");
}

Json JobSpec::to_json() const {
  Json j{{"group", group.to_json()}, {"construction", construction.to_json()}, {"verify", verify}, {"formats", formats}};
  if (!compare.empty()) {
    j["compare"] = Json::array();
    for (const auto& c : compare) j["compare"].push_back(c.to_json());
  }
  if (expect_relation || expect_classes) {
    j["expect"] = Json::object();
    if (expect_relation) j["expect"]["relation"] = *expect_relation;
    if (expect_classes) j["expect"]["classes"] = *expect_classes;
  }
  return j;
}

JobSpec JobSpec::from_json(const Json& j) {
  only_keys(j, {"group", "construction", "verify", "compare", "expect", "formats"}, "job");
  JobSpec s;
  if (!j.contains("group")) schema("job.group missing");
  s.group = GroupSelector::from_json(j.at("group"));
  if (j.contains("construction")) s.construction = ConstructionSpec::from_json(j.at("construction"));
  if (j.contains("verify")) s.verify = field_as<bool>(j, "verify", "job");
  if (j.contains("compare")) {
    if (!j.at("compare").is_array()) schema("job.compare must be a list");
    for (const auto& c : j.at("compare")) s.compare.push_back(ConstructionSpec::from_json(c));
  }
  if (j.contains("expect")) {
    const Json& e = j.at("expect");
    only_keys(e, {"relation", "classes"}, "job.expect");
    if (e.contains("relation")) {
      s.expect_relation = field_as<std::string>(e, "relation", "job.expect");
      relation_from_name(*s.expect_relation);
      if (s.compare.empty()) schema("job.expect.relation needs job.compare");
    }
    if (e.contains("classes")) s.expect_classes = field_as<int>(e, "classes", "job.expect");
  }
  if (j.contains("formats")) {
    s.formats = field_as<std::vector<std::string>>(j, "formats", "job");
    for (const auto& f : s.formats)
      if (f != "json" && f != "csv") schema("job.formats entries must be json or csv");
  }
  return s;
}

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    schema(std::string("malformed JSON: ") + e.what());
  }
}

Json export_sct_json(const SCTheory& S) {
  const GroupPtr& G = S.group;
  const auto& cc = G->classes();
  Json j;
  j["group"] = G->describe();
  j["order"] = G->order();
  j["provenance"] = S.provenance;
  j["class_representatives"] = Json::array();
  for (int c = 0; c < cc.count(); ++c) j["class_representatives"].push_back(G->code(cc.rep(c)));
  j["superclasses"] = Json::array();
  for (const auto& b : S.blocks) {
    Json codes = Json::array();
    for (int g : b) codes.push_back(G->code(g));
    j["superclasses"].push_back(codes);
  }
  j["supercharacters"] = Json::array();
  for (std::size_t i = 0; i < S.chars.size(); ++i) {
    const auto& vals = S.chars[i].values();
    int m = 1;
    for (const auto& v : vals) m = std::lcm(m, v.minimized().conductor());
    Json values = Json::array();
    for (const auto& v : vals) {
      Json coeffs = Json::array();
      const Cyclotomic w = v.minimized().embedded(m);
      for (const auto& c : w.coeffs()) coeffs.push_back(rational_str(c));
      values.push_back(coeffs);
    }
    Json ch{{"conductor", m}, {"values", values}};
    if (i < S.labels.size() && !S.labels[i].empty()) ch["label"] = S.labels[i];
    j["supercharacters"].push_back(ch);
  }
  return j;
}

std::string export_sct_csv(const SCTheory& S) {
  const GroupPtr& G = S.group;
  std::ostringstream os;
  for (std::size_t b = 0; b < S.blocks.size(); ++b) os << (b ? "," : "") << G->code(S.blocks[b].front());
  os << '\n';
  for (const auto& ch : S.chars) {
    for (std::size_t b = 0; b < S.blocks.size(); ++b) os << (b ? "," : "") << ch(S.blocks[b].front()).to_string();
    os << '\n';
  }
  return os.str();
}

SCTheory import_sct_json(const Json& doc, const GroupPtr& G) {
  only_keys(doc, {"group", "order", "provenance", "class_representatives", "superclasses", "supercharacters", "selector"},
            "sct");
  if (field_as<std::string>(doc, "group", "sct") != G->describe())
    schema("sct.group '" + doc.at("group").get<std::string>() + "' does not match " + G->describe());
  const auto& cc = G->classes();
  std::map<std::string, int> by_code;
  for (int g = 0; g < G->size(); ++g) by_code.emplace(G->code(g), g);
  auto id_of = [&](const Json& code) {
    if (!code.is_string()) schema("element codes must be strings");
    auto it = by_code.find(code.get<std::string>());
    if (it == by_code.end()) schema("unknown element code '" + code.get<std::string>() + "'");
    return it->second;
  };
  const auto reps = field_as<std::vector<std::string>>(doc, "class_representatives", "sct");
  if (static_cast<int>(reps.size()) != cc.count()) schema("sct.class_representatives has the wrong length");
  for (int c = 0; c < cc.count(); ++c)
    if (cc.class_of[id_of(reps[c])] != c) schema("sct.class_representatives out of class order");

  SCTheory S;
  S.group = G;
  S.provenance = field_as<std::string>(doc, "provenance", "sct");
  for (const auto& b : doc.at("superclasses")) {
    std::vector<int> block;
    for (const auto& code : b) block.push_back(id_of(code));
    S.blocks.push_back(std::move(block));
  }
  for (const auto& ch : doc.at("supercharacters")) {
    only_keys(ch, {"conductor", "values", "label"}, "sct.supercharacters[]");
    const int m = field_as<int>(ch, "conductor", "sct.supercharacters[]");
    if (m < 1) schema("conductor must be positive");
    const auto& values = ch.at("values");
    if (!values.is_array() || static_cast<int>(values.size()) != cc.count()) schema("character values per class expected");
    std::vector<Cyclotomic> v;
    for (const auto& coeffs : values) {
      std::vector<mpq_class> c;
      for (const auto& x : coeffs) {
        if (!x.is_string()) schema("coefficients must be rational strings");
        try {
          mpq_class r(x.get<std::string>());
          r.canonicalize();
          c.push_back(r);
        } catch (const std::invalid_argument&) {
          schema("bad rational '" + x.get<std::string>() + "'");
        }
      }
      v.push_back(Cyclotomic::from_coeffs(m, std::move(c)));
    }
    S.chars.emplace_back(G, std::move(v));
    S.labels.push_back(ch.contains("label") ? ch.at("label").get<std::string>() : "");
  }
  std::size_t mass = 0;
  for (const auto& b : S.blocks) mass += b.size();
  if (mass != G->order()) schema("superclasses do not cover the group");
  canonicalize(S);
  return S;
}

Json partition_json(const FqSetPartition& eta, const Field& F) {
  Json arcs = Json::array();
  for (const auto& a : eta.arcs) arcs.push_back({a.i, a.j, F.coeffs(a.a)});
  return Json{{"n", eta.n}, {"arcs", arcs}};
}

std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw Error(Errc::IOFailure, "sha256 failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[md[i] >> 4];
    out += hex[md[i] & 15];
  }
  return out;
}

Cache::Cache(std::filesystem::path dir, std::string version) : dir_(std::move(dir)), version_(std::move(version)) {
  if (dir_.empty()) {
    const char* env = std::getenv("SCHARC_CACHE");
    dir_ = env && *env ? std::filesystem::path(env) : std::filesystem::path(".scharc-cache");
  }
}

std::string Cache::key(const Json& subkey) const { return sha256_hex(version_ + "\n" + subkey.dump()); }

// Entry layout: first line is the sha256 of the payload.
std::optional<std::string> Cache::get(const std::string& key) const {
  const auto path = dir_ / key;
  std::error_code ec;
  if (!std::filesystem::exists(path, ec)) return std::nullopt;
  std::ifstream in(path, std::ios::binary);
  std::string header;
  if (!in || !std::getline(in, header)) {
    std::cerr << "warning: unreadable cache entry " << path << ", recomputing\n";
    return std::nullopt;
  }
  std::string payload((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (header != sha256_hex(payload)) {
    std::cerr << "warning: corrupted cache entry " << path << ", recomputing\n";
    return std::nullopt;
  }
  return payload;
}

void Cache::put(const std::string& key, const std::string& payload) const {
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  const auto tmp = dir_ / (key + ".tmp." + std::to_string(std::hash<std::string>{}(payload) ^ reinterpret_cast<std::uintptr_t>(this)));
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << sha256_hex(payload) << '\n' << payload;
    if (!out) {
      std::cerr << "warning: cannot write cache entry in " << dir_ << "\n";
      std::filesystem::remove(tmp, ec);
      return;
    }
  }
  std::filesystem::rename(tmp, dir_ / key, ec);
  if (ec) {
    std::cerr << "warning: cannot store cache entry " << key << ": " << ec.message() << "\n";
    std::filesystem::remove(tmp, ec);
  }
}

RunResult run_job(const JobSpec& job, const Cache* cache) {
  RunResult r;
  const BuiltGroup B = build_group(job.group);

  const Json subkey{{"group", job.group.to_json()}, {"construction", job.construction.to_json()}};
  std::optional<SCTheory> S;
  std::string key;
  if (cache) {
    key = cache->key(subkey);
    if (auto hit = cache->get(key)) {
      try {
        S = import_sct_json(Json::parse(*hit), B.group);
        r.cache_hit = true;
      } catch (const std::exception& e) {
        std::cerr << "warning: unusable cache entry " << key << " (" << e.what() << "), recomputing\n";
      }
    }
  }
  if (!S) {
    S = build_sct(B, job.construction);
    if (cache) cache->put(key, export_sct_json(*S).dump());
  }

  bool ok = true;
  Json& rep = r.report;
  rep["job"] = job.to_json();
  rep["group"] = B.group->describe();
  rep["order"] = B.group->order();
  rep["conjugacy_classes"] = B.group->classes().count();
  rep["provenance"] = S->provenance;
  rep["superclasses"] = S->size();
  rep["supercharacters"] = S->chars.size();
  if (job.expect_classes) {
    const bool pass = S->size() == *job.expect_classes;
    rep["expect_classes"] = {{"expected", *job.expect_classes}, {"ok", pass}};
    ok = ok && pass;
  }
  if (job.verify) {
    const auto v = sct_verify(*S);
    rep["verify"] = {{"ok", v.ok()}, {"failures", v.failures}};
    ok = ok && v.ok();
  }
  if (!job.compare.empty()) {
    rep["comparisons"] = Json::array();
    for (const auto& c : job.compare) {
      const auto T = build_sct(B, c);
      const Relation rel = sct_compare(*S, T);
      Json entry{{"with", c.to_json()}, {"provenance", T.provenance}, {"relation", relation_name(rel)}};
      if (job.expect_relation) {
        const bool pass = rel == relation_from_name(*job.expect_relation);
        entry["ok"] = pass;
        ok = ok && pass;
      }
      rep["comparisons"].push_back(entry);
    }
  }
  rep["ok"] = ok;
  r.exit_code = ok ? 0 : 1;

  Json doc = export_sct_json(*S);
  doc["selector"] = job.group.to_json();
  r.artifacts.emplace_back("report.json", rep.dump(2) + "\n");
  for (const auto& f : job.formats) {
    if (f == "json") r.artifacts.emplace_back("sct.json", doc.dump(2) + "\n");
    if (f == "csv") r.artifacts.emplace_back("sct.csv", export_sct_csv(*S));
  }
  return r;
}

void write_artifacts(const RunResult& r, const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Error(Errc::IOFailure, "cannot create " + dir.string());
  for (const auto& [name, bytes] : r.artifacts) {
    std::ofstream out(dir / name, std::ios::binary | std::ios::trunc);
    out << bytes;
    if (!out) throw Error(Errc::IOFailure, "cannot write " + (dir / name).string());
  }
}

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case Errc::SchemaError:
    case Errc::BadArgument:
    case Errc::BadIndex:
    case Errc::NonPrime:
    case Errc::ReducibleModulus:
    case Errc::NoDefaultModulus:
      return 2;
    case Errc::CapExceeded:
      return 3;
    default:
      return 1;
  }
}

}  // namespace scharc
