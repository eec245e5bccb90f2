#include <filesystem>
#include <fstream>

#include <unistd.h>

#include "doctest.h"
#include "scharc/workbench.hpp"

using namespace scharc;

namespace {

std::filesystem::path fresh_dir(const std::string& name) {
  auto d = std::filesystem::temp_directory_path() / ("scharc-test-" + name + "-" + std::to_string(::getpid()));
  std::filesystem::remove_all(d);
  return d;
}

JobSpec ut_job(int n, int q, const std::string& construction) {
  JobSpec j;
  j.group = GroupSelector::from_json(Json{{"kind", "ut"}, {"n", n}, {"q", q}});
  j.construction = ConstructionSpec::parse(construction);
  j.formats = {"json", "csv"};
  return j;
}

}  // namespace

TEST_CASE("CSV export") {
  const auto trivial = build_group(GroupSelector::from_json(Json{{"n", 1}, {"q", 2}}));
  const auto S = sct_algebra_group(trivial.group);
  const std::string csv = export_sct_csv(S);
  CHECK(csv.substr(csv.find('\n') + 1) == "1\n");

  const auto B = build_group(GroupSelector::from_json(Json{{"n", 3}, {"q", 2}}));
  const auto A = sct_algebra_group(B.group);
  CHECK(A.size() == 5);
  // The degree-2 character is the only one with value 2 at the identity.
  int rows_with_2 = 0;
  for (const auto& ch : A.chars) rows_with_2 += ch(0) == Cyclotomic(2);
  CHECK(rows_with_2 == 1);
  const std::string table = export_sct_csv(A);
  CHECK(std::count(table.begin(), table.end(), '\n') == 6);
  CHECK(table.find("\n2,0,-2,0,0\n") != std::string::npos);
}

TEST_CASE("JSON round trip") {
  const auto F9 = GroupSelector::from_json(Json{{"kind", "uu"}, {"n", 4}, {"q", 9}});
  for (const auto& [sel, c] : {std::pair{GroupSelector::from_json(Json{{"n", 4}, {"q", 3}}), std::string("algebra")},
                               std::pair{GroupSelector::from_json(Json{{"n", 4}, {"q", 2}}), std::string("littlegroups:2:minimal")},
                               std::pair{F9, std::string("classical")}}) {
    const auto B = build_group(sel);
    const auto S = build_sct(B, ConstructionSpec::parse(c));
    const Json doc = export_sct_json(S);
    const auto T = import_sct_json(Json::parse(doc.dump()), B.group);
    CHECK(T.blocks == S.blocks);
    CHECK(T.chars == S.chars);
    CHECK(sct_compare(S, T) == Relation::Equal);
    CHECK(export_sct_json(T) == doc);
  }
  const auto B = build_group(GroupSelector::from_json(Json{{"n", 3}, {"q", 2}}));
  auto doc = export_sct_json(sct_algebra_group(B.group));
  doc["superclasses"][1][0] = "777";
  CHECK_THROWS_AS(import_sct_json(doc, B.group), Error);
}

TEST_CASE("JobSpec schema") {
  auto code_of = [](const std::string& text) {
    try {
      JobSpec::from_json(parse_json_text(text));
      return 0;
    } catch (const Error& e) {
      return exit_code_for(e);
    }
  };
  CHECK(code_of("{bad") == 2);
  CHECK(code_of(R"({"group": {"n": 3, "q": 2}})") == 0);
  CHECK(code_of(R"({"group": {"n": 3, "q": 2}, "colour": 1})") == 2);
  CHECK(code_of(R"({"group": {"n": 3}})") == 2);
  CHECK(code_of(R"({"group": {"n": 3, "q": 2}, "construction": {"tag": "nope"}})") == 2);
  CHECK(code_of(R"({"group": {"n": 3, "q": 2}, "expect": {"relation": "equal"}})") == 2);
  CHECK(code_of(R"({"group": {"n": 4, "relation": [[1,2],[2,3],[1,3]], "p": 3, "k": 1}})") == 0);

  const auto j = JobSpec::from_json(parse_json_text(
      R"({"group": {"n": 4, "q": 2}, "construction": "littlegroups:2:minimal", "compare": ["star:2"], "expect": {"relation": "equal"}})"));
  CHECK(JobSpec::from_json(j.to_json()).to_json() == j.to_json());
  CHECK(run_job(j).exit_code == 0);

  CHECK(exit_code_for(Error(Errc::CapExceeded, "")) == 3);
  CHECK(exit_code_for(Error(Errc::AssertionFailed, "")) == 1);
}

TEST_CASE("run exit codes and comparisons") {
  auto j = ut_job(3, 2, "algebra");
  j.verify = true;
  j.expect_classes = 5;
  auto r = run_job(j);
  CHECK(r.exit_code == 0);
  CHECK(r.report["verify"]["ok"] == true);
  j.expect_classes = 6;
  CHECK(run_job(j).exit_code == 1);

  // At n = 4 every partition is 2-nonnesting, so SCT(4,2) is the algebra
  // theory and SCT(4,1) lies below it.
  auto c = ut_job(4, 2, "nk:1");
  c.compare = {ConstructionSpec::parse("nk:2")};
  c.expect_relation = "strictly_coarser";
  CHECK(run_job(c).exit_code == 0);
  c.group.n = 5;
  c.expect_relation = "incomparable";
  CHECK(run_job(c).exit_code == 0);

  const std::uint64_t cap = enumeration_cap();
  set_enumeration_cap(100);
  try {
    run_job(ut_job(5, 2, "algebra"));
    FAIL("expected CapExceeded");
  } catch (const Error& e) {
    CHECK(exit_code_for(e) == 3);
  }
  set_enumeration_cap(cap);
}

TEST_CASE("cache") {
  const auto dir = fresh_dir("cache");
  const Cache cache(dir);
  const auto job = ut_job(4, 2, "algebra");
  const auto a = run_job(job, &cache);
  const auto b = run_job(job, &cache);
  CHECK_FALSE(a.cache_hit);
  CHECK(b.cache_hit);
  CHECK(a.artifacts == b.artifacts);
  CHECK(a.artifacts == run_job(job).artifacts);

  const Cache bumped(dir, "scharc-cache-v0");
  CHECK_FALSE(run_job(job, &bumped).cache_hit);

  const Json subkey{{"group", job.group.to_json()}, {"construction", job.construction.to_json()}};
  {
    std::fstream f(dir / cache.key(subkey), std::ios::in | std::ios::out | std::ios::binary);
    f.seekp(80);
    f << "garbage";
  }
  const auto c = run_job(job, &cache);
  CHECK_FALSE(c.cache_hit);
  CHECK(c.artifacts == a.artifacts);
  CHECK(run_job(job, &cache).cache_hit);

  const Cache unwritable("/proc/scharc-no-such-dir");
  CHECK(run_job(job, &unwritable).artifacts == a.artifacts);
  std::filesystem::remove_all(dir);
}

TEST_CASE("partition serialization") {
  const auto F3 = field_new(3, 1);
  const auto eta = make_partition(4, {{1, 3, F3->from_int(2)}, {2, 4, F3->one()}});
  const Json j = partition_json(eta, *F3);
  CHECK(j.dump() == R"({"arcs":[[1,3,[2]],[2,4,[1]]],"n":4})");
}
