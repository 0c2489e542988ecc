#include <catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "pgraph/theorem_suite.hpp"

using namespace pgraph;

namespace {

std::set<std::string> labels_of(const std::vector<Group>& groups) {
  std::set<std::string> out;
  for (const auto& g : groups) out.insert(g.label());
  return out;
}

bool all_pass(const std::vector<TheoremInstance>& instances) {
  return std::all_of(instances.begin(), instances.end(),
                     [](const TheoremInstance& i) { return i.pass; });
}

}  // namespace

TEST_CASE("catalog contents and determinism") {
  auto groups = catalog(30);
  auto labels = labels_of(groups);
  for (const char* expected : {"Z27", "H(3)", "Q24", "F21", "E(3^3)", "D15", "S4", "A4"})
    CHECK(labels.count(expected) == 1);
  CHECK(labels.size() == groups.size());  // duplicate-free
  for (const auto& g : groups) CHECK(g.order() >= 2);
  for (const auto& g : groups) CHECK(g.order() <= 30);
  for (std::size_t i = 1; i < groups.size(); ++i)
    CHECK(std::pair(groups[i - 1].order(), groups[i - 1].label()) <
          std::pair(groups[i].order(), groups[i].label()));

  CHECK(labels_of(catalog(60)).count("A5") == 1);
  CHECK(labels_of(catalog(147)).count("[Z7^2]Z3") == 1);
  CHECK_THROWS_AS(catalog(1), std::invalid_argument);
}

TEST_CASE("catalog groups satisfy the full group axioms") {
  for (const Group& g : catalog(60)) {
    REQUIRE_NOTHROW(validate_group_axioms(g));
    for (int x = 0; x < g.order(); ++x)
      REQUIRE(g.order() % element_order(g, x) == 0);
  }
}

TEST_CASE("punctured elementary abelian graphs split into the expected cliques") {
  for (auto [p, k, cliques] : {std::tuple{2, 3, 7}, {3, 2, 4}, {3, 3, 13}, {5, 2, 6}}) {
    UndirectedGraph pstar = build_punctured(build_elementary_abelian(p, k));
    auto comps = connected_components(pstar);
    REQUIRE(static_cast<int>(comps.size()) == cliques);
    for (const auto& comp : comps) REQUIRE(static_cast<int>(comp.size()) == p - 1);
  }
}

TEST_CASE("unknown ids are rejected") {
  CHECK_THROWS_AS(verify("NOPE", catalog(10)), std::invalid_argument);
  CHECK_THROWS_AS(theorem_description("NOPE"), std::invalid_argument);
  CHECK_FALSE(theorem_description("T4.1").empty());
}

TEST_CASE("strongly regular sweep classifies the worked cases") {
  auto groups = catalog(81);
  auto instances = verify("T4.1", groups);
  CHECK(all_pass(instances));
  std::map<std::string, std::pair<std::string, std::string>> by_group;
  for (const auto& i : instances) by_group[i.group] = {i.predicted, i.observed};
  CHECK(by_group.at("Z27") == std::pair<std::string, std::string>{"srg", "srg"});
  CHECK(by_group.at("E(3^3)") == std::pair<std::string, std::string>{"srg", "srg"});
  CHECK(by_group.at("Q8") == std::pair<std::string, std::string>{"not-srg", "not-srg"});
  CHECK(by_group.at("Z2xZ4") == std::pair<std::string, std::string>{"not-srg", "not-srg"});
  CHECK(by_group.at("Z6") == std::pair<std::string, std::string>{"not-srg", "not-srg"});
}

TEST_CASE("eulerian sweep hits exactly the powers of two") {
  auto instances = verify("P6.1", catalog(64));
  CHECK(all_pass(instances));
  std::set<std::string> eulerian;
  for (const auto& i : instances)
    if (i.predicted == "eulerian") eulerian.insert(i.group);
  CHECK(eulerian == std::set<std::string>{"Z2", "Z4", "Z8", "Z16", "Z32", "Z64"});
}

TEST_CASE("universal-vertex sweep") {
  auto instances = verify("L2.9", catalog(64));
  CHECK(all_pass(instances));
  std::map<std::string, std::string> predicted;
  for (const auto& i : instances) predicted[i.group] = i.predicted;
  CHECK(predicted.at("Q8") == "universal");
  CHECK(predicted.at("Q16") == "universal");
  CHECK(predicted.at("Q12") == "no-universal");  // quaternion but not a 2-group
  CHECK(predicted.at("Z15") == "universal");
  CHECK(predicted.at("E(2^3)") == "no-universal");
}

TEST_CASE("connectivity characterizations pass") {
  auto groups = catalog(64);
  for (const char* id : {"L2.7", "C2.8", "L2.10", "L2.11", "L2.12"})
    CHECK(all_pass(verify(id, groups)));
}

TEST_CASE("implication sweeps produce hypothesis-true instances") {
  auto groups = catalog(60);
  CHECK_FALSE(verify("L2.4", groups).empty());
  CHECK_FALSE(verify("L2.10", groups).empty());
  CHECK_FALSE(verify("L2.12", groups).empty());
  CHECK(verify("L2.13", groups).size() == groups.size());
}

TEST_CASE("quaternion structure instances") {
  TheoremInstance q8 = verify_q4n_structure(2);
  CHECK(q8.pass);
  CHECK(q8.observed == "hub-joined-cliques");
  TheoremInstance q16 = verify_q4n_structure(4);
  CHECK(q16.pass);
  TheoremInstance q12 = verify_q4n_structure(3);
  CHECK(q12.pass);
  CHECK(q12.observed == "no-universal");
  CHECK_THROWS_AS(verify_q4n_structure(1), std::invalid_argument);
}

TEST_CASE("order-27 pair instance") {
  TheoremInstance inst = verify_order27_pair();
  CHECK(inst.pass);
  CHECK(inst.witness.at("mapping").size() == 27);
  CHECK(inst.witness.at("stats_equal") == true);
}

TEST_CASE("equal order statistics claim over same-order pairs") {
  auto instances = verify("L3.1", catalog(30));
  CHECK(all_pass(instances));
  bool found_pair = false;
  for (const auto& i : instances)
    if (i.group == "E(3^3)/H(3)") {
      found_pair = true;
      CHECK(i.predicted == "stats-equal");
    }
  CHECK(found_pair);
}

TEST_CASE("run_all is green and deterministic") {
  TheoremReport a = run_all(30);
  CHECK(a.fail_count == 0);
  CHECK(a.pass_count > 0);
  TheoremReport b = run_all(30);
  CHECK(a.to_json().dump(2) == b.to_json().dump(2));
  CHECK_THROWS_AS(run_all(10), std::invalid_argument);
}

TEST_CASE("every registered claim shows up in the full run") {
  TheoremReport report = run_all(30);
  std::set<std::string> seen;
  for (const auto& inst : report.instances) seen.insert(inst.theorem_id);
  for (const auto& id : registered_theorems()) CHECK(seen.count(id) == 1);
}

TEST_CASE("iff claims are exercised in both directions") {
  TheoremReport report = run_all(60);
  REQUIRE(report.fail_count == 0);
  std::map<std::string, std::map<std::string, int>> predicted_counts;
  for (const auto& inst : report.instances)
    ++predicted_counts[inst.theorem_id][inst.predicted];
  for (const char* id : {"L2.1", "L2.7", "C2.8", "L2.9", "T4.1", "T5.1", "C5.2", "T5.3",
                         "P6.1", "L2.14", "L2.11"}) {
    const auto& counts = predicted_counts.at(id);
    REQUIRE(counts.size() >= 2);
    for (const auto& [verdict, count] : counts) REQUIRE(count >= 3);
  }
}

TEST_CASE("report JSON matches the published schema") {
  TheoremReport report = run_selected({"P6.1", "L8.1"}, 32);
  nlohmann::json j = report.to_json();
  REQUIRE(j.contains("version"));
  REQUIRE(j.contains("max_order"));
  REQUIRE(j.contains("instances"));
  REQUIRE(j.contains("summary"));
  REQUIRE(j["instances"].is_array());
  for (const auto& inst : j["instances"]) {
    REQUIRE(inst.contains("theorem_id"));
    REQUIRE(inst.contains("group"));
    REQUIRE(inst.contains("predicted"));
    REQUIRE(inst.contains("observed"));
    REQUIRE((inst["status"] == "pass" || inst["status"] == "fail"));
    REQUIRE(inst.contains("witness"));
  }
  REQUIRE(j["summary"]["pass"].get<int>() + j["summary"]["fail"].get<int>() ==
          static_cast<int>(j["instances"].size()));
  CHECK(j["max_order"] == 32);
}

TEST_CASE("instances are sorted by theorem id and group label") {
  TheoremReport report = run_all(30);
  for (std::size_t i = 1; i < report.instances.size(); ++i)
    REQUIRE(std::tie(report.instances[i - 1].theorem_id, report.instances[i - 1].group) <=
            std::tie(report.instances[i].theorem_id, report.instances[i].group));
}
