#include <catch_amalgamated.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <sstream>
#include <vector>

#include "pgraph/group.hpp"

using namespace pgraph;

namespace {

std::map<int, int> order_counts(const Group& g) {
  std::map<int, int> counts;
  for (int x = 0; x < g.order(); ++x) ++counts[element_order(g, x)];
  return counts;
}

std::vector<std::uint64_t> pi_e_of(const Group& g) { return spectrum(g).pi_e; }

}  // namespace

TEST_CASE("cyclic groups") {
  Group z6 = build_cyclic(6);
  CHECK(pi_e_of(z6) == std::vector<std::uint64_t>{1, 2, 3, 6});
  Group z1 = build_cyclic(1);
  CHECK(pi_e_of(z1) == std::vector<std::uint64_t>{1});
  Group z8 = build_cyclic(8);
  CHECK(pi_e_of(z8) == std::vector<std::uint64_t>{1, 2, 4, 8});
  CHECK(spectrum(z8).mu == std::vector<std::uint64_t>{8});
  CHECK_THROWS_AS(build_cyclic(0), std::invalid_argument);
}

TEST_CASE("elementary abelian groups") {
  Group e23 = build_elementary_abelian(2, 3);
  CHECK(e23.order() == 8);
  CHECK(order_counts(e23)[2] == 7);
  Group e33 = build_elementary_abelian(3, 3);
  CHECK(e33.order() == 27);
  CHECK(order_counts(e33)[3] == 26);
  // for k = 1 the encoding degenerates to the cyclic table itself
  Group e51 = build_elementary_abelian(5, 1);
  Group z5 = build_cyclic(5);
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b) REQUIRE(e51.mul(a, b) == z5.mul(a, b));
  CHECK_THROWS_AS(build_elementary_abelian(4, 2), std::invalid_argument);
  CHECK_THROWS_AS(build_elementary_abelian(6, 1), std::invalid_argument);
}

TEST_CASE("generalized quaternion groups") {
  Group q8 = build_generalized_quaternion(2);
  CHECK(q8.order() == 8);
  CHECK(spectrum(q8).mu == std::vector<std::uint64_t>{4});
  CHECK(order_counts(q8)[2] == 1);
  Group q12 = build_generalized_quaternion(3);
  CHECK(spectrum(q12).mu == std::vector<std::uint64_t>{4, 6});
  Group q16 = build_generalized_quaternion(4);
  CHECK(order_counts(q16)[2] == 1);
  CHECK_THROWS_AS(build_generalized_quaternion(1), std::invalid_argument);
}

TEST_CASE("quaternion maximal orders split by parity of m") {
  for (int m = 2; m <= 16; ++m) {
    Group q = build_generalized_quaternion(m);
    std::vector<std::uint64_t> expected =
        m % 2 == 1 ? std::vector<std::uint64_t>{4, static_cast<std::uint64_t>(2 * m)}
                   : std::vector<std::uint64_t>{static_cast<std::uint64_t>(2 * m)};
    REQUIRE(spectrum(q).mu == expected);
  }
}

TEST_CASE("dihedral groups") {
  Group d3 = build_dihedral(3);
  CHECK(d3.order() == 6);
  CHECK(order_counts(d3)[2] == 3);
  CHECK(order_counts(d3)[3] == 2);
  CHECK(pi_e_of(build_dihedral(4)) == std::vector<std::uint64_t>{1, 2, 4});
  CHECK(pi_e_of(build_dihedral(6)) == std::vector<std::uint64_t>{1, 2, 3, 6});
  CHECK_THROWS_AS(build_dihedral(2), std::invalid_argument);
}

TEST_CASE("Heisenberg groups") {
  Group h3 = build_heisenberg(3);
  CHECK(h3.order() == 27);
  CHECK_FALSE(is_abelian(h3));
  CHECK(order_counts(h3)[3] == 26);
  CHECK(center(h3).size() == 3);
  Group h5 = build_heisenberg(5);
  CHECK(h5.order() == 125);
  CHECK(exponent(h5) == 5);
  CHECK_THROWS_AS(build_heisenberg(2), std::invalid_argument);
  CHECK_THROWS_AS(build_heisenberg(9), std::invalid_argument);
}

TEST_CASE("permutation closures") {
  Group s3 = build_from_permutations({{1, 0, 2}, {1, 2, 0}});
  CHECK(s3.order() == 6);
  CHECK(pi_e_of(s3) == std::vector<std::uint64_t>{1, 2, 3});

  std::vector<int> cycle7(7), doubling(7);
  for (int i = 0; i < 7; ++i) {
    cycle7[i] = (i + 1) % 7;
    doubling[i] = (2 * i) % 7;
  }
  Group f21 = build_from_permutations({cycle7, doubling});
  CHECK(f21.order() == 21);
  CHECK(pi_e_of(f21) == std::vector<std::uint64_t>{1, 3, 7});

  Group a5 = build_from_permutations({{1, 2, 3, 4, 0}, {1, 2, 0, 3, 4}});
  CHECK(a5.order() == 60);
  CHECK(pi_e_of(a5) == std::vector<std::uint64_t>{1, 2, 3, 5});

  CHECK_THROWS_AS(build_from_permutations({{0, 0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(build_from_permutations({}), std::invalid_argument);
  CHECK_THROWS_AS(build_symmetric(7), std::length_error);  // 5040 > cap
}

TEST_CASE("builders for symmetric and alternating groups") {
  CHECK(build_symmetric(4).order() == 24);
  CHECK(build_symmetric(1).order() == 1);
  CHECK(build_alternating(3).order() == 3);
  CHECK(build_alternating(4).order() == 12);
  CHECK(build_alternating(5).order() == 60);
}

TEST_CASE("direct products") {
  Group z2z3 = direct_product(build_cyclic(2), build_cyclic(3));
  CHECK(z2z3.order() == 6);
  CHECK(spectrum(z2z3).s == spectrum(build_cyclic(6)).s);
  Group s3z3 = direct_product(build_symmetric(3), build_cyclic(3));
  CHECK(s3z3.order() == 18);
  CHECK(pi_e_of(s3z3) == std::vector<std::uint64_t>{1, 2, 3, 6});
  Group z2z2 = direct_product(build_cyclic(2), build_cyclic(2));
  CHECK(spectrum(z2z2).s == spectrum(build_elementary_abelian(2, 2)).s);
  CHECK_THROWS_AS(direct_product(build_cyclic(100), build_cyclic(100)), std::length_error);
}

TEST_CASE("element orders") {
  Group z12 = build_cyclic(12);
  CHECK(element_order(z12, 4) == 3);
  CHECK(element_order(z12, 0) == 1);
  Group q8 = build_generalized_quaternion(2);
  for (int i = 0; i < 4; ++i) CHECK(element_order(q8, 4 + i) == 4);  // all x^i y
  CHECK_THROWS_AS(element_order(z12, 12), std::out_of_range);
}

TEST_CASE("group axioms hold for every constructor") {
  std::vector<Group> groups;
  groups.push_back(build_cyclic(24));
  groups.push_back(build_elementary_abelian(3, 2));
  groups.push_back(build_generalized_quaternion(5));
  groups.push_back(build_dihedral(7));
  groups.push_back(build_heisenberg(3));
  groups.push_back(build_symmetric(4));
  groups.push_back(build_alternating(4));
  groups.push_back(direct_product(build_symmetric(3), build_cyclic(4)));
  for (const auto& g : groups) {
    REQUIRE_NOTHROW(validate_group_axioms(g));
    std::uint64_t total = 0;
    for (const auto& [order, count] : spectrum(g).s) total += count;
    REQUIRE(total == static_cast<std::uint64_t>(g.order()));
    for (int x = 0; x < g.order(); ++x) REQUIRE(g.order() % element_order(g, x) == 0);
  }
}

TEST_CASE("spectrum details") {
  Group s4 = build_symmetric(4);
  SpectrumInfo spec = spectrum(s4);
  CHECK(spec.pi_e == std::vector<std::uint64_t>{1, 2, 3, 4});
  CHECK(spec.mu == std::vector<std::uint64_t>{3, 4});
  CHECK(spec.pi == std::vector<std::uint64_t>{2, 3});
  Group z6 = build_cyclic(6);
  SpectrumInfo s6 = spectrum(z6);
  CHECK(s6.s.at(6) == 2);
  CHECK(s6.s.at(3) == 2);
  CHECK(s6.s.at(2) == 1);
  // the totient of each order divides its class size
  for (const auto& g : {s4, z6})
    for (const auto& [order, count] : spectrum(g).s)
      REQUIRE(count % euler_phi(order) == 0);
}

TEST_CASE("center and centralizer") {
  CHECK(center(build_generalized_quaternion(2)).size() == 2);
  Group z10 = build_cyclic(10);
  CHECK(center(z10).size() == 10);
  Group s3 = build_symmetric(3);
  CHECK(center(s3).size() == 1);
  for (int x = 0; x < s3.order(); ++x) {
    auto c = centralizer(s3, x);
    CHECK(std::find(c.begin(), c.end(), x) != c.end());
  }
}

TEST_CASE("cyclic subgroups") {
  Group z12 = build_cyclic(12);
  CHECK(cyclic_subgroup(z12, 4) == std::vector<int>{0, 4, 8});
  CHECK(cyclic_subgroup(z12, 0) == std::vector<int>{0});
  Group q8 = build_generalized_quaternion(2);
  CHECK(cyclic_subgroup(q8, 1).size() == 4);
  CHECK_THROWS_AS(cyclic_subgroup(z12, -1), std::out_of_range);
}

TEST_CASE("EPPO and EPO predicates") {
  Group a5 = build_alternating(5);
  CHECK(is_eppo(a5));
  CHECK(is_epo(a5));
  Group z6 = build_cyclic(6);
  CHECK_FALSE(is_eppo(z6));
  Group s4 = build_symmetric(4);
  CHECK(is_eppo(s4));
  CHECK_FALSE(is_epo(s4));
}

TEST_CASE("order-p subgroup counts") {
  CHECK(count_order_p_subgroups(build_generalized_quaternion(4), 2) == 1);
  CHECK(count_order_p_subgroups(build_elementary_abelian(2, 2), 2) == 3);
  CHECK(count_order_p_subgroups(build_elementary_abelian(3, 3), 3) == 13);
  CHECK(count_order_p_subgroups(build_cyclic(9), 2) == 0);
  CHECK_THROWS_AS(count_order_p_subgroups(build_cyclic(9), 4), std::invalid_argument);
  // s(p) = (p−1) · subgroup count across a few groups
  for (const auto& g : {build_symmetric(4), build_cyclic(36), build_dihedral(9)}) {
    SpectrumInfo spec = spectrum(g);
    for (std::uint64_t p : spec.pi) {
      std::uint64_t sp = spec.s.count(p) ? spec.s.at(p) : 0;
      REQUIRE(static_cast<std::uint64_t>(count_order_p_subgroups(g, static_cast<int>(p))) *
                  (p - 1) ==
              sp);
    }
  }
}

TEST_CASE("generalized quaternion recognition") {
  for (int m : {2, 3, 4, 5, 6}) CHECK(is_generalized_quaternion(build_generalized_quaternion(m)));
  CHECK_FALSE(is_generalized_quaternion(build_cyclic(8)));
  CHECK_FALSE(is_generalized_quaternion(build_dihedral(4)));
  CHECK_FALSE(is_generalized_quaternion(direct_product(build_cyclic(2), build_cyclic(4))));
  CHECK_FALSE(is_generalized_quaternion(build_symmetric(4)));
}

TEST_CASE("cayley table round trip") {
  for (const Group& g : {build_cyclic(6), build_generalized_quaternion(2), build_symmetric(3)}) {
    std::ostringstream out;
    save_cayley_table(g, out);
    std::istringstream in(out.str());
    Group back = load_cayley_table(in);
    REQUIRE(back.order() == g.order());
    REQUIRE(back.label() == g.label());
    for (int a = 0; a < g.order(); ++a)
      for (int b = 0; b < g.order(); ++b) REQUIRE(back.mul(a, b) == g.mul(a, b));
  }
}

TEST_CASE("loader relabels a displaced identity to index 0") {
  std::istringstream in("3\n1 2 0\n2 0 1\n0 1 2\n");
  Group g = load_cayley_table(in);
  CHECK(g.order() == 3);
  CHECK(element_order(g, 1) == 3);
  CHECK(element_order(g, 2) == 3);
}

TEST_CASE("loader error kinds are distinguished") {
  auto kind_of = [](const std::string& text) {
    std::istringstream in(text);
    try {
      load_cayley_table(in);
    } catch (const CayleyTableError& e) {
      return e.kind();
    }
    throw std::logic_error("expected a CayleyTableError");
  };
  CHECK(kind_of("2\n0 1\n1\n") == TableErrorKind::MalformedInput);      // short row
  CHECK(kind_of("2\n0 1\n1 x\n") == TableErrorKind::MalformedInput);    // bad token
  CHECK(kind_of("0\n") == TableErrorKind::MalformedInput);              // zero order
  CHECK(kind_of("2\n0 1\n") == TableErrorKind::MalformedInput);         // missing row
  CHECK(kind_of("2\n0 0\n1 0\n") == TableErrorKind::NotLatinSquare);    // duplicate in row
  CHECK(kind_of("3\n1 0 2\n0 2 1\n2 1 0\n") == TableErrorKind::MissingIdentity);
  // order-5 loop: a Latin square with identity that is not associative
  CHECK(kind_of("5\n"
                "0 1 2 3 4\n"
                "1 0 3 4 2\n"
                "2 3 4 0 1\n"
                "3 4 1 2 0\n"
                "4 2 0 1 3\n") == TableErrorKind::NotAssociative);
  CHECK(kind_of("4096\n") == TableErrorKind::Oversize);
}

TEST_CASE("loader reads the label comment") {
  std::istringstream in("# label: my-group\n2\n0 1\n1 0\n");
  CHECK(load_cayley_table(in).label() == "my-group");
}

TEST_CASE("orders above the exhaustive limit use sampled validation") {
  Group big = build_cyclic(600);
  REQUIRE_NOTHROW(validate_group_axioms(big));
  std::ostringstream out;
  save_cayley_table(big, out);
  std::istringstream in(out.str());
  Group back = load_cayley_table(in);
  CHECK(back.order() == 600);
  CHECK(element_order(back, 1) == 600);
}
