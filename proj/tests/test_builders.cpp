#include <doctest.h>

#include <set>
#include <string>

#include "frattini/builders.hpp"
#include "frattini/frattini.hpp"
#include "frattini/nongen.hpp"
#include "frattini/report.hpp"
#include "test_helpers.hpp"

using namespace frattini;

TEST_CASE("chain builder") {
  Poset p = chain_poset(3);
  CHECK(p.size() == 3);
  CHECK(p.id(p.top()) == "c2");
  CHECK(oracle::id_set(p, coatoms(p)) == std::set<std::string>{"c1"});
  CHECK(oracle::nongenerators(p) == std::set<std::string>{"c0", "c1"});
  CHECK(chain_poset(1).size() == 1);
  CHECK_THROWS_AS(chain_poset(0), NoMaximum);
  CHECK(chain_poset(12).size() == 12);  // padded ids keep the linear order
  CHECK(chain_poset(12).id(chain_poset(12).top()) == "c11");
}

TEST_CASE("antichain plus top builder") {
  Poset p = antichain_plus_top(2);
  CHECK(p.size() == 3);
  CHECK(coatoms(p).size() == 2);
  CHECK(!frattini_element(p).has_value());
  CHECK(oracle::nongenerators(p).empty());
  CHECK(antichain_plus_top(0).size() == 1);  // degenerates to the singleton
}

TEST_CASE("diamond builder") {
  Poset p = diamond(2);
  CHECK(p.size() == 4);
  CHECK(oracle::nongenerators(p) == std::set<std::string>{"bot"});
  MaybeElement phi = frattini_element(p);
  REQUIRE(phi.has_value());
  CHECK(p.id(*phi.value) == "bot");
  CHECK_THROWS_AS(diamond(0), NoMaximum);
}

TEST_CASE("divisor lattice") {
  Poset p = divisor_lattice(12);
  CHECK(p.size() == 6);
  CHECK(p.id(p.top()) == "12");
  CHECK(oracle::id_set(p, coatoms(p)) == std::set<std::string>{"4", "6"});
  CHECK(is_join_semilattice(p));
  CHECK(divisor_lattice(1).size() == 1);
  CHECK(divisor_lattice(30).size() == 8);
  CHECK_THROWS_AS(divisor_lattice(0), NoMaximum);
}

TEST_CASE("random posets are valid, topped and reproducible") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    Poset p = random_poset(2 + seed % 8, 0.1 * static_cast<double>(seed % 9), seed);
    Poset q = random_poset(2 + seed % 8, 0.1 * static_cast<double>(seed % 9), seed);
    CHECK(canonical_form(p) == canonical_form(q));
    CHECK(p.leq(0, p.top()));
  }
  // Different seeds eventually differ.
  CHECK(canonical_form(random_poset(6, 0.3, 1)) != canonical_form(random_poset(6, 0.3, 2)));
}

TEST_CASE("random poset specs may lack a maximum") {
  PosetSpec spec = random_poset_spec(3, 0.0, 7);  // an antichain
  CHECK(spec.elements.size() == 3);
  CHECK(spec.covers.empty());
  CHECK_THROWS_AS(Poset::from_covers(spec), NoMaximum);
  CHECK_NOTHROW(close_covers(spec));
  // Same seed, same spec.
  PosetSpec again = random_poset_spec(3, 0.0, 7);
  CHECK(spec.elements == again.elements);
}

TEST_CASE("random join-semilattices") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    Poset p = random_join_semilattice(6, seed);
    CHECK(is_join_semilattice(p));
    Poset q = random_join_semilattice(6, seed);
    CHECK(canonical_form(p) == canonical_form(q));
  }
}

TEST_CASE("random moore families validate and reproduce") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    MooreFamily a = random_moore_family(1 + seed % 5, 0.3, seed);
    MooreFamily b = random_moore_family(1 + seed % 5, 0.3, seed);
    CHECK(a.closed_sets() == b.closed_sets());
    CHECK(!a.closed_sets().empty());
  }
  CHECK_THROWS_AS(random_moore_family(9, 0.3, 1), GroundTooLarge);
}
