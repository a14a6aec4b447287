#include <doctest.h>

#include <vector>

#include "fourval/errors.hpp"
#include "fourval/normal.hpp"
#include "fourval/serialize.hpp"
#include "generators.hpp"

using namespace fourval;

namespace {

Formula nullary(const char* name) { return Formula::atom(Atom{name, {}}); }

Formula neg(Formula x) { return Formula::unary(UnaryConnector::Neg, std::move(x)); }

Formula bin(BinaryConnector op, Formula l, Formula r) {
  return Formula::binary(op, std::move(l), std::move(r));
}

// All 4^k valuations of the given nullary atoms.
std::vector<VSet> all_assignments(const std::vector<Atom>& atoms) {
  std::vector<VSet> out;
  const std::size_t total = 1u << (2 * atoms.size());
  for (std::size_t mask = 0; mask < total; ++mask) {
    VSet s;
    std::size_t rest = mask;
    for (const Atom& a : atoms) {
      s.assign(Fact(a), all_values()[rest % 4]);
      rest /= 4;
    }
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

TEST_CASE("negation normal form") {
  const Formula p = nullary("Pp");
  const Formula q = nullary("Qq");

  CHECK(to_nnf(neg(bin(BinaryConnector::Or, p, q))) ==
        bin(BinaryConnector::And, neg(p), neg(q)));
  CHECK(to_nnf(neg(bin(BinaryConnector::And, p, q))) ==
        bin(BinaryConnector::Or, neg(p), neg(q)));
  // Negation passes through the knowledge connectors unchanged.
  CHECK(to_nnf(neg(bin(BinaryConnector::KJoin, p, q))) ==
        bin(BinaryConnector::KJoin, neg(p), neg(q)));
  CHECK(to_nnf(neg(bin(BinaryConnector::KMeet, p, q))) ==
        bin(BinaryConnector::KMeet, neg(p), neg(q)));
  CHECK(to_nnf(neg(neg(p))) == p);
  CHECK(to_nnf(p) == p);

  CHECK_THROWS_AS(to_nnf(bin(BinaryConnector::ImpFde, p, q)), RuleError);
  CHECK_THROWS_AS(to_nnf(Formula::unary(UnaryConnector::Conf, p)), RuleError);
}

TEST_CASE("normal form structure") {
  const Formula p = nullary("Pp");
  const Formula q = nullary("Qq");
  const Formula r = nullary("Rr");

  SUBCASE("oplus distributes over or") {
    // Pp (+) (Qq | Rr)  ~~>  (Pp (+) Qq) | (Pp (+) Rr)
    const NormalForm nf =
        normalize(bin(BinaryConnector::KJoin, p, bin(BinaryConnector::Or, q, r)));
    REQUIRE(nf.disjuncts.size() == 2);
    REQUIRE(nf.disjuncts[0].blocks.size() == 2);
    REQUIRE(nf.disjuncts[1].blocks.size() == 2);
    CHECK(nf.block_count() == 4);
    CHECK(block_formula(nf.disjuncts[0].blocks[0]) == p);
    CHECK(block_formula(nf.disjuncts[0].blocks[1]) == q);
    CHECK(block_formula(nf.disjuncts[1].blocks[0]) == p);
    CHECK(block_formula(nf.disjuncts[1].blocks[1]) == r);
  }

  SUBCASE("and distributes over or") {
    // (Pp | Qq) & Rr  ~~>  (Pp & Rr) | (Qq & Rr)
    const NormalForm nf =
        normalize(bin(BinaryConnector::And, bin(BinaryConnector::Or, p, q), r));
    REQUIRE(nf.disjuncts.size() == 2);
    REQUIRE(nf.disjuncts[0].blocks.size() == 1);
    REQUIRE(nf.disjuncts[1].blocks.size() == 1);
    CHECK(block_formula(nf.disjuncts[0].blocks[0]) ==
          bin(BinaryConnector::And, p, r));
    CHECK(block_formula(nf.disjuncts[1].blocks[0]) ==
          bin(BinaryConnector::And, q, r));
  }

  SUBCASE("negated atom is a single literal") {
    const NormalForm nf = normalize(neg(p));
    REQUIRE(nf.disjuncts.size() == 1);
    REQUIRE(nf.disjuncts[0].blocks.size() == 1);
    REQUIRE(nf.disjuncts[0].blocks[0].groups.size() == 1);
    REQUIRE(nf.disjuncts[0].blocks[0].groups[0].literals.size() == 1);
    const Literal& lit = nf.disjuncts[0].blocks[0].groups[0].literals[0];
    CHECK(lit.negated);
    CHECK(lit.atom == Atom{"Pp", {}});
    CHECK(literal_formula(lit) == neg(p));
  }

  SUBCASE("block variables") {
    const Formula body = bin(
        BinaryConnector::KMeet,
        Formula::atom(Atom{"P1", {Term::variable("x")}}),
        Formula::atom(Atom{"P2", {Term::variable("x"), Term::variable("y")}}));
    const NormalForm nf = normalize(body);
    REQUIRE(nf.block_count() == 1);
    CHECK(nf.disjuncts[0].blocks[0].variables() ==
          std::set<std::string>{"x", "y"});
  }
}

TEST_CASE("normalization preserves meaning") {
  testgen::Rng rng(303);
  const std::vector<Atom> atoms = {Atom{"Aa", {}}, Atom{"Bb", {}},
                                   Atom{"Cc", {}}};
  const auto assignments = all_assignments(atoms);
  for (int i = 0; i < 300; ++i) {
    const Formula body = testgen::random_body_formula(rng, atoms, 4);
    const Formula nnf = to_nnf(body);
    const Formula flat = normal_form_formula(normalize(body));
    for (const VSet& s : assignments) {
      const TruthValue expect = evaluate(s, body);
      CHECK(evaluate(s, nnf) == expect);
      CHECK(evaluate(s, flat) == expect);
    }
  }
}

TEST_CASE("normalization respects the node budget") {
  // Alternating or/oplus/and layers force a multiplicative expansion.
  Formula big = nullary("A0");
  const BinaryConnector layers[] = {BinaryConnector::Or, BinaryConnector::KJoin,
                                    BinaryConnector::And};
  for (int i = 0; i < 12; ++i) {
    std::string name = "A" + std::to_string(i + 1);
    big = bin(layers[i % 3], big, Formula::atom(Atom{name, {}}));
  }
  CHECK_THROWS_AS(normalize(big, 200), ResourceLimitError);
  CHECK_NOTHROW(normalize(big));
}

TEST_CASE("rule safety") {
  const Term x = Term::variable("x");
  const Term y = Term::variable("y");
  const Atom p1x{"P1", {x}};
  const Atom p2xy{"P2", {x, y}};

  SUBCASE("oplus joins blocks, so a wide companion block is enough") {
    const Rule r = make_rule(false, Atom{"P", {x}},
                             bin(BinaryConnector::KJoin, Formula::atom(p1x),
                                 Formula::atom(p2xy)));
    const SafetyReport rep = is_safe(r);
    CHECK(rep.safe);
  }

  SUBCASE("or splits into blocks that must each bind the head") {
    const Rule r = make_rule(false, Atom{"R", {x, y}},
                             bin(BinaryConnector::Or, Formula::atom(p1x),
                                 Formula::atom(p2xy)));
    const SafetyReport rep = is_safe(r);
    REQUIRE_FALSE(rep.safe);
    CHECK(rep.disjunct_index == 0);
    CHECK(rep.block_index == 0);
    CHECK(rep.block_text == "P1(?x)");
    CHECK(rep.missing_variables == std::set<std::string>{"y"});
  }

  SUBCASE("violation reported in a later disjunct") {
    const Rule r = make_rule(
        false, Atom{"P", {x, y}},
        bin(BinaryConnector::Or,
            Formula::atom(Atom{"Q", {x, y}}), Formula::atom(Atom{"S1", {x}})));
    const SafetyReport rep = is_safe(r);
    REQUIRE_FALSE(rep.safe);
    CHECK(rep.disjunct_index == 1);
    CHECK(rep.block_text == "S1(?x)");
    CHECK(rep.missing_variables == std::set<std::string>{"y"});
  }

  SUBCASE("ground rules are safe") {
    const Rule r = make_rule(true, Atom{"P", {Term::constant("a")}},
                             Formula::atom(Atom{"Q", {Term::constant("b")}}));
    CHECK(is_safe(r).safe);
  }
}
