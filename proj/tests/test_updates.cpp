#include <doctest.h>

#include <vector>

#include "fourval/errors.hpp"
#include "fourval/parser.hpp"
#include "fourval/updates.hpp"
#include "generators.hpp"
#include "testio.hpp"

using namespace fourval;

namespace {
constexpr TruthValue t = TruthValue::t;
constexpr TruthValue b = TruthValue::b;
constexpr TruthValue n = TruthValue::n;
constexpr TruthValue f = TruthValue::f;

Fact gf(std::string pred, std::string c) {
  return Fact(Atom{std::move(pred), {Term::constant(std::move(c))}});
}

Formula new_leaf() { return Formula::atom(Atom{"NEW", {}}); }
Formula cur_leaf() { return Formula::atom(Atom{"CUR", {}}); }
}  // namespace

TEST_CASE("standard updates") {
  Database db;
  db.extension.assign(gf("P", "a"), t);
  db.rules.push_back(make_rule(false, Atom{"Q", {Term::variable("x")}},
                               Formula::atom(Atom{"P", {Term::variable("x")}})));

  SUBCASE("insert") {
    const Database out = standard_update(db, {gf("P", "b"), f});
    CHECK(out.extension.value_of(gf("P", "b")) == f);
    CHECK(out.extension.value_of(gf("P", "a")) == t);
    CHECK(out.extension.size() == 2);
  }
  SUBCASE("replace") {
    const Database out = standard_update(db, {gf("P", "a"), b});
    CHECK(out.extension.value_of(gf("P", "a")) == b);
    CHECK(out.extension.size() == 1);
  }
  SUBCASE("value n deletes") {
    const Database out = standard_update(db, {gf("P", "a"), n});
    CHECK(out.extension.empty());
    // Deleting an absent fact is a no-op.
    const Database again = standard_update(out, {gf("P", "zz"), n});
    CHECK(again.extension.empty());
  }
  SUBCASE("rules are never touched") {
    const Database out = standard_update(db, {gf("P", "a"), n});
    REQUIRE(out.rules.size() == 1);
    CHECK(testgen::same_rule(out.rules[0], db.rules[0]));
  }
}

TEST_CASE("a sequence of standard updates on the grain database") {
  Database db = parse_database(testio::read_data("running_example.4vl"));
  db = standard_update(db, {gf("H1", "202"), t});
  db = standard_update(db, {gf("H2", "202"), t});
  db = standard_update(db, {gf("W1", "202"), t});

  VSet expect;
  expect.assign(gf("H1", "101"), f);
  expect.assign(gf("H2", "101"), f);
  expect.assign(gf("W1", "101"), t);
  expect.assign(gf("H1", "202"), t);
  expect.assign(gf("H2", "202"), t);
  expect.assign(gf("W1", "202"), t);
  expect.assign(gf("W2", "202"), t);
  expect.assign(gf("W1", "303"), f);
  CHECK(db.extension == expect);
  CHECK(db.rules.size() == 7);
}

TEST_CASE("combinator construction") {
  SUBCASE("connector shorthands work and implication is rejected") {
    for (BinaryConnector op :
         {BinaryConnector::Or, BinaryConnector::And, BinaryConnector::KJoin,
          BinaryConnector::KMeet, BinaryConnector::ODot}) {
      const Combinator c = Combinator::from_connector(op);
      for (TruthValue v1 : all_values()) {
        for (TruthValue v2 : all_values()) {
          CHECK(c.apply(v1, v2) == eval_binary(op, v1, v2));
        }
      }
    }
    CHECK_THROWS_AS(Combinator::from_connector(BinaryConnector::ImpFde), Error);
    CHECK_THROWS_AS(Combinator::from_connector(BinaryConnector::ImpMat), Error);
  }

  SUBCASE("expressions must mention both placeholders") {
    CHECK_THROWS_AS(Combinator::from_formula(new_leaf()), Error);
    CHECK_THROWS_AS(Combinator::from_formula(Formula::binary(
                        BinaryConnector::Or, cur_leaf(), cur_leaf())),
                    Error);
  }

  SUBCASE("leaves other than the placeholders are rejected") {
    CHECK_THROWS_AS(
        Combinator::from_formula(Formula::binary(
            BinaryConnector::Or, new_leaf(), Formula::atom(Atom{"P", {}}))),
        Error);
    CHECK_THROWS_AS(
        Combinator::from_formula(Formula::binary(
            BinaryConnector::Or, new_leaf(),
            Formula::atom(Atom{"CUR", {Term::constant("a")}}))),
        Error);
  }

  SUBCASE("connectors outside the update set are rejected") {
    CHECK_THROWS_AS(Combinator::from_formula(Formula::binary(
                        BinaryConnector::ImpHook, new_leaf(), cur_leaf())),
                    Error);
    CHECK_THROWS_AS(
        Combinator::from_formula(Formula::binary(
            BinaryConnector::Or,
            Formula::unary(UnaryConnector::Conf, new_leaf()), cur_leaf())),
        Error);
  }

  SUBCASE("the incoming value binds to NEW") {
    const Combinator c = Combinator::from_formula(Formula::binary(
        BinaryConnector::And, new_leaf(),
        Formula::unary(UnaryConnector::Neg, cur_leaf())));
    CHECK(c.apply(t, f) == t);  // t & ~f
    CHECK(c.apply(f, t) == f);  // f & ~t
  }

  SUBCASE("negation is allowed") {
    const Combinator c = Combinator::from_formula(Formula::binary(
        BinaryConnector::Or, Formula::unary(UnaryConnector::Neg, new_leaf()),
        cur_leaf()));
    CHECK(c.apply(t, f) == f);
    CHECK(c.apply(f, n) == t);
  }
}

TEST_CASE("integrative updates on the refreshed grain extension") {
  Database base = parse_database(testio::read_data("running_example.4vl"));
  base = standard_update(base, {gf("H1", "202"), t});
  base = standard_update(base, {gf("H2", "202"), t});
  base = standard_update(base, {gf("W1", "202"), t});

  const std::vector<VPair> incoming = {
      {gf("H2", "101"), f}, {gf("H2", "202"), b}, {gf("H2", "303"), t}};

  const auto run = [&](BinaryConnector op) {
    Database db = base;
    const Combinator c = Combinator::from_connector(op);
    for (const VPair& p : incoming) db = integrative_update(db, p, c);
    return db;
  };

  SUBCASE("join keeps everything it learns") {
    const Database out = run(BinaryConnector::KJoin);
    CHECK(out.extension.value_of(gf("H2", "101")) == f);
    CHECK(out.extension.value_of(gf("H2", "202")) == b);
    CHECK(out.extension.value_of(gf("H2", "303")) == t);
    CHECK(out.extension.size() == base.extension.size() + 1);
  }
  SUBCASE("meet keeps only agreement") {
    const Database out = run(BinaryConnector::KMeet);
    CHECK(out.extension.value_of(gf("H2", "101")) == f);
    CHECK(out.extension.value_of(gf("H2", "202")) == t);
    CHECK_FALSE(out.extension.contains(gf("H2", "303")));
    CHECK(out.extension.size() == base.extension.size());
  }
  SUBCASE("consensus-or-accept") {
    const Database out = run(BinaryConnector::ODot);
    CHECK(out.extension.value_of(gf("H2", "101")) == f);
    CHECK(out.extension.value_of(gf("H2", "202")) == b);
    CHECK_FALSE(out.extension.contains(gf("H2", "303")));
    CHECK(out.extension.size() == base.extension.size());
  }
  SUBCASE("untouched entries survive every variant") {
    for (BinaryConnector op : {BinaryConnector::KJoin, BinaryConnector::KMeet,
                               BinaryConnector::ODot}) {
      const Database out = run(op);
      CHECK(out.extension.value_of(gf("W1", "303")) == f);
      CHECK(out.extension.value_of(gf("H1", "202")) == t);
      CHECK(out.rules.size() == base.rules.size());
    }
  }
}

TEST_CASE("standard updates are integrative updates in disguise") {
  const std::pair<TruthValue, BinaryConnector> pairs[] = {
      {t, BinaryConnector::Or},
      {b, BinaryConnector::KJoin},
      {n, BinaryConnector::KMeet},
      {f, BinaryConnector::And}};
  for (const auto& [incoming, op] : pairs) {
    const Combinator c = Combinator::from_connector(op);
    for (TruthValue current : all_values()) {
      // Value level: combining v with anything lands back on v.
      CHECK(c.apply(incoming, current) == incoming);

      // Database level: both paths produce the same extension.
      Database db;
      db.extension.assign(gf("Other", "zz"), b);
      if (current != n) db.extension.assign(gf("P", "a"), current);
      const VPair pair{gf("P", "a"), incoming};
      const Database via_standard = standard_update(db, pair);
      const Database via_integrative = integrative_update(db, pair, c);
      CHECK(via_standard.extension == via_integrative.extension);
    }
  }
}
