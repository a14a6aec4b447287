#include <doctest.h>

#include <set>
#include <string>

#include "fourval/laws.hpp"
#include "fourval/truth.hpp"

using namespace fourval;

namespace {
constexpr TruthValue t = TruthValue::t;
constexpr TruthValue b = TruthValue::b;
constexpr TruthValue n = TruthValue::n;
constexpr TruthValue f = TruthValue::f;
}  // namespace

TEST_CASE("negation and the other involutions") {
  CHECK(eval_unary(UnaryConnector::Neg, t) == f);
  CHECK(eval_unary(UnaryConnector::Neg, b) == b);
  CHECK(eval_unary(UnaryConnector::Neg, n) == n);
  CHECK(eval_unary(UnaryConnector::Neg, f) == t);

  CHECK(eval_unary(UnaryConnector::Conf, t) == b);
  CHECK(eval_unary(UnaryConnector::Conf, b) == t);
  CHECK(eval_unary(UnaryConnector::Conf, n) == f);
  CHECK(eval_unary(UnaryConnector::Conf, f) == n);

  CHECK(eval_unary(UnaryConnector::Compl, t) == f);
  CHECK(eval_unary(UnaryConnector::Compl, b) == n);
  CHECK(eval_unary(UnaryConnector::Compl, n) == b);
  CHECK(eval_unary(UnaryConnector::Compl, f) == t);

  for (TruthValue v : all_values()) {
    CHECK(eval_unary(UnaryConnector::Neg, eval_unary(UnaryConnector::Neg, v)) ==
          v);
    CHECK(eval_unary(UnaryConnector::Conf,
                     eval_unary(UnaryConnector::Conf, v)) == v);
    CHECK(eval_unary(UnaryConnector::Compl,
                     eval_unary(UnaryConnector::Compl, v)) == v);
  }
}

TEST_CASE("value testers and nonvalidity") {
  // Each tester maps exactly its own value to t and everything else to f.
  const UnaryConnector testers[] = {UnaryConnector::IsT, UnaryConnector::IsB,
                                    UnaryConnector::IsN, UnaryConnector::IsF};
  const TruthValue targets[] = {t, b, n, f};
  for (int i = 0; i < 4; ++i) {
    for (TruthValue v : all_values()) {
      CHECK(eval_unary(testers[i], v) == (v == targets[i] ? t : f));
    }
  }
  CHECK(eval_unary(UnaryConnector::NonValid, t) == f);
  CHECK(eval_unary(UnaryConnector::NonValid, b) == f);
  CHECK(eval_unary(UnaryConnector::NonValid, n) == t);
  CHECK(eval_unary(UnaryConnector::NonValid, f) == t);
}

TEST_CASE("binary connector spot checks") {
  CHECK(eval_binary(BinaryConnector::And, b, n) == f);
  CHECK(eval_binary(BinaryConnector::Or, b, n) == t);
  CHECK(eval_binary(BinaryConnector::KJoin, t, f) == b);
  CHECK(eval_binary(BinaryConnector::KMeet, t, f) == n);
  CHECK(eval_binary(BinaryConnector::ODot, b, n) == b);
  CHECK(eval_binary(BinaryConnector::ODot, t, b) == b);
  CHECK(eval_binary(BinaryConnector::ImpFde, n, f) == t);
  CHECK(eval_binary(BinaryConnector::ImpMat, n, f) == n);
  CHECK(eval_binary(BinaryConnector::ImpHook, n, f) == b);
  CHECK(eval_binary(BinaryConnector::ImpFdeStar, n, f) == n);
  CHECK(eval_binary(BinaryConnector::ImpHookStar, b, b) == t);
  // kjoin with n is the identity; with b it is absorbing.
  for (TruthValue v : all_values()) {
    CHECK(eval_binary(BinaryConnector::KJoin, n, v) == v);
    CHECK(eval_binary(BinaryConnector::KJoin, v, n) == v);
    CHECK(eval_binary(BinaryConnector::KJoin, b, v) == b);
    CHECK(eval_binary(BinaryConnector::KMeet, b, v) == v);
  }
}

TEST_CASE("orders agree with their lattice operations") {
  CHECK(leq_k(n, t));
  CHECK(leq_k(n, f));
  CHECK(leq_k(t, b));
  CHECK(leq_k(f, b));
  CHECK_FALSE(leq_k(t, f));
  CHECK_FALSE(leq_k(f, t));
  CHECK_FALSE(leq_k(b, t));
  CHECK(leq_t(f, n));
  CHECK(leq_t(f, b));
  CHECK(leq_t(n, t));
  CHECK(leq_t(b, t));
  CHECK_FALSE(leq_t(n, b));
  CHECK_FALSE(leq_t(b, n));
  for (TruthValue x : all_values()) {
    for (TruthValue y : all_values()) {
      // x leq y in an order iff joining does nothing, iff meeting keeps x.
      CHECK(leq_k(x, y) == (eval_binary(BinaryConnector::KJoin, x, y) == y));
      CHECK(leq_k(x, y) == (eval_binary(BinaryConnector::KMeet, x, y) == x));
      CHECK(leq_t(x, y) == (eval_binary(BinaryConnector::Or, x, y) == y));
      CHECK(leq_t(x, y) == (eval_binary(BinaryConnector::And, x, y) == x));
      CHECK(k_join(x, y) == eval_binary(BinaryConnector::KJoin, x, y));
    }
  }
}

TEST_CASE("designated values and character codes") {
  CHECK(is_designated(t));
  CHECK(is_designated(b));
  CHECK_FALSE(is_designated(n));
  CHECK_FALSE(is_designated(f));
  CHECK(to_char(t) == 't');
  CHECK(to_char(b) == 'b');
  CHECK(to_char(n) == 'n');
  CHECK(to_char(f) == 'f');
  for (TruthValue v : all_values()) {
    auto back = value_from_char(to_char(v));
    REQUIRE(back.has_value());
    CHECK(*back == v);
  }
  CHECK_FALSE(value_from_char('x').has_value());
  CHECK_FALSE(value_from_char('T').has_value());
}

TEST_CASE("connector names") {
  CHECK(unary_name(UnaryConnector::Neg) == "~");
  CHECK(unary_name(UnaryConnector::Conf) == "conf");
  CHECK(unary_name(UnaryConnector::Compl) == "compl");
  CHECK(unary_name(UnaryConnector::NonValid) == "inc");
  CHECK(binary_name(BinaryConnector::KJoin) == "(+)");
  CHECK(binary_name(BinaryConnector::KMeet) == "(x)");
  CHECK(binary_name(BinaryConnector::ODot) == "(o)");
  CHECK(binary_name(BinaryConnector::ImpMat) == "=>");
  CHECK(binary_name(BinaryConnector::ImpFde) == "->");
  CHECK(binary_name(BinaryConnector::ImpHook) == "~>");
  CHECK(binary_name(BinaryConnector::ImpFdeStar) == "*->");
  CHECK(binary_name(BinaryConnector::ImpHookStar) == "*~>");
}

TEST_CASE("law suite outcome is stable") {
  const auto results = run_law_suite();
  CHECK(results.size() == 54);
  std::set<std::string> failing;
  for (const auto& r : results) {
    if (!r.passed) failing.insert(r.name);
  }
  // One documented counterexample survives; everything else holds.
  REQUIRE(failing.size() == 1);
  CHECK(*failing.begin() == "(a & (a *-> b)) *-> b is designated");
  for (const auto& r : results) {
    if (!r.passed) {
      CHECK(r.detail == " (n,b) (n,f)");
    }
  }
}
