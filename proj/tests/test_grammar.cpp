#include <catch2/catch_amalgamated.hpp>
#include <random>
#include <set>
#include <sstream>

#include "ccgnf/grammar.hpp"
#include "oracle.hpp"

using namespace ccgnf;

namespace {
Cat cat(const char* text) { return Category::parse(text); }
}  // namespace

TEST_CASE("lexicon loading") {
  std::istringstream in(
      "# verbs\n"
      "likes\t(S\\NP)/NP\n"
      "\n"
      "that\t(N\\N)/(S/NP)\n");
  std::vector<LexEntry> entries = load_lexicon(in);
  REQUIRE(entries.size() == 2);
  CHECK(entries[0].word == "likes");
  CHECK(entries[0].category == cat("(S\\NP)/NP"));
  CHECK(entries[1].word == "that");
  CHECK(entries[1].category == cat("(N\\N)/(S/NP)"));
}

TEST_CASE("empty lexicon") {
  std::istringstream in("");
  CHECK(load_lexicon(in).empty());
}

TEST_CASE("lexicon errors carry line numbers") {
  SECTION("bad category") {
    std::istringstream in("likes\t(S\\NP)/NP\nbroken\tS//NP\n");
    try {
      load_lexicon(in);
      FAIL("expected LoadError");
    } catch (const LoadError& e) {
      CHECK(e.line == 2);
    }
  }
  SECTION("duplicate entry") {
    std::istringstream in("a\tNP\nb\tS\na\tNP\n");
    try {
      load_lexicon(in);
      FAIL("expected LoadError");
    } catch (const LoadError& e) {
      CHECK(e.line == 3);
    }
  }
  SECTION("missing tab") {
    std::istringstream in("just-a-word\n");
    CHECK_THROWS_AS(load_lexicon(in), LoadError);
  }
}

TEST_CASE("policy loading") {
  std::istringstream in(
      "# a restricted grammar\n"
      "max_degree = 2\n"
      "allow_crossing = false\n"
      "enable_substitution = true\n"
      "target = NP\n"
      "block = B/C + C -> B [>B0]\n"
      "block = S/S + S\\S -> S/S [<B1]\n");
  PolicyConfig config = load_policy(in);
  CHECK(config.policy.max_degree == 2);
  CHECK_FALSE(config.policy.allow_crossing);
  CHECK(config.policy.enable_substitution);
  CHECK(config.target == cat("NP"));
  CHECK(config.policy.blocked.size() == 2);
  CHECK(config.policy.blocked.count(
            BlockedRule{cat("B/C"), cat("C"), RuleKind::compose(Slash::Forward, 0)}) == 1);
}

TEST_CASE("policy errors") {
  SECTION("block output is validated against the template") {
    std::istringstream in("block = B/C + C -> A [>B0]\n");
    try {
      load_policy(in);
      FAIL("expected LoadError");
    } catch (const LoadError& e) {
      CHECK(e.line == 1);
    }
  }
  SECTION("inapplicable block rule") {
    std::istringstream in("block = B/C + D -> B [>B0]\n");
    CHECK_THROWS_AS(load_policy(in), LoadError);
  }
  SECTION("bad kind") {
    std::istringstream in("block = B/C + C -> B [>X1]\n");
    CHECK_THROWS_AS(load_policy(in), LoadError);
  }
  SECTION("unknown key") {
    std::istringstream in("max_degrees = 2\n");
    CHECK_THROWS_AS(load_policy(in), LoadError);
  }
}

TEST_CASE("pure preset admits every template instance") {
  RulePolicy policy = pure_policy();
  CHECK(policy.max_degree == kUnboundedDegree);
  CHECK(policy.allow_crossing);
  CHECK_FALSE(policy.enable_substitution);
  CHECK(policy.blocked.empty());
  CHECK(pure_policy(true).enable_substitution);
}

TEST_CASE("grammar rejects duplicate entries") {
  std::vector<LexEntry> lex = {{"a", cat("NP")}, {"a", cat("NP")}};
  CHECK_THROWS_AS(Grammar(lex, RulePolicy{}, cat("S")), std::invalid_argument);
}

TEST_CASE("a word may have several categories") {
  std::vector<LexEntry> lex = {{"a", cat("NP")}, {"a", cat("N")}};
  Grammar g(lex, RulePolicy{}, cat("S"));
  CHECK(g.categories_of("a").size() == 2);
  CHECK(g.categories_of("missing").empty());
  CHECK(g.max_lexical_arity() == 0);
}

TEST_CASE("rule_allowed under the pure policy admits every instance") {
  std::mt19937 rng(5);
  std::vector<Cat> atoms = {Category::atom("A"), Category::atom("B")};
  std::vector<LexEntry> lex;
  RulePolicy pure;
  pure.max_degree = 4;
  Grammar g(lex, pure, cat("S"));
  for (int round = 0; round < 100; ++round) {
    Cat l = testing::random_category(rng, atoms, 3);
    Cat r = testing::random_category(rng, atoms, 3);
    for (const RuleInstance& inst : enumerate_rules(l, r, 4))
      CHECK(rule_allowed(g, inst));
  }
}

TEST_CASE("blocking removes exactly the blocked instance") {
  RulePolicy policy;
  policy.max_degree = 2;
  policy.blocked.insert(
      BlockedRule{cat("B/C"), cat("C"), RuleKind::compose(Slash::Forward, 0)});
  Grammar g({}, policy, cat("S"));

  auto blocked = instantiate(RuleKind::compose(Slash::Forward, 0), cat("B/C"), cat("C"));
  REQUIRE(blocked.has_value());
  CHECK_FALSE(rule_allowed(g, *blocked));

  auto other = instantiate(RuleKind::compose(Slash::Forward, 0), cat("A/C"), cat("C"));
  REQUIRE(other.has_value());
  CHECK(rule_allowed(g, *other));
}

TEST_CASE("crossing can be disallowed") {
  RulePolicy policy;
  policy.max_degree = 2;
  policy.allow_crossing = false;
  Grammar g({}, policy, cat("S"));

  auto crossed = instantiate(RuleKind::compose(Slash::Backward, 1), cat("N/N"), cat("N\\N"));
  REQUIRE(crossed.has_value());
  CHECK(crossed->output == cat("N/N"));
  CHECK_FALSE(rule_allowed(g, *crossed));

  auto harmonic = instantiate(RuleKind::compose(Slash::Forward, 1), cat("N/N"), cat("N/N"));
  REQUIRE(harmonic.has_value());
  CHECK(rule_allowed(g, *harmonic));
}

TEST_CASE("degree and substitution switches") {
  RulePolicy policy;
  policy.max_degree = 1;
  Grammar g({}, policy, cat("S"));
  auto deep = instantiate(RuleKind::compose(Slash::Forward, 2), cat("A/B"), cat("B/C/D"));
  REQUIRE(deep.has_value());
  CHECK_FALSE(rule_allowed(g, *deep));

  auto subst = instantiate(RuleKind::substitute(Slash::Forward), cat("(A/B)/C"), cat("B/C"));
  REQUIRE(subst.has_value());
  CHECK_FALSE(rule_allowed(g, *subst));
  policy.enable_substitution = true;
  Grammar g2({}, policy, cat("S"));
  CHECK(rule_allowed(g2, *subst));
}

TEST_CASE("rule_allowed is pure and monotone in the policy") {
  std::mt19937 rng(31);
  std::vector<Cat> atoms = {Category::atom("A"), Category::atom("B"),
                            Category::atom("C")};
  RulePolicy tight;
  tight.max_degree = 1;
  tight.allow_crossing = false;
  RulePolicy loose;
  loose.max_degree = 3;
  loose.allow_crossing = true;
  Grammar gt({}, tight, cat("S"));
  Grammar gl({}, loose, cat("S"));
  for (int round = 0; round < 200; ++round) {
    Cat l = testing::random_category(rng, atoms, 3);
    Cat r = testing::random_category(rng, atoms, 3);
    for (const RuleInstance& inst : enumerate_rules(l, r, 3)) {
      CHECK(rule_allowed(gt, inst) == rule_allowed(gt, inst));
      if (rule_allowed(gt, inst)) CHECK(rule_allowed(gl, inst));
    }
  }
}
