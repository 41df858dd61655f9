#include <algorithm>
#include <catch2/catch_amalgamated.hpp>
#include <random>
#include <set>

#include "ccgnf/canonical.hpp"
#include "ccgnf/chart.hpp"
#include "ccgnf/recipe.hpp"
#include "oracle.hpp"

using namespace ccgnf;
using testing::words;

namespace {

std::set<std::string> tree_strings(const std::vector<TreePtr>& trees) {
  std::set<std::string> out;
  for (const TreePtr& t : trees) out.insert(format_tree(t, true));
  return out;
}

bool has_item(const Chart& chart, int begin, int end, const char* category) {
  Cat c = Category::parse(category);
  for (const Chart::Item* item : chart.cell(begin, end))
    if (item->category == c) return true;
  return false;
}

Grammar john_grammar() {
  std::vector<LexEntry> lex = {{"John", Category::parse("S/(S\\NP)")},
                               {"likes", Category::parse("(S\\NP)/NP")},
                               {"Mary", Category::parse("NP")}};
  return Grammar(lex, pure_policy(), Category::atom("S"));
}

}  // namespace

TEST_CASE("tag strings") {
  CHECK(Tag::ot().str() == "OT");
  CHECK(Tag::fc(1).str() == "FC1");
  CHECK(Tag::fc(2).str() == "FC2");
  CHECK(Tag::fc(3).str() == "FC2");
  CHECK(Tag::fc(3).str(true) == "FC3");
  CHECK(Tag::bc(2).str() == "BC2");
  CHECK(Tag::sf().str() == "SF");
  CHECK(Tag::sb().str() == "SB");
}

TEST_CASE("output tags") {
  CHECK(output_tag(RuleKind::compose(Slash::Forward, 2)) == Tag::fc(2));
  CHECK(output_tag(RuleKind::compose(Slash::Backward, 0)) == Tag::ot());
  CHECK(output_tag(RuleKind::compose(Slash::Forward, 0)) == Tag::ot());
  CHECK(output_tag(RuleKind::compose(Slash::Backward, 3)) == Tag::bc(3));
  CHECK(output_tag(RuleKind::substitute(Slash::Forward)) == Tag::sf());
  CHECK(output_tag(RuleKind::substitute(Slash::Backward)) == Tag::sb());
}

TEST_CASE("nf_admissible") {
  RuleKind fwd_app = RuleKind::compose(Slash::Forward, 0);
  RuleKind bwd_app = RuleKind::compose(Slash::Backward, 0);
  RuleKind bwd_b1 = RuleKind::compose(Slash::Backward, 1);
  RuleKind fwd_s = RuleKind::substitute(Slash::Forward);
  RuleKind bwd_s = RuleKind::substitute(Slash::Backward);

  // Forward rules reject forward-composition output on the left.
  CHECK_FALSE(nf_admissible(fwd_app, Tag::fc(1), Tag::ot()));
  CHECK_FALSE(nf_admissible(fwd_app, Tag::fc(2), Tag::ot()));
  CHECK(nf_admissible(fwd_app, Tag::ot(), Tag::fc(1)));
  CHECK(nf_admissible(fwd_app, Tag::bc(1), Tag::ot()));

  // Substitution only rejects degree >= 2 on its primary side.
  CHECK(nf_admissible(fwd_s, Tag::fc(1), Tag::ot()));
  CHECK_FALSE(nf_admissible(fwd_s, Tag::fc(2), Tag::ot()));
  CHECK_FALSE(nf_admissible(fwd_s, Tag::fc(3), Tag::ot()));
  CHECK(nf_admissible(bwd_s, Tag::ot(), Tag::bc(1)));
  CHECK_FALSE(nf_admissible(bwd_s, Tag::ot(), Tag::bc(2)));

  // Backward rules restrict only their right (primary) side.
  CHECK(nf_admissible(bwd_b1, Tag::bc(1), Tag::ot()));
  CHECK_FALSE(nf_admissible(bwd_b1, Tag::ot(), Tag::bc(1)));
  CHECK(nf_admissible(bwd_app, Tag::ot(), Tag::fc(1)));

  // Substitution output is unrestricted as an input.
  CHECK(nf_admissible(fwd_app, Tag::sf(), Tag::ot()));
  CHECK(nf_admissible(bwd_app, Tag::ot(), Tag::sb()));
}

TEST_CASE("exhaustive chart of John likes Mary") {
  Grammar g = john_grammar();
  std::vector<std::string> sentence = {"John", "likes", "Mary"};
  Chart chart = parse_exhaustive(sentence, g);

  std::vector<TreePtr> trees = enumerate_trees(chart, 0, 3, g.target(), 100);
  CHECK(tree_strings(trees) ==
        std::set<std::string>{
            "[[John] [[likes] [Mary]]S\\NP-OT]S-OT",
            "[[[John] [likes]]S/NP-FC1 [Mary]]S-OT",
        });
  CHECK(count_trees(chart, 0, 3, g.target()) == 2);

  // All of the (5a)-(5e) constituents exist.
  CHECK(has_item(chart, 0, 1, "S/(S\\NP)"));
  CHECK(has_item(chart, 1, 2, "(S\\NP)/NP"));
  CHECK(has_item(chart, 0, 2, "S/NP"));
  CHECK(has_item(chart, 2, 3, "NP"));
  CHECK(has_item(chart, 1, 3, "S\\NP"));
}

TEST_CASE("normal-form chart keeps only the right-branching parse") {
  Grammar g = john_grammar();
  std::vector<std::string> sentence = {"John", "likes", "Mary"};
  Chart chart = parse_nf(sentence, g);

  std::vector<TreePtr> trees = enumerate_trees(chart, 0, 3, g.target(), 100);
  REQUIRE(trees.size() == 1);
  CHECK(format_tree(trees[0], true) == "[[John] [[likes] [Mary]]S\\NP-OT]S-OT");

  // The non-standard constituent [John likes] itself is still built.
  CHECK(has_item(chart, 0, 2, "S/NP"));
}

TEST_CASE("forward chains count Catalan numbers and one normal form") {
  const std::uint64_t expected[] = {0, 0, 2, 5, 14, 42};
  for (int k = 3; k <= 6; ++k) {
    std::string text;
    for (int i = 1; i < k; ++i)
      text += "A" + std::to_string(i) + "/A" + std::to_string(i + 1) + " ";
    text += "A" + std::to_string(k);
    std::vector<std::string> sentence = words(text);
    Grammar g = testing::schematic_grammar(sentence, "A1");

    Chart exhaustive = parse_exhaustive(sentence, g);
    CHECK(count_trees(exhaustive, 0, k, g.target()) == expected[k - 1]);
    CHECK(expected[k - 1] == testing::catalan(k - 1));

    Chart nf = parse_nf(sentence, g);
    std::vector<TreePtr> nf_trees = enumerate_trees(nf, 0, k, g.target(), 1000);
    REQUIRE(nf_trees.size() == 1);
    // Right-branching: every left child is a leaf.
    TreePtr t = nf_trees[0];
    while (!t->is_leaf()) {
      CHECK(t->left()->is_leaf());
      t = t->right();
    }
  }
}

TEST_CASE("backward chains normalize to the left-branching parse") {
  std::vector<std::string> sentence = words("A4 A3\\A4 A2\\A3 A1\\A2");
  Grammar g = testing::schematic_grammar(sentence, "A1");
  Chart exhaustive = parse_exhaustive(sentence, g);
  CHECK(count_trees(exhaustive, 0, 4, g.target()) == testing::catalan(3));
  Chart nf = parse_nf(sentence, g);
  std::vector<TreePtr> nf_trees = enumerate_trees(nf, 0, 4, g.target(), 1000);
  REQUIRE(nf_trees.size() == 1);
  TreePtr t = nf_trees[0];
  while (!t->is_leaf()) {
    CHECK(t->right()->is_leaf());
    t = t->left();
  }
}

TEST_CASE("unknown words are reported by name") {
  Grammar g = john_grammar();
  try {
    parse_exhaustive({"John", "adores", "Mary"}, g);
    FAIL("expected UnknownWordError");
  } catch (const UnknownWordError& e) {
    REQUIRE(e.words.size() == 1);
    CHECK(e.words[0] == "adores");
  }
}

TEST_CASE("enumeration cap") {
  Grammar g = john_grammar();
  Chart chart = parse_exhaustive({"John", "likes", "Mary"}, g);
  try {
    enumerate_trees(chart, 0, 3, g.target(), 1);
    FAIL("expected EnumerationCapExceeded");
  } catch (const EnumerationCapExceeded& e) {
    CHECK(e.count == 2);
    CHECK(e.cap == 1);
  }
}

TEST_CASE("empty result for a category missing from the cell") {
  Grammar g = john_grammar();
  Chart chart = parse_exhaustive({"John", "likes", "Mary"}, g);
  CHECK(enumerate_trees(chart, 0, 3, Category::atom("N"), 100).empty());
  CHECK(count_trees(chart, 0, 3, Category::atom("N")) == 0);
}

TEST_CASE("chart agrees with the brute-force oracle on random grammars") {
  std::mt19937 rng(1234);
  int nontrivial = 0;
  for (int round = 0; round < 120; ++round) {
    testing::RandomCase rc = testing::random_case(rng, 3, 5, 2, 2);
    bool with_subst = round % 2 == 1;
    Grammar g(rc.entries, pure_policy(with_subst), Category::atom("A"));
    const int n = static_cast<int>(rc.words.size());

    std::vector<TreePtr> oracle_trees = testing::brute_force_trees(rc.words, g);
    if (oracle_trees.size() > 5000) continue;
    if (!oracle_trees.empty()) ++nontrivial;

    Chart chart = parse_exhaustive(rc.words, g);
    std::set<std::string> chart_strings;
    std::set<Cat> cats;
    for (const TreePtr& t : oracle_trees) cats.insert(t->category());
    for (const Chart::Item* item : chart.cell(0, n)) cats.insert(item->category);
    std::uint64_t chart_total = 0;
    for (Cat c : cats) {
      chart_total += count_trees(chart, 0, n, c);
      for (const TreePtr& t : enumerate_trees(chart, 0, n, c, 10000))
        chart_strings.insert(format_tree(t, true));
    }
    CHECK(chart_total == oracle_trees.size());
    CHECK(chart_strings == tree_strings(oracle_trees));

    // NF chart contents == declaratively normal oracle trees.
    Chart nf = parse_nf(rc.words, g);
    std::set<std::string> nf_strings;
    for (Cat c : cats)
      for (const TreePtr& t : enumerate_trees(nf, 0, n, c, 10000))
        nf_strings.insert(format_tree(t, true));
    std::set<std::string> expected;
    for (const TreePtr& t : oracle_trees)
      if (testing::declarative_nf(t)) expected.insert(format_tree(t, true));
    CHECK(nf_strings == expected);
  }
  CHECK(nontrivial > 10);
}

TEST_CASE("every subtree of an NF-chart tree is NF") {
  std::mt19937 rng(99);
  for (int round = 0; round < 60; ++round) {
    testing::RandomCase rc = testing::random_case(rng, 3, 6, 2, 2);
    Grammar g(rc.entries, pure_policy(), Category::atom("A"));
    const int n = static_cast<int>(rc.words.size());
    Chart nf = parse_nf(rc.words, g);
    for (const Chart::Item* item : nf.cell(0, n)) {
      for (const TreePtr& t : enumerate_trees(nf, 0, n, item->category, 5000)) {
        // declarative_nf recurses over all subtrees already.
        CHECK(testing::declarative_nf(t));
      }
    }
  }
}

TEST_CASE("restricting the policy can only shrink the parse set") {
  std::mt19937 rng(4321);
  for (int round = 0; round < 60; ++round) {
    testing::RandomCase rc = testing::random_case(rng, 3, 5, 2, 2);
    RulePolicy loose = pure_policy();
    RulePolicy tight = loose;
    tight.allow_crossing = false;
    tight.max_degree = std::max(0, loose.max_degree - 1);
    Grammar gl(rc.entries, loose, Category::atom("A"));
    Grammar gt(rc.entries, tight, Category::atom("A"));
    std::set<std::string> loose_set = tree_strings(testing::brute_force_trees(rc.words, gl));
    std::set<std::string> tight_set = tree_strings(testing::brute_force_trees(rc.words, gt));
    CHECK(std::includes(loose_set.begin(), loose_set.end(), tight_set.begin(),
                        tight_set.end()));
  }
}

TEST_CASE("normal forms may need degrees above every lexical arity") {
  // The left-branching parse of this chain uses >B2 twice; its normal form
  // needs >B3. A degree cap below that leaves the reading without any NF
  // parse, which is exactly the restricted-grammar situation.
  std::vector<std::string> sentence = words("A/B B/C/D D/E/F");
  Cat target = Category::parse("A/C/E/F");

  Grammar pure = testing::schematic_grammar(sentence, "A/C/E/F");
  Chart exhaustive = parse_exhaustive(sentence, pure);
  CHECK(count_trees(exhaustive, 0, 3, target) == 2);
  Chart nf = parse_nf(sentence, pure);
  std::vector<TreePtr> nf_trees = enumerate_trees(nf, 0, 3, target, 10);
  REQUIRE(nf_trees.size() == 1);
  CHECK(nf_trees[0]->rule().kind == RuleKind::compose(Slash::Forward, 3));

  std::vector<LexEntry> lex = {{"A/B", Category::parse("A/B")},
                               {"B/C/D", Category::parse("B/C/D")},
                               {"D/E/F", Category::parse("D/E/F")}};
  RulePolicy capped;
  capped.max_degree = 2;
  Grammar restricted(lex, capped, target);
  CHECK(count_trees(parse_exhaustive(sentence, restricted), 0, 3, target) == 1);
  CHECK(count_trees(parse_nf(sentence, restricted), 0, 3, target) == 0);

  // The canonicalizing parser still finds the one reading, keyed by the
  // out-of-reach >B3 normal form.
  CanonicalChart canonical = parse_canonical(sentence, restricted);
  REQUIRE(canonical.parses().size() == 1);
  CHECK(canonical.parses()[0].nf->rule().kind == RuleKind::compose(Slash::Forward, 3));
}

TEST_CASE("derivation lists hold no duplicate triples") {
  std::vector<std::string> sentence = words("S/S S S\\S");
  Grammar g = testing::schematic_grammar(sentence, "S");
  Chart chart = parse_exhaustive(sentence, g);
  for (int width = 2; width <= 3; ++width)
    for (int start = 0; start + width <= 3; ++start)
      for (const Chart::Item* item : chart.cell(start, start + width))
        for (std::size_t i = 0; i < item->derivations.size(); ++i)
          for (std::size_t j = i + 1; j < item->derivations.size(); ++j) {
            const Chart::Derivation& a = item->derivations[i];
            const Chart::Derivation& b = item->derivations[j];
            CHECK_FALSE((a.rule == b.rule && a.left == b.left && a.right == b.right));
          }
}
