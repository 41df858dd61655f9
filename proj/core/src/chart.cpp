#include "ccgnf/chart.hpp"

#include <unordered_map>

namespace ccgnf {

namespace {

std::string join(const std::vector<std::string>& words) {
  std::string out;
  for (const std::string& w : words) {
    if (!out.empty()) out += ", ";
    out += w;
  }
  return out;
}

}  // namespace

UnknownWordError::UnknownWordError(std::vector<std::string> missing)
    : std::runtime_error("unknown word(s): " + join(missing)),
      words(std::move(missing)) {}

const std::vector<const Chart::Item*>& Chart::cell(int begin, int end) const {
  if (begin < 0 || end > width_ || begin >= end)
    throw std::out_of_range("chart cell out of range");
  return cells_[static_cast<std::size_t>(begin) * (width_ + 1) + end];
}

class ChartBuilder {
 public:
  ChartBuilder(const std::vector<std::string>& words, const Grammar& g, bool nf_mode)
      : grammar_(g), nf_mode_(nf_mode) {
    if (words.empty()) throw std::invalid_argument("empty sentence");
    chart_.width_ = static_cast<int>(words.size());
    chart_.words_ = words;
    chart_.cells_.resize(words.size() * (words.size() + 1));
  }

  Chart build() {
    const int n = chart_.width_;
    std::vector<std::string> missing;
    for (const std::string& w : chart_.words_)
      if (!grammar_.has_word(w)) missing.push_back(w);
    if (!missing.empty()) throw UnknownWordError(std::move(missing));

    for (int i = 0; i < n; ++i)
      for (Cat c : grammar_.categories_of(chart_.words_[i])) {
        Chart::Item* item = get_or_add(i, i + 1, c, Tag::ot());
        item->lexical = true;
        item->word = chart_.words_[i];
      }

    const RulePolicy& policy = grammar_.policy();
    for (int width = 2; width <= n; ++width)
      for (int start = 0; start + width <= n; ++start) {
        int end = start + width;
        for (int mid = start + 1; mid < end; ++mid)
          for (const Chart::Item* li : chart_.cell(start, mid))
            for (const Chart::Item* ri : chart_.cell(mid, end))
              for (const RuleInstance& rule :
                   enumerate_rules(li->category, ri->category, policy.max_degree,
                                   policy.enable_substitution)) {
                if (!rule_allowed(grammar_, rule)) continue;
                if (nf_mode_ && !nf_admissible(rule.kind, li->tag, ri->tag))
                  continue;
                Chart::Item* item =
                    get_or_add(start, end, rule.output, output_tag(rule.kind));
                item->derivations.push_back(Chart::Derivation{rule, li, ri});
              }
      }
    return std::move(chart_);
  }

 private:
  struct Key {
    std::size_t cell;
    Cat category;
    Tag tag;
    friend bool operator==(const Key&, const Key&) = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const {
      std::size_t h = std::hash<std::size_t>()(k.cell);
      h = h * 1000003u ^ std::hash<const void*>()(k.category);
      h = h * 1000003u ^ (static_cast<std::size_t>(k.tag.kind) * 31u +
                          static_cast<std::size_t>(k.tag.degree));
      return h;
    }
  };

  Chart::Item* get_or_add(int begin, int end, Cat category, Tag tag) {
    std::size_t cell = static_cast<std::size_t>(begin) * (chart_.width_ + 1) + end;
    auto [it, fresh] = index_.try_emplace(Key{cell, category, tag}, nullptr);
    if (fresh) {
      Chart::Item item;
      item.category = category;
      item.tag = tag;
      item.begin = begin;
      item.end = end;
      chart_.storage_.push_back(std::move(item));
      it->second = &chart_.storage_.back();
      chart_.cells_[cell].push_back(it->second);
    }
    return it->second;
  }

  const Grammar& grammar_;
  bool nf_mode_;
  Chart chart_;
  std::unordered_map<Key, Chart::Item*, KeyHash> index_;
};

Chart parse_exhaustive(const std::vector<std::string>& words, const Grammar& g) {
  return ChartBuilder(words, g, /*nf_mode=*/false).build();
}

Chart parse_nf(const std::vector<std::string>& words, const Grammar& g) {
  return ChartBuilder(words, g, /*nf_mode=*/true).build();
}

EnumerationCapExceeded::EnumerationCapExceeded(std::uint64_t count, std::uint64_t cap)
    : std::runtime_error(count > 0
                             ? "enumeration cap exceeded: " + std::to_string(count) +
                                   " trees > cap " + std::to_string(cap)
                             : "enumeration cap exceeded: more than " +
                                   std::to_string(cap) + " trees"),
      count(count),
      cap(cap) {}

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("parse count overflow");
  return out;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("parse count overflow");
  return out;
}

std::uint64_t count_item(const Chart::Item* item,
                         std::unordered_map<const Chart::Item*, std::uint64_t>& memo) {
  auto it = memo.find(item);
  if (it != memo.end()) return it->second;
  std::uint64_t total = 0;
  if (item->lexical) {
    total = 1;
  } else {
    for (const Chart::Derivation& d : item->derivations)
      total = checked_add(total, checked_mul(count_item(d.left, memo),
                                             count_item(d.right, memo)));
  }
  memo.emplace(item, total);
  return total;
}

const std::vector<TreePtr>& enumerate_item(
    const Chart::Item* item,
    std::unordered_map<const Chart::Item*, std::vector<TreePtr>>& memo) {
  auto it = memo.find(item);
  if (it != memo.end()) return it->second;
  std::vector<TreePtr> trees;
  if (item->lexical) {
    trees.push_back(ParseTree::leaf(item->begin, item->word, item->category));
  } else {
    for (const Chart::Derivation& d : item->derivations) {
      const std::vector<TreePtr>& lefts = enumerate_item(d.left, memo);
      const std::vector<TreePtr>& rights = enumerate_item(d.right, memo);
      for (const TreePtr& lt : lefts)
        for (const TreePtr& rt : rights)
          trees.push_back(ParseTree::node(d.rule, lt, rt));
    }
  }
  return memo.emplace(item, std::move(trees)).first->second;
}

}  // namespace

std::uint64_t count_trees(const Chart& chart, int begin, int end, Cat category) {
  std::unordered_map<const Chart::Item*, std::uint64_t> memo;
  std::uint64_t total = 0;
  for (const Chart::Item* item : chart.cell(begin, end))
    if (item->category == category) total = checked_add(total, count_item(item, memo));
  return total;
}

std::vector<TreePtr> enumerate_trees(const Chart& chart, int begin, int end,
                                     Cat category, std::uint64_t cap) {
  if (cap == 0) throw std::invalid_argument("cap must be positive");
  std::uint64_t total;
  try {
    total = count_trees(chart, begin, end, category);
  } catch (const std::overflow_error&) {
    throw EnumerationCapExceeded(0, cap);
  }
  if (total > cap) throw EnumerationCapExceeded(total, cap);

  std::unordered_map<const Chart::Item*, std::vector<TreePtr>> memo;
  std::vector<TreePtr> out;
  out.reserve(static_cast<std::size_t>(total));
  for (const Chart::Item* item : chart.cell(begin, end)) {
    if (item->category != category) continue;
    const std::vector<TreePtr>& trees = enumerate_item(item, memo);
    out.insert(out.end(), trees.begin(), trees.end());
  }
  return out;
}

}  // namespace ccgnf
