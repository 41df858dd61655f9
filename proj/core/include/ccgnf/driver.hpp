#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "ccgnf/canonical.hpp"

namespace ccgnf {

// One CLI invocation. Exit codes: 0 when at least one target-category parse
// exists, 1 when none (or a word is unknown), 2 on usage/config errors.
struct RunConfig {
  enum class Mode { All, Nf, Canonical };

  std::string lexicon_path;  // empty: no lexicon file
  std::string policy_path;   // empty: pure-CCG preset
  Mode mode = Mode::All;
  bool show_trees = false;
  bool show_recipes = false;
  bool show_counts = true;
  bool show_classes = false;
  std::string target;  // empty: policy file's target, else S
  std::uint64_t cap = 1'000'000;
  Preference prefer = Preference::FirstFound;
  bool verbose = false;
};

int run(const RunConfig& config, const std::vector<std::string>& sentence,
        std::ostream& out, std::ostream& err);

// Built-in scenarios with embedded lexicons; prints an expected-vs-actual
// table and returns 0 iff every row matches. `n` parameterizes the
// "modifiers" demo (1..4) and is ignored by the others.
int run_demo(const std::string& name, int n, std::ostream& out, std::ostream& err);

std::vector<std::string> demo_names();

}  // namespace ccgnf
