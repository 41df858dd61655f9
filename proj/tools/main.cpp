#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ccgnf/driver.hpp"

namespace {

bool parse_show(const std::string& text, ccgnf::RunConfig& config) {
  config.show_trees = config.show_recipes = config.show_counts =
      config.show_classes = false;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    std::string part = text.substr(
        start, comma == std::string::npos ? std::string::npos : comma - start);
    if (part == "trees") config.show_trees = true;
    else if (part == "recipes") config.show_recipes = true;
    else if (part == "counts") config.show_counts = true;
    else if (part == "classes") config.show_classes = true;
    else if (!part.empty()) return false;
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "CCG parser without spurious ambiguity: exhaustive, normal-form, and "
      "canonicalizing chart parsing with lambda-term recipes"};

  ccgnf::RunConfig config;
  std::string mode = "all";
  std::string show = "counts";
  std::string prefer = "first";
  std::string demo;
  int demo_n = 1;
  std::vector<std::string> sentence;

  app.add_option("--lexicon", config.lexicon_path,
                 "lexicon file (word<TAB>category per line, # comments)");
  app.add_option("--policy", config.policy_path,
                 "rule policy file (key=value; default: pure-CCG preset)");
  app.add_option("--mode", mode, "all | nf | canonical")
      ->capture_default_str();
  app.add_option("--show", show,
                 "comma list of sections: trees,recipes,counts,classes")
      ->capture_default_str();
  app.add_option("--target", config.target,
                 "goal category (default: policy target, else S)");
  app.add_option("--cap", config.cap, "enumeration cap")->capture_default_str();
  app.add_option("--prefer", prefer,
                 "canonical-mode representative choice: first | left | standard")
      ->capture_default_str();
  app.add_flag("--verbose", config.verbose,
               "exact tag degrees; canonical mode also dumps chart cells");
  app.add_option("--demo", demo, "run a built-in scenario (see --demo help)");
  app.add_option("--n", demo_n, "size parameter for the modifiers demo (1-4)")
      ->capture_default_str();
  app.add_option("sentence", sentence, "whitespace-separated words");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (mode == "all") config.mode = ccgnf::RunConfig::Mode::All;
  else if (mode == "nf") config.mode = ccgnf::RunConfig::Mode::Nf;
  else if (mode == "canonical") config.mode = ccgnf::RunConfig::Mode::Canonical;
  else {
    std::cerr << "error: bad --mode '" << mode << "'\n";
    return 2;
  }

  if (!parse_show(show, config)) {
    std::cerr << "error: bad --show '" << show << "'\n";
    return 2;
  }

  if (prefer == "first") config.prefer = ccgnf::Preference::FirstFound;
  else if (prefer == "left") config.prefer = ccgnf::Preference::MoreLeftBranching;
  else if (prefer == "standard") config.prefer = ccgnf::Preference::FewerNonstandard;
  else {
    std::cerr << "error: bad --prefer '" << prefer << "'\n";
    return 2;
  }

  if (!demo.empty()) {
    if (demo == "help") {
      std::cout << "demos:";
      for (const std::string& name : ccgnf::demo_names()) std::cout << ' ' << name;
      std::cout << '\n';
      return 0;
    }
    if (!sentence.empty()) {
      std::cerr << "error: --demo takes no sentence\n";
      return 2;
    }
    return ccgnf::run_demo(demo, demo_n, std::cout, std::cerr);
  }

  // Sentences are whitespace-tokenized, so quoted arguments work too.
  std::vector<std::string> words;
  for (const std::string& arg : sentence) {
    std::istringstream in(arg);
    std::string w;
    while (in >> w) words.push_back(w);
  }
  if (words.empty()) {
    std::cerr << "error: no sentence given (try --help)\n";
    return 2;
  }
  return ccgnf::run(config, words, std::cout, std::cerr);
}
