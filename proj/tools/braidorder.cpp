// Command-line front end: normal forms, codes, comparisons, signs,
// ordinals, cutting-sequence actions, and a normal-form benchmark.
//
// Exit codes: 0 success, 1 domain error (including oracle mismatches),
// 2 input parse error, 3 exhausted enumeration budget.

#include <chrono>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "braidorder/braid.hpp"
#include "braidorder/brute.hpp"
#include "braidorder/cnormal.hpp"
#include "braidorder/code.hpp"
#include "braidorder/cutting.hpp"
#include "braidorder/order.hpp"
#include "braidorder/ordinal.hpp"

namespace {

using namespace braidorder;

/// Malformed user input (exit code 2), as opposed to domain errors (1).
struct InputParseError : Error {
  using Error::Error;
};

/// Runs an input-parsing callable, retagging failures as InputParseError.
template <typename Fn>
auto parsing(Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const std::exception& e) {
    throw InputParseError(e.what());
  }
}

/// Reads the next line of stdin when the positional word is "-".
std::string resolve_input(const std::string& text) {
  if (text != "-") return text;
  std::string line;
  if (!std::getline(std::cin, line)) {
    throw InputParseError("no input on stdin");
  }
  return line;
}

struct CommonOptions {
  int strands = 0;
  std::string arrangement_text;
  std::string conjugator_text;
  bool check_oracle = false;
  bool json = false;
};

void add_common(CLI::App* cmd, CommonOptions& opts, bool with_oracle = true) {
  cmd->add_option("-n,--strands", opts.strands, "strand count")->required();
  cmd->add_option("-k,--arrangement", opts.arrangement_text,
                  "comma-separated arrangement (default trivial)");
  cmd->add_option("-P,--conjugator", opts.conjugator_text,
                  "positive conjugating word");
  if (with_oracle) {
    cmd->add_flag("--check-oracle", opts.check_oracle,
                  "cross-check against the brute-force oracle");
  }
  cmd->add_flag("--json", opts.json, "emit JSON");
}

OrderingSpec ordering_of(const CommonOptions& opts) {
  return parsing([&] {
    Arrangement arrangement =
        opts.arrangement_text.empty()
            ? Arrangement::trivial(opts.strands)
            : parse_arrangement(opts.arrangement_text, opts.strands);
    if (opts.conjugator_text.empty()) {
      return OrderingSpec::normal(std::move(arrangement));
    }
    return OrderingSpec::conjugated(
        std::move(arrangement),
        parse_positive_word(opts.conjugator_text, opts.strands));
  });
}

/// Codes as nested arrays: a leaf is its count; a composite lists its
/// displayed slots (all-zero collapses to [0]); slots of 3-strand codes
/// are bare integers.
nlohmann::json code_to_json(const Code& code) {
  if (code.is_leaf()) return code.leaf_value();
  nlohmann::json out = nlohmann::json::array();
  if (code.is_zero()) {
    out.push_back(0);
    return out;
  }
  int top = code.entries().empty() ? 0
                                   : std::max(code.entries().front().first, 0);
  for (int position = top; position >= -(code.strands() - 2); --position) {
    Code sub = code.at(position);
    if (code.strands() == 3) {
      out.push_back(sub.leaf_value());
    } else {
      out.push_back(code_to_json(sub));
    }
  }
  return out;
}

void verify_against_oracle(const PositiveBraidWord& positive_core,
                           const Arrangement& arrangement,
                           const CNormalResult& produced) {
  BruteOracle oracle;
  CNormalResult brute = oracle.brute_cnormal(positive_core, arrangement);
  if (!(brute.word == produced.word) || !(brute.code == produced.code)) {
    throw Error("oracle mismatch: normal form disagrees with brute force");
  }
}

int run(int argc, char** argv) {
  CLI::App app{"finite Thurston-type orderings of braid groups"};
  app.require_subcommand(1);

  CommonOptions opts;
  std::string word_text;
  std::string second_word_text;
  std::string start_sequence_text;
  std::string bench_lengths = "200,400,800,1600";
  unsigned bench_seed = 1;

  CLI::App* normal_form = app.add_subcommand(
      "normal-form", "canonical normal-form word and code");
  add_common(normal_form, opts);
  normal_form->add_option("word", word_text, "positive braid word")
      ->required();

  CLI::App* code_cmd = app.add_subcommand("code", "code of the normal form");
  add_common(code_cmd, opts);
  code_cmd->add_option("word", word_text, "positive braid word")->required();

  CLI::App* compare_cmd =
      app.add_subcommand("compare", "order two braid words");
  add_common(compare_cmd, opts, false);
  compare_cmd->add_option("left", word_text, "signed braid word")->required();
  compare_cmd->add_option("right", second_word_text, "signed braid word")
      ->required();

  CLI::App* sign_cmd =
      app.add_subcommand("sign", "order a braid word against the identity");
  add_common(sign_cmd, opts, false);
  sign_cmd->add_option("word", word_text, "signed braid word")->required();

  CLI::App* ordinal_cmd =
      app.add_subcommand("ordinal", "ordinal rank of the normal form");
  add_common(ordinal_cmd, opts);
  ordinal_cmd->add_option("word", word_text, "positive braid word")
      ->required();

  CLI::App* cutseq_cmd = app.add_subcommand(
      "cutseq", "act on a cutting sequence by a positive word");
  add_common(cutseq_cmd, opts, false);
  cutseq_cmd->add_option("word", word_text, "positive braid word")
      ->required();
  cutseq_cmd->add_option("--start", start_sequence_text,
                         "starting sequence (default: the arrangement's "
                         "initial arc)");

  CLI::App* bench_cmd = app.add_subcommand(
      "bench", "time normal forms over random words, CSV output");
  bench_cmd->add_option("-n,--strands", opts.strands, "strand count")
      ->default_val(8);
  bench_cmd->add_option("--lengths", bench_lengths,
                        "comma-separated word lengths");
  bench_cmd->add_option("--seed", bench_seed, "random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (bench_cmd->parsed()) {
    std::vector<int> lengths = parsing([&] {
      std::vector<int> out;
      std::istringstream in(bench_lengths);
      std::string token;
      while (std::getline(in, token, ',')) {
        std::size_t used = 0;
        int value = std::stoi(token, &used);
        if (used != token.size() || value <= 0) {
          throw Error("bad length: " + token);
        }
        out.push_back(value);
      }
      if (out.empty()) throw Error("no lengths given");
      return out;
    });
    std::mt19937 rng(bench_seed);
    std::uniform_int_distribution<int> letter(1, opts.strands - 1);
    std::cout << "length,seconds\n";
    for (int length : lengths) {
      std::vector<int> letters;
      letters.reserve(static_cast<std::size_t>(length));
      for (int i = 0; i < length; ++i) letters.push_back(letter(rng));
      PositiveBraidWord word(opts.strands, letters);
      Arrangement arrangement = Arrangement::trivial(opts.strands);
      auto begin = std::chrono::steady_clock::now();
      CNormalResult result = cnormal_positive(word, arrangement);
      auto end = std::chrono::steady_clock::now();
      (void)result;
      std::cout << length << ","
                << std::chrono::duration<double>(end - begin).count() << "\n";
    }
    return 0;
  }

  // Everything below parses words first (exit 2 on malformed input), then
  // computes (exit 1/3 on domain/budget errors).
  OrderingSpec spec = ordering_of(opts);

  if (compare_cmd->parsed() || sign_cmd->parsed()) {
    BraidWord left =
        parsing([&] { return parse_word(resolve_input(word_text), opts.strands); });
    if (compare_cmd->parsed()) {
      BraidWord right = parsing([&] {
        return parse_word(resolve_input(second_word_text), opts.strands);
      });
      ComparisonResult r = compare(left, right, spec);
      std::string text = r == ComparisonResult::Less      ? "LESS"
                         : r == ComparisonResult::Greater ? "GREATER"
                                                          : "EQUAL";
      if (opts.json) {
        std::cout << nlohmann::json{{"result", text}}.dump() << "\n";
      } else {
        std::cout << text << "\n";
      }
    } else {
      Sign s = sign(left, spec);
      std::string text = s == Sign::Negative   ? "NEGATIVE"
                         : s == Sign::Positive ? "POSITIVE"
                                               : "ZERO";
      if (opts.json) {
        std::cout << nlohmann::json{{"sign", text}}.dump() << "\n";
      } else {
        std::cout << text << "\n";
      }
    }
    return 0;
  }

  if (cutseq_cmd->parsed()) {
    PositiveBraidWord word = parsing([&] {
      return parse_positive_word(resolve_input(word_text), opts.strands);
    });
    CuttingSequence start = parsing([&] {
      return start_sequence_text.empty()
                 ? gamma1(spec.arrangement)
                 : parse_cutting_sequence(start_sequence_text, opts.strands);
    });
    CuttingSequence result = act(word, start);
    if (opts.json) {
      std::cout << nlohmann::json{{"sequence", to_string(result)}}.dump()
                << "\n";
    } else {
      std::cout << to_string(result) << "\n";
    }
    return 0;
  }

  // normal-form, code, ordinal: all normalise a positive word first.
  PositiveBraidWord word = parsing([&] {
    return parse_positive_word(resolve_input(word_text), opts.strands);
  });
  PositiveBraidWord positive_core = spec.conjugator.empty()
                                        ? word
                                        : concat(word, spec.conjugator);
  CNormalResult produced = cnormal_positive(positive_core, spec.arrangement);
  if (opts.check_oracle) {
    verify_against_oracle(positive_core, spec.arrangement, produced);
  }
  NormalForm form = cnormal(word, spec);

  if (normal_form->parsed()) {
    if (opts.json) {
      nlohmann::json out{{"word", to_string(form.word)},
                         {"code", code_to_json(form.code)},
                         {"ordinal", to_string(code_to_ordinal(form.code))}};
      std::cout << out.dump() << "\n";
    } else {
      std::cout << to_string(form.word) << "\n"
                << to_string(form.code) << "\n";
    }
  } else if (code_cmd->parsed()) {
    if (opts.json) {
      std::cout << nlohmann::json{{"code", code_to_json(form.code)}}.dump()
                << "\n";
    } else {
      std::cout << to_string(form.code) << "\n";
    }
  } else {
    Ordinal rank = code_to_ordinal(form.code);
    if (opts.json) {
      std::cout << nlohmann::json{{"ordinal", to_string(rank)}}.dump()
                << "\n";
    } else {
      std::cout << to_string(rank) << "\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const InputParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const braidorder::BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 3;
  } catch (const braidorder::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
