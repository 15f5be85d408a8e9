// Line-delimited corpus files: one JSON object per line with fields
// name/poly/vars/expected, so failures are attributable by line number.
// Entries may be evaluated concurrently; reports are buffered per entry and
// emitted in file order.
#ifndef GERM_CORPUS_HPP
#define GERM_CORPUS_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "germ/classifier.hpp"
#include "germ/germ.hpp"

namespace germ {

struct CorpusExpectation {
  std::optional<Colength> mu;
  std::optional<Colength> tau;
  std::optional<unsigned> mult;
  std::optional<Int> newton;
  std::optional<std::string> verdict;
};

struct CorpusEntry {
  std::string name;
  std::string poly;
  std::optional<VarSet> vars;
  CorpusExpectation expected;
  std::size_t line = 0;
};

// Throws ParseError (with line number in the message) on malformed input.
// Blank lines and lines starting with '#' are skipped.
std::vector<CorpusEntry> load_corpus(const std::string& path);
std::vector<CorpusEntry> parse_corpus(const std::string& text);

enum class EntryStatus { Ok, Mismatch, GuardError, InputError };

struct EntryOutcome {
  std::string name;
  std::size_t line = 0;
  EntryStatus status = EntryStatus::Ok;
  std::vector<std::string> diffs;  // computed-vs-expected, one per field
  std::string summary;             // one rendered report line
};

struct CorpusResult {
  std::vector<EntryOutcome> entries;  // in file order
  std::size_t ok = 0;
  std::size_t mismatched = 0;
  std::size_t guard_errors = 0;
  std::size_t input_errors = 0;

  bool all_ok() const { return mismatched + guard_errors + input_errors == 0; }
};

CorpusResult run_corpus(const std::vector<CorpusEntry>& entries,
                        const Limits& limits = {}, bool parallel = true);

}  // namespace germ

#endif
