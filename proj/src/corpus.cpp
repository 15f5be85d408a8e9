#include "germ/corpus.hpp"

#include <exception>
#include <fstream>
#include <sstream>

#include "germ/parser.hpp"
#include "json.hpp"

namespace germ {

namespace {

using nlohmann::json;

Colength colength_from_json(const json& j, std::size_t line, const char* field) {
  if (j.is_string()) {
    if (j.get<std::string>() == "infinite") return Colength::infinite();
    throw ParseError("corpus line " + std::to_string(line) + ": field '" +
                         field + "' must be a non-negative integer or \"infinite\"",
                     line);
  }
  if (j.is_number_unsigned() || (j.is_number_integer() && j.get<long long>() >= 0))
    return Colength::of(j.get<std::uint64_t>());
  throw ParseError("corpus line " + std::to_string(line) + ": field '" + field +
                       "' must be a non-negative integer or \"infinite\"",
                   line);
}

const char* kVerdictNames[] = {"SmoothPoint", "NonIsolated", "StrictInequality",
                               "SemiHomogeneous", "HomogeneousEquivalent"};

}  // namespace

std::vector<CorpusEntry> parse_corpus(const std::string& text) {
  std::vector<CorpusEntry> entries;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::exception& e) {
      throw ParseError(
          "corpus line " + std::to_string(line_no) + ": " + e.what(), line_no);
    }
    try {
      CorpusEntry entry;
      entry.line = line_no;
      entry.name = j.at("name").get<std::string>();
      entry.poly = j.at("poly").get<std::string>();
      if (j.contains("vars")) {
        std::vector<std::string> names;
        for (const auto& v : j.at("vars")) names.push_back(v.get<std::string>());
        entry.vars = VarSet(std::move(names));
      }
      if (j.contains("expected")) {
        const json& e = j.at("expected");
        if (e.contains("mu"))
          entry.expected.mu = colength_from_json(e.at("mu"), line_no, "mu");
        if (e.contains("tau"))
          entry.expected.tau = colength_from_json(e.at("tau"), line_no, "tau");
        if (e.contains("mult")) entry.expected.mult = e.at("mult").get<unsigned>();
        if (e.contains("newton_number")) {
          const json& nn = e.at("newton_number");
          if (nn.is_string())
            entry.expected.newton = Int(nn.get<std::string>(), 10);
          else
            entry.expected.newton =
                Int(static_cast<long>(nn.get<long long>()));
        }
        if (e.contains("verdict")) {
          std::string v = e.at("verdict").get<std::string>();
          bool known = false;
          for (const char* name : kVerdictNames) known = known || v == name;
          if (!known)
            throw ParseError("corpus line " + std::to_string(line_no) +
                                 ": unknown verdict '" + v + "'",
                             line_no);
          entry.expected.verdict = v;
        }
      }
      entries.push_back(std::move(entry));
    } catch (const json::exception& e) {
      throw ParseError(
          "corpus line " + std::to_string(line_no) + ": " + e.what(), line_no);
    }
  }
  return entries;
}

std::vector<CorpusEntry> load_corpus(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open corpus file '" + path + "'", 0);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_corpus(buf.str());
}

namespace {

EntryOutcome evaluate_entry(const CorpusEntry& entry, const Limits& limits) {
  EntryOutcome out;
  out.name = entry.name;
  out.line = entry.line;
  try {
    Germ f = parse_germ(entry.poly, entry.vars);
    FullReport rep = full_report(f, std::nullopt, limits);

    const CorpusExpectation& exp = entry.expected;
    auto mismatch = [&](const std::string& field, const std::string& got,
                        const std::string& want) {
      out.diffs.push_back(field + ": computed " + got + ", expected " + want);
    };
    if (exp.mu && !(*exp.mu == rep.bounds.mu))
      mismatch("mu", to_string(rep.bounds.mu), to_string(*exp.mu));
    if (exp.tau && !(*exp.tau == rep.bounds.tau))
      mismatch("tau", to_string(rep.bounds.tau), to_string(*exp.tau));
    if (exp.mult && *exp.mult != rep.bounds.m)
      mismatch("mult", std::to_string(rep.bounds.m), std::to_string(*exp.mult));
    if (exp.newton) {
      if (!rep.newton)
        mismatch("newton_number", "none (not convenient)", exp.newton->get_str());
      else if (*rep.newton != *exp.newton)
        mismatch("newton_number", rep.newton->get_str(), exp.newton->get_str());
    }
    if (exp.verdict && *exp.verdict != to_string(rep.verdict.kind))
      mismatch("verdict", to_string(rep.verdict.kind), *exp.verdict);

    std::ostringstream os;
    os << entry.name << ": mu=" << to_string(rep.bounds.mu)
       << " tau=" << to_string(rep.bounds.tau) << " m=" << rep.bounds.m
       << " bound=" << rep.bounds.bound.get_str();
    if (rep.newton) os << " nu=" << rep.newton->get_str();
    os << " verdict=" << to_string(rep.verdict.kind);
    out.summary = os.str();
    out.status = out.diffs.empty() ? EntryStatus::Ok : EntryStatus::Mismatch;
  } catch (const ResourceLimitError& e) {
    out.status = EntryStatus::GuardError;
    out.summary = entry.name + ": resource guard: " + e.what();
  } catch (const InternalInconsistencyError& e) {
    out.status = EntryStatus::InputError;
    out.summary = entry.name + ": INTERNAL INCONSISTENCY: " + e.what();
  } catch (const std::exception& e) {
    out.status = EntryStatus::InputError;
    out.summary = entry.name + ": error: " + e.what();
  }
  return out;
}

}  // namespace

CorpusResult run_corpus(const std::vector<CorpusEntry>& entries,
                        const Limits& limits, bool parallel) {
  CorpusResult result;
  result.entries.resize(entries.size());

  // Entries are independent; buffered outcomes keep file order.
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1) if (parallel)
#endif
  for (long long i = 0; i < static_cast<long long>(entries.size()); ++i) {
    result.entries[static_cast<std::size_t>(i)] =
        evaluate_entry(entries[static_cast<std::size_t>(i)], limits);
  }

  for (const EntryOutcome& out : result.entries) {
    switch (out.status) {
      case EntryStatus::Ok: ++result.ok; break;
      case EntryStatus::Mismatch: ++result.mismatched; break;
      case EntryStatus::GuardError: ++result.guard_errors; break;
      case EntryStatus::InputError: ++result.input_errors; break;
    }
  }
  return result;
}

}  // namespace germ
