// Command-line surface: parse a germ, compute its invariants, classify it,
// sample deformations, or run a corpus file. Output is text by default or a
// single JSON object with --format structured; all math fields are exact
// (integers bare, rationals as "p/q" strings, "infinite" as a literal token).
// Timing goes to stderr so stdout is byte-deterministic.
//
// Exit codes: 0 success, 1 corpus mismatch, 2 usage/parse error,
// 3 resource guard exceeded, 4 internal inconsistency (a bug, never data).
#include <chrono>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "germ/classifier.hpp"
#include "germ/corpus.hpp"
#include "germ/newton.hpp"
#include "germ/parser.hpp"
#include "json.hpp"

namespace {

using germ::Colength;
using germ::Int;
using germ::Rat;
using json = nlohmann::ordered_json;

struct CommonOpts {
  std::string vars;
  std::string format = "text";
  std::uint64_t max_pairs = germ::Limits{}.max_pairs;
  std::uint64_t max_steps = germ::Limits{}.max_reduction_steps;
  unsigned max_degree = germ::Limits{}.max_degree;
  unsigned timeout = 0;

  germ::Limits limits() const {
    return germ::Limits{max_pairs, max_steps, max_degree, timeout};
  }
  bool structured() const { return format == "structured"; }
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--vars", opts.vars,
                  "comma-separated variable list (default: inferred, sorted)");
  cmd->add_option("--format", opts.format, "output format")
      ->check(CLI::IsMember({"text", "structured"}));
  cmd->add_option("--max-pairs", opts.max_pairs, "pair-count resource guard");
  cmd->add_option("--max-steps", opts.max_steps,
                  "reduction-step resource guard");
  cmd->add_option("--max-degree", opts.max_degree,
                  "total-degree resource guard");
  cmd->add_option("--timeout", opts.timeout, "wall-clock guard in seconds");
}

germ::Germ parse_input(const std::string& poly, const CommonOpts& opts) {
  std::optional<germ::VarSet> vars;
  if (!opts.vars.empty()) vars = germ::parse_varlist(opts.vars);
  return germ::parse_germ(poly, vars);
}

// "w1,...,wn:d" with rational entries.
germ::WeightSystem parse_weights(const std::string& text) {
  std::size_t colon = text.find(':');
  if (colon == std::string::npos)
    throw germ::ParseError("weights must look like \"w1,...,wn:d\"", 0);
  auto parse_rat = [](const std::string& s) {
    if (s.empty()) throw germ::ParseError("empty weight", 0);
    Rat q;
    if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
      throw germ::ParseError("bad rational '" + s + "' in weights", 0);
    q.canonicalize();
    return q;
  };
  germ::WeightSystem ws;
  std::string head = text.substr(0, colon);
  std::size_t start = 0;
  while (true) {
    std::size_t comma = head.find(',', start);
    ws.weights.push_back(parse_rat(
        head.substr(start, comma == std::string::npos ? comma : comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  ws.degree = parse_rat(text.substr(colon + 1));
  return ws;
}

json json_colength(const Colength& c) {
  if (!c.finite) return json("infinite");
  return json(c.value);
}

json json_int(const Int& v) {
  if (v.fits_slong_p()) return json(v.get_si());
  return json(v.get_str());
}

json json_rat(const Rat& q) { return json(q.get_str()); }

json json_weights(const germ::WeightSystem& ws) {
  json j;
  json w = json::array();
  for (const Rat& x : ws.weights) w.push_back(json_rat(x));
  j["weights"] = w;
  j["degree"] = json_rat(ws.degree);
  return j;
}

json json_report(const germ::Germ& f, const germ::FullReport& rep) {
  json j;
  j["input"]["poly"] = germ::to_string(f);
  j["input"]["vars"] = f.vars().names;
  json inv;
  inv["multiplicity"] = rep.bounds.m;
  inv["mu"] = json_colength(rep.bounds.mu);
  inv["tau"] = json_colength(rep.bounds.tau);
  inv["bound"] = json_int(rep.bounds.bound);
  inv["equality"] = rep.bounds.equality;
  inv["yau_zuo"] = rep.bounds.yau_zuo;
  inv["convenient"] = rep.convenient;
  if (rep.newton) inv["newton_number"] = json_int(*rep.newton);
  switch (rep.weight_recovery.kind) {
    case germ::WeightRecoveryKind::Unique:
      inv["weights"] = json_weights(*rep.weight_recovery.weights);
      break;
    case germ::WeightRecoveryKind::Underdetermined:
      inv["weights"] = "underdetermined";
      break;
    case germ::WeightRecoveryKind::None:
      inv["weights"] = "none";
      break;
  }
  j["invariants"] = inv;
  j["resource_guard"] = "ok";  // guard trips abort with exit code 3 instead
  j["verdict"] = germ::to_string(rep.verdict.kind);
  if (rep.verdict.evidence) {
    const auto& ev = *rep.verdict.evidence;
    if (ev.kind == germ::HomogeneityEvidence::Kind::FullRankQuadric) {
      j["evidence"]["kind"] = "FullRankQuadric";
      j["evidence"]["rank"] = ev.rank;
    } else {
      j["evidence"]["kind"] = "AllWeightsEqual";
      json w = json::array();
      for (const Int& x : ev.weights->weights) w.push_back(json_int(x));
      j["evidence"]["weights"] = w;
      j["evidence"]["degree"] = json_int(ev.weights->degree);
    }
  }
  j["trail"] = rep.verdict.trail;
  return j;
}

void print_text_report(const germ::Germ& f, const germ::FullReport& rep,
                       bool with_trail) {
  std::cout << "poly: " << germ::to_string(f) << "\n";
  std::cout << "vars:";
  for (const auto& n : f.vars().names) std::cout << ' ' << n;
  std::cout << "\n";
  std::cout << "multiplicity: " << rep.bounds.m << "\n";
  std::cout << "mu: " << germ::to_string(rep.bounds.mu) << "\n";
  std::cout << "tau: " << germ::to_string(rep.bounds.tau) << "\n";
  std::cout << "bound: " << rep.bounds.bound.get_str() << "\n";
  std::cout << "equality: " << (rep.bounds.equality ? "true" : "false") << "\n";
  std::cout << "yau_zuo: " << (rep.bounds.yau_zuo ? "true" : "false") << "\n";
  if (rep.newton)
    std::cout << "newton_number: " << rep.newton->get_str() << "\n";
  else
    std::cout << "newton_number: not computed ("
              << (rep.convenient ? "dimension out of range" : "not convenient")
              << ")\n";
  switch (rep.weight_recovery.kind) {
    case germ::WeightRecoveryKind::Unique:
      std::cout << "weights: " << germ::to_string(*rep.weight_recovery.weights)
                << "\n";
      break;
    case germ::WeightRecoveryKind::Underdetermined:
      std::cout << "weights: underdetermined\n";
      break;
    case germ::WeightRecoveryKind::None:
      std::cout << "weights: none\n";
      break;
  }
  std::cout << "verdict: " << germ::to_string(rep.verdict.kind) << "\n";
  if (with_trail)
    for (const std::string& step : rep.verdict.trail)
      std::cout << "  - " << step << "\n";
}

int run_report_command(const std::string& poly, const CommonOpts& opts,
                       const std::optional<germ::WeightSystem>& declared,
                       bool with_trail) {
  germ::Germ f = parse_input(poly, opts);
  germ::FullReport rep = germ::full_report(f, declared, opts.limits());
  if (opts.structured())
    std::cout << json_report(f, rep).dump(2) << "\n";
  else
    print_text_report(f, rep, with_trail);
  return 0;
}

int run_deform(const std::string& poly, const CommonOpts& opts,
               unsigned samples, std::uint64_t seed) {
  germ::Germ f = parse_input(poly, opts);
  germ::SemicontinuityReport rep =
      germ::verify_semicontinuity(f, samples, seed, opts.limits());
  if (opts.structured()) {
    json j;
    j["input"]["poly"] = germ::to_string(f);
    j["input"]["vars"] = f.vars().names;
    j["mu"] = json_colength(rep.mu);
    j["multiplicity"] = rep.m;
    j["seed"] = seed;
    json rows = json::array();
    for (const auto& s : rep.samples) {
      json row;
      json t = json::array();
      for (const Rat& q : s.t) t.push_back(json_rat(q));
      row["t"] = t;
      row["mu_t"] = json_colength(s.mu_t);
      row["nu_t"] = json_int(s.nu_t);
      row["chain_ok"] = s.chain_ok;
      rows.push_back(row);
    }
    j["samples"] = rows;
    j["all_ok"] = rep.all_ok;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "poly: " << germ::to_string(f) << "\n";
    std::cout << "mu: " << germ::to_string(rep.mu) << "\n";
    std::cout << "multiplicity: " << rep.m << "\n";
    for (std::size_t i = 0; i < rep.samples.size(); ++i) {
      const auto& s = rep.samples[i];
      std::cout << "sample " << i << ": t = (";
      for (std::size_t k = 0; k < s.t.size(); ++k) {
        if (k) std::cout << ',';
        std::cout << s.t[k].get_str();
      }
      std::cout << "), mu_t = " << germ::to_string(s.mu_t)
                << ", nu_t = " << s.nu_t.get_str()
                << ", chain = " << (s.chain_ok ? "ok" : "VIOLATION") << "\n";
    }
    std::cout << "all_ok: " << (rep.all_ok ? "true" : "false") << "\n";
  }
  return rep.all_ok ? 0 : 1;
}

int run_corpus_cmd(const std::string& path, const CommonOpts& opts,
                   bool serial) {
  std::vector<germ::CorpusEntry> entries = germ::load_corpus(path);
  germ::CorpusResult result =
      germ::run_corpus(entries, opts.limits(), !serial);
  if (opts.structured()) {
    json j;
    json rows = json::array();
    for (const auto& out : result.entries) {
      json row;
      row["name"] = out.name;
      row["line"] = out.line;
      switch (out.status) {
        case germ::EntryStatus::Ok: row["status"] = "ok"; break;
        case germ::EntryStatus::Mismatch: row["status"] = "mismatch"; break;
        case germ::EntryStatus::GuardError: row["status"] = "guard"; break;
        case germ::EntryStatus::InputError: row["status"] = "error"; break;
      }
      row["summary"] = out.summary;
      if (!out.diffs.empty()) row["diffs"] = out.diffs;
      rows.push_back(row);
    }
    j["entries"] = rows;
    j["total"] = result.entries.size();
    j["ok"] = result.ok;
    j["mismatched"] = result.mismatched;
    j["guard_errors"] = result.guard_errors;
    j["errors"] = result.input_errors;
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& out : result.entries) {
      const char* tag = "ok";
      if (out.status == germ::EntryStatus::Mismatch) tag = "MISMATCH";
      if (out.status == germ::EntryStatus::GuardError) tag = "GUARD";
      if (out.status == germ::EntryStatus::InputError) tag = "ERROR";
      std::cout << "[" << tag << "] " << out.summary << "\n";
      for (const std::string& d : out.diffs) std::cout << "    " << d << "\n";
    }
    std::cout << "corpus: " << result.entries.size() << " entries, "
              << result.ok << " ok, " << result.mismatched << " mismatched, "
              << result.guard_errors << " guard, " << result.input_errors
              << " errors\n";
  }
  if (result.mismatched > 0 || result.input_errors > 0) return 1;
  if (result.guard_errors > 0) return 3;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"invariants and classification of isolated hypersurface "
               "singularity germs"};
  app.require_subcommand(1);

  CommonOpts inv_opts, cls_opts, def_opts, cor_opts;
  std::string inv_poly, cls_poly, def_poly, cor_path, cls_weights;
  unsigned samples = 5;
  std::uint64_t seed = 1;
  bool serial = false;

  CLI::App* inv = app.add_subcommand(
      "invariants", "compute mu, tau, multiplicity, bound, newton number");
  inv->add_option("poly", inv_poly, "germ expression")->required();
  add_common(inv, inv_opts);

  CLI::App* cls = app.add_subcommand(
      "classify", "full equality-case classification with evidence");
  cls->add_option("poly", cls_poly, "germ expression")->required();
  cls->add_option("--weights", cls_weights,
                  "declared weight system \"w1,...,wn:d\"");
  add_common(cls, cls_opts);

  CLI::App* def = app.add_subcommand(
      "deform", "seeded semicontinuity sampling along the axis-power family");
  def->add_option("poly", def_poly, "germ expression")->required();
  def->add_option("--samples", samples, "number of parameter samples");
  def->add_option("--seed", seed, "deterministic sampling seed");
  add_common(def, def_opts);

  CLI::App* cor = app.add_subcommand("corpus", "run a line-delimited corpus");
  cor->add_option("path", cor_path, "corpus file (one JSON object per line)")
      ->required();
  cor->add_flag("--serial", serial, "disable parallel entry evaluation");
  add_common(cor, cor_opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  auto started = std::chrono::steady_clock::now();
  int code = 0;
  try {
    if (inv->parsed()) {
      code = run_report_command(inv_poly, inv_opts, std::nullopt, false);
    } else if (cls->parsed()) {
      std::optional<germ::WeightSystem> declared;
      if (!cls_weights.empty()) declared = parse_weights(cls_weights);
      code = run_report_command(cls_poly, cls_opts, declared, true);
    } else if (def->parsed()) {
      code = run_deform(def_poly, def_opts, samples, seed);
    } else if (cor->parsed()) {
      code = run_corpus_cmd(cor_path, cor_opts, serial);
    }
  } catch (const germ::ResourceLimitError& e) {
    std::cerr << "resource guard: " << e.what() << "\n";
    return 3;
  } catch (const germ::InternalInconsistencyError& e) {
    std::cerr << "internal inconsistency: " << e.what() << "\n";
    return 4;
  } catch (const germ::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - started);
  std::cerr << "time: " << elapsed.count() << " ms\n";
  return code;
}
