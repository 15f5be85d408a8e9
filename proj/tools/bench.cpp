// Serial vs OpenMP comparison for the three data-parallel kernels: newton
// numbers over coordinate subspaces, semicontinuity sampling, and corpus
// evaluation. Usage: germ_bench [corpus.jsonl]
#include <chrono>
#include <iomanip>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "germ/classifier.hpp"
#include "germ/corpus.hpp"
#include "germ/newton.hpp"
#include "germ/parser.hpp"

using namespace germ;

namespace {

double now_ms() {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

// Convenient germ: axis powers z_i^m plus extra support scattered under the
// total-degree-m simplex, so the diagram has many facets.
Germ dense_convenient_germ(std::size_t n, unsigned m, std::size_t extra,
                           std::uint64_t seed) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("z" + std::to_string(i));
  VarSet vars{names};
  Germ f(vars);
  for (std::size_t i = 0; i < n; ++i) {
    Exponent e(n, 0);
    e[i] = m;
    f.add_term(e, Rat(1));
  }
  std::mt19937_64 rng(seed);
  std::size_t added = 0;
  while (added < extra) {
    Exponent e(n);
    unsigned total = 0;
    for (auto& x : e) {
      x = static_cast<unsigned>(rng() % (m + 1));
      total += x;
    }
    if (total < 2 || total > m + 1) continue;
    if (f.coeff(e) != 0) continue;
    f.add_term(e, Rat(1 + static_cast<long>(rng() % 5)));
    ++added;
  }
  return f;
}

struct Row {
  std::string name;
  double serial_ms;
  double parallel_ms;
};

void print_row(const Row& r) {
  double speedup = r.parallel_ms > 0 ? r.serial_ms / r.parallel_ms : 0.0;
  std::cout << std::left << std::setw(34) << r.name << std::right
            << std::setw(10) << std::fixed << std::setprecision(1)
            << r.serial_ms << " ms" << std::setw(10) << r.parallel_ms << " ms"
            << std::setw(8) << std::setprecision(2) << speedup << "x\n";
}

}  // namespace

int main(int argc, char** argv) {
  std::string corpus_file = argc > 1 ? argv[1] : "data/corpus.jsonl";
#ifdef _OPENMP
  std::cout << "threads: " << omp_get_max_threads() << "\n";
#else
  std::cout << "threads: 1 (compiled without OpenMP)\n";
#endif
  std::cout << std::left << std::setw(34) << "workload" << std::right
            << std::setw(13) << "serial" << std::setw(13) << "parallel"
            << std::setw(9) << "speedup" << "\n";

  // one germ, parallel over its 2^n - 1 coordinate subspaces (the full-
  // dimensional subspace dominates, so the speedup is imbalance-limited)
  for (auto [n, m, extra] : {std::tuple<std::size_t, unsigned, std::size_t>{
                                 5, 6, 14},
                             {6, 5, 12}}) {
    Germ f = dense_convenient_germ(n, m, extra, 1234 + n);
    double t0 = now_ms();
    Int serial = newton_number_serial(f);
    double t1 = now_ms();
    Int parallel = newton_number(f, true);
    double t2 = now_ms();
    if (serial != parallel) {
      std::cerr << "MISMATCH between serial and parallel newton numbers\n";
      return 1;
    }
    print_row({"newton n=" + std::to_string(n) + " m=" + std::to_string(m) +
                   " |support|=" + std::to_string(f.term_count()) +
                   " (nu=" + serial.get_str() + ")",
               t1 - t0, t2 - t1});
  }

  // a batch of germs, parallel over the batch
  {
    std::vector<Germ> batch;
    for (std::uint64_t s = 0; s < 24; ++s)
      batch.push_back(dense_convenient_germ(4, 7, 12, 777 + s));
    std::vector<Int> serial_out(batch.size()), parallel_out(batch.size());
    double t0 = now_ms();
    for (std::size_t i = 0; i < batch.size(); ++i)
      serial_out[i] = newton_number_serial(batch[i]);
    double t1 = now_ms();
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1)
#endif
    for (long long i = 0; i < static_cast<long long>(batch.size()); ++i)
      parallel_out[static_cast<std::size_t>(i)] =
          newton_number_serial(batch[static_cast<std::size_t>(i)]);
    double t2 = now_ms();
    if (serial_out != parallel_out) {
      std::cerr << "MISMATCH in newton batch\n";
      return 1;
    }
    print_row({"newton batch 24 germs n=4", t1 - t0, t2 - t1});
  }

  // semicontinuity sampling
  {
    Germ f = parse_germ("x^3 + y^3 + z^3 + x^2*y^2");
    double t0 = now_ms();
    SemicontinuityReport serial = verify_semicontinuity(f, 32, 5, {}, false);
    double t1 = now_ms();
    SemicontinuityReport parallel = verify_semicontinuity(f, 32, 5, {}, true);
    double t2 = now_ms();
    if (serial.samples.size() != parallel.samples.size() || !serial.all_ok ||
        !parallel.all_ok) {
      std::cerr << "MISMATCH in semicontinuity reports\n";
      return 1;
    }
    print_row({"semicontinuity 32 samples", t1 - t0, t2 - t1});
  }

  // corpus evaluation
  try {
    auto entries = load_corpus(corpus_file);
    double t0 = now_ms();
    CorpusResult serial = run_corpus(entries, {}, false);
    double t1 = now_ms();
    CorpusResult parallel = run_corpus(entries, {}, true);
    double t2 = now_ms();
    if (serial.ok != parallel.ok || !serial.all_ok() || !parallel.all_ok()) {
      std::cerr << "MISMATCH in corpus results\n";
      return 1;
    }
    print_row({"corpus (" + std::to_string(entries.size()) + " entries)",
               t1 - t0, t2 - t1});
  } catch (const std::exception& e) {
    std::cerr << "corpus benchmark skipped: " << e.what() << "\n";
  }
  return 0;
}
