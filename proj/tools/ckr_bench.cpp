// Benchmark: parallel vs. serial guess enumeration on a fixture, with a
// cross-check that both sweeps find the same models.
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "ckr/parser.hpp"
#include "ckr/translate.hpp"

int main(int argc, char** argv) {
  std::string path = argc > 1 ? argv[1] : std::string(CKR_FIXTURE_DIR) + "/korg.ckr";
  int reps = argc > 2 ? std::stoi(argv[2]) : 5;
  std::ifstream in(path);
  if (!in) {
    std::cerr << "cannot read " << path << "\n";
    return 1;
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  ckr::Sckr k = ckr::parse_sckr(ss.str());

  auto run = [&](bool parallel) {
    ckr::SolveOptions opts;
    opts.parallel = parallel;
    auto t0 = std::chrono::steady_clock::now();
    ckr::SolveResult r;
    for (int i = 0; i < reps; ++i) r = ckr::solve_ckr(k, opts);
    auto t1 = std::chrono::steady_clock::now();
    double ms =
        std::chrono::duration<double, std::milli>(t1 - t0).count() / reps;
    std::cout << (parallel ? "parallel" : "serial  ") << ": " << ms
              << " ms/solve, " << r.models.size() << " models\n";
    return r;
  };

  ckr::SolveResult serial = run(false);
  ckr::SolveResult parallel = run(true);
  for (size_t i = 0; i < serial.models.size(); ++i)
    if (i >= parallel.models.size() ||
        serial.models[i].answer_set != parallel.models[i].answer_set) {
      std::cerr << "mismatch between serial and parallel results\n";
      return 1;
    }
  if (serial.models.size() != parallel.models.size()) {
    std::cerr << "mismatch between serial and parallel results\n";
    return 1;
  }
  std::cout << "results match\n";
  return 0;
}
