// Runs the eight acceptance checks and prints one verdict line each.
// Exit status is the number of failed criteria.

#include <cstdio>
#include <cstdlib>
#include <cstring>

#include "qf/verify.hpp"

int main(int argc, char** argv) {
  unsigned threads = 1;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--threads") == 0 && i + 1 < argc) {
      threads = static_cast<unsigned>(std::strtoul(argv[++i], nullptr, 10));
      if (threads == 0) threads = 1;
    }
  }

  auto results = qf::run_acceptance_suite(threads);
  int failures = 0;
  for (const auto& r : results) {
    std::printf("criterion %d %-30s %s  (%.2fs)  %s\n", r.id, r.name.c_str(),
                r.passed ? "PASS" : "FAIL", r.seconds, r.detail.c_str());
    if (!r.passed) ++failures;
  }
  std::printf("%zu/%zu criteria passed\n", results.size() - failures, results.size());
  return failures;
}
