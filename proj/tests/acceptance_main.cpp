// Acceptance suite runner: one pass/fail line per criterion. With numeric
// arguments it runs only the selected criteria (used by ctest to register
// them individually); with none it runs everything.
#include <cstdio>
#include <cstdlib>
#include <string>

#include "wordchar/regress.hpp"

int main(int argc, char** argv) {
  std::vector<int> select;
  for (int i = 1; i < argc; ++i) {
    char* end = nullptr;
    long v = std::strtol(argv[i], &end, 10);
    if (end == argv[i] || *end != '\0' || v < 1 || v > 10) {
      std::fprintf(stderr, "usage: %s [criterion...]\n", argv[0]);
      return 2;
    }
    select.push_back(static_cast<int>(v));
  }
  auto results = wordchar::run_acceptance(
      select, [](const std::string& line) { std::printf("%s\n", line.c_str()); });
  int failures = 0;
  for (const auto& r : results) failures += !r.passed;
  return failures == 0 ? 0 : 1;
}
