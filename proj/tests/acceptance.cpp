// Prints one line per acceptance criterion; exits non-zero if any fails.

#include <cstdlib>
#include <iostream>
#include <string>

#include "postgroup/selftest.hpp"

int main(int argc, char** argv) {
  postgroup::selftest::Config cfg;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--full") cfg.level = postgroup::selftest::Level::kFull;
    else if (arg.rfind("--seed=", 0) == 0) cfg.seed = std::stoull(arg.substr(7));
  }
  if (const char* env = std::getenv("POSTGROUP_LAB_SEED")) cfg.seed = std::stoull(env);

  int failures = 0;
  for (const auto& r : postgroup::selftest::run_all(cfg)) {
    std::cout << r.line() << '\n';
    failures += r.passed() ? 0 : 1;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << '\n';
  return failures == 0 ? 0 : 1;
}
