#include <chrono>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>

#include "acceptance.hpp"
#include "cli.hpp"

int main(int argc, char** argv) {
  std::uint64_t seed = nullkit::acceptance::kDefaultSeed;
  if (argc > 1) seed = std::stoull(argv[1]);

  bool all = true;
  for (const auto& r : nullkit::acceptance::run_all(seed)) {
    std::printf("%s %d %s (%.2f s) %s\n", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(), r.seconds, r.detail.c_str());
    all = all && r.pass;
  }

  // 10: the same suite through the command line, under a minute.
  std::istringstream in;
  std::ostringstream out, err;
  const auto start = std::chrono::steady_clock::now();
  const int code = nullkit::run_cli({"selftest", "--seed", std::to_string(seed)}, in, out, err);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool ok = code == 0 && secs < 60.0;
  std::printf("%s 10 nullkit selftest (%.2f s) exit %d\n", ok ? "PASS" : "FAIL", secs, code);
  if (!ok) std::cerr << err.str();
  all = all && ok;
  std::fflush(stdout);
  return all ? 0 : 1;
}
