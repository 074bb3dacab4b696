// Prints one PASS/FAIL line per acceptance criterion. Criteria 1-11 run
// in-process; 12 runs `monvar verify-paper` (path in argv[1]) and checks
// that it exits 0.

#include <sys/wait.h>

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>

#include "monvar/verification.hpp"

using monvar::verification::Entry;
using monvar::verification::Status;

namespace {

  Entry verify_command(char const* cli) {
    Entry e;
    e.name          = "verify-paper-exit";
    e.anchor        = "the verify-paper command runs checks 1-11 and exits 0";
    e.limit_seconds = 300;
    if (cli == nullptr) {
      e.status = Status::fail;
      e.detail = "no CLI path given";
      return e;
    }
    auto t0      = std::chrono::steady_clock::now();
    auto command = "\"" + std::string(cli) + "\" verify-paper > /dev/null 2>&1";
    int  raw     = std::system(command.c_str());
    e.seconds    = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    int code     = raw != -1 && WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    e.status     = code == 0 ? Status::pass : Status::fail;
    e.detail     = "exit code " + std::to_string(code);
    return e;
  }

}  // namespace

int main(int argc, char** argv) {
  auto report = monvar::verification::run_all();
  report.entries.push_back(verify_command(argc > 1 ? argv[1] : nullptr));
  report.print(std::cout, /*with_timings=*/true);
  return report.all_pass() ? 0 : 1;
}
