#include <iostream>
#include <string>
#include <vector>

#include "cli.hpp"

int main(int argc, char** argv) {
  using namespace spinpaint::cli;
  const std::vector<std::string> args(argv + 1, argv + argc);
  CommandPlan plan;
  try {
    plan = parse_args(args);
  } catch (const HelpRequested& help) {
    std::cout << help.what();
    return 0;
  } catch (const UsageError& e) {
    std::cerr << "spinpaint: usage error: " << e.what() << "\nRun 'spinpaint --help' for usage.\n";
    return 2;
  }
  return run(plan, std::cout, std::cerr);
}
