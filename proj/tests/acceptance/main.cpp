#include <cstring>
#include <iostream>
#include <string>

#include "criteria.hpp"

int main(int argc, char** argv) {
  std::string filter;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--filter") == 0 && i + 1 < argc) {
      filter = argv[++i];
    } else {
      std::cerr << "usage: acceptance [--filter <name|tag|number>]\n";
      return 1;
    }
  }
  auto results = acceptance::run(filter);
  int failed = 0;
  for (const auto& r : results) {
    std::cout << acceptance::format_line(r) << "\n";
    failed += !r.pass;
  }
  std::cout << results.size() - failed << "/" << results.size() << " criteria passed\n";
  return failed ? 1 : 0;
}
