#include <iostream>

#include "criteria.hpp"

int main() {
  bool all = true;
  for (const auto& r : recip::acceptance::run_all()) {
    std::cout << recip::acceptance::format(r) << '\n';
    all = all && r.pass;
  }
  return all ? 0 : 1;
}
