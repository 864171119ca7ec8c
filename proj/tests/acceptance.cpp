// One line per acceptance criterion; nonzero exit if any fails.
#include <cstdio>

#include "antimagic/reproduce.hpp"

int main() {
  const auto results = antimagic::reproduce_all();
  for (const auto& r : results) {
    std::printf("criterion %2d: %s  %s (%.2fs)  %s\n", r.id, antimagic::to_string(r.status).c_str(), r.title.c_str(),
                r.seconds, r.detail.c_str());
  }
  return antimagic::all_passed(results) ? 0 : 1;
}
