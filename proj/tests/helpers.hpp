#pragma once

#include <string>

#include "supertrop/core_order.hpp"
#include "supertrop/supertropical.hpp"

namespace testing {

inline std::string fixture_path(const std::string& name) { return std::string(FIXTURE_DIR) + "/" + name + ".json"; }

inline supertrop::FiniteSemiringTable table(const std::string& name) {
  return supertrop::load_table(fixture_path(name));
}

inline supertrop::FiniteSupertropical supertropical(const std::string& name) {
  return supertrop::load_supertropical(fixture_path(name));
}

/// 2-adic order by repeated halving; independent of the library's GMP-based ord_p.
inline int ord2_by_division(long n) {
  int k = 0;
  while (n % 2 == 0) {
    n /= 2;
    ++k;
  }
  return k;
}

inline int ord_by_division(long n, long p) {
  int k = 0;
  while (n % p == 0) {
    n /= p;
    ++k;
  }
  return k;
}

}  // namespace testing
