#include "heroix/limits.hpp"

#include <cstdlib>
#include <string>

namespace heroix {

int enumeration_limit() {
  constexpr int kDefault = 8;
  const char* env = std::getenv("HEROIX_MAX_N");
  if (env == nullptr || *env == '\0') return kDefault;
  try {
    std::size_t used = 0;
    const int value = std::stoi(env, &used);
    if (used != std::string(env).size() || value < 0) return kDefault;
    return value;
  } catch (const std::exception&) {
    return kDefault;
  }
}

}  // namespace heroix
