#include "opalg/core/errors.hpp"

namespace opalg {

void require_same_dim(std::size_t a, std::size_t b, const char* what)
{
  if (a != b)
    throw DimensionMismatch(std::string(what) + ": dimension " + std::to_string(a) +
                            " does not match " + std::to_string(b));
}

} // namespace opalg
