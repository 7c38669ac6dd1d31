#pragma once

#include <stdexcept>

namespace hvsim {

// Thrown when a geometric configuration lies inside a degeneracy guard,
// e.g. collinear b, b' passed to the tilde decomposition or anything
// built on top of it.
class DegenerateConfiguration : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace hvsim
