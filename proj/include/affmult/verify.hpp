#pragma once

#include <iosfwd>

#include "affmult/multiplicity.hpp"

namespace affmult {

struct VerifyOptions {
  int max_ell = 6;
  int max_k = 5;
};

// Self-check: cross-method agreement sweep plus round trips through every
// bijection (RSK, path/tableau, strip/unstrip, crystal/path). Prints one
// line per suite and returns true when everything passed. The slower
// enumerations are capped internally regardless of the options.
bool run_verification(const VerifyOptions& opts, std::ostream& out);

// Same sweep with a custom method table, so a deliberately broken method
// can be observed to fail.
bool run_verification(const VerifyOptions& opts, std::ostream& out, const MethodTable& table);

}  // namespace affmult
