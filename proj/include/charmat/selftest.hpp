#pragma once

#include <cstdint>
#include <iosfwd>

namespace charmat {

// deterministic internal consistency battery; prints "ok <name>" lines
// and a final digest line, byte-identical for the same seed
bool run_selftest(uint64_t seed, std::ostream& os);

}  // namespace charmat
