#pragma once

#include <iosfwd>

namespace extrilen {

/// Entry point of the command-line tool. Returns 0 on success, 1 when an
/// instance is invalid or a verification fails, 2 on usage errors.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace extrilen
