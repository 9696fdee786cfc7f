#pragma once

// Command-line front end. Payloads are JSON documents read from stdin or
// --input; results are JSON on stdout (one line, or indented with --pretty).
// With --batch every input line is a separate payload and every result is one
// output line. Errors are JSON objects on stderr:
//   {"error": {"kind": "...", "message": "..."}}
// Exit codes: 0 success, 2 schema violation, 3 precondition failure,
// 4 internal invariant failure.

#include <iosfwd>

namespace wittlab {

int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace wittlab
