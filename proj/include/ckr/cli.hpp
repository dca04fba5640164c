// Command-line entry point; split out from main() for testability.
#pragma once

namespace ckr {

// Runs the `ckr` command line. Exit codes: 0 success / query true,
// 1 query false or inconsistency, 2 usage error, 3 resource cap exceeded.
int cli_main(int argc, const char* const* argv);

}  // namespace ckr
