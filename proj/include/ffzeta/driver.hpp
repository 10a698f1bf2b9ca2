#pragma once

namespace ffzeta {

// Full command-line entry point: parses flags (plus an optional JSON config
// that flags override), runs the requested computation, writes artifacts.
// Returns the process exit status: 0 success, 1 computation error, 2 config
// error. Never throws.
int run_cli(int argc, const char* const* argv);

} // namespace ffzeta
