#pragma once

namespace cech::cli {

// Full command-line entry point. Exit status: 0 success, 1 usage or
// validation failure, 2 internal error.
int run(int argc, const char* const* argv);

}  // namespace cech::cli
