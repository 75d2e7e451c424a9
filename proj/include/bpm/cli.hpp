#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bpm::cli {

// Exit codes: 0 success, 1 verification or certification failure, 2 usage,
// parse or size-limit errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

}  // namespace bpm::cli
