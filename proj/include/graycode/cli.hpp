#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "graycode/serialize.hpp"
#include "graycode/verify_oracle.hpp"

namespace graycode {

// Re-checks a parsed file against what its header claims.
Certificate certify(const Artifact& a);

// Exit codes: 0 ok/verified, 1 verification failed, 2 usage or domain error.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace graycode
