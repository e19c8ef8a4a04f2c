// Copyright 2026 The vbraid Authors
// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end.  Exit codes: 0 true or success, 1 false,
// 2 error, 3 unknown (oracle or normal-form budget exhausted).

#ifndef VBRAID_TOOLS_CLI_HPP_
#define VBRAID_TOOLS_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace vbraid::cli {

  enum ExitCode : int { kTrue = 0, kFalse = 1, kError = 2, kUnknown = 3 };

  /// Runs one invocation.  `args` excludes the program name.
  int run(std::vector<std::string> const& args, std::ostream& out,
          std::ostream& err);

}  // namespace vbraid::cli

#endif  // VBRAID_TOOLS_CLI_HPP_
