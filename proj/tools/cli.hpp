#ifndef KCRANK_TOOLS_CLI_HPP
#define KCRANK_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace kcrank {

// Runs the command-line driver on `args` (program name excluded, natural
// order) with the given output and diagnostic streams.  Returns the
// process exit code:
//   0 - success
//   1 - input/output failure (unreadable or unwritable file)
//   2 - validation or usage failure (message carries an E_* code)
//   3 - --strict and a divergence or expectation mismatch was found
//   4 - internal invariant violation (a bug, never a data problem)
int cli_main(std::vector<std::string> args, std::ostream& out,
             std::ostream& err);

}  // namespace kcrank

#endif  // KCRANK_TOOLS_CLI_HPP
