#ifndef LATMEAS_CLI_HPP
#define LATMEAS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace latmeas {

// Command-line entry point, callable in-process for tests.
//
//   validate <file> [--json]    construct + check everything in the model
//   sigma <file> [--json]       print the generated algebra members
//   decompose <file> [--json]   clause report + Hahn decomposition
//   search [flags]              enumerate models, optionally persist
//   report <dir> [--json]       re-validate a persisted search output
//
// Exit codes: 0 all verdicts pass, 1 verdict failures or violation findings,
// 2 usage or input errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace latmeas

#endif
