#ifndef EFFECTKIT_CLI_HPP
#define EFFECTKIT_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "effectkit/algebra.hpp"

namespace effectkit::cli {

/// Exit codes of every subcommand.
enum ExitCode : int {
    kSuccess = 0,
    kDomainError = 1,  // axiom or hypothesis failure
    kInputError = 2,   // I/O, parse or usage error
};

/// Resolves an input argument: "spec:<ctor>" or a bare constructor spec
/// ("chain:4", "hsum:2,3", ...) when no file of that name exists, otherwise
/// a JSON table file. Throws ParseError, ConstructorError, ValidationError
/// or std::runtime_error (unreadable file).
CheckedEffectAlgebra load_input(const std::string& argument);

/// Runs the command line `args` (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace effectkit::cli

#endif  // EFFECTKIT_CLI_HPP
