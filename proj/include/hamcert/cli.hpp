#pragma once

#include <iosfwd>

namespace hamcert {

inline constexpr int kExitSuccess = 0;
inline constexpr int kExitCounterexample = 1;
inline constexpr int kExitUsage = 2;

/// Entry point of the `hamcert` command line tool:
///
///   hamcert check <graph6> [--json] [--tolerance T] [--oracle-cap N]
///   hamcert verify (--n K | --file F.g6) [--jobs J] [--out FILE]
///                  [--tolerance T] [--seed S] [--properties a,b,...]
///   hamcert extremal --n K [--kind v|e] [--json]
///
/// Returns 0 on success, 1 when a counterexample or inconsistent certificate
/// is found, 2 on usage or input errors.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hamcert
