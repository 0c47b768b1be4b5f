// SPDX-License-Identifier: Apache-2.0
#ifndef CODEBOUNDS_SDPA_IO_HPP
#define CODEBOUNDS_SDPA_IO_HPP

#include <iosfwd>
#include <string>

#include "codebounds/sdp.hpp"

namespace codebounds {

/// SDPA sparse format, bit-stable layout:
///   line 1: m          (number of constraints / scalar variables)
///   line 2: nblocks
///   line 3: block sizes, diagonal blocks as negative integers
///   line 4: the m objective values
///   then one line per nonzero: "matno blkno i j value" with matno 0 the
///   cost matrix F_0, blkno/i/j 1-based, i <= j, shortest round-trip decimals.
/// Files always encode the minimization sense: a maximizing problem is
/// written with the objective negated.
void export_sdpa(const SdpProblem& p, std::ostream& out);
void export_sdpa_file(const SdpProblem& p, const std::string& path);
std::string export_sdpa_string(const SdpProblem& p);

/// Parses the format written by export_sdpa (returns a minimization-sense
/// problem). Throws std::invalid_argument with a line description on bad
/// input.
SdpProblem parse_sdpa(std::istream& in);
SdpProblem parse_sdpa_file(const std::string& path);

/// The min-sense normal form used for round-trip comparison.
SdpProblem normalized_min_form(const SdpProblem& p);

/// Reads the solution file written by SDPA-family solvers (the sections
/// "xVec = {...}" and "yMat = {...}"), mapped onto the problem's block
/// structure: dense blocks as nested brace lists, diagonal blocks as flat
/// lists. Returns a solution holding x and the dual blocks Y, ready for
/// exact certification (upper_bound_rounding). Objective fields are filled
/// from "objValPrimal"/"objValDual" when present.
SdpSolution parse_sdpa_solution(std::istream& in, const SdpProblem& problem);
SdpSolution parse_sdpa_solution_file(const std::string& path, const SdpProblem& problem);

}  // namespace codebounds

#endif
