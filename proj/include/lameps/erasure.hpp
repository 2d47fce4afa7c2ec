#pragma once

#include "lameps/syntax.hpp"

namespace lameps {

// Translation into the eps-free differential fragment: every eps t collapses
// to 0, everything else is homomorphic.
TermPtr erase(const TermPtr& t);

bool eps_free(const TermPtr& t);

enum class SimulateResult { Confirmed, Refuted, Inconclusive };

// Given a one-step reduction s => s_next (checked), searches reduction
// sequences from erase(s) of length <= bound for a term differentially
// equivalent to erase(s_next). Bound exhaustion with unexplored frontier is
// Inconclusive, distinct from Refuted.
SimulateResult erase_simulates(const TermPtr& s, const TermPtr& s_next, unsigned bound);

}  // namespace lameps
