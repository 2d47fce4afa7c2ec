#pragma once

#include <json.hpp>

#include "lameps/syntax.hpp"

namespace lameps {

// Tagged-union export with "tag" in {var, lam, app, dapp, eps, sum, zero}.
// Bound variables are exported under their display names, renamed exactly as
// the printer renames them.
nlohmann::json term_to_json(const TermPtr& t);

}  // namespace lameps
