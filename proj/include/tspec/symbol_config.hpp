#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "tspec/symbols.hpp"

namespace tspec {

using Symbol = std::variant<SmoothUnimodalSymbol, TwoLevelSymbol>;

/// tridiag3, expcos, slowdecay, twolevel-p1q4.
Symbol builtin_symbol(std::string_view name);

/// Plain-text symbol definition, one `key = value` per line, `#` starts a comment.
///
///   kind       smooth | two_level
///   name       free text
///   order      truncation order K of V (smooth, default 64)
///   log_coeffs comma list of k:re or k:re:im for k >= 0; V_{-k} = conj(V_k) (smooth)
///   theta1     left arc endpoint (two_level)
///   theta2     right arc endpoint (two_level, or give p and q instead)
///   p, q       arc length 2πp/q (two_level)
///   gamma      level e^{2πγ} on the arc (two_level)
///
/// Unknown or repeated keys throw PreconditionError.
Symbol parse_symbol_config(std::string_view text);

/// A builtin name, or else a path to a configuration file.
Symbol load_symbol(const std::string& spec);

const std::string& symbol_name(const Symbol& sym);

}  // namespace tspec
