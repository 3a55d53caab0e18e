#pragma once

#include <string_view>

#include "vnum/ideal.hpp"
#include "vnum/monomial.hpp"

namespace vnum {

/// `x^2*y*z^3` or `1`. Whitespace is ignored. Throws InvalidArgument.
Monomial parseMonomial(const RingSpec& ring, std::string_view text);

/// `(x^2, y*z^2)`, `(0)` or `(1)`.
MonomialIdeal parseIdeal(const RingPtr& ring, std::string_view text);

}  // namespace vnum
