#pragma once

#include "archcalc/morphism.hpp"

namespace archcalc {

/// id = <id_A, id_R, id_F> on `a`.
Homomorphism identity(const ArchitecturePtr& a);

/// g ∘ f, componentwise. target(f) and source(g) only need to be extensionally
/// equal; relation and function indices are matched by extension.
/// Throws Error(NotComposable) otherwise.
Homomorphism compose(const Homomorphism& g, const Homomorphism& f);

} // namespace archcalc
