#pragma once

#include "archcalc/core.hpp"

#include <array>
#include <string>
#include <vector>

namespace archcalc {

/// One ArchiMate relationship instance: a tuple of a binary relation.
struct JunctionArm {
    std::size_t relation;
    Tuple tuple;
};

/// AND-junction: the arms R(a,b1), ..., R(a,bk) are removed from their
/// relations and replaced by a single (1+k)-ary relation {(a,b1,...,bk)}.
/// Relations emptied by the removal disappear. A single arm is returned as is.
/// Throws Error(JunctionShapeMismatch) if an arm is not a binary tuple of its
/// relation or the arms do not share their first element.
Architecture encode_and_junction(const Architecture& arch, const std::vector<JunctionArm>& arms);

/// OR-junction: adds a fresh element omega and the tuples (a,omega) and
/// (omega,t) for each target to the binary relation `relation`.
Architecture encode_or_junction(const Architecture& arch, std::size_t relation, const ElementId& source,
                                const ElementSet& targets);

struct LayerSpec {
    std::string name;
    ElementSet members;
};

/// Designated Boolean codes embedded in the universe by indicator functions.
inline const ElementId indicator_member_code{"0"};
inline const ElementId indicator_non_member_code{"1"};

/// Adds f_L with f_L(a) = "0" for members, "1" otherwise, defined on every
/// element except the codes themselves. The codes are added if absent.
Architecture indicator_function(const Architecture& arch, const LayerSpec& layer);

/// <{A, x, b}, {R_bullet = {(A,x)}, R_eq = {(x,b)}}, {}>.
Architecture wilkinson_base();

/// wilkinson_base() plus the entry symbols a11..b2 and f_star mapping each
/// entry symbol to its matrix/vector symbol.
Architecture wilkinson_star();

struct TorchLabels {
    std::array<std::string, 7> concepts;
    std::array<std::string, 7> relations;
};

TorchLabels default_torch_labels();

/// B&C fixture for the generic torch: seven concepts, seven singleton binary
/// relations, maximal 6-tier. Orientation (default labels):
///   EnergyStore -is_transferred_by-> EnergyTransferMechanism
///   EnergyStore -is_consumed_by-> LightEmitter
///   EnergyStore -is_held_by-> Housing
///   EnergyTransferMechanism -energizes-> LightEmitter
///   LightEmitter -emits-> Light
///   Light -illuminates-> Scene
///   Scene -is_observed_by-> User
Architecture torch_fixture(const TorchLabels& labels = default_torch_labels());

} // namespace archcalc
