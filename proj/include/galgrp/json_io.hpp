#pragma once

#include "galgrp/kernel_constructions.hpp"
#include "galgrp/surface_calculator.hpp"

#include <json.hpp>

#include <string>

namespace galgrp {

using OrderedJson = nlohmann::ordered_json;

// Values that can exceed 64 bits (orders, huge degrees) serialize as decimal
// strings; structural integers stay JSON numbers.
OrderedJson int_to_json(const Int &value);
Int int_from_json(const OrderedJson &j);

OrderedJson to_json(const FgAbelianGroup &a);
FgAbelianGroup abelian_from_json(const OrderedJson &j);

OrderedJson to_json(const GroupDescriptor &d);
GroupDescriptor descriptor_from_json(const OrderedJson &j);

OrderedJson to_json(const ExtensionTower &t);
ExtensionTower tower_from_json(const OrderedJson &j);

OrderedJson to_json(const ProjectiveGroup &p);
ProjectiveGroup projective_from_json(const OrderedJson &j);

OrderedJson to_json(const StructureReport &r);
StructureReport report_from_json(const OrderedJson &j);

OrderedJson to_json(const KTildeDescriptor &d);
KTildeDescriptor ktilde_from_json(const OrderedJson &j);

OrderedJson to_json(const VerificationReport &r);
VerificationReport verification_from_json(const OrderedJson &j);

// Canonical text rendering: torsion factors ascending, then the free part,
// e.g. "(Z/2)^2 + Z/4 + Z^3"; the trivial group prints "1".
std::string format_group(const FgAbelianGroup &a);
std::string format_group(const GroupDescriptor &d);
std::string format_group(const ProjectiveGroup &p);

/// Multi-line indented rendering of a tower.
std::string format_tower(const ExtensionTower &t, const std::string &indent = "  ");

std::string format_report_text(const StructureReport &r, bool caff_known_trivial = false);
std::string format_ktilde_text(const KTildeDescriptor &d);
std::string format_verification_text(const VerificationReport &r);

} // namespace galgrp
