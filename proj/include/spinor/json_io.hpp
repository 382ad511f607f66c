#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "spinor/bong.hpp"
#include "spinor/class_group.hpp"
#include "spinor/dyadic.hpp"
#include "spinor/field_model.hpp"
#include "spinor/rel_spinor.hpp"

namespace spinor {

nlohmann::ordered_json model_to_json(const FieldModel& m);
// Table-driven model: classes are listed in index order and the group law is
// XOR of indices, exactly as dumped by model_to_json.
FieldModelPtr model_from_json(const nlohmann::json& j);

nlohmann::ordered_json group_to_json(const ClassSubgroup& g);

nlohmann::ordered_json invariants_to_json(const FieldModel& m, const LatticeInvariants& inv);

nlohmann::ordered_json verdict_to_json(const ThetaVerdict& v);

// Friendly unit-class lookup: canonical class names always work; for the
// rational base field any nonzero integer literal is reduced to its class.
SquareClass parse_class(const FieldModel& m, const std::string& text);

struct LatticeInput {
  FieldModelPtr model;
  DyadicFieldPtr field;  // null for table-driven models
  std::optional<GoodBong> M;
  std::optional<GoodBong> N;
};

// {"field":{"kind":"Q2"}|{"model":{...}},"M":[[unit,r],...],"N":[[unit,r],...]}
LatticeInput parse_lattice_input(const nlohmann::json& j, int precision);

nlohmann::ordered_json lattice_to_json(const GoodBong& lat);

}  // namespace spinor
