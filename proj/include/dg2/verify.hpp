#ifndef DG2_VERIFY_HPP
#define DG2_VERIFY_HPP

#include <string>
#include <vector>

#include "json.hpp"

#include "dg2/models.hpp"

namespace dg2 {

/// sasakian, sasakian-asd, cy3, hypersymplectic.
const std::vector<std::string>& preset_names();

/// Every check attached to a preset. Throws std::invalid_argument for an
/// unknown name. q is used by the hypersymplectic preset only.
Report verify_preset(const std::string& name, const RationalMatrix3& q = identity_matrix());

nlohmann::ordered_json to_json(const Report& report);

}  // namespace dg2

#endif  // DG2_VERIFY_HPP
