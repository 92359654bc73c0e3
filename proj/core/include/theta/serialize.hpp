#pragma once

#include <string>
#include <string_view>

#include "theta/catalog.hpp"
#include "theta/lifts.hpp"
#include "theta/occurrence.hpp"

namespace theta {

// JSON wire formats. Scalars serialize as {"re":"3/2","im":"0"} with
// decimal-rational strings; parameter tuple entries are plain rational
// strings; K-types are integer arrays.
std::string to_json(const Scalar& s);
std::string to_json(const GroupSig& sig);
std::string to_json(const LanglandsParam& param);
std::string to_json(const KTypeSp& kt);
std::string to_json(const KTypeU& kt);
std::string to_json(const InfChar& c);
std::string to_json(const OStar4Rep& rep);
std::string to_json(const OStar2Rep& rep);
std::string to_json(const LiftResult& result);
std::string to_json(const CatalogEntry& entry);

Scalar scalar_from_json(std::string_view text);
GroupSig group_from_json(std::string_view text);
LanglandsParam param_from_json(std::string_view text);
KTypeSp ktype_sp_from_json(std::string_view text);
KTypeU ktype_u_from_json(std::string_view text);
InfChar infchar_from_json(std::string_view text);
OStar4Rep ostar4_from_json(std::string_view text);
OStar2Rep ostar2_from_json(std::string_view text);
LiftResult lift_result_from_json(std::string_view text);

}  // namespace theta
