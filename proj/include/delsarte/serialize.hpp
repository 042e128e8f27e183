#pragma once

#include "delsarte/catalog.hpp"

#include <json.hpp>

namespace delsarte {

// Document shapes (field names are part of the interface):
//   threefold: {weights:[5], degree, matrix:[[5]x5], family, reference_hodge?:[h11,h12]}
//   character set summary: {modulus, count, graded_counts:[4]}
//   height result: {outcome:"finite"|"infinite", h?, witness:{norms:[...]}|{index,norm}}
//   spectrum: {d_A, phi, groups:[{height:int|"inf", count, representatives:[...]}]}
//   atlas: {version, family, records:[...], finite_heights:[...]}

nlohmann::json threefold_to_json(const DelsarteThreefold& x);
DelsarteThreefold threefold_from_json(const nlohmann::json& doc);

nlohmann::json charset_to_json(const CharSetSummary& s);

nlohmann::json height_result_to_json(const HeightResult& h);

nlohmann::json spectrum_to_json(const ResidueSpectrum& sp);
ResidueSpectrum spectrum_from_json(const nlohmann::json& doc);

nlohmann::json record_to_json(const WeightRecord& rec);
WeightRecord record_from_json(const nlohmann::json& doc);

nlohmann::json reduced_to_json(const ReducedCharacter& rc);

nlohmann::json atlas_to_json(const HeightAtlas& atlas);
HeightAtlas atlas_from_json(const nlohmann::json& doc);

}  // namespace delsarte
