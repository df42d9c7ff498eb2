// JSON encoding of instances, test configurations and exact values.
//
// Rationals are written as "p/q" strings (or "p" for integers). Readers also
// accept JSON integers. Every top-level document carries "version".

#pragma once

#include "kstab/invariants.hpp"
#include "kstab/testconfig.hpp"

#include "json.hpp"

#include <optional>
#include <string>

namespace kstab::io {

using json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

json encode(const Rational& q);
json encode(const Vec& v);
Rational decode_rational(const json& j);
Vec decode_vec(const json& j);

/// A parsed instance file: a toric pair, abstract slope data, or both.
struct InstanceSpec {
    std::optional<toric::PolarizedToricPair> pair;
    std::optional<invariants::AbstractSlopeData> abstract;
};

/// Throws ParseError for malformed documents and GeometryError for documents
/// that parse but describe invalid geometry.
InstanceSpec parse_instance(const json& j);

/// {"version", "rays", "polarization", "boundary"}; parse_instance inverts it.
json encode_pair(const toric::PolarizedToricPair& x);
json encode_abstract(const invariants::AbstractSlopeData& a);
json encode_instance(const InstanceSpec& spec);

/// {"pieces": [{"slope", "offset"}]} or {"points", "values"}.
ratgeom::PLFunction parse_function(const json& j, int dim);
json encode_function(const ratgeom::PLFunction& f);

/// {"f": ..., "ceiling": optional}; the ceiling defaults to max f + 1.
testconfig::ToricTestConfig parse_tc(const json& j, const toric::PolarizedToricPair& base);
json encode_tc(const testconfig::ToricTestConfig& tc);

json read_file(const std::string& path);
void write_file(const std::string& path, const json& j);

}  // namespace kstab::io
