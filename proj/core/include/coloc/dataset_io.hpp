#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "coloc/geometry.hpp"

namespace coloc {

/// Feature CSV `id,feature,shape_type,coords,amount` with a mandatory
/// header. Coordinates are `x y` pairs separated by `;`. shape_type is one
/// of point, line, polygon. Amount may be empty. Malformed rows raise
/// ValidationError with the offending line number.
std::vector<SpatialObject> ingest(std::istream& in);
std::vector<SpatialObject> ingest_file(const std::string& path);

/// Inverse of ingest: coordinates and amounts are written with shortest
/// round-trip precision, so ingest(serialize(d)) == d.
void serialize(std::ostream& out, std::span<const SpatialObject> dataset);
void serialize_file(const std::string& path, std::span<const SpatialObject> dataset);

}  // namespace coloc
