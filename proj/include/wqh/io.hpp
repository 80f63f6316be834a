#pragma once

#include <memory>
#include <string>

#include <json.hpp>

#include "wqh/category.hpp"
#include "wqh/functor.hpp"
#include "wqh/hopf.hpp"
#include "wqh/twist.hpp"

namespace wqh {

using Json = nlohmann::json;

// Every *_from_json throws InputError on malformed or inconsistent input.

Json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j);
Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

/// {"labels": [...], "dual": [...], "N": [[a, b, c, m], ...]}
Json ring_to_json(const FusionRing& ring);
FusionRing ring_from_json(const Json& j);

Json category_to_json(const CategoryData& cat, const std::string& provenance = {});
CategoryData category_from_json(const Json& j);
/// 16 hex digits of FNV-1a over the serialized ring, F, R and theta.
std::string category_hash(const CategoryData& cat);

Json functor_to_json(const FunctorData& F);
FunctorData functor_from_json(const Json& j, std::shared_ptr<const CategoryData> cat);

/// Self-contained: embeds the category and the functor next to the algebra data.
Json algebra_to_json(const WQHopf& H);
WQHopf algebra_from_json(const Json& j);

Json twist_to_json(const TwistElement& t);
Json report_to_json(const Report& r);

/// {"D": [...]} or a bare array.
DimensionFunction dimension_from_json(const Json& j, const FusionRing& ring);

Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

/// Same data on the approximate backend.
CategoryData approximate(const CategoryData& cat);

}  // namespace wqh
