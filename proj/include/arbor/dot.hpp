#pragma once

#include <string>

#include "arbor/arn.hpp"
#include "arbor/cubing.hpp"
#include "arbor/dunwoody.hpp"

namespace arbor {

std::string tree_to_dot(const RealizedTree& t);
std::string cubing_to_dot(const CubeComplex& c, const Pocset& p);
std::string arn_to_dot(const BipartiteTree& t, const Decomposition& d,
                       const CubeComplex& cubing);

}  // namespace arbor
