#pragma once

#include <string>

#include "randgraph/distribution.hpp"

namespace randgraph {

/// Degree distribution spec grammar:
///   poisson:MU | powerlaw:TAU,KMIN | pointmass:K | geometric:P
///   | compound:LAMBDA,<summand-spec> | mixedpoisson:<mix-spec>,SCALE
/// compound splits at the first comma, mixedpoisson at the last, so nested
/// specs may contain commas themselves.
DegreeDistribution parse_distribution(const std::string& spec);

/// Mixing / weight law spec grammar:
///   pointmass:W | exponential:MEAN | uniform:A,B | pareto:ALPHA,XMIN
///   | discrete:V=P;V=P;...
MixingLaw parse_mixing_law(const std::string& spec);

}  // namespace randgraph
