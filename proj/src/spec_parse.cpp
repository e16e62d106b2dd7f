#include "randgraph/spec_parse.hpp"

#include <charconv>
#include <cstdlib>
#include <vector>

#include "randgraph/errors.hpp"

namespace randgraph {

namespace {

double parse_real(const std::string& token) {
    char* end = nullptr;
    const double v = std::strtod(token.c_str(), &end);
    if (end != token.c_str() + token.size() || token.empty()) {
        throw UsageError("not a number: `" + token + "`");
    }
    return v;
}

std::int64_t parse_int(const std::string& token) {
    std::int64_t v = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
        throw UsageError("not an integer: `" + token + "`");
    }
    return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    for (;;) {
        const auto pos = s.find(sep, start);
        if (pos == std::string::npos) {
            parts.push_back(s.substr(start));
            return parts;
        }
        parts.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
}

std::pair<std::string, std::string> split_head(const std::string& spec) {
    const auto pos = spec.find(':');
    if (pos == std::string::npos || pos + 1 >= spec.size()) {
        throw UsageError("malformed spec `" + spec + "` (expected name:args)");
    }
    return {spec.substr(0, pos), spec.substr(pos + 1)};
}

}  // namespace

DegreeDistribution parse_distribution(const std::string& spec) {
    const auto [name, args] = split_head(spec);
    if (name == "poisson") {
        return DegreeDistribution::poisson(parse_real(args));
    }
    if (name == "powerlaw") {
        const auto parts = split(args, ',');
        if (parts.size() != 2) throw UsageError("powerlaw needs TAU,KMIN in `" + spec + "`");
        return DegreeDistribution::power_law(parse_real(parts[0]), parse_int(parts[1]));
    }
    if (name == "pointmass") {
        return DegreeDistribution::point_mass(parse_int(args));
    }
    if (name == "geometric") {
        return DegreeDistribution::geometric(parse_real(args));
    }
    if (name == "compound") {
        // LAMBDA,<summand-spec>; the summand may itself contain commas.
        const auto pos = args.find(',');
        if (pos == std::string::npos) {
            throw UsageError("compound needs LAMBDA,<summand-spec> in `" + spec + "`");
        }
        const double lambda = parse_real(args.substr(0, pos));
        return compound_poisson(lambda, parse_distribution(args.substr(pos + 1)));
    }
    if (name == "mixedpoisson") {
        // <mix-spec>,SCALE; the mix spec may itself contain commas.
        const auto pos = args.rfind(',');
        if (pos == std::string::npos) {
            throw UsageError("mixedpoisson needs <mix-spec>,SCALE in `" + spec + "`");
        }
        const double scale = parse_real(args.substr(pos + 1));
        return mixed_poisson(parse_mixing_law(args.substr(0, pos)), scale);
    }
    throw UsageError("unknown distribution `" + name + "` in `" + spec + "`");
}

MixingLaw parse_mixing_law(const std::string& spec) {
    const auto [name, args] = split_head(spec);
    if (name == "pointmass") {
        return MixingLaw::point_mass(parse_real(args));
    }
    if (name == "exponential") {
        return MixingLaw::exponential(parse_real(args));
    }
    if (name == "uniform") {
        const auto parts = split(args, ',');
        if (parts.size() != 2) throw UsageError("uniform needs A,B in `" + spec + "`");
        return MixingLaw::uniform_interval(parse_real(parts[0]), parse_real(parts[1]));
    }
    if (name == "pareto") {
        const auto parts = split(args, ',');
        if (parts.size() != 2) throw UsageError("pareto needs ALPHA,XMIN in `" + spec + "`");
        return MixingLaw::pareto(parse_real(parts[0]), parse_real(parts[1]));
    }
    if (name == "discrete") {
        std::vector<MixingLaw::Node> atoms;
        for (const auto& item : split(args, ';')) {
            const auto parts = split(item, '=');
            if (parts.size() != 2) {
                throw UsageError("discrete atoms are V=P;V=P;... got `" + item + "`");
            }
            atoms.push_back({parse_real(parts[0]), parse_real(parts[1])});
        }
        return MixingLaw::discrete(std::move(atoms));
    }
    throw UsageError("unknown mixing law `" + name + "` in `" + spec + "`");
}

}  // namespace randgraph
