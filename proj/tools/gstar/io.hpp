#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "gstar/forms.hpp"
#include "gstar/planar.hpp"

namespace gstar::cli {

using json = nlohmann::ordered_json;

struct RunConfig {
    FieldSpec field = FieldSpec::rationals();
    std::vector<std::uint32_t> verify_primes{101, 103};
    std::uint64_t subset_budget = 2000000;
    std::uint64_t scan_budget = 2000000;
    std::string output = "text";
    std::uint64_t seed = 1;

    json echo() const;
};

FieldSpec parse_field(const std::string& spec);

struct LambdaInput {
    std::vector<std::string> variables;
    FormList lambda;
};

struct ArrangementInput {
    std::vector<std::string> variables;
    std::vector<Matrix> components;  // raw generator rows
};

LambdaInput load_lambda(const std::string& path, const FieldSpec& field);
ArrangementInput load_arrangement(const std::string& path, const FieldSpec& field);
std::vector<ProjPoint> load_points(const std::string& path);

}  // namespace gstar::cli
