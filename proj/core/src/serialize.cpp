#include "meandric/serialize.hpp"

#include <stdexcept>

namespace meandric {

nlohmann::json to_json(const MeandricSystem& s) {
    return nlohmann::json{
        {"n", s.order()}, {"upper", s.upper().images()}, {"lower", s.lower().images()}};
}

MeandricSystem system_from_json(const nlohmann::json& j) {
    const int n = j.at("n").get<int>();
    Permutation upper(j.at("upper").get<std::vector<int>>());
    Permutation lower(j.at("lower").get<std::vector<int>>());
    if (upper.size() != n || lower.size() != n)
        throw std::invalid_argument("system_from_json: n does not match the permutations");
    return MeandricSystem(std::move(upper), std::move(lower));
}

nlohmann::json to_json(const ExpansionCoefficients& e) {
    nlohmann::json coeffs = nlohmann::json::object();
    for (const auto& [k, count] : e.coeffs) coeffs[std::to_string(k)] = count.str();
    return nlohmann::json{
        {"n", e.n}, {"omega", ExpansionCoefficients::leading_exponent}, {"coeffs", coeffs}};
}

ExpansionCoefficients expansion_from_json(const nlohmann::json& j) {
    ExpansionCoefficients e;
    e.n = j.at("n").get<int>();
    if (j.at("omega").get<int>() != ExpansionCoefficients::leading_exponent)
        throw std::invalid_argument("expansion_from_json: unexpected omega");
    for (const auto& [key, value] : j.at("coeffs").items()) {
        const int k = std::stoi(key);
        const BigCount count(value.get<std::string>());
        if (k < 0 || count < 0) throw std::invalid_argument("expansion_from_json: bad coefficient");
        e.coeffs[k] = count;
    }
    return e;
}

}  // namespace meandric
