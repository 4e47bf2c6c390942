#include "pbun/form_table.hpp"

#include "pbun/error.hpp"

namespace pbun {

const Rational& FormTable::at(const ProjectiveType& p) const {
    auto it = values.find(p);
    if (it == values.end()) throw Error("missing value at " + label(p));
    return it->second;
}

FormTable zero_table(int bound, std::int64_t q0) {
    FormTable t;
    t.bound = bound;
    t.q0 = q0;
    for (const auto& v : bundles::enumerate_pbun(3, bound)) t.values.emplace(v, Rational(0));
    return t;
}

nlohmann::ordered_json to_json(const FormTable& table) {
    nlohmann::ordered_json j;
    j["q0"] = table.q0;
    j["bound"] = table.bound;
    j["lambda"] = nlohmann::ordered_json::array();
    if (table.lambda) {
        j["lambda"].push_back(to_string(table.lambda->lambda1));
        j["lambda"].push_back(to_string(table.lambda->lambda2));
    }
    auto values = nlohmann::ordered_json::array();
    for (const auto& [type, value] : table.values) {
        nlohmann::ordered_json entry;
        entry["type"] = type.gaps();
        entry["value"] = to_string(value);
        values.push_back(std::move(entry));
    }
    j["values"] = std::move(values);
    return j;
}

FormTable form_table_from_json(const nlohmann::json& j) {
    FormTable t;
    t.q0 = j.at("q0").get<std::int64_t>();
    t.bound = j.at("bound").get<int>();
    const auto& lambda = j.at("lambda");
    if (lambda.size() == 2) {
        t.lambda = EigenPair{parse_rational(lambda[0].get<std::string>()), parse_rational(lambda[1].get<std::string>())};
    } else if (!lambda.empty()) {
        throw Error("lambda must be empty or a pair");
    }
    for (const auto& entry : j.at("values")) {
        t.values.emplace(ProjectiveType(entry.at("type").get<std::vector<int>>()),
                         parse_rational(entry.at("value").get<std::string>()));
    }
    return t;
}

} // namespace pbun
