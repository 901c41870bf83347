#include "narayana/cli.hpp"

#include <climits>
#include <stdexcept>

namespace narayana::cli {

Json integer_to_json(const Integer& x) {
    if (x.fits_slong_p()) return Json(x.get_si());
    return Json(x.get_str());
}

Integer integer_from_json(const Json& j) {
    if (j.is_number_integer()) return Integer(j.get<long>());
    if (j.is_string()) return Integer(j.get<std::string>());
    throw std::invalid_argument("expected an integer");
}

Json qpoly_to_json(const QPoly& p) {
    Json out = Json::array();
    for (const auto& c : p.coeffs()) out.push_back(integer_to_json(c));
    return out;
}

QPoly qpoly_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("expected a coefficient array");
    std::vector<Integer> coeffs;
    for (const auto& c : j) coeffs.push_back(integer_from_json(c));
    return QPoly(std::move(coeffs));
}

Json subset_to_json(RankSubset s) {
    Json out = Json::array();
    for (unsigned x : s.members()) out.push_back(x);
    return out;
}

RankSubset subset_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("expected a subset array");
    return RankSubset::from_members(j.get<std::vector<unsigned>>());
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

Json report_to_json(const Report& r) {
    Json j;
    j["command"] = r.command;
    j["parameters"] = r.parameters;
    j["verdict"] = r.verdict;
    j["payload"] = r.payload;
    j["witnesses"] = r.witnesses;
    if (r.timing_ms) j["timing_ms"] = *r.timing_ms;
    return j;
}

Report report_from_json(const Json& j) {
    Report r;
    r.command = j.at("command").get<std::string>();
    r.parameters = j.at("parameters");
    r.verdict = j.at("verdict").get<std::string>();
    r.payload = j.at("payload");
    r.witnesses = j.at("witnesses").get<std::vector<std::string>>();
    if (j.contains("timing_ms")) r.timing_ms = j.at("timing_ms").get<double>();
    return r;
}

}  // namespace narayana::cli
