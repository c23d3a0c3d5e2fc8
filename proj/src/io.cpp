#include "suspzeta/io.hpp"

#include "suspzeta/format.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace suspzeta {

namespace {

using nlohmann::json;

json parse_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
    }
}

const json& require(const json& obj, const char* key, const std::string& path) {
    if (!obj.is_object() || !obj.contains(key))
        throw std::invalid_argument(path + ": missing field '" + key + "'");
    return obj.at(key);
}

long long require_int(const json& obj, const char* key, const std::string& path) {
    const json& v = require(obj, key, path);
    if (!v.is_number_integer()) throw std::invalid_argument(path + "." + key + ": expected an integer");
    return v.get<long long>();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace

ResolutionData parse_resolution_json(const std::string& text) {
    const json root = parse_text(text);
    ResolutionData res;
    const json& divisors = require(root, "divisors", "resolution");
    if (!divisors.is_array()) throw std::invalid_argument("resolution.divisors: expected an array");
    for (std::size_t i = 0; i < divisors.size(); ++i) {
        const std::string path = "divisors[" + std::to_string(i) + "]";
        const json& d = divisors[i];
        ResolutionDivisor divisor;
        const json& id = require(d, "id", path);
        if (!id.is_string()) throw std::invalid_argument(path + ".id: expected a string");
        divisor.id = id.get<std::string>();
        divisor.N = require_int(d, "N", path);
        divisor.nu = require_int(d, "nu", path);
        if (divisor.N < 1) throw std::invalid_argument(path + ".N: multiplicity must be >= 1");
        if (divisor.nu < 1) throw std::invalid_argument(path + ".nu: discrepancy must be >= 1");
        res.divisors.push_back(std::move(divisor));
    }
    const json& strata = require(root, "strata", "resolution");
    if (!strata.is_array()) throw std::invalid_argument("resolution.strata: expected an array");
    for (std::size_t i = 0; i < strata.size(); ++i) {
        const std::string path = "strata[" + std::to_string(i) + "]";
        const json& s = strata[i];
        ResolutionStratum stratum;
        const json& ids = require(s, "divisors", path);
        if (!ids.is_array() || ids.empty())
            throw std::invalid_argument(path + ".divisors: expected a nonempty array");
        for (const auto& id : ids) {
            if (!id.is_string()) throw std::invalid_argument(path + ".divisors: expected strings");
            stratum.divisor_ids.push_back(id.get<std::string>());
        }
        stratum.euler = require_int(s, "euler", path);
        res.strata.push_back(std::move(stratum));
    }
    if (root.contains("classes")) {
        const json& classes = root.at("classes");
        if (!classes.is_array()) throw std::invalid_argument("resolution.classes: expected an array");
        for (std::size_t i = 0; i < classes.size(); ++i) {
            const std::string path = "classes[" + std::to_string(i) + "]";
            const json& c = classes[i];
            const json& ids = require(c, "divisors", path);
            std::vector<std::string> key;
            for (const auto& id : ids) key.push_back(id.get<std::string>());
            const json& poly = require(c, "classInL", path);
            if (!poly.is_array()) throw std::invalid_argument(path + ".classInL: expected an array");
            LaurentLT value;
            for (const auto& pair : poly) {
                if (!pair.is_array() || pair.size() != 2)
                    throw std::invalid_argument(path + ".classInL: expected [exponent, coeff] pairs");
                value.add_monomial(BigInt(pair[1].get<long long>()), pair[0].get<long long>(), 0);
            }
            bool matched = false;
            for (auto& stratum : res.strata) {
                if (stratum.divisor_ids == key) {
                    stratum.class_in_L = value;
                    matched = true;
                    break;
                }
            }
            if (!matched) throw std::invalid_argument(path + ": no stratum with that divisor set");
        }
    }
    res.validate();
    return res;
}

ResolutionData load_resolution_file(const std::string& path, std::vector<std::string>* warnings) {
    ResolutionData res = parse_resolution_json(read_file(path));
    if (warnings && !check_z_at_zero(res))
        warnings->push_back("resolution data fails the Z(0) = 1 identity: sum chi/prod nu = " +
                            to_string(resolution_at_zero(res)));
    return res;
}

ZetaBundle parse_bundle_json(const std::string& text) {
    const json root = parse_text(text);
    std::string variable = "s";
    if (root.contains("variable")) {
        const json& v = root.at("variable");
        if (!v.is_string()) throw std::invalid_argument("bundle.variable: expected a string");
        variable = v.get<std::string>();
        if (variable.empty()) throw std::invalid_argument("bundle.variable: empty symbol");
    }
    const json& entries = require(root, "entries", "bundle");
    if (!entries.is_array()) throw std::invalid_argument("bundle.entries: expected an array");
    ZetaBundle bundle;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const std::string path = "entries[" + std::to_string(i) + "]";
        const json& e = entries[i];
        const long long twist = require_int(e, "twist", path);
        if (twist < 1) throw std::invalid_argument(path + ".twist: must be >= 1");
        const json& num = require(e, "num", path);
        const json& den = require(e, "den", path);
        if (!num.is_string() || !den.is_string())
            throw std::invalid_argument(path + ": num and den must be expression strings");
        RationalFunction value;
        try {
            const RationalFunction n = parse_rational_expr(num.get<std::string>(), variable);
            const RationalFunction d = parse_rational_expr(den.get<std::string>(), variable);
            value = n / d;
        } catch (const ExprParseError& err) {
            throw std::invalid_argument(path + ": " + err.what());
        }
        bundle.set(twist, value);
    }
    if (!bundle.has(1)) throw std::invalid_argument("bundle: entry at twist 1 is required");
    return bundle;
}

ZetaBundle load_bundle_file(const std::string& path) { return parse_bundle_json(read_file(path)); }

std::string resolution_to_json(const ResolutionData& res) {
    json root;
    root["divisors"] = json::array();
    for (const auto& d : res.divisors)
        root["divisors"].push_back({{"id", d.id}, {"N", d.N}, {"nu", d.nu}});
    root["strata"] = json::array();
    json classes = json::array();
    for (const auto& s : res.strata) {
        root["strata"].push_back({{"divisors", s.divisor_ids}, {"euler", s.euler}});
        if (s.class_in_L) {
            json pairs = json::array();
            for (const auto& [key, coeff] : s.class_in_L->coeffs())
                pairs.push_back({key.l, coeff.convert_to<long long>()});
            classes.push_back({{"divisors", s.divisor_ids}, {"classInL", pairs}});
        }
    }
    if (!classes.empty()) root["classes"] = classes;
    return root.dump(2);
}

std::string bundle_to_json(const ZetaBundle& bundle, const std::string& variable) {
    json root;
    root["variable"] = variable;
    root["entries"] = json::array();
    for (const auto& [twist, value] : bundle.entries()) {
        // num/den in the canonical grammar; den of the zero function is 1.
        root["entries"].push_back(
            {{"twist", twist},
             {"num", format_rational_function(RationalFunction(value.num()), RenderMode::Canonical, variable)},
             {"den", format_rational_function(RationalFunction(value.den()), RenderMode::Canonical, variable)}});
    }
    return root.dump(2);
}

} // namespace suspzeta
