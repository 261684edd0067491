#include "tswarp/dataset_io.hpp"

#include <fstream>

#include <json.hpp>

namespace tswarp {

namespace {

using nlohmann::json;

std::vector<double> parse_points(const json& jpoints, std::size_t dim, std::size_t series_idx) {
    if (!jpoints.is_array() || jpoints.empty()) {
        throw ParseError("series " + std::to_string(series_idx) +
                         ": \"points\" must be a nonempty array");
    }
    std::vector<double> values;
    values.reserve(jpoints.size() * dim);
    for (std::size_t p = 0; p < jpoints.size(); ++p) {
        const json& jp = jpoints[p];
        if (!jp.is_array()) {
            throw ParseError("series " + std::to_string(series_idx) + ", point " +
                             std::to_string(p) + ": expected an array of numbers");
        }
        if (jp.size() != dim) {
            throw ValidationError("series " + std::to_string(series_idx) + ", point " +
                                  std::to_string(p) + ": has " + std::to_string(jp.size()) +
                                  " components, dataset dim is " + std::to_string(dim));
        }
        for (std::size_t j = 0; j < dim; ++j) {
            if (!jp[j].is_number()) {
                throw ParseError("series " + std::to_string(series_idx) + ", point " +
                                 std::to_string(p) + ", component " + std::to_string(j) +
                                 ": not a finite number");
            }
            values.push_back(jp[j].get<double>());
        }
    }
    return values;
}

}  // namespace

Dataset load_dataset(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path.string() + " for reading");

    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(path.string() + ": " + e.what());
    }

    if (!doc.is_object() || !doc.contains("dim") || !doc.contains("series")) {
        throw ParseError(path.string() + ": expected an object with \"dim\" and \"series\"");
    }
    if (!doc["dim"].is_number_unsigned() || doc["dim"].get<std::size_t>() == 0) {
        throw ParseError(path.string() + ": \"dim\" must be a positive integer");
    }
    const auto dim = doc["dim"].get<std::size_t>();

    std::map<std::string, std::string> meta;
    if (doc.contains("meta")) {
        if (!doc["meta"].is_object()) throw ParseError(path.string() + ": \"meta\" must be an object");
        for (const auto& [key, val] : doc["meta"].items()) {
            if (!val.is_string()) {
                throw ParseError(path.string() + ": meta value for \"" + key +
                                 "\" must be a string");
            }
            meta.emplace(key, val.get<std::string>());
        }
    }

    const json& jser = doc["series"];
    if (!jser.is_array() || jser.empty()) {
        throw ValidationError(path.string() + ": \"series\" must be a nonempty array");
    }

    std::vector<TimeSeries> series;
    series.reserve(jser.size());
    for (std::size_t s = 0; s < jser.size(); ++s) {
        const json& js = jser[s];
        if (!js.is_object() || !js.contains("points")) {
            throw ParseError("series " + std::to_string(s) + ": expected an object with \"points\"");
        }
        std::optional<std::string> label;
        if (js.contains("label")) {
            if (!js["label"].is_string()) {
                throw ParseError("series " + std::to_string(s) + ": \"label\" must be a string");
            }
            label = js["label"].get<std::string>();
        }
        try {
            series.emplace_back(parse_points(js["points"], dim, s), dim, std::move(label));
        } catch (const ValidationError& e) {
            throw ValidationError(path.string() + ": " + e.what());
        }
    }
    try {
        return Dataset(std::move(series), std::move(meta));
    } catch (const ValidationError& e) {
        throw ValidationError(path.string() + ": " + e.what());
    }
}

void save_dataset(const Dataset& ds, const std::filesystem::path& path) {
    json doc;
    doc["dim"] = ds.dim();
    doc["meta"] = json::object();
    for (const auto& [key, val] : ds.meta()) doc["meta"][key] = val;

    json jser = json::array();
    for (const TimeSeries& s : ds.series()) {
        json js = json::object();
        if (s.label()) js["label"] = *s.label();
        json jpoints = json::array();
        for (std::size_t i = 0; i < s.length(); ++i) {
            json jp = json::array();
            for (std::size_t j = 0; j < s.dim(); ++j) jp.push_back(s.at(i, j));
            jpoints.push_back(std::move(jp));
        }
        js["points"] = std::move(jpoints);
        jser.push_back(std::move(js));
    }
    doc["series"] = std::move(jser);

    std::ofstream out(path);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    out << doc.dump() << '\n';
    if (!out) throw IoError("write failed for " + path.string());
}

}  // namespace tswarp
