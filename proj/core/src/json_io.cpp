#include "lattica/json_io.hpp"

#include <json.hpp>

namespace lattica {

std::string to_json(const Structure& s) {
    const FiniteLattice& L = lattice_of(s);
    nlohmann::ordered_json doc;
    doc["n"] = L.size();
    auto covers = nlohmann::ordered_json::array();
    for (auto [x, y] : L.covers()) covers.push_back({x, y});
    doc["covers"] = std::move(covers);
    if (!L.labels().empty()) doc["labels"] = L.labels();
    if (const auto* inv = involution_of(s)) doc["involution"] = *inv;
    if (const auto* weak = weak_of(s)) doc["brouwer"] = *weak;
    return doc.dump(2) + "\n";
}

Structure load_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw JsonError(std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object()) throw JsonError("document must be a JSON object");

    for (const auto& [key, value] : doc.items())
        if (key != "n" && key != "covers" && key != "labels" && key != "involution" &&
            key != "brouwer")
            throw JsonError("unknown field \"" + key + "\"");

    if (!doc.contains("n") || !doc["n"].is_number_integer())
        throw JsonError("field \"n\" must be an integer");
    if (!doc.contains("covers") || !doc["covers"].is_array())
        throw JsonError("field \"covers\" must be an array of pairs");

    const int n = doc["n"].get<int>();
    std::vector<std::pair<int, int>> covers;
    for (const auto& pair : doc["covers"]) {
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() ||
            !pair[1].is_number_integer())
            throw JsonError("each cover must be a pair of integers");
        covers.emplace_back(pair[0].get<int>(), pair[1].get<int>());
    }
    FiniteLattice L = FiniteLattice::from_covers(n, covers);

    if (doc.contains("labels")) {
        if (!doc["labels"].is_array()) throw JsonError("field \"labels\" must be an array");
        std::vector<std::string> labels;
        for (const auto& l : doc["labels"]) {
            if (!l.is_string()) throw JsonError("labels must be strings");
            labels.push_back(l.get<std::string>());
        }
        L.set_labels(std::move(labels));
    }

    if (doc.contains("brouwer") && !doc.contains("involution"))
        throw JsonError("\"brouwer\" requires \"involution\"");
    if (!doc.contains("involution")) return L;

    auto read_map = [&](const char* key) {
        if (!doc[key].is_array()) throw JsonError(std::string("field \"") + key + "\" must be an array");
        std::vector<int> m;
        for (const auto& v : doc[key]) {
            if (!v.is_number_integer()) throw JsonError(std::string(key) + " entries must be integers");
            m.push_back(v.get<int>());
        }
        return m;
    };
    std::vector<int> inv = read_map("involution");
    std::optional<std::vector<int>> weak;
    if (doc.contains("brouwer")) weak = read_map("brouwer");
    return validate_involution(std::move(L), std::move(inv), std::move(weak));
}

}  // namespace lattica
