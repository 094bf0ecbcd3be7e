#include "latmeas/model_io.hpp"

#include <fstream>
#include <set>
#include <unordered_map>

#include "latmeas/errors.hpp"

namespace latmeas {

namespace {

using nlohmann::json;

void require(bool cond, const std::string& message) {
    if (!cond) throw ParseError(message);
}

std::vector<std::string> parse_string_array(const json& value, const std::string& field) {
    require(value.is_array(), "field '" + field + "' must be an array of strings");
    std::vector<std::string> out;
    out.reserve(value.size());
    for (const json& item : value) {
        require(item.is_string(), "field '" + field + "' must contain only strings");
        out.push_back(item.get<std::string>());
    }
    return out;
}

int resolve_element(const json& key_or_index, const std::string& field,
                    const std::unordered_map<std::string, int>& by_name, int n) {
    if (key_or_index.is_number_integer()) {
        const int idx = key_or_index.get<int>();
        if (idx < 0 || idx >= n) {
            throw ReferentialError("field '" + field + "' references index " + std::to_string(idx) +
                                   ", lattice has " + std::to_string(n) + " elements");
        }
        return idx;
    }
    if (key_or_index.is_string()) {
        const std::string text = key_or_index.get<std::string>();
        auto it = by_name.find(text);
        if (it != by_name.end()) return it->second;
        // Fall back to a numeric string.
        try {
            size_t used = 0;
            const int idx = std::stoi(text, &used);
            if (used == text.size() && idx >= 0 && idx < n) return idx;
        } catch (const std::exception&) {
        }
        throw ReferentialError("field '" + field + "' references unknown element '" + text + "'");
    }
    throw ParseError("field '" + field + "' must hold element names or indices");
}

} // namespace

LoadedModel parse_model(const json& doc) {
    require(doc.is_object(), "model file must be a JSON object");
    const bool has_names = doc.contains("names");
    const bool has_powerset = doc.contains("powerset");
    require(has_names != has_powerset, "model file needs exactly one of 'names' or 'powerset'");

    LoadedModel model;
    if (has_powerset) {
        const std::vector<std::string> labels = parse_string_array(doc.at("powerset"), "powerset");
        std::set<std::string> unique(labels.begin(), labels.end());
        require(unique.size() == labels.size(), "duplicate label in 'powerset'");
        require(!doc.contains("covers"), "'covers' cannot be combined with 'powerset'");
        model.lattice = std::make_shared<FiniteLattice>(build_powerset(labels));
    } else {
        std::vector<std::string> names = parse_string_array(doc.at("names"), "names");
        std::set<std::string> unique(names.begin(), names.end());
        require(unique.size() == names.size(), "duplicate name in 'names'");
        std::vector<std::pair<int, int>> covers;
        if (doc.contains("covers")) {
            const json& raw = doc.at("covers");
            require(raw.is_array(), "field 'covers' must be an array of index pairs");
            for (const json& pair : raw) {
                require(pair.is_array() && pair.size() == 2 && pair[0].is_number_integer() && pair[1].is_number_integer(),
                        "each cover must be a pair of element indices");
                covers.emplace_back(pair[0].get<int>(), pair[1].get<int>());
            }
        }
        model.lattice = std::make_shared<FiniteLattice>(build_from_covers(std::move(names), covers));
    }
    const FiniteLattice& lat = *model.lattice;
    const int n = lat.size();

    require(doc.contains("complement"), "model file needs a 'complement' table");
    const json& comp_raw = doc.at("complement");
    require(comp_raw.is_array(), "field 'complement' must be an array of element indices");
    std::vector<int> table;
    table.reserve(comp_raw.size());
    for (const json& entry : comp_raw) {
        require(entry.is_number_integer(), "field 'complement' must contain only element indices");
        table.push_back(entry.get<int>());
    }
    model.complement = std::make_shared<ComplementMap>(make_complement(model.lattice, std::move(table)));

    std::unordered_map<std::string, int> by_name;
    for (int i = 0; i < n; ++i) by_name.emplace(lat.name(i), i);

    std::vector<int> generators;
    if (doc.contains("generators")) {
        const json& raw = doc.at("generators");
        require(raw.is_array(), "field 'generators' must be an array");
        for (const json& g : raw) generators.push_back(resolve_element(g, "generators", by_name, n));
    } else {
        generators.resize(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) generators[static_cast<size_t>(i)] = i;
    }
    model.algebra = std::make_shared<SigmaAlgebra>(generate_algebra(model.lattice, model.complement, std::move(generators)));

    if (doc.contains("measure")) {
        const json& raw = doc.at("measure");
        require(raw.is_object(), "field 'measure' must map elements to rational strings");
        std::map<int, Rat> values;
        for (auto it = raw.begin(); it != raw.end(); ++it) {
            const int element = resolve_element(json(it.key()), "measure", by_name, n);
            Rat value;
            if (it.value().is_string()) {
                value = parse_rational(it.value().get<std::string>());
            } else if (it.value().is_number_integer()) {
                value = Rat(it.value().get<long long>(), 1);
            } else {
                throw ParseError("measure value for '" + it.key() + "' must be a rational string or integer");
            }
            if (!values.emplace(element, value).second) {
                throw ParseError("duplicate measure entry for element '" + it.key() + "'");
            }
        }
        model.measure = make_measure(model.algebra, values, MeasureKind::signed_candidate);
    }
    return model;
}

LoadedModel parse_model_text(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("model file is not valid JSON: ") + e.what());
    }
    return parse_model(doc);
}

LoadedModel load_model(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open model file '" + path + "'");
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse_model_text(text);
}

json serialize_model(const LoadedModel& model) {
    const FiniteLattice& lat = *model.lattice;
    const int n = lat.size();

    json doc = json::object();
    doc["names"] = lat.names();
    json covers = json::array();
    for (const auto& [lo, hi] : lat.cover_pairs()) {
        covers.push_back(json::array({lo, hi}));
    }
    doc["covers"] = covers;
    doc["complement"] = model.complement->table;

    bool default_generators = static_cast<int>(model.algebra->generators().size()) == n;
    if (default_generators) {
        for (int i = 0; i < n && default_generators; ++i) {
            if (model.algebra->generators()[static_cast<size_t>(i)] != i) default_generators = false;
        }
    }
    if (!default_generators) doc["generators"] = model.algebra->generators();

    if (model.measure) {
        json values = json::object();
        const std::vector<int>& members = model.algebra->members();
        for (size_t i = 0; i < members.size(); ++i) {
            values[lat.name(members[i])] = to_string(model.measure->value_at_position(static_cast<int>(i)));
        }
        doc["measure"] = values;
    }
    return doc;
}

std::string serialize_model_text(const LoadedModel& model) {
    return serialize_model(model).dump(2) + "\n";
}

} // namespace latmeas
