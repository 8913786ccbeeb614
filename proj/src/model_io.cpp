#include "oddc/model_io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>

#include <json.hpp>

#include "oddc/errors.hpp"

namespace oddc {

using nlohmann::json;

namespace {

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace

ModelDocument parse_model_document(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& err) {
        throw ParseError(err.what());
    }

    try {
        ModelDocument doc;
        const auto& cls = j.at("class");
        doc.class_name = cls.at("name").get<std::string>();
        const auto& values = cls.at("values");
        if (!values.is_array() || values.size() != 2)
            throw ParseError("class.values must list exactly two values");
        doc.class_values = {values[0].get<std::string>(), values[1].get<std::string>()};
        doc.prior = cls.at("prior").get<double>();

        for (const auto& attr : j.at("attributes")) {
            ModelDocument::AttributeCpt cpt;
            cpt.name = attr.at("name").get<std::string>();
            for (const auto& v : attr.at("values")) cpt.values.push_back(v.get<std::string>());
            const auto& table = attr.at("cpt");
            cpt.given_c = table.at("given_c").get<std::vector<double>>();
            cpt.given_cbar = table.at("given_cbar").get<std::vector<double>>();
            doc.attributes.push_back(std::move(cpt));
        }
        return doc;
    } catch (const json::exception& err) {
        throw ParseError(std::string("model document: ") + err.what());
    }
}

ModelDocument load_model_document(const std::filesystem::path& path) {
    return parse_model_document(read_file(path));
}

std::string to_json(const ModelDocument& doc) {
    json j;
    j["class"] = {{"name", doc.class_name},
                  {"values", {doc.class_values[0], doc.class_values[1]}},
                  {"prior", doc.prior}};
    j["attributes"] = json::array();
    for (const auto& attr : doc.attributes) {
        j["attributes"].push_back({{"name", attr.name},
                                   {"values", attr.values},
                                   {"cpt", {{"given_c", attr.given_c},
                                            {"given_cbar", attr.given_cbar}}}});
    }
    return j.dump(2) + "\n";
}

ValidationResult validate_document(const ModelDocument& doc) {
    ValidationResult r;
    auto issue = [&r](std::string msg) {
        r.ok = false;
        r.issues.push_back(std::move(msg));
    };

    if (doc.class_values[0].empty() || doc.class_values[1].empty() ||
        doc.class_values[0] == doc.class_values[1])
        issue("class must have two distinct non-empty values");
    if (!(doc.prior >= 0.0 && doc.prior <= 1.0))
        issue("class prior must lie in [0, 1]");

    std::map<std::string, int> names;
    for (const auto& attr : doc.attributes) {
        if (++names[attr.name] == 2) issue("duplicate attribute name '" + attr.name + "'");
        if (attr.values.empty()) issue("attribute '" + attr.name + "' has no values");
        std::map<std::string, int> vnames;
        for (const auto& v : attr.values)
            if (++vnames[v] == 2)
                issue("attribute '" + attr.name + "' has duplicate value '" + v + "'");
        if (attr.given_c.size() != attr.values.size() ||
            attr.given_cbar.size() != attr.values.size()) {
            issue("attribute '" + attr.name + "': CPT rows must have one entry per value");
            continue;
        }
        double sum_c = 0.0, sum_cbar = 0.0;
        for (std::size_t v = 0; v < attr.values.size(); ++v) {
            double pc = attr.given_c[v];
            double pn = attr.given_cbar[v];
            if (!(pc >= 0.0 && pc <= 1.0) || !(pn >= 0.0 && pn <= 1.0))
                issue("attribute '" + attr.name + "', value '" + attr.values[v] +
                      "': probabilities must lie in [0, 1]");
            else if (pc == 0.0 && pn == 0.0)
                issue("attribute '" + attr.name + "', value '" + attr.values[v] +
                      "': zero probability under both classes (value is unrealizable)");
            sum_c += pc;
            sum_cbar += pn;
        }
        if (std::abs(sum_c - 1.0) > 1e-6)
            issue("attribute '" + attr.name + "': given_c row sums to " +
                  std::to_string(sum_c));
        if (std::abs(sum_cbar - 1.0) > 1e-6)
            issue("attribute '" + attr.name + "': given_cbar row sums to " +
                  std::to_string(sum_cbar));
    }
    return r;
}

namespace {

double prior_log_odds_of(double p, ZeroPolicy policy) {
    if (policy == ZeroPolicy::clamp)
        p = std::clamp(p, kProbEpsilon, 1.0 - kProbEpsilon);
    if (p == 0.0) return -std::numeric_limits<double>::infinity();
    if (p == 1.0) return std::numeric_limits<double>::infinity();
    return std::log(p / (1.0 - p));
}

} // namespace

NaiveBayesModel to_model(const ModelDocument& doc, ZeroPolicy policy) {
    if (auto check = validate_document(doc); !check.ok) {
        std::string msg = "invalid model document:";
        for (const auto& s : check.issues) msg += "\n  " + s;
        throw ValidationError(msg);
    }

    NaiveBayesModel m;
    m.class_name = doc.class_name;
    m.class_values = doc.class_values;
    m.prior_log_odds = prior_log_odds_of(doc.prior, policy);
    for (const auto& attr : doc.attributes) {
        m.attributes.push_back({attr.name, attr.values});
        std::vector<double> row(attr.values.size());
        for (std::size_t v = 0; v < row.size(); ++v)
            row[v] = weight_of_evidence(attr.given_c[v], attr.given_cbar[v], policy);
        m.weights.push_back(std::move(row));
    }

    if (auto check = validate_model(m, policy); !check.ok) {
        std::string msg = "model rejected after conversion:";
        for (const auto& s : check.issues) msg += "\n  " + s;
        throw ValidationError(msg);
    }
    return m;
}

NaiveBayesModel load_model(const std::filesystem::path& path, ZeroPolicy policy) {
    return to_model(load_model_document(path), policy);
}

namespace {

std::vector<std::string> parse_csv_record(const std::string& line, std::size_t lineno) {
    std::vector<std::string> fields;
    std::string field;
    bool quoted = false;
    std::size_t i = 0;
    while (i < line.size()) {
        char ch = line[i];
        if (quoted) {
            if (ch == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    field += '"';
                    i += 2;
                    continue;
                }
                quoted = false;
                ++i;
            } else {
                field += ch;
                ++i;
            }
        } else if (ch == '"' && field.empty()) {
            quoted = true;
            ++i;
        } else if (ch == ',') {
            fields.push_back(std::move(field));
            field.clear();
            ++i;
        } else {
            field += ch;
            ++i;
        }
    }
    if (quoted) throw ParseError("unterminated quote", lineno);
    fields.push_back(std::move(field));
    return fields;
}

} // namespace

CsvTable read_csv(std::istream& in) {
    CsvTable table;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        auto fields = parse_csv_record(line, lineno);
        if (table.header.empty()) {
            table.header = std::move(fields);
        } else {
            if (fields.size() != table.header.size())
                throw ParseError("row has " + std::to_string(fields.size()) +
                                 " fields, header has " + std::to_string(table.header.size()),
                                 lineno);
            table.rows.push_back(std::move(fields));
        }
    }
    if (table.header.empty()) throw ParseError("empty CSV: missing header row");
    return table;
}

CsvTable read_csv_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path.string() + "'");
    return read_csv(in);
}

ModelDocument learn_document(const CsvTable& table, const std::string& class_column,
                             double smoothing) {
    if (smoothing < 0.0) throw std::invalid_argument("smoothing must be >= 0");
    if (table.rows.empty()) throw ValidationError("dataset has no data rows");

    std::size_t class_idx = table.header.size();
    for (std::size_t i = 0; i < table.header.size(); ++i)
        if (table.header[i] == class_column) class_idx = i;
    if (class_idx == table.header.size())
        throw ValidationError("class column '" + class_column + "' not found");

    // Value collection pass, first-occurrence order.
    std::vector<std::string> class_values;
    auto class_of = [&](const std::string& v) -> std::size_t {
        for (std::size_t i = 0; i < class_values.size(); ++i)
            if (class_values[i] == v) return i;
        class_values.push_back(v);
        return class_values.size() - 1;
    };
    std::vector<std::vector<std::string>> attr_values(table.header.size());
    std::vector<std::vector<std::array<std::uint64_t, 2>>> counts(table.header.size());
    std::array<std::uint64_t, 2> class_counts{0, 0};

    for (const auto& row : table.rows) {
        std::size_t cls = class_of(row[class_idx]);
        if (cls >= 2)
            throw ValidationError("class column '" + class_column +
                                  "' has more than two values ('" + row[class_idx] +
                                  "' is the third)");
        ++class_counts[cls];
        for (std::size_t col = 0; col < row.size(); ++col) {
            if (col == class_idx) continue;
            auto& values = attr_values[col];
            std::size_t v = 0;
            for (; v < values.size(); ++v)
                if (values[v] == row[col]) break;
            if (v == values.size()) {
                values.push_back(row[col]);
                counts[col].push_back({0, 0});
            }
            ++counts[col][v][cls];
        }
    }
    if (class_values.size() != 2)
        throw ValidationError("class column '" + class_column + "' has " +
                              std::to_string(class_values.size()) +
                              " observed values; exactly 2 are required");

    ModelDocument doc;
    doc.class_name = class_column;
    doc.class_values = {class_values[0], class_values[1]};
    double total = static_cast<double>(table.rows.size());
    doc.prior = (class_counts[0] + smoothing) / (total + 2.0 * smoothing);

    for (std::size_t col = 0; col < table.header.size(); ++col) {
        if (col == class_idx) continue;
        ModelDocument::AttributeCpt cpt;
        cpt.name = table.header[col];
        cpt.values = attr_values[col];
        double card = static_cast<double>(cpt.values.size());
        for (std::size_t v = 0; v < cpt.values.size(); ++v) {
            cpt.given_c.push_back((counts[col][v][0] + smoothing) /
                                  (class_counts[0] + smoothing * card));
            cpt.given_cbar.push_back((counts[col][v][1] + smoothing) /
                                     (class_counts[1] + smoothing * card));
        }
        doc.attributes.push_back(std::move(cpt));
    }
    return doc;
}

NaiveBayesModel learn_from_csv(const CsvTable& table, const std::string& class_column,
                               double smoothing, ZeroPolicy policy) {
    return to_model(learn_document(table, class_column, smoothing), policy);
}

} // namespace oddc
