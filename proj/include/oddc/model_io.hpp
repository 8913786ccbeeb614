#pragma once

#include <array>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "oddc/model.hpp"

namespace oddc {

/// Probability-space form of a model file: what the JSON document holds
/// before conversion to log-odds.
struct ModelDocument {
    struct AttributeCpt {
        std::string name;
        std::vector<std::string> values;
        std::vector<double> given_c;
        std::vector<double> given_cbar;
    };

    std::string class_name;
    std::array<std::string, 2> class_values;
    double prior = 0.5; // Pr(c)
    std::vector<AttributeCpt> attributes;
};

/// Parse the JSON text form (ParseError on malformed JSON or wrong shape).
ModelDocument parse_model_document(const std::string& text);
ModelDocument load_model_document(const std::filesystem::path& path);
std::string to_json(const ModelDocument& doc);

/// Probability-space validation: shapes, ranges, CPT rows summing to 1
/// within 1e-6, and no value with zero probability under both classes.
ValidationResult validate_document(const ModelDocument& doc);

/// Convert to log-odds under the chosen zero policy; throws
/// ValidationError (listing every issue) if the document is invalid.
NaiveBayesModel to_model(const ModelDocument& doc, ZeroPolicy policy = ZeroPolicy::clamp);

NaiveBayesModel load_model(const std::filesystem::path& path,
                           ZeroPolicy policy = ZeroPolicy::clamp);

/// Header row plus string-valued records.
struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

/// Minimal CSV: comma-separated, optional double-quoting, one header row.
/// ParseError (with line number) on ragged rows or bad quoting.
CsvTable read_csv(std::istream& in);
CsvTable read_csv_file(const std::filesystem::path& path);

/// Maximum-likelihood CPTs with additive smoothing per cell; value sets in
/// first-occurrence order; the class value seen first becomes c. Errors:
/// unknown class column, a class column without exactly 2 observed values,
/// or an empty table.
ModelDocument learn_document(const CsvTable& table, const std::string& class_column,
                             double smoothing);

NaiveBayesModel learn_from_csv(const CsvTable& table, const std::string& class_column,
                               double smoothing, ZeroPolicy policy = ZeroPolicy::clamp);

} // namespace oddc
