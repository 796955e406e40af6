#pragma once

#include <string>
#include <vector>

#include "czeta/crystal.hpp"
#include "czeta/sequence.hpp"
#include "czeta/zerofind.hpp"

namespace czeta {

// Measure document: JSON {"n": N, "coefficients": [c_0, ..., c_{N^2-1}]}.
struct MeasureDocument {
    int n = 0;
    std::vector<double> coefficients;
};

MeasureDocument to_document(const CrystallineMeasure& m);
CrystallineMeasure from_document(const MeasureDocument& doc);

std::string serialize_measure(const MeasureDocument& doc);
MeasureDocument parse_measure(const std::string& text);
void save_measure(const MeasureDocument& doc, const std::string& path);
MeasureDocument load_measure(const std::string& path);

// Zero document: '#' comment lines plus one "re im multiplicity residual"
// record per line, 17 significant digits.
std::string serialize_zeros(const std::vector<ZeroRecord>& zeros);
std::vector<ZeroRecord> parse_zeros(const std::string& text);
void save_zeros(const std::vector<ZeroRecord>& zeros, const std::string& path);
std::vector<ZeroRecord> load_zeros(const std::string& path);

// Ordinate list: plain text, one ascending positive real per line.
std::string serialize_ordinates(const std::vector<double>& ordinates);
std::vector<double> parse_ordinates(const std::string& text);
void save_ordinates(const std::vector<double>& ordinates, const std::string& path);

// Load an ordinate file as a candidate sequence with the default tail model
// attached above the last ordinate.
RiemannSequenceCandidate load_ordinates(const std::string& path);

} // namespace czeta
