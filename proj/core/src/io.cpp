#include "czeta/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "czeta/errors.hpp"

namespace czeta {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw parse_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw parse_error("cannot open file for writing: " + path);
    out << text;
    out.flush();
    if (!out)
        throw parse_error("write failed: " + path);
}

std::string fmt17(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

} // namespace

MeasureDocument to_document(const CrystallineMeasure& m) {
    MeasureDocument doc;
    doc.n = m.N;
    doc.coefficients = m.c;
    return doc;
}

CrystallineMeasure from_document(const MeasureDocument& doc) {
    if (doc.n <= 0)
        throw domain_error("measure document: n must be positive");
    if (doc.coefficients.size() !=
        static_cast<size_t>(doc.n) * static_cast<size_t>(doc.n))
        throw domain_error("measure document: coefficients must have length n^2");
    CrystallineMeasure m;
    m.N = doc.n;
    m.c = doc.coefficients;
    return m;
}

std::string serialize_measure(const MeasureDocument& doc) {
    nlohmann::json j;
    j["n"] = doc.n;
    j["coefficients"] = doc.coefficients;
    return j.dump(2) + "\n";
}

MeasureDocument parse_measure(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("measure document: ") + e.what());
    }
    MeasureDocument doc;
    try {
        doc.n = j.at("n").get<int>();
        doc.coefficients = j.at("coefficients").get<std::vector<double>>();
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("measure document: ") + e.what());
    }
    return doc;
}

void save_measure(const MeasureDocument& doc, const std::string& path) {
    write_file(path, serialize_measure(doc));
}

MeasureDocument load_measure(const std::string& path) {
    return parse_measure(read_file(path));
}

std::string serialize_zeros(const std::vector<ZeroRecord>& zeros) {
    std::ostringstream os;
    os << "# re im multiplicity residual\n";
    for (const ZeroRecord& rec : zeros) {
        os << fmt17(rec.location.real()) << ' ' << fmt17(rec.location.imag())
           << ' ' << rec.multiplicity << ' ' << fmt17(rec.residual) << '\n';
    }
    return os.str();
}

std::vector<ZeroRecord> parse_zeros(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    long ln = 0;
    std::vector<ZeroRecord> out;
    while (std::getline(in, line)) {
        ++ln;
        size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream ls(line);
        double re, im, residual;
        int mult;
        if (!(ls >> re >> im >> mult >> residual))
            throw parse_error("zero document: malformed record", ln);
        std::string extra;
        if (ls >> extra)
            throw parse_error("zero document: trailing data", ln);
        if (mult < 1)
            throw parse_error("zero document: multiplicity must be positive", ln);
        ZeroRecord rec;
        rec.location = cdouble(re, im);
        rec.multiplicity = mult;
        rec.residual = residual;
        out.push_back(rec);
    }
    return out;
}

void save_zeros(const std::vector<ZeroRecord>& zeros, const std::string& path) {
    write_file(path, serialize_zeros(zeros));
}

std::vector<ZeroRecord> load_zeros(const std::string& path) {
    return parse_zeros(read_file(path));
}

std::string serialize_ordinates(const std::vector<double>& ordinates) {
    std::ostringstream os;
    for (double t : ordinates) os << fmt17(t) << '\n';
    return os.str();
}

std::vector<double> parse_ordinates(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    long ln = 0;
    std::vector<double> out;
    double prev = 0.0;
    while (std::getline(in, line)) {
        ++ln;
        size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream ls(line);
        double v;
        if (!(ls >> v))
            throw parse_error("ordinate list: malformed number", ln);
        std::string extra;
        if (ls >> extra)
            throw parse_error("ordinate list: trailing data", ln);
        if (!(v > 0.0))
            throw parse_error("ordinate list: ordinates must be positive", ln);
        if (!(v > prev))
            throw parse_error("ordinate list: ordinates must be strictly ascending", ln);
        out.push_back(v);
        prev = v;
    }
    if (out.empty())
        throw parse_error("ordinate list: no ordinates found");
    return out;
}

void save_ordinates(const std::vector<double>& ordinates, const std::string& path) {
    write_file(path, serialize_ordinates(ordinates));
}

RiemannSequenceCandidate load_ordinates(const std::string& path) {
    return sequence_from_ordinates(parse_ordinates(read_file(path)));
}

} // namespace czeta
