#include "wrom/results.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace wrom {

namespace {

// Shortest representation that round-trips a double exactly.
std::string fmt_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    double back;
    std::sscanf(buf, "%lf", &back);
    if (back == v) {
        for (int prec = 1; prec < 17; ++prec) {
            char shorter[32];
            std::snprintf(shorter, sizeof(shorter), "%.*g", prec, v);
            std::sscanf(shorter, "%lf", &back);
            if (back == v) return shorter;
        }
    }
    return buf;
}

const char* kCsvHeader =
    "scheme,model,attack,l,t,k,modbits,k1,trials,successes,empirical_rate,"
    "theoretical_bound,wilson_lo,wilson_hi,seed,wall_ms";

nlohmann::ordered_json to_json(const ExperimentResult& r) {
    nlohmann::ordered_json j;
    j["scheme"] = r.scheme;
    j["model"] = r.model;
    j["attack"] = r.attack;
    j["params"] = {{"l", r.l}, {"t", r.t}, {"k", r.k},
                   {"modbits", r.modbits}, {"k1", r.k1}};
    j["trials"] = r.trials;
    j["successes"] = r.successes;
    j["empirical_rate"] = r.empirical_rate;
    j["theoretical_bound"] = r.theoretical_bound;
    j["wilson_lo"] = r.wilson_lo;
    j["wilson_hi"] = r.wilson_hi;
    j["seed"] = r.seed;
    j["wall_ms"] = r.wall_ms;
    return j;
}

ExperimentResult from_json(const nlohmann::json& j) {
    ExperimentResult r;
    r.scheme = j.at("scheme").get<std::string>();
    r.model = j.at("model").get<std::string>();
    r.attack = j.at("attack").get<std::string>();
    const auto& p = j.at("params");
    r.l = p.at("l").get<unsigned>();
    r.t = p.at("t").get<unsigned>();
    r.k = p.at("k").get<unsigned>();
    r.modbits = p.at("modbits").get<unsigned>();
    r.k1 = p.at("k1").get<unsigned>();
    r.trials = j.at("trials").get<std::uint64_t>();
    r.successes = j.at("successes").get<std::uint64_t>();
    r.empirical_rate = j.at("empirical_rate").get<double>();
    r.theoretical_bound = j.at("theoretical_bound").get<double>();
    r.wilson_lo = j.at("wilson_lo").get<double>();
    r.wilson_hi = j.at("wilson_hi").get<double>();
    r.seed = j.at("seed").get<std::uint64_t>();
    r.wall_ms = j.at("wall_ms").get<std::uint64_t>();
    return r;
}

}  // namespace

ResultFormat parse_format(const std::string& name) {
    if (name == "json") return ResultFormat::Json;
    if (name == "csv") return ResultFormat::Csv;
    throw std::invalid_argument("unknown result format: " + name);
}

std::string format_results(const std::vector<ExperimentResult>& results,
                           ResultFormat format) {
    if (format == ResultFormat::Json) {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& r : results) arr.push_back(to_json(r));
        return arr.dump(2) + "\n";
    }
    std::string out = kCsvHeader;
    out += "\n";
    for (const auto& r : results) {
        std::ostringstream line;
        line << r.scheme << ',' << r.model << ',' << r.attack << ',' << r.l
             << ',' << r.t << ',' << r.k << ',' << r.modbits << ',' << r.k1
             << ',' << r.trials << ',' << r.successes << ','
             << fmt_double(r.empirical_rate) << ','
             << fmt_double(r.theoretical_bound) << ','
             << fmt_double(r.wilson_lo) << ',' << fmt_double(r.wilson_hi)
             << ',' << r.seed << ',' << r.wall_ms << '\n';
        out += line.str();
    }
    return out;
}

void emit_results(const std::vector<ExperimentResult>& results,
                  ResultFormat format, const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open for writing: " + path);
    f << format_results(results, format);
    if (!f) throw std::runtime_error("write failed: " + path);
}

std::vector<ExperimentResult> parse_results(const std::string& path,
                                            ResultFormat format) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open for reading: " + path);
    std::vector<ExperimentResult> out;

    if (format == ResultFormat::Json) {
        nlohmann::json arr = nlohmann::json::parse(f);
        for (const auto& j : arr) out.push_back(from_json(j));
        return out;
    }

    std::string line;
    if (!std::getline(f, line) || line != kCsvHeader)
        throw std::runtime_error("bad CSV header in " + path);
    while (std::getline(f, line)) {
        if (line.empty()) continue;
        std::istringstream in(line);
        std::string field;
        std::vector<std::string> fields;
        while (std::getline(in, field, ',')) fields.push_back(field);
        if (fields.size() != 16)
            throw std::runtime_error("bad CSV row in " + path);
        ExperimentResult r;
        r.scheme = fields[0];
        r.model = fields[1];
        r.attack = fields[2];
        r.l = static_cast<unsigned>(std::stoul(fields[3]));
        r.t = static_cast<unsigned>(std::stoul(fields[4]));
        r.k = static_cast<unsigned>(std::stoul(fields[5]));
        r.modbits = static_cast<unsigned>(std::stoul(fields[6]));
        r.k1 = static_cast<unsigned>(std::stoul(fields[7]));
        r.trials = std::stoull(fields[8]);
        r.successes = std::stoull(fields[9]);
        r.empirical_rate = std::stod(fields[10]);
        r.theoretical_bound = std::stod(fields[11]);
        r.wilson_lo = std::stod(fields[12]);
        r.wilson_hi = std::stod(fields[13]);
        r.seed = std::stoull(fields[14]);
        r.wall_ms = std::stoull(fields[15]);
        out.push_back(r);
    }
    return out;
}

}  // namespace wrom
