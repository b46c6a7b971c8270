#include "qss/harness/report.hpp"

#include <cstdio>
#include <fstream>

#include <json.hpp>

#include "qss/errors.hpp"

namespace qss::harness {

namespace {

const char* variant_name(protocol::Variant v) {
    return v == protocol::Variant::Original ? "original" : "secure";
}

protocol::Variant parse_variant(const std::string& s) {
    if (s == "original") return protocol::Variant::Original;
    if (s == "secure") return protocol::Variant::Secure;
    throw ValidationError("unknown variant: " + s);
}

adversary::StrategyKind parse_strategy(const std::string& s) {
    using adversary::StrategyKind;
    for (StrategyKind k :
         {StrategyKind::HonestNull, StrategyKind::BellInterceptResend,
          StrategyKind::SameObservableMeasureResend, StrategyKind::RandomBasisMeasureResend,
          StrategyKind::EntanglingProbe, StrategyKind::CrossCopySwap})
        if (s == adversary::to_string(k)) return k;
    throw ValidationError("unknown strategy: " + s);
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

} // namespace

ReportFormat parse_format(const std::string& name) {
    if (name == "csv") return ReportFormat::Csv;
    if (name == "json") return ReportFormat::Json;
    throw ValidationError("unknown report format: " + name);
}

std::string render_csv(const std::vector<MetricsReport>& reports) {
    std::string out =
        "variant,strategy,n,p,m,trials,detection_rate,detection_ci_low,"
        "detection_ci_high,cheater_accuracy,reconstruction_rate,epsilon_hat,seed\n";
    for (const MetricsReport& r : reports) {
        out += variant_name(r.variant);
        out += ",";
        out += adversary::to_string(r.strategy);
        out += "," + std::to_string(r.copies);
        out += "," + fmt(r.check_rate);
        out += "," + std::to_string(r.attacked);
        out += "," + std::to_string(r.trials);
        out += "," + fmt(r.detection_rate);
        out += "," + fmt(r.detection_ci.lo);
        out += "," + fmt(r.detection_ci.hi);
        out += "," + fmt(r.cheater_accuracy);
        out += "," + fmt(r.reconstruction_rate);
        out += "," + fmt(r.epsilon_hat);
        out += "," + std::to_string(r.seed);
        out += "\n";
    }
    return out;
}

std::string render_json(const std::vector<MetricsReport>& reports) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const MetricsReport& r : reports) {
        nlohmann::ordered_json row;
        row["variant"] = variant_name(r.variant);
        row["strategy"] = adversary::to_string(r.strategy);
        row["n"] = r.copies;
        row["p"] = r.check_rate;
        row["m"] = r.attacked;
        row["trials"] = r.trials;
        row["detection_rate"] = r.detection_rate;
        row["detection_ci_low"] = r.detection_ci.lo;
        row["detection_ci_high"] = r.detection_ci.hi;
        row["cheater_accuracy"] = r.cheater_accuracy;
        row["reconstruction_rate"] = r.reconstruction_rate;
        row["epsilon_hat"] = r.epsilon_hat;
        row["seed"] = r.seed;
        arr.push_back(std::move(row));
    }
    return arr.dump(2) + "\n";
}

std::vector<MetricsReport> parse_json(const std::string& text) {
    const nlohmann::json arr = nlohmann::json::parse(text);
    std::vector<MetricsReport> reports;
    for (const auto& row : arr) {
        MetricsReport r;
        r.variant = parse_variant(row.at("variant").get<std::string>());
        r.strategy = parse_strategy(row.at("strategy").get<std::string>());
        r.copies = row.at("n").get<int>();
        r.check_rate = row.at("p").get<double>();
        r.attacked = row.at("m").get<int>();
        r.trials = row.at("trials").get<int>();
        r.detection_rate = row.at("detection_rate").get<double>();
        r.detection_ci.lo = row.at("detection_ci_low").get<double>();
        r.detection_ci.hi = row.at("detection_ci_high").get<double>();
        r.cheater_accuracy = row.at("cheater_accuracy").get<double>();
        r.reconstruction_rate = row.at("reconstruction_rate").get<double>();
        r.epsilon_hat = row.at("epsilon_hat").get<double>();
        r.seed = row.at("seed").get<std::uint64_t>();
        r.escape_rate = 1.0 - r.detection_rate;
        reports.push_back(std::move(r));
    }
    return reports;
}

void write_report(const std::vector<MetricsReport>& reports, const std::string& path,
                  ReportFormat format) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open report file: " + path);
    out << (format == ReportFormat::Csv ? render_csv(reports) : render_json(reports));
    if (!out) throw std::runtime_error("failed writing report file: " + path);
}

} // namespace qss::harness
