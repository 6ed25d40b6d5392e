#pragma once

#include <cstdio>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "coxnet/net.hpp"
#include "coxnet/nongroup.hpp"

namespace coxnet {

struct NetInterval {
    bool lo_unbounded = false;
    bool hi_unbounded = false;
    double lo = 0;
    double hi = 0;
    long long num = 0;
    long long den = 1;
};

/// Serializable view of a confidence net. The JSON form is canonical: fixed
/// field order, floats always printed with 17 significant digits, so
/// parse + re-serialize is byte-identical.
struct NetReport {
    std::string group;
    int n = 0;
    std::vector<double> boundaries;
    std::vector<NetInterval> intervals;
    std::vector<std::string> warnings;
    std::vector<long long> gf;
};

namespace detail {

/// Fractions are presented over the common denominator (the total interval
/// count), so a merged B3-style cell prints as 2/8 rather than 1/4.
inline std::vector<NetInterval> report_intervals(const std::vector<double>& bounds,
                                                 const std::vector<Rat>& probs,
                                                 const Int& total) {
    std::vector<NetInterval> out;
    for (std::size_t j = 0; j < probs.size(); ++j) {
        NetInterval iv;
        iv.lo_unbounded = j == 0;
        iv.hi_unbounded = j + 1 == probs.size();
        if (!iv.lo_unbounded) iv.lo = bounds[j - 1];
        if (!iv.hi_unbounded) iv.hi = bounds[j];
        const Rat scaled = probs[j] * total;
        if (denominator(scaled) != 1)
            throw Error("internal: interval probability is not a multiple of 1/total");
        iv.num = static_cast<long long>(numerator(scaled));
        iv.den = static_cast<long long>(total);
        out.push_back(iv);
    }
    return out;
}

inline std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

inline std::string json_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

}  // namespace detail

inline NetReport make_report(const ConfidenceNet& net, int sample_size) {
    NetReport r;
    r.group = net.group_label;
    r.n = sample_size;
    r.boundaries = net.boundaries;
    Int total = 0;
    for (const Int& c : net.gf) total += c;
    r.intervals = detail::report_intervals(net.boundaries, net.probs, total);
    r.warnings = net.merged;
    r.gf.reserve(net.gf.size());
    for (const Int& c : net.gf) r.gf.push_back(static_cast<long long>(c));
    return r;
}

inline NetReport make_report(const NonGroupNet& net) {
    NetReport r;
    r.group = "nongroup" + std::to_string(net.n);
    r.n = net.n;
    r.boundaries = net.boundaries;
    Int total = 0;
    for (const Int& c : net.gf) total += c;
    r.intervals = detail::report_intervals(net.boundaries, net.probs, total);
    r.warnings = net.merged;
    r.gf.reserve(net.gf.size());
    for (const Int& c : net.gf) r.gf.push_back(static_cast<long long>(c));
    return r;
}

inline std::string to_json(const NetReport& r) {
    std::ostringstream os;
    os << "{\"group\":\"" << detail::json_escape(r.group) << "\",\"n\":" << r.n;
    os << ",\"boundaries\":[";
    for (std::size_t i = 0; i < r.boundaries.size(); ++i)
        os << (i ? "," : "") << detail::format_double(r.boundaries[i]);
    os << "],\"intervals\":[";
    for (std::size_t i = 0; i < r.intervals.size(); ++i) {
        const NetInterval& iv = r.intervals[i];
        os << (i ? "," : "") << "{\"lo\":";
        if (iv.lo_unbounded) os << "\"-inf\"";
        else os << detail::format_double(iv.lo);
        os << ",\"hi\":";
        if (iv.hi_unbounded) os << "\"+inf\"";
        else os << detail::format_double(iv.hi);
        os << ",\"num\":" << iv.num << ",\"den\":" << iv.den << "}";
    }
    os << "],\"warnings\":[";
    for (std::size_t i = 0; i < r.warnings.size(); ++i)
        os << (i ? "," : "") << "\"" << detail::json_escape(r.warnings[i]) << "\"";
    os << "],\"gf\":[";
    for (std::size_t i = 0; i < r.gf.size(); ++i) os << (i ? "," : "") << r.gf[i];
    os << "]}";
    return os.str();
}

inline NetReport from_json(const std::string& text) {
    const nlohmann::json j = nlohmann::json::parse(text);
    NetReport r;
    r.group = j.at("group").get<std::string>();
    r.n = j.at("n").get<int>();
    for (const auto& b : j.at("boundaries")) r.boundaries.push_back(b.get<double>());
    for (const auto& iv : j.at("intervals")) {
        NetInterval out;
        if (iv.at("lo").is_string()) out.lo_unbounded = true;
        else out.lo = iv.at("lo").get<double>();
        if (iv.at("hi").is_string()) out.hi_unbounded = true;
        else out.hi = iv.at("hi").get<double>();
        out.num = iv.at("num").get<long long>();
        out.den = iv.at("den").get<long long>();
        r.intervals.push_back(out);
    }
    for (const auto& w : j.at("warnings")) r.warnings.push_back(w.get<std::string>());
    for (const auto& c : j.at("gf")) r.gf.push_back(c.get<long long>());
    return r;
}

inline std::string to_csv(const NetReport& r) {
    std::ostringstream os;
    os << "lo,hi,num,den,prob\n";
    for (const NetInterval& iv : r.intervals) {
        os << (iv.lo_unbounded ? "-inf" : detail::format_double(iv.lo)) << ",";
        os << (iv.hi_unbounded ? "+inf" : detail::format_double(iv.hi)) << ",";
        os << iv.num << "," << iv.den << ",";
        os << detail::format_double(static_cast<double>(iv.num) / static_cast<double>(iv.den))
           << "\n";
    }
    return os.str();
}

inline std::string to_text(const NetReport& r) {
    std::ostringstream os;
    os << "group: " << r.group << "   sample size: " << r.n << "   intervals: "
       << r.intervals.size() << "\n";
    for (const NetInterval& iv : r.intervals) {
        os << "  [" << (iv.lo_unbounded ? "-inf" : detail::format_double(iv.lo)) << ", "
           << (iv.hi_unbounded ? "+inf" : detail::format_double(iv.hi)) << "]  "
           << iv.num << "/" << iv.den << " = "
           << static_cast<double>(iv.num) / static_cast<double>(iv.den) << "\n";
    }
    for (const std::string& w : r.warnings) os << "  warning: " << w << "\n";
    os << "  interval counts:";
    for (long long c : r.gf) os << " " << c;
    os << "\n";
    return os.str();
}

}  // namespace coxnet
