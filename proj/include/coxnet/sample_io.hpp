#pragma once

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "coxnet/errors.hpp"
#include "coxnet/net.hpp"

namespace coxnet {

/// Malformed data file.
class ParseError : public Error {
public:
    using Error::Error;
};

/// Parse sample text: values separated by commas and/or whitespace, one or
/// more per line; blank lines and '#' comments are ignored.
inline Sample parse_sample(const std::string& content) {
    Sample y;
    std::istringstream lines(content);
    std::string line;
    int lineno = 0;
    while (std::getline(lines, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        for (char& c : line)
            if (c == ',') c = ' ';
        std::istringstream fields(line);
        std::string tok;
        while (fields >> tok) {
            char* end = nullptr;
            const double v = std::strtod(tok.c_str(), &end);
            if (end != tok.c_str() + tok.size())
                throw ParseError("line " + std::to_string(lineno) + ": cannot parse value '" +
                                 tok + "'");
            y.values.push_back(v);
        }
    }
    if (y.values.empty()) throw ParseError("no values found in input");
    return y;
}

inline Sample load_sample_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open data file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_sample(buf.str());
}

}  // namespace coxnet
