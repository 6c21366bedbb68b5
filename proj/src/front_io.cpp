#include "emo/front_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "emo/errors.hpp"

namespace emo {

namespace {

std::string format_real(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

} // namespace

std::string format_front(const Front& front) {
    std::ostringstream out;
    out << "# objectives " << front.space.size() << " senses";
    for (Sense s : front.space.senses())
        out << ' ' << (s == Sense::Minimize ? "min" : "max");
    out << '\n';
    for (const auto& p : front.points) {
        front.space.check(p);
        for (std::size_t i = 0; i < p.size(); ++i)
            out << (i ? " " : "") << format_real(p[i]);
        out << '\n';
    }
    return out.str();
}

void write_front(const Front& front, const std::string& path) {
    std::ofstream f(path);
    if (!f)
        throw IoError("cannot open for writing: " + path);
    f << format_front(front);
    if (!f)
        throw IoError("write failed: " + path);
}

Front parse_front(const std::string& text, const std::string& origin) {
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    std::vector<Sense> senses;
    std::vector<ObjectiveVector> points;
    bool saw_header = false;
    while (std::getline(in, line)) {
        ++lineno;
        std::string trimmed = line;
        auto hash = trimmed.find('#');
        std::string comment = hash != std::string::npos ? trimmed.substr(hash + 1) : "";
        if (hash != std::string::npos)
            trimmed.erase(hash);
        // header may appear as the first comment line
        if (!saw_header && points.empty() && !comment.empty()) {
            std::istringstream hs(comment);
            std::string word;
            hs >> word;
            if (word == "objectives") {
                std::size_t n = 0;
                std::string senses_kw;
                if (!(hs >> n >> senses_kw) || senses_kw != "senses" || n < 2)
                    throw ConfigError(origin + ":" + std::to_string(lineno) +
                                      ": malformed front header");
                std::string s;
                while (hs >> s) {
                    if (s == "min")
                        senses.push_back(Sense::Minimize);
                    else if (s == "max")
                        senses.push_back(Sense::Maximize);
                    else
                        throw ConfigError(origin + ":" + std::to_string(lineno) +
                                          ": bad sense `" + s + "`");
                }
                if (senses.size() != n)
                    throw ConfigError(origin + ":" + std::to_string(lineno) +
                                      ": sense count does not match objective count");
                saw_header = true;
            }
        }
        std::istringstream ls(trimmed);
        std::vector<double> row;
        std::string tok;
        while (ls >> tok) {
            try {
                std::size_t used = 0;
                double v = std::stod(tok, &used);
                if (used != tok.size() || !std::isfinite(v))
                    throw std::invalid_argument(tok);
                row.push_back(v);
            } catch (const std::exception&) {
                throw ConfigError(origin + ":" + std::to_string(lineno) +
                                  ": not a finite real: `" + tok + "`");
            }
        }
        if (row.empty())
            continue;
        if (!points.empty() && row.size() != points.front().size())
            throw ConfigError(origin + ":" + std::to_string(lineno) +
                              ": expected " + std::to_string(points.front().size()) + " fields");
        if (saw_header && row.size() != senses.size())
            throw ConfigError(origin + ":" + std::to_string(lineno) +
                              ": expected " + std::to_string(senses.size()) + " fields");
        points.push_back(std::move(row));
    }
    if (senses.empty()) {
        std::size_t n = points.empty() ? 2 : points.front().size();
        if (n < 2)
            throw ConfigError(origin + ": front needs at least 2 objectives");
        senses.assign(n, Sense::Minimize);
    }
    return Front{std::move(points), ObjectiveSpace(std::move(senses))};
}

Front read_front(const std::string& path) {
    std::ifstream f(path);
    if (!f)
        throw IoError("cannot open front file: " + path);
    std::ostringstream buf;
    buf << f.rdbuf();
    return parse_front(buf.str(), path);
}

} // namespace emo
