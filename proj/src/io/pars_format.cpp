#include "pars_io/pars_format.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <vector>

namespace pars::io {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == sep) {
            out.push_back(s.substr(start, i - start));
            start = i + 1;
        }
    }
    return out;
}

ElementId name_at(std::string_view s, std::size_t line) {
    if (!valid_name(s)) throw FormatError("invalid element name '" + std::string(s) + "'", line);
    return ElementId(std::string(s));
}

}  // namespace

bool valid_name(std::string_view s) {
    if (s.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '\'') return false;
    return true;
}

FinitePars parse_pars(std::string_view src) {
    FinitePars p;
    std::size_t lineno = 0;
    for (std::string_view raw : split(src, '\n')) {
        ++lineno;
        if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
        std::string_view line = trim(raw);
        if (line.empty()) continue;

        auto arrow = line.find("->");
        if (arrow == std::string_view::npos) {
            p.add_element(name_at(line, lineno));
            continue;
        }
        ElementId source = name_at(trim(line.substr(0, arrow)), lineno);

        std::vector<Point> points;
        Weight total;
        for (std::string_view branch : split(line.substr(arrow + 2), '|')) {
            branch = trim(branch);
            auto gap = branch.find_first_of(" \t");
            if (gap == std::string_view::npos)
                throw FormatError("expected '<weight> <element>', got '" + std::string(branch) + "'", lineno);
            std::string_view wtext = branch.substr(0, gap);
            Weight w;
            try {
                w = Weight::parse(wtext);
            } catch (const WeightError&) {
                throw FormatError("malformed weight '" + std::string(wtext) + "'", lineno);
            }
            if (!w.is_positive()) throw FormatError("weight must be positive", lineno);
            total += w;
            points.push_back({w, name_at(trim(branch.substr(gap)), lineno)});
        }
        if (total != Weight(1)) throw FormatError("weights sum to " + total.str() + ", not 1", lineno);
        p.add_rule(source, NormalDist(PointDist(std::move(points))));
    }
    return p;
}

std::string print_pars(const FinitePars& p) {
    std::ostringstream out;
    std::set<ElementId> mentioned;
    for (const auto& [source, dist] : p.rules()) {
        mentioned.insert(source);
        out << source.str() << " ->";
        const PointDist& d = dist;
        bool first = true;
        for (const auto& pt : d) {
            out << (first ? " " : " | ") << pt.weight.str() << ' ' << pt.element.str();
            mentioned.insert(pt.element);
            first = false;
        }
        out << '\n';
    }
    for (const auto& e : p.carrier())
        if (!mentioned.contains(e)) out << e.str() << '\n';
    return out.str();
}

FinitePars load_pars(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_pars(buf.str());
}

}  // namespace pars::io
