#include "translates/config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>

namespace translates {

namespace {

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

template <class T>
bool parse_number(std::string_view s, T &out) {
    const char *first = s.data();
    const char *last = s.data() + s.size();
    if (first != last && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc() && ptr == last;
}

} // namespace

IniFile IniFile::parse(std::istream &is, std::string source) {
    IniFile ini;
    ini.source_ = std::move(source);
    std::string section;
    std::string raw;
    int line = 0;
    auto error = [&](const std::string &what) {
        throw ConfigError(ini.source_ + ":" + std::to_string(line) + ": " + what);
    };
    while (std::getline(is, raw)) {
        ++line;
        std::string_view sv = raw;
        if (auto c = sv.find_first_of("#;"); c != std::string_view::npos) sv = sv.substr(0, c);
        std::string s = trim(sv);
        if (s.empty()) continue;
        if (s.front() == '[') {
            if (s.back() != ']') error("unterminated section header");
            section = trim(std::string_view(s).substr(1, s.size() - 2));
            if (section.empty()) error("empty section name");
            if (ini.section_line_.count(section)) error("duplicate section [" + section + "]");
            ini.section_line_[section] = line;
            ini.data_[section];
            continue;
        }
        const auto eq = s.find('=');
        if (eq == std::string::npos) error("expected 'key = value'");
        if (section.empty()) error("key outside any [section]");
        std::string key = trim(std::string_view(s).substr(0, eq));
        std::string value = trim(std::string_view(s).substr(eq + 1));
        if (key.empty()) error("empty key");
        auto &sec = ini.data_[section];
        if (sec.count(key)) error("duplicate key '" + key + "' in [" + section + "]");
        sec[key] = Entry{std::move(value), line};
    }
    return ini;
}

IniFile IniFile::load(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path.string() + "'");
    return parse(in, path.string());
}

bool IniFile::has_section(std::string_view section) const { return data_.find(section) != data_.end(); }

bool IniFile::has(std::string_view section, std::string_view key) const { return find(section, key) != nullptr; }

const IniFile::Entry *IniFile::find(std::string_view section, std::string_view key) const {
    auto s = data_.find(section);
    if (s == data_.end()) return nullptr;
    auto k = s->second.find(key);
    return k == s->second.end() ? nullptr : &k->second;
}

void IniFile::fail(std::string_view section, std::string_view key, const std::string &what) const {
    const Entry *e = find(section, key);
    std::string where = source_;
    if (e) {
        where += ":" + std::to_string(e->line);
    } else if (auto s = section_line_.find(section); s != section_line_.end()) {
        where += ":" + std::to_string(s->second);
    }
    throw ConfigError(where + ": [" + std::string(section) + "] " + std::string(key) + ": " + what);
}

void IniFile::require_known(std::string_view section, std::initializer_list<std::string_view> keys) const {
    auto s = data_.find(section);
    if (s == data_.end()) return;
    for (const auto &[k, e] : s->second)
        if (std::find(keys.begin(), keys.end(), k) == keys.end()) fail(section, k, "unknown key");
}

void IniFile::require_sections(std::initializer_list<std::string_view> sections) const {
    for (const auto &[name, line] : section_line_)
        if (std::find(sections.begin(), sections.end(), name) == sections.end())
            throw ConfigError(source_ + ":" + std::to_string(line) + ": unknown section [" + name + "]");
}

std::string IniFile::text(std::string_view section, std::string_view key, std::string def) const {
    const Entry *e = find(section, key);
    return e ? e->value : def;
}

std::optional<double> IniFile::real_opt(std::string_view section, std::string_view key) const {
    const Entry *e = find(section, key);
    if (!e) return std::nullopt;
    double v = 0.0;
    if (!parse_number(e->value, v)) fail(section, key, "expected a number, got '" + e->value + "'");
    return v;
}

double IniFile::real(std::string_view section, std::string_view key, double def) const {
    return real_opt(section, key).value_or(def);
}

std::optional<Index> IniFile::integer_opt(std::string_view section, std::string_view key) const {
    const Entry *e = find(section, key);
    if (!e) return std::nullopt;
    Index v = 0;
    if (!parse_number(e->value, v)) fail(section, key, "expected an integer, got '" + e->value + "'");
    return v;
}

Index IniFile::integer(std::string_view section, std::string_view key, Index def) const {
    return integer_opt(section, key).value_or(def);
}

std::uint64_t IniFile::unsigned64(std::string_view section, std::string_view key, std::uint64_t def) const {
    const Entry *e = find(section, key);
    if (!e) return def;
    std::uint64_t v = 0;
    if (!parse_number(e->value, v)) fail(section, key, "expected an unsigned integer, got '" + e->value + "'");
    return v;
}

bool IniFile::boolean(std::string_view section, std::string_view key, bool def) const {
    const Entry *e = find(section, key);
    if (!e) return def;
    const std::string &v = e->value;
    if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
    if (v == "false" || v == "0" || v == "no" || v == "off") return false;
    fail(section, key, "expected true/false, got '" + v + "'");
}

std::vector<Index> IniFile::integer_list(std::string_view section, std::string_view key) const {
    const Entry *e = find(section, key);
    if (!e) return {};
    std::string s = e->value;
    std::replace(s.begin(), s.end(), ',', ' ');
    std::istringstream in(s);
    std::vector<Index> out;
    std::string tok;
    while (in >> tok) {
        Index v = 0;
        if (!parse_number(tok, v)) fail(section, key, "expected a list of integers, got '" + tok + "'");
        out.push_back(v);
    }
    return out;
}

} // namespace translates
