#pragma once

#include "translates/frequency.hpp"

#include <cstdint>
#include <filesystem>
#include <initializer_list>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace translates {

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Flat "key = value" file with [section] headers. '#' and ';' start comments.
class IniFile {
public:
    struct Entry {
        std::string value;
        int line = 0;
    };

    static IniFile parse(std::istream &is, std::string source = "<config>");
    static IniFile load(const std::filesystem::path &path);

    const std::string &source() const { return source_; }
    bool has_section(std::string_view section) const;
    bool has(std::string_view section, std::string_view key) const;
    const Entry *find(std::string_view section, std::string_view key) const;

    // Throws on any key of `section` not listed.
    void require_known(std::string_view section, std::initializer_list<std::string_view> keys) const;
    void require_sections(std::initializer_list<std::string_view> sections) const;

    std::string text(std::string_view section, std::string_view key, std::string def) const;
    double real(std::string_view section, std::string_view key, double def) const;
    std::optional<double> real_opt(std::string_view section, std::string_view key) const;
    Index integer(std::string_view section, std::string_view key, Index def) const;
    std::optional<Index> integer_opt(std::string_view section, std::string_view key) const;
    std::uint64_t unsigned64(std::string_view section, std::string_view key, std::uint64_t def) const;
    bool boolean(std::string_view section, std::string_view key, bool def) const;
    // comma or whitespace separated
    std::vector<Index> integer_list(std::string_view section, std::string_view key) const;

    // "source:line: [section] key: what"
    [[noreturn]] void fail(std::string_view section, std::string_view key, const std::string &what) const;

private:
    std::string source_;
    std::map<std::string, std::map<std::string, Entry, std::less<>>, std::less<>> data_;
    std::map<std::string, int, std::less<>> section_line_;
};

} // namespace translates
