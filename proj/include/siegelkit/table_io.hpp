#pragma once

// SIEGEL-TABLE v1 text format.
//
//   SIEGEL-TABLE v1
//   weight: <int>
//   disc-bound: <int>
//   provenance: <free text>
//   <a> <b> <c> <value>      one line per reduced class, sorted by (|disc|, a, b)
//
// Values are integers or num/den in lowest terms. Lines starting with '#'
// are comments. emit() is canonical, so ingest(emit(T)) == T and
// emit(ingest(F)) == F byte-for-byte for canonical files F.

#include <charconv>
#include <fstream>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "siegelkit/siegel.hpp"

namespace siegelkit::siegel {

inline constexpr std::string_view kTableMagic = "SIEGEL-TABLE v1";

inline std::string emit(const SiegelTable& t) {
    std::string out;
    out += kTableMagic;
    out += '\n';
    out += "weight: " + std::to_string(t.weight()) + '\n';
    out += "disc-bound: " + std::to_string(t.disc_bound()) + '\n';
    out += "provenance: " + t.provenance() + '\n';
    for (const auto& [f, v] : t.entries()) out += bqf::to_string(f) + ' ' + to_string(v) + '\n';
    return out;
}

namespace detail {

inline std::optional<Int> parse_int(std::string_view s) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    Int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
    return v;
}

inline std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

}  // namespace detail

/// Parses a table; every failure is a FormatError carrying the offending line number.
inline SiegelTable ingest(std::istream& in) {
    using K = FormatErrorKind;
    std::string line;
    std::size_t lineno = 0;
    std::optional<Int> weight, bound;
    std::optional<std::string> provenance;
    Entries entries;
    bool in_data = false;

    auto header_value = [&](std::string_view text, std::string_view key) -> std::optional<std::string_view> {
        if (text.substr(0, key.size()) != key) return std::nullopt;
        text.remove_prefix(key.size());
        if (text.empty()) return text;
        if (text.front() != ' ') return std::nullopt;
        text.remove_prefix(1);
        return text;
    };

    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (lineno == 1) {
            if (line != kTableMagic) throw FormatError(K::MissingMagic, lineno, "expected '" + std::string(kTableMagic) + "'");
            continue;
        }
        if (line.empty() || line.front() == '#') continue;
        if (!in_data) {
            if (auto v = header_value(line, "weight:")) {
                auto w = detail::parse_int(*v);
                if (weight || !w || *w < 1) throw FormatError(K::BadHeader, lineno, "weight");
                weight = *w;
                continue;
            }
            if (auto v = header_value(line, "disc-bound:")) {
                auto b = detail::parse_int(*v);
                if (bound || !b || *b < 1) throw FormatError(K::BadHeader, lineno, "disc-bound");
                bound = *b;
                continue;
            }
            if (auto v = header_value(line, "provenance:")) {
                if (provenance) throw FormatError(K::BadHeader, lineno, "provenance repeated");
                provenance = std::string(*v);
                continue;
            }
            if (!weight || !bound || !provenance) throw FormatError(K::BadHeader, lineno, "weight, disc-bound and provenance must precede data");
            in_data = true;
        }
        const auto tokens = detail::split_ws(line);
        if (tokens.size() != 4) throw FormatError(K::MalformedLine, lineno, "expected '<a> <b> <c> <value>'");
        auto a = detail::parse_int(tokens[0]), b = detail::parse_int(tokens[1]), c = detail::parse_int(tokens[2]);
        if (!a || !b || !c) throw FormatError(K::MalformedLine, lineno, "form coefficients must be integers");
        auto value = parse_rational(tokens[3]);
        if (!value) throw FormatError(K::MalformedValue, lineno, std::string(tokens[3]));
        const QuadForm f{*a, *b, *c};
        if (!bqf::is_reduced(f)) throw FormatError(K::NonReducedKey, lineno, bqf::to_string(f));
        if (-bqf::discriminant(f) > *bound) throw FormatError(K::BoundViolation, lineno, bqf::to_string(f));
        if (!entries.emplace(f, *value).second) throw FormatError(K::DuplicateKey, lineno, bqf::to_string(f));
    }
    if (lineno == 0) throw FormatError(K::MissingMagic, 1, "empty input");
    if (!weight || !bound || !provenance) throw FormatError(K::BadHeader, lineno, "incomplete header");
    for (const auto& f : reduced_forms_up_to(*bound))
        if (!entries.count(f)) throw FormatError(K::MissingKey, lineno, bqf::to_string(f));
    return {static_cast<int>(*weight), *bound, *provenance, std::move(entries)};
}

inline SiegelTable ingest_string(const std::string& text) {
    std::istringstream in(text);
    return ingest(in);
}

inline SiegelTable read_table(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DomainError("cannot open table file '" + path + "'");
    return ingest(in);
}

inline void write_table(const std::string& path, const SiegelTable& t) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw DomainError("cannot write table file '" + path + "'");
    out << emit(t);
    if (!out) throw DomainError("write failed for '" + path + "'");
}

}  // namespace siegelkit::siegel
