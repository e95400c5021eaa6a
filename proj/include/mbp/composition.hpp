#pragma once

#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"

namespace mbp {

/// Ordered list of integer parts. Strict compositions have every part >= 1;
/// weak compositions allow zero parts.
struct Composition {
    std::vector<int> parts;

    Composition() = default;
    Composition(std::initializer_list<int> p) : parts(p) {}
    explicit Composition(std::vector<int> p) : parts(std::move(p)) {}

    int length() const { return static_cast<int>(parts.size()); }
    int sum() const { return std::accumulate(parts.begin(), parts.end(), 0); }
    bool is_strict() const {
        if (parts.empty()) return false;
        for (int p : parts)
            if (p < 1) return false;
        return true;
    }
    bool is_weak() const {
        for (int p : parts)
            if (p < 0) return false;
        return true;
    }

    bool operator==(const Composition&) const = default;
    auto operator<=>(const Composition&) const = default;

    std::string to_string() const {
        std::string s;
        for (int p : parts) {
            if (!s.empty()) s += ',';
            s += std::to_string(p);
        }
        return s;
    }

    /// Parses "2,1,1".
    static Composition parse(const std::string& text) {
        Composition c;
        std::stringstream ss(text);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            size_t pos = 0;
            int v = 0;
            try {
                v = std::stoi(tok, &pos);
            } catch (const std::exception&) {
                fail(ErrorKind::InputParse, "bad composition part '" + tok + "'");
            }
            while (pos < tok.size() && std::isspace(static_cast<unsigned char>(tok[pos]))) pos++;
            if (pos != tok.size() || v < 0) fail(ErrorKind::InputParse, "bad composition part '" + tok + "'");
            c.parts.push_back(v);
        }
        if (c.parts.empty()) fail(ErrorKind::InputParse, "empty composition");
        return c;
    }
};

}  // namespace mbp
