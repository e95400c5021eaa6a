#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"

namespace mbp {

/// Subset of a ground set {1,...,n}, n <= 31. Element e occupies bit e-1.
/// Labels are 1-based at every user-facing boundary and are preserved by all
/// set operations; minors never re-index.
class ElementSet {
public:
    constexpr ElementSet() = default;
    constexpr explicit ElementSet(std::uint32_t mask) : mask_(mask) {}

    static constexpr ElementSet full(int n) {
        return ElementSet(n <= 0 ? 0u : (n >= 31 ? 0x7fffffffu : ((1u << n) - 1)));
    }
    static constexpr ElementSet single(int e) { return ElementSet(1u << (e - 1)); }
    static ElementSet of(std::initializer_list<int> elems) {
        std::uint32_t m = 0;
        for (int e : elems) {
            if (e < 1 || e > 31) fail(ErrorKind::BadParameters, "element out of range: " + std::to_string(e));
            m |= 1u << (e - 1);
        }
        return ElementSet(m);
    }

    constexpr std::uint32_t mask() const { return mask_; }
    constexpr int size() const { return std::popcount(mask_); }
    constexpr bool empty() const { return mask_ == 0; }
    constexpr bool contains(int e) const { return (mask_ >> (e - 1)) & 1u; }
    constexpr bool subset_of(ElementSet o) const { return (mask_ & ~o.mask_) == 0; }
    constexpr bool intersects(ElementSet o) const { return (mask_ & o.mask_) != 0; }

    constexpr ElementSet operator|(ElementSet o) const { return ElementSet(mask_ | o.mask_); }
    constexpr ElementSet operator&(ElementSet o) const { return ElementSet(mask_ & o.mask_); }
    constexpr ElementSet operator^(ElementSet o) const { return ElementSet(mask_ ^ o.mask_); }
    constexpr ElementSet operator-(ElementSet o) const { return ElementSet(mask_ & ~o.mask_); }
    constexpr ElementSet complement_in(ElementSet universe) const {
        return ElementSet(universe.mask_ & ~mask_);
    }

    constexpr bool operator==(const ElementSet&) const = default;
    constexpr auto operator<=>(const ElementSet& o) const { return mask_ <=> o.mask_; }

    /// Smallest element, 1-based; 0 when empty.
    constexpr int min_element() const { return mask_ == 0 ? 0 : std::countr_zero(mask_) + 1; }

    std::vector<int> elements() const {
        std::vector<int> out;
        out.reserve(size());
        for (std::uint32_t m = mask_; m; m &= m - 1) out.push_back(std::countr_zero(m) + 1);
        return out;
    }

    std::string to_string() const {
        std::string s;
        for (std::uint32_t m = mask_; m; m &= m - 1) {
            if (!s.empty()) s += ',';
            s += std::to_string(std::countr_zero(m) + 1);
        }
        return s.empty() ? std::string("{}") : s;
    }

    /// Parses "1,2,4"; an empty string or "{}" gives the empty set.
    static ElementSet parse(const std::string& text) {
        if (text.empty() || text == "{}") return ElementSet();
        std::uint32_t m = 0;
        std::stringstream ss(text);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            size_t pos = 0;
            int e = 0;
            try {
                e = std::stoi(tok, &pos);
            } catch (const std::exception&) {
                fail(ErrorKind::InputParse, "bad element '" + tok + "'");
            }
            while (pos < tok.size() && std::isspace(static_cast<unsigned char>(tok[pos]))) pos++;
            if (pos != tok.size() || e < 1 || e > 31)
                fail(ErrorKind::InputParse, "bad element '" + tok + "'");
            m |= 1u << (e - 1);
        }
        return ElementSet(m);
    }

private:
    std::uint32_t mask_ = 0;
};

}  // namespace mbp
