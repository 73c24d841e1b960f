#ifndef NCF_ALPHABET_HPP
#define NCF_ALPHABET_HPP

#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "ncf/errors.hpp"

namespace ncf {

/// A letter of the ambient alphabet, identified by its 1-based slot.
/// Slot order fixes the pencil coefficient order.
struct Letter {
    std::uint32_t index = 0; // 1..d

    bool operator==(const Letter& o) const { return index == o.index; }
    bool operator!=(const Letter& o) const { return index != o.index; }
};

/// A word over the alphabet: a sequence of letter indices. The empty
/// word is the unit of the free monoid.
using Word = std::vector<std::uint32_t>;

class Alphabet {
public:
    Alphabet() = default;
    Alphabet(std::initializer_list<std::string> names) : names_(names) { validate(); }
    explicit Alphabet(std::vector<std::string> names) : names_(std::move(names)) { validate(); }

    std::size_t size() const { return names_.size(); }

    Letter letter(std::string_view name) const {
        for (std::size_t i = 0; i < names_.size(); ++i)
            if (names_[i] == name) return Letter{static_cast<std::uint32_t>(i + 1)};
        throw UnknownLetter("unknown letter: " + std::string(name));
    }

    Letter letterAt(std::uint32_t index) const {
        requireIndex(index);
        return Letter{index};
    }

    const std::string& name(Letter l) const {
        requireIndex(l.index);
        return names_[l.index - 1];
    }

    bool hasName(std::string_view name) const {
        for (const auto& n : names_)
            if (n == name) return true;
        return false;
    }

    const std::vector<std::string>& names() const { return names_; }

    bool operator==(const Alphabet& o) const { return names_ == o.names_; }
    bool operator!=(const Alphabet& o) const { return names_ != o.names_; }

    /// The same alphabet extended with fresh letters (used for doubled
    /// alphabets in composition and for Newton directions).
    Alphabet extended(const std::vector<std::string>& extra) const {
        std::vector<std::string> all = names_;
        all.insert(all.end(), extra.begin(), extra.end());
        return Alphabet(std::move(all));
    }

    std::string wordToString(const Word& w) const {
        if (w.empty()) return "1";
        std::string s;
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (i) s += '.';
            s += names_[w[i] - 1];
        }
        return s;
    }

private:
    void validate() const {
        for (std::size_t i = 0; i < names_.size(); ++i) {
            if (names_[i].empty()) throw Error("empty letter name");
            for (std::size_t j = i + 1; j < names_.size(); ++j)
                if (names_[i] == names_[j]) throw Error("duplicate letter name: " + names_[i]);
        }
    }

    void requireIndex(std::uint32_t index) const {
        if (index == 0 || index > names_.size())
            throw UnknownLetter("letter index out of range: " + std::to_string(index));
    }

    std::vector<std::string> names_;
};

} // namespace ncf

#endif
