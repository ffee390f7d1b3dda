#pragma once

#include <compare>
#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <string>

namespace revauto {

/**
 * Degree of irreversibility of an automaton or a language.
 *
 * Zero < Finite(1) < Finite(2) < ... < Infinite. Zero stands for
 * 0-reversibility (tree-shaped automata, finite languages); Infinite for
 * strong irreversibility.
 */
class Degree {
public:
    enum class Kind { Zero, Finite, Infinite };

    static constexpr Degree zero() noexcept { return Degree(Kind::Zero, 0); }
    static constexpr Degree infinite() noexcept { return Degree(Kind::Infinite, 0); }
    static constexpr Degree finite(std::size_t k) {
        if (k == 0) throw std::invalid_argument("Degree::finite requires k >= 1");
        return Degree(Kind::Finite, k);
    }

    [[nodiscard]] constexpr Kind kind() const noexcept { return kind_; }
    [[nodiscard]] constexpr bool is_zero() const noexcept { return kind_ == Kind::Zero; }
    [[nodiscard]] constexpr bool is_finite() const noexcept { return kind_ == Kind::Finite; }
    [[nodiscard]] constexpr bool is_infinite() const noexcept { return kind_ == Kind::Infinite; }

    /// k for Finite(k); throws otherwise.
    [[nodiscard]] constexpr std::size_t value() const {
        if (kind_ != Kind::Finite) throw std::logic_error("degree has no finite value");
        return k_;
    }

    constexpr auto operator<=>(const Degree& other) const noexcept {
        if (auto c = kind_ <=> other.kind_; c != 0) return c;
        return k_ <=> other.k_;
    }
    constexpr bool operator==(const Degree&) const noexcept = default;

    /// `0 (finite language)`, `k-reversible, minimal k = K`, or `strongly irreversible`.
    [[nodiscard]] std::string describe() const {
        switch (kind_) {
        case Kind::Zero: return "0 (finite language)";
        case Kind::Finite: return "k-reversible, minimal k = " + std::to_string(k_);
        case Kind::Infinite: return "strongly irreversible";
        }
        return {};
    }

private:
    constexpr Degree(Kind kind, std::size_t k) noexcept : kind_(kind), k_(k) {}

    Kind kind_;
    std::size_t k_;
};

inline std::ostream& operator<<(std::ostream& os, const Degree& d) {
    switch (d.kind()) {
    case Degree::Kind::Zero: return os << "Zero";
    case Degree::Kind::Finite: return os << "Finite(" << d.value() << ")";
    case Degree::Kind::Infinite: return os << "Infinite";
    }
    return os;
}

} // namespace revauto
