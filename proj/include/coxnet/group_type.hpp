#pragma once

#include <cctype>
#include <string>

#include "coxnet/errors.hpp"
#include "coxnet/numeric.hpp"

namespace coxnet {

/// Families of finite irreducible reflection groups supported by the net
/// construction: the symmetric-group series A, the hyperoctahedral series B,
/// the even-sign-change series D, and the exceptional groups E6, E7, E8.
enum class Family { A, B, D, E };

class GroupType {
public:
    GroupType(Family family, int rank) : family_(family), rank_(rank) { validate(); }

    static GroupType a(int n) { return GroupType(Family::A, n); }
    static GroupType b(int n) { return GroupType(Family::B, n); }
    static GroupType d(int n) { return GroupType(Family::D, n); }
    static GroupType e(int n) { return GroupType(Family::E, n); }

    /// Parse labels like "A3", "B12", "D4", "E8" (case-insensitive).
    static GroupType parse(const std::string& label);

    Family family() const { return family_; }
    int rank() const { return rank_; }

    /// Dimension of the coordinate space the standard realization lives in.
    /// A_n acts on the zero-sum hyperplane of R^{n+1}; E6/E7 are realized as
    /// sub-root-systems inside the E8 coordinates.
    int ambient_dim() const {
        switch (family_) {
            case Family::A: return rank_ + 1;
            case Family::E: return 8;
            default: return rank_;
        }
    }

    Int order() const {
        Int o = 1;
        switch (family_) {
            case Family::A:
                for (int i = 2; i <= rank_ + 1; ++i) o *= i;
                return o;
            case Family::B:
                for (int i = 1; i <= rank_; ++i) o *= 2 * i;
                return o;
            case Family::D:
                for (int i = 1; i <= rank_; ++i) o *= i;
                return o << (rank_ - 1);
            case Family::E:
                if (rank_ == 6) return 51840;
                if (rank_ == 7) return 2903040;
                return Int(696729600);
        }
        return o;
    }

    std::string name() const {
        static const char* fam = "ABDE";
        return std::string(1, fam[static_cast<int>(family_)]) + std::to_string(rank_);
    }

    friend bool operator==(const GroupType& x, const GroupType& y) {
        return x.family_ == y.family_ && x.rank_ == y.rank_;
    }

private:
    void validate() const {
        switch (family_) {
            case Family::A:
            case Family::B:
                if (rank_ < 1) throw UnsupportedGroup(name() + ": rank must be at least 1");
                return;
            case Family::D:
                if (rank_ < 2) throw UnsupportedGroup(name() + ": rank must be at least 2");
                return;
            case Family::E:
                if (rank_ < 6 || rank_ > 8)
                    throw UnsupportedGroup(name() + ": only E6, E7, E8 exist");
                return;
        }
    }

    Family family_;
    int rank_;
};

inline GroupType GroupType::parse(const std::string& label) {
    if (label.empty()) throw UnsupportedGroup("empty group label");
    const char fam = static_cast<char>(std::toupper(static_cast<unsigned char>(label[0])));
    const std::string rest = label.substr(1);
    int rank = 0;
    bool has_rank = !rest.empty();
    for (char c : rest) {
        if (!std::isdigit(static_cast<unsigned char>(c))) has_rank = false;
    }
    if (has_rank) rank = std::stoi(rest);

    switch (fam) {
        case 'A': if (has_rank) return GroupType::a(rank); break;
        case 'B':
        case 'C': if (has_rank) return GroupType::b(rank); break;
        case 'D': if (has_rank) return GroupType::d(rank); break;
        case 'E': if (has_rank) return GroupType::e(rank); break;
        case 'F':
            throw UnsupportedGroup(
                "F4 is not supported: its diagram has no A3 chain, so the symmetric group "
                "is not a parabolic subgroup and the interval generating function does not apply");
        case 'G':
            throw UnsupportedGroup("G2 is not supported (dihedral; no construction provided)");
        case 'H':
            throw UnsupportedGroup(label + " is not supported (no construction provided)");
        case 'I':
            throw UnsupportedGroup("dihedral groups I2(m) are not supported");
        default: break;
    }
    throw UnsupportedGroup("unrecognized group label: " + label);
}

}  // namespace coxnet
