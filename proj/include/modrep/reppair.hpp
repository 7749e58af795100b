#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "modrep/matrix.hpp"

namespace modrep {

enum class RepLabel { unfolded, psu3_restricted, psu2, psu2_conjugated };

inline std::string to_string(RepLabel label) {
    switch (label) {
        case RepLabel::unfolded: return "unfolded";
        case RepLabel::psu3_restricted: return "psu3_restricted";
        case RepLabel::psu2: return "psu2";
        case RepLabel::psu2_conjugated: return "psu2_conjugated";
    }
    throw std::logic_error("unknown RepLabel");
}

inline RepLabel rep_label_from_string(const std::string& s) {
    if (s == "unfolded") return RepLabel::unfolded;
    if (s == "psu3_restricted" || s == "psu3") return RepLabel::psu3_restricted;
    if (s == "psu2") return RepLabel::psu2;
    if (s == "psu2_conjugated" || s == "psu2conj") return RepLabel::psu2_conjugated;
    throw std::invalid_argument("unknown representation label: " + s);
}

/// A pair of SL(2,Z) generator matrices (S, T) over Q(zeta_{field_order}),
/// with T diagonal. The unit every representation-level operation works on.
struct RepPair {
    i64 r = 0;
    i64 dim = 0;
    i64 field_order = 0;
    RepLabel label = RepLabel::unfolded;
    CycMatrix S;
    CycMatrix T;
    std::vector<std::string> basis_labels;
};

/// Default scalar field for representation matrices: Q(zeta_{24r}) contains
/// i, sqrt(+-r), sqrt(+-3) and every root of unity the lift scalars need.
inline i64 default_field_order(i64 r) { return 24 * r; }

inline i64 resolve_field_order(i64 r, i64 requested) {
    if (requested == 0) return default_field_order(r);
    if (requested % (24 * r) != 0)
        throw std::invalid_argument("field order must be a multiple of 24*r");
    return requested;
}

/// zeta_r^e viewed inside Q(zeta_M) (requires r | M).
inline CycNum zeta_r_power(i64 r, i64 e, i64 field_order) {
    if (field_order % r != 0)
        throw std::invalid_argument("zeta_r_power: r must divide the field order");
    return root_power(field_order, (field_order / r) * mod_reduce(e, r));
}

} // namespace modrep
