#include "tropigon/unfolding.hpp"

#include "tropigon/error.hpp"

#include <algorithm>

namespace tropigon {

const char* variant_name(UnfoldVariant v) {
    switch (v) {
        case UnfoldVariant::TL: return "TL";
        case UnfoldVariant::TR: return "TR";
        case UnfoldVariant::BL: return "BL";
        case UnfoldVariant::BR: return "BR";
    }
    return "?";
}

UnfoldVariant parse_variant(const std::string& s) {
    for (auto v : {UnfoldVariant::TL, UnfoldVariant::TR, UnfoldVariant::BL, UnfoldVariant::BR}) {
        if (s == variant_name(v)) return v;
    }
    throw Error(ErrorCode::BadInput, "unknown variant " + s);
}

std::array<int, 2> forced_zeros(int i, int j) {
    if (i == 1 && j == 1) return {1, 5};
    if (i == 1 && j == 2) return {2, 5};
    if (i == 1 && j == 3) return {2, 6};
    if (i == 2 && j == 1) return {1, 6};
    if (i == 2 && j == 2) return {1, 7};
    if (i == 2 && j == 3) return {3, 5};
    throw Error(ErrorCode::BadInput, "case (" + std::to_string(i) + "," + std::to_string(j) + ") does not exist");
}

void validate(const TrigonalType000A& in) {
    auto fz = forced_zeros(in.i, in.j);
    for (int k = 1; k <= 8; ++k) {
        if (sgn(in.av(k)) < 0) throw Error(ErrorCode::NegativeLength, "a" + std::to_string(k) + " is negative");
    }
    for (int k : fz) {
        if (sgn(in.av(k)) != 0) {
            throw Error(ErrorCode::ForcedZeroViolated, "a" + std::to_string(k) + " must vanish in case (" +
                                                           std::to_string(in.i) + "," + std::to_string(in.j) + ")");
        }
    }
    for (int k = 0; k < 3; ++k) {
        if (sgn(in.L[k]) <= 0) throw Error(ErrorCode::NonPositiveLength, "L" + std::to_string(k + 1) + " must be positive");
    }
}

namespace {

struct Builder {
    const TrigonalType000A& in;
    UnfoldingResult r;
    bool right = false, bottom = false;

    void set(int k, const Q& v) { r.l[k - 1] = v; }
    Q get(int k) const { return r.lv(k); }
    const Q& a(int k) const { return in.av(k); }

    void pair34() {
        Q m = std::min(a(3), a(4));
        set(4, m);
        set(5, m);
        if (a(3) <= a(4)) {
            set(11, 0);
            set(12, a(4) - a(3));
        } else {
            set(12, 0);
            set(11, a(3) - a(4));
        }
    }

    void pair58() {
        Q m = std::min(a(5), a(8));
        set(2, m);
        set(3, m);
        if (a(5) <= a(8)) {
            set(8, 0);
            set(7, a(8) - a(5));
        } else {
            set(7, 0);
            set(8, a(5) - a(8));
        }
    }

    void left_right() {
        Q cap = get(2) + in.L[1];
        if (a(1) < cap) {
            set(1, a(1));
        } else {
            right = true;
            set(1, cap);
            set(13, a(1) - cap);
        }
    }

    void top_bottom() {
        Q cap = get(5) + in.L[1];
        if (a(7) < cap) {
            set(6, a(7));
        } else {
            bottom = true;
            set(6, cap);
            set(14, a(7) - cap);
        }
    }
};

}  // namespace

UnfoldingResult unfold_000A(const TrigonalType000A& in) {
    validate(in);
    Builder b{in, {}};
    switch (in.i * 10 + in.j) {
        case 11:
            b.set(3, 0);
            b.set(8, 0);
            b.set(2, 0);
            b.pair34();
            b.set(1, 0);
            b.set(7, in.av(8));
            b.set(9, in.av(6));
            b.set(10, in.av(2));
            b.top_bottom();
            break;
        case 12:
            b.set(3, 0);
            b.set(8, 0);
            b.set(10, 0);
            b.set(2, 0);
            b.set(9, in.av(6));
            b.set(7, in.av(8));
            b.left_right();
            b.pair34();
            b.top_bottom();
            break;
        case 13:
            b.set(9, 0);
            b.set(10, 0);
            b.pair58();
            b.left_right();
            b.pair34();
            b.top_bottom();
            break;
        case 21:
            b.pair34();
            b.pair58();
            b.top_bottom();
            b.set(1, 0);
            b.set(9, 0);
            b.set(10, in.av(2));
            break;
        case 22:
            b.set(1, 0);
            b.set(6, 0);
            b.pair58();
            b.pair34();
            b.set(10, in.av(2));
            b.set(9, in.av(6));
            break;
        case 23:
            for (int k : {2, 3, 8, 4, 5, 11}) b.set(k, 0);
            b.left_right();
            b.top_bottom();
            b.set(7, in.av(8));
            b.set(9, in.av(6));
            b.set(10, in.av(2));
            b.set(12, in.av(4));
            break;
    }
    b.r.variant = b.bottom ? (b.right ? UnfoldVariant::BR : UnfoldVariant::BL)
                           : (b.right ? UnfoldVariant::TR : UnfoldVariant::TL);
    for (int k = 1; k <= 14; ++k) {
        if (b.r.has(k) && sgn(b.r.lv(k)) < 0) throw std::logic_error("negative unfolded length");
    }
    return b.r;
}

std::array<Q, 8> projected_lengths(const UnfoldingResult& r) {
    return {r.lv(1) + r.lv(13), r.lv(10),          r.lv(4) + r.lv(11), r.lv(5) + r.lv(12),
            r.lv(3) + r.lv(8),  r.lv(9),           r.lv(6) + r.lv(14), r.lv(2) + r.lv(7)};
}

bool verify_unfolding(const TrigonalType000A& in, const UnfoldingResult& r) {
    try {
        validate(in);
    } catch (const Error&) {
        return false;
    }
    for (int k = 1; k <= 12; ++k) {
        if (!r.has(k)) return false;
    }
    for (int k = 1; k <= 14; ++k) {
        if (r.has(k) && sgn(r.lv(k)) < 0) return false;
    }
    bool right = r.variant == UnfoldVariant::TR || r.variant == UnfoldVariant::BR;
    bool bottom = r.variant == UnfoldVariant::BL || r.variant == UnfoldVariant::BR;
    if (r.has(13) != right || r.has(14) != bottom) return false;
    if (r.lv(2) != r.lv(3) || r.lv(4) != r.lv(5)) return false;
    Q cap1 = r.lv(2) + in.L[1], cap6 = r.lv(5) + in.L[1];
    if (right ? r.lv(1) != cap1 : r.lv(1) > cap1) return false;
    if (bottom ? r.lv(6) != cap6 : r.lv(6) > cap6) return false;
    return projected_lengths(r) == in.a;
}

}  // namespace tropigon
