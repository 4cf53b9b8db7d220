#pragma once

#include "tropigon/rational.hpp"

#include <array>
#include <optional>
#include <string>

namespace tropigon {

// A trigonal morphism on a (000)A curve: case (i, j) of the six combinatorial types, lengths a1..a8 of the
// contracted edges and the colour lengths L1 (blue), L2 (red), L3 (green).
struct TrigonalType000A {
    int i = 1, j = 1;
    std::array<Q, 8> a;
    std::array<Q, 3> L;

    const Q& av(int k) const { return a[k - 1]; }
};

// The four non-smooth embeddings into F0: T/B is whether l14 is absent, L/R whether l13 is absent.
enum class UnfoldVariant { TL, TR, BL, BR };

const char* variant_name(UnfoldVariant v);
UnfoldVariant parse_variant(const std::string& s);

struct UnfoldingResult {
    UnfoldVariant variant = UnfoldVariant::TL;
    std::array<std::optional<Q>, 14> l;

    Q lv(int k) const { return l[k - 1].value_or(Q(0)); }
    bool has(int k) const { return l[k - 1].has_value(); }
};

// The a-values that are zero in case (i, j).
std::array<int, 2> forced_zeros(int i, int j);

void validate(const TrigonalType000A& in);

UnfoldingResult unfold_000A(const TrigonalType000A& in);

// Projects the unfolded lengths back to the contracted lengths a1..a8.
std::array<Q, 8> projected_lengths(const UnfoldingResult& r);

bool verify_unfolding(const TrigonalType000A& in, const UnfoldingResult& r);

}  // namespace tropigon
