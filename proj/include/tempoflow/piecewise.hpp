#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "tempoflow/capacity.hpp"
#include "tempoflow/error.hpp"

namespace tempoflow {

struct Piece {
    TimeStep from_time = 0;
    std::int64_t value = 0;

    friend bool operator==(const Piece&, const Piece&) = default;
};

struct CanonicalPieces {
    std::vector<Piece> pieces;
    bool repaired = false;  // adjacent equal values were merged
};

// Checks ordering and sign, then merges adjacent pieces carrying the same
// value. Throws InvalidPieces / NegativeValue on irreparable input.
inline CanonicalPieces canonicalize(std::span<const Piece> pieces)
{
    if (pieces.empty())
        throw Error(ErrorCode::InvalidPieces, "capacity function has no pieces");
    if (pieces.front().from_time != 0)
        throw Error(ErrorCode::InvalidPieces,
                    "first piece must start at time 0, got " + std::to_string(pieces.front().from_time));
    CanonicalPieces out;
    out.pieces.reserve(pieces.size());
    for (std::size_t k = 0; k < pieces.size(); ++k) {
        const Piece& p = pieces[k];
        if (p.value < 0)
            throw Error(ErrorCode::NegativeValue, "piece value must be non-negative, got " + std::to_string(p.value));
        if (k > 0 && p.from_time <= pieces[k - 1].from_time)
            throw Error(ErrorCode::InvalidPieces, "piece start times must be strictly increasing");
        if (!out.pieces.empty() && out.pieces.back().value == p.value) {
            out.repaired = true;
            continue;
        }
        out.pieces.push_back(p);
    }
    return out;
}

// Step function on t >= 0: each piece holds from its from_time until the next
// piece starts; the last piece extends forever.
class PiecewiseConstant {
public:
    PiecewiseConstant() : pieces_{Piece{0, 0}} {}

    explicit PiecewiseConstant(std::span<const Piece> pieces) : pieces_(canonicalize(pieces).pieces) {}
    PiecewiseConstant(std::initializer_list<Piece> pieces)
        : PiecewiseConstant(std::span<const Piece>(pieces.begin(), pieces.size()))
    {
    }

    static PiecewiseConstant constant(std::int64_t value) { return PiecewiseConstant({Piece{0, value}}); }

    std::span<const Piece> pieces() const { return pieces_; }
    std::size_t piece_count() const { return pieces_.size(); }

    std::int64_t value_at(TimeStep t) const
    {
        if (t < 0)
            throw Error(ErrorCode::InvalidArgument, "capacity queried at negative time " + std::to_string(t));
        return piece_containing(t)->value;
    }

    // Sum of value_at(t) for t in [lo, hi]; zero when lo > hi. Work is linear
    // in the number of pieces meeting the window, not in its length.
    std::int64_t window_sum(TimeStep lo, TimeStep hi) const
    {
        if (lo > hi)
            return 0;
        if (lo < 0)
            throw Error(ErrorCode::InvalidArgument, "window starts at negative time " + std::to_string(lo));
        std::int64_t total = 0;
        for (auto it = piece_containing(lo); it != pieces_.end() && it->from_time <= hi; ++it) {
            const TimeStep start = std::max(lo, it->from_time);
            const TimeStep end = (it + 1 == pieces_.end()) ? hi : std::min(hi, (it + 1)->from_time - 1);
            if (it->value != 0)
                total = checked_add(total, checked_mul(end - start + 1, it->value));
        }
        return total;
    }

    friend bool operator==(const PiecewiseConstant&, const PiecewiseConstant&) = default;

private:
    std::vector<Piece>::const_iterator piece_containing(TimeStep t) const
    {
        auto it = std::upper_bound(pieces_.begin(), pieces_.end(), t,
                                   [](TimeStep x, const Piece& p) { return x < p.from_time; });
        return it - 1;
    }

    std::vector<Piece> pieces_;
};

}  // namespace tempoflow
