#include "dubins/family.hpp"

namespace dubins {

std::string_view to_string(Family f) noexcept {
    switch (f) {
    case Family::Null: return "Null";
    case Family::S: return "S";
    case Family::L: return "L";
    case Family::R: return "R";
    case Family::LS: return "LS";
    case Family::RS: return "RS";
    case Family::LR: return "LR";
    case Family::RL: return "RL";
    case Family::LminusR: return "L-R";
    case Family::LplusR: return "L+R";
    case Family::RminusL: return "R-L";
    case Family::RplusL: return "R+L";
    }
    return "?";
}

Family mirror(Family f) noexcept {
    switch (f) {
    case Family::L: return Family::R;
    case Family::R: return Family::L;
    case Family::LS: return Family::RS;
    case Family::RS: return Family::LS;
    case Family::LR: return Family::RL;
    case Family::RL: return Family::LR;
    case Family::LminusR: return Family::RminusL;
    case Family::LplusR: return Family::RplusL;
    case Family::RminusL: return Family::LminusR;
    case Family::RplusL: return Family::LplusR;
    default: return f;
    }
}

Family family_of(const DubinsPath& path) noexcept {
    const auto& segs = path.segments();
    if (segs.empty()) {
        return Family::Null;
    }
    const SegmentKind a = segs.front().kind;
    if (segs.size() == 1) {
        return a == SegmentKind::Line ? Family::S : (a == SegmentKind::LeftArc ? Family::L : Family::R);
    }
    const SegmentKind b = segs.back().kind;
    if (a == SegmentKind::LeftArc) {
        return b == SegmentKind::Line ? Family::LS : Family::LR;
    }
    if (a == SegmentKind::RightArc) {
        return b == SegmentKind::Line ? Family::RS : Family::RL;
    }
    // S followed by an arc is outside the two-segment family.
    return Family::Null;
}

int segment_count(Family f) noexcept {
    switch (f) {
    case Family::Null: return 0;
    case Family::S:
    case Family::L:
    case Family::R: return 1;
    default: return 2;
    }
}

bool in_sufficient_family(const DubinsPath& path) noexcept {
    const auto& segs = path.segments();
    if (segs.size() > 2) {
        return false;
    }
    return segs.size() < 2 || segs.front().kind != SegmentKind::Line;
}

} // namespace dubins
