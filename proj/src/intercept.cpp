#include "dubins/intercept.hpp"

#include <algorithm>
#include <cmath>

#include "dubins/coefficients.hpp"
#include "dubins/elongation.hpp"
#include "dubins/rdp.hpp"

namespace dubins {
namespace {

constexpr double kMinTime = 1e-12;
constexpr double kResidualTol = 1e-8;
constexpr double kLengthMatchTol = 1e-6;
constexpr double kLabelTol = 1e-7;
constexpr double kTieTol = 1e-9;
constexpr double kLawTol = 1e-6;
constexpr double kStationary = 1e-9;

std::optional<Candidate> validate(const TargetMotion& m, const DubinsPath& path, double rho) {
    const double t = path.length();
    if (!(t > kMinTime)) {
        return std::nullopt;
    }
    for (const Segment& s : path.segments()) {
        if (s.magnitude < 0.0) {
            return std::nullopt;
        }
    }
    const Point target = m.position(t);
    const Point end = terminal_configuration(path).position();
    const double residual = distance(end, target);
    if (!(residual <= kResidualTol * rho)) {
        return std::nullopt;
    }
    Candidate c;
    c.t = t;
    c.path = path;
    c.family = family_of(path);
    c.terminal = target;
    c.region = classify_region(target, rho);
    c.residual = residual;
    return c;
}

// Distinguish plain LR intercepts from those whose length is an elongation bound.
Family label_cc(const Candidate& c, double rho) {
    const Family base = family_of(c.path);
    if (base != Family::LR) {
        return base;
    }
    const double tol = kLabelTol * std::max(1.0, c.t);
    if (std::abs(c.t - rdp_length(c.terminal, rho)) <= tol) {
        return base;
    }
    if (c.terminal.x < -1e-9 * rho || !near_r3_closure(c.terminal, rho)) {
        return base;
    }
    const ElongationPair e = elongation(c.terminal, rho);
    if (std::abs(c.t - e.l_minus) <= tol) {
        return Family::LminusR;
    }
    if (std::abs(c.t - e.l_plus) <= tol) {
        return Family::LplusR;
    }
    return base;
}

int family_rank(Family f) noexcept {
    switch (f) {
    case Family::RS: return 0;
    case Family::LS: return 1;
    case Family::LR:
    case Family::LminusR:
    case Family::LplusR: return 2;
    case Family::RL:
    case Family::RminusL:
    case Family::RplusL: return 3;
    default: return -1;
    }
}

Candidate mirror_candidate(Candidate c, double rho) {
    c.path = c.path.mirrored();
    c.family = mirror(c.family);
    c.terminal = mirror(c.terminal);
    c.region = classify_region(c.terminal, rho);
    c.mirrored = !c.mirrored;
    return c;
}

void require_rho(double rho) {
    if (!(rho > 0.0) || !std::isfinite(rho)) {
        throw std::invalid_argument("turning radius must be positive and finite");
    }
}

} // namespace

Family canonical_family(const Candidate& c) noexcept { return c.mirrored ? mirror(c.family) : c.family; }

std::vector<Candidate> solve_rs_family(const TargetMotion& m, double rho) {
    require_rho(rho);
    const CsCoefficients coeffs = cs_coefficients(m, rho);
    const roots::ZeroSet zs = cs_form_zeros(coeffs.form(), {0.0, kTwoPi});
    const Point p0 = m.initial_position();
    const Point v = m.velocity();
    std::vector<Candidate> out;
    for (const double alpha : zs.zeros) {
        const double s = std::sin(alpha);
        const double c = std::cos(alpha);
        const double den_x = s - v.x;
        const double den_y = c - v.y;
        const double d = std::abs(den_x) >= std::abs(den_y)
                             ? (p0.x + v.x * rho * alpha - rho + rho * c) / den_x
                             : (p0.y + v.y * rho * alpha - rho * s) / den_y;
        if (!(d >= -kResidualTol * rho) || alpha > kTwoPi) {
            continue;
        }
        const DubinsPath path(Configuration::origin(),
                              {Segment(SegmentKind::RightArc, std::max(alpha, 0.0)),
                               Segment(SegmentKind::Line, std::max(d, 0.0))},
                              rho);
        if (auto cand = validate(m, path, rho)) {
            out.push_back(std::move(*cand));
        }
    }
    return out;
}

std::vector<Candidate> solve_cc_family(const TargetMotion& m, double rho) {
    require_rho(rho);
    std::vector<Candidate> out;
    if (m.speed() <= kStationary) {
        return out;
    }
    const CcCoefficients coeffs = cc_coefficients(m, rho);
    const roots::ZeroSet zs = gcc_zeros(coeffs);
    for (const double eta : zs.zeros) {
        const double t = rho * eta;
        if (!(t > kMinTime)) {
            continue;
        }
        const Point p = m.position(t);
        // Both tangency branches; the one whose length is rho * eta is the intercept.
        for (const DubinsPath& path : left_right_paths(p, rho, 1e-9)) {
            if (std::abs(path.length() - t) > kLengthMatchTol * std::max(rho, t)) {
                continue;
            }
            if (auto cand = validate(m, path, rho)) {
                cand->family = label_cc(*cand, rho);
                out.push_back(std::move(*cand));
            }
        }
    }
    return out;
}

bool candidate_before(const Candidate& a, const Candidate& b) noexcept {
    if (std::abs(a.t - b.t) > kTieTol) {
        return a.t < b.t;
    }
    const int sa = segment_count(a.family);
    const int sb = segment_count(b.family);
    if (sa != sb) {
        return sa < sb;
    }
    const int ra = family_rank(a.family);
    const int rb = family_rank(b.family);
    if (ra != rb) {
        return ra < rb;
    }
    return !a.mirrored && b.mirrored;
}

TheoremCheck check_theorems(const Candidate& c, double rho) {
    TheoremCheck k;
    k.f_terminal = rdp_length(c.terminal, rho);
    k.lower_bound = c.t >= k.f_terminal - kLawTol;
    k.interior_r1_r2 = !near_r3_closure(c.terminal, rho);
    if (k.interior_r1_r2) {
        k.region_law = std::abs(c.t - k.f_terminal) <= kLawTol;
        return k;
    }
    double gap = std::abs(c.t - k.f_terminal);
    try {
        const ElongationPair e = elongation_any_side(c.terminal, rho);
        k.l_minus = e.l_minus;
        k.l_plus = e.l_plus;
        gap = std::min({gap, std::abs(c.t - e.l_minus), std::abs(c.t - e.l_plus)});
    } catch (const std::domain_error&) {
        // Closure points on the x axis have no tangent-circle construction.
    }
    k.region_law = gap <= kLawTol;
    return k;
}

InterceptSolution solve_mtip(const TargetMotion& m, double rho) {
    require_rho(rho);
    InterceptSolution sol;
    if (m.speed() <= kStationary) {
        const RdpSolution r = solve_rdp(m.initial_position(), rho);
        Candidate c;
        c.t = r.length;
        c.family = r.family;
        c.path = r.path;
        c.terminal = m.position(r.length);
        c.region = classify_region(c.terminal, rho);
        c.residual = distance(terminal_configuration(r.path).position(), c.terminal);
        sol.all_candidates.push_back(c);
    } else {
        const TargetMotion mirrored = m.mirrored();
        for (auto& c : solve_rs_family(m, rho)) {
            sol.all_candidates.push_back(std::move(c));
        }
        for (auto& c : solve_cc_family(m, rho)) {
            sol.all_candidates.push_back(std::move(c));
        }
        for (auto& c : solve_rs_family(mirrored, rho)) {
            sol.all_candidates.push_back(mirror_candidate(std::move(c), rho));
        }
        for (auto& c : solve_cc_family(mirrored, rho)) {
            sol.all_candidates.push_back(mirror_candidate(std::move(c), rho));
        }
    }
    if (sol.all_candidates.empty()) {
        throw SolverError("solve_mtip: no candidate intercept validated");
    }
    std::stable_sort(sol.all_candidates.begin(), sol.all_candidates.end(),
                     [](const Candidate& a, const Candidate& b) { return a.t < b.t; });
    // Ties are only resolved among candidates within kTieTol of the earliest time.
    const double earliest = sol.all_candidates.front().t;
    sol.candidate = sol.all_candidates.front();
    for (const Candidate& c : sol.all_candidates) {
        if (c.t - earliest > kTieTol) {
            break;
        }
        if (candidate_before(c, sol.candidate)) {
            sol.candidate = c;
        }
    }
    sol.t_m = sol.candidate.t;
    sol.checks = check_theorems(sol.candidate, rho);
    return sol;
}

} // namespace dubins
