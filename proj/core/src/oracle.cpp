#include "piercing/oracle.hpp"

#include <cstdint>
#include <limits>

#include "piercing/errors.hpp"

namespace piercing {

VerificationReport verify_piercing(const Family& f, const std::vector<Point>& points) {
    VerificationReport report;
    for (MemberIndex m = 0; m < f.size(); ++m) {
        std::vector<std::size_t> hits;
        for (std::size_t p = 0; p < points.size(); ++p)
            if (member_contains(f.tmpl, f.members[m], points[p])) hits.push_back(p);
        if (hits.empty()) report.unpierced.push_back(m);
        report.per_member_hits.emplace(m, std::move(hits));
    }
    report.ok = report.unpierced.empty();
    return report;
}

namespace {

std::vector<Halfplane> joint_system(const Family& f, std::uint32_t mask) {
    std::vector<Halfplane> sys;
    for (MemberIndex m = 0; m < f.size(); ++m) {
        if (!(mask >> m & 1u)) continue;
        auto hs = f.members[m].halfplanes(f.tmpl);
        sys.insert(sys.end(), hs.begin(), hs.end());
    }
    return sys;
}

} // namespace

OracleResult optimal_piercing(const Family& f, std::size_t member_limit) {
    const std::size_t m = f.size();
    if (m > member_limit)
        throw TooLarge("family has " + std::to_string(m) + " members, oracle limit is " + std::to_string(member_limit));
    if (m > 24) throw TooLarge("oracle supports at most 24 members");

    OracleResult out;
    if (m == 0) return out;

    const std::uint32_t full = (1u << m) - 1;
    std::vector<char> ok(full + 1, 0);
    ok[0] = 1;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        // A superset of an infeasible subset is infeasible.
        bool sub_ok = true;
        for (std::uint32_t rest = mask; rest && sub_ok; rest &= rest - 1) {
            std::uint32_t bit = rest & (~rest + 1);
            if (mask != bit && !ok[mask ^ bit]) sub_ok = false;
        }
        ok[mask] = sub_ok && feasible(joint_system(f, mask)).has_value();
    }

    constexpr std::uint32_t kInf = std::numeric_limits<std::uint32_t>::max();
    std::vector<std::uint32_t> best(full + 1, kInf), choice(full + 1, 0);
    best[0] = 0;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        std::uint32_t low = mask & (~mask + 1);
        std::uint32_t rest = mask ^ low;
        // Enumerate groups containing the lowest member: low | (submask of rest).
        for (std::uint32_t sub = rest;; sub = (sub - 1) & rest) {
            std::uint32_t group = sub | low;
            if (ok[group] && best[mask ^ group] != kInf && best[mask ^ group] + 1 < best[mask]) {
                best[mask] = best[mask ^ group] + 1;
                choice[mask] = group;
            }
            if (sub == 0) break;
        }
    }

    out.optimum = best[full];
    for (std::uint32_t mask = full; mask; mask ^= choice[mask]) {
        std::vector<MemberIndex> group;
        for (MemberIndex i = 0; i < m; ++i)
            if (choice[mask] >> i & 1u) group.push_back(i);
        out.witness_points.push_back(canonical_witness(joint_system(f, choice[mask])));
        out.witness_groups.push_back(std::move(group));
    }
    return out;
}

AuditRecord bound_audit(const Family& f, const PiercingResult& r, const std::optional<OracleResult>& oracle) {
    AuditRecord rec;
    rec.points = r.points.size();
    rec.bound = r.bound;
    rec.verified = verify_piercing(f, r.points).ok;
    if (oracle) rec.oracle_optimum = oracle->optimum;

    if (BigInt(static_cast<unsigned long>(rec.points)) > rec.bound)
        throw AuditFailure(r.algorithm + ": " + std::to_string(rec.points) + " points exceed bound " + rec.bound.get_str());
    if (!rec.verified) throw AuditFailure(r.algorithm + ": piercing set misses a member");
    if (rec.oracle_optimum && *rec.oracle_optimum > rec.points)
        throw AuditFailure(r.algorithm + ": oracle optimum " + std::to_string(*rec.oracle_optimum) +
                           " exceeds algorithm output " + std::to_string(rec.points));
    return rec;
}

} // namespace piercing
