#ifndef PIERCING_ORACLE_HPP
#define PIERCING_ORACLE_HPP

#include <map>
#include <optional>
#include <vector>

#include "piercing/piercing_result.hpp"

namespace piercing {

struct VerificationReport {
    bool ok = false;
    std::vector<MemberIndex> unpierced;
    std::map<MemberIndex, std::vector<std::size_t>> per_member_hits;
};

/// Closed containment of every point in every member.
VerificationReport verify_piercing(const Family& f, const std::vector<Point>& points);

struct OracleResult {
    std::size_t optimum = 0;
    std::vector<Point> witness_points;
    std::vector<std::vector<MemberIndex>> witness_groups;  // a partition of the members
};

constexpr std::size_t kDefaultMemberLimit = 16;

/// Exact piercing number by brute force: an exact feasibility check for the
/// joint halfplane system of every member subset, then a minimum cover by
/// feasible subsets over bitmasks. Throws TooLarge above `member_limit`
/// members.
OracleResult optimal_piercing(const Family& f, std::size_t member_limit = kDefaultMemberLimit);

struct AuditRecord {
    std::size_t points = 0;
    BigInt bound;
    bool verified = false;
    std::optional<std::size_t> oracle_optimum;
};

/// Checks point count <= bound, soundness, and oracle optimum <= point count
/// when an oracle result is supplied. Throws AuditFailure on any miss.
AuditRecord bound_audit(const Family& f, const PiercingResult& r, const std::optional<OracleResult>& oracle = std::nullopt);

} // namespace piercing

#endif
