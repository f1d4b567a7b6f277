#include "piercing/instance_gen.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "piercing/errors.hpp"

namespace piercing {

namespace {

// std distributions are implementation-defined; these draws are portable.
class Draw {
public:
    explicit Draw(std::uint64_t seed) : rng_(seed) {}

    std::int64_t integer(std::int64_t lo, std::int64_t hi) {
        auto span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<std::int64_t>(rng_() % span);
    }

    bool chance(int one_in) { return integer(0, one_in - 1) == 0; }

    /// Rational in [lo, hi] with denominator at most max_den.
    Rational rational(const Rational& lo, const Rational& hi, int max_den) {
        if (lo == hi) return lo;
        auto den = integer(1, max_den);
        Rational scaled_lo = lo * Rational(static_cast<long>(den));
        Rational scaled_hi = hi * Rational(static_cast<long>(den));
        // Integer numerators within [lo*den, hi*den].
        BigInt first = scaled_lo.numerator();
        mpz_cdiv_q(first.get_mpz_t(), scaled_lo.numerator().get_mpz_t(), scaled_lo.denominator().get_mpz_t());
        BigInt last;
        mpz_fdiv_q(last.get_mpz_t(), scaled_hi.numerator().get_mpz_t(), scaled_hi.denominator().get_mpz_t());
        if (last < first) return lo;
        BigInt width = last - first + 1;
        BigInt pick = BigInt(static_cast<unsigned long>(rng_() >> 1)) % width;
        return Rational(first + pick, BigInt(static_cast<long>(den)));
    }

private:
    std::mt19937_64 rng_;
};

Direction random_primitive(Draw& d, int max_component) {
    for (;;) {
        auto a = d.integer(-max_component, max_component);
        auto b = d.integer(-max_component, max_component);
        if (a != 0 || b != 0) return Direction(a, b);
    }
}

bool has_direction(const std::vector<Direction>& ds, const Direction& x) {
    return std::find(ds.begin(), ds.end(), x) != ds.end();
}

std::vector<Direction> general_normals(Draw& d, const GenConfig& cfg) {
    for (;;) {
        std::vector<Direction> ds;
        while (ds.size() < cfg.n) {
            Direction x = random_primitive(d, cfg.max_component);
            if (!has_direction(ds, x)) ds.push_back(x);
        }
        std::sort(ds.begin(), ds.end(), angle_less);
        bool bounded = true;
        for (std::size_t i = 0; i < ds.size() && bounded; ++i)
            bounded = cross_sign(ds[i], ds[(i + 1) % ds.size()]) > 0;
        if (bounded) return ds;
    }
}

std::vector<Direction> theorem2_normals(Draw& d, const GenConfig& cfg) {
    std::vector<Direction> slopes;
    while (slopes.size() + 2 < cfg.n) {
        auto a = d.integer(1, cfg.max_component);
        auto b = d.integer(1, cfg.max_component);
        Direction x(-a, b);
        if (!has_direction(slopes, x)) slopes.push_back(x);
    }
    std::vector<Direction> ds{Direction(1, 0), Direction(0, -1)};
    ds.insert(ds.end(), slopes.begin(), slopes.end());
    std::sort(ds.begin(), ds.end(), angle_less);
    return ds;
}

// sqrt(a^2 + b^2) rounded up to a multiple of 2^-20.
Rational norm_upper(const Direction& n) {
    BigInt sq = BigInt(static_cast<long>(n.a())) * n.a() + BigInt(static_cast<long>(n.b())) * n.b();
    BigInt scaled = sq << 40;
    BigInt root;
    mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
    if (root * root < scaled) root += 1;
    return Rational(root, BigInt(1) << 20);
}

std::uint64_t family_stream(std::uint64_t seed) { return seed ^ 0x9e3779b97f4a7c15ull; }

RelatedPolygon random_member(Draw& d, const Template& t, const GenConfig& cfg) {
    const Rational zero(0);
    const Rational jitter = cfg.spread * Rational(1, 4);
    for (int attempt = 0; attempt < cfg.retry_limit; ++attempt) {
        Point shift{d.rational(-cfg.spread, cfg.spread, cfg.max_denominator),
                    d.rational(-cfg.spread, cfg.spread, cfg.max_denominator)};
        RelatedPolygon m;
        for (DirIndex j = 0; j < t.size(); ++j) {
            Rational c = t.reference_offsets[j] + t.normals[j].dot(shift);
            if (jitter != zero) c += d.rational(-jitter, jitter, cfg.max_denominator);
            m.add(j, c);
        }
        if (d.chance(4)) {
            const std::uint64_t all = (std::uint64_t{1} << t.size()) - 1;
            auto drop = static_cast<std::uint64_t>(d.integer(1, static_cast<std::int64_t>(all) - 1));
            for (DirIndex j = 0; j < t.size(); ++j)
                if (drop >> j & 1u) m.offsets.erase(j);
        }
        if (feasible(m.halfplanes(t))) return m;
    }
    throw GenerationExhausted("could not draw a nonempty member");
}

bool members_meet(const Template& t, const RelatedPolygon& a, const RelatedPolygon& b) {
    auto sys = a.halfplanes(t);
    auto hb = b.halfplanes(t);
    sys.insert(sys.end(), hb.begin(), hb.end());
    return feasible(sys).has_value();
}

bool repair(Family& f, int passes) {
    for (int pass = 0; pass < passes; ++pass) {
        auto bad = pairwise_check(f);
        if (bad.empty()) return true;
        auto [i, j] = bad.front();
        Point wi = canonical_witness(f.members[i].halfplanes(f.tmpl));
        Point wj = canonical_witness(f.members[j].halfplanes(f.tmpl));
        Point step{wi.x - wj.x, wi.y - wj.y};
        // Full step moves wj onto wi, which always closes the gap.
        for (int k = 1; k <= 8; ++k) {
            Rational frac(k, 8);
            RelatedPolygon moved = f.members[j].translated(f.tmpl, {step.x * frac, step.y * frac});
            if (members_meet(f.tmpl, f.members[i], moved)) {
                f.members[j] = std::move(moved);
                break;
            }
        }
    }
    return pairwise_check(f).empty();
}

} // namespace

void validate_config(const GenConfig& cfg) {
    if (cfg.n < 3) throw InvalidInput("n must be at least 3");
    if (cfg.n > 32) throw InvalidInput("n must be at most 32");
    if (cfg.members < 1) throw InvalidInput("members must be at least 1");
    if (cfg.spread.sign() < 0) throw InvalidInput("spread must be nonnegative");
    if (cfg.max_component < 1) throw InvalidInput("max_component must be positive");
    if (cfg.max_denominator < 1) throw InvalidInput("max_denominator must be positive");
    if (cfg.retry_limit < 1) throw InvalidInput("retry_limit must be positive");
    if (cfg.class_mode == ClassMode::theorem2) {
        // Distinct positive slopes a/b with a, b <= max_component.
        std::size_t available = 0;
        for (int a = 1; a <= cfg.max_component; ++a)
            for (int b = 1; b <= cfg.max_component; ++b)
                if (std::gcd(a, b) == 1) ++available;
        if (cfg.n - 2 > available) throw InvalidInput("not enough distinct slopes for n");
    }
}

ClassMode parse_class_mode(const std::string& s) {
    if (s == "general") return ClassMode::general;
    if (s == "theorem2") return ClassMode::theorem2;
    throw InvalidInput("unknown class mode '" + s + "'");
}

std::string to_string(ClassMode m) { return m == ClassMode::general ? "general" : "theorem2"; }

Template random_template(const GenConfig& cfg) {
    validate_config(cfg);
    Draw d(cfg.seed);
    for (;;) {
        Template t;
        t.normals = cfg.class_mode == ClassMode::general ? general_normals(d, cfg) : theorem2_normals(d, cfg);
        std::vector<Rational> norms;
        for (const auto& n : t.normals) norms.push_back(norm_upper(n));
        // Lines at distance in [1, 1 + spread] from the origin. At spread 0
        // every line is (almost) tangent to the unit circle, so each keeps
        // an edge; the spread halves on every failed attempt.
        for (int attempt = 0; attempt < cfg.retry_limit; ++attempt) {
            const Rational spread = attempt < 24 ? Rational(BigInt(1), BigInt(1) << attempt) : Rational(0);
            t.reference_offsets.clear();
            for (std::size_t j = 0; j < t.size(); ++j)
                t.reference_offsets.push_back(norms[j] *
                                              d.rational(Rational(1), Rational(1) + spread, cfg.max_denominator));
            if (validate_template(t).empty()) return t;
        }
    }
}

Family random_family(const Template& t, const GenConfig& cfg) {
    validate_config(cfg);
    Draw d(family_stream(cfg.seed));
    for (int attempt = 0; attempt < cfg.retry_limit; ++attempt) {
        Family f{t, {}};
        if (cfg.repair == RepairMode::reject) {
            // Each new member is redrawn until it meets every accepted one.
            bool stuck = false;
            while (f.size() < cfg.members && !stuck) {
                stuck = true;
                for (int draw = 0; draw < cfg.retry_limit; ++draw) {
                    RelatedPolygon m = random_member(d, t, cfg);
                    bool meets = std::all_of(f.members.begin(), f.members.end(),
                                             [&](const RelatedPolygon& o) { return members_meet(t, o, m); });
                    if (meets) {
                        f.members.push_back(std::move(m));
                        stuck = false;
                        break;
                    }
                }
            }
            if (!stuck) return f;
        } else {
            for (std::size_t k = 0; k < cfg.members; ++k) f.members.push_back(random_member(d, t, cfg));
            if (repair(f, cfg.retry_limit)) return f;
        }
    }
    throw GenerationExhausted("no pairwise-intersecting family after " + std::to_string(cfg.retry_limit) + " attempts");
}

} // namespace piercing
