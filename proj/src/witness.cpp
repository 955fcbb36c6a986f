#include "bfpp/witness.hpp"

#include <algorithm>
#include <limits>

namespace bfpp {

FiniteHull::FiniteHull(FinSet sk, Rational rad) : skeleton(std::move(sk)), radius(std::move(rad)) {
    if (!(Rational(0) < radius))
        throw std::invalid_argument("FiniteHull: radius must be positive");
    if (!skeleton.contains(Rational(0)) || !skeleton.contains(Rational(1)))
        throw std::invalid_argument("FiniteHull: skeleton must contain 0 and 1");
    if (skeleton.min() < Rational(0) || Rational(1) < skeleton.max())
        throw std::invalid_argument("FiniteHull: skeleton must lie in [0,1]");
}

FiniteHull initial_hull() {
    return FiniteHull(FinSet({Rational(0), Rational(1)}), Rational(1, 4));
}

Rational window_rational(std::uint64_t i) {
    // Denominator groups: for den = 1, 2, ... the numerators num with
    // -den < num < 2*den and gcd(|num|, den) = 1, in increasing order.
    for (Int den = 1;; ++den) {
        for (Int num = -den + 1; num < 2 * den; ++num) {
            if (boost::multiprecision::gcd(boost::multiprecision::abs(num), den) != 1) continue;
            if (i == 0) return Rational(num, den);
            --i;
        }
    }
}

std::pair<Rational, Rational> portion_pair(std::uint64_t t) {
    for (std::uint64_t hi = 1;; ++hi) {
        Rational b = window_rational(hi);
        for (std::uint64_t lo = 0; lo < hi; ++lo) {
            Rational a = window_rational(lo);
            Rational p = min(a, b), q = max(a, b);
            if (!(Rational(0) < q && p < Rational(1))) continue;  // vacuous for sets in [0,1]
            if (t == 0) return {std::move(p), std::move(q)};
            --t;
        }
    }
}

namespace {

// Cantor anti-diagonal: m -> (t, s) with t the index along a diagonal.
std::pair<std::uint64_t, std::uint64_t> unpair(std::uint64_t m) {
    std::uint64_t w = 0;
    while ((w + 1) * (w + 2) / 2 <= m) ++w;
    std::uint64_t t = m - w * (w + 1) / 2;
    return {t, w - t};
}

std::uint64_t pair_index(std::uint64_t t, std::uint64_t s) {
    std::uint64_t w = t + s;
    return w * (w + 1) / 2 + t;
}

}  // namespace

Requirement enumerate_requirements(std::uint64_t m) {
    auto [t, s] = unpair(m);
    auto [p, q] = portion_pair(t);
    Rational r = Rational(1) - Rational(Int(1), Int(s) + 2);
    return Requirement(std::move(p), std::move(q), std::move(r));
}

std::uint64_t requirement_index(const Rational& p, const Rational& q, std::uint64_t j) {
    if (j < 2)
        throw std::invalid_argument("requirement_index: j must be >= 2");
    for (std::uint64_t t = 0;; ++t) {
        auto [tp, tq] = portion_pair(t);
        if (tp == p && tq == q) return pair_index(t, j - 2);
    }
}

std::int64_t choose_k(std::uint64_t n, const Rational& r) {
    if (!(Rational(0) < r && r < Rational(1)))
        throw std::invalid_argument("choose_k: r outside (0,1)");
    Rational bound = Rational(Int(n) + 2) / (Rational(1) - r);
    Int k = bound.floor() + 1;
    return static_cast<std::int64_t>(k);
}

Progressions place_progressions(const Rational& a, const Rational& b, std::int64_t k) {
    if (!(a < b))
        throw std::invalid_argument("place_progressions: a >= b");
    if (k < 1)
        throw std::invalid_argument("place_progressions: k < 1");
    Rational d = (b - a) / Rational(3 * k + 2);
    std::vector<Rational> ys, zs;
    ys.reserve(static_cast<std::size_t>(k));
    zs.reserve(static_cast<std::size_t>(k));
    Rational y = a;
    for (std::int64_t j = 1; j <= k; ++j) {
        y += d;
        ys.push_back(y);
    }
    Rational z = b - Rational(k + 1) * d;
    for (std::int64_t j = 1; j <= k; ++j) {
        z += d;
        zs.push_back(z);
    }
    return Progressions{std::move(d), FinSet::from_sorted(std::move(ys)),
                        FinSet::from_sorted(std::move(zs))};
}

namespace {

// Merge the incoming skeleton with the two progressions. Keeps
// duplicates so the padded-interval disjointness check sees collisions;
// the deduplicated copy becomes the new skeleton.
std::vector<Rational> merged_centers(const FinSet& skel, const FinSet& ys, const FinSet& zs) {
    std::vector<Rational> tmp, out;
    tmp.reserve(ys.size() + zs.size());
    std::merge(ys.begin(), ys.end(), zs.begin(), zs.end(), std::back_inserter(tmp));
    out.reserve(tmp.size() + skel.size());
    std::merge(skel.begin(), skel.end(), tmp.begin(), tmp.end(), std::back_inserter(out));
    return out;
}

std::vector<Rational> dedup(std::vector<Rational> v) {
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

}  // namespace

std::pair<FiniteHull, StageCertificate> refine_stage(const FiniteHull& hull,
                                                     const Requirement& req,
                                                     std::uint64_t stage_index) {
    const FinSet& skel = hull.skeleton;
    const Rational& eps = hull.radius;
    StageCertificate cert{stage_index, req, StageCase::Disjoint, skel.size(), std::nullopt,
                          Rational(0)};

    // Branch on skeleton intersecting the closed [p, q].
    auto it = std::lower_bound(skel.begin(), skel.end(), req.p);
    const bool meets = it != skel.end() && *it <= req.q;

    std::optional<FiniteHull> next;
    if (!meets) {
        cert.kind = StageCase::Disjoint;
        cert.eps_new = min(dist_set_interval(skel, req.p, req.q), eps / Rational(2));
        next.emplace(skel, cert.eps_new);
    } else {
        cert.kind = StageCase::Inserted;
        const Rational& x0 = *it;  // least skeleton point in [p, q]
        Rational a = max(req.p, max(x0 - eps, Rational(0)));
        Rational b = min(req.q, min(x0 + eps, Rational(1)));
        if (!(a < b))
            throw ConstructionFault("refine_stage: degenerate insertion window at stage " +
                                    std::to_string(stage_index) + ": (" + a.to_string() + ", " +
                                    b.to_string() + ")");
        std::int64_t k = choose_k(skel.size(), req.r);
        Progressions prog = place_progressions(a, b, k);
        FinSet new_skel = FinSet::from_sorted(dedup(merged_centers(skel, prog.ys, prog.zs)));
        Rational eps_new = min(prog.d / Rational(4),
                               min(eps / Rational(2), eps - hausdorff(skel, new_skel)));
        cert.ins = StageCertificate::Inserted{x0, std::move(a), std::move(b), k, prog.d,
                                              std::move(prog.ys), std::move(prog.zs)};
        cert.eps_new = eps_new;
        next.emplace(std::move(new_skel), std::move(eps_new));
    }

    auto failures = check_stage_geometry(hull, *next, cert);
    if (!failures.empty())
        throw ConstructionFault("refine_stage: fresh certificate failed check '" +
                                failures.front().check + "' at stage " +
                                std::to_string(stage_index) + ": " + failures.front().detail);
    return {std::move(*next), std::move(cert)};
}

History construct(std::uint64_t stage_budget, std::uint64_t size_cap) {
    if (stage_budget < 1)
        throw std::invalid_argument("construct: stage budget must be >= 1");
    History h;
    h.hulls.push_back(initial_hull());
    for (std::uint64_t m = 0; m < stage_budget; ++m) {
        if (h.hulls.back().skeleton.size() > size_cap) break;
        auto [next, cert] = refine_stage(h.hulls.back(), enumerate_requirements(m), m);
        h.hulls.push_back(std::move(next));
        h.stages.push_back(std::move(cert));
    }
    return h;
}

std::vector<CheckFailure> check_stage_geometry(const FiniteHull& before, const FiniteHull& after,
                                               const StageCertificate& cert) {
    std::vector<CheckFailure> out;
    auto fail = [&](const std::string& check, const std::string& detail) {
        out.push_back(CheckFailure{cert.stage, check, detail});
    };
    const FinSet& skel = before.skeleton;
    const Rational& eps = before.radius;
    const Rational& eps_new = cert.eps_new;
    const Requirement& req = cert.req;

    if (cert.kind == StageCase::Inserted) {
        if (!cert.ins) {
            fail("inserted payload present", "certificate is Inserted but has no payload");
            return out;
        }
        const auto& ins = *cert.ins;
        const Rational rk2n =
            req.r * Rational(ins.k) + Rational(2) + Rational(Int(cert.n));

        // The named inequalities, in the order they are reported.
        if (!(Rational(Int(cert.n) + 2) < Rational(ins.k) * (Rational(1) - req.r)))
            fail("k > (n+2)/(1-r)", "k=" + std::to_string(ins.k) +
                                        " n=" + std::to_string(cert.n) +
                                        " r=" + req.r.to_string());
        if (!(Rational(ins.k) * ins.d <= dist_sets(ins.ys, ins.zs)))
            fail("dist(ys,zs) >= k*d", "gap=" + dist_sets(ins.ys, ins.zs).to_string() +
                                           " k*d=" + (Rational(ins.k) * ins.d).to_string());
        if (!(Rational(0) < ins.d))
            fail("d > 0", "d=" + ins.d.to_string());
        if (ins.ys.size() != static_cast<std::size_t>(ins.k) ||
            ins.zs.size() != static_cast<std::size_t>(ins.k))
            fail("|ys| = |zs| = k", "|ys|=" + std::to_string(ins.ys.size()) +
                                        " |zs|=" + std::to_string(ins.zs.size()) +
                                        " k=" + std::to_string(ins.k));
        if (!(ins.a < ins.ys.min() && ins.zs.max() < ins.b))
            fail("ys, zs inside (a,b)", "ys/zs reach the window boundary");
        for (const FinSet* prog : {&ins.ys, &ins.zs}) {
            const auto& pts = prog->points();
            for (std::size_t i = 0; i + 1 < pts.size(); ++i)
                if (pts[i + 1] - pts[i] != ins.d) {
                    fail("ys, zs arithmetic with difference d",
                         "gap " + (pts[i + 1] - pts[i]).to_string() + " at index " +
                             std::to_string(i));
                    break;
                }
        }
        if (!(eps_new <= ins.d / Rational(4)))
            fail("eps' <= d/4",
                 "eps'=" + eps_new.to_string() + " d/4=" + (ins.d / Rational(4)).to_string());
        if (!(eps_new <= eps / Rational(2)))
            fail("eps' <= eps/2",
                 "eps'=" + eps_new.to_string() + " eps/2=" + (eps / Rational(2)).to_string());
        Rational haus = hausdorff(skel, after.skeleton);
        if (!(haus + eps_new <= eps))
            fail("hausdorff + eps' <= eps",
                 "hausdorff=" + haus.to_string() + " eps'=" + eps_new.to_string() +
                     " eps=" + eps.to_string());
        {
            // Equal radii: the 2k+n padded intervals are pairwise disjoint
            // iff consecutive centers (duplicates kept) are >= 2*eps' apart.
            std::vector<Rational> centers = merged_centers(skel, ins.ys, ins.zs);
            const Rational two_eps = Rational(2) * eps_new;
            for (std::size_t i = 0; i + 1 < centers.size(); ++i) {
                if (centers[i + 1] - centers[i] < two_eps) {
                    fail("padded intervals pairwise disjoint",
                         "centers " + centers[i].to_string() + " and " +
                             centers[i + 1].to_string() + " closer than 2*eps'=" +
                             two_eps.to_string());
                    break;
                }
            }
        }
        if (!(rk2n < Rational(ins.k)))
            fail("r*k + 2 + n < k",
                 "r*k+2+n=" + rk2n.to_string() + " k=" + std::to_string(ins.k));

        // Derivation pins: every recorded field is a function of the
        // incoming hull and the requirement.
        if (cert.n != skel.size())
            fail("n = |incoming skeleton|",
                 "n=" + std::to_string(cert.n) + " |skeleton|=" + std::to_string(skel.size()));
        auto it = std::lower_bound(skel.begin(), skel.end(), req.p);
        if (it == skel.end() || req.q < *it)
            fail("branch matches skeleton vs [p,q]", "skeleton misses [p,q] but case is Inserted");
        else if (*it != ins.x0)
            fail("x0 = least skeleton point in [p,q]",
                 "x0=" + ins.x0.to_string() + " expected=" + it->to_string());
        Rational a = max(req.p, max(ins.x0 - eps, Rational(0)));
        Rational b = min(req.q, min(ins.x0 + eps, Rational(1)));
        if (a != ins.a || b != ins.b)
            fail("(a,b) = (p,q) cap (x0-eps,x0+eps) cap (0,1)",
                 "got (" + ins.a.to_string() + "," + ins.b.to_string() + ") expected (" +
                     a.to_string() + "," + b.to_string() + ")");
        if (ins.k != choose_k(cert.n, req.r))
            fail("k = choose_k(n, r)", "k=" + std::to_string(ins.k) +
                                           " expected=" + std::to_string(choose_k(cert.n, req.r)));
        if (a < b && ins.k >= 1) {
            Progressions prog = place_progressions(a, b, ins.k);
            if (prog.d != ins.d)
                fail("d = (b-a)/(3k+2)",
                     "d=" + ins.d.to_string() + " expected=" + prog.d.to_string());
            if (prog.ys != ins.ys || prog.zs != ins.zs)
                fail("ys/zs placement", "progressions differ from placement formula");
        }
        if (after.skeleton != FinSet::from_sorted(dedup(merged_centers(skel, ins.ys, ins.zs))))
            fail("new skeleton = old + ys + zs", "outgoing skeleton is not the union");
        Rational expect_eps = min(ins.d / Rational(4),
                                  min(eps / Rational(2), eps - hausdorff(skel, after.skeleton)));
        if (eps_new != expect_eps)
            fail("eps' = min(d/4, eps/2, eps - hausdorff)",
                 "eps'=" + eps_new.to_string() + " expected=" + expect_eps.to_string());
        if (after.radius != eps_new)
            fail("hull radius echoes certificate",
                 "radius=" + after.radius.to_string() + " eps'=" + eps_new.to_string());
    } else {
        Rational dist = dist_set_interval(skel, req.p, req.q);
        if (!(eps_new <= dist))
            fail("dist(skeleton,(p,q)) >= eps'",
                 "dist=" + dist.to_string() + " eps'=" + eps_new.to_string());
        if (!(eps_new <= eps / Rational(2)))
            fail("eps' <= eps/2",
                 "eps'=" + eps_new.to_string() + " eps/2=" + (eps / Rational(2)).to_string());
        if (after.skeleton != skel)
            fail("skeleton unchanged", "Disjoint stage altered the skeleton");
        if (cert.n != skel.size())
            fail("n = |incoming skeleton|",
                 "n=" + std::to_string(cert.n) + " |skeleton|=" + std::to_string(skel.size()));
        auto it = std::lower_bound(skel.begin(), skel.end(), req.p);
        if (it != skel.end() && *it <= req.q)
            fail("branch matches skeleton vs [p,q]", "skeleton meets [p,q] but case is Disjoint");
        if (eps_new != min(dist, eps / Rational(2)))
            fail("eps' = min(dist, eps/2)",
                 "eps'=" + eps_new.to_string() +
                     " expected=" + min(dist, eps / Rational(2)).to_string());
        if (after.radius != eps_new)
            fail("hull radius echoes certificate",
                 "radius=" + after.radius.to_string() + " eps'=" + eps_new.to_string());
        if (cert.ins)
            fail("no inserted payload", "Disjoint certificate carries progressions");
    }
    if (!(Rational(0) < eps_new))
        fail("eps' > 0", "eps'=" + eps_new.to_string());
    return out;
}

std::vector<RInterval> contiguous_intervals(const FiniteHull& hull) {
    const auto& p = hull.skeleton.points();
    std::vector<RInterval> out;
    out.reserve(p.size() - 1);
    for (std::size_t i = 0; i + 1 < p.size(); ++i) out.emplace_back(p[i], p[i + 1]);
    return out;
}

namespace {

void require_depth(const History& h, std::size_t depth) {
    if (h.hulls.empty())
        throw std::invalid_argument("membership: empty history");
    if (depth >= h.hulls.size())
        throw std::invalid_argument("membership: depth beyond history");
}

}  // namespace

Verdict member_fsigma(const Rational& x, const History& h, std::size_t depth) {
    require_depth(h, depth);
    if (x < Rational(0) || Rational(1) < x)
        throw std::invalid_argument("member_fsigma: x outside [0,1]");
    for (std::size_t m = 0; m <= depth; ++m) {
        Rational d = dist_point_set(x, h.hulls[m].skeleton);
        if (h.hulls[m].radius < d) {
            Verdict v;
            v.kind = Verdict::Kind::In;
            v.witness = Verdict::DistanceWitness{m, std::move(d)};
            v.note = "outside the limit set, hence inside a contiguous interval";
            return v;
        }
    }
    const FinSet& skel = h.hulls[depth].skeleton;
    if (skel.contains(x)) {
        // x is a limit-set point; it lies in the example set iff one side
        // of x is free of the limit set all the way down to x. A hull
        // certifies freeness only at distance > radius from its skeleton,
        // and x is a skeleton point, so the certified-free region on
        // either side starts at x +/- radius and never reaches x.
        const auto& pts = skel.points();
        auto it = std::lower_bound(pts.begin(), pts.end(), x);
        std::size_t idx = static_cast<std::size_t>(it - pts.begin());
        for (std::size_t m = 0; m <= depth; ++m) {
            Rational reach_right = x + h.hulls[m].radius;
            Rational reach_left = x - h.hulls[m].radius;
            bool right_free = idx + 1 < pts.size() && reach_right <= x;
            bool left_free = idx > 0 && x <= reach_left;
            if (right_free) {
                Verdict v;
                v.kind = Verdict::Kind::In;
                v.witness = Verdict::EndpointWitness{m, RInterval(x, pts[idx + 1])};
                v.note = "right gap certified free of the limit set";
                return v;
            }
            if (left_free) {
                Verdict v;
                v.kind = Verdict::Kind::In;
                v.witness = Verdict::EndpointWitness{m, RInterval(pts[idx - 1], x)};
                v.note = "left gap certified free of the limit set";
                return v;
            }
        }
        Verdict v;
        v.note = "skeleton point; endpoint status undecidable at finite depth";
        return v;
    }
    Verdict v;
    v.note = "within every stage radius of the skeleton; undecided";
    return v;
}

Verdict member_gdelta(const Rational& x, const History& h, std::size_t depth) {
    require_depth(h, depth);
    if (x < Rational(0) || Rational(1) < x)
        throw std::invalid_argument("member_gdelta: x outside [0,1]");
    // Skeleton points persist into the limit set, so x = 0 + x is in
    // (limit set + Q) for every rational x: always Out.
    Verdict v;
    v.kind = Verdict::Kind::Out;
    v.witness = Verdict::TranslateWitness{x, Rational(0)};
    v.note = "rational translate of the skeleton point 0";
    return v;
}

bool recheck_witness(const Verdict& v, const Rational& x, const History& h) {
    if (!v.witness) return false;
    if (const auto* w = std::get_if<Verdict::DistanceWitness>(&*v.witness)) {
        if (w->stage >= h.hulls.size()) return false;
        const FiniteHull& hull = h.hulls[w->stage];
        return dist_point_set(x, hull.skeleton) == w->dist && hull.radius < w->dist;
    }
    if (const auto* w = std::get_if<Verdict::TranslateWitness>(&*v.witness)) {
        return x - w->translate == w->point && h.hulls.back().skeleton.contains(w->point);
    }
    if (const auto* w = std::get_if<Verdict::EndpointWitness>(&*v.witness)) {
        if (w->stage >= h.hulls.size()) return false;
        const FiniteHull& hull = h.hulls[w->stage];
        // The gap must abut x and be certified free: every point of the
        // gap farther than radius from the skeleton.
        if (!(w->gap.lo == x || w->gap.hi == x)) return false;
        return dist_set_interval(hull.skeleton, w->gap.lo, w->gap.hi) > hull.radius;
    }
    return false;
}

Rational translate_rational(std::uint64_t t) {
    for (Int den = 1;; ++den) {
        for (Int num = -den + 1; num < den; ++num) {
            if (boost::multiprecision::gcd(boost::multiprecision::abs(num), den) != 1) continue;
            if (t == 0) return Rational(num, den);
            --t;
        }
    }
}

std::vector<CoverPiece> gdelta_cover_report(const RInterval& i, const History& h,
                                            std::size_t depth, std::uint64_t translate_budget) {
    require_depth(h, depth);
    if (i.lo < Rational(0) || Rational(1) < i.hi)
        throw std::invalid_argument("gdelta_cover_report: interval outside [0,1]");
    const FiniteHull& hull = h.hulls[depth];
    std::vector<CoverPiece> out;
    for (std::uint64_t t = 0; t < translate_budget; ++t) {
        Rational q = translate_rational(t);
        // Merged radius-neighborhoods of skeleton+q, clipped to I.
        std::optional<RInterval> open;
        auto flush = [&] {
            if (open) {
                out.push_back(CoverPiece{q, *open});
                open.reset();
            }
        };
        for (const Rational& s : hull.skeleton) {
            Rational lo = max(s + q - hull.radius, i.lo);
            Rational hi = min(s + q + hull.radius, i.hi);
            if (hi < lo) continue;
            if (open && lo <= open->hi)
                open = RInterval(open->lo, max(open->hi, hi));
            else {
                flush();
                open = RInterval(lo, hi);
            }
        }
        flush();
    }
    return out;
}

Rational total_report_length(const std::vector<CoverPiece>& report) {
    Rational total(0);
    for (const auto& piece : report) total += piece.piece.length();
    return total;
}

}  // namespace bfpp
