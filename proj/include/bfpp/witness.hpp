#pragma once

#include "bfpp/geometry.hpp"
#include "bfpp/rational.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace bfpp {

/// One requirement to defeat: no contraction of ratio at most r may map
/// the limit set onto its portion inside (p, q).
struct Requirement {
    Rational p, q, r;

    Requirement(Rational p_, Rational q_, Rational r_)
        : p(std::move(p_)), q(std::move(q_)), r(std::move(r_)) {
        if (!(p < q))
            throw std::invalid_argument("Requirement: p >= q");
        if (!(Rational(0) < r && r < Rational(1)))
            throw std::invalid_argument("Requirement: r outside (0,1)");
    }

    friend bool operator==(const Requirement&, const Requirement&) = default;
};

/// A finite skeleton with a radius: stands for the closed Hausdorff ball
/// of compact sets around the skeleton. 0 and 1 are always members and
/// the skeleton stays inside [0,1].
struct FiniteHull {
    FinSet skeleton;
    Rational radius;

    FiniteHull(FinSet sk, Rational rad);
};

/// The hull every construction starts from: ({0, 1}, 1/4).
FiniteHull initial_hull();

enum class StageCase { Disjoint, Inserted };

/// Full audit record of one refinement stage. Every recorded quantity is
/// re-checkable from the record plus the incoming hull; nothing needs the
/// construction code.
struct StageCertificate {
    struct Inserted {
        Rational x0;        // least incoming skeleton point in [p, q]
        Rational a, b;      // insertion window
        std::int64_t k = 0; // progression length
        Rational d;         // common difference
        FinSet ys, zs;      // the two arithmetic progressions
    };

    std::uint64_t stage = 0;
    Requirement req;
    StageCase kind = StageCase::Disjoint;
    std::uint64_t n = 0;  // size of the incoming skeleton
    std::optional<Inserted> ins;
    Rational eps_new;  // outgoing radius
};

struct CheckFailure {
    std::uint64_t stage;
    std::string check;
    std::string detail;
};

/// Raised when a stage cannot be built or its fresh certificate fails a
/// re-check; carries the failing check when there is one.
struct ConstructionFault : std::runtime_error {
    explicit ConstructionFault(const std::string& what) : std::runtime_error(what) {}
};

/// i-th rational in the open window (-1, 2), grouped by increasing
/// denominator, numerators increasing within a group, lowest terms only:
/// 0, 1, -1/2, 1/2, 3/2, -2/3, -1/3, 1/3, 2/3, 4/3, 5/3, -3/4, ...
Rational window_rational(std::uint64_t i);

/// t-th retained portion pair: unordered pairs {window_rational(i),
/// window_rational(i')} enumerated by (i', i) lexicographically, sorted
/// into p < q, keeping only pairs whose open interval meets (0, 1).
/// Pairs with q <= 0 or p >= 1 are vacuous for sets inside [0,1] and are
/// skipped; they would also degenerate the insertion window when the
/// interval touches the skeleton exactly at 0 or 1.
std::pair<Rational, Rational> portion_pair(std::uint64_t t);

/// The documented diagonal over portion pairs and the ratio ladder
/// r = 1 - 1/j, j >= 2: stage m unpairs (by the Cantor anti-diagonal)
/// into (t, s) and yields (portion_pair(t), r = 1 - 1/(s + 2)).
/// Total and injective in the requirement values.
Requirement enumerate_requirements(std::uint64_t m);

/// Inverse of the pairing: the stage index at which the requirement
/// (portion_pair(t) for the given pair, r = 1 - 1/j) appears.
std::uint64_t requirement_index(const Rational& p, const Rational& q, std::uint64_t j);

/// Least integer strictly greater than (n+2)/(1-r).
std::int64_t choose_k(std::uint64_t n, const Rational& r);

struct Progressions {
    Rational d;
    FinSet ys, zs;
};

/// d = (b-a)/(3k+2); ys = {a + j*d}, zs = {b - (k+1-j)*d} for j = 1..k.
/// Both lie in (a, b) and the gap between the blocks is (k+2)*d >= k*d.
Progressions place_progressions(const Rational& a, const Rational& b, std::int64_t k);

/// One refinement stage. Disjoint branch when the incoming skeleton
/// misses [p, q]: skeleton unchanged, radius min(dist, eps/2). Inserted
/// branch: two arithmetic progressions are inserted in the window
/// (a, b) = (p,q) cap (x0-eps, x0+eps) cap (0,1) and the radius shrinks
/// to min(d/4, eps/2, eps - hausdorff(old, new)). The fresh certificate
/// is re-checked before returning; a failure raises ConstructionFault.
std::pair<FiniteHull, StageCertificate> refine_stage(const FiniteHull& hull,
                                                     const Requirement& req,
                                                     std::uint64_t stage_index);

struct History {
    std::vector<FiniteHull> hulls;          // hulls[0] is the initial hull
    std::vector<StageCertificate> stages;   // stages[m] refines hulls[m] -> hulls[m+1]
};

/// Folds refine_stage over enumerate_requirements(0..), starting from the
/// initial hull, until stage_budget stages are done or the skeleton size
/// exceeds size_cap. Radii at least halve per stage, so the returned
/// history certifies a Cauchy sequence in the hyperspace.
History construct(std::uint64_t stage_budget, std::uint64_t size_cap);

/// Re-checks one stage record against the incoming hull: all certificate
/// inequalities first (in the order they are named), then the equalities
/// that pin every recorded field to its derivation. Returns every
/// failure found. Does not consult the requirement enumeration, so
/// hand-built requirements check fine.
std::vector<CheckFailure> check_stage_geometry(const FiniteHull& before,
                                               const FiniteHull& after,
                                               const StageCertificate& cert);

/// The open gaps between consecutive skeleton points: stage-level
/// candidates for the true contiguous intervals of the limit set
/// (candidates may split at later stages).
std::vector<RInterval> contiguous_intervals(const FiniteHull& hull);

/// Three-valued certified membership answer at finite depth.
struct Verdict {
    enum class Kind { In, Out, Unknown };

    /// x is farther than radius from the skeleton at `stage`, so it is
    /// certifiedly outside the limit set.
    struct DistanceWitness {
        std::uint64_t stage;
        Rational dist;
    };
    /// x - translate is the skeleton point `point`, which belongs to the
    /// limit set, so x lies in (limit set + Q).
    struct TranslateWitness {
        Rational translate;
        Rational point;
    };
    /// A one-sided neighborhood of x certified free of the limit set.
    struct EndpointWitness {
        std::uint64_t stage;
        RInterval gap;
    };

    using Witness = std::variant<DistanceWitness, TranslateWitness, EndpointWitness>;

    Kind kind = Kind::Unknown;
    std::optional<Witness> witness;
    std::string note;
};

/// Membership in the F_sigma example set (the union of the closed
/// contiguous intervals of the limit set). In with a distance witness
/// when some stage certifies x outside the limit set; In with an
/// endpoint witness when a one-sided gap at a skeleton point is
/// certified free of the limit set all the way down to x (no finite
/// stage can certify this: the certified-free region on either side of a
/// skeleton point starts at distance radius > 0 from it, so skeleton
/// points stay Unknown); Unknown otherwise. Never Out: rationals outside
/// the limit set are always in the example set.
Verdict member_fsigma(const Rational& x, const History& h, std::size_t depth);

/// Membership in the G_delta example set (complement of limit+Q inside
/// [0,1]): every rational is Out, witnessed by the translate x - 0 of the
/// skeleton point 0. Documents that the example set has no rationals.
Verdict member_gdelta(const Rational& x, const History& h, std::size_t depth);

/// Re-derives a verdict's witness by direct computation.
bool recheck_witness(const Verdict& v, const Rational& x, const History& h);

/// t-th rational translate in (-1, 1), same denominator-ordered scheme
/// as window_rational: 0, -1/2, 1/2, -2/3, -1/3, 1/3, 2/3, ...
Rational translate_rational(std::uint64_t t);

struct CoverPiece {
    Rational translate;
    RInterval piece;
};

/// Finite-stage picture of the first-category cover of I by translates of
/// the limit set: for each of the first translate_budget translates q,
/// the merged subintervals of I within radius(depth) of skeleton+q.
std::vector<CoverPiece> gdelta_cover_report(const RInterval& i, const History& h,
                                            std::size_t depth, std::uint64_t translate_budget);

/// Sum of the reported piece lengths (pieces are merged per translate,
/// so this is the sum over translates of each translate's covered
/// length). Nonincreasing in depth for a fixed translate set.
Rational total_report_length(const std::vector<CoverPiece>& report);

}  // namespace bfpp
