#pragma once

#include "bfpp/contraction.hpp"
#include "bfpp/geometry.hpp"
#include "bfpp/witness.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace bfpp {

/// The supplied map's Lipschitz constant exceeds the certificate ratio.
struct RatioViolation : std::runtime_error {
    explicit RatioViolation(const std::string& what) : std::runtime_error(what) {}
};

/// Inclusive 1-based index range of padded intervals met by an image;
/// empty when lo > hi.
struct MeetRange {
    std::int64_t lo = 1, hi = 0;
    bool empty() const { return hi < lo; }
    std::int64_t count() const { return empty() ? 0 : hi - lo + 1; }
};

/// Which Y- and Z-intervals one source interval's image meets.
struct MeetEntry {
    enum class Source { X, Y, Z };
    Source source;
    std::int64_t index;  // 1-based within its family (X: position in skeleton)
    RInterval image;
    MeetRange met_y, met_z;
};

/// Aggregates for the image of one whole block union f(Y_1 u ... u Y_k).
struct BlockImage {
    RInterval image;            // hull of the per-interval images
    std::int64_t met_y = 0;     // Y-intervals met by the union image
    std::int64_t met_z = 0;
};

/// Exact meet accounting for one Inserted stage: which padded intervals'
/// images under f meet which Y_j / Z_j, with m_Y and m_Z the number of
/// distinct Y- and Z-intervals met overall. Meets are tested against the
/// closed padded intervals, so the count is conservative.
struct MeetCount {
    std::int64_t k = 0;
    std::int64_t m_y = 0;
    std::int64_t m_z = 0;
    std::vector<MeetEntry> table;
    BlockImage y_block, z_block;
};

/// Computes the meet table for a contraction of ratio at most cert.r over
/// the padded intervals of an Inserted stage (X_i around the incoming
/// skeleton points, Y_j and Z_j around the progressions, all of radius
/// eps'). Throws RatioViolation if lipschitz(f) > cert.r and
/// std::invalid_argument if the certificate is not Inserted.
MeetCount meet_count(const PiecewiseAffineMap& f, const FinSet& incoming_skeleton,
                     const StageCertificate& cert);

/// Outcome of the counting argument: an untouched interval on one side.
/// Every compact in the refined hull's ball meets every padded interval,
/// so its point inside the untouched interval lies in (p, q) but outside
/// f(compact).
struct NoncoverageWitness {
    enum class Side { Y, Z };
    Side side;
    std::int64_t j_star;  // 1-based untouched index on that side
    MeetCount counts;
};

/// Asserts min(m_Y, m_Z) < k (guaranteed by the certificate
/// inequalities; a failure is a hard fault) and returns the first
/// untouched interval index, preferring the Y side.
NoncoverageWitness certify_noncoverage(const PiecewiseAffineMap& f,
                                       const FinSet& incoming_skeleton,
                                       const StageCertificate& cert);

/// Decides the definition directly on a finite stand-in: true iff
/// K cap (portion) is nonempty and every one of its elements is f(x) for
/// some x in K. The portion is open.
bool brute_force_coverage(const FinSet& k, const PiecewiseAffineMap& f, const RInterval& portion);

}  // namespace bfpp
