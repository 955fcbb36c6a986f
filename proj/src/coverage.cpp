#include "bfpp/coverage.hpp"

#include <algorithm>

namespace bfpp {

namespace {

// 1-based indices j with [c_j - eps, c_j + eps] meeting [lo, hi], where
// c_j = first + (j-1)*d runs over an arithmetic progression of length k.
MeetRange grid_meets(const RInterval& img, const Rational& first, const Rational& d,
                     std::int64_t k, const Rational& eps) {
    // Cheap reject: image entirely below or above the padded block.
    if (img.hi < first - eps) return {};
    if (first + Rational(k - 1) * d + eps < img.lo) return {};
    Rational lo_off = (img.lo - eps - first) / d;  // meets iff c_j >= img.lo - eps
    Rational hi_off = (img.hi + eps - first) / d;  // and c_j <= img.hi + eps
    std::int64_t j_lo = static_cast<std::int64_t>(lo_off.ceil()) + 1;
    std::int64_t j_hi = static_cast<std::int64_t>(hi_off.floor()) + 1;
    j_lo = std::max<std::int64_t>(j_lo, 1);
    j_hi = std::min(j_hi, k);
    if (j_hi < j_lo) return {};
    return {j_lo, j_hi};
}

}  // namespace

MeetCount meet_count(const PiecewiseAffineMap& f, const FinSet& incoming_skeleton,
                     const StageCertificate& cert) {
    if (cert.kind != StageCase::Inserted || !cert.ins)
        throw std::invalid_argument("meet_count: certificate is not an Inserted stage");
    if (cert.req.r < f.lipschitz())
        throw RatioViolation("meet_count: lipschitz(f) = " + f.lipschitz().to_string() +
                             " exceeds certificate ratio r = " + cert.req.r.to_string());
    const auto& ins = *cert.ins;
    const Rational& eps = cert.eps_new;
    const Rational& y1 = ins.ys.min();
    const Rational& z1 = ins.zs.min();

    MeetCount mc;
    mc.k = ins.k;
    mc.table.reserve(incoming_skeleton.size() + 2 * static_cast<std::size_t>(ins.k));
    std::vector<bool> y_hit(static_cast<std::size_t>(ins.k), false);
    std::vector<bool> z_hit(static_cast<std::size_t>(ins.k), false);

    auto mark = [&](std::vector<bool>& hit, const MeetRange& r) {
        for (std::int64_t j = r.lo; j <= r.hi; ++j) hit[static_cast<std::size_t>(j - 1)] = true;
    };
    auto process = [&](MeetEntry::Source src, std::int64_t index, const Rational& center) {
        RInterval img = f.image_interval(RInterval(center - eps, center + eps));
        MeetRange my = grid_meets(img, y1, ins.d, ins.k, eps);
        MeetRange mz = grid_meets(img, z1, ins.d, ins.k, eps);
        mark(y_hit, my);
        mark(z_hit, mz);
        mc.table.push_back(MeetEntry{src, index, img, my, mz});
        return img;
    };

    std::int64_t i = 1;
    for (const Rational& x : incoming_skeleton) process(MeetEntry::Source::X, i++, x);

    auto run_block = [&](MeetEntry::Source src, const FinSet& centers) {
        std::optional<RInterval> hull;
        std::int64_t j = 1;
        for (const Rational& c : centers) {
            RInterval img = process(src, j++, c);
            if (!hull)
                hull = img;
            else
                hull = RInterval(min(hull->lo, img.lo), max(hull->hi, img.hi));
        }
        BlockImage blk;
        blk.image = *hull;
        blk.met_y = grid_meets(blk.image, y1, ins.d, ins.k, eps).count();
        blk.met_z = grid_meets(blk.image, z1, ins.d, ins.k, eps).count();
        return blk;
    };
    mc.y_block = run_block(MeetEntry::Source::Y, ins.ys);
    mc.z_block = run_block(MeetEntry::Source::Z, ins.zs);

    mc.m_y = std::count(y_hit.begin(), y_hit.end(), true);
    mc.m_z = std::count(z_hit.begin(), z_hit.end(), true);
    return mc;
}

NoncoverageWitness certify_noncoverage(const PiecewiseAffineMap& f,
                                       const FinSet& incoming_skeleton,
                                       const StageCertificate& cert) {
    MeetCount mc = meet_count(f, incoming_skeleton, cert);
    if (mc.m_y >= mc.k && mc.m_z >= mc.k)
        throw std::logic_error("certify_noncoverage: both sides fully met (m_Y = " +
                               std::to_string(mc.m_y) + ", m_Z = " + std::to_string(mc.m_z) +
                               ", k = " + std::to_string(mc.k) +
                               "); the construction is falsified");

    // Recover the first untouched index on the winning side.
    std::vector<bool> hit(static_cast<std::size_t>(mc.k), false);
    const bool y_side = mc.m_y < mc.k;
    for (const MeetEntry& e : mc.table) {
        const MeetRange& r = y_side ? e.met_y : e.met_z;
        for (std::int64_t j = r.lo; j <= r.hi; ++j) hit[static_cast<std::size_t>(j - 1)] = true;
    }
    std::int64_t j_star = 0;
    for (std::int64_t j = 1; j <= mc.k; ++j)
        if (!hit[static_cast<std::size_t>(j - 1)]) {
            j_star = j;
            break;
        }
    return NoncoverageWitness{y_side ? NoncoverageWitness::Side::Y : NoncoverageWitness::Side::Z,
                              j_star, std::move(mc)};
}

bool brute_force_coverage(const FinSet& k, const PiecewiseAffineMap& f,
                          const RInterval& portion) {
    std::vector<Rational> inside;
    for (const Rational& x : k)
        if (portion.contains_open(x)) inside.push_back(x);
    if (inside.empty()) return false;
    std::vector<Rational> image;
    image.reserve(k.size());
    for (const Rational& x : k) image.push_back(f.eval(x));
    std::sort(image.begin(), image.end());
    for (const Rational& w : inside)
        if (!std::binary_search(image.begin(), image.end(), w)) return false;
    return true;
}

}  // namespace bfpp
