#include "bfpp/verify.hpp"

#include <fstream>
#include <optional>

namespace bfpp {

namespace {

struct RawHull {
    std::vector<Rational> skeleton;
    Rational radius;
};

struct RawCert {
    std::uint64_t stage = 0;
    bool inserted = false;
    Rational p, q, r;
    std::uint64_t n = 0;
    Rational eps;
    // Inserted payload.
    Rational x0, a, b, d;
    std::int64_t k = 0;
    std::vector<Rational> ys, zs;
};

const Json& field(const Json& j, const char* key, const std::string& where) {
    auto it = j.find(key);
    if (it == j.end())
        throw ParseError(where + ": missing field '" + key + "'");
    return *it;
}

std::vector<Rational> rational_array(const Json& j, const std::string& where) {
    if (!j.is_array() || j.empty())
        throw ParseError(where + ": expected a nonempty array of rationals");
    std::vector<Rational> out;
    out.reserve(j.size());
    for (const Json& e : j) out.push_back(rational_from_json(e, where));
    return out;
}

RawHull parse_hull(const Json& e, const std::string& where) {
    RawHull h;
    h.skeleton = rational_array(field(e, "skeleton", where), where + " skeleton");
    h.radius = rational_from_json(field(e, "radius", where), where + " radius");
    return h;
}

RawCert parse_cert(const Json& j, const std::string& where) {
    RawCert c;
    const Json& stage = field(j, "stage", where);
    if (!stage.is_number_unsigned())
        throw ParseError(where + ": 'stage' is not a nonnegative integer");
    c.stage = stage.get<std::uint64_t>();
    std::string kind = field(j, "case", where).get<std::string>();
    if (kind != "inserted" && kind != "disjoint")
        throw ParseError(where + ": unknown case '" + kind + "'");
    c.inserted = kind == "inserted";
    const Json& req = field(j, "requirement", where);
    c.p = rational_from_json(field(req, "p", where), where + " p");
    c.q = rational_from_json(field(req, "q", where), where + " q");
    c.r = rational_from_json(field(req, "r", where), where + " r");
    const Json& n = field(j, "n", where);
    if (!n.is_number_unsigned())
        throw ParseError(where + ": 'n' is not a nonnegative integer");
    c.n = n.get<std::uint64_t>();
    c.eps = rational_from_json(field(j, "eps", where), where + " eps");
    if (c.inserted) {
        c.x0 = rational_from_json(field(j, "x0", where), where + " x0");
        c.a = rational_from_json(field(j, "a", where), where + " a");
        c.b = rational_from_json(field(j, "b", where), where + " b");
        c.d = rational_from_json(field(j, "d", where), where + " d");
        const Json& k = field(j, "k", where);
        if (!k.is_number_integer())
            throw ParseError(where + ": 'k' is not an integer");
        c.k = k.get<std::int64_t>();
        c.ys = rational_array(field(j, "ys", where), where + " ys");
        c.zs = rational_array(field(j, "zs", where), where + " zs");
    }
    return c;
}

bool strictly_increasing(const std::vector<Rational>& v) {
    for (std::size_t i = 0; i + 1 < v.size(); ++i)
        if (!(v[i] < v[i + 1])) return false;
    return true;
}

}  // namespace

std::vector<CheckFailure> verify_history_json(const Json& j) {
    if (!j.is_array() || j.empty())
        throw ParseError("history: expected a nonempty array of stages");
    std::vector<CheckFailure> failures;
    auto fail = [&](std::uint64_t stage, const std::string& check, const std::string& detail) {
        failures.push_back(CheckFailure{stage, check, detail});
    };

    std::optional<FiniteHull> prev;  // typed hull of the previous entry, when valid
    for (std::size_t i = 0; i < j.size(); ++i) {
        const std::string where = "history entry " + std::to_string(i);
        const std::uint64_t stage = i == 0 ? 0 : static_cast<std::uint64_t>(i - 1);
        const Json& entry = j[i];
        RawHull raw = parse_hull(entry, where);

        bool hull_ok = true;
        if (!strictly_increasing(raw.skeleton)) {
            fail(stage, "skeleton strictly increasing", where);
            hull_ok = false;
        }
        if (!(Rational(0) < raw.radius)) {
            fail(stage, "radius > 0", where + ": radius=" + raw.radius.to_string());
            hull_ok = false;
        }
        if (hull_ok) {
            bool has0 = std::binary_search(raw.skeleton.begin(), raw.skeleton.end(), Rational(0));
            bool has1 = std::binary_search(raw.skeleton.begin(), raw.skeleton.end(), Rational(1));
            if (!has0 || !has1 || raw.skeleton.front() < Rational(0) ||
                Rational(1) < raw.skeleton.back()) {
                fail(stage, "skeleton contains 0 and 1 and lies in [0,1]", where);
                hull_ok = false;
            }
        }

        std::optional<FiniteHull> cur;
        if (hull_ok)
            cur.emplace(FinSet::from_sorted(raw.skeleton), raw.radius);

        const Json& certj = field(entry, "certificate", where);
        if (i == 0) {
            if (!certj.is_null())
                throw ParseError(where + ": initial hull must carry a null certificate");
            if (cur && !(cur->skeleton == FinSet({Rational(0), Rational(1)}) &&
                         cur->radius == Rational(1, 4)))
                fail(0, "initial hull is ({0,1}, 1/4)", where);
        } else {
            if (certj.is_null())
                throw ParseError(where + ": missing stage certificate");
            RawCert rc = parse_cert(certj, where);
            if (rc.stage != stage)
                fail(stage, "stage index matches position",
                     "recorded " + std::to_string(rc.stage) + " at position " +
                         std::to_string(stage));

            bool cert_ok = true;
            if (!(rc.p < rc.q) || !(Rational(0) < rc.r && rc.r < Rational(1))) {
                fail(stage, "requirement well-formed (p < q, 0 < r < 1)", where);
                cert_ok = false;
            }
            if (rc.inserted && (!strictly_increasing(rc.ys) || !strictly_increasing(rc.zs))) {
                fail(stage, "progressions strictly increasing", where);
                cert_ok = false;
            }
            if (rc.inserted && rc.k < 1) {
                fail(stage, "k > (n+2)/(1-r)", "k=" + std::to_string(rc.k));
                cert_ok = false;
            }

            if (cert_ok && prev && cur) {
                StageCertificate cert{
                    rc.stage, Requirement(rc.p, rc.q, rc.r),
                    rc.inserted ? StageCase::Inserted : StageCase::Disjoint, rc.n, std::nullopt,
                    rc.eps};
                if (rc.inserted)
                    cert.ins = StageCertificate::Inserted{
                        rc.x0, rc.a, rc.b, rc.k, rc.d, FinSet::from_sorted(std::move(rc.ys)),
                        FinSet::from_sorted(std::move(rc.zs))};
                for (CheckFailure& f : check_stage_geometry(*prev, *cur, cert))
                    failures.push_back(std::move(f));
                Requirement expect = enumerate_requirements(stage);
                if (!(cert.req == expect))
                    fail(stage, "requirement matches enumeration",
                         "got (" + cert.req.p.to_string() + ", " + cert.req.q.to_string() + ", " +
                             cert.req.r.to_string() + ") expected (" + expect.p.to_string() +
                             ", " + expect.q.to_string() + ", " + expect.r.to_string() + ")");
            } else if (!prev || !cur) {
                fail(stage, "stage checks skipped", "adjacent hull failed validation");
            }
        }
        prev = std::move(cur);
    }
    return failures;
}

std::vector<CheckFailure> verify_history_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError("cannot open history file '" + path + "'");
    Json j;
    try {
        in >> j;
    } catch (const Json::exception& e) {
        throw ParseError("history file '" + path + "': " + e.what());
    }
    return verify_history_json(j);
}

}  // namespace bfpp
