#include "bfpp/json_io.hpp"

#include <fstream>
#include <sstream>

namespace bfpp {

namespace {

const Json& field(const Json& j, const char* key, const std::string& where) {
    auto it = j.find(key);
    if (it == j.end())
        throw ParseError(where + ": missing field '" + key + "'");
    return *it;
}

std::uint64_t uint_field(const Json& j, const char* key, const std::string& where) {
    const Json& v = field(j, key, where);
    if (!v.is_number_unsigned())
        throw ParseError(where + ": field '" + key + "' is not a nonnegative integer");
    return v.get<std::uint64_t>();
}

}  // namespace

Json rational_json(const Rational& x) { return x.to_string(); }

Rational rational_from_json(const Json& j, const std::string& where) {
    if (!j.is_string())
        throw ParseError(where + ": expected a rational string");
    try {
        return Rational::parse(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw ParseError(where + ": " + e.what());
    }
}

Json finset_json(const FinSet& s) {
    Json arr = Json::array();
    for (const Rational& x : s) arr.push_back(x.to_string());
    return arr;
}

FinSet finset_from_json(const Json& j, const std::string& where) {
    if (!j.is_array() || j.empty())
        throw ParseError(where + ": expected a nonempty array of rationals");
    std::vector<Rational> pts;
    pts.reserve(j.size());
    for (const Json& e : j) pts.push_back(rational_from_json(e, where));
    try {
        return FinSet::from_sorted(std::move(pts));
    } catch (const std::invalid_argument& e) {
        throw ParseError(where + ": " + e.what());
    }
}

Json map_json(const PiecewiseAffineMap& f) {
    Json bps = Json::array();
    for (const auto& b : f.breakpoints()) bps.push_back({b.t.to_string(), b.v.to_string()});
    return Json{{"breakpoints", bps}};
}

PiecewiseAffineMap map_from_json(const Json& j) {
    const Json& bps = field(j, "breakpoints", "map");
    if (!bps.is_array() || bps.empty())
        throw ParseError("map: 'breakpoints' must be a nonempty array");
    std::vector<PiecewiseAffineMap::Breakpoint> out;
    out.reserve(bps.size());
    for (const Json& e : bps) {
        if (!e.is_array() || e.size() != 2)
            throw ParseError("map: each breakpoint must be a [t, v] pair");
        out.push_back({rational_from_json(e[0], "map breakpoint t"),
                       rational_from_json(e[1], "map breakpoint v")});
    }
    try {
        return PiecewiseAffineMap(std::move(out));
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("map: ") + e.what());
    }
}

PiecewiseAffineMap load_map(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open map file '" + path + "'");
    Json j;
    try {
        in >> j;
    } catch (const Json::exception& e) {
        throw ParseError("map file '" + path + "': " + e.what());
    }
    return map_from_json(j);
}

void save_map(const PiecewiseAffineMap& f, const std::string& path) {
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot write map file '" + path + "'");
    out << map_json(f).dump(2) << '\n';
}

Json certificate_json(const FixedPointCertificate& c) {
    return Json{{"q", c.q.to_string()},
                {"n", c.n},
                {"x_n", c.x_n.to_string()},
                {"bound", c.bound.to_string()}};
}

Json stage_certificate_json(const StageCertificate& c) {
    Json j{{"stage", c.stage},
           {"case", c.kind == StageCase::Inserted ? "inserted" : "disjoint"},
           {"requirement",
            {{"p", c.req.p.to_string()}, {"q", c.req.q.to_string()}, {"r", c.req.r.to_string()}}},
           {"n", c.n},
           {"eps", c.eps_new.to_string()}};
    if (c.ins) {
        j["x0"] = c.ins->x0.to_string();
        j["a"] = c.ins->a.to_string();
        j["b"] = c.ins->b.to_string();
        j["k"] = c.ins->k;
        j["d"] = c.ins->d.to_string();
        j["ys"] = finset_json(c.ins->ys);
        j["zs"] = finset_json(c.ins->zs);
    }
    return j;
}

StageCertificate stage_certificate_from_json(const Json& j) {
    const std::string where = "certificate";
    std::string kind = field(j, "case", where).get<std::string>();
    if (kind != "inserted" && kind != "disjoint")
        throw ParseError(where + ": unknown case '" + kind + "'");
    const Json& reqj = field(j, "requirement", where);
    Requirement req(rational_from_json(field(reqj, "p", where), where + " p"),
                    rational_from_json(field(reqj, "q", where), where + " q"),
                    rational_from_json(field(reqj, "r", where), where + " r"));
    StageCertificate cert{uint_field(j, "stage", where), std::move(req),
                          kind == "inserted" ? StageCase::Inserted : StageCase::Disjoint,
                          uint_field(j, "n", where), std::nullopt,
                          rational_from_json(field(j, "eps", where), where + " eps")};
    if (cert.kind == StageCase::Inserted) {
        const Json& kj = field(j, "k", where);
        if (!kj.is_number_integer())
            throw ParseError(where + ": field 'k' is not an integer");
        std::int64_t k = kj.get<std::int64_t>();
        if (k < 1)
            throw ParseError(where + ": k < 1");
        cert.ins = StageCertificate::Inserted{
            rational_from_json(field(j, "x0", where), where + " x0"),
            rational_from_json(field(j, "a", where), where + " a"),
            rational_from_json(field(j, "b", where), where + " b"),
            k,
            rational_from_json(field(j, "d", where), where + " d"),
            finset_from_json(field(j, "ys", where), where + " ys"),
            finset_from_json(field(j, "zs", where), where + " zs")};
    }
    return cert;
}

void save_history(const History& h, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write history file '" + path + "'");
    auto write_finset = [&](const FinSet& s) {
        out << '[';
        bool first = true;
        for (const Rational& x : s) {
            if (!first) out << ',';
            first = false;
            out << '"' << x.to_string() << '"';
        }
        out << ']';
    };
    out << "[\n";
    for (std::size_t i = 0; i < h.hulls.size(); ++i) {
        out << "{\"skeleton\":";
        write_finset(h.hulls[i].skeleton);
        out << ",\"radius\":\"" << h.hulls[i].radius.to_string() << "\",\"certificate\":";
        if (i == 0) {
            out << "null";
        } else {
            const StageCertificate& c = h.stages[i - 1];
            out << "{\"stage\":" << c.stage << ",\"case\":\""
                << (c.kind == StageCase::Inserted ? "inserted" : "disjoint")
                << "\",\"requirement\":{\"p\":\"" << c.req.p.to_string() << "\",\"q\":\""
                << c.req.q.to_string() << "\",\"r\":\"" << c.req.r.to_string() << "\"},\"n\":"
                << c.n << ",\"eps\":\"" << c.eps_new.to_string() << '"';
            if (c.ins) {
                out << ",\"x0\":\"" << c.ins->x0.to_string() << "\",\"a\":\""
                    << c.ins->a.to_string() << "\",\"b\":\"" << c.ins->b.to_string()
                    << "\",\"k\":" << c.ins->k << ",\"d\":\"" << c.ins->d.to_string()
                    << "\",\"ys\":";
                write_finset(c.ins->ys);
                out << ",\"zs\":";
                write_finset(c.ins->zs);
            }
            out << '}';
        }
        out << '}';
        if (i + 1 < h.hulls.size()) out << ',';
        out << '\n';
    }
    out << "]\n";
    if (!out)
        throw std::runtime_error("write failed for history file '" + path + "'");
}

History history_from_json(const Json& j) {
    if (!j.is_array() || j.empty())
        throw ParseError("history: expected a nonempty array of stages");
    History h;
    h.hulls.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) {
        const std::string where = "history entry " + std::to_string(i);
        const Json& e = j[i];
        FinSet skel = finset_from_json(field(e, "skeleton", where), where + " skeleton");
        Rational rad = rational_from_json(field(e, "radius", where), where + " radius");
        try {
            h.hulls.emplace_back(std::move(skel), std::move(rad));
        } catch (const std::invalid_argument& ex) {
            throw ParseError(where + ": " + ex.what());
        }
        const Json& certj = field(e, "certificate", where);
        if (i == 0) {
            if (!certj.is_null())
                throw ParseError(where + ": initial hull must carry a null certificate");
        } else {
            if (certj.is_null())
                throw ParseError(where + ": missing stage certificate");
            h.stages.push_back(stage_certificate_from_json(certj));
        }
    }
    return h;
}

History load_history(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError("cannot open history file '" + path + "'");
    Json j;
    try {
        in >> j;
    } catch (const Json::exception& e) {
        throw ParseError("history file '" + path + "': " + e.what());
    }
    return history_from_json(j);
}

Json history_json(const History& h) {
    Json arr = Json::array();
    for (std::size_t i = 0; i < h.hulls.size(); ++i) {
        Json e{{"skeleton", finset_json(h.hulls[i].skeleton)},
               {"radius", h.hulls[i].radius.to_string()}};
        e["certificate"] = i == 0 ? Json() : stage_certificate_json(h.stages[i - 1]);
        arr.push_back(std::move(e));
    }
    return arr;
}

}  // namespace bfpp
